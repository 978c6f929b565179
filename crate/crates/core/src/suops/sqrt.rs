//! Square roots of positive elements.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::chebyshev::SqrtApproximant;
use super::inverse::neumann_product;
use super::MAX_DEPTH;
use crate::error::{Error, Result};
use crate::ordered::{
    commutator, is_uniformly_bounded, re_part, require_hermitian, scale, seminorm, ExtendedNorm,
    OrderedStarAlgebra,
};
use crate::scalar::Scalar;

/// Knobs for the polynomial approximation stage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqrtConfig {
    /// Largest approximant index `n` (powers of two from 1).
    pub max_stage: u32,
    /// Degree cap for a single approximant.
    pub max_degree: usize,
    /// Skip the approximant stage entirely.
    pub skip_approximants: bool,
    /// Run the limit iteration on `a + η𝟙` straight away.
    pub shift_first: bool,
}

impl Default for SqrtConfig {
    fn default() -> Self {
        SqrtConfig {
            max_stage: 64,
            max_degree: 4096,
            skip_approximants: false,
            shift_first: false,
        }
    }
}

impl SqrtConfig {
    /// Configuration for nested calls that only need the limit.
    pub fn limit_only() -> Self {
        SqrtConfig {
            skip_approximants: true,
            ..Self::default()
        }
    }
}

/// One emitted approximant `bₙ = pₙ(a)` with its order checks.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproximantStage<E> {
    pub n: u32,
    pub degree: usize,
    pub shift: f64,
    pub value: E,
    /// `qₙ(a) = bₙ² − a`.
    pub q: E,
    /// Oracle verdict on `0 ≤ qₙ(a)`.
    pub lower_ok: bool,
    /// Oracle verdict on `qₙ(a) ≤ 𝟙/n`.
    pub upper_ok: bool,
    /// `‖qₙ(a)‖∞`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SqrtReport<E> {
    pub result: E,
    pub iterations: usize,
    /// `‖result² − a‖∞`.
    pub residual: f64,
    /// `‖result·a − a·result‖∞`.
    pub commutant_defect: f64,
    pub stages: Vec<ApproximantStage<E>>,
    /// Spectral shift added before the limit iteration (zero unless needed).
    pub shift: f64,
    /// Final index `n` of a doubling limit, when one was used.
    pub limit_index: Option<u64>,
}

fn check_input<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<()> {
    require_hermitian(alg, a)?;
    let s = alg.structure();
    if !s.radical {
        return Err(Error::NotApplicable("square roots need a radical algebra"));
    }
    if !s.uniformly_complete {
        return Err(Error::NotApplicable("square roots need a uniformly complete algebra"));
    }
    if !alg.is_positive(a) {
        return Err(Error::NotPositive);
    }
    Ok(())
}

/// `√a` for bounded positive `a` with default settings.
pub fn sqrt_bounded<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<SqrtReport<A::Element>> {
    sqrt_bounded_with(alg, a, &SqrtConfig::default())
}

/// `√a` for bounded positive `a`.
///
/// Emits the shifted Chebyshev approximants `pₙ(a)` for `n = 1, 2, 4, …` and
/// then assembles the limit with the coupled Newton–Schulz iteration, whose
/// iterates are again real polynomials in `a`.
pub fn sqrt_bounded_with<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    cfg: &SqrtConfig,
) -> Result<SqrtReport<A::Element>> {
    check_input(alg, a)?;
    let norm = match seminorm(alg, a) {
        ExtendedNorm::Finite(v) => v,
        ExtendedNorm::Infinite => return Err(Error::NotBounded),
    };
    let tol = *alg.tolerance();
    let s = norm.max(1.0);
    let u = norm + 1.0;
    let target = tol.tol_eq * s;
    let mut stages = Vec::new();
    let mut iterations = 0;

    if !cfg.skip_approximants {
        let mut n = 1u32;
        while n <= cfg.max_stage {
            let Some(p) = SqrtApproximant::build(n, u, cfg.max_degree) else {
                break;
            };
            let b = re_part(alg, &p.apply(alg, a));
            let q = alg.sub(&alg.mul(&b, &b), a);
            let bound = alg.scalar(Scalar::new(1.0 / n as f64, 0.0));
            let residual = seminorm(alg, &q).as_f64();
            stages.push(ApproximantStage {
                n,
                degree: p.degree(),
                shift: p.shift,
                lower_ok: alg.is_positive(&q),
                upper_ok: alg.is_positive(&alg.sub(&bound, &q)),
                value: b,
                q,
                residual,
            });
            iterations += 1;
            if residual <= target {
                let result = stages.last().map(|st| st.value.clone()).unwrap_or_else(|| alg.zero());
                return finish(alg, a, result, iterations, stages, 0.0, None);
            }
            n = n.saturating_mul(2);
        }
    }

    let mut shift = 0.0;
    let mut result = alg.zero();
    let mut residual = f64::INFINITY;
    if !cfg.shift_first {
        let (y, k) = newton_schulz(alg, a, u, 0.0);
        let (y, j) = refine(alg, a, re_part(alg, &y), u, target);
        result = y;
        iterations += k + j;
        residual = seminorm(alg, &alg.sub(&alg.mul(&result, &result), a)).as_f64();
    }
    if !(residual <= target) || !alg.is_positive(&result) {
        // Tiny negative eigenvalues admitted by the oracle slack diverge; shift them out.
        let top = 2.0 * tol.tol_pos * (1.0 + norm);
        for eta in [1e-3 * top, 1e-2 * top, 1e-1 * top, top] {
            let (y, k) = newton_schulz(alg, a, u + eta, eta);
            let (y, j) = refine(alg, a, re_part(alg, &y), u, target);
            result = y;
            iterations += k + j;
            shift = eta;
            let r = seminorm(alg, &alg.sub(&alg.mul(&result, &result), a)).as_f64();
            if r <= target && alg.is_positive(&result) {
                break;
            }
        }
    }
    finish(alg, a, result, iterations, stages, shift, None)
}

fn finish<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    result: A::Element,
    iterations: usize,
    stages: Vec<ApproximantStage<A::Element>>,
    shift: f64,
    limit_index: Option<u64>,
) -> Result<SqrtReport<A::Element>> {
    let tol = alg.tolerance();
    let s = scale(alg, a);
    let residual = seminorm(alg, &alg.sub(&alg.mul(&result, &result), a)).as_f64();
    let commutant_defect = seminorm(alg, &commutator(alg, &result, a)).as_f64();
    if !(residual <= tol.tol_eq * s) {
        return Err(Error::NoConvergence {
            op: "sqrt",
            iterations,
        });
    }
    if !alg.is_positive(&result) {
        return Err(Error::DefectExceeded {
            check: "positivity of the square root",
            defect: residual,
        });
    }
    Ok(SqrtReport {
        result,
        iterations,
        residual,
        commutant_defect,
        stages,
        shift,
        limit_index,
    })
}

/// Coupled Newton–Schulz iteration for `√(a + η𝟙)` with `‖a + η𝟙‖∞ < c`.
///
/// `Y₀ = (a+η𝟙)/c`, `Z₀ = 𝟙`, `T = (3𝟙 − ZY)/2`, `Y ← YT`, `Z ← TZ`; then
/// `Y → √((a+η𝟙)/c)`. Components below zero make `‖𝟙 − ZY‖∞` exceed one, in
/// which case the last checkpoint is returned.
/// Inverse-free steps `x ← x + (a − x²)/(2√c)`, a contraction for `0 ≤ x ≤ √c`.
/// Clears the round-off floor Newton–Schulz leaves next to a kernel.
fn refine<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, mut x: A::Element, c: f64, target: f64) -> (A::Element, usize) {
    let step = 0.5 / c.sqrt();
    let goal = 1e-3 * target;
    let mut best = alg.coefficient_norm(&alg.sub(a, &alg.mul(&x, &x)));
    let mut stalled = 0;
    for k in 1..=256 {
        if best <= goal {
            return (x, k - 1);
        }
        let r = alg.sub(a, &alg.mul(&x, &x));
        let next = re_part(alg, &alg.add(&x, &alg.scale_real(step, &r)));
        let rn = alg.coefficient_norm(&alg.sub(a, &alg.mul(&next, &next)));
        x = next;
        if rn < 0.99 * best {
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= 8 {
                return (x, k);
            }
        }
        best = best.min(rn);
    }
    (x, 256)
}

fn newton_schulz<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, c: f64, eta: f64) -> (A::Element, usize) {
    let tol = alg.tolerance();
    let root_c = c.sqrt();
    let mut y = alg.scale_real(1.0 / c, &alg.add_scalar(a, Scalar::new(eta, 0.0)));
    let mut z = alg.unit();
    let floor = (eta / c).max((1e-2 * tol.tol_eq) * (1e-2 * tol.tol_eq));
    let k_min = ((1.0 / floor).ln() / 2.25f64.ln()).ceil() as usize + 6;
    let k_cap = k_min + 40;
    let mut checkpoint = y.clone();
    let three = Scalar::new(3.0, 0.0);
    for k in 1..=k_cap {
        let p = alg.mul(&z, &y);
        if k >= 12 && k % 4 == 0 {
            let gap = seminorm(alg, &alg.sub(&alg.unit(), &p)).as_f64();
            if !(gap <= 1.25) {
                return (alg.scale_real(root_c, &checkpoint), k);
            }
            checkpoint = y.clone();
        }
        let t = alg.scale_real(0.5, &alg.add_scalar(&alg.scale_real(-1.0, &p), three));
        let y_next = re_part(alg, &alg.mul(&y, &t));
        z = re_part(alg, &alg.mul(&t, &z));
        let inc = alg.coefficient_norm(&alg.sub(&y_next, &y));
        y = y_next;
        if k >= k_min && inc <= 1e-2 * tol.tol_eq * alg.coefficient_norm(&y).max(1.0) {
            return (alg.scale_real(root_c, &y), k);
        }
    }
    (alg.scale_real(root_c, &y), k_cap)
}

/// Threshold for `‖bₙ − b₂ₙ‖∞` in [`sqrt_general`].
///
/// On a kernel the iterates differ by about `0.3/√n`, so `tol_eq` itself is
/// out of reach in double precision.
pub fn general_cauchy_tolerance(tol_eq: f64) -> f64 {
    tol_eq.max(1e-2 * tol_eq.sqrt())
}

/// `√a` for positive `a` whose shifts `a + 𝟙/n` are invertible:
/// `bₙ = (a+𝟙/n)·√((a+𝟙/n)⁻¹)` for `n = 1, 2, 4, …`.
pub fn sqrt_general<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<SqrtReport<A::Element>> {
    sqrt_general_at(alg, a, 0)
}

pub(crate) fn sqrt_general_at<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    depth: u32,
) -> Result<SqrtReport<A::Element>> {
    if depth > MAX_DEPTH {
        return Err(Error::NotApplicable("nested construction depth exceeded"));
    }
    check_input(alg, a)?;
    let tol = *alg.tolerance();
    let s = scale(alg, a);
    let floor = 64.0 * f64::EPSILON * s;
    let cauchy = general_cauchy_tolerance(tol.tol_eq);
    let bounded = is_uniformly_bounded(alg, a);
    let mut prev: Option<A::Element> = None;
    let mut n: u64 = 1;
    let mut iterations = 0;
    for _ in 0..tol.max_iter {
        let inv_n = 1.0 / n as f64;
        let e = alg.add_scalar(a, Scalar::new(inv_n, 0.0));
        if inv_n <= floor {
            break;
        }
        let inv = if bounded {
            let norm = seminorm(alg, &e).as_f64();
            neumann_product(alg, &e, norm, inv_n)?.0
        } else {
            super::inverse::inverse_coercive_at(alg, &e, depth + 1)?.result
        };
        let root = sqrt_bounded_with(alg, &inv, &SqrtConfig::limit_only())?;
        let b = re_part(alg, &alg.mul(&e, &root.result));
        iterations += 1;
        if let Some(p) = &prev {
            let diff = seminorm(alg, &alg.sub(&b, p)).as_f64();
            let residual = seminorm(alg, &alg.sub(&alg.mul(&b, &b), a)).as_f64();
            if diff <= cauchy && residual <= tol.tol_eq * s {
                return finish(alg, a, b, iterations, Vec::new(), 0.0, Some(n));
            }
        }
        prev = Some(b);
        n = n.saturating_mul(2);
    }
    Err(Error::NoConvergence {
        op: "sqrt_general",
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{make_function_algebra, make_matrix_algebra, MatrixAlgebra, UpperTriangular};
    use crate::ordered::StarAlgebra;
    use crate::linalg::Matrix;
    use crate::random::SeededRng;
    use crate::scalar::real;
    use crate::tolerance::TolerancePolicy;

    fn eig_sqrt(a: &Matrix) -> Matrix {
        a.eigh().apply(|x| x.max(0.0).sqrt())
    }

    #[test]
    fn unit_and_diagonal() {
        let alg = make_matrix_algebra(2).unwrap();
        let r = sqrt_bounded(&alg, &alg.unit()).unwrap();
        assert!(r.result.sub(&alg.unit()).max_abs() < 1e-12);
        let d = Matrix::from_real_diagonal(&[4.0, 9.0]);
        let r = sqrt_bounded(&alg, &d).unwrap();
        assert!(r.result.sub(&Matrix::from_real_diagonal(&[2.0, 3.0])).max_abs() < 1e-10);
    }

    #[test]
    fn two_by_two_against_eigensolver() {
        let alg = make_matrix_algebra(2).unwrap();
        let a = Matrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let r = sqrt_bounded(&alg, &a).unwrap();
        assert!(r.result.sub(&eig_sqrt(&a)).max_abs() < 1e-10);
        assert!(r.commutant_defect < 1e-12);
    }

    #[test]
    fn approximant_stages_satisfy_bounds() {
        let alg = make_matrix_algebra(4).unwrap();
        let mut rng = SeededRng::new(77);
        let a = rng.psd(4);
        let r = sqrt_bounded(&alg, &a).unwrap();
        let ns: Vec<u32> = r.stages.iter().map(|s| s.n).collect();
        assert_eq!(ns, alloc::vec![1, 2, 4, 8, 16, 32, 64]);
        for st in &r.stages {
            assert!(st.lower_ok && st.upper_ok, "n = {}", st.n);
        }
    }

    #[test]
    fn random_psd_matches_oracle() {
        let mut rng = SeededRng::new(5);
        for dim in 1..=8 {
            let alg = make_matrix_algebra(dim).unwrap();
            for _ in 0..5 {
                let a = rng.psd(dim);
                let r = sqrt_bounded(&alg, &a).unwrap();
                assert!(r.result.sub(&eig_sqrt(&a)).spectral_norm() < 1e-8);
            }
        }
    }

    #[test]
    fn singular_input() {
        let alg = make_matrix_algebra(3).unwrap();
        let a = Matrix::from_real_diagonal(&[0.0, 1.0, 4.0]);
        let r = sqrt_bounded(&alg, &a).unwrap();
        assert!(r.result.sub(&Matrix::from_real_diagonal(&[0.0, 1.0, 2.0])).max_abs() < 1e-9);
        let mut rng = SeededRng::new(9);
        let u = rng.unitary(3);
        let b = u.mul(&a).mul(&u.adjoint());
        let r = sqrt_bounded(&alg, &b).unwrap();
        assert!(r.result.sub(&eig_sqrt(&b)).max_abs() < 1e-5);
    }

    #[test]
    fn function_backend_is_exact_at_zero() {
        let alg = make_function_algebra(&[0.0, 1.0, 2.0, 3.0]).unwrap();
        let a = alloc::vec![real(0.0), real(1e-20), real(2.0), real(9.0)];
        let r = sqrt_bounded(&alg, &a).unwrap();
        assert_eq!(r.result[0], real(0.0));
        assert!((r.result[1].re - 1e-10).abs() < 1e-13);
        assert!((r.result[3].re - 3.0).abs() < 1e-12);
    }

    #[test]
    fn preconditions() {
        let alg = make_matrix_algebra(2).unwrap();
        let neg = Matrix::from_real_diagonal(&[-1.0, 1.0]);
        assert_eq!(sqrt_bounded(&alg, &neg).unwrap_err(), Error::NotPositive);
        let skew = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(sqrt_bounded(&alg, &skew).unwrap_err(), Error::NonHermitianInput);
        let ptlg = UpperTriangular::default();
        assert!(matches!(sqrt_bounded(&ptlg, &ptlg.unit()), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn general_agrees_with_bounded() {
        let mut rng = SeededRng::new(21);
        let alg = make_matrix_algebra(6).unwrap();
        for _ in 0..5 {
            let a = rng.psd(6);
            let g = sqrt_general(&alg, &a).unwrap();
            let b = sqrt_bounded(&alg, &a).unwrap();
            assert!(g.result.sub(&b.result).spectral_norm() < 1e-6);
            assert!(g.result.sub(&eig_sqrt(&a)).spectral_norm() < 1e-6);
        }
        let r = sqrt_general(&alg, &alg.unit()).unwrap();
        assert!(r.result.sub(&alg.unit()).max_abs() < 1e-9);
    }

    #[test]
    fn general_on_boundary_element() {
        let alg = MatrixAlgebra::new(2, TolerancePolicy::default()).unwrap();
        let a = Matrix::from_real_diagonal(&[0.0, 1.0]);
        let r = sqrt_general(&alg, &a).unwrap();
        assert!(r.result.sub(&a).max_abs() < 1e-6, "{:?}", r.result);
    }
}
