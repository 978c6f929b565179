//! Inverses of coercive elements.

#[allow(unused_imports)]
use num_traits::Float;

use super::lattice::wedge_at;
use super::MAX_DEPTH;
use crate::error::{Error, Result};
use crate::ordered::{
    coercivity_witness, re_part, require_hermitian, scale, seminorm, ExtendedNorm, OrderedStarAlgebra,
};
use crate::scalar::{Scalar, I, ONE};

#[derive(Debug, Clone, PartialEq)]
pub struct InverseReport<E> {
    pub result: E,
    pub iterations: usize,
    /// `‖a·result − 𝟙‖∞`.
    pub defect: f64,
    /// Coercivity witness `ε` used for the construction.
    pub witness: f64,
    /// `‖result‖∞`, bounded by `1/ε`.
    pub result_norm: f64,
}

/// `a⁻¹ = ‖a‖⁻¹ Σ Xᵏ` with `X = 𝟙 − a/‖a‖`, summed as `Π (𝟙 + X^(2ʲ))`.
///
/// Requires `‖X‖∞ ≤ 1 − ε/‖a‖ + tol_eq`.
pub(crate) fn neumann_product<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    norm: f64,
    eps: f64,
) -> Result<(A::Element, usize)> {
    let tol = *alg.tolerance();
    if !(norm > 0.0) || !(eps > 0.0) {
        return Err(Error::NotCoercive);
    }
    let x = alg.sub(&alg.unit(), &alg.scale_real(1.0 / norm, a));
    let rho = (1.0 - eps / norm).max(0.0);
    let x_norm = seminorm(alg, &x).as_f64();
    if !(x_norm <= rho + tol.tol_eq) {
        return Err(Error::DefectExceeded {
            check: "Neumann convergence guard",
            defect: x_norm - rho,
        });
    }
    let target = 1e-2 * tol.tol_eq;
    let squarings = if rho <= target {
        1
    } else {
        let terms = target.ln() / rho.ln();
        terms.log2().ceil().max(0.0) as usize + 2
    };
    if squarings > tol.max_iter {
        return Err(Error::NoConvergence {
            op: "neumann series",
            iterations: tol.max_iter,
        });
    }
    let mut s = alg.unit();
    let mut p = x;
    for _ in 0..squarings {
        s = re_part(alg, &alg.add(&s, &alg.mul(&p, &s)));
        p = re_part(alg, &alg.mul(&p, &p));
    }
    Ok((alg.scale_real(1.0 / norm, &s), squarings))
}

fn report<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    result: A::Element,
    iterations: usize,
    witness: f64,
) -> Result<InverseReport<A::Element>> {
    let tol = alg.tolerance();
    let defect = seminorm(alg, &alg.sub(&alg.mul(a, &result), &alg.unit())).as_f64();
    let s = scale(alg, a);
    if !(defect <= tol.tol_eq * (s / witness).max(1.0)) {
        return Err(Error::NoConvergence {
            op: "inverse",
            iterations,
        });
    }
    let result_norm = seminorm(alg, &result).as_f64();
    // The witness may overshoot the true bottom of the spectrum by the oracle slack.
    let allowance = tol.tol_eq + tol.tol_pos * (1.0 + s) / (witness * witness);
    if !(result_norm <= 1.0 / witness + allowance) {
        return Err(Error::DefectExceeded {
            check: "inverse norm bound",
            defect: result_norm - 1.0 / witness,
        });
    }
    Ok(InverseReport {
        result,
        iterations,
        defect,
        witness,
        result_norm,
    })
}

/// Neumann-series inverse of a bounded Hermitian `a ≥ ε𝟙`.
pub fn inverse_neumann<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    eps: f64,
) -> Result<InverseReport<A::Element>> {
    require_hermitian(alg, a)?;
    let norm = match seminorm(alg, a) {
        ExtendedNorm::Finite(v) => v,
        ExtendedNorm::Infinite => return Err(Error::NotBounded),
    };
    let (r, k) = neumann_product(alg, a, norm, eps)?;
    report(alg, a, r, k, eps)
}

/// Inverse of a coercive Hermitian element.
///
/// Bounded inputs use the Neumann series; otherwise `cₙ = (a ∧ n𝟙)⁻¹` for
/// `n = 1, 2, 4, …` until consecutive terms agree.
pub fn inverse_coercive<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<InverseReport<A::Element>> {
    inverse_coercive_at(alg, a, 0)
}

pub(crate) fn inverse_coercive_at<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    depth: u32,
) -> Result<InverseReport<A::Element>> {
    let eps = coercivity_witness(alg, a)?;
    match seminorm(alg, a) {
        ExtendedNorm::Finite(norm) => {
            let (r, k) = neumann_product(alg, a, norm, eps)?;
            report(alg, a, r, k, eps)
        }
        ExtendedNorm::Infinite => truncation_at(alg, a, eps, depth),
    }
}

/// `lim (a ∧ n𝟙)⁻¹`, each term by the Neumann series.
pub fn inverse_by_truncation<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
) -> Result<InverseReport<A::Element>> {
    let eps = coercivity_witness(alg, a)?;
    truncation_at(alg, a, eps, 0)
}

fn truncation_at<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    eps: f64,
    depth: u32,
) -> Result<InverseReport<A::Element>> {
    if depth > MAX_DEPTH {
        return Err(Error::NotApplicable("nested construction depth exceeded"));
    }
    let tol = *alg.tolerance();
    let mut prev: Option<A::Element> = None;
    let mut n = 1.0f64;
    let mut total = 0;
    for _ in 0..tol.max_iter {
        let cap = alg.scalar(ONE * n);
        let w = wedge_at(alg, a, &cap, depth + 1)?;
        let w_norm = seminorm(alg, &w).as_f64();
        let (c, k) = neumann_product(alg, &w, w_norm, eps.min(n))?;
        total += k;
        if let Some(p) = &prev {
            let diff = seminorm(alg, &alg.sub(&c, p)).as_f64();
            if diff <= tol.tol_eq * scale(alg, &c) {
                return report(alg, a, c, total, eps);
            }
        }
        prev = Some(c);
        n *= 2.0;
    }
    Err(Error::NoConvergence {
        op: "inverse by truncation",
        iterations: total,
    })
}

/// `((a + i𝟙)⁻¹, (a − i𝟙)⁻¹)` via `(a ± i𝟙)⁻¹ = (𝟙 + a²)⁻¹(a ∓ i𝟙)`.
pub fn invert_shifted<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<(A::Element, A::Element)> {
    let r = invert_shifted_report(alg, a)?;
    Ok((r.plus, r.minus))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedInverses<E> {
    /// `(a + i𝟙)⁻¹`.
    pub plus: E,
    /// `(a − i𝟙)⁻¹`.
    pub minus: E,
    pub defect_plus: f64,
    pub defect_minus: f64,
}

pub fn invert_shifted_report<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
) -> Result<ShiftedInverses<A::Element>> {
    require_hermitian(alg, a)?;
    let tol = alg.tolerance();
    let one_plus_sq = re_part(alg, &alg.add_scalar(&alg.mul(a, a), ONE));
    let inv = inverse_coercive(alg, &one_plus_sq)?.result;
    let plus = alg.mul(&inv, &alg.add_scalar(a, -I));
    let minus = alg.mul(&inv, &alg.add_scalar(a, I));
    let defect = |shift: Scalar, r: &A::Element| {
        seminorm(alg, &alg.sub(&alg.mul(&alg.add_scalar(a, shift), r), &alg.unit())).as_f64()
    };
    let defect_plus = defect(I, &plus);
    let defect_minus = defect(-I, &minus);
    let bound = tol.tol_eq * scale(alg, a).powi(2);
    if !(defect_plus <= bound && defect_minus <= bound) {
        return Err(Error::NoConvergence {
            op: "shifted inverse",
            iterations: 0,
        });
    }
    Ok(ShiftedInverses {
        plus,
        minus,
        defect_plus,
        defect_minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::make_matrix_algebra;
    use crate::linalg::Matrix;
    use crate::ordered::StarAlgebra;
    use crate::random::SeededRng;

    #[test]
    fn unit_and_diagonal() {
        let alg = make_matrix_algebra(2).unwrap();
        let r = inverse_coercive(&alg, &alg.unit()).unwrap();
        assert!(r.result.sub(&alg.unit()).max_abs() < 1e-12);
        let d = Matrix::from_real_diagonal(&[2.0, 4.0]);
        let r = inverse_coercive(&alg, &d).unwrap();
        assert!(r.result.sub(&Matrix::from_real_diagonal(&[0.5, 0.25])).max_abs() < 1e-12);
        assert!((r.witness - 2.0).abs() < 1e-9);
    }

    #[test]
    fn not_coercive() {
        let alg = make_matrix_algebra(2).unwrap();
        let d = Matrix::from_real_diagonal(&[0.0, 1.0]);
        assert_eq!(inverse_coercive(&alg, &d).unwrap_err(), Error::NotCoercive);
    }

    #[test]
    fn random_coercive_and_truncation_path() {
        let mut rng = SeededRng::new(31);
        let alg = make_matrix_algebra(6).unwrap();
        for _ in 0..10 {
            let a = rng.coercive(6, 0.2);
            let r = inverse_coercive(&alg, &a).unwrap();
            assert!(r.defect <= 1e-10);
            let b = inverse_by_truncation(&alg, &a).unwrap();
            assert!(b.result.sub(&r.result).spectral_norm() < 1e-8);
        }
    }

    #[test]
    fn shifted_scalars() {
        let alg = make_matrix_algebra(3).unwrap();
        let (p, m) = invert_shifted(&alg, &alg.zero()).unwrap();
        assert!(p.sub(&alg.scalar(-I)).max_abs() < 1e-12);
        assert!(m.sub(&alg.scalar(I)).max_abs() < 1e-12);
        let (p, m) = invert_shifted(&alg, &alg.unit()).unwrap();
        assert!(p.sub(&alg.scalar(Scalar::new(0.5, -0.5))).max_abs() < 1e-12);
        assert!(m.sub(&alg.scalar(Scalar::new(0.5, 0.5))).max_abs() < 1e-12);
    }
}
