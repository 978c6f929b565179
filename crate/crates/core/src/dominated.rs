//! Dominant sets, dominated algebras and graph seminorms on truncation towers.
//!
//! An element of the tower is a list of matrices, one per truncation dimension,
//! usually the leading blocks of a single large matrix.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::backends::{make_matrix_algebra, CommutantProjector, MatrixAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{inner, vec_norm, Matrix};
use crate::ordered::{coercivity_witness, OrderedStarAlgebra, StarAlgebra};
use crate::random::SeededRng;
use crate::scalar::Scalar;
use crate::suops::capabilities::{run_capabilities, CapabilityInstance, CapabilityTally};

/// Positive nondecreasing spectrum prefix of a diagonal Hamiltonian `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    pub eigenvalues: Vec<f64>,
    pub dims: Vec<usize>,
}

impl HamiltonianSpec {
    pub fn new(eigenvalues: Vec<f64>, dims: Vec<usize>) -> Result<Self> {
        if eigenvalues.is_empty() || dims.is_empty() {
            return Err(Error::EmptyDomain);
        }
        if eigenvalues.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            return Err(Error::InvalidInput("eigenvalues must be positive and finite".into()));
        }
        if eigenvalues.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidInput("eigenvalues must be nondecreasing".into()));
        }
        if dims.windows(2).any(|w| w[1] <= w[0]) || dims[0] == 0 {
            return Err(Error::InvalidInput("dims must be positive and increasing".into()));
        }
        if *dims.last().expect("non-empty") > eigenvalues.len() {
            return Err(Error::InvalidInput("largest dim exceeds the spectrum prefix".into()));
        }
        Ok(HamiltonianSpec { eigenvalues, dims })
    }

    /// Spectrum `1, 1, 2, 2, …, 8, 8` on dims `4, 8, 16`.
    pub fn demo() -> Self {
        let eigenvalues = (1..=8).flat_map(|k| [k as f64, k as f64]).collect();
        HamiltonianSpec::new(eigenvalues, alloc::vec![4, 8, 16]).expect("valid demo")
    }

    pub fn epsilon(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// `(eigenvalue, multiplicity)` runs.
    pub fn degeneracy(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    pub fn max_dim(&self) -> usize {
        *self.dims.last().expect("non-empty")
    }

    pub fn matrix(&self, dim: usize) -> Matrix {
        Matrix::from_real_diagonal(&self.eigenvalues[..dim])
    }
}

/// Matrix algebras at increasing dimensions with the Hamiltonian truncated to each.
#[derive(Debug, Clone)]
pub struct TruncationTower {
    dims: Vec<usize>,
    algebras: Vec<MatrixAlgebra>,
    hamiltonians: Vec<Matrix>,
}

impl TruncationTower {
    pub fn new(spec: &HamiltonianSpec) -> Result<Self> {
        let algebras = spec
            .dims
            .iter()
            .map(|&d| make_matrix_algebra(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncationTower {
            dims: spec.dims.clone(),
            algebras,
            hamiltonians: spec.dims.iter().map(|&d| spec.matrix(d)).collect(),
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn algebra(&self, level: usize) -> &MatrixAlgebra {
        &self.algebras[level]
    }

    pub fn hamiltonian(&self, level: usize) -> &Matrix {
        &self.hamiltonians[level]
    }

    pub fn max_dim(&self) -> usize {
        *self.dims.last().expect("non-empty tower")
    }

    pub fn largest(&self) -> &MatrixAlgebra {
        self.algebras.last().expect("non-empty tower")
    }

    /// Leading blocks of `a` at every level.
    pub fn realize(&self, a: &Matrix) -> Result<Vec<Matrix>> {
        if a.dim() < self.max_dim() {
            return Err(Error::InvalidInput("element is smaller than the tower".into()));
        }
        Ok(self.dims.iter().map(|&d| a.leading_block(d)).collect())
    }
}

/// `Q = {λqⁿ : λ ≥ 1, n ≥ 0}` with search caps.
#[derive(Debug, Clone, PartialEq)]
pub struct DominantSetSpec {
    pub generator: Matrix,
    pub n_max: u32,
    pub lambda_max: f64,
}

impl DominantSetSpec {
    pub const DEFAULT_N_MAX: u32 = 8;
    pub const DEFAULT_LAMBDA_MAX: f64 = 1_048_576.0;

    pub fn new(generator: Matrix) -> Self {
        DominantSetSpec {
            generator,
            n_max: Self::DEFAULT_N_MAX,
            lambda_max: Self::DEFAULT_LAMBDA_MAX,
        }
    }

    pub fn with_caps(mut self, n_max: u32, lambda_max: f64) -> Self {
        self.n_max = n_max;
        self.lambda_max = lambda_max;
        self
    }

    /// The generator truncated to `dim`.
    pub fn generator_at(&self, dim: usize) -> Matrix {
        self.generator.leading_block(dim)
    }
}

/// Result of [`validate_dominant_set`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominantSetCheck {
    /// `‖q*q − qq*‖∞`.
    pub normal_defect: f64,
    /// Coercivity witness of `q*q`.
    pub coercivity: f64,
}

/// Checks that `q` is normal and `q*q` coercive at `dim`.
///
/// Closure of `{λqⁿ}` under products and scaling is structural.
pub fn validate_dominant_set(spec: &DominantSetSpec, dim: usize) -> Result<DominantSetCheck> {
    if dim == 0 || dim > spec.generator.dim() {
        return Err(Error::InvalidInput("dimension outside the generator".into()));
    }
    let alg = make_matrix_algebra(dim)?;
    let q = spec.generator_at(dim);
    let qsq = q.adjoint().mul(&q).hermitian_part();
    let qqs = q.mul(&q.adjoint()).hermitian_part();
    let normal_defect = qsq.sub(&qqs).spectral_norm();
    let s = qsq.spectral_norm().max(1.0);
    if !(normal_defect <= alg.tolerance().tol_eq * s) {
        return Err(Error::NotNormal);
    }
    let coercivity = coercivity_witness(&alg, &qsq)?;
    Ok(DominantSetCheck {
        normal_defect,
        coercivity,
    })
}

/// Which membership clause failed.
#[derive(Debug, Clone, PartialEq)]
pub enum MembershipFailure {
    /// `a` does not commute with `q` at this dimension.
    NotInCommutant { dim: usize, defect: f64 },
    /// No `(n, λ)` within the caps works at every dimension.
    NoWitness { n_max: u32, lambda_max: f64 },
    /// The element list does not match the tower.
    Shape,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// `(n, λ)` with `a*a, aa* ≤ λ²(q*q)ⁿ` at every level.
    pub witness: Option<(u32, f64)>,
    pub failure: Option<MembershipFailure>,
}

impl Membership {
    fn fail(f: MembershipFailure) -> Self {
        Membership {
            member: false,
            witness: None,
            failure: Some(f),
        }
    }
}

struct Level {
    alg: MatrixAlgebra,
    powers: Vec<Matrix>,
    asa: Matrix,
    aas: Matrix,
}

impl Level {
    fn fits(&self, n: u32, lambda: f64) -> bool {
        let bound = self.powers[n as usize].scale_real(lambda * lambda);
        self.alg.is_positive(&bound.sub(&self.asa)) && self.alg.is_positive(&bound.sub(&self.aas))
    }
}

fn qsq_powers(q: &Matrix, n_max: u32) -> Vec<Matrix> {
    let qsq = q.adjoint().mul(q).hermitian_part();
    let mut powers = alloc::vec![Matrix::identity(q.dim())];
    for _ in 0..n_max {
        let next = powers.last().expect("non-empty").mul(&qsq).hermitian_part();
        powers.push(next);
    }
    powers
}

/// Membership of `a` (one matrix per tower level) in the dominated algebra.
///
/// The witness is the smallest `n` admitting `λ = 1`; failing that, the
/// smallest `n` admitting some `λ ≤ λ_max`, with `λ` minimal up to bisection.
pub fn in_downarrow(a: &[Matrix], spec: &DominantSetSpec, tower: &TruncationTower) -> Membership {
    if a.len() != tower.len() || a.iter().zip(tower.dims()).any(|(m, &d)| m.dim() != d) {
        return Membership::fail(MembershipFailure::Shape);
    }
    let mut levels = Vec::with_capacity(a.len());
    for (i, x) in a.iter().enumerate() {
        let alg = tower.algebra(i).clone();
        let q = spec.generator_at(tower.dims()[i]);
        let c = x.mul(&q).sub(&q.mul(x)).spectral_norm();
        let s = x.spectral_norm().max(1.0) * q.spectral_norm().max(1.0);
        if !(c <= alg.tolerance().tol_comm * s) {
            return Membership::fail(MembershipFailure::NotInCommutant {
                dim: tower.dims()[i],
                defect: c,
            });
        }
        levels.push(Level {
            powers: qsq_powers(&q, spec.n_max),
            asa: x.adjoint().mul(x).hermitian_part(),
            aas: x.mul(&x.adjoint()).hermitian_part(),
            alg,
        });
    }
    let fits = |n: u32, lambda: f64| levels.iter().all(|l| l.fits(n, lambda));
    let found = |n: u32, lambda: f64| Membership {
        member: true,
        witness: Some((n, lambda)),
        failure: None,
    };
    for n in 0..=spec.n_max {
        if fits(n, 1.0) {
            return found(n, 1.0);
        }
    }
    for n in 0..=spec.n_max {
        if !fits(n, spec.lambda_max) {
            continue;
        }
        let (mut lo, mut hi) = (1.0, spec.lambda_max);
        for _ in 0..80 {
            if hi - lo <= 1e-9 * hi {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if fits(n, mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return found(n, hi);
    }
    Membership::fail(MembershipFailure::NoWitness {
        n_max: spec.n_max,
        lambda_max: spec.lambda_max,
    })
}

/// `a*a ≤ λ²(q*q)ⁿ` and `aa* ≤ λ²(q*q)ⁿ` at every tower level.
pub fn witness_holds(a: &[Matrix], spec: &DominantSetSpec, tower: &TruncationTower, n: u32, lambda: f64) -> bool {
    if a.len() != tower.len() {
        return false;
    }
    a.iter().enumerate().all(|(i, x)| {
        let q = spec.generator_at(tower.dims()[i]);
        let level = Level {
            alg: tower.algebra(i).clone(),
            powers: qsq_powers(&q, n),
            asa: x.adjoint().mul(x).hermitian_part(),
            aas: x.mul(&x.adjoint()).hermitian_part(),
        };
        level.fits(n, lambda)
    })
}

/// Random member of the dominated algebra at the largest tower dimension:
/// a normalized element of `{q}′` multiplied by `qᵏ`, `k ≤ max_power`.
pub fn sample_member(spec: &DominantSetSpec, tower: &TruncationTower, rng: &mut SeededRng, max_power: u32) -> Matrix {
    let d = tower.max_dim();
    let q = spec.generator_at(d);
    let proj = CommutantProjector::new(core::slice::from_ref(&q), d, 1e-7);
    let x = loop {
        let x = proj.project(&rng.gaussian_matrix(d));
        let n = x.spectral_norm();
        if n > 1e-6 {
            break x.scale_real(1.0 / n);
        }
    };
    let k = rng.below(max_power as usize + 1);
    (0..k).fold(x, |acc, _| acc.mul(&q))
}

/// One closure property of the dominated algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureCheck {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    /// Largest witness power seen.
    pub max_power: u32,
}

/// Samples members `a`, `b` and checks `a + b`, `ab`, `a*`, `αa` for membership.
pub fn downarrow_subalgebra_probe(
    spec: &DominantSetSpec,
    tower: &TruncationTower,
    rng: &mut SeededRng,
    trials: usize,
) -> Result<Vec<ClosureCheck>> {
    let mut checks: Vec<ClosureCheck> = ["sum", "product", "star", "scalar-multiple"]
        .iter()
        .map(|&name| ClosureCheck {
            name,
            trials: 0,
            failures: 0,
            max_power: 0,
        })
        .collect();
    for _ in 0..trials {
        let a = sample_member(spec, tower, rng, 2);
        let b = sample_member(spec, tower, rng, 2);
        let alpha = rng.complex_gaussian();
        let candidates = [a.add(&b), a.mul(&b), a.adjoint(), a.scale(alpha)];
        for (check, c) in checks.iter_mut().zip(candidates.iter()) {
            let m = in_downarrow(&tower.realize(c)?, spec, tower);
            check.trials += 1;
            match m.witness {
                Some((n, _)) if m.member => check.max_power = check.max_power.max(n),
                _ => check.failures += 1,
            }
        }
    }
    Ok(checks)
}

/// `√⟨ξ, aξ⟩` for positive `a`.
pub fn graph_seminorm(xi: &[Scalar], a: &Matrix) -> Result<f64> {
    if xi.len() != a.dim() {
        return Err(Error::InvalidInput("vector length does not match the matrix".into()));
    }
    let alg = make_matrix_algebra(a.dim())?;
    if !alg.is_positive(a) {
        return Err(Error::NotPositive);
    }
    Ok(inner(xi, &a.mul_vec(xi)).re.max(0.0).sqrt())
}

/// Sampled form of the cofinality of graph seminorms.
#[derive(Debug, Clone, PartialEq)]
pub struct CofinalityCheck {
    pub trials: usize,
    pub failures: usize,
    /// Largest power of `q*q` needed.
    pub max_power: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SusconstructReport {
    pub members: usize,
    pub capabilities: Vec<CapabilityTally>,
    pub cofinality: CofinalityCheck,
}

impl SusconstructReport {
    pub fn passed(&self) -> bool {
        self.capabilities.iter().all(|t| t.passed()) && self.cofinality.failures == 0
    }
}

/// Runs the six-capability probe on sampled members at the largest dimension
/// and checks that each `b = a*a` is dominated by some `λ²(q*q)ⁿ` on sampled vectors.
pub fn susconstruct_probe(
    spec: &DominantSetSpec,
    tower: &TruncationTower,
    rng: &mut SeededRng,
    members: usize,
) -> Result<SusconstructReport> {
    for &d in tower.dims() {
        let q = spec.generator_at(d);
        let smallest = q.adjoint().mul(&q).hermitian_part().eigvalsh()[0];
        if !(smallest > 1e-12 * q.spectral_norm().powi(2).max(1.0)) {
            return Err(Error::GeneratorNotInvertible { dim: d });
        }
    }
    let alg = tower.largest();
    let d = tower.max_dim();
    let q = spec.generator_at(d);
    let powers = qsq_powers(&q, spec.n_max);
    let mut instances = Vec::with_capacity(members);
    let mut cof = CofinalityCheck {
        trials: 0,
        failures: 0,
        max_power: 0,
    };
    for _ in 0..members {
        let a = sample_member(spec, tower, rng, 1);
        let x = a.hermitian_part();
        let b = a.adjoint().mul(&a).hermitian_part();
        let y = x.mul(&x).add_identity(Scalar::new(-2.0, 0.0)).hermitian_part();
        let eps = rng.uniform_in(0.1, 1.0);
        let vectors: Vec<Vec<Scalar>> = (0..20).map(|_| rng.unit_vector(d)).collect();
        cof.trials += 1;
        match dominating_power(&b, &powers, spec.lambda_max, &vectors)? {
            Some(n) => cof.max_power = cof.max_power.max(n),
            None => cof.failures += 1,
        }
        instances.push(CapabilityInstance {
            hermitian: x.clone(),
            coercive: b.add_identity(Scalar::new(eps, 0.0)),
            positive: b,
            pair: (x, y),
        });
    }
    Ok(SusconstructReport {
        members,
        capabilities: run_capabilities(alg, &instances),
        cofinality: cof,
    })
}

fn dominating_power(b: &Matrix, powers: &[Matrix], lambda_max: f64, vectors: &[Vec<Scalar>]) -> Result<Option<u32>> {
    let lhs = vectors
        .iter()
        .map(|v| graph_seminorm(v, b))
        .collect::<Result<Vec<_>>>()?;
    for (n, p) in powers.iter().enumerate() {
        let rhs = vectors
            .iter()
            .map(|v| graph_seminorm(v, p))
            .collect::<Result<Vec<_>>>()?;
        let mut lambda = 1.0;
        while lambda <= lambda_max {
            if lhs.iter().zip(&rhs).all(|(l, r)| *l <= lambda * r * (1.0 + 1e-12)) {
                return Ok(Some(n as u32));
            }
            lambda *= 2.0;
        }
    }
    Ok(None)
}

/// Check of `q*q + r*r ≤ λ² q*r*rq` with `λ = √(2/ε)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominantBound {
    pub epsilon: f64,
    pub lambda: f64,
    pub holds: bool,
    /// Smallest eigenvalue of `λ² q*r*rq − q*q − r*r`.
    pub margin: f64,
}

/// `ε` is the smaller coercivity witness of `q*q` and `r*r`, capped at 2.
pub fn dominant_product_bound(q: &Matrix, r: &Matrix) -> Result<DominantBound> {
    let dim = q.dim();
    let alg = make_matrix_algebra(dim)?;
    let cq = q.mul(r).sub(&r.mul(q)).spectral_norm();
    if !(cq <= alg.tolerance().tol_comm * q.spectral_norm().max(1.0) * r.spectral_norm().max(1.0)) {
        return Err(Error::NonCommuting);
    }
    let qsq = q.adjoint().mul(q).hermitian_part();
    let rsq = r.adjoint().mul(r).hermitian_part();
    let epsilon = coercivity_witness(&alg, &qsq)?
        .min(coercivity_witness(&alg, &rsq)?)
        .min(2.0);
    let lambda = (2.0 / epsilon).sqrt();
    let prod = q.adjoint().mul(&rsq).mul(q).hermitian_part();
    let gap = prod.scale_real(lambda * lambda).sub(&qsq).sub(&rsq).hermitian_part();
    Ok(DominantBound {
        epsilon,
        lambda,
        holds: alg.is_positive(&gap),
        margin: gap.eigvalsh()[0],
    })
}

/// Largest `‖aξ‖` over unit vectors `ξ`.
pub fn sampled_operator_norm(a: &Matrix, vectors: &[Vec<Scalar>]) -> f64 {
    vectors
        .iter()
        .map(|v| vec_norm(&a.mul_vec(v)) / vec_norm(v))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::seminorm;

    fn demo() -> (HamiltonianSpec, TruncationTower, DominantSetSpec) {
        let h = HamiltonianSpec::demo();
        let tower = TruncationTower::new(&h).unwrap();
        let q = DominantSetSpec::new(h.matrix(h.max_dim()));
        (h, tower, q)
    }

    fn block_member(rng: &mut SeededRng) -> Matrix {
        let mut a = Matrix::zeros(16);
        for k in 0..8 {
            let b = rng.hermitian(2);
            let b = b.scale_real((k + 1) as f64 / b.spectral_norm());
            for i in 0..2 {
                for j in 0..2 {
                    a[(2 * k + i, 2 * k + j)] = b[(i, j)];
                }
            }
        }
        a
    }

    #[test]
    fn demo_spec() {
        let h = HamiltonianSpec::demo();
        assert_eq!(h.eigenvalues.len(), 16);
        assert_eq!(h.degeneracy()[7], (8.0, 2));
        assert_eq!(h.epsilon(), 1.0);
        assert!(HamiltonianSpec::new(alloc::vec![1.0, 0.5], alloc::vec![2]).is_err());
    }

    #[test]
    fn dominant_set_validation() {
        let id = DominantSetSpec::new(Matrix::identity(4));
        assert!(validate_dominant_set(&id, 4).is_ok());
        let d = DominantSetSpec::new(Matrix::from_real_diagonal(&[1.0, 2.0, 3.0, 4.0]));
        assert!((validate_dominant_set(&d, 4).unwrap().coercivity - 1.0).abs() < 1e-8);
        let nil = DominantSetSpec::new(Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap());
        assert_eq!(validate_dominant_set(&nil, 2).unwrap_err(), Error::NotNormal);
        let sing = DominantSetSpec::new(Matrix::from_real_diagonal(&[0.0, 1.0]));
        assert_eq!(validate_dominant_set(&sing, 2).unwrap_err(), Error::NotCoercive);
    }

    #[test]
    fn unit_and_block_members() {
        let (_, tower, q) = demo();
        let one = tower.realize(&Matrix::identity(16)).unwrap();
        let m = in_downarrow(&one, &q, &tower);
        assert_eq!(m.witness, Some((0, 1.0)));
        let mut rng = SeededRng::new(12);
        for _ in 0..5 {
            let a = block_member(&mut rng);
            let m = in_downarrow(&tower.realize(&a).unwrap(), &q, &tower);
            assert_eq!(m.witness, Some((1, 1.0)));
            let s = in_downarrow(&tower.realize(&a.adjoint()).unwrap(), &q, &tower);
            assert_eq!(s.witness, m.witness);
            let parts = tower.realize(&a).unwrap();
            assert!(witness_holds(&parts, &q, &tower, 2, 1.0));
            assert!(witness_holds(&parts, &q, &tower, 1, 4.0));
            assert!(!witness_holds(&parts, &q, &tower, 0, 1.0));
        }
    }

    #[test]
    fn shift_is_not_in_commutant() {
        let h = HamiltonianSpec::new((1..=8).map(|k| k as f64).collect(), alloc::vec![2, 4, 8]).unwrap();
        let tower = TruncationTower::new(&h).unwrap();
        let q = DominantSetSpec::new(h.matrix(8));
        let mut s = Matrix::zeros(8);
        for i in 0..7 {
            s[(i + 1, i)] = Scalar::new(1.0, 0.0);
        }
        let m = in_downarrow(&tower.realize(&s).unwrap(), &q, &tower);
        assert!(!m.member);
        assert!(matches!(m.failure, Some(MembershipFailure::NotInCommutant { dim: 2, .. })));
    }

    #[test]
    fn needs_scaling_witness() {
        let (_, tower, q) = demo();
        let a = Matrix::identity(16).scale_real(3.0);
        let m = in_downarrow(&tower.realize(&a).unwrap(), &q, &tower);
        let (n, lambda) = m.witness.unwrap();
        assert_eq!(n, 0);
        assert!((lambda - 3.0).abs() < 1e-6);
    }

    #[test]
    fn subalgebra_closure() {
        let (_, tower, q) = demo();
        let mut rng = SeededRng::new(4);
        for c in downarrow_subalgebra_probe(&q, &tower, &mut rng, 5).unwrap() {
            assert_eq!(c.failures, 0, "{}", c.name);
        }
    }

    #[test]
    fn graph_seminorms() {
        let mut rng = SeededRng::new(2);
        let xi = rng.gaussian_vector(4);
        let n = graph_seminorm(&xi, &Matrix::identity(4)).unwrap();
        assert!((n - vec_norm(&xi)).abs() < 1e-12);
        let q = Matrix::from_real_diagonal(&[1.0, -2.0, 3.0, 4.0]);
        let e1 = alloc::vec![Scalar::new(0.0, 0.0), Scalar::new(1.0, 0.0), Scalar::new(0.0, 0.0), Scalar::new(0.0, 0.0)];
        assert!((graph_seminorm(&e1, &q.adjoint().mul(&q)).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(graph_seminorm(&xi, &q).unwrap_err(), Error::NotPositive);
    }

    #[test]
    fn susconstruct_small() {
        let (_, tower, q) = demo();
        let mut rng = SeededRng::new(5);
        let r = susconstruct_probe(&q, &tower, &mut rng, 5).unwrap();
        assert!(r.passed(), "{:?}", r);
        let bad = DominantSetSpec::new(Matrix::from_real_diagonal(&[0.0; 16]));
        assert_eq!(
            susconstruct_probe(&bad, &tower, &mut rng, 1).unwrap_err(),
            Error::GeneratorNotInvertible { dim: 4 }
        );
    }

    #[test]
    fn dominant_bound() {
        let q = Matrix::from_real_diagonal(&[1.0, 2.0, 0.5]);
        let r = Matrix::from_real_diagonal(&[3.0, 0.25, 1.0]);
        let b = dominant_product_bound(&q, &r).unwrap();
        assert!(b.holds);
        assert!((b.epsilon - 0.0625).abs() < 1e-8);
    }

    #[test]
    fn seminorm_matches_sampled_norm() {
        let mut rng = SeededRng::new(3);
        let alg = make_matrix_algebra(4).unwrap();
        let a = rng.gaussian_matrix(4);
        let vectors: Vec<_> = (0..200).map(|_| rng.unit_vector(4)).collect();
        let s = sampled_operator_norm(&a, &vectors);
        let n = seminorm(&alg, &a).as_f64();
        assert!(s <= n + 1e-10);
        assert!((n - a.spectral_norm()).abs() < 1e-8);
    }
}
