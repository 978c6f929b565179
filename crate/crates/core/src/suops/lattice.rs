//! Absolute values, positive and negative parts, commuting suprema and infima.

#[allow(unused_imports)]
use num_traits::Float;

use super::inverse::inverse_coercive_at;
use super::sqrt::{sqrt_bounded_with, sqrt_general_at, SqrtConfig, SqrtReport};
use super::MAX_DEPTH;
use crate::backends::Sampling;
use crate::error::{Error, Result};
use crate::ordered::{
    commutator, commutes, is_uniformly_bounded, re_part, require_hermitian, scale, seminorm,
    OrderedStarAlgebra,
};
use crate::random::SeededRng;
use crate::scalar::Scalar;

/// `|a| = √(a²)`.
pub fn abs<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<A::Element> {
    abs_report(alg, a).map(|r| r.result)
}

/// `|a|` together with the square-root report for `a²`.
pub fn abs_report<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<SqrtReport<A::Element>> {
    abs_at(alg, a, 0)
}

pub(crate) fn abs_at<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    depth: u32,
) -> Result<SqrtReport<A::Element>> {
    if depth > MAX_DEPTH {
        return Err(Error::NotApplicable("nested construction depth exceeded"));
    }
    require_hermitian(alg, a)?;
    if !alg.structure().radical {
        return Err(Error::NotApplicable("absolute values need a radical algebra"));
    }
    let sq = re_part(alg, &alg.mul(a, a));
    if is_uniformly_bounded(alg, &sq) {
        let mut r = sqrt_bounded_with(alg, &sq, &SqrtConfig::limit_only())?;
        let m = match lift_above(alg, a, &r.result) {
            Some(m) => m,
            None => {
                let cfg = SqrtConfig {
                    shift_first: true,
                    ..SqrtConfig::limit_only()
                };
                let m = sqrt_bounded_with(alg, &sq, &cfg)?.result;
                let m = polish(alg, a, &sq, m, depth)?;
                lift_above(alg, a, &m).unwrap_or(m)
            }
        };
        r.result = m;
        r.residual = seminorm(alg, &alg.sub(&alg.mul(&r.result, &r.result), &sq)).as_f64();
        r.commutant_defect = seminorm(alg, &commutator(alg, &r.result, &sq)).as_f64();
        Ok(r)
    } else {
        sqrt_general_at(alg, &sq, depth + 1)
    }
}

/// Newton steps `m ← (m + a²m⁻¹)/2` from a root `m ≥ |a|` of `a² + η𝟙`.
///
/// Every iterate stays above `|a|` and the excess on the kernel halves per step.
fn polish<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    sq: &A::Element,
    mut m: A::Element,
    depth: u32,
) -> Result<A::Element> {
    let tol = *alg.tolerance();
    let target = 1e-2 * tol.tol_eq * scale(alg, a);
    for _ in 0..tol.max_iter {
        let Ok(inv) = inverse_coercive_at(alg, &m, depth + 1) else {
            break;
        };
        let next = re_part(alg, &alg.scale_real(0.5, &alg.add(&m, &alg.mul(sq, &inv.result))));
        if !dominates(alg, &next, a) {
            break;
        }
        let step = seminorm(alg, &alg.sub(&m, &next)).as_f64();
        m = next;
        if step <= target {
            break;
        }
    }
    Ok(m)
}

/// `m + κ𝟙` for the smallest doubling `κ ≤ tol_eq·scale(a)/2` with `−m − κ𝟙 ≤ a ≤ m + κ𝟙`.
fn lift_above<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, m: &A::Element) -> Option<A::Element> {
    if dominates(alg, m, a) {
        return Some(m.clone());
    }
    let tol = alg.tolerance();
    let s = scale(alg, a);
    let mut kappa = 1e-3 * tol.tol_pos * s;
    while kappa <= 0.5 * tol.tol_eq * s {
        let lifted = alg.add_scalar(m, Scalar::new(kappa, 0.0));
        if dominates(alg, &lifted, a) {
            return Some(lifted);
        }
        kappa *= 2.0;
    }
    None
}

/// `−m ≤ a ≤ m`.
fn dominates<A: OrderedStarAlgebra>(alg: &A, m: &A::Element, a: &A::Element) -> bool {
    alg.is_positive(&alg.sub(m, a)) && alg.is_positive(&alg.add(m, a))
}

/// `a₊ = (|a| + a)/2`.
pub fn pos_part<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<A::Element> {
    let m = abs(alg, a)?;
    Ok(alg.scale_real(0.5, &alg.add(&m, a)))
}

/// `a₋ = (|a| − a)/2`.
pub fn neg_part<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<A::Element> {
    let m = abs(alg, a)?;
    Ok(alg.scale_real(0.5, &alg.sub(&m, a)))
}

/// `a ∨ b = (a + b + |a − b|)/2` for commuting Hermitian `a`, `b`.
pub fn vee<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> Result<A::Element> {
    lattice_at(alg, a, b, true, 0)
}

/// `a ∧ b = (a + b − |a − b|)/2` for commuting Hermitian `a`, `b`.
pub fn wedge<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> Result<A::Element> {
    lattice_at(alg, a, b, false, 0)
}

pub(crate) fn wedge_at<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    b: &A::Element,
    depth: u32,
) -> Result<A::Element> {
    lattice_at(alg, a, b, false, depth)
}

/// How well `x` satisfies the defining conditions of `a ∨ b` (or `a ∧ b`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeDefects {
    /// Oracle verdict on `2x ≥ a + b` (resp. `2x ≤ a + b`).
    pub order_ok: bool,
    /// `‖x² + ab − x(a + b)‖∞`.
    pub equation_defect: f64,
    /// Threshold the equation defect is held to.
    pub equation_bound: f64,
}

impl LatticeDefects {
    pub fn ok(&self) -> bool {
        self.order_ok && self.equation_defect <= self.equation_bound
    }
}

pub fn lattice_defects<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    b: &A::Element,
    x: &A::Element,
    upper: bool,
) -> LatticeDefects {
    let sum = alg.add(a, b);
    let twice = alg.scale_real(2.0, x);
    let gap = if upper { alg.sub(&twice, &sum) } else { alg.sub(&sum, &twice) };
    let eq = alg.sub(&alg.add(&alg.mul(x, x), &alg.mul(a, b)), &alg.mul(x, &sum));
    let s = scale(alg, a).max(scale(alg, b));
    LatticeDefects {
        order_ok: alg.is_positive(&gap),
        equation_defect: seminorm(alg, &eq).as_f64(),
        equation_bound: 100.0 * alg.tolerance().tol_eq * s * s,
    }
}

fn lattice_at<A: OrderedStarAlgebra>(
    alg: &A,
    a: &A::Element,
    b: &A::Element,
    upper: bool,
    depth: u32,
) -> Result<A::Element> {
    require_hermitian(alg, a)?;
    require_hermitian(alg, b)?;
    if !commutes(alg, a, b) {
        return Err(Error::NonCommuting);
    }
    let m = abs_at(alg, &alg.sub(a, b), depth)?.result;
    let sum = alg.add(a, b);
    let x = if upper { alg.add(&sum, &m) } else { alg.sub(&sum, &m) };
    let x = re_part(alg, &alg.scale_real(0.5, &x));
    let d = lattice_defects(alg, a, b, &x, upper);
    if !d.order_ok {
        return Err(Error::DefectExceeded {
            check: "lattice order condition",
            defect: d.equation_defect,
        });
    }
    if !(d.equation_defect <= d.equation_bound) {
        return Err(Error::DefectExceeded {
            check: "lattice equation",
            defect: d.equation_defect,
        });
    }
    Ok(x)
}

/// Largest relative commutator of `x` with `count` sampled elements of `{a, b}′`.
pub fn bicommutant_defect<A: Sampling>(
    alg: &A,
    a: &A::Element,
    b: &A::Element,
    x: &A::Element,
    rng: &mut SeededRng,
    count: usize,
) -> f64 {
    let gens = [a.clone(), b.clone()];
    let sx = scale(alg, x);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let y = alg.commutant_sample(&gens, rng);
        let c = seminorm(alg, &commutator(alg, x, &y)).as_f64();
        worst = worst.max(c / (sx * scale(alg, &y)));
    }
    worst
}
