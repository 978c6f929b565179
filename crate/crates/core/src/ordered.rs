//! Ordered *-algebra interface, Hermitian calculus, uniform seminorm and order predicates.

use core::fmt::Debug;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, I, ONE};
use crate::tolerance::TolerancePolicy;

/// Bracket cap for the generic seminorm search.
pub const SEMINORM_CAP: f64 = 18_446_744_073_709_551_616.0; // 2^64
/// Bisection steps for the generic seminorm search.
pub const SEMINORM_BISECTIONS: usize = 60;

/// Non-negative real or infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedNorm {
    Finite(f64),
    Infinite,
}

impl ExtendedNorm {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedNorm::Finite(_))
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            ExtendedNorm::Finite(v) => Some(*v),
            ExtendedNorm::Infinite => None,
        }
    }

    /// The value, with infinity mapped to `f64::INFINITY`.
    pub fn as_f64(&self) -> f64 {
        self.value().unwrap_or(f64::INFINITY)
    }
}

/// Global properties of a backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Structure {
    pub archimedean: bool,
    pub radical: bool,
    pub uniformly_complete: bool,
    pub commutative: bool,
}

/// Unital complex algebra with an involution.
pub trait StarAlgebra {
    type Element: Clone + Debug + PartialEq;

    fn tolerance(&self) -> &TolerancePolicy;
    /// True if `a` has the shape this algebra works with.
    fn contains(&self, a: &Self::Element) -> bool;
    fn unit(&self) -> Self::Element;
    fn zero(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn scale(&self, s: Scalar, a: &Self::Element) -> Self::Element;
    fn star(&self, a: &Self::Element) -> Self::Element;
    /// Largest modulus among the stored coefficients of `a`.
    fn coefficient_norm(&self, a: &Self::Element) -> f64;

    fn scale_real(&self, s: f64, a: &Self::Element) -> Self::Element {
        self.scale(Scalar::new(s, 0.0), a)
    }

    fn scalar(&self, s: Scalar) -> Self::Element {
        self.scale(s, &self.unit())
    }

    /// `a + s·𝟙`.
    fn add_scalar(&self, a: &Self::Element, s: Scalar) -> Self::Element {
        self.add(a, &self.scalar(s))
    }
}

/// *-algebra with a positivity oracle on Hermitian elements.
pub trait OrderedStarAlgebra: StarAlgebra {
    /// Positivity oracle; non-Hermitian inputs are rejected.
    fn is_positive(&self, h: &Self::Element) -> bool;

    /// Backend shortcut for the uniform seminorm.
    fn norm_fast_path(&self, _a: &Self::Element) -> Option<ExtendedNorm> {
        None
    }

    fn structure(&self) -> Structure;
}

/// `(a + a*) / 2`.
pub fn re_part<A: StarAlgebra>(alg: &A, a: &A::Element) -> A::Element {
    alg.scale_real(0.5, &alg.add(a, &alg.star(a)))
}

/// `(a − a*) / 2i`.
pub fn im_part<A: StarAlgebra>(alg: &A, a: &A::Element) -> A::Element {
    alg.scale(-I * 0.5, &alg.sub(a, &alg.star(a)))
}

/// `‖a‖∞` from the positivity oracle alone: doubling bracket, then bisection.
pub fn uniform_seminorm<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> ExtendedNorm {
    let tol = alg.tolerance();
    let asa = alg.mul(&alg.star(a), a);
    let fits = |lambda: f64| alg.is_positive(&alg.sub(&alg.scalar(Scalar::new(lambda * lambda, 0.0)), &asa));
    let mut hi = 1.0;
    while !fits(hi) {
        hi *= 2.0;
        if hi > SEMINORM_CAP {
            return ExtendedNorm::Infinite;
        }
    }
    let mut lo = if hi > 1.0 { hi / 2.0 } else { 0.0 };
    for _ in 0..SEMINORM_BISECTIONS {
        if hi - lo <= tol.tol_eq * hi * 0.5 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    ExtendedNorm::Finite(hi)
}

/// `‖a‖∞`, preferring the backend shortcut.
pub fn seminorm<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> ExtendedNorm {
    alg.norm_fast_path(a).unwrap_or_else(|| uniform_seminorm(alg, a))
}

/// `min(‖a − b‖∞, 1)`, snapped to zero below `tol_eq`.
pub fn uniform_metric<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> f64 {
    match seminorm(alg, &alg.sub(a, b)) {
        ExtendedNorm::Infinite => 1.0,
        ExtendedNorm::Finite(v) if v <= alg.tolerance().tol_eq => 0.0,
        ExtendedNorm::Finite(v) => v.min(1.0),
    }
}

pub fn is_uniformly_bounded<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> bool {
    seminorm(alg, a).is_finite()
}

/// `max(1, ‖a‖∞)`; unbounded elements fall back to their coefficient size.
pub fn scale<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> f64 {
    match seminorm(alg, a) {
        ExtendedNorm::Finite(v) => v.max(1.0),
        ExtendedNorm::Infinite => alg.coefficient_norm(a).max(1.0),
    }
}

pub fn is_hermitian<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> bool {
    let d = alg.sub(a, &alg.star(a));
    match seminorm(alg, &d) {
        ExtendedNorm::Finite(v) => v <= alg.tolerance().tol_eq * scale(alg, a),
        ExtendedNorm::Infinite => false,
    }
}

pub fn commutator<A: StarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> A::Element {
    alg.sub(&alg.mul(a, b), &alg.mul(b, a))
}

pub fn commutes<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> bool {
    let c = commutator(alg, a, b);
    match seminorm(alg, &c) {
        ExtendedNorm::Finite(v) => v <= alg.tolerance().tol_comm * scale(alg, a) * scale(alg, b),
        ExtendedNorm::Infinite => false,
    }
}

pub(crate) fn require_hermitian<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<()> {
    if is_hermitian(alg, a) {
        Ok(())
    } else {
        Err(Error::NonHermitianInput)
    }
}

/// `a ≤ b`, i.e. the oracle accepts `b − a`.
pub fn order_leq<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> Result<bool> {
    require_hermitian(alg, a)?;
    require_hermitian(alg, b)?;
    Ok(alg.is_positive(&alg.sub(b, a)))
}

/// Result of the coercivity search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coercivity {
    pub coercive: bool,
    /// Largest `ε` on the bisection grid with `ε𝟙 ≤ a`; zero when none.
    pub witness: f64,
}

/// Largest `ε` with `ε𝟙 ≤ a`, by bisection against the oracle.
///
/// The element counts as coercive only when the witness exceeds `tol_eq·scale(a)`.
pub fn is_coercive<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<Coercivity> {
    require_hermitian(alg, a)?;
    let tol = *alg.tolerance();
    let fits = |eps: f64| alg.is_positive(&alg.add_scalar(a, Scalar::new(-eps, 0.0)));
    let none = Coercivity {
        coercive: false,
        witness: 0.0,
    };
    if !fits(0.0) {
        return Ok(none);
    }
    let mut lo = 0.0;
    let mut hi = match seminorm(alg, a) {
        ExtendedNorm::Finite(v) => v + 1.0,
        ExtendedNorm::Infinite => 1.0,
    };
    while fits(hi) {
        lo = hi;
        hi *= 2.0;
        if hi > SEMINORM_CAP {
            return Ok(Coercivity {
                coercive: true,
                witness: lo,
            });
        }
    }
    for _ in 0..SEMINORM_BISECTIONS {
        if hi - lo <= tol.tol_eq * 1e-3 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = scale(alg, a);
    if lo > tol.tol_eq * s {
        Ok(Coercivity {
            coercive: true,
            witness: lo,
        })
    } else {
        Ok(none)
    }
}

/// Witness `ε` or [`Error::NotCoercive`].
pub fn coercivity_witness<A: OrderedStarAlgebra>(alg: &A, a: &A::Element) -> Result<f64> {
    let c = is_coercive(alg, a)?;
    if c.coercive {
        Ok(c.witness)
    } else {
        Err(Error::NotCoercive)
    }
}

/// Both `a ≤ b` and `b ≤ a` on the oracle.
pub fn order_equal<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> bool {
    let d = alg.sub(a, b);
    alg.is_positive(&d) && alg.is_positive(&alg.scale_real(-1.0, &d))
}

/// `‖a − b‖∞` as a plain float (infinity when unbounded).
pub fn distance<A: OrderedStarAlgebra>(alg: &A, a: &A::Element, b: &A::Element) -> f64 {
    seminorm(alg, &alg.sub(a, b)).as_f64()
}

/// `λ·𝟙`.
pub fn real_unit<A: StarAlgebra>(alg: &A, lambda: f64) -> A::Element {
    alg.scalar(ONE * lambda)
}
