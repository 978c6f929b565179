
use crate::ordered::{ExtendedNorm, OrderedStarAlgebra, StarAlgebra, Structure};
use crate::scalar::{Scalar, ONE, ZERO};
use crate::tolerance::TolerancePolicy;

/// The matrix `[[a, b], [0, a]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperTriangularElement {
    pub a: Scalar,
    pub b: Scalar,
}

impl UpperTriangularElement {
    pub fn new(a: Scalar, b: Scalar) -> Self {
        UpperTriangularElement { a, b }
    }

    pub fn real(a: f64, b: f64) -> Self {
        Self::new(Scalar::new(a, 0.0), Scalar::new(b, 0.0))
    }
}

/// Commutative algebra of upper triangular `2 × 2` Toeplitz matrices with
/// entrywise conjugation as involution. `M(a,b)` is positive when `a, b` are
/// real and either `a` exceeds the strict margin or `a = b = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct UpperTriangular {
    tol: TolerancePolicy,
    strict_margin: f64,
}

impl Default for UpperTriangular {
    fn default() -> Self {
        Self::new(TolerancePolicy::default(), 0.0)
    }
}

impl UpperTriangular {
    pub fn new(tol: TolerancePolicy, strict_margin: f64) -> Self {
        UpperTriangular { tol, strict_margin }
    }

    /// The nilpotent `M(0,1)`.
    pub fn nilpotent(&self) -> UpperTriangularElement {
        UpperTriangularElement::real(0.0, 1.0)
    }

    /// Archimedean probe: `M(0,1) ≤ ε·M(1,0)` for every `ε` while `M(0,1) ≤ 0` fails.
    ///
    /// Returns the per-`ε` verdicts and the verdict on `M(0,1) ≤ 0`.
    pub fn archimedean_probe(&self, eps: &[f64]) -> (alloc::vec::Vec<bool>, bool) {
        let n = self.nilpotent();
        let per = eps
            .iter()
            .map(|e| self.is_positive(&self.sub(&self.scale_real(*e, &self.unit()), &n)))
            .collect();
        (per, self.is_positive(&self.scale_real(-1.0, &n)))
    }
}

impl StarAlgebra for UpperTriangular {
    type Element = UpperTriangularElement;

    fn tolerance(&self) -> &TolerancePolicy {
        &self.tol
    }

    fn contains(&self, _a: &UpperTriangularElement) -> bool {
        true
    }

    fn unit(&self) -> UpperTriangularElement {
        UpperTriangularElement::new(ONE, ZERO)
    }

    fn zero(&self) -> UpperTriangularElement {
        UpperTriangularElement::new(ZERO, ZERO)
    }

    fn add(&self, x: &UpperTriangularElement, y: &UpperTriangularElement) -> UpperTriangularElement {
        UpperTriangularElement::new(x.a + y.a, x.b + y.b)
    }

    fn sub(&self, x: &UpperTriangularElement, y: &UpperTriangularElement) -> UpperTriangularElement {
        UpperTriangularElement::new(x.a - y.a, x.b - y.b)
    }

    fn mul(&self, x: &UpperTriangularElement, y: &UpperTriangularElement) -> UpperTriangularElement {
        UpperTriangularElement::new(x.a * y.a, x.a * y.b + x.b * y.a)
    }

    fn scale(&self, s: Scalar, x: &UpperTriangularElement) -> UpperTriangularElement {
        UpperTriangularElement::new(s * x.a, s * x.b)
    }

    fn star(&self, x: &UpperTriangularElement) -> UpperTriangularElement {
        UpperTriangularElement::new(x.a.conj(), x.b.conj())
    }

    fn coefficient_norm(&self, x: &UpperTriangularElement) -> f64 {
        x.a.norm().max(x.b.norm())
    }
}

impl OrderedStarAlgebra for UpperTriangular {
    fn is_positive(&self, h: &UpperTriangularElement) -> bool {
        let size = 1.0 + self.coefficient_norm(h);
        let eq = self.tol.tol_eq;
        if h.a.im.abs() > eq * size || h.b.im.abs() > eq * size {
            return false;
        }
        h.a.re > self.strict_margin || (h.a.re.abs() <= eq && h.b.re.abs() <= eq)
    }

    /// `|a|`: the nilpotent part is invisible to the order.
    fn norm_fast_path(&self, x: &UpperTriangularElement) -> Option<ExtendedNorm> {
        Some(ExtendedNorm::Finite(x.a.norm()))
    }

    fn structure(&self) -> Structure {
        Structure {
            archimedean: false,
            radical: false,
            uniformly_complete: true,
            commutative: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::uniform_seminorm;

    #[test]
    fn nilpotent_squares_to_zero_exactly() {
        let alg = UpperTriangular::default();
        let n = alg.nilpotent();
        assert_eq!(alg.mul(&n, &n), alg.zero());
        assert_ne!(n, alg.zero());
    }

    #[test]
    fn nilpotent_has_zero_seminorm() {
        let alg = UpperTriangular::default();
        let v = uniform_seminorm(&alg, &alg.nilpotent()).value().unwrap();
        assert!(v < 1e-15);
    }

    #[test]
    fn archimedean_property_fails() {
        let alg = UpperTriangular::default();
        let (per, nonpositive) = alg.archimedean_probe(&[1.0, 1e-3, 1e-6, 1e-9]);
        assert!(per.iter().all(|x| *x));
        assert!(!nonpositive);
    }

    #[test]
    fn positive_cone_shape() {
        let alg = UpperTriangular::default();
        assert!(alg.is_positive(&UpperTriangularElement::real(0.5, -7.0)));
        assert!(alg.is_positive(&alg.zero()));
        assert!(!alg.is_positive(&UpperTriangularElement::real(0.0, 1.0)));
        assert!(!alg.is_positive(&UpperTriangularElement::real(-1.0, 0.0)));
    }
}
