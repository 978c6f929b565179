use alloc::vec;
use alloc::vec::Vec;


use crate::error::{Error, Result};
use crate::ordered::{ExtendedNorm, OrderedStarAlgebra, StarAlgebra, Structure};
use crate::scalar::{Scalar, ONE, ZERO};
use crate::tolerance::TolerancePolicy;

/// Complex functions on a finite point set with the pointwise order.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionAlgebra {
    points: Vec<f64>,
    tol: TolerancePolicy,
}

pub fn make_function_algebra(points: &[f64]) -> Result<FunctionAlgebra> {
    FunctionAlgebra::new(points.to_vec(), TolerancePolicy::default())
}

impl FunctionAlgebra {
    pub fn new(points: Vec<f64>, tol: TolerancePolicy) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDomain);
        }
        tol.validate()?;
        Ok(FunctionAlgebra { points, tol })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn with_tolerance(&self, tol: TolerancePolicy) -> Self {
        FunctionAlgebra {
            points: self.points.clone(),
            tol,
        }
    }

    /// Tabulates a real function on the points.
    pub fn from_fn(&self, f: impl Fn(f64) -> f64) -> Vec<Scalar> {
        self.points.iter().map(|x| Scalar::new(f(*x), 0.0)).collect()
    }

    fn max_abs(v: &[Scalar]) -> f64 {
        v.iter().fold(0.0, |m, z| m.max(z.norm()))
    }
}

impl StarAlgebra for FunctionAlgebra {
    type Element = Vec<Scalar>;

    fn tolerance(&self) -> &TolerancePolicy {
        &self.tol
    }

    fn contains(&self, a: &Vec<Scalar>) -> bool {
        a.len() == self.points.len() && a.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    fn unit(&self) -> Vec<Scalar> {
        vec![ONE; self.points.len()]
    }

    fn zero(&self) -> Vec<Scalar> {
        vec![ZERO; self.points.len()]
    }

    fn add(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn sub(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    fn mul(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x * y).collect()
    }

    fn scale(&self, s: Scalar, a: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().map(|x| x * s).collect()
    }

    fn star(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().map(|x| x.conj()).collect()
    }

    fn coefficient_norm(&self, a: &Vec<Scalar>) -> f64 {
        Self::max_abs(a)
    }
}

impl OrderedStarAlgebra for FunctionAlgebra {
    /// Every value real and at least `−tol_pos·(1 + ‖h‖∞)`.
    fn is_positive(&self, h: &Vec<Scalar>) -> bool {
        if !self.contains(h) {
            return false;
        }
        let top = Self::max_abs(h);
        let floor = -self.tol.tol_pos * (1.0 + top);
        let im_slack = self.tol.tol_eq * (1.0 + top);
        h.iter().all(|z| z.im.abs() <= im_slack && z.re >= floor)
    }

    fn norm_fast_path(&self, a: &Vec<Scalar>) -> Option<ExtendedNorm> {
        Some(ExtendedNorm::Finite(Self::max_abs(a)))
    }

    fn structure(&self) -> Structure {
        Structure {
            archimedean: true,
            radical: true,
            uniformly_complete: true,
            commutative: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::{is_hermitian, order_leq, seminorm, uniform_seminorm};
    use crate::scalar::real;

    #[test]
    fn empty_domain_rejected() {
        assert_eq!(make_function_algebra(&[]), Err(Error::EmptyDomain));
    }

    #[test]
    fn pointwise_order() {
        let alg = make_function_algebra(&[0.0, 1.0]).unwrap();
        let f = vec![real(1.0), real(2.0)];
        let g = vec![real(2.0), real(2.0)];
        assert!(order_leq(&alg, &f, &g).unwrap());
        assert!(!order_leq(&alg, &g, &f).unwrap());
    }

    #[test]
    fn one_point_behaves_as_complex_numbers() {
        let alg = make_function_algebra(&[0.5]).unwrap();
        assert!(is_hermitian(&alg, &vec![real(3.0)]));
        assert!(!is_hermitian(&alg, &vec![Scalar::new(3.0, 1.0)]));
        assert!(order_leq(&alg, &vec![real(-1.0)], &vec![real(0.5)]).unwrap());
    }

    #[test]
    fn fast_path_agrees_with_bisection() {
        let alg = make_function_algebra(&[0.0, 1.0, 2.0]).unwrap();
        let f = vec![Scalar::new(1.0, 2.0), real(-3.5), real(0.25)];
        let fast = seminorm(&alg, &f).value().unwrap();
        let slow = uniform_seminorm(&alg, &f).value().unwrap();
        assert!((fast - slow).abs() <= 10.0 * 1e-10 * fast);
    }
}
