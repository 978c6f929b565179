use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::ordered::{ExtendedNorm, OrderedStarAlgebra, StarAlgebra, Structure, SEMINORM_CAP};
use crate::scalar::{Scalar, ONE, ZERO};
use crate::tolerance::TolerancePolicy;

/// Complex polynomial in `nvars` real variables, keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.push(vec![0; nvars], c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.push(e, ONE);
        p
    }

    /// Builds from `(exponents, coefficient)` pairs; `None` on a length mismatch.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Option<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return None;
            }
            p.push(e, c);
        }
        Some(p)
    }

    fn push(&mut self, e: Vec<u32>, c: Scalar) {
        let slot = self.terms.entry(e).or_insert(ZERO);
        *slot += c;
        if *slot == ZERO {
            self.terms.retain(|_, v| *v != ZERO);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[f64]) -> Scalar {
        self.terms.iter().fold(ZERO, |acc, (e, c)| {
            let m = e
                .iter()
                .zip(point)
                .fold(1.0, |m, (k, x)| m * x.powi(*k as i32));
            acc + c * m
        })
    }

    fn zip_with(&self, other: &Polynomial, sign: f64) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.push(e.clone(), c * sign);
        }
        out
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.push(e, c1 * c2);
            }
        }
        out
    }

    fn map(&self, f: impl Fn(Scalar) -> Scalar) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.push(e.clone(), f(*c));
        }
        out
    }
}

/// Polynomials on `ℝᴺ` ordered pointwise on a finite sample set.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialAlgebra {
    nvars: usize,
    samples: Vec<Vec<f64>>,
    tol: TolerancePolicy,
}

pub fn make_polynomial_algebra(nvars: usize, samples: &[Vec<f64>]) -> Result<PolynomialAlgebra> {
    PolynomialAlgebra::new(nvars, samples.to_vec(), TolerancePolicy::default())
}

impl PolynomialAlgebra {
    pub fn new(nvars: usize, samples: Vec<Vec<f64>>, tol: TolerancePolicy) -> Result<Self> {
        tol.validate()?;
        if samples.iter().any(|s| s.len() != nvars || s.iter().any(|x| !x.is_finite())) {
            return Err(Error::InvalidInput("sample dimension mismatch".into()));
        }
        Ok(PolynomialAlgebra { nvars, samples, tol })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn samples(&self) -> &[Vec<f64>] {
        &self.samples
    }

    pub fn variable(&self, i: usize) -> Polynomial {
        Polynomial::variable(self.nvars, i)
    }

    fn values(&self, p: &Polynomial) -> Vec<Scalar> {
        self.samples.iter().map(|s| p.eval(s)).collect()
    }
}

impl StarAlgebra for PolynomialAlgebra {
    type Element = Polynomial;

    fn tolerance(&self) -> &TolerancePolicy {
        &self.tol
    }

    fn contains(&self, a: &Polynomial) -> bool {
        a.nvars == self.nvars
    }

    fn unit(&self) -> Polynomial {
        Polynomial::constant(self.nvars, ONE)
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars)
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.zip_with(b, 1.0)
    }

    fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.zip_with(b, -1.0)
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.product(b)
    }

    fn scale(&self, s: Scalar, a: &Polynomial) -> Polynomial {
        a.map(|c| c * s)
    }

    fn star(&self, a: &Polynomial) -> Polynomial {
        a.map(|c| c.conj())
    }

    fn coefficient_norm(&self, a: &Polynomial) -> f64 {
        a.terms.values().fold(0.0, |m, c| m.max(c.norm()))
    }
}

impl OrderedStarAlgebra for PolynomialAlgebra {
    /// Real and at least `−tol_pos·(1 + sup|h|)` on every sample.
    fn is_positive(&self, h: &Polynomial) -> bool {
        if !self.contains(h) {
            return false;
        }
        let vals = self.values(h);
        let top = vals.iter().fold(0.0f64, |m, z| m.max(z.norm()));
        if !top.is_finite() {
            return false;
        }
        let floor = -self.tol.tol_pos * (1.0 + top);
        let im_slack = self.tol.tol_eq * (1.0 + top);
        vals.iter().all(|z| z.im.abs() <= im_slack && z.re >= floor)
    }

    /// Sample supremum, infinite beyond the bracket cap.
    fn norm_fast_path(&self, a: &Polynomial) -> Option<ExtendedNorm> {
        let top = self.values(a).iter().fold(0.0f64, |m, z| m.max(z.norm()));
        if top.is_finite() && top <= SEMINORM_CAP {
            Some(ExtendedNorm::Finite(top))
        } else {
            Some(ExtendedNorm::Infinite)
        }
    }

    fn structure(&self) -> Structure {
        Structure {
            archimedean: true,
            radical: true,
            uniformly_complete: false,
            commutative: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered::{is_uniformly_bounded, order_leq, seminorm, uniform_seminorm};
    use crate::scalar::real;

    #[test]
    fn quasi_order_collapses_at_zero() {
        let alg = make_polynomial_algebra(1, &[vec![0.0]]).unwrap();
        let x = alg.variable(0);
        let z = alg.zero();
        assert!(order_leq(&alg, &x, &z).unwrap());
        assert!(order_leq(&alg, &z, &x).unwrap());
    }

    #[test]
    fn unbounded_identity_on_wide_samples() {
        let samples: Vec<Vec<f64>> = (0..=25).map(|k| vec![10f64.powi(k)]).collect();
        let alg = make_polynomial_algebra(1, &samples).unwrap();
        let x = alg.variable(0);
        assert!(!is_uniformly_bounded(&alg, &x));
        assert_eq!(uniform_seminorm(&alg, &x), ExtendedNorm::Infinite);
        let five = alg.scalar(real(5.0));
        assert_eq!(seminorm(&alg, &five), ExtendedNorm::Finite(5.0));
        let slow = uniform_seminorm(&alg, &five).value().unwrap();
        assert!((slow - 5.0).abs() < 1e-9);
    }

    #[test]
    fn arithmetic() {
        let alg = make_polynomial_algebra(2, &[vec![1.0, 2.0]]).unwrap();
        let x = alg.variable(0);
        let y = alg.variable(1);
        let p = alg.mul(&alg.add(&x, &y), &alg.sub(&x, &y));
        assert_eq!(p.eval(&[3.0, 1.0]), real(8.0));
        assert_eq!(alg.sub(&p, &p), alg.zero());
        let q = alg.scale(Scalar::new(0.0, 1.0), &x);
        assert_eq!(alg.star(&q).eval(&[1.0, 0.0]), Scalar::new(0.0, -1.0));
    }
}
