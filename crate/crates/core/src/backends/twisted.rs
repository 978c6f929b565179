use alloc::vec;
use alloc::vec::Vec;


use crate::error::{Error, Result};
use crate::ordered::StarAlgebra;
use crate::scalar::{Scalar, ONE, ZERO};
use crate::tolerance::TolerancePolicy;

/// Functions on `2m` equally spaced points of the unit circle with the
/// involution `f* = conj ∘ f ∘ τ`, `τ(z) = −z`. No order is attached.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedCircle {
    m: usize,
    tol: TolerancePolicy,
}

impl TwistedCircle {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyDomain);
        }
        Ok(TwistedCircle {
            m,
            tol: TolerancePolicy::default(),
        })
    }

    pub fn len(&self) -> usize {
        2 * self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid points `exp(iπk/m)`, `k = 0..2m`.
    pub fn grid(&self) -> Vec<Scalar> {
        (0..self.len())
            .map(|k| Scalar::from_polar(1.0, core::f64::consts::PI * k as f64 / self.m as f64))
            .collect()
    }

    /// Index of `τ(z_k) = −z_k`.
    pub fn antipode(&self, k: usize) -> usize {
        (k + self.m) % self.len()
    }

    /// The identity function `z ↦ z` on the grid.
    pub fn identity_function(&self) -> Vec<Scalar> {
        self.grid()
    }
}

impl StarAlgebra for TwistedCircle {
    type Element = Vec<Scalar>;

    fn tolerance(&self) -> &TolerancePolicy {
        &self.tol
    }

    fn contains(&self, a: &Vec<Scalar>) -> bool {
        a.len() == self.len()
    }

    fn unit(&self) -> Vec<Scalar> {
        vec![ONE; self.len()]
    }

    fn zero(&self) -> Vec<Scalar> {
        vec![ZERO; self.len()]
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
        (0..self.len()).map(|k| a[self.antipode(k)].conj()).collect()
    }

    fn coefficient_norm(&self, a: &Vec<Scalar>) -> f64 {
        a.iter().fold(0.0, |m, z| m.max(z.norm()))
    }
}
