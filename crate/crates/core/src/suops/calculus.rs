//! Real polynomials evaluated on commuting Hermitian tuples.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ordered::{commutes, re_part, require_hermitian, OrderedStarAlgebra};

/// Real polynomial in `nvars` commuting variables.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, f64>,
}

impl RealPolynomial {
    pub fn zero(nvars: usize) -> Self {
        RealPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: f64) -> Self {
        let mut p = Self::zero(nvars);
        p.push(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.push(e, 1.0);
        p
    }

    /// `Σ cₖ xᵏ` in one variable.
    pub fn univariate(coeffs: &[f64]) -> Self {
        let mut p = Self::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            p.push(vec![k as u32], *c);
        }
        p
    }

    /// `None` if an exponent vector has the wrong length.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, f64)>) -> Option<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return None;
            }
            p.push(e, c);
        }
        Some(p)
    }

    fn push(&mut self, e: Vec<u32>, c: f64) {
        let slot = self.terms.entry(e).or_insert(0.0);
        *slot += c;
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &f64)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .filter(|(_, c)| **c != 0.0)
            .map(|(e, _)| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(*c, |acc, (k, x)| acc * x.powi(*k as i32))
            })
            .sum()
    }

    pub fn mul(&self, other: &RealPolynomial) -> RealPolynomial {
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.push(e, c1 * c2);
            }
        }
        p
    }

    pub fn add(&self, other: &RealPolynomial) -> RealPolynomial {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.push(e.clone(), *c);
        }
        p
    }
}

/// `q(a₁, …, a_N)` for pairwise commuting Hermitian `aᵢ`.
///
/// Univariate polynomials use Horner's scheme; otherwise powers of each
/// variable are cached and the monomials summed.
pub fn polynomial_calculus<A: OrderedStarAlgebra>(
    alg: &A,
    q: &RealPolynomial,
    tuple: &[A::Element],
) -> Result<A::Element> {
    if tuple.len() != q.nvars {
        return Err(Error::InvalidInput(alloc::format!(
            "polynomial has {} variables, tuple has {} elements",
            q.nvars,
            tuple.len()
        )));
    }
    for a in tuple {
        require_hermitian(alg, a)?;
    }
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if !commutes(alg, &tuple[i], &tuple[j]) {
                return Err(Error::NonCommutingTuple);
            }
        }
    }
    if q.nvars == 1 {
        let top = q.degree() as usize;
        let mut coeffs = vec![0.0; top + 1];
        for (e, c) in &q.terms {
            if (e[0] as usize) <= top {
                coeffs[e[0] as usize] += c;
            }
        }
        let a = &tuple[0];
        let mut acc = alg.zero();
        for c in coeffs.iter().rev() {
            acc = alg.add_scalar(&alg.mul(&acc, a), crate::scalar::real(*c));
        }
        return Ok(re_part(alg, &acc));
    }
    let mut powers: Vec<Vec<A::Element>> = tuple.iter().map(|_| vec![alg.unit()]).collect();
    let mut acc = alg.zero();
    for (e, c) in &q.terms {
        let mut m = alg.unit();
        for (i, k) in e.iter().enumerate() {
            let k = *k as usize;
            while powers[i].len() <= k {
                let next = alg.mul(powers[i].last().expect("non-empty"), &tuple[i]);
                powers[i].push(next);
            }
            if k > 0 {
                m = alg.mul(&m, &powers[i][k]);
            }
        }
        acc = alg.add(&acc, &alg.scale_real(*c, &m));
    }
    Ok(re_part(alg, &acc))
}

/// Outcome of the positivity companion check.
#[derive(Debug, Clone, PartialEq)]
pub struct CalculusCheck<E> {
    pub value: E,
    /// Sample points of the constraint set `S = {pₘ ≥ 0}` that were used.
    pub points_in_set: usize,
    /// Smallest value of `q` over those points.
    pub min_on_set: f64,
    /// Every constraint `pₘ(tuple)` passed the oracle.
    pub constraints_positive: bool,
    /// Oracle verdict on `q(tuple)`.
    pub value_positive: bool,
}

impl<E> CalculusCheck<E> {
    /// The implication holds: if `q ≥ 0` on `S` and every `pₘ(tuple) ≥ 0`, then `q(tuple) ≥ 0`.
    pub fn holds(&self) -> bool {
        !(self.min_on_set >= 0.0 && self.constraints_positive) || self.value_positive
    }
}

/// Evaluates `q(tuple)` and compares its positivity with that of `q` on the
/// sampled set `S = {x : pₘ(x) ≥ 0 for all m}`.
pub fn positivity_companion<A: OrderedStarAlgebra>(
    alg: &A,
    q: &RealPolynomial,
    constraints: &[RealPolynomial],
    tuple: &[A::Element],
    samples: &[Vec<f64>],
) -> Result<CalculusCheck<A::Element>> {
    let value = polynomial_calculus(alg, q, tuple)?;
    let mut constraints_positive = true;
    for p in constraints {
        let v = polynomial_calculus(alg, p, tuple)?;
        constraints_positive &= alg.is_positive(&v);
    }
    let mut points_in_set = 0;
    let mut min_on_set = f64::INFINITY;
    for x in samples {
        if constraints.iter().all(|p| p.eval(x) >= 0.0) {
            points_in_set += 1;
            min_on_set = min_on_set.min(q.eval(x));
        }
    }
    let value_positive = alg.is_positive(&value);
    Ok(CalculusCheck {
        value,
        points_in_set,
        min_on_set,
        constraints_positive,
        value_positive,
    })
}
