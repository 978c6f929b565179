use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ordered::StarAlgebra;

/// One summand `a* g a`.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateTerm<E> {
    /// Hermitian generator or the unit.
    pub g: E,
    pub a: E,
}

/// A claimed representation `Σ aₙ* gₙ aₙ` of a Hermitian element.
#[derive(Debug, Clone, PartialEq)]
pub struct GenPosCertificate<E> {
    pub terms: Vec<CertificateTerm<E>>,
}

impl<E> GenPosCertificate<E> {
    pub fn new(terms: Vec<(E, E)>) -> Self {
        GenPosCertificate {
            terms: terms.into_iter().map(|(g, a)| CertificateTerm { g, a }).collect(),
        }
    }
}

/// Recomputes `Σ aₙ* gₙ aₙ` and compares it with `target` coefficientwise,
/// relative to `max(1, |target|)`.
pub fn verify_genpos_certificate<A: StarAlgebra>(
    alg: &A,
    target: &A::Element,
    cert: &GenPosCertificate<A::Element>,
) -> Result<bool> {
    if !alg.contains(target) || cert.terms.iter().any(|t| !alg.contains(&t.g) || !alg.contains(&t.a)) {
        return Err(Error::BackendMismatch);
    }
    let tol = alg.tolerance().tol_eq;
    for t in &cert.terms {
        let skew = alg.coefficient_norm(&alg.sub(&t.g, &alg.star(&t.g)));
        if skew > tol * alg.coefficient_norm(&t.g).max(1.0) {
            return Err(Error::NonHermitianInput);
        }
    }
    let sum = cert.terms.iter().fold(alg.zero(), |acc, t| {
        let term = alg.mul(&alg.mul(&alg.star(&t.a), &t.g), &t.a);
        alg.add(&acc, &term)
    });
    let defect = alg.coefficient_norm(&alg.sub(&sum, target));
    Ok(defect <= tol * alg.coefficient_norm(target).max(1.0))
}
