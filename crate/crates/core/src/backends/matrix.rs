
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ordered::{ExtendedNorm, OrderedStarAlgebra, StarAlgebra, Structure};
use crate::scalar::Scalar;
use crate::tolerance::TolerancePolicy;

/// `n × n` complex matrices with the usual order of Hermitian matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixAlgebra {
    dim: usize,
    tol: TolerancePolicy,
}

pub fn make_matrix_algebra(dim: usize) -> Result<MatrixAlgebra> {
    MatrixAlgebra::new(dim, TolerancePolicy::default())
}

impl MatrixAlgebra {
    pub fn new(dim: usize, tol: TolerancePolicy) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDomain);
        }
        tol.validate()?;
        Ok(MatrixAlgebra { dim, tol })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn with_tolerance(&self, tol: TolerancePolicy) -> Self {
        MatrixAlgebra { dim: self.dim, tol }
    }
}

fn nearly_hermitian(h: &Matrix, rel: f64) -> bool {
    let n = h.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((h[(i, j)] - h[(j, i)].conj()).norm());
        }
    }
    worst <= rel * (1.0 + h.max_abs())
}

impl StarAlgebra for MatrixAlgebra {
    type Element = Matrix;

    fn tolerance(&self) -> &TolerancePolicy {
        &self.tol
    }

    fn contains(&self, a: &Matrix) -> bool {
        a.dim() == self.dim && a.is_finite()
    }

    fn unit(&self) -> Matrix {
        Matrix::identity(self.dim)
    }

    fn zero(&self) -> Matrix {
        Matrix::zeros(self.dim)
    }

    fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a.add(b)
    }

    fn sub(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a.sub(b)
    }

    fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a.mul(b)
    }

    fn scale(&self, s: Scalar, a: &Matrix) -> Matrix {
        a.scale(s)
    }

    fn star(&self, a: &Matrix) -> Matrix {
        a.adjoint()
    }

    fn coefficient_norm(&self, a: &Matrix) -> f64 {
        a.max_abs()
    }

    fn add_scalar(&self, a: &Matrix, s: Scalar) -> Matrix {
        a.add_identity(s)
    }
}

impl OrderedStarAlgebra for MatrixAlgebra {
    /// Minimum eigenvalue at least `−tol_pos·(1 + ‖h‖∞)`.
    fn is_positive(&self, h: &Matrix) -> bool {
        if h.dim() != self.dim || !h.is_finite() || !nearly_hermitian(h, self.tol.tol_eq) {
            return false;
        }
        let ev = h.eigvalsh();
        let top = ev.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        ev[0] >= -self.tol.tol_pos * (1.0 + top)
    }

    fn norm_fast_path(&self, a: &Matrix) -> Option<ExtendedNorm> {
        if !a.is_finite() {
            return Some(ExtendedNorm::Infinite);
        }
        let v = if nearly_hermitian(a, 1e-15) {
            a.eigvalsh().iter().fold(0.0f64, |m, x| m.max(x.abs()))
        } else {
            a.spectral_norm()
        };
        Some(ExtendedNorm::Finite(v))
    }

    fn structure(&self) -> Structure {
        Structure {
            archimedean: true,
            radical: true,
            uniformly_complete: true,
            commutative: self.dim == 1,
        }
    }
}
