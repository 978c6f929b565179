use alloc::vec::Vec;

use crate::backends::{FunctionAlgebra, MatrixAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ordered::StarAlgebra;
use crate::scalar::Scalar;

/// Unital *-homomorphism between two algebras.
pub trait StarMorphism {
    type Source: StarAlgebra;
    type Target: StarAlgebra;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn apply(
        &self,
        a: &<Self::Source as StarAlgebra>::Element,
    ) -> <Self::Target as StarAlgebra>::Element;
    fn is_injective(&self) -> bool;
}

/// `a ↦ u a u*` for a unitary `u`.
#[derive(Debug, Clone)]
pub struct UnitaryConjugation {
    alg: MatrixAlgebra,
    u: Matrix,
    u_star: Matrix,
}

impl UnitaryConjugation {
    pub fn new(alg: MatrixAlgebra, u: Matrix) -> Result<Self> {
        if u.dim() != alg.dim() {
            return Err(Error::BackendMismatch);
        }
        let defect = u.adjoint().mul(&u).sub(&Matrix::identity(u.dim())).max_abs();
        if defect > 1e-10 {
            return Err(Error::InvalidInput("matrix is not unitary".into()));
        }
        let u_star = u.adjoint();
        Ok(UnitaryConjugation { alg, u, u_star })
    }
}

impl StarMorphism for UnitaryConjugation {
    type Source = MatrixAlgebra;
    type Target = MatrixAlgebra;

    fn source(&self) -> &MatrixAlgebra {
        &self.alg
    }

    fn target(&self) -> &MatrixAlgebra {
        &self.alg
    }

    fn apply(&self, a: &Matrix) -> Matrix {
        self.u.mul(a).mul(&self.u_star)
    }

    fn is_injective(&self) -> bool {
        true
    }
}

/// Restriction of functions to a subset of the points.
#[derive(Debug, Clone)]
pub struct Restriction {
    source: FunctionAlgebra,
    target: FunctionAlgebra,
    indices: Vec<usize>,
}

impl Restriction {
    pub fn new(source: FunctionAlgebra, indices: Vec<usize>) -> Result<Self> {
        if indices.iter().any(|i| *i >= source.len()) {
            return Err(Error::InvalidInput("restriction index out of range".into()));
        }
        let pts: Vec<f64> = indices.iter().map(|i| source.points()[*i]).collect();
        let target = FunctionAlgebra::new(pts, *source.tolerance())?;
        Ok(Restriction {
            source,
            target,
            indices,
        })
    }
}

impl StarMorphism for Restriction {
    type Source = FunctionAlgebra;
    type Target = FunctionAlgebra;

    fn source(&self) -> &FunctionAlgebra {
        &self.source
    }

    fn target(&self) -> &FunctionAlgebra {
        &self.target
    }

    fn apply(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        self.indices.iter().map(|i| a[*i]).collect()
    }

    fn is_injective(&self) -> bool {
        let mut seen = self.indices.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.source.len()
    }
}

/// Functions on `n` points as diagonal `n × n` matrices.
#[derive(Debug, Clone)]
pub struct DiagonalEmbedding {
    source: FunctionAlgebra,
    target: MatrixAlgebra,
}

impl DiagonalEmbedding {
    pub fn new(source: FunctionAlgebra) -> Result<Self> {
        let target = MatrixAlgebra::new(source.len(), *source.tolerance())?;
        Ok(DiagonalEmbedding { source, target })
    }
}

impl StarMorphism for DiagonalEmbedding {
    type Source = FunctionAlgebra;
    type Target = MatrixAlgebra;

    fn source(&self) -> &FunctionAlgebra {
        &self.source
    }

    fn target(&self) -> &MatrixAlgebra {
        &self.target
    }

    fn apply(&self, a: &Vec<Scalar>) -> Matrix {
        Matrix::from_diagonal(a)
    }

    fn is_injective(&self) -> bool {
        true
    }
}
