//! Concrete algebras and the two pathological fixtures.

mod certificate;
mod function;
mod matrix;
mod morphism;
mod polynomial;
mod sampling;
mod triangular;
mod twisted;

pub use certificate::{verify_genpos_certificate, CertificateTerm, GenPosCertificate};
pub use function::{make_function_algebra, FunctionAlgebra};
pub use matrix::{make_matrix_algebra, MatrixAlgebra};
pub use morphism::{DiagonalEmbedding, Restriction, StarMorphism, UnitaryConjugation};
pub use polynomial::{make_polynomial_algebra, Polynomial, PolynomialAlgebra};
pub use sampling::{CommutantProjector, Sampling};
pub use triangular::{UpperTriangular, UpperTriangularElement};
pub use twisted::TwistedCircle;
