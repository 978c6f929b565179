//! JSON element files.

use serde::{Deserialize, Serialize};
use sustar_core::backends::{
    make_function_algebra, make_matrix_algebra, make_polynomial_algebra, FunctionAlgebra, MatrixAlgebra,
    Polynomial, PolynomialAlgebra,
};
use sustar_core::dominated::HamiltonianSpec;
use sustar_core::suops::RealPolynomial;
use sustar_core::{Error, Matrix, Scalar};

/// A complex number as `[re, im]`.
pub type ComplexJson = [f64; 2];

pub fn to_json(z: Scalar) -> ComplexJson {
    [z.re, z.im]
}

pub fn from_json(z: ComplexJson) -> Scalar {
    Scalar::new(z[0], z[1])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: ComplexJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "lowercase")]
pub enum ElementJson {
    Matrix {
        dim: usize,
        data: Vec<Vec<ComplexJson>>,
    },
    Function {
        points: Vec<f64>,
        values: Vec<ComplexJson>,
    },
    Polynomial {
        vars: usize,
        terms: Vec<TermJson>,
        samples: Vec<Vec<f64>>,
    },
}

/// A parsed element together with the algebra it lives in.
#[derive(Debug, Clone)]
pub enum Element {
    Matrix(MatrixAlgebra, Matrix),
    Function(FunctionAlgebra, Vec<Scalar>),
    Polynomial(PolynomialAlgebra, Polynomial),
}

impl Element {
    pub fn backend(&self) -> &'static str {
        match self {
            Element::Matrix(..) => "matrix",
            Element::Function(..) => "function",
            Element::Polynomial(..) => "polynomial",
        }
    }
}

impl ElementJson {
    pub fn from_matrix(m: &Matrix) -> Self {
        ElementJson::Matrix {
            dim: m.dim(),
            data: m.rows().iter().map(|r| r.iter().map(|z| to_json(*z)).collect()).collect(),
        }
    }

    pub fn from_function(points: &[f64], values: &[Scalar]) -> Self {
        ElementJson::Function {
            points: points.to_vec(),
            values: values.iter().map(|z| to_json(*z)).collect(),
        }
    }

    pub fn from_polynomial(p: &Polynomial, samples: &[Vec<f64>]) -> Self {
        ElementJson::Polynomial {
            vars: p.nvars(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    exps: e.clone(),
                    coeff: to_json(*c),
                })
                .collect(),
            samples: samples.to_vec(),
        }
    }

    pub fn from_element(e: &Element) -> Self {
        match e {
            Element::Matrix(_, m) => Self::from_matrix(m),
            Element::Function(alg, v) => Self::from_function(alg.points(), v),
            Element::Polynomial(alg, p) => Self::from_polynomial(p, alg.samples()),
        }
    }

    pub fn to_element(&self) -> Result<Element, Error> {
        match self {
            ElementJson::Matrix { dim, data } => {
                if data.len() != *dim || data.iter().any(|r| r.len() != *dim) {
                    return Err(Error::InvalidInput(format!("matrix data is not {dim} x {dim}")));
                }
                let rows: Vec<Vec<Scalar>> = data.iter().map(|r| r.iter().map(|z| from_json(*z)).collect()).collect();
                let m = Matrix::from_rows(&rows).ok_or_else(|| Error::InvalidInput("ragged matrix".into()))?;
                Ok(Element::Matrix(make_matrix_algebra(*dim)?, m))
            }
            ElementJson::Function { points, values } => {
                if points.len() != values.len() {
                    return Err(Error::InvalidInput("points and values differ in length".into()));
                }
                let alg = make_function_algebra(points)?;
                Ok(Element::Function(alg, values.iter().map(|z| from_json(*z)).collect()))
            }
            ElementJson::Polynomial { vars, terms, samples } => {
                let alg = make_polynomial_algebra(*vars, samples)?;
                let p = Polynomial::from_terms(*vars, terms.iter().map(|t| (t.exps.clone(), from_json(t.coeff))))
                    .ok_or_else(|| Error::InvalidInput("exponent vector has the wrong length".into()))?;
                Ok(Element::Polynomial(alg, p))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealTermJson {
    pub exps: Vec<u32>,
    pub coeff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealPolynomialJson {
    pub vars: usize,
    pub terms: Vec<RealTermJson>,
}

impl RealPolynomialJson {
    pub fn to_polynomial(&self) -> Result<RealPolynomial, Error> {
        RealPolynomial::from_terms(self.vars, self.terms.iter().map(|t| (t.exps.clone(), t.coeff)))
            .ok_or_else(|| Error::InvalidInput("exponent vector has the wrong length".into()))
    }
}

/// Input of the `polycalc` operation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CalculusJson {
    pub polynomial: RealPolynomialJson,
    pub tuple: Vec<ElementJson>,
    #[serde(default)]
    pub constraints: Vec<RealPolynomialJson>,
    /// Points of `ℝᴺ` used to sample the constraint set.
    #[serde(default)]
    pub samples: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianJson {
    pub eigenvalues: Vec<f64>,
    pub dims: Vec<usize>,
}

impl HamiltonianJson {
    pub fn from_spec(h: &HamiltonianSpec) -> Self {
        HamiltonianJson {
            eigenvalues: h.eigenvalues.clone(),
            dims: h.dims.clone(),
        }
    }

    pub fn to_spec(&self) -> Result<HamiltonianSpec, Error> {
        HamiltonianSpec::new(self.eigenvalues.clone(), self.dims.clone())
    }
}
