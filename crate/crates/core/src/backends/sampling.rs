use alloc::vec::Vec;


use crate::backends::{FunctionAlgebra, MatrixAlgebra};
use crate::linalg::Matrix;
use crate::ordered::{OrderedStarAlgebra, StarAlgebra};
use crate::random::SeededRng;
use crate::scalar::{Scalar, ONE};

/// Seeded factories for suite inputs.
pub trait Sampling: OrderedStarAlgebra {
    fn random_element(&self, rng: &mut SeededRng) -> Self::Element;
    fn random_hermitian(&self, rng: &mut SeededRng) -> Self::Element;
    fn random_positive(&self, rng: &mut SeededRng) -> Self::Element;
    /// Positive element plus `eps·𝟙`.
    fn random_coercive(&self, rng: &mut SeededRng, eps: f64) -> Self::Element;
    /// Commuting Hermitian pair.
    fn commuting_pair(&self, rng: &mut SeededRng) -> (Self::Element, Self::Element);
    /// Hermitian element commuting with every generator.
    fn commutant_sample(&self, gens: &[Self::Element], rng: &mut SeededRng) -> Self::Element;
}

/// Orthogonal projection onto the commutant of a family of normal matrices.
#[derive(Debug, Clone)]
pub struct CommutantProjector {
    blocks: Vec<Matrix>,
}

const MIX: [f64; 6] = [
    1.0,
    0.618_033_988_749_894_8,
    0.414_213_562_373_095_1,
    0.732_050_807_568_877_3,
    0.236_067_977_499_789_7,
    0.645_751_311_064_590_6,
];

impl CommutantProjector {
    /// Joint spectral projections of `gens`, clustered with relative gap `gap`.
    pub fn new(gens: &[Matrix], dim: usize, gap: f64) -> Self {
        let mut h = Matrix::zeros(dim);
        let mut k = 0;
        for g in gens {
            let s = g.max_abs().max(1e-300);
            let re = g.hermitian_part();
            let im = g.sub(&g.adjoint()).scale(Scalar::new(0.0, -0.5));
            for part in [re, im] {
                h = h.add(&part.scale_real(MIX[k % MIX.len()] / s));
                k += 1;
            }
        }
        let e = h.eigh();
        let spread = e.values.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 1..=dim {
            if i == dim || e.values[i] - e.values[i - 1] > gap * spread {
                let mut p = Matrix::zeros(dim);
                for c in start..i {
                    let v = e.column(c);
                    for r in 0..dim {
                        for s in 0..dim {
                            p[(r, s)] += v[r] * v[s].conj();
                        }
                    }
                }
                blocks.push(p);
                start = i;
            }
        }
        CommutantProjector { blocks }
    }

    pub fn project(&self, x: &Matrix) -> Matrix {
        let n = x.dim();
        self.blocks
            .iter()
            .fold(Matrix::zeros(n), |acc, p| acc.add(&p.mul(x).mul(p)))
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

fn commutes_tightly(a: &Matrix, b: &Matrix) -> bool {
    let c = a.mul(b).sub(&b.mul(a));
    c.max_abs() <= 1e-9 * (1.0 + a.max_abs()) * (1.0 + b.max_abs())
}

impl Sampling for MatrixAlgebra {
    fn random_element(&self, rng: &mut SeededRng) -> Matrix {
        rng.gaussian_matrix(self.dim())
    }

    fn random_hermitian(&self, rng: &mut SeededRng) -> Matrix {
        rng.hermitian(self.dim())
    }

    fn random_positive(&self, rng: &mut SeededRng) -> Matrix {
        rng.psd(self.dim())
    }

    fn random_coercive(&self, rng: &mut SeededRng, eps: f64) -> Matrix {
        rng.coercive(self.dim(), eps)
    }

    fn commuting_pair(&self, rng: &mut SeededRng) -> (Matrix, Matrix) {
        rng.commuting_hermitian_pair(self.dim())
    }

    fn commutant_sample(&self, gens: &[Matrix], rng: &mut SeededRng) -> Matrix {
        let n = self.dim();
        let proj = CommutantProjector::new(gens, n, 1e-7);
        let x = proj.project(&rng.hermitian(n)).hermitian_part();
        if gens.iter().all(|g| commutes_tightly(&x, g)) {
            return x;
        }
        // Fall back to a real polynomial in the generators.
        let mut acc = Matrix::identity(n).scale_real(rng.gaussian());
        for g in gens {
            let g = g.hermitian_part();
            acc = acc.add(&g.scale_real(rng.gaussian()));
            acc = acc.add(&g.mul(&g).scale_real(0.5 * rng.gaussian()));
        }
        acc.hermitian_part()
    }
}

impl Sampling for FunctionAlgebra {
    fn random_element(&self, rng: &mut SeededRng) -> Vec<Scalar> {
        rng.gaussian_vector(self.len())
    }

    fn random_hermitian(&self, rng: &mut SeededRng) -> Vec<Scalar> {
        (0..self.len()).map(|_| Scalar::new(rng.uniform_in(-2.0, 2.0), 0.0)).collect()
    }

    fn random_positive(&self, rng: &mut SeededRng) -> Vec<Scalar> {
        (0..self.len())
            .map(|_| {
                let v = if rng.uniform() < 0.1 { 0.0 } else { rng.uniform_in(0.0, 4.0) };
                Scalar::new(v, 0.0)
            })
            .collect()
    }

    fn random_coercive(&self, rng: &mut SeededRng, eps: f64) -> Vec<Scalar> {
        let p = self.random_positive(rng);
        self.add_scalar(&p, ONE * eps)
    }

    fn commuting_pair(&self, rng: &mut SeededRng) -> (Vec<Scalar>, Vec<Scalar>) {
        (self.random_hermitian(rng), self.random_hermitian(rng))
    }

    fn commutant_sample(&self, _gens: &[Vec<Scalar>], rng: &mut SeededRng) -> Vec<Scalar> {
        self.random_hermitian(rng)
    }
}
