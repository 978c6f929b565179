//! Seeded sample factories.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::{vec_norm, Matrix};
use crate::scalar::{Scalar, ZERO};

/// Deterministic generator for scalars, vectors and matrices.
#[derive(Debug, Clone)]
pub struct SeededRng {
    rng: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent generator derived from this one and a stream label.
    pub fn fork(&mut self, label: u64) -> SeededRng {
        let s = self.rng.next_u64() ^ label.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        SeededRng::new(s)
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn below(&mut self, n: usize) -> usize {
        ((self.uniform() * n as f64) as usize).min(n.saturating_sub(1))
    }

    /// Standard normal via Box–Muller.
    pub fn gaussian(&mut self) -> f64 {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
    }

    /// Complex normal with unit variance.
    pub fn complex_gaussian(&mut self) -> Scalar {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        Scalar::new(self.gaussian() * s, self.gaussian() * s)
    }

    pub fn gaussian_vector(&mut self, dim: usize) -> Vec<Scalar> {
        (0..dim).map(|_| self.complex_gaussian()).collect()
    }

    pub fn unit_vector(&mut self, dim: usize) -> Vec<Scalar> {
        loop {
            let v = self.gaussian_vector(dim);
            let n = vec_norm(&v);
            if n > 1e-8 {
                return v.iter().map(|x| x / n).collect();
            }
        }
    }

    pub fn gaussian_matrix(&mut self, dim: usize) -> Matrix {
        let data = (0..dim * dim).map(|_| self.complex_gaussian()).collect();
        Matrix::from_row_major(dim, data).expect("square data")
    }

    /// `(g + g*) / 2` for Gaussian `g`.
    pub fn hermitian(&mut self, dim: usize) -> Matrix {
        self.gaussian_matrix(dim).hermitian_part()
    }

    /// `g*g / dim` for Gaussian `g`.
    pub fn psd(&mut self, dim: usize) -> Matrix {
        let g = self.gaussian_matrix(dim);
        g.adjoint().mul(&g).hermitian_part().scale_real(1.0 / dim.max(1) as f64)
    }

    /// `g*g / dim + eps·𝟙`.
    pub fn coercive(&mut self, dim: usize, eps: f64) -> Matrix {
        self.psd(dim).add_identity(Scalar::new(eps, 0.0))
    }

    /// Haar-distributed unitary from Gram–Schmidt on a Gaussian matrix.
    pub fn unitary(&mut self, dim: usize) -> Matrix {
        loop {
            let g = self.gaussian_matrix(dim);
            let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(dim);
            let mut ok = true;
            for j in 0..dim {
                let mut v: Vec<Scalar> = (0..dim).map(|i| g[(i, j)]).collect();
                for _ in 0..2 {
                    for c in &cols {
                        let proj = c.iter().zip(&v).fold(ZERO, |acc, (a, b)| acc + a.conj() * b);
                        for (x, y) in v.iter_mut().zip(c) {
                            *x -= proj * y;
                        }
                    }
                }
                let n = vec_norm(&v);
                if n < 1e-8 {
                    ok = false;
                    break;
                }
                cols.push(v.iter().map(|x| x / n).collect());
            }
            if ok {
                let mut u = Matrix::zeros(dim);
                for (j, c) in cols.iter().enumerate() {
                    for (i, x) in c.iter().enumerate() {
                        u[(i, j)] = *x;
                    }
                }
                return u;
            }
        }
    }

    /// Real values uniform in `[lo, hi)`.
    pub fn reals(&mut self, n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n).map(|_| self.uniform_in(lo, hi)).collect()
    }

    /// Hermitian pair `u·diag(r₁)·u*`, `u·diag(r₂)·u*` with a shared unitary `u`.
    pub fn commuting_hermitian_pair(&mut self, dim: usize) -> (Matrix, Matrix) {
        let r1 = self.reals(dim, -2.0, 2.0);
        let r2 = self.reals(dim, -2.0, 2.0);
        self.conjugated_pair(&r1, &r2)
    }

    /// `u·diag(r₁)·u*`, `u·diag(r₂)·u*` for given diagonals.
    pub fn conjugated_pair(&mut self, r1: &[f64], r2: &[f64]) -> (Matrix, Matrix) {
        let u = self.unitary(r1.len());
        let ut = u.adjoint();
        let a = u.mul(&Matrix::from_real_diagonal(r1)).mul(&ut).hermitian_part();
        let b = u.mul(&Matrix::from_real_diagonal(r2)).mul(&ut).hermitian_part();
        (a, b)
    }
}

/// Commuting Hermitian pair built from one seed.
pub fn simultaneously_diagonal_pair(dim: usize, seed: u64) -> (Matrix, Matrix) {
    SeededRng::new(seed).commuting_hermitian_pair(dim)
}
