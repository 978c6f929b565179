//! Dense complex square matrices and a Hermitian eigensolver.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

#[allow(unused_imports)]
use num_traits::Float;

use crate::scalar::{Scalar, ONE, ZERO};

/// Dense square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: &[Scalar]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d: Vec<Scalar> = diag.iter().map(|x| Scalar::new(*x, 0.0)).collect();
        Self::from_diagonal(&d)
    }

    /// Builds a matrix from row-major data; `None` if the length is not a square.
    pub fn from_row_major(dim: usize, data: Vec<Scalar>) -> Option<Self> {
        (data.len() == dim * dim).then_some(Matrix { dim, data })
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(Matrix {
            dim,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Option<Self> {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|x| Scalar::new(*x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self + s·𝟙`.
    pub fn add_identity(&self, s: Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            m[(i, i)] += s;
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, b) in row.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Matrix { dim: n, data: out }
    }

    pub fn adjoint(&self) -> Matrix {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    /// `(self + self*) / 2`.
    pub fn hermitian_part(&self) -> Matrix {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = (self.data[i * n + j] + self.data[j * n + i].conj()) * 0.5;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                self.data[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .fold(ZERO, |acc, (a, x)| acc + a * x)
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).fold(ZERO, |acc, i| acc + self[(i, i)])
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, a| m.max(a.norm()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|a| a.re.is_finite() && a.im.is_finite())
    }

    /// Leading principal `k × k` block.
    pub fn leading_block(&self, k: usize) -> Matrix {
        let k = k.min(self.dim);
        let mut out = Self::zeros(k);
        for i in 0..k {
            for j in 0..k {
                out[(i, j)] = self[(i, j)];
            }
        }
        out
    }

    /// Embeds `self` as the leading block of a `dim × dim` zero matrix.
    pub fn embed(&self, dim: usize) -> Matrix {
        let mut out = Self::zeros(dim);
        for i in 0..self.dim.min(dim) {
            for j in 0..self.dim.min(dim) {
                out[(i, j)] = self[(i, j)];
            }
        }
        out
    }

    /// Eigen-decomposition of the Hermitian part.
    pub fn eigh(&self) -> HermitianEigen {
        jacobi(self.hermitian_part(), true)
    }

    /// Ascending eigenvalues of the Hermitian part.
    pub fn eigvalsh(&self) -> Vec<f64> {
        jacobi(self.hermitian_part(), false).values
    }

    /// Largest singular value.
    pub fn spectral_norm(&self) -> f64 {
        let g = self.adjoint().mul(self);
        let top = g.eigvalsh().last().copied().unwrap_or(0.0);
        top.max(0.0).sqrt()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.dim + j]
    }
}

/// Eigenvalues in ascending order with matching unit eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl HermitianEigen {
    /// `V · diag(f(λ)) · V*`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let n = self.values.len();
        let v = &self.vectors;
        let fv: Vec<f64> = self.values.iter().map(|x| f(*x)).collect();
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += v[(i, k)] * fv[k] * v[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn column(&self, k: usize) -> Vec<Scalar> {
        (0..self.values.len()).map(|i| self.vectors[(i, k)]).collect()
    }
}

const MAX_SWEEPS: usize = 64;

fn jacobi(mut a: Matrix, want_vectors: bool) -> HermitianEigen {
    let n = a.dim;
    let mut v = if want_vectors {
        Matrix::identity(n)
    } else {
        Matrix::zeros(0)
    };
    let total = a.frobenius();
    if n > 1 && total > 0.0 && total.is_finite() {
        let target = (f64::EPSILON * total) * (f64::EPSILON * total);
        for _ in 0..MAX_SWEEPS {
            let mut off = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    off += a[(p, q)].norm_sqr();
                }
            }
            if off <= target {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, p, q, want_vectors);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = if want_vectors {
        let mut sorted = Matrix::zeros(n);
        for (new, &old) in order.iter().enumerate() {
            for i in 0..n {
                sorted[(i, new)] = v[(i, old)];
            }
        }
        sorted
    } else {
        v
    };
    HermitianEigen { values, vectors }
}

fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize, want_vectors: bool) {
    let g = a[(p, q)];
    let r = g.norm();
    if r == 0.0 {
        return;
    }
    let alpha = a[(p, p)].re;
    let beta = a[(q, q)].re;
    if r < f64::EPSILON * 1e-3 * (alpha.abs() + beta.abs()) {
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }
    let phase = g / r;
    let tau = (beta - alpha) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let ph_conj = phase.conj();
    // U = [[c, s], [-s·ē, c·ē]] on coordinates (p, q); A ← U* A U.
    let n = a.dim;
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * ph_conj * s;
        a[(k, q)] = akp * s + akq * ph_conj * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Scalar::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Scalar::new(a[(q, q)].re, 0.0);
    if want_vectors {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * c - vkq * ph_conj * s;
            v[(k, q)] = vkp * s + vkq * ph_conj * c;
        }
    }
}

/// Euclidean inner product `⟨x, y⟩`, antilinear in `x`.
pub fn inner(x: &[Scalar], y: &[Scalar]) -> Scalar {
    x.iter().zip(y).fold(ZERO, |acc, (a, b)| acc + a.conj() * b)
}

pub fn vec_norm(x: &[Scalar]) -> f64 {
    x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}
