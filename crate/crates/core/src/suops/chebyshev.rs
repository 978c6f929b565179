//! Shifted Chebyshev approximants of the square root.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::ordered::StarAlgebra;
use crate::scalar::Scalar;

/// `Σ cₖ Tₖ(x)` with `x = (2t − lo − hi)/(hi − lo)` on `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevSeries {
    pub lo: f64,
    pub hi: f64,
    pub coeffs: Vec<f64>,
}

impl ChebyshevSeries {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn to_unit(&self, t: f64) -> f64 {
        (2.0 * t - self.lo - self.hi) / (self.hi - self.lo)
    }

    pub fn eval(&self, t: f64) -> f64 {
        let x = self.to_unit(t);
        let (mut b1, mut b2) = (0.0, 0.0);
        for c in self.coeffs.iter().skip(1).rev() {
            let b0 = c + 2.0 * x * b1 - b2;
            b2 = b1;
            b1 = b0;
        }
        self.coeffs.first().copied().unwrap_or(0.0) + x * b1 - b2
    }

    /// Clenshaw recurrence on an algebra element.
    pub fn eval_element<A: StarAlgebra>(&self, alg: &A, a: &A::Element) -> A::Element {
        let w = self.hi - self.lo;
        let x = alg.add_scalar(&alg.scale_real(2.0 / w, a), Scalar::new(-(self.hi + self.lo) / w, 0.0));
        let mut b1: Option<A::Element> = None;
        let mut b2: Option<A::Element> = None;
        for c in self.coeffs.iter().skip(1).rev() {
            let mut b0 = alg.scalar(Scalar::new(*c, 0.0));
            if let Some(p) = &b1 {
                b0 = alg.add(&b0, &alg.scale_real(2.0, &alg.mul(&x, p)));
            }
            if let Some(p) = &b2 {
                b0 = alg.sub(&b0, p);
            }
            b2 = b1;
            b1 = Some(b0);
        }
        let mut out = alg.scalar(Scalar::new(self.coeffs.first().copied().unwrap_or(0.0), 0.0));
        if let Some(p) = &b1 {
            out = alg.add(&out, &alg.mul(&x, p));
        }
        if let Some(p) = &b2 {
            out = alg.sub(&out, p);
        }
        out
    }
}

/// Truncated Chebyshev expansion of `√t` on `[0, u]`.
///
/// On `[−1, 1]`, `√((1+x)/2) = 2/π + (4/π) Σ (−1)^(k+1) Tₖ(x)/(4k²−1)`; the
/// truncation error at degree `d` is at most `2/(π(2d+1))`, attained at `t = 0`.
pub fn sqrt_series(u: f64, degree: usize) -> ChebyshevSeries {
    let s = u.sqrt();
    let pi = core::f64::consts::PI;
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(s * 2.0 / pi);
    for k in 1..=degree {
        let kf = k as f64;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        coeffs.push(s * sign * 4.0 / (pi * (4.0 * kf * kf - 1.0)));
    }
    ChebyshevSeries { lo: 0.0, hi: u, coeffs }
}

/// Worst-case error of [`sqrt_series`] on `[0, u]`.
pub fn sqrt_series_error_bound(u: f64, degree: usize) -> f64 {
    u.sqrt() * 2.0 / (core::f64::consts::PI * (2.0 * degree as f64 + 1.0))
}

/// `pₙ = pₙ′ + δ` with `δ = 1/(4n(√u+1))` and `|pₙ′(t) − √t| ≤ δ` on `[0, u]`,
/// so that `0 ≤ pₙ` and `0 ≤ qₙ = pₙ² − t ≤ 1/n` there.
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtApproximant {
    pub n: u32,
    pub u: f64,
    pub shift: f64,
    /// Measured sup error of `pₙ′` on the verification grid.
    pub sup_error: f64,
    pub series: ChebyshevSeries,
}

const GRID: usize = 256;

impl SqrtApproximant {
    /// Smallest degree `8n·2ʲ` whose measured error is within the shift, or
    /// `None` if that degree exceeds `max_degree`.
    pub fn build(n: u32, u: f64, max_degree: usize) -> Option<Self> {
        if n == 0 || !(u > 0.0) || !u.is_finite() {
            return None;
        }
        let shift = 1.0 / (4.0 * n as f64 * (u.sqrt() + 1.0));
        let mut degree = 8 * n as usize;
        while degree <= max_degree {
            if sqrt_series_error_bound(u, degree) <= shift {
                let series = sqrt_series(u, degree);
                let sup_error = measured_error(&series, u);
                if sup_error <= shift {
                    return Some(SqrtApproximant {
                        n,
                        u,
                        shift,
                        sup_error,
                        series,
                    });
                }
            }
            degree *= 2;
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.series.degree()
    }

    /// `pₙ(t)`.
    pub fn p(&self, t: f64) -> f64 {
        self.series.eval(t) + self.shift
    }

    /// `qₙ(t) = pₙ(t)² − t`.
    pub fn q(&self, t: f64) -> f64 {
        let p = self.p(t);
        p * p - t
    }

    /// `pₙ(a)`.
    pub fn apply<A: StarAlgebra>(&self, alg: &A, a: &A::Element) -> A::Element {
        let v = self.series.eval_element(alg, a);
        alg.add_scalar(&v, Scalar::new(self.shift, 0.0))
    }
}

/// Max of `|p(t) − √t|` over `t = 0` and a cosine-spaced grid of `[0, u]`.
fn measured_error(series: &ChebyshevSeries, u: f64) -> f64 {
    let pi = core::f64::consts::PI;
    let mut worst = series.eval(0.0).abs();
    for j in 0..=GRID {
        let theta = pi * j as f64 / GRID as f64;
        let t = 0.5 * u * (1.0 - theta.cos());
        worst = worst.max((series.eval(t) - t.max(0.0).sqrt()).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_bound_is_attained_at_zero() {
        for &u in &[1.0, 2.0, 7.5, 100.0] {
            for &d in &[8usize, 33, 200] {
                let s = sqrt_series(u, d);
                let bound = sqrt_series_error_bound(u, d);
                assert!((s.eval(0.0) - bound).abs() < 1e-12 * (1.0 + bound));
                let mut worst: f64 = 0.0;
                for j in 0..=4000 {
                    let t = u * j as f64 / 4000.0;
                    worst = worst.max((s.eval(t) - t.sqrt()).abs());
                }
                assert!(worst <= bound * (1.0 + 1e-9));
            }
        }
    }

    #[test]
    fn approximant_bounds_on_dense_grid() {
        for &u in &[1.0, 3.0, 40.0] {
            for n in [1u32, 2, 4, 8, 16, 32, 64] {
                let p = SqrtApproximant::build(n, u, 1 << 16).unwrap();
                for j in 0..=2000 {
                    let t = u * (j as f64 / 2000.0).powi(2);
                    assert!(p.p(t) >= 0.0);
                    let q = p.q(t);
                    assert!(q >= -1e-13 && q <= 1.0 / n as f64, "n={n} t={t} q={q}");
                }
            }
        }
    }

    #[test]
    fn degree_cap_is_respected() {
        assert!(SqrtApproximant::build(64, 1e6, 4096).is_none());
        let p = SqrtApproximant::build(1, 2.0, 4096).unwrap();
        assert_eq!(p.degree(), 8);
    }
}
