use num_complex::Complex64;

pub type Scalar = Complex64;

pub const ZERO: Scalar = Scalar::new(0.0, 0.0);
pub const ONE: Scalar = Scalar::new(1.0, 0.0);
pub const I: Scalar = Scalar::new(0.0, 1.0);

#[inline]
pub fn real(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

#[inline]
pub fn is_finite(s: Scalar) -> bool {
    s.re.is_finite() && s.im.is_finite()
}
