use crate::error::{Error, Result};

/// Numerical slack used by positivity, equality and commutation tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TolerancePolicy {
    /// Relative slack of the positivity oracle.
    pub tol_pos: f64,
    /// Relative slack for equality and convergence tests.
    pub tol_eq: f64,
    /// Relative slack for commutators.
    pub tol_comm: f64,
    /// Iteration cap for doubling loops.
    pub max_iter: usize,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy {
            tol_pos: 1e-12,
            tol_eq: 1e-10,
            tol_comm: 1e-9,
            max_iter: 64,
        }
    }
}

impl TolerancePolicy {
    pub fn validate(&self) -> Result<()> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        if !ok(self.tol_pos) || !ok(self.tol_comm) || !ok(self.tol_eq) || self.max_iter == 0 {
            return Err(Error::InvalidInput("tolerances must be positive".into()));
        }
        if self.tol_eq < f64::EPSILON {
            return Err(Error::InvalidInput("tol_eq below machine epsilon".into()));
        }
        Ok(())
    }

    /// Same policy with `tol_eq` replaced.
    pub fn with_tol_eq(mut self, tol_eq: f64) -> Self {
        self.tol_eq = tol_eq;
        self
    }
}
