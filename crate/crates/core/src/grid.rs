use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A log-spaced evaluation grid over `(lo, hi]`.
///
/// Shape checks are falsifiers, not proofs: they evaluate a property on a
/// finite grid and report violations. Log spacing concentrates points near
/// zero where generator curvature is largest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || hi <= lo {
            return Err(Error::InvalidModel(format!(
                "grid bounds must satisfy 0 < lo < hi, got [{lo}, {hi}]"
            )));
        }
        if count < 2 {
            return Err(Error::DegenerateGrid { need: 2, got: count });
        }
        Ok(GridSpec { lo, hi, count })
    }

    /// Grid points, log-spaced, endpoint inclusive.
    pub fn log_points(&self) -> Vec<f64> {
        let (a, b) = (self.lo.ln(), self.hi.ln());
        let n = self.count;
        (0..n)
            .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
            .collect()
    }

    /// Linearly spaced points, endpoint inclusive.
    pub fn linear_points(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    pub fn describe(&self) -> String {
        format!("log-spaced ({:.3e}, {:.3e}] x {}", self.lo, self.hi, self.count)
    }
}
