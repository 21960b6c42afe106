use serde::{Deserialize, Serialize};

/// Three-valued outcome of a numerical check.
///
/// Grid checks cannot prove an analytic property, so `Inconclusive` is an
/// honest verdict when the grid is unusable (e.g. a derivative vanished).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

/// A point (or tuple of points) at which a checked property fails, together
/// with the measured violation magnitude.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// The abscissae involved: one point for pointwise properties, a pair
    /// for monotonicity/superadditivity, a triple for curvature.
    pub points: Vec<f64>,
    /// How far past the tolerance the property is violated (positive).
    pub violation: f64,
}

/// Outcome of a numerical hypothesis check over a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub grid: String,
    pub tolerance: f64,
}

impl CheckReport {
    pub fn holds(grid: String, tolerance: f64) -> Self {
        CheckReport { verdict: Verdict::Holds, witnesses: Vec::new(), grid, tolerance }
    }

    pub fn fails(witnesses: Vec<Witness>, grid: String, tolerance: f64) -> Self {
        debug_assert!(!witnesses.is_empty());
        CheckReport { verdict: Verdict::Fails, witnesses, grid, tolerance }
    }

    pub fn inconclusive(grid: String, tolerance: f64) -> Self {
        CheckReport { verdict: Verdict::Inconclusive, witnesses: Vec::new(), grid, tolerance }
    }

    /// Build a report from collected witnesses: empty means the property held.
    pub fn from_witnesses(witnesses: Vec<Witness>, grid: String, tolerance: f64) -> Self {
        if witnesses.is_empty() {
            Self::holds(grid, tolerance)
        } else {
            Self::fails(witnesses, grid, tolerance)
        }
    }
}
