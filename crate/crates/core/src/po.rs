//! The proportional-odds transform of a baseline lifetime.
//!
//! A component with odds ratio `alpha` has survival
//! `alpha * S(t) / (1 - (1 - alpha) * S(t))` where `S` is the baseline
//! survival: the odds of surviving past `t` scale by `alpha`. Odds ratios
//! compose multiplicatively (Marshall–Olkin closure), and the hazard ratio
//! against the baseline tends to one in the tail.

use serde::{Deserialize, Serialize};

use crate::baseline::BaselineDist;
use crate::error::{Error, Result};

/// One proportional-odds component: a baseline plus an odds ratio.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct POComponent {
    pub baseline: BaselineDist,
    pub alpha: f64,
}

impl POComponent {
    pub fn new(baseline: BaselineDist, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidModel(format!("odds ratio must be positive, got {alpha}")));
        }
        Ok(POComponent { baseline, alpha })
    }

    pub fn survival(&self, t: f64) -> f64 {
        po_survival(self.baseline.survival(t), self.alpha)
    }

    pub fn cdf(&self, t: f64) -> f64 {
        po_cdf(self.baseline.survival(t), self.alpha)
    }

    pub fn density(&self, t: f64) -> f64 {
        po_density(self.baseline.survival(t), self.baseline.density(t), self.alpha)
    }

    pub fn hazard(&self, t: f64) -> Result<f64> {
        let sb = self.baseline.survival(t);
        if po_survival(sb, self.alpha) <= 0.0 {
            return Err(Error::Domain(format!("hazard undefined at t={t}: survival is zero")));
        }
        Ok(po_hazard(sb, self.baseline.hazard(t), self.alpha))
    }

    pub fn reversed_hazard(&self, t: f64) -> Result<f64> {
        let sb = self.baseline.survival(t);
        let cdf = po_cdf(sb, self.alpha);
        if cdf <= 0.0 {
            return Err(Error::Domain(format!("reversed hazard undefined at t={t}: cdf is zero")));
        }
        Ok(po_density(sb, self.baseline.density(t), self.alpha) / cdf)
    }

    /// The `t` at which this component's survival equals `u`.
    pub fn survival_inverse(&self, u: f64) -> f64 {
        self.baseline.survival_inverse(po_survival_inverse(u, self.alpha))
    }
}

/// Transformed survival `alpha s / (1 - (1 - alpha) s)` from baseline
/// survival `s`.
pub fn po_survival(s: f64, alpha: f64) -> f64 {
    let v = alpha * s / (1.0 - (1.0 - alpha) * s);
    v.clamp(0.0, 1.0)
}

/// Transformed cdf `(1 - s) / (1 - (1 - alpha) s)`.
pub fn po_cdf(s: f64, alpha: f64) -> f64 {
    ((1.0 - s) / (1.0 - (1.0 - alpha) * s)).clamp(0.0, 1.0)
}

/// Transformed density `alpha f / (1 - (1 - alpha) s)^2` from baseline
/// survival `s` and baseline density `f`.
pub fn po_density(s: f64, f: f64, alpha: f64) -> f64 {
    let d = 1.0 - (1.0 - alpha) * s;
    alpha * f / (d * d)
}

/// Transformed hazard `r / (1 - (1 - alpha) s)` from baseline hazard `r`.
pub fn po_hazard(s: f64, r: f64, alpha: f64) -> f64 {
    r / (1.0 - (1.0 - alpha) * s)
}

/// Baseline survival that maps to transformed survival `u`:
/// the inverse of [`po_survival`] in `s`.
pub fn po_survival_inverse(u: f64, alpha: f64) -> f64 {
    (u / (alpha + (1.0 - alpha) * u)).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> BaselineDist {
        BaselineDist::weibull(1.0, 1.5).unwrap()
    }

    #[test]
    fn alpha_one_is_identity() {
        assert_eq!(po_survival(0.7, 1.0), 0.7);
        let c = POComponent::new(base(), 1.0).unwrap();
        for t in [0.2, 1.0, 2.5] {
            assert_eq!(c.survival(t), c.baseline.survival(t));
            assert!((c.hazard(t).unwrap() - c.baseline.hazard(t)).abs() < 1e-15);
        }
    }

    #[test]
    fn hand_values() {
        assert!((po_survival(0.5, 2.0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((po_cdf(0.5, 2.0) - 1.0 / 3.0).abs() < 1e-15);
        // Weibull(1, 1.5) at t=1: r = 1.5, s = e^-1.
        let c = POComponent::new(base(), 2.0).unwrap();
        let expect = 1.5 / (1.0 + (-1.0_f64).exp());
        assert!((c.hazard(1.0).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn odds_ratios_multiply() {
        // Applying alpha then alpha' equals alpha * alpha' applied once.
        for s in [0.1, 0.35, 0.8, 0.99] {
            let twice = po_survival(po_survival(s, 3.0), 2.0);
            let once = po_survival(s, 6.0);
            assert!((twice - once).abs() <= 1e-12 * once, "s={s}");
        }
    }

    #[test]
    fn survival_cdf_sum_to_one() {
        let c = POComponent::new(base(), 0.4).unwrap();
        for i in 0..20 {
            let t = 0.1 + i as f64 * 0.2;
            assert!((c.survival(t) + c.cdf(t) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hazard_matches_log_survival_derivative() {
        for alpha in [0.3, 1.0, 2.7] {
            let c = POComponent::new(base(), alpha).unwrap();
            for &t in &[0.3, 1.0, 2.0] {
                let h = 1e-6 * t;
                let fd = -(c.survival(t + h).ln() - c.survival(t - h).ln()) / (2.0 * h);
                let an = c.hazard(t).unwrap();
                assert!((fd - an).abs() <= 1e-6 * an, "alpha={alpha}, t={t}");
            }
        }
    }

    #[test]
    fn monotone_in_alpha() {
        let b = base();
        for &t in &[0.2, 1.0, 3.0] {
            let s = b.survival(t);
            assert!(po_survival(s, 0.5) <= s);
            assert!(po_survival(s, 2.0) >= s);
            assert!(po_survival(s, 2.0) <= po_survival(s, 3.0));
        }
    }

    #[test]
    fn hazard_ratio_tends_to_one() {
        let c = POComponent::new(base(), 2.0).unwrap();
        let ratio_near = c.hazard(0.5).unwrap() / c.baseline.hazard(0.5);
        let ratio_far = c.hazard(8.0).unwrap() / c.baseline.hazard(8.0);
        assert!((ratio_far - 1.0).abs() < (ratio_near - 1.0).abs());
        assert!((ratio_far - 1.0).abs() < 1e-3);
    }

    #[test]
    fn survival_inverse_roundtrip() {
        let c = POComponent::new(base(), 2.7).unwrap();
        for u in [0.9, 0.5, 0.1, 0.01] {
            let t = c.survival_inverse(u);
            assert!((c.survival(t) - u).abs() < 1e-10, "u={u}");
        }
    }

    #[test]
    fn marshall_olkin_closure_via_components() {
        // PO of a PO baseline: compose transform twice vs product alpha.
        let b = base();
        for &t in &[0.2, 0.9, 2.2] {
            let s = b.survival(t);
            let lhs = po_survival(po_survival(s, 1.7), 2.2);
            let rhs = po_survival(s, 1.7 * 2.2);
            assert!((lhs - rhs).abs() <= 1e-12 * rhs);
        }
    }
}
