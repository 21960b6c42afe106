//! Baseline lifetime distributions.
//!
//! Shipped families: Weibull (covers every counterexample baseline),
//! exponential, and a tabulated-survival adapter backed by a monotone cubic
//! (Fritsch–Carlson) interpolant. Densities are closed-form for
//! Weibull/exponential; the tabulated adapter differentiates its interpolant,
//! so hazard identities hold for it by construction.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(try_from = "BaselineJson")]
pub enum BaselineDist {
    /// Survival `exp(-(lambda t)^k)`, `lambda > 0`, `k > 0`.
    Weibull { lambda: f64, k: f64 },
    /// Survival `exp(-rate * t)`, `rate > 0`.
    Exponential { rate: f64 },
    /// Monotone-cubic interpolated survival table (API-only; no JSON form).
    Tabulated(TabulatedSurvival),
}

impl Serialize for BaselineDist {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut params = BTreeMap::new();
        let family = match self {
            BaselineDist::Weibull { lambda, k } => {
                params.insert("lambda".to_string(), *lambda);
                params.insert("k".to_string(), *k);
                "weibull"
            }
            BaselineDist::Exponential { rate } => {
                params.insert("rate".to_string(), *rate);
                "exponential"
            }
            BaselineDist::Tabulated(_) => {
                return Err(serde::ser::Error::custom(
                    "tabulated baselines have no JSON scenario representation",
                ))
            }
        };
        BaselineJson { family: family.to_string(), params }.serialize(s)
    }
}

#[derive(Serialize, Deserialize)]
struct BaselineJson {
    family: String,
    #[serde(default)]
    params: BTreeMap<String, f64>,
}

impl TryFrom<BaselineJson> for BaselineDist {
    type Error = Error;
    fn try_from(j: BaselineJson) -> Result<Self> {
        let get = |k: &str| {
            j.params.get(k).copied().ok_or_else(|| Error::InvalidModel(format!(
                "baseline `{}`: missing parameter `{k}`",
                j.family
            )))
        };
        match j.family.as_str() {
            "weibull" => BaselineDist::weibull(get("lambda")?, get("k")?),
            "exponential" => BaselineDist::exponential(get("rate")?),
            other => Err(Error::UnknownBaseline(other.to_string())),
        }
    }
}

impl BaselineDist {
    pub fn weibull(lambda: f64, k: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite() && k > 0.0 && k.is_finite()) {
            return Err(Error::InvalidModel(format!(
                "weibull requires lambda > 0 and k > 0, got lambda={lambda}, k={k}"
            )));
        }
        Ok(BaselineDist::Weibull { lambda, k })
    }

    pub fn exponential(rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate.is_finite()) {
            return Err(Error::InvalidModel(format!("exponential requires rate > 0, got {rate}")));
        }
        Ok(BaselineDist::Exponential { rate })
    }

    pub fn tabulated(ts: Vec<f64>, survivals: Vec<f64>) -> Result<Self> {
        Ok(BaselineDist::Tabulated(TabulatedSurvival::new(ts, survivals)?))
    }

    /// `P(X > t)`.
    pub fn survival(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 1.0;
        }
        match self {
            BaselineDist::Weibull { lambda, k } => (-(lambda * t).powf(*k)).exp(),
            BaselineDist::Exponential { rate } => (-rate * t).exp(),
            BaselineDist::Tabulated(tab) => tab.survival(t),
        }
    }

    pub fn cdf(&self, t: f64) -> f64 {
        1.0 - self.survival(t)
    }

    /// Lifetime density `-d/dt survival(t)`.
    pub fn density(&self, t: f64) -> f64 {
        if t < 0.0 {
            return 0.0;
        }
        match self {
            BaselineDist::Weibull { lambda, k } => {
                k * lambda * (lambda * t).powf(k - 1.0) * (-(lambda * t).powf(*k)).exp()
            }
            BaselineDist::Exponential { rate } => rate * (-rate * t).exp(),
            BaselineDist::Tabulated(tab) => tab.density(t),
        }
    }

    /// Hazard rate `density / survival`.
    pub fn hazard(&self, t: f64) -> f64 {
        match self {
            BaselineDist::Weibull { lambda, k } => k * lambda * (lambda * t).powf(k - 1.0),
            BaselineDist::Exponential { rate } => *rate,
            BaselineDist::Tabulated(tab) => tab.density(t) / tab.survival(t),
        }
    }

    /// Reversed hazard rate `density / cdf`, defined for `t` with cdf > 0.
    pub fn reversed_hazard(&self, t: f64) -> f64 {
        self.density(t) / self.cdf(t)
    }

    /// Quantile: the `t` with `cdf(t) = p`, `p` in `(0, 1)`.
    pub fn quantile(&self, p: f64) -> f64 {
        debug_assert!(p > 0.0 && p < 1.0);
        self.survival_inverse(1.0 - p)
    }

    /// Inverse survival: the `t` with `survival(t) = s`, `s` in `(0, 1]`.
    pub fn survival_inverse(&self, s: f64) -> f64 {
        debug_assert!(s > 0.0 && s <= 1.0);
        match self {
            BaselineDist::Weibull { lambda, k } => (-s.ln()).powf(1.0 / k) / lambda,
            BaselineDist::Exponential { rate } => -s.ln() / rate,
            BaselineDist::Tabulated(tab) => tab.survival_inverse(s),
        }
    }
}

/// Monotone cubic (PCHIP) interpolant of a decreasing survival table.
///
/// The table must start at `(0, 1)` and decrease strictly. Beyond the last
/// knot the survival continues as an exponential tail matched to the hazard
/// at the boundary, keeping density = -survival' everywhere.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedSurvival {
    ts: Vec<f64>,
    ss: Vec<f64>,
    slopes: Vec<f64>,
    tail_rate: f64,
}

impl TabulatedSurvival {
    pub fn new(ts: Vec<f64>, ss: Vec<f64>) -> Result<Self> {
        if ts.len() != ss.len() {
            return Err(Error::LengthMismatch(ts.len(), ss.len()));
        }
        if ts.len() < 3 {
            return Err(Error::InvalidModel("survival table needs at least 3 knots".into()));
        }
        if ts[0] != 0.0 || ss[0] != 1.0 {
            return Err(Error::InvalidModel("survival table must start at (0, 1)".into()));
        }
        for w in ts.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidModel("table abscissae must increase".into()));
            }
        }
        for w in ss.windows(2) {
            if w[1] >= w[0] {
                return Err(Error::InvalidModel("table survival must decrease strictly".into()));
            }
        }
        if *ss.last().unwrap() <= 0.0 {
            return Err(Error::InvalidModel("table survival must stay positive".into()));
        }
        let slopes = pchip_slopes(&ts, &ss);
        let n = ts.len();
        let tail_rate = -slopes[n - 1] / ss[n - 1];
        Ok(TabulatedSurvival { ts, ss, slopes, tail_rate })
    }

    fn segment(&self, t: f64) -> usize {
        match self.ts.binary_search_by(|x| x.partial_cmp(&t).unwrap()) {
            Ok(i) => i.min(self.ts.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.ts.len() - 2),
        }
    }

    pub fn survival(&self, t: f64) -> f64 {
        let n = self.ts.len();
        if t <= 0.0 {
            return 1.0;
        }
        if t >= self.ts[n - 1] {
            return self.ss[n - 1] * (-self.tail_rate * (t - self.ts[n - 1])).exp();
        }
        let i = self.segment(t);
        let h = self.ts[i + 1] - self.ts[i];
        let x = (t - self.ts[i]) / h;
        let (y0, y1) = (self.ss[i], self.ss[i + 1]);
        let (m0, m1) = (self.slopes[i] * h, self.slopes[i + 1] * h);
        let x2 = x * x;
        let x3 = x2 * x;
        (2.0 * x3 - 3.0 * x2 + 1.0) * y0
            + (x3 - 2.0 * x2 + x) * m0
            + (-2.0 * x3 + 3.0 * x2) * y1
            + (x3 - x2) * m1
    }

    pub fn density(&self, t: f64) -> f64 {
        let n = self.ts.len();
        if t < 0.0 {
            return 0.0;
        }
        if t >= self.ts[n - 1] {
            return self.tail_rate * self.survival(t);
        }
        let i = self.segment(t);
        let h = self.ts[i + 1] - self.ts[i];
        let x = (t - self.ts[i]) / h;
        let (y0, y1) = (self.ss[i], self.ss[i + 1]);
        let (m0, m1) = (self.slopes[i] * h, self.slopes[i + 1] * h);
        let x2 = x * x;
        let deriv = (6.0 * x2 - 6.0 * x) * y0
            + (3.0 * x2 - 4.0 * x + 1.0) * m0
            + (-6.0 * x2 + 6.0 * x) * y1
            + (3.0 * x2 - 2.0 * x) * m1;
        -deriv / h
    }

    pub fn survival_inverse(&self, s: f64) -> f64 {
        let n = self.ts.len();
        if s >= 1.0 {
            return 0.0;
        }
        let last = self.ss[n - 1];
        if s <= last {
            return self.ts[n - 1] + (last / s).ln() / self.tail_rate;
        }
        let (mut lo, mut hi) = (0.0, self.ts[n - 1]);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.survival(mid) > s {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-13 * hi.max(1.0) {
                break;
            }
        }
        0.5 * (lo + hi)
    }
}

/// Fritsch–Carlson monotone slopes.
fn pchip_slopes(ts: &[f64], ss: &[f64]) -> Vec<f64> {
    let n = ts.len();
    let h: Vec<f64> = ts.windows(2).map(|w| w[1] - w[0]).collect();
    let d: Vec<f64> = (0..n - 1).map(|i| (ss[i + 1] - ss[i]) / h[i]).collect();
    let mut m = vec![0.0; n];
    m[0] = endpoint_slope(h[0], h[1], d[0], d[1]);
    m[n - 1] = endpoint_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    for i in 1..n - 1 {
        if d[i - 1] * d[i] <= 0.0 {
            m[i] = 0.0;
        } else {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    m
}

fn endpoint_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
    let m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if m * d0 <= 0.0 {
        0.0
    } else if d0 * d1 <= 0.0 && m.abs() > 3.0 * d0.abs() {
        3.0 * d0
    } else {
        m
    }
}
