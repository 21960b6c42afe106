//! Lifetime laws of the extremes of a dependent heterogeneous sample.
//!
//! A `SystemModel` is a baseline lifetime law, a vector of positive odds
//! ratios (one per component), and an Archimedean generator coupling the
//! components. It fully determines:
//!
//! * the series-system survival `phi(sum_i phi_inv(S_ai(t)))`,
//! * the parallel-system cdf `phi(sum_i phi_inv(F_ai(t)))`,
//! * their hazard / reversed-hazard rates in closed form,
//! * the shock variants where each lifetime is multiplied by an independent
//!   Bernoulli indicator (an atom at zero of mass `1 - prod p_i`).
//!
//! Sums over components are accumulated in ascending order so evaluation is
//! invariant under permutations of the odds-ratio vector.

use serde::{Deserialize, Serialize};

use crate::baseline::BaselineDist;
use crate::error::{Error, Result};
use crate::generator::{ArchimedeanGenerator, GeneratorSpec};
use crate::grid::GridSpec;
use crate::po;

/// Hazard/reversed-hazard evaluation refuses to divide by anything smaller
/// than this (saturation guard near total failure/certainty).
pub const SATURATION_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SystemModelJson")]
pub struct SystemModel {
    pub baseline: BaselineDist,
    pub alphas: Vec<f64>,
    pub generator: GeneratorSpec,
}

#[derive(Serialize, Deserialize)]
struct SystemModelJson {
    baseline: BaselineDist,
    alphas: Vec<f64>,
    generator: GeneratorSpec,
}

impl TryFrom<SystemModelJson> for SystemModel {
    type Error = Error;
    fn try_from(j: SystemModelJson) -> Result<Self> {
        SystemModel::new(j.baseline, j.alphas, j.generator)
    }
}

impl SystemModel {
    pub fn new(baseline: BaselineDist, alphas: Vec<f64>, generator: GeneratorSpec) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::InvalidModel(format!(
                "a system needs at least 2 components, got {}",
                alphas.len()
            )));
        }
        if let Some(&bad) = alphas.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
            return Err(Error::InvalidModel(format!("odds ratios must be positive, got {bad}")));
        }
        Ok(SystemModel { baseline, alphas, generator })
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    /// Marginal survivals of every component at `t`.
    fn marginal_survivals(&self, t: f64) -> Vec<f64> {
        let s = self.baseline.survival(t);
        self.alphas.iter().map(|&a| po::po_survival(s, a)).collect()
    }

    /// Marginal cdfs of every component at `t`.
    fn marginal_cdfs(&self, t: f64) -> Vec<f64> {
        let s = self.baseline.survival(t);
        self.alphas.iter().map(|&a| po::po_cdf(s, a)).collect()
    }

    /// Survival of the series system (the minimum lifetime).
    pub fn series_survival(&self, t: f64) -> f64 {
        let mut us = self.marginal_survivals(t);
        if us.iter().any(|&u| u <= 0.0) {
            return 0.0;
        }
        sort_ascending(&mut us);
        self.generator.phi_of_inv_sum(&us)
    }

    /// Cdf of the parallel system (the maximum lifetime).
    pub fn parallel_cdf(&self, t: f64) -> f64 {
        let mut us = self.marginal_cdfs(t);
        if us.iter().any(|&u| u <= 0.0) {
            return 0.0;
        }
        sort_ascending(&mut us);
        self.generator.phi_of_inv_sum(&us)
    }

    /// Hazard rate of the series system:
    /// `r(t) * phi'(S)/phi(S) * sum_i phi_inv'(S_ai) S_ai / (1 - (1-a_i) S)`
    /// with `S` the generator-space sum and `phi_inv'(u) = 1/phi'(phi_inv(u))`.
    pub fn series_hazard(&self, t: f64) -> Result<f64> {
        let sb = self.baseline.survival(t);
        let r = self.baseline.hazard(t);
        let us = self.marginal_survivals(t);
        self.extreme_rate(&us, sb, r, RateKind::SeriesHazard, t)
    }

    /// Reversed hazard rate of the parallel system:
    /// `rr(t) * phi'(S)/phi(S) * sum_i phi_inv'(F_ai) a_i F_ai / (1 - (1-a_i) S)`.
    pub fn parallel_reversed_hazard(&self, t: f64) -> Result<f64> {
        let sb = self.baseline.survival(t);
        let rr = self.baseline.reversed_hazard(t);
        let us = self.marginal_cdfs(t);
        self.extreme_rate(&us, sb, rr, RateKind::ParallelReversedHazard, t)
    }

    fn extreme_rate(
        &self,
        us: &[f64],
        sb: f64,
        base_rate: f64,
        kind: RateKind,
        t: f64,
    ) -> Result<f64> {
        let label = kind.label();
        if us.iter().any(|&u| u <= SATURATION_FLOOR) {
            return Err(Error::Domain(format!(
                "{label} saturated at t={t}: a marginal probability underflowed"
            )));
        }
        let g = &self.generator;
        let mut sum_args: Vec<f64> = Vec::with_capacity(us.len());
        for &u in us {
            let v = g.phi_inv_raw(u);
            if !v.is_finite() {
                return Err(Error::Domain(format!(
                    "{label} not representable at t={t}: generator argument overflowed"
                )));
            }
            sum_args.push(v);
        }
        sort_ascending(&mut sum_args);
        let total: f64 = sum_args.iter().sum();
        let phi_total = g.phi(total);
        if phi_total <= SATURATION_FLOOR {
            return Err(Error::Domain(format!("{label} saturated at t={t}")));
        }
        let log_deriv = g.phi_prime(total) / phi_total;
        let mut terms: Vec<f64> = Vec::with_capacity(us.len());
        for (&u, &a) in us.iter().zip(&self.alphas) {
            let dphi = g.phi_prime(g.phi_inv_raw(u));
            if dphi == 0.0 || !dphi.is_finite() {
                return Err(Error::Domain(format!(
                    "{label} not representable at t={t}: generator derivative degenerate"
                )));
            }
            let denom = 1.0 - (1.0 - a) * sb;
            let numer = match kind {
                RateKind::SeriesHazard => u,
                RateKind::ParallelReversedHazard => a * u,
            };
            terms.push(numer / (dphi * denom));
        }
        sort_ascending(&mut terms);
        let rate = base_rate * log_deriv * terms.iter().sum::<f64>();
        if !rate.is_finite() {
            return Err(Error::Domain(format!("{label} overflowed at t={t}")));
        }
        Ok(rate.max(0.0))
    }

    /// Default comparison grid: log-spaced points spanning the central 99.9%
    /// of the baseline distribution.
    pub fn comparison_grid(&self, count: usize) -> GridSpec {
        let lo = self.baseline.quantile(0.0005);
        let hi = self.baseline.quantile(0.9995);
        GridSpec::new(lo, hi, count).expect("baseline quantiles give a valid grid")
    }
}

#[derive(Clone, Copy)]
enum RateKind {
    SeriesHazard,
    ParallelReversedHazard,
}

impl RateKind {
    fn label(self) -> &'static str {
        match self {
            RateKind::SeriesHazard => "series hazard",
            RateKind::ParallelReversedHazard => "parallel reversed hazard",
        }
    }
}

fn sort_ascending(xs: &mut [f64]) {
    xs.sort_by(|a, b| a.partial_cmp(b).expect("no NaN in component sums"));
}

/// The statistic `I1(u) = [phi'(sum u)/phi(sum u)] * sum_i
/// [phi(u_i)/phi'(u_i)] (1 - phi(u_i))`, the generator-space form of the
/// series hazard: `series_hazard(t) = r(t)/F(t) * I1(phi_inv(S_a1(t)), ...)`.
pub fn i1_statistic<G: ArchimedeanGenerator>(g: &G, us: &[f64]) -> Result<f64> {
    if us.iter().any(|&u| u < 0.0) {
        return Err(Error::Domain("I1 requires nonnegative arguments".into()));
    }
    let total: f64 = us.iter().sum();
    let phi_total = g.phi(total);
    if phi_total <= 0.0 {
        return Err(Error::Domain("I1 undefined: phi of the total underflowed".into()));
    }
    let mut terms = Vec::with_capacity(us.len());
    for &u in us {
        let dphi = g.phi_prime(u);
        if dphi == 0.0 {
            return Err(Error::Domain(format!("I1 undefined: phi'({u}) = 0")));
        }
        let p = g.phi(u);
        terms.push(p / dphi * (1.0 - p));
    }
    sort_ascending(&mut terms);
    Ok(g.phi_prime(total) / phi_total * terms.iter().sum::<f64>())
}

/// A system whose components are subjected to instantaneous random shocks:
/// component `i` survives its shock with probability `probs[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShockedSystem {
    pub system: SystemModel,
    pub probs: Vec<f64>,
}

impl ShockedSystem {
    pub fn new(system: SystemModel, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != system.n() {
            return Err(Error::LengthMismatch(probs.len(), system.n()));
        }
        if let Some(&bad) = probs.iter().find(|p| !(**p > 0.0 && **p <= 1.0)) {
            return Err(Error::InvalidModel(format!(
                "shock survival probabilities must lie in (0, 1], got {bad}"
            )));
        }
        Ok(ShockedSystem { system, probs })
    }

    pub fn prob_product(&self) -> f64 {
        self.probs.iter().product()
    }

    /// Survival of the shocked series system for `t >= 0`:
    /// `prod p_i * series_survival(t)`. The distribution has an atom of mass
    /// `1 - prod p_i` at zero; this is the right-continuous survival curve.
    pub fn series_survival(&self, t: f64) -> f64 {
        self.prob_product() * self.system.series_survival(t)
    }
}
