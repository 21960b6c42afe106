//! Monte Carlo sampling of dependent lifetime vectors, the independent
//! oracle for the analytic extreme-value laws.
//!
//! [`sample`] realizes the joint survival `phi(sum_i phi_inv(S_i(x_i)))`:
//! uniforms carrying the prescribed copula are generated and mapped through
//! the marginal survival inverses, so the empirical minimum validates the
//! series law. The parallel law lives under a different coupling — the joint
//! *cdf* of the form `phi(sum_i phi_inv(F_i(x_i)))` — which
//! [`sample_parallel`] realizes by mapping the same copula uniforms through
//! the marginal quantile (cdf-inverse) instead. One vector cannot satisfy
//! both forms at once except under independence.
//!
//! Copula uniforms come from one of three paths:
//!
//! * independence — iid uniforms;
//! * `clayton` — gamma-frailty mixture (any dimension);
//! * generic — conditional-distribution method using generator derivatives
//!   up to order `n - 1`, capped at `n = 4`. The two heavy-tailed families
//!   run the conditional ratios in log space.
//!
//! Randomness: each sample row draws from a `ChaCha8` stream seeded by a
//! SplitMix64 hash of `(seed, row_index)`, so output is reproducible and
//! independent of how rows are partitioned across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};

use crate::error::{Error, Result};
use crate::exec;
use crate::generator::{ArchimedeanGenerator, Family, GeneratorSpec};
use crate::po;
use crate::system::{ShockedSystem, SystemModel};

/// Bisection floor for conditional inversion.
const BISECT_FLOOR: f64 = 1e-12;
/// Bisection tolerance on the solved uniform.
const BISECT_TOL: f64 = 1e-10;
const BISECT_MAX_ITERS: usize = 100;

/// Largest dimension served by the generic conditional sampler; derivative
/// order grows with `n` and the catalog provides closed forms up to order 3.
pub const GENERIC_MAX_N: usize = 4;

/// A matrix of sampled lifetimes: rows are samples, columns are components.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    data: Vec<f64>,
    cols: usize,
    pub seed: u64,
}

impl SampleBatch {
    pub fn rows(&self) -> usize {
        self.data.len() / self.cols
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// CSV export with header `x1,...,xn`, 17 significant digits, `\n` line
    /// endings.
    pub fn write_csv<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        let header: Vec<String> = (1..=self.cols).map(|i| format!("x{i}")).collect();
        w.write_all(header.join(",").as_bytes())?;
        w.write_all(b"\n")?;
        for i in 0..self.rows() {
            let line: Vec<String> = self.row(i).iter().map(|v| format!("{v:.16e}")).collect();
            w.write_all(line.join(",").as_bytes())?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Min,
    Max,
}

/// Fraction of rows whose minimum exceeds `t` (`Min`) or whose maximum is at
/// most `t` (`Max`). `Min` validates the series survival, `Max` the parallel
/// cdf.
pub fn empirical_survival(batch: &SampleBatch, statistic: Statistic, t: f64) -> f64 {
    let mut hits = 0usize;
    for i in 0..batch.rows() {
        let row = batch.row(i);
        let ok = match statistic {
            Statistic::Min => row.iter().all(|&x| x > t),
            Statistic::Max => row.iter().all(|&x| x <= t),
        };
        if ok {
            hits += 1;
        }
    }
    hits as f64 / batch.rows() as f64
}

/// Marginal mapping applied to the copula uniforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MarginScale {
    /// `x_i = S_ai^{-1}(u_i)`: the joint survival is Archimedean (series law).
    Survival,
    /// `x_i = F_ai^{-1}(u_i)`: the joint cdf is Archimedean (parallel law).
    Cdf,
}

/// Draw `size` lifetime vectors whose joint survival function is the
/// Archimedean form; the empirical minimum validates the series law.
/// Parallel over rows with the default feature; identical output to
/// [`sample_seq`].
pub fn sample(m: &SystemModel, size: usize, seed: u64) -> Result<SampleBatch> {
    sample_impl(m, size, seed, MarginScale::Survival, false)
}

/// Draw vectors whose joint cdf is the Archimedean form; the empirical
/// maximum validates the parallel law.
pub fn sample_parallel(m: &SystemModel, size: usize, seed: u64) -> Result<SampleBatch> {
    sample_impl(m, size, seed, MarginScale::Cdf, false)
}

/// Sequential reference implementation of [`sample`].
pub fn sample_seq(m: &SystemModel, size: usize, seed: u64) -> Result<SampleBatch> {
    sample_impl(m, size, seed, MarginScale::Survival, true)
}

fn sample_impl(
    m: &SystemModel,
    size: usize,
    seed: u64,
    scale: MarginScale,
    sequential: bool,
) -> Result<SampleBatch> {
    validate_size(size)?;
    let kernel = row_kernel(m)?;
    let cols = m.n();
    let f = |i: usize| kernel.draw(m, seed, i, scale);
    let data: Vec<Vec<f64>> =
        if sequential { exec::map_indexed_seq(size, f) } else { exec::map_indexed(size, f) };
    Ok(SampleBatch { data: data.concat(), cols, seed })
}

/// Draw from a shocked system: each lifetime is multiplied by an independent
/// Bernoulli survival indicator.
pub fn sample_shocked(s: &ShockedSystem, size: usize, seed: u64) -> Result<SampleBatch> {
    validate_size(size)?;
    let kernel = row_kernel(&s.system)?;
    let cols = s.system.n();
    let probs = s.probs.clone();
    let data: Vec<Vec<f64>> = exec::map_indexed(size, |i| {
        let mut row = kernel.draw(&s.system, seed, i, MarginScale::Survival);
        let mut rng = row_rng(seed ^ 0x5b0c_3a1d_9e47_f221, i);
        for (x, &p) in row.iter_mut().zip(&probs) {
            if rng.random::<f64>() >= p {
                *x = 0.0;
            }
        }
        row
    });
    Ok(SampleBatch { data: data.concat(), cols, seed })
}

fn validate_size(size: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::Sampler("sample size must be positive".into()));
    }
    Ok(())
}

enum Kernel {
    Independence,
    ClaytonFrailty { a: f64 },
    Conditional,
}

impl Kernel {
    fn draw(&self, m: &SystemModel, seed: u64, index: usize, scale: MarginScale) -> Vec<f64> {
        let mut rng = row_rng(seed, index);
        let us = match self {
            Kernel::Independence => {
                (0..m.n()).map(|_| open_unit(&mut rng)).collect::<Vec<f64>>()
            }
            Kernel::ClaytonFrailty { a } => {
                let gamma = Gamma::new(1.0 / a, *a).expect("valid gamma parameters");
                let v: f64 = gamma.sample(&mut rng);
                (0..m.n())
                    .map(|_| {
                        let e = -open_unit(&mut rng).ln();
                        m.generator.phi(e / v)
                    })
                    .collect()
            }
            Kernel::Conditional => conditional_uniforms(&m.generator, m.n(), &mut rng),
        };
        us.iter()
            .zip(&m.alphas)
            .map(|(&u, &alpha)| {
                let s = match scale {
                    MarginScale::Survival => po::po_survival_inverse(u.max(1e-300), alpha),
                    // Baseline survival with this component's cdf equal to u.
                    MarginScale::Cdf => (1.0 - u) / (1.0 - (1.0 - alpha) * u),
                };
                m.baseline.survival_inverse(s.clamp(1e-300, 1.0))
            })
            .collect()
    }
}

fn row_kernel(m: &SystemModel) -> Result<Kernel> {
    Ok(match m.generator.family() {
        Family::Independence => Kernel::Independence,
        Family::Clayton { a } => Kernel::ClaytonFrailty { a: *a },
        _ => {
            if m.n() > GENERIC_MAX_N {
                return Err(Error::Sampler(format!(
                    "generic conditional sampler supports n <= {GENERIC_MAX_N}, got {}",
                    m.n()
                )));
            }
            Kernel::Conditional
        }
    })
}

fn row_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut state = seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut key = [0u8; 32];
    for chunk in key.chunks_mut(8) {
        state = splitmix64(state);
        chunk.copy_from_slice(&state.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn open_unit<R: Rng>(rng: &mut R) -> f64 {
    1.0 - rng.random::<f64>()
}

/// Accumulated generator-space sum of the already-drawn components. The
/// heavy-tailed families track `w = ln(C + S)` instead of `S` itself.
enum Acc {
    Plain { s: f64 },
    LogW { w: f64, offset_log: f64 },
}

impl Acc {
    fn new(g: &GeneratorSpec) -> Acc {
        match g.family() {
            Family::LogFrac { theta } => Acc::LogW { w: *theta, offset_log: *theta },
            Family::LogPow { .. } => Acc::LogW { w: 1.0, offset_log: 1.0 },
            _ => Acc::Plain { s: 0.0 },
        }
    }

    fn push(&mut self, g: &GeneratorSpec, u: f64) {
        match self {
            Acc::Plain { s } => *s += g.phi_inv_raw(u),
            Acc::LogW { w, offset_log } => {
                let e = inverse_exponent(g, u);
                let m = w.max(e);
                *w = m + ((*w - m).exp() + (e - m).exp() - (*offset_log - m).exp()).ln();
            }
        }
    }

    /// Ratio `phi^(k)(S + phi_inv(u)) / phi^(k)(S)`, a conditional survival
    /// value in `[0, 1]`.
    fn deriv_ratio(&self, g: &GeneratorSpec, k: u32, u: f64) -> f64 {
        match self {
            Acc::Plain { s } => {
                let t_new = s + g.phi_inv_raw(u);
                if !t_new.is_finite() {
                    return 0.0;
                }
                let denom = g.phi_deriv(k, *s);
                if denom == 0.0 {
                    return 0.0;
                }
                (g.phi_deriv(k, t_new) / denom).clamp(0.0, 1.0)
            }
            Acc::LogW { w, offset_log } => {
                let e = inverse_exponent(g, u);
                let m = w.max(e);
                let w_new = m + ((*w - m).exp() + (e - m).exp() - (*offset_log - m).exp()).ln();
                (log_abs_deriv(g, k, w_new) - log_abs_deriv(g, k, *w)).exp().clamp(0.0, 1.0)
            }
        }
    }
}

/// Exponent `g(u)` with `phi_inv(u) = exp(g(u)) - C` for the heavy-tailed
/// families.
fn inverse_exponent(g: &GeneratorSpec, u: f64) -> f64 {
    match g.family() {
        Family::LogFrac { theta } => theta / u,
        Family::LogPow { theta } => u.powf(-theta),
        _ => unreachable!("inverse_exponent is only defined for log-tailed families"),
    }
}

/// `ln |phi^(k)|` evaluated at `w = ln(C + t)` for the heavy-tailed families.
fn log_abs_deriv(g: &GeneratorSpec, k: u32, w: f64) -> f64 {
    match g.family() {
        Family::LogFrac { theta } => match k {
            1 => theta.ln() - w - 2.0 * w.ln(),
            2 => theta.ln() + (w + 2.0).ln() - 2.0 * w - 3.0 * w.ln(),
            _ => (2.0 * theta).ln() + (w * w + 3.0 * w + 3.0).ln() - 3.0 * w - 4.0 * w.ln(),
        },
        Family::LogPow { theta } => {
            let it = 1.0 / theta;
            match k {
                1 => it.ln() - (it + 1.0) * w.ln() - w,
                2 => it.ln() + (it + 1.0 + w).ln() - (it + 2.0) * w.ln() - 2.0 * w,
                _ => {
                    it.ln()
                        + ((it + 1.0) * (it + 2.0) + 3.0 * (it + 1.0) * w + 2.0 * w * w).ln()
                        - (it + 3.0) * w.ln()
                        - 3.0 * w
                }
            }
        }
        _ => unreachable!("log_abs_deriv is only defined for log-tailed families"),
    }
}

/// Conditional-distribution method: component `k` is drawn by inverting
/// `phi^(k-1)(S_{k-1} + phi_inv(u)) / phi^(k-1)(S_{k-1}) = q`.
fn conditional_uniforms<R: Rng>(g: &GeneratorSpec, n: usize, rng: &mut R) -> Vec<f64> {
    let mut us = Vec::with_capacity(n);
    let mut acc = Acc::new(g);
    let first = open_unit(rng);
    acc.push(g, first);
    us.push(first);
    for k in 1..n {
        let q = open_unit(rng);
        let u = bisect_conditional(g, &acc, k as u32, q);
        acc.push(g, u);
        us.push(u);
    }
    us
}

fn bisect_conditional(g: &GeneratorSpec, acc: &Acc, k: u32, q: f64) -> f64 {
    let mut lo = BISECT_FLOOR;
    let mut hi = 1.0;
    // f(u) = ratio(u) - q is increasing in u with f(hi) >= 0.
    if acc.deriv_ratio(g, k, lo) - q >= 0.0 {
        return lo;
    }
    for _ in 0..BISECT_MAX_ITERS {
        let mid = 0.5 * (lo + hi);
        if acc.deriv_ratio(g, k, mid) - q < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < BISECT_TOL {
            break;
        }
    }
    0.5 * (lo + hi)
}
