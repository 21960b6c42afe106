//! Stochastic-order verdicts between two systems.
//!
//! `check_order(a, b, ...)` decides whether `a <= b` holds in the requested
//! order on an evaluation grid:
//!
//! * `St` — pointwise dominance of survival curves (series) or cdf
//!   dominance the other way around (parallel);
//! * `Hr` — the survival ratio `S_b / S_a` must be non-decreasing, AND the
//!   hazard inequality `r_a >= r_b` must hold pointwise; the two
//!   formulations must agree or the verdict is `Inconclusive`;
//! * `Rhr` — same scheme on cdf ratios and reversed hazards.
//!
//! Grid points where a probability has underflowed (or a rate is not
//! representable) are trimmed; an empty usable grid is `Inconclusive`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grid::GridSpec;
use crate::report::Verdict;
use crate::system::{ShockedSystem, SystemModel, SATURATION_FLOOR};

/// Tolerance for pointwise comparisons and ratio monotonicity, applied after
/// normalizing by local magnitude.
pub const ORDER_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StochOrder {
    St,
    Hr,
    Rhr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Extreme {
    Series,
    Parallel,
}

/// A grid point violating the defining inequality, with both sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderWitness {
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Outcome of an order comparison between two systems.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderVerdict {
    pub order: StochOrder,
    pub verdict: Verdict,
    pub witnesses: Vec<OrderWitness>,
    pub grid: String,
    pub tolerance: f64,
}

impl OrderVerdict {
    fn new(order: StochOrder, verdict: Verdict, witnesses: Vec<OrderWitness>, grid: String) -> Self {
        debug_assert!((verdict == Verdict::Fails) == !witnesses.is_empty());
        OrderVerdict { order, verdict, witnesses, grid, tolerance: ORDER_TOL }
    }
}

/// One usable evaluation point: curve values and rates for both systems.
struct OrderPoint {
    t: f64,
    curve_a: f64,
    curve_b: f64,
    rate_a: f64,
    rate_b: f64,
}

/// Does `a <= b` hold in `order` for the chosen extreme? Grid is a range of
/// lifetimes; both systems are evaluated at the same abscissae.
pub fn check_order(
    a: &SystemModel,
    b: &SystemModel,
    order: StochOrder,
    extreme: Extreme,
    grid: &GridSpec,
) -> Result<OrderVerdict> {
    let ts = grid.log_points();
    let pts = collect_points(&ts, extreme, |t| curves_and_rates(a, b, extreme, order, t));
    Ok(decide(order, extreme, pts, grid.describe()))
}

/// Shocked-series variant: survival curves carry the factor `prod p_i`;
/// hazards for `t > 0` coincide with the unshocked ones.
pub fn check_order_shocked(
    a: &ShockedSystem,
    b: &ShockedSystem,
    order: StochOrder,
    grid: &GridSpec,
) -> Result<OrderVerdict> {
    let mut ts = grid.log_points();
    // The atom at zero participates in st comparisons.
    if order == StochOrder::St {
        ts.insert(0, 0.0);
    }
    let (pa, pb) = (a.prob_product(), b.prob_product());
    let pts = collect_points(&ts, Extreme::Series, |t| {
        let sa = pa * a.system.series_survival(t);
        let sb = pb * b.system.series_survival(t);
        if sa < SATURATION_FLOOR || sb < SATURATION_FLOOR {
            return None;
        }
        let (ra, rb) = if order == StochOrder::Hr {
            match (a.system.series_hazard(t), b.system.series_hazard(t)) {
                (Ok(x), Ok(y)) => (x, y),
                _ => return None,
            }
        } else {
            (0.0, 0.0)
        };
        Some(OrderPoint { t, curve_a: sa, curve_b: sb, rate_a: ra, rate_b: rb })
    });
    Ok(decide(order, Extreme::Series, pts, format!("{} (shocked)", grid.describe())))
}

fn collect_points<F>(ts: &[f64], _extreme: Extreme, eval: F) -> Vec<OrderPoint>
where
    F: Fn(f64) -> Option<OrderPoint>,
{
    ts.iter().filter_map(|&t| eval(t)).collect()
}

fn curves_and_rates(
    a: &SystemModel,
    b: &SystemModel,
    extreme: Extreme,
    order: StochOrder,
    t: f64,
) -> Option<OrderPoint> {
    let (curve_a, curve_b) = match extreme {
        Extreme::Series => (a.series_survival(t), b.series_survival(t)),
        Extreme::Parallel => (a.parallel_cdf(t), b.parallel_cdf(t)),
    };
    if curve_a < SATURATION_FLOOR || curve_b < SATURATION_FLOOR {
        return None;
    }
    let (rate_a, rate_b) = match (order, extreme) {
        (StochOrder::Hr, Extreme::Series) => {
            match (a.series_hazard(t), b.series_hazard(t)) {
                (Ok(x), Ok(y)) => (x, y),
                _ => return None,
            }
        }
        (StochOrder::Rhr, Extreme::Parallel) => {
            match (a.parallel_reversed_hazard(t), b.parallel_reversed_hazard(t)) {
                (Ok(x), Ok(y)) => (x, y),
                _ => return None,
            }
        }
        _ => (0.0, 0.0),
    };
    Some(OrderPoint { t, curve_a, curve_b, rate_a, rate_b })
}

fn decide(order: StochOrder, extreme: Extreme, pts: Vec<OrderPoint>, grid: String) -> OrderVerdict {
    if pts.len() < 2 {
        return OrderVerdict::new(order, Verdict::Inconclusive, Vec::new(), grid);
    }
    match order {
        StochOrder::St => {
            // Series: survival of `a` must not exceed survival of `b`.
            // Parallel: cdf of `a` must not fall below cdf of `b`.
            let mut witnesses = Vec::new();
            for p in &pts {
                let (lhs, rhs) = match extreme {
                    Extreme::Series => (p.curve_a, p.curve_b),
                    Extreme::Parallel => (p.curve_b, p.curve_a),
                };
                if lhs - rhs > ORDER_TOL * lhs.max(rhs) {
                    witnesses.push(OrderWitness { t: p.t, lhs: p.curve_a, rhs: p.curve_b });
                }
            }
            let verdict = if witnesses.is_empty() { Verdict::Holds } else { Verdict::Fails };
            OrderVerdict::new(order, verdict, witnesses, grid)
        }
        StochOrder::Hr | StochOrder::Rhr => {
            // Ratio formulation: curve_b / curve_a non-decreasing in t.
            let mut ratio_ok = true;
            let mut last = pts[0].curve_b / pts[0].curve_a;
            for p in &pts[1..] {
                let r = p.curve_b / p.curve_a;
                if last - r > ORDER_TOL * last.max(r) {
                    ratio_ok = false;
                    break;
                }
                last = r;
            }
            // Rate formulation: hr needs rate_a >= rate_b, rhr the reverse.
            let mut rate_witnesses = Vec::new();
            for p in &pts {
                let (lo, hi) = match order {
                    StochOrder::Hr => (p.rate_b, p.rate_a),
                    _ => (p.rate_a, p.rate_b),
                };
                if lo - hi > ORDER_TOL * lo.abs().max(hi.abs()).max(1e-30) {
                    rate_witnesses.push(OrderWitness { t: p.t, lhs: p.rate_a, rhs: p.rate_b });
                }
            }
            let rates_ok = rate_witnesses.is_empty();
            let verdict = match (ratio_ok, rates_ok) {
                (true, true) => Verdict::Holds,
                (false, false) => Verdict::Fails,
                _ => Verdict::Inconclusive,
            };
            let witnesses = if verdict == Verdict::Fails { rate_witnesses } else { Vec::new() };
            OrderVerdict::new(order, verdict, witnesses, grid)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::BaselineDist;
    use crate::generator::GeneratorSpec;

    fn wb(lambda: f64, k: f64) -> BaselineDist {
        BaselineDist::weibull(lambda, k).unwrap()
    }

    #[test]
    fn identical_models_hold_every_order() {
        let m = SystemModel::new(
            wb(1.0, 1.5),
            vec![0.5, 1.5, 2.5],
            GeneratorSpec::clayton(0.5).unwrap(),
        )
        .unwrap();
        let grid = m.comparison_grid(400);
        for (order, extreme) in [
            (StochOrder::St, Extreme::Series),
            (StochOrder::St, Extreme::Parallel),
            (StochOrder::Hr, Extreme::Series),
            (StochOrder::Rhr, Extreme::Parallel),
        ] {
            let v = check_order(&m, &m, order, extreme, &grid).unwrap();
            assert_eq!(v.verdict, Verdict::Holds, "{order:?} {extreme:?}");
        }
    }

    #[test]
    fn counterexample_curves_cross() {
        // Series survival curves under a p-larger pair with dropped generator
        // conditions: the st ordering fails with reproducible witnesses.
        let a = SystemModel::new(
            wb(1.0, 1.5),
            vec![2.0, 3.0, 5.5],
            GeneratorSpec::sech_pow(0.9).unwrap(),
        )
        .unwrap();
        let b = SystemModel::new(
            wb(1.0, 1.5),
            vec![2.5, 3.5, 3.8],
            GeneratorSpec::gh_exp(0.3).unwrap(),
        )
        .unwrap();
        let v = check_order(&a, &b, StochOrder::St, Extreme::Series, &a.comparison_grid(400))
            .unwrap();
        assert_eq!(v.verdict, Verdict::Fails);
        let w = &v.witnesses[0];
        let (sa, sb) = (a.series_survival(w.t), b.series_survival(w.t));
        assert!(sa > sb + ORDER_TOL * sa.max(sb));
    }

    #[test]
    fn weak_majorized_same_generator_holds_st() {
        let gen = GeneratorSpec::clayton(0.5).unwrap();
        let a = SystemModel::new(wb(1.0, 1.0), vec![0.2, 0.4, 0.6], gen.clone()).unwrap();
        let b = SystemModel::new(wb(1.0, 1.0), vec![0.35, 0.55, 0.95], gen).unwrap();
        let v = check_order(&a, &b, StochOrder::St, Extreme::Series, &a.comparison_grid(400))
            .unwrap();
        assert_eq!(v.verdict, Verdict::Holds);
    }

    #[test]
    fn permutation_invariant_verdicts() {
        let gen = GeneratorSpec::sech_pow(1.0).unwrap();
        let a1 = SystemModel::new(wb(0.5, 2.0), vec![0.2, 0.4, 0.6], gen.clone()).unwrap();
        let a2 = SystemModel::new(wb(0.5, 2.0), vec![0.6, 0.2, 0.4], gen.clone()).unwrap();
        let b = SystemModel::new(wb(0.5, 2.0), vec![0.35, 0.55, 0.95], gen).unwrap();
        let grid = a1.comparison_grid(300);
        let v1 = check_order(&a1, &b, StochOrder::Hr, Extreme::Series, &grid).unwrap();
        let v2 = check_order(&a2, &b, StochOrder::Hr, Extreme::Series, &grid).unwrap();
        assert_eq!(v1.verdict, v2.verdict);
    }

    #[test]
    fn shocked_comparison_includes_atom() {
        let gen = GeneratorSpec::clayton(0.5).unwrap();
        let m = SystemModel::new(wb(1.0, 1.5), vec![1.0, 2.0], gen).unwrap();
        let a = ShockedSystem::new(m.clone(), vec![0.9, 0.9]).unwrap();
        let b = ShockedSystem::new(m, vec![0.95, 0.95]).unwrap();
        let grid = a.system.comparison_grid(200);
        let v = check_order_shocked(&a, &b, StochOrder::St, &grid).unwrap();
        assert_eq!(v.verdict, Verdict::Holds);
        // Reversed shock probabilities break the ordering at the atom and
        // everywhere else.
        let v = check_order_shocked(&b, &a, StochOrder::St, &grid).unwrap();
        assert_eq!(v.verdict, Verdict::Fails);
    }
}
