//! Theorem harness: run a comparison theorem's hypotheses as numerical
//! checks, then verify or falsify its conclusion on a grid.
//!
//! A report is *consistent* when the implication "all hypotheses hold =>
//! conclusion holds" survives numerically. Hypotheses that fail make the
//! implication vacuous; `Inconclusive` hypotheses abstain (the report is
//! marked `abstained` and consistency is not asserted).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::checks::{
    check_log_convexity, check_ratio_shape, check_superadditive_composition, pair_grid,
    shape_grid, Curvature, RatioProperty, SIGN_TOL,
};
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::majorize::{ascending_prefix_sums, majorizes, MajorizeMode};
use crate::orders::{check_order, check_order_shocked, Extreme, OrderVerdict, StochOrder};
use crate::report::{CheckReport, Verdict, Witness};
use crate::system::{ShockedSystem, SystemModel};

/// Identifiers of the comparison theorems and corollaries the harness knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    T3_1,
    T3_2,
    T3_3,
    T4_1,
    T4_2,
    T5_1,
    T5_2,
    T5_3,
    C3_1,
    C3_2,
    C3_3,
    C4_1,
    C5_1,
    C5_2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T4_1,
        TheoremId::T4_2,
        TheoremId::T5_1,
        TheoremId::T5_2,
        TheoremId::T5_3,
        TheoremId::C3_1,
        TheoremId::C3_2,
        TheoremId::C3_3,
        TheoremId::C4_1,
        TheoremId::C5_1,
        TheoremId::C5_2,
    ];

    fn canonical(self) -> &'static str {
        match self {
            TheoremId::T3_1 => "T3.1",
            TheoremId::T3_2 => "T3.2",
            TheoremId::T3_3 => "T3.3",
            TheoremId::T4_1 => "T4.1",
            TheoremId::T4_2 => "T4.2",
            TheoremId::T5_1 => "T5.1",
            TheoremId::T5_2 => "T5.2",
            TheoremId::T5_3 => "T5.3",
            TheoremId::C3_1 => "C3.1",
            TheoremId::C3_2 => "C3.2",
            TheoremId::C3_3 => "C3.3",
            TheoremId::C4_1 => "C4.1",
            TheoremId::C5_1 => "C5.1",
            TheoremId::C5_2 => "C5.2",
        }
    }

    /// Does this theorem require both systems to share one generator?
    fn same_generator(self) -> bool {
        matches!(
            self,
            TheoremId::T3_3
                | TheoremId::T4_2
                | TheoremId::T5_3
                | TheoremId::C3_1
                | TheoremId::C3_2
                | TheoremId::C3_3
                | TheoremId::C4_1
                | TheoremId::C5_1
                | TheoremId::C5_2
        )
    }

    /// Does this theorem speak about shocked systems?
    fn shocked(self) -> bool {
        matches!(
            self,
            TheoremId::T5_1 | TheoremId::T5_2 | TheoremId::T5_3 | TheoremId::C5_1 | TheoremId::C5_2
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_uppercase().replace('_', ".");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.canonical() == norm)
            .ok_or_else(|| Error::InvalidModel(format!("unknown theorem id `{s}`")))
    }
}

/// Inputs to one theorem run: two systems plus optional shock probabilities.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremScenario {
    pub x: SystemModel,
    pub y: SystemModel,
    #[serde(default)]
    pub probs_x: Option<Vec<f64>>,
    #[serde(default)]
    pub probs_y: Option<Vec<f64>>,
}

/// A hypothesis check with a human-readable name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub report: CheckReport,
}

/// Full record of one theorem run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub hypothesis_reports: Vec<NamedCheck>,
    pub conclusion: OrderVerdict,
    pub consistent: bool,
    pub abstained: bool,
}

impl TheoremReport {
    pub fn all_hypotheses_hold(&self) -> bool {
        self.hypothesis_reports.iter().all(|h| h.report.verdict == Verdict::Holds)
    }
}

/// Run a theorem on its default grids.
pub fn run_theorem(id: TheoremId, scenario: &TheoremScenario) -> Result<TheoremReport> {
    run_theorem_with_grid(id, scenario, None)
}

/// Run a theorem, optionally overriding the conclusion grid.
pub fn run_theorem_with_grid(
    id: TheoremId,
    scenario: &TheoremScenario,
    grid: Option<&GridSpec>,
) -> Result<TheoremReport> {
    validate(id, scenario)?;
    let x = &scenario.x;
    let y = &scenario.y;
    let gx = &x.generator;
    let gy = &y.generator;
    let default_grid = x.comparison_grid(400);
    let grid = grid.unwrap_or(&default_grid);

    let mut hyps: Vec<NamedCheck> = Vec::new();
    let conclusion: OrderVerdict = match id {
        TheoremId::T3_1 | TheoremId::C3_1 | TheoremId::T5_1 | TheoremId::C5_1 => {
            hyps.push(majorization_check("alpha p-larger beta", &x.alphas, &y.alphas, MajorizeMode::PLarger)?);
            if id.same_generator() {
                hyps.push(log_shape_check("phi log-convex", gx, Curvature::Convex)?);
            } else {
                hyps.push(either_check(
                    "phi_x or phi_y log-convex",
                    log_shape_check("phi_x log-convex", gx, Curvature::Convex)?,
                    log_shape_check("phi_y log-convex", gy, Curvature::Convex)?,
                ));
                hyps.push(superadd_check("phi_y_inv . phi_x superadditive", x, y));
            }
            if id.shocked() {
                hyps.push(prob_product_check(scenario)?);
                shocked_conclusion(scenario, StochOrder::St, grid)?
            } else {
                check_order(x, y, StochOrder::St, Extreme::Series, grid)?
            }
        }
        TheoremId::T3_2 | TheoremId::C3_2 | TheoremId::T5_2 | TheoremId::C5_2 => {
            hyps.push(majorization_check("alpha weakly supermajorizes beta", &x.alphas, &y.alphas, MajorizeMode::WeakSupermajorize)?);
            if !id.same_generator() {
                hyps.push(superadd_check("phi_y_inv . phi_x superadditive", x, y));
            }
            if id.shocked() {
                hyps.push(prob_product_check(scenario)?);
                shocked_conclusion(scenario, StochOrder::St, grid)?
            } else {
                check_order(x, y, StochOrder::St, Extreme::Series, grid)?
            }
        }
        TheoremId::T3_3 | TheoremId::T5_3 => {
            hyps.push(majorization_check("alpha weakly supermajorizes beta", &x.alphas, &y.alphas, MajorizeMode::WeakSupermajorize)?);
            hyps.extend(hazard_shape_hypotheses(gx)?);
            if id.shocked() {
                shocked_conclusion(scenario, StochOrder::Hr, grid)?
            } else {
                check_order(x, y, StochOrder::Hr, Extreme::Series, grid)?
            }
        }
        TheoremId::C3_3 => {
            let mean = x.alphas.iter().sum::<f64>() / x.alphas.len() as f64;
            let ahat = y.alphas[0];
            hyps.push(scalar_ge_check("ahat >= mean(alpha)", ahat, mean));
            hyps.extend(hazard_shape_hypotheses(gx)?);
            check_order(x, y, StochOrder::Hr, Extreme::Series, grid)?
        }
        TheoremId::T4_1 | TheoremId::C4_1 => {
            hyps.push(majorization_check("alpha weakly supermajorizes beta", &x.alphas, &y.alphas, MajorizeMode::WeakSupermajorize)?);
            if id.same_generator() {
                hyps.push(log_shape_check("phi log-concave", gx, Curvature::Concave)?);
            } else {
                hyps.push(either_check(
                    "phi_x or phi_y log-concave",
                    log_shape_check("phi_x log-concave", gx, Curvature::Concave)?,
                    log_shape_check("phi_y log-concave", gy, Curvature::Concave)?,
                ));
                hyps.push(NamedCheck {
                    name: "phi_x_inv . phi_y superadditive".into(),
                    report: check_superadditive_composition(gy, gx, &pair_grid(gy, gx)),
                });
            }
            check_order(x, y, StochOrder::St, Extreme::Parallel, grid)?
        }
        TheoremId::T4_2 => {
            hyps.push(majorization_check("alpha weakly supermajorizes beta", &x.alphas, &y.alphas, MajorizeMode::WeakSupermajorize)?);
            hyps.push(log_shape_check("phi log-concave", gx, Curvature::Concave)?);
            hyps.push(ratio_check("phi(1-phi)/phi' decreasing", gx, RatioProperty::Decreasing)?);
            hyps.push(ratio_check("phi(1-phi)/phi' convex", gx, RatioProperty::Convex)?);
            check_order(x, y, StochOrder::Rhr, Extreme::Parallel, grid)?
        }
    };

    let any_fails = hyps.iter().any(|h| h.report.verdict == Verdict::Fails);
    let any_inconclusive = hyps.iter().any(|h| h.report.verdict == Verdict::Inconclusive);
    let (consistent, abstained) = if any_fails {
        (true, false)
    } else if any_inconclusive {
        (true, true)
    } else {
        (conclusion.verdict == Verdict::Holds, false)
    };

    Ok(TheoremReport {
        theorem_id: id.to_string(),
        hypothesis_reports: hyps,
        conclusion,
        consistent,
        abstained,
    })
}

/// Hypotheses shared by the hazard-rate comparison results: log-concavity,
/// plus the ratio decreasing and concave-or-convex.
fn hazard_shape_hypotheses(
    g: &crate::generator::GeneratorSpec,
) -> Result<Vec<NamedCheck>> {
    Ok(vec![
        log_shape_check("phi log-concave", g, Curvature::Concave)?,
        ratio_check("phi(1-phi)/phi' decreasing", g, RatioProperty::Decreasing)?,
        either_check(
            "phi(1-phi)/phi' concave or convex",
            ratio_check("phi(1-phi)/phi' concave", g, RatioProperty::Concave)?,
            ratio_check("phi(1-phi)/phi' convex", g, RatioProperty::Convex)?,
        ),
    ])
}

fn validate(id: TheoremId, s: &TheoremScenario) -> Result<()> {
    let mismatch = |reason: &str| Error::ScenarioMismatch {
        theorem: id.to_string(),
        reason: reason.to_string(),
    };
    if s.x.baseline != s.y.baseline {
        return Err(mismatch("both systems must share the baseline"));
    }
    if s.x.n() != s.y.n() {
        return Err(mismatch("systems must have the same component count"));
    }
    if id.same_generator() && s.x.generator != s.y.generator {
        return Err(mismatch("this theorem assumes a common generator"));
    }
    if id.shocked() && (s.probs_x.is_none() || s.probs_y.is_none()) {
        return Err(mismatch("shock-model theorems need probs_x and probs_y"));
    }
    if !id.shocked() && (s.probs_x.is_some() || s.probs_y.is_some()) {
        return Err(mismatch("this theorem takes unshocked systems"));
    }
    if id == TheoremId::C3_3 {
        let first = s.y.alphas[0];
        if s.y.alphas.iter().any(|&a| (a - first).abs() > 1e-12) {
            return Err(mismatch("the reference system must have constant odds ratios"));
        }
    }
    Ok(())
}

fn shocked_conclusion(
    s: &TheoremScenario,
    order: StochOrder,
    grid: &GridSpec,
) -> Result<OrderVerdict> {
    let a = ShockedSystem::new(s.x.clone(), s.probs_x.clone().expect("validated"))?;
    let b = ShockedSystem::new(s.y.clone(), s.probs_y.clone().expect("validated"))?;
    check_order_shocked(&a, &b, order, grid)
}

fn majorization_check(name: &str, x: &[f64], y: &[f64], mode: MajorizeMode) -> Result<NamedCheck> {
    let holds = majorizes(x, y, mode)?;
    let grid = format!("exact preorder comparison ({mode:?})");
    let report = if holds {
        CheckReport::holds(grid, SIGN_TOL)
    } else {
        // Witness: the first violated prefix, as (j, prefix_x, prefix_y).
        let (px, py): (Vec<f64>, Vec<f64>) = match mode {
            MajorizeMode::PLarger => {
                let f = |v: &[f64]| {
                    let mut s = v.to_vec();
                    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    let mut acc = 1.0;
                    s.iter_mut().for_each(|e| {
                        acc *= *e;
                        *e = acc;
                    });
                    s
                };
                (f(x), f(y))
            }
            _ => (ascending_prefix_sums(x), ascending_prefix_sums(y)),
        };
        let mut witnesses = Vec::new();
        for j in 0..px.len() {
            let violated = match mode {
                MajorizeMode::Majorize if j + 1 == px.len() => {
                    (px[j] - py[j]).abs() > 1e-12 * px[j].abs().max(1.0)
                }
                _ => px[j] > py[j] + 1e-12,
            };
            if violated {
                witnesses.push(Witness {
                    points: vec![(j + 1) as f64, px[j], py[j]],
                    violation: (px[j] - py[j]).abs(),
                });
            }
        }
        CheckReport::from_witnesses(witnesses, grid, SIGN_TOL)
    };
    Ok(NamedCheck { name: name.to_string(), report })
}

fn log_shape_check(
    name: &str,
    g: &crate::generator::GeneratorSpec,
    sense: Curvature,
) -> Result<NamedCheck> {
    Ok(NamedCheck {
        name: name.to_string(),
        report: check_log_convexity(g, sense, &shape_grid(g))?,
    })
}

fn ratio_check(
    name: &str,
    g: &crate::generator::GeneratorSpec,
    prop: RatioProperty,
) -> Result<NamedCheck> {
    Ok(NamedCheck { name: name.to_string(), report: check_ratio_shape(g, prop, &shape_grid(g))? })
}

fn superadd_check(name: &str, x: &SystemModel, y: &SystemModel) -> NamedCheck {
    let report =
        check_superadditive_composition(&x.generator, &y.generator, &pair_grid(&x.generator, &y.generator));
    NamedCheck { name: name.to_string(), report }
}

/// `Holds` if either sub-check holds; `Fails` only when both fail.
fn either_check(name: &str, a: NamedCheck, b: NamedCheck) -> NamedCheck {
    let verdict = match (a.report.verdict, b.report.verdict) {
        (Verdict::Holds, _) | (_, Verdict::Holds) => Verdict::Holds,
        (Verdict::Fails, Verdict::Fails) => Verdict::Fails,
        _ => Verdict::Inconclusive,
    };
    let report = match verdict {
        Verdict::Holds => CheckReport::holds(format!("either: {} | {}", a.report.grid, b.report.grid), SIGN_TOL),
        Verdict::Fails => {
            let mut witnesses = a.report.witnesses;
            witnesses.extend(b.report.witnesses);
            CheckReport::fails(witnesses, format!("either: {} | {}", a.report.grid, b.report.grid), SIGN_TOL)
        }
        Verdict::Inconclusive => {
            CheckReport::inconclusive(format!("either: {} | {}", a.report.grid, b.report.grid), SIGN_TOL)
        }
    };
    NamedCheck { name: name.to_string(), report }
}

fn prob_product_check(s: &TheoremScenario) -> Result<NamedCheck> {
    let px: f64 = s.probs_x.as_ref().expect("validated").iter().product();
    let py: f64 = s.probs_y.as_ref().expect("validated").iter().product();
    let report = if px <= py + 1e-12 {
        CheckReport::holds("exact product comparison".into(), SIGN_TOL)
    } else {
        CheckReport::fails(
            vec![Witness { points: vec![px, py], violation: px - py }],
            "exact product comparison".into(),
            SIGN_TOL,
        )
    };
    Ok(NamedCheck { name: "prod(p) <= prod(q)".to_string(), report })
}

fn scalar_ge_check(name: &str, lhs: f64, rhs: f64) -> NamedCheck {
    let report = if lhs >= rhs - 1e-12 {
        CheckReport::holds("exact scalar comparison".into(), SIGN_TOL)
    } else {
        CheckReport::fails(
            vec![Witness { points: vec![lhs, rhs], violation: rhs - lhs }],
            "exact scalar comparison".into(),
            SIGN_TOL,
        )
    };
    NamedCheck { name: name.to_string(), report }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baseline::BaselineDist;
    use crate::generator::GeneratorSpec;

    fn wb() -> BaselineDist {
        BaselineDist::weibull(1.0, 1.5).unwrap()
    }

    fn scenario(gx: GeneratorSpec, gy: GeneratorSpec, a: &[f64], b: &[f64]) -> TheoremScenario {
        TheoremScenario {
            x: SystemModel::new(wb(), a.to_vec(), gx).unwrap(),
            y: SystemModel::new(wb(), b.to_vec(), gy).unwrap(),
            probs_x: None,
            probs_y: None,
        }
    }

    #[test]
    fn t32_clayton_consistent() {
        let g = GeneratorSpec::clayton(1.0).unwrap();
        let s = scenario(g.clone(), g, &[0.2, 0.4, 0.6], &[0.35, 0.55, 0.95]);
        let r = run_theorem(TheoremId::T3_2, &s).unwrap();
        assert!(r.all_hypotheses_hold());
        assert_eq!(r.conclusion.verdict, Verdict::Holds);
        assert!(r.consistent);
    }

    #[test]
    fn t31_counterexample_is_vacuous() {
        let s = scenario(
            GeneratorSpec::sech_pow(0.9).unwrap(),
            GeneratorSpec::gh_exp(0.3).unwrap(),
            &[2.0, 3.0, 5.5],
            &[2.5, 3.5, 3.8],
        );
        let r = run_theorem(TheoremId::T3_1, &s).unwrap();
        assert!(!r.all_hypotheses_hold());
        assert_eq!(r.conclusion.verdict, Verdict::Fails);
        assert!(r.consistent, "failed hypotheses make the implication vacuous");
        assert!(!r.abstained);
    }

    #[test]
    fn c33_boundary_mean() {
        let g = GeneratorSpec::sech_pow(1.0).unwrap();
        let s = scenario(g.clone(), g, &[0.2, 0.4, 0.6], &[0.4, 0.4, 0.4]);
        let r = run_theorem(TheoremId::C3_3, &s).unwrap();
        assert!(r.all_hypotheses_hold());
        assert_eq!(r.conclusion.verdict, Verdict::Holds);
        assert!(r.consistent);
    }

    #[test]
    fn t42_clayton_hypotheses_fail_vacuously() {
        let g = GeneratorSpec::clayton(0.2).unwrap();
        let s = scenario(g.clone(), g, &[0.2, 0.6, 1.5, 3.5], &[0.8, 0.9, 4.5, 5.5]);
        let r = run_theorem(TheoremId::T4_2, &s).unwrap();
        // Log-concavity fails for this generator, so the run is vacuous.
        assert!(!r.all_hypotheses_hold());
        assert!(r.consistent);
    }

    #[test]
    fn scenario_validation() {
        let g = GeneratorSpec::independence();
        let mut s = scenario(g.clone(), GeneratorSpec::clayton(1.0).unwrap(), &[1.0, 2.0], &[1.5, 1.5]);
        assert!(matches!(
            run_theorem(TheoremId::T3_3, &s),
            Err(Error::ScenarioMismatch { .. })
        ));
        s = scenario(g.clone(), g.clone(), &[1.0, 2.0], &[1.5, 1.5]);
        assert!(matches!(
            run_theorem(TheoremId::T5_1, &s),
            Err(Error::ScenarioMismatch { .. })
        ));
        s.probs_x = Some(vec![0.5, 0.5]);
        s.probs_y = Some(vec![0.9, 0.9]);
        let r = run_theorem(TheoremId::C5_2, &s).unwrap();
        assert!(r.consistent);
    }

    #[test]
    fn theorem_id_parsing() {
        assert_eq!("T3.1".parse::<TheoremId>().unwrap(), TheoremId::T3_1);
        assert_eq!("t4_2".parse::<TheoremId>().unwrap(), TheoremId::T4_2);
        assert!("T9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn report_serializes_with_stable_fields() {
        let g = GeneratorSpec::clayton(1.0).unwrap();
        let s = scenario(g.clone(), g, &[0.5, 1.0], &[0.8, 1.2]);
        let r = run_theorem(TheoremId::C3_2, &s).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        for key in ["theorem_id", "hypothesis_reports", "conclusion", "consistent", "abstained"] {
            assert!(json.contains(key), "missing {key}");
        }
    }
}
