//! Hard-coded reproduction of the four counterexample figure families:
//! two-curve CSV + SVG plus a crossing report. Each figure pins the baseline,
//! odds-ratio vectors, and generators of one published counterexample; the
//! qualitative content is that the two curves cross, so the claimed ordering
//! fails.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use porel_core::{BaselineDist, GeneratorSpec, SystemModel};

use crate::csvout;
use crate::error::CliError;
use crate::svg::{self, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FigureId {
    F1,
    F2a,
    F2b,
    F3a,
    F3b,
    F4a,
    F4b,
}

impl FigureId {
    pub const ALL: [FigureId; 7] = [
        FigureId::F1,
        FigureId::F2a,
        FigureId::F2b,
        FigureId::F3a,
        FigureId::F3b,
        FigureId::F4a,
        FigureId::F4b,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FigureId::F1 => "F1",
            FigureId::F2a => "F2a",
            FigureId::F2b => "F2b",
            FigureId::F3a => "F3a",
            FigureId::F3b => "F3b",
            FigureId::F4a => "F4a",
            FigureId::F4b => "F4b",
        }
    }
}

impl FromStr for FigureId {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| CliError::Usage(format!("unknown figure id `{s}` (expected F1..F4b)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CurveKind {
    SeriesSurvival,
    SeriesHazard,
    ParallelCdf,
    ParallelReversedHazard,
}

impl CurveKind {
    fn label(&self) -> &'static str {
        match self {
            CurveKind::SeriesSurvival => "series survival",
            CurveKind::SeriesHazard => "series hazard rate",
            CurveKind::ParallelCdf => "parallel cdf",
            CurveKind::ParallelReversedHazard => "parallel reversed hazard rate",
        }
    }
}

pub struct FigureSpec {
    pub id: FigureId,
    pub kind: CurveKind,
    pub x: SystemModel,
    pub y: SystemModel,
}

/// The pinned models behind each figure id.
pub fn figure_spec(id: FigureId) -> FigureSpec {
    let wb = |lambda: f64, k: f64| BaselineDist::weibull(lambda, k).expect("valid baseline");
    let model = |b: BaselineDist, alphas: &[f64], g: GeneratorSpec| {
        SystemModel::new(b, alphas.to_vec(), g).expect("valid figure model")
    };
    match id {
        FigureId::F1 => FigureSpec {
            id,
            kind: CurveKind::SeriesSurvival,
            x: model(wb(1.0, 1.5), &[2.0, 3.0, 5.5], GeneratorSpec::sech_pow(0.9).unwrap()),
            y: model(wb(1.0, 1.5), &[2.5, 3.5, 3.8], GeneratorSpec::gh_exp(0.3).unwrap()),
        },
        FigureId::F2a | FigureId::F2b => {
            let g = if id == FigureId::F2a {
                GeneratorSpec::log_pow(0.1).unwrap()
            } else {
                GeneratorSpec::sech_pow(0.2).unwrap()
            };
            FigureSpec {
                id,
                kind: CurveKind::SeriesHazard,
                x: model(wb(0.5, 2.0), &[0.2, 0.4, 0.6], g.clone()),
                y: model(wb(0.5, 2.0), &[0.35, 0.55, 0.95], g),
            }
        }
        FigureId::F3a => FigureSpec {
            id,
            kind: CurveKind::ParallelCdf,
            x: model(wb(1.0, 0.5), &[0.9, 1.45, 2.15], GeneratorSpec::log_frac(0.9).unwrap()),
            y: model(wb(1.0, 0.5), &[1.2, 1.95, 2.65], GeneratorSpec::gh_exp(8.0).unwrap()),
        },
        FigureId::F3b => FigureSpec {
            id,
            kind: CurveKind::ParallelCdf,
            x: model(wb(1.0, 0.5), &[0.9, 1.45, 2.15], GeneratorSpec::gumbel_frailty(0.9).unwrap()),
            y: model(wb(1.0, 0.5), &[1.2, 1.95, 2.65], GeneratorSpec::sech_pow(0.2).unwrap()),
        },
        FigureId::F4a | FigureId::F4b => {
            let g = if id == FigureId::F4a {
                GeneratorSpec::clayton(0.2).unwrap()
            } else {
                GeneratorSpec::sech_pow(0.2).unwrap()
            };
            FigureSpec {
                id,
                kind: CurveKind::ParallelReversedHazard,
                x: model(wb(1.0, 3.0), &[0.2, 0.6, 1.5, 3.5], g.clone()),
                y: model(wb(1.0, 3.0), &[0.8, 0.9, 4.5, 5.5], g),
            }
        }
    }
}

fn eval_curve(m: &SystemModel, kind: CurveKind, t: f64) -> Option<f64> {
    let v = match kind {
        CurveKind::SeriesSurvival => m.series_survival(t),
        CurveKind::SeriesHazard => m.series_hazard(t).ok()?,
        CurveKind::ParallelCdf => m.parallel_cdf(t),
        CurveKind::ParallelReversedHazard => m.parallel_reversed_hazard(t).ok()?,
    };
    v.is_finite().then_some(v)
}

#[derive(Debug, Serialize)]
pub struct ReproReport {
    pub figure: FigureId,
    pub kind: CurveKind,
    pub csv: PathBuf,
    pub svg: PathBuf,
    pub points: usize,
    /// Abscissae where `curve_X - curve_Y` changes sign.
    pub crossings: Vec<f64>,
}

/// Number of abscissae per figure.
const FIGURE_POINTS: usize = 400;

/// Evaluate both curves over `[0.01, q_{0.999}]`, trimmed to the region where
/// the rates are representable (rates saturate near total failure/certainty;
/// the crossings sit well inside).
pub fn repro_figure(id: FigureId, out_dir: &Path) -> Result<ReproReport, CliError> {
    let spec = figure_spec(id);
    let hi = spec.x.baseline.quantile(0.999);
    let candidates: Vec<f64> = (0..FIGURE_POINTS)
        .map(|i| 0.01 + (hi - 0.01) * i as f64 / (FIGURE_POINTS - 1) as f64)
        .collect();
    let evaluable: Vec<f64> = candidates
        .iter()
        .copied()
        .filter(|&t| {
            eval_curve(&spec.x, spec.kind, t).is_some() && eval_curve(&spec.y, spec.kind, t).is_some()
        })
        .collect();
    if evaluable.len() < 2 {
        return Err(CliError::Usage(format!("figure {id:?}: no evaluable range")));
    }
    let (lo, hi) = (evaluable[0], *evaluable.last().unwrap());
    let mut rows: Vec<(f64, f64, f64)> = Vec::with_capacity(FIGURE_POINTS);
    for i in 0..FIGURE_POINTS {
        let t = lo + (hi - lo) * i as f64 / (FIGURE_POINTS - 1) as f64;
        if let (Some(cx), Some(cy)) =
            (eval_curve(&spec.x, spec.kind, t), eval_curve(&spec.y, spec.kind, t))
        {
            rows.push((t, cx, cy));
        }
    }

    std::fs::create_dir_all(out_dir)?;
    let csv_path = out_dir.join(format!("{}.csv", spec.id.as_str()));
    csvout::write_csv(
        &csv_path,
        &["t", "curve_X", "curve_Y"],
        rows.iter().map(|&(t, cx, cy)| vec![t, cx, cy]),
    )?;

    let svg_path = out_dir.join(format!("{}.svg", spec.id.as_str()));
    let pts_x: Vec<(f64, f64)> = rows.iter().map(|&(t, cx, _)| (t, cx)).collect();
    let pts_y: Vec<(f64, f64)> = rows.iter().map(|&(t, _, cy)| (t, cy)).collect();
    svg::write_line_svg(
        &svg_path,
        &format!("{}: {}", spec.id.as_str(), spec.kind.label()),
        &[
            Series { label: "system X", points: &pts_x },
            Series { label: "system Y", points: &pts_y },
        ],
    )?;

    Ok(ReproReport {
        figure: spec.id,
        kind: spec.kind,
        csv: csv_path,
        svg: svg_path,
        points: rows.len(),
        crossings: sign_changes(&rows),
    })
}

/// Abscissae (midpoints) where the difference of the two curves changes sign.
pub fn sign_changes(rows: &[(f64, f64, f64)]) -> Vec<f64> {
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for &(t, cx, cy) in rows {
        let d = cx - cy;
        if d == 0.0 {
            continue;
        }
        if let Some((pt, pd)) = prev {
            if pd.signum() != d.signum() {
                out.push(0.5 * (pt + t));
            }
        }
        prev = Some((t, d));
    }
    out
}
