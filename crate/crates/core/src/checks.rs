//! Numerical checks of generator-level hypotheses: log-convexity /
//! log-concavity, superadditivity of composed inverses, and the shape of
//! `phi (1 - phi) / phi'`.
//!
//! All checks are grid falsifiers with a three-valued verdict. A `Fails`
//! report carries witnesses that re-evaluate to violations via the public
//! helpers in this module, so callers can independently confirm them.

use crate::error::{Error, Result};
use crate::generator::{ArchimedeanGenerator, PHI_ZERO_CLAMP};
use crate::grid::GridSpec;
use crate::report::{CheckReport, Witness};

/// Sign-test tolerance: absolute on differences after normalizing by local
/// magnitude. Separates true violations from round-off.
pub const SIGN_TOL: f64 = 1e-9;

/// Values of a composed inverse larger than this are treated as effectively
/// infinite (the inequality holds trivially against finite sums).
const H_MAX: f64 = 1e15;

/// Curvature sense for shape checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curvature {
    Convex,
    Concave,
}

/// Property choices for [`check_ratio_shape`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioProperty {
    Decreasing,
    Convex,
    Concave,
}

/// Default 1-D shape grid: 512 log-spaced points over `(1e-4, T]` with
/// `T = min(domain_hint, 50)`.
pub fn shape_grid<G: ArchimedeanGenerator>(g: &G) -> GridSpec {
    let hi = g.domain_hint().min(50.0);
    GridSpec::new(1e-4, hi, 512).expect("default shape grid is valid")
}

/// Default 2-D superadditivity grid side: 64 log-spaced points over
/// `(1e-3, T/2]`; failures in practice occur at moderate arguments.
pub fn pair_grid<G1: ArchimedeanGenerator, G2: ArchimedeanGenerator>(g1: &G1, _g2: &G2) -> GridSpec {
    let hi = g1.domain_hint().min(50.0) / 2.0;
    GridSpec::new(1e-3, hi.max(2e-3), 64).expect("default pair grid is valid")
}

/// Chord excess of `f` at the middle of a triple: positive where `f` pokes
/// above the chord (convexity violation), negative below (concavity
/// violation).
fn chord_excess(f: impl Fn(f64) -> f64, x1: f64, x2: f64, x3: f64) -> f64 {
    let (f1, f2, f3) = (f(x1), f(x2), f(x3));
    let interp = f1 + (f3 - f1) * (x2 - x1) / (x3 - x1);
    f2 - interp
}

fn curvature_witnesses(
    f: impl Fn(f64) -> f64 + Copy,
    xs: &[f64],
    sense: Curvature,
) -> Vec<Witness> {
    let mut out = Vec::new();
    for w in xs.windows(3) {
        let (x1, x2, x3) = (w[0], w[1], w[2]);
        let excess = chord_excess(f, x1, x2, x3);
        let scale = f(x1).abs().max(f(x2).abs()).max(f(x3).abs()).max(1.0);
        let tol = SIGN_TOL * scale;
        let violation = match sense {
            Curvature::Convex => excess - tol,
            Curvature::Concave => -excess - tol,
        };
        if violation > 0.0 {
            out.push(Witness { points: vec![x1, x2, x3], violation });
        }
    }
    out
}

/// Re-evaluate the log-curvature defining quantity at a witness triple:
/// returns the chord excess of `ln phi`. Positive excess violates convexity;
/// negative violates concavity.
pub fn log_phi_chord_excess<G: ArchimedeanGenerator>(g: &G, x1: f64, x2: f64, x3: f64) -> f64 {
    chord_excess(|t| g.phi(t).ln(), x1, x2, x3)
}

/// Grid check of log-convexity or log-concavity of `phi`.
///
/// Points where `phi` has underflowed to zero are dropped; fewer than three
/// usable points yields `Inconclusive`.
pub fn check_log_convexity<G: ArchimedeanGenerator>(
    g: &G,
    sense: Curvature,
    grid: &GridSpec,
) -> Result<CheckReport> {
    if grid.count < 3 {
        return Err(Error::DegenerateGrid { need: 3, got: grid.count });
    }
    let xs: Vec<f64> = grid
        .log_points()
        .into_iter()
        .filter(|&t| g.phi(t) > PHI_ZERO_CLAMP)
        .collect();
    if xs.len() < 3 {
        return Ok(CheckReport::inconclusive(grid.describe(), SIGN_TOL));
    }
    let f = |t: f64| g.phi(t).ln();
    let witnesses = curvature_witnesses(f, &xs, sense);
    Ok(CheckReport::from_witnesses(witnesses, grid.describe(), SIGN_TOL))
}

/// The composed inverse `h = phi2_inv . phi1`, the object whose
/// superadditivity transfers orderings across two copulas. Saturates to
/// `+inf` past the representable range.
pub fn composed_inverse<G1, G2>(g1: &G1, g2: &G2, t: f64) -> f64
where
    G1: ArchimedeanGenerator,
    G2: ArchimedeanGenerator,
{
    let u = g1.phi(t);
    if u <= 0.0 {
        return f64::INFINITY;
    }
    g2.phi_inv_raw(u.min(1.0))
}

/// Superadditivity gap `h(x+y) - h(x) - h(y)` for `h = phi2_inv . phi1`;
/// negative values violate superadditivity.
pub fn superadditivity_gap<G1, G2>(g1: &G1, g2: &G2, x: f64, y: f64) -> f64
where
    G1: ArchimedeanGenerator,
    G2: ArchimedeanGenerator,
{
    composed_inverse(g1, g2, x + y) - composed_inverse(g1, g2, x) - composed_inverse(g1, g2, y)
}

/// 2-D grid check of superadditivity of `phi2_inv . phi1` (Lemma-style
/// copula comparison hypothesis).
///
/// Axis points where `h` is not representable are dropped. A pair whose sum
/// falls past the representable range satisfies the inequality trivially
/// (`h` is increasing), so such pairs never witness a failure.
pub fn check_superadditive_composition<G1, G2>(
    g1: &G1,
    g2: &G2,
    grid: &GridSpec,
) -> CheckReport
where
    G1: ArchimedeanGenerator,
    G2: ArchimedeanGenerator,
{
    let axis: Vec<(f64, f64)> = grid
        .log_points()
        .into_iter()
        .map(|x| (x, composed_inverse(g1, g2, x)))
        .filter(|&(_, h)| h.is_finite() && h.abs() < H_MAX)
        .collect();
    let desc = format!("{} squared", grid.describe());
    if axis.len() < 2 {
        return CheckReport::inconclusive(desc, SIGN_TOL);
    }
    let mut witnesses = Vec::new();
    for (i, &(x, hx)) in axis.iter().enumerate() {
        for &(y, hy) in &axis[i..] {
            let hxy = composed_inverse(g1, g2, x + y);
            if !hxy.is_finite() || hxy >= H_MAX {
                continue;
            }
            let tol = SIGN_TOL * (hx.abs() + hy.abs()).max(1.0);
            let gap = hxy - hx - hy;
            if gap < -tol {
                witnesses.push(Witness { points: vec![x, y], violation: -gap - tol });
            }
        }
    }
    CheckReport::from_witnesses(witnesses, desc, SIGN_TOL)
}

/// The ratio `phi (1 - phi) / phi'` whose monotonicity/curvature governs the
/// hazard-rate comparison theorems. Note `phi' < 0`, so the ratio is
/// non-positive.
pub fn hazard_ratio_value<G: ArchimedeanGenerator>(g: &G, t: f64) -> f64 {
    let p = g.phi(t);
    p * (1.0 - p) / g.phi_prime(t)
}

/// Grid check of a shape property of `phi (1 - phi) / phi'`.
pub fn check_ratio_shape<G: ArchimedeanGenerator>(
    g: &G,
    property: RatioProperty,
    grid: &GridSpec,
) -> Result<CheckReport> {
    if grid.count < 3 {
        return Err(Error::DegenerateGrid { need: 3, got: grid.count });
    }
    let mut xs = Vec::new();
    for t in grid.log_points() {
        if g.phi(t) <= PHI_ZERO_CLAMP {
            continue;
        }
        if g.phi_prime(t) == 0.0 {
            // A vanishing derivative inside the usable range leaves the
            // ratio undefined; abstain rather than guess.
            return Ok(CheckReport::inconclusive(grid.describe(), SIGN_TOL));
        }
        xs.push(t);
    }
    if xs.len() < 3 {
        return Ok(CheckReport::inconclusive(grid.describe(), SIGN_TOL));
    }
    let f = |t: f64| hazard_ratio_value(g, t);
    let witnesses = match property {
        RatioProperty::Decreasing => {
            let mut out = Vec::new();
            for w in xs.windows(2) {
                let (h1, h2) = (f(w[0]), f(w[1]));
                let tol = SIGN_TOL * h1.abs().max(h2.abs()).max(1.0);
                if h2 - h1 > tol {
                    out.push(Witness { points: vec![w[0], w[1]], violation: h2 - h1 - tol });
                }
            }
            out
        }
        RatioProperty::Convex => curvature_witnesses(f, &xs, Curvature::Convex),
        RatioProperty::Concave => curvature_witnesses(f, &xs, Curvature::Concave),
    };
    Ok(CheckReport::from_witnesses(witnesses, grid.describe(), SIGN_TOL))
}
