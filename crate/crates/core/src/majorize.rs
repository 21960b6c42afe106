//! Vector preorders of the majorization family, decided on sorted copies
//! with a small absolute slack to absorb float ties.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute slack when comparing partial sums/products.
pub const MAJORIZE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MajorizeMode {
    /// Ascending partial sums of `x` below those of `y`, equal totals.
    Majorize,
    /// Ascending partial sums of `x` below those of `y` for every prefix.
    WeakSupermajorize,
    /// Ascending partial products of `x` below those of `y` for every
    /// prefix; requires strictly positive entries.
    PLarger,
}

/// Does `x` dominate `y` in the given preorder?
pub fn majorizes(x: &[f64], y: &[f64], mode: MajorizeMode) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if matches!(mode, MajorizeMode::PLarger) && x.iter().chain(y).any(|&v| v <= 0.0) {
        return Err(Error::NonPositiveEntry);
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).expect("no NaN"));
    ys.sort_by(|a, b| a.partial_cmp(b).expect("no NaN"));

    match mode {
        MajorizeMode::Majorize => {
            let (mut sx, mut sy) = (0.0, 0.0);
            for i in 0..xs.len() {
                sx += xs[i];
                sy += ys[i];
                if i + 1 < xs.len() && sx > sy + MAJORIZE_SLACK {
                    return Ok(false);
                }
            }
            Ok((sx - sy).abs() <= MAJORIZE_SLACK * sx.abs().max(sy.abs()).max(1.0))
        }
        MajorizeMode::WeakSupermajorize => {
            let (mut sx, mut sy) = (0.0, 0.0);
            for i in 0..xs.len() {
                sx += xs[i];
                sy += ys[i];
                if sx > sy + MAJORIZE_SLACK {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        MajorizeMode::PLarger => {
            let (mut px, mut py) = (1.0, 1.0);
            for i in 0..xs.len() {
                px *= xs[i];
                py *= ys[i];
                if px > py + MAJORIZE_SLACK {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Prefix sums (ascending order) used when reporting witnesses.
pub fn ascending_prefix_sums(v: &[f64]) -> Vec<f64> {
    let mut s = v.to_vec();
    s.sort_by(|a, b| a.partial_cmp(b).expect("no NaN"));
    let mut acc = 0.0;
    s.iter_mut().for_each(|e| {
        acc += *e;
        *e = acc;
    });
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exemplar_p_larger_pair() {
        // Products: 2 <= 2.5, 6 <= 8.75, 33 <= 33.25.
        let x = [2.0, 3.0, 5.5];
        let y = [2.5, 3.5, 3.8];
        assert!(majorizes(&x, &y, MajorizeMode::PLarger).unwrap());
        assert!(!majorizes(&x, &y, MajorizeMode::WeakSupermajorize).unwrap());
        assert!(!majorizes(&x, &y, MajorizeMode::Majorize).unwrap());
    }

    #[test]
    fn exemplar_weak_pair() {
        // Sums: 0.2 <= 0.35, 0.6 <= 0.9, 1.2 <= 1.85.
        let x = [0.2, 0.4, 0.6];
        let y = [0.35, 0.55, 0.95];
        assert!(majorizes(&x, &y, MajorizeMode::WeakSupermajorize).unwrap());
        assert!(majorizes(&x, &y, MajorizeMode::PLarger).unwrap());
        assert!(!majorizes(&x, &y, MajorizeMode::Majorize).unwrap());
    }

    #[test]
    fn reflexive_in_every_mode() {
        let x = [1.0, 2.0, 3.0];
        for mode in [MajorizeMode::Majorize, MajorizeMode::WeakSupermajorize, MajorizeMode::PLarger]
        {
            assert!(majorizes(&x, &x, mode).unwrap());
        }
    }

    #[test]
    fn classic_spread() {
        // (0, 2) majorizes (1, 1).
        assert!(majorizes(&[0.0, 2.0], &[1.0, 1.0], MajorizeMode::Majorize).unwrap());
        assert!(!majorizes(&[1.0, 1.0], &[0.0, 2.0], MajorizeMode::Majorize).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            majorizes(&[1.0], &[1.0, 2.0], MajorizeMode::Majorize),
            Err(Error::LengthMismatch(1, 2))
        ));
        assert!(matches!(
            majorizes(&[0.0, 2.0], &[1.0, 1.0], MajorizeMode::PLarger),
            Err(Error::NonPositiveEntry)
        ));
    }
}
