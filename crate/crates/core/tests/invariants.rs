//! Property-based invariants: generator roundtrips and signs, preorder chain
//! implications, order-verdict coherence, witness reproducibility.

use proptest::prelude::*;

use porel_core::checks::{
    check_ratio_shape, check_superadditive_composition, hazard_ratio_value, pair_grid, shape_grid,
    superadditivity_gap, RatioProperty, SIGN_TOL,
};
use porel_core::generator::PHI_ZERO_CLAMP;
use porel_core::{
    check_order, majorizes, ArchimedeanGenerator, BaselineDist, Extreme, GeneratorSpec,
    MajorizeMode, StochOrder, SystemModel, Verdict,
};

/// Any catalog generator with parameters in a convexity-valid range.
fn any_generator() -> impl Strategy<Value = GeneratorSpec> {
    prop_oneof![
        Just(GeneratorSpec::independence()),
        (0.3..8.0).prop_map(|t| GeneratorSpec::gh_exp(t).unwrap()),
        (0.3..3.0).prop_map(|t| GeneratorSpec::log_frac(t).unwrap()),
        (0.05..3.0).prop_map(|t| GeneratorSpec::log_pow(t).unwrap()),
        (0.1..1.0).prop_map(|t| GeneratorSpec::sech_pow(t).unwrap()),
        (0.1..1.0).prop_map(|t| GeneratorSpec::gumbel_frailty(t).unwrap()),
        (0.05..3.0).prop_map(|t| GeneratorSpec::clayton(t).unwrap()),
        (-1.0..0.0).prop_map(|t| GeneratorSpec::amh_like(t).unwrap()),
    ]
}

fn positive_vec(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.05..5.0f64, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn phi_inverse_roundtrip(g in any_generator(), raw in 1e-6..1.0f64) {
        let u = raw.max(g.inv_floor() * 1.01);
        let t = g.phi_inv(u).unwrap();
        let back = g.phi(t);
        prop_assert!((back - u).abs() <= 1e-10 * u, "{}: u={u} back={back}", g.name());
    }

    #[test]
    fn phi_decreasing_with_negative_derivative(g in any_generator(), t in 1e-4..40.0f64) {
        let hi = t.min(g.domain_hint() * 0.99);
        if g.phi(hi) > PHI_ZERO_CLAMP {
            prop_assert!(g.phi_prime(hi) < 0.0, "{} at {hi}", g.name());
            prop_assert!(g.phi(hi * 1.01) <= g.phi(hi) + 1e-14);
        }
    }

    #[test]
    fn majorization_chain(y in positive_vec(4), spread in 0.0..0.4f64, shift in 0.0..0.04f64) {
        // Build x >=m y by moving mass from the smallest to the largest
        // entry, then x' = x - shift which weakly supermajorizes y.
        let mut x = y.clone();
        let (mut lo_i, mut hi_i) = (0, 0);
        for (i, &v) in x.iter().enumerate() {
            if v < x[lo_i] { lo_i = i; }
            if v > x[hi_i] { hi_i = i; }
        }
        if lo_i != hi_i {
            let eps = spread * x[lo_i];
            x[lo_i] -= eps;
            x[hi_i] += eps;
        }
        prop_assert!(majorizes(&x, &y, MajorizeMode::Majorize).unwrap());
        prop_assert!(majorizes(&x, &y, MajorizeMode::WeakSupermajorize).unwrap());
        prop_assert!(majorizes(&x, &y, MajorizeMode::PLarger).unwrap());

        let x_shifted: Vec<f64> = x.iter().map(|v| v - shift.min(v * 0.5)).collect();
        prop_assert!(majorizes(&x_shifted, &y, MajorizeMode::WeakSupermajorize).unwrap());
        prop_assert!(majorizes(&x_shifted, &y, MajorizeMode::PLarger).unwrap());
    }

    #[test]
    fn chain_implications_on_unrelated_pairs(x in positive_vec(3), y in positive_vec(3)) {
        // The implications m => w => p must never be violated, related or not.
        if majorizes(&x, &y, MajorizeMode::Majorize).unwrap() {
            prop_assert!(majorizes(&x, &y, MajorizeMode::WeakSupermajorize).unwrap());
        }
        if majorizes(&x, &y, MajorizeMode::WeakSupermajorize).unwrap() {
            prop_assert!(majorizes(&x, &y, MajorizeMode::PLarger).unwrap());
        }
    }

    #[test]
    fn self_superadditivity_and_witness_reproducibility(
        g1 in any_generator(),
        g2 in any_generator(),
    ) {
        let report = check_superadditive_composition(&g1, &g2, &pair_grid(&g1, &g2));
        if g1 == g2 {
            prop_assert_eq!(report.verdict, Verdict::Holds);
        }
        for w in report.witnesses.iter().take(3) {
            let gap = superadditivity_gap(&g1, &g2, w.points[0], w.points[1]);
            prop_assert!(gap < -SIGN_TOL, "witness gap {gap} did not reproduce");
        }
    }

    #[test]
    fn ratio_witnesses_reproduce(g in any_generator()) {
        let grid = shape_grid(&g);
        let report = check_ratio_shape(&g, RatioProperty::Decreasing, &grid).unwrap();
        for w in report.witnesses.iter().take(3) {
            let (h1, h2) = (hazard_ratio_value(&g, w.points[0]), hazard_ratio_value(&g, w.points[1]));
            prop_assert!(h2 > h1 + SIGN_TOL * h1.abs().max(h2.abs()).max(1.0));
        }
    }
}

proptest! {
    // Order comparisons are heavier; fewer cases.
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exchangeability_under_alpha_permutation(
        g in any_generator(),
        mut alphas in positive_vec(3),
    ) {
        let base = BaselineDist::weibull(1.0, 1.5).unwrap();
        let a = SystemModel::new(base.clone(), alphas.clone(), g.clone()).unwrap();
        alphas.rotate_left(1);
        let b = SystemModel::new(base, alphas, g).unwrap();
        for &t in &[0.2, 0.7, 1.4, 2.2] {
            prop_assert_eq!(a.series_survival(t), b.series_survival(t));
            prop_assert_eq!(a.parallel_cdf(t), b.parallel_cdf(t));
        }
    }

    #[test]
    fn hr_implies_st_on_series(
        theta in -1.0..0.0f64,
        y in positive_vec(3),
        cut in 0.0..0.3f64,
    ) {
        // Same-generator systems whose survival ratio tends to 1 at zero:
        // an hr verdict must never contradict st on the same grid.
        let g = GeneratorSpec::amh_like(theta).unwrap();
        let base = BaselineDist::weibull(1.0, 1.5).unwrap();
        let x: Vec<f64> = y.iter().map(|v| (v - cut).max(0.02)).collect();
        let a = SystemModel::new(base.clone(), x, g.clone()).unwrap();
        let b = SystemModel::new(base, y, g).unwrap();
        let grid = a.comparison_grid(200);
        let hr = check_order(&a, &b, StochOrder::Hr, Extreme::Series, &grid).unwrap();
        if hr.verdict == Verdict::Holds {
            let st = check_order(&a, &b, StochOrder::St, Extreme::Series, &grid).unwrap();
            prop_assert!(
                st.verdict != Verdict::Fails,
                "hr held but st failed"
            );
        }
    }
}
