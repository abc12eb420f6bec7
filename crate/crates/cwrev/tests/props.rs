//! Property-based invariants over randomized profiles, plus the dense
//! linear-system oracle for the piecewise coefficient recursion.

mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cwrev::functionals::{
    deficit_boundary_form, deficit_piecewise_exact, deficit_quadrature, ratio,
};
use cwrev::geometry;
use cwrev::profile::{Body, PiecewiseTrigProfile, Profile, SineSeriesProfile};
use cwrev::search::random_feasible_breakpoints;

fn sine_profile() -> impl Strategy<Value = SineSeriesProfile> {
    prop::collection::vec(-1.0f64..1.0, 1..7).prop_map(|raw| {
        let damped: Vec<f64> = raw
            .into_iter()
            .enumerate()
            .map(|(k, c)| c * 0.5f64.powi(k as i32))
            .collect();
        SineSeriesProfile::new(damped).expect("finite coefficients")
    })
}

fn piecewise_profile(max_k: usize) -> impl Strategy<Value = PiecewiseTrigProfile> {
    (1..=max_k, any::<u64>(), any::<bool>(), -0.5f64..0.5).prop_map(
        |(k, seed, flip, offset)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let breakpoints = random_feasible_breakpoints(k, &mut rng).expect("k >= 1");
            let sign = if flip { -1.0 } else { 1.0 };
            PiecewiseTrigProfile::new(breakpoints, sign, offset).expect("sampled set is valid")
        },
    )
}

proptest! {
    /// Both circle symmetries hold for every representation at any angle.
    #[test]
    fn extension_symmetries(profile in sine_profile(), t in -12.0f64..12.0) {
        let p = Profile::SineSeries(profile);
        prop_assert!((p.eval(t).h + p.eval(t + PI).h).abs() < 1e-12);
        prop_assert!((p.eval(t).h - p.eval(PI - t).h).abs() < 1e-12);
    }

    #[test]
    fn extension_symmetries_piecewise(profile in piecewise_profile(5), t in -12.0f64..12.0) {
        let p = Profile::Piecewise(profile);
        prop_assert!((p.eval(t).h + p.eval(t + PI).h).abs() < 1e-12);
        prop_assert!((p.eval(t).h - p.eval(PI - t).h).abs() < 1e-12);
    }

    /// Constructed piecewise profiles satisfy the closure identity.
    #[test]
    fn closure_identity(profile in piecewise_profile(6)) {
        prop_assert!(profile.closure_residual() < 1e-12);
        prop_assert!(Profile::Piecewise(profile).validate().is_valid());
    }

    /// The coefficient recursion agrees with a dense linear-system solve of
    /// {h(0) = 0, B_0 = offset, C1 continuity at every breakpoint}, and the
    /// held-out condition h'(pi/2) = 0 holds for feasible breakpoint sets.
    #[test]
    fn coefficient_recursion_matches_dense_solve(profile in piecewise_profile(6)) {
        let k = profile.breakpoints().len();
        let n = 2 * (k + 1);
        // unknowns: A_0..A_k, B_0..B_k
        let mut matrix = vec![vec![0.0; n]; n];
        let mut rhs = vec![0.0; n];
        let sigma = |i: usize| profile.leading_sign() * if i % 2 == 0 { 1.0 } else { -1.0 };
        // h(0) = 0: A_0 + sigma_0 = 0
        matrix[0][0] = 1.0;
        rhs[0] = -sigma(0);
        // pin the translation freedom: B_0 = offset
        matrix[1][k + 1] = 1.0;
        rhs[1] = profile.vertical_offset();
        for (i, &tau) in profile.breakpoints().iter().enumerate() {
            let (sin, cos) = tau.sin_cos();
            let value_row = 2 + 2 * i;
            matrix[value_row][i] = cos;
            matrix[value_row][k + 1 + i] = sin;
            matrix[value_row][i + 1] = -cos;
            matrix[value_row][k + 1 + i + 1] = -sin;
            rhs[value_row] = sigma(i + 1) - sigma(i);
            let slope_row = value_row + 1;
            matrix[slope_row][i] = -sin;
            matrix[slope_row][k + 1 + i] = cos;
            matrix[slope_row][i + 1] = sin;
            matrix[slope_row][k + 1 + i + 1] = -cos;
        }
        let solution = common::solve_dense(matrix, rhs).expect("system is nonsingular");
        for (i, piece) in profile.pieces().iter().enumerate() {
            prop_assert!((solution[i] - piece.cos_coeff).abs() < 1e-12,
                "A_{i}: dense {} vs recursion {}", solution[i], piece.cos_coeff);
            prop_assert!((solution[k + 1 + i] - piece.sin_coeff).abs() < 1e-12,
                "B_{i}: dense {} vs recursion {}", solution[k + 1 + i], piece.sin_coeff);
        }
        // h'(pi/2) = -A_k: implied by closure, not used in the solve
        prop_assert!(solution[k].abs() < 1e-12);
    }

    /// Support-function widths are constant for any valid body.
    #[test]
    fn width_constancy(profile in piecewise_profile(4), dw in 0.0f64..1.0, t in -10.0f64..10.0) {
        let p = Profile::Piecewise(profile);
        let body = Body::new(p, 1.0 + dw).expect("w >= w0 = 1");
        prop_assert!((geometry::width_at(&body, t) - body.width()).abs() < 1e-10);
    }

    /// Valid bodies are convex: the radius of curvature never dips below
    /// the feasibility tolerance, and is strictly positive somewhere.
    #[test]
    fn convexity_for_valid_bodies(profile in sine_profile(), dw in 0.0f64..1.0) {
        let p = Profile::SineSeries(profile);
        let w = p.critical_half_width() + dw;
        prop_assume!(w > 1e-6);
        let (_, rho_min) = geometry::min_radius_of_curvature(&p, w, 512);
        prop_assert!(rho_min >= -1e-9, "rho_min = {rho_min}");
        let body = Body::new(p, w).expect("valid");
        let rho_max = geometry::sample_curve(&body, 512)
            .iter()
            .map(|s| s.rho)
            .fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(rho_max > 0.0);
    }

    /// The ratio is invariant under the homothety (h, w) -> (lambda h, lambda w).
    #[test]
    fn ratio_scale_invariance(profile in sine_profile(), lambda in 0.1f64..5.0, dw in 0.01f64..1.0) {
        let w = profile.critical_half_width() + dw;
        let scaled: Vec<f64> = profile.coefficients().iter().map(|c| lambda * c).collect();
        let base = Body::new(Profile::SineSeries(profile), w).expect("valid");
        let scaled = Body::new(
            Profile::SineSeries(SineSeriesProfile::new(scaled).expect("finite")),
            lambda * w,
        )
        .expect("valid");
        prop_assert!((ratio(&base) - ratio(&scaled)).abs() < 1e-12);
    }

    /// Adaptive quadrature of the deficit agrees with an independent
    /// composite-Simpson evaluation.
    #[test]
    fn deficit_quadrature_matches_simpson(profile in sine_profile()) {
        let p = Profile::SineSeries(profile);
        let adaptive = deficit_quadrature(&p);
        let simpson = common::simpson_deficit(
            |t| {
                let e = p.eval(t);
                (e.h, e.dh)
            },
            20_000,
        );
        prop_assert!((adaptive - simpson).abs() < 1e-9,
            "adaptive {adaptive} vs simpson {simpson}");
    }

    /// The three evaluation routes of the deficit agree on piecewise
    /// profiles.
    #[test]
    fn deficit_routes_agree(profile in piecewise_profile(4)) {
        let exact = deficit_piecewise_exact(&profile);
        let p = Profile::Piecewise(profile);
        prop_assert!((deficit_quadrature(&p) - exact).abs() < 1e-9);
        prop_assert!((deficit_boundary_form(&p) - exact).abs() < 1e-9);
    }

    /// Piecewise profiles always have critical width exactly 1, and the
    /// curve closes onto the axis at both poles.
    #[test]
    fn critical_width_and_poles(profile in piecewise_profile(5)) {
        let p = Profile::Piecewise(profile);
        prop_assert_eq!(p.critical_half_width(), 1.0);
        let body = Body::new(p, 1.0).expect("valid");
        prop_assert!(geometry::curve_point(&body, FRAC_PI_2)[0].abs() < 1e-9);
        prop_assert!(geometry::curve_point(&body, -FRAC_PI_2)[0].abs() < 1e-9);
    }
}

#[test]
fn simpson_oracle_reproduces_the_analytic_third_harmonic_value() {
    // F(sin 3t) = -64/35; the oracle must stand on its own
    let value = common::simpson_deficit(|t| ((3.0 * t).sin(), 3.0 * (3.0 * t).cos()), 200_000);
    assert!((value + 64.0 / 35.0).abs() < 1e-10);
}
