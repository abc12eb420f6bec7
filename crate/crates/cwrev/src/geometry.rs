//! Reconstruction of the generating curve and surface of revolution from a
//! body, plus the scalar geometry checks (width, convexity, area).
//!
//! The generating curve is recovered from the support function `s = h + w`
//! by `gamma(t) = s e^{it} + s' i e^{it}`, i.e.
//!
//! ```text
//! x(t) = s cos t - s' sin t,    y(t) = s sin t + s' cos t,
//! ```
//!
//! parametrized by the angle `t in [-pi/2, pi/2]` of the outward normal.
//! The parametrization stays valid where the curve is singular (radius of
//! curvature `s'' + s = 0`); there the point is stationary over an interval
//! of normals. The surface point at angles `(t, theta)` is
//! `(x cos theta, x sin theta, y)`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::profile::{Body, Profile};
use crate::quad;

/// Evaluated record along the generating curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub t: f64,
    pub h: f64,
    pub dh: f64,
    pub ddh: f64,
    /// support value `s = h + w`
    pub support: f64,
    pub x: f64,
    pub y: f64,
    /// radius of curvature `s'' + s = h'' + h + w >= 0`
    pub rho: f64,
}

/// Point of the generating curve at normal angle `t`.
pub fn curve_point(body: &Body, t: f64) -> [f64; 2] {
    let e = body.profile().eval(t);
    let s = e.h + body.half_width();
    let (sin, cos) = t.sin_cos();
    [s * cos - e.dh * sin, s * sin + e.dh * cos]
}

/// Radius of curvature `h'' + h + w` of the generating curve; zero marks a
/// vertex, `2w` an arc of the rolling circle.
pub fn radius_of_curvature(body: &Body, t: f64) -> f64 {
    let e = body.profile().eval(t);
    e.ddh + e.h + body.half_width()
}

/// `s(t) + s(t + pi)`; equal to the width `2w` for every `t`.
pub fn width_at(body: &Body, t: f64) -> f64 {
    body.support(t) + body.support(t + PI)
}

/// Point of the boundary surface at normal angle `t` and rotation `theta`.
pub fn surface_point(body: &Body, t: f64, theta: f64) -> [f64; 3] {
    let [x, y] = curve_point(body, t);
    let (sin, cos) = theta.sin_cos();
    [x * cos, x * sin, y]
}

/// `n` uniform samples of the generating curve over `[-pi/2, pi/2]`.
pub fn sample_curve(body: &Body, n: usize) -> Vec<ProfileSample> {
    assert!(n >= 2, "need at least the two poles");
    (0..n)
        .map(|i| {
            let t = -FRAC_PI_2 + PI * i as f64 / (n - 1) as f64;
            let e = body.profile().eval(t);
            let [x, y] = curve_point(body, t);
            ProfileSample {
                t,
                h: e.h,
                dh: e.dh,
                ddh: e.ddh,
                support: e.h + body.half_width(),
                x,
                y,
                rho: e.ddh + e.h + body.half_width(),
            }
        })
        .collect()
}

/// Minimum of the radius of curvature over a scan of `[-pi/2, pi/2]`
/// (uniform grid plus piecewise breakpoints and their mirror images).
/// Works on a raw `(profile, w)` pair so infeasible widths can be probed.
pub fn min_radius_of_curvature(profile: &Profile, half_width: f64, samples: usize) -> (f64, f64) {
    let mut grid: Vec<f64> = (0..=samples)
        .map(|i| -FRAC_PI_2 + PI * i as f64 / samples as f64)
        .collect();
    if let Profile::Piecewise(p) = profile {
        for &tau in p.breakpoints() {
            grid.push(tau);
            grid.push(-tau);
        }
        grid.push(0.0);
    }
    let mut worst_t = grid[0];
    let mut worst = f64::INFINITY;
    for t in grid {
        let e = profile.eval(t);
        let rho = e.ddh + e.h + half_width;
        if rho < worst {
            worst = rho;
            worst_t = t;
        }
    }
    (worst_t, worst)
}

/// Area of the boundary surface,
/// `A = 2 pi int_{-pi/2}^{pi/2} x(t) (s'' + s) dt`
/// (circumference of the latitude circle times the arc-length element).
///
/// Piecewise profiles use exact per-piece antiderivatives; sine series use
/// adaptive quadrature. Consistent with the volume through the Blaschke
/// identity `V = A w - (8 pi / 3) w^3`.
pub fn surface_area(body: &Body) -> f64 {
    let w = body.half_width();
    match body.profile() {
        Profile::Piecewise(p) => {
            // On each piece x = A + rho cos t with constant rho = sigma + w,
            // so int x rho dt = rho (A t + rho sin t). On the mirrored side
            // t < 0 the piece (A, sigma) becomes (-A, -sigma).
            let mut edges = Vec::with_capacity(p.breakpoints().len() + 2);
            edges.push(0.0);
            edges.extend_from_slice(p.breakpoints());
            edges.push(FRAC_PI_2);
            let mut acc = 0.0;
            for (i, piece) in p.pieces().iter().enumerate() {
                let (lo, hi) = (edges[i], edges[i + 1]);
                let anti = |a: f64, rho: f64, t: f64| rho * (a * t + rho * t.sin());
                let rho_pos = piece.constant + w;
                acc += anti(piece.cos_coeff, rho_pos, hi) - anti(piece.cos_coeff, rho_pos, lo);
                let rho_neg = w - piece.constant;
                acc += anti(-piece.cos_coeff, rho_neg, -lo) - anti(-piece.cos_coeff, rho_neg, -hi);
            }
            2.0 * PI * acc
        }
        Profile::SineSeries(_) => {
            let integrand = |t: f64| {
                let e = body.profile().eval(t);
                let s = e.h + w;
                let x = s * t.cos() - e.dh * t.sin();
                x * (e.ddh + e.h + w)
            };
            2.0 * PI * quad::integrate(integrand, -FRAC_PI_2, FRAC_PI_2, quad::DEFAULT_TOL)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{PiecewiseTrigProfile, SineSeriesProfile};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn reuleaux_body() -> Body {
        Body::new(Profile::Piecewise(PiecewiseTrigProfile::reuleaux()), 1.0).unwrap()
    }

    fn ball_body(c: f64, w: f64) -> Body {
        Body::new(Profile::ball(c).unwrap(), w).unwrap()
    }

    #[test]
    fn reuleaux_curve_passes_through_the_vertices() {
        let body = reuleaux_body();
        let p0 = curve_point(&body, 0.0);
        assert!((p0[0] - 1.0).abs() < 1e-12 && p0[1].abs() < 1e-12);
        let top = curve_point(&body, FRAC_PI_2);
        assert!(top[0].abs() < 1e-12);
        assert!((top[1] - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn ball_curve_is_a_circle_centered_on_the_axis() {
        let body = ball_body(0.3, 1.0);
        for i in 0..64 {
            let t = -FRAC_PI_2 + PI * i as f64 / 63.0;
            let [x, y] = curve_point(&body, t);
            // circle of radius w centered at (0, c)
            let r = (x * x + (y - 0.3) * (y - 0.3)).sqrt();
            assert!((r - 1.0).abs() < 1e-12);
        }
        let body = ball_body(0.0, 1.0);
        let [x, y] = curve_point(&body, 0.4);
        assert!((x - 0.4f64.cos()).abs() < 1e-14);
        assert!((y - 0.4f64.sin()).abs() < 1e-14);
    }

    #[test]
    fn reuleaux_curvature_alternates_between_arc_and_vertex() {
        let body = reuleaux_body();
        for t in [0.1, 0.5, 1.0] {
            assert!((radius_of_curvature(&body, t) - 2.0).abs() < 1e-12);
        }
        for t in [1.1, 1.3, 1.5] {
            assert!(radius_of_curvature(&body, t).abs() < 1e-12);
        }
        let ball = ball_body(0.5, 1.0);
        for i in 0..32 {
            let t = -1.5 + 3.0 * i as f64 / 31.0;
            assert!((radius_of_curvature(&ball, t) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn width_is_constant_in_every_direction() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let bodies = [
            reuleaux_body(),
            ball_body(0.4, 0.7),
            Body::new(
                Profile::SineSeries(SineSeriesProfile::new(vec![0.3, -0.1, 0.02]).unwrap()),
                2.0,
            )
            .unwrap(),
        ];
        for body in &bodies {
            for _ in 0..1000 {
                let t: f64 = rng.random_range(-10.0..10.0);
                assert!((width_at(body, t) - body.width()).abs() < 1e-10);
            }
        }
        assert!((width_at(&reuleaux_body(), 0.0) - 2.0).abs() < 1e-12);
        assert!((width_at(&ball_body(0.0, 0.7), 1.23) - 1.4).abs() < 1e-12);
    }

    #[test]
    fn surface_points_at_poles_do_not_depend_on_theta() {
        let body = reuleaux_body();
        let sqrt3 = 3f64.sqrt();
        for theta in [0.0, 1.0, 2.0, 5.0] {
            let top = surface_point(&body, FRAC_PI_2, theta);
            assert!(top[0].abs() < 1e-9 && top[1].abs() < 1e-9);
            assert!((top[2] - sqrt3).abs() < 1e-12);
            let bottom = surface_point(&body, -FRAC_PI_2, theta);
            assert!(bottom[0].abs() < 1e-9 && bottom[1].abs() < 1e-9);
            assert!((bottom[2] - (sqrt3 - 2.0)).abs() < 1e-12);
        }
        let ball = ball_body(0.0, 1.0);
        let p = surface_point(&ball, 0.0, FRAC_PI_2);
        assert!(p[0].abs() < 1e-12 && (p[1] - 1.0).abs() < 1e-12 && p[2].abs() < 1e-12);
    }

    #[test]
    fn pole_closure_for_random_bodies() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let coeffs: Vec<f64> = (0..5)
                .map(|k| rng.random_range(-1.0..1.0) * 0.5f64.powi(k))
                .collect();
            let p = Profile::SineSeries(SineSeriesProfile::new(coeffs).unwrap());
            let w = p.critical_half_width() + 0.2;
            let body = Body::new(p, w).unwrap();
            assert!(curve_point(&body, FRAC_PI_2)[0].abs() < 1e-9);
            assert!(curve_point(&body, -FRAC_PI_2)[0].abs() < 1e-9);
        }
    }

    #[test]
    fn sample_curve_records_are_consistent() {
        let body = reuleaux_body();
        let samples = sample_curve(&body, 257);
        assert_eq!(samples.len(), 257);
        assert!(samples[0].x.abs() < 1e-9);
        assert!(samples[256].x.abs() < 1e-9);
        for s in &samples {
            assert!(s.rho >= -1e-9);
            assert!((s.support - (s.h + 1.0)).abs() < 1e-15);
        }
    }

    #[test]
    fn min_curvature_detects_subcritical_width() {
        let p = Profile::Piecewise(PiecewiseTrigProfile::reuleaux());
        let (_, rho_ok) = min_radius_of_curvature(&p, 1.0, 512);
        assert!(rho_ok >= -1e-12 && rho_ok.abs() < 1e-12);
        let (_, rho_bad) = min_radius_of_curvature(&p, 0.95, 512);
        assert!((rho_bad + 0.05).abs() < 1e-12);

        let s = SineSeriesProfile::new(vec![0.2, 0.1, -0.05]).unwrap();
        let w0 = s.critical_half_width();
        let sp = Profile::SineSeries(s);
        let (_, rho) = min_radius_of_curvature(&sp, w0 - 0.05, 2048);
        assert!(rho < -1e-3, "sharpness of w0: got {rho}");
        let (_, rho) = min_radius_of_curvature(&sp, w0 + 0.01, 2048);
        assert!(rho >= -1e-9);
    }

    #[test]
    fn area_of_reference_bodies() {
        assert!((surface_area(&ball_body(0.0, 1.0)) - 4.0 * PI).abs() < 1e-9);
        assert!((surface_area(&ball_body(0.0, 0.5)) - PI).abs() < 1e-9);
        // A = 4 pi (w^2 + F) = (4 pi / 3)(6 - pi) for the Reuleaux body at w = 1
        let expected = 4.0 * PI / 3.0 * (6.0 - PI);
        assert!((surface_area(&reuleaux_body()) - expected).abs() < 1e-12);
    }

    #[test]
    fn blaschke_identity_on_random_bodies() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..50 {
            let body = if i % 3 == 0 {
                let u1: f64 = rng.random_range(0.55..0.95);
                let taus = vec![u1.acos(), (u1 - 0.5).acos()];
                Body::new(
                    Profile::Piecewise(PiecewiseTrigProfile::new(taus, 1.0, 0.0).unwrap()),
                    1.0 + rng.random_range(0.0..1.0),
                )
                .unwrap()
            } else {
                let coeffs: Vec<f64> = (0..4)
                    .map(|k| rng.random_range(-1.0..1.0) * 0.5f64.powi(k))
                    .collect();
                let p = Profile::SineSeries(SineSeriesProfile::new(coeffs).unwrap());
                let w = p.critical_half_width() + rng.random_range(0.05..1.0);
                Body::new(p, w).unwrap()
            };
            let w = body.half_width();
            let v = crate::functionals::volume(&body);
            let a = surface_area(&body);
            let blaschke = a * w - 8.0 * PI / 3.0 * w * w * w;
            assert!(
                ((v - blaschke) / v).abs() < 1e-6,
                "relative residual {} at body {i}",
                ((v - blaschke) / v).abs()
            );
        }
    }
}
