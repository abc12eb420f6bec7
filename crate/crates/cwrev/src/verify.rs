//! Executable verification battery: the structural facts of the model
//! packaged as deterministic randomized checks with exact violation
//! counting. This is the engine behind `cwrev verify`.

use std::f64::consts::FRAC_PI_2;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::functionals::{
    self, deficit_bilinear_tol, deficit_piecewise_exact, deficit_quadrature,
    deficit_quadrature_tol, REULEAUX_DEFICIT,
};
use crate::geometry;
use crate::profile::{Body, PiecewiseTrigProfile, Profile, SineSeriesProfile};
use crate::search::{self, AmplitudeTriple};

/// Result of one property battery. Identical seeds give identical
/// outcomes except for `elapsed_secs`.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyOutcome {
    pub id: String,
    pub samples: usize,
    pub violations: usize,
    /// Most adverse residual seen, reported even when everything passes.
    pub worst_residual: f64,
    pub elapsed_secs: f64,
}

struct Battery {
    id: &'static str,
    started: Instant,
    samples: usize,
    violations: usize,
    worst: f64,
}

impl Battery {
    fn new(id: &'static str) -> Self {
        Self {
            id,
            started: Instant::now(),
            samples: 0,
            violations: 0,
            worst: 0.0,
        }
    }

    /// Record one check: `ok` must hold, `residual` measures how close the
    /// check came to failing (larger is worse).
    fn check(&mut self, ok: bool, residual: f64) {
        self.samples += 1;
        if !ok {
            self.violations += 1;
        }
        if residual.is_nan() || residual > self.worst {
            self.worst = residual;
        }
    }

    fn finish(self) -> PropertyOutcome {
        PropertyOutcome {
            id: self.id.to_string(),
            samples: self.samples,
            violations: self.violations,
            worst_residual: self.worst,
            elapsed_secs: self.started.elapsed().as_secs_f64(),
        }
    }
}

/// Random sine-series profile: coefficients uniform in [-1, 1] with
/// geometric damping `2^-k` to keep the critical width moderate.
pub fn random_sine_profile<R: Rng>(rng: &mut R) -> SineSeriesProfile {
    let m: i32 = rng.random_range(2..=8);
    let coeffs: Vec<f64> = (0..m)
        .map(|k| rng.random_range(-1.0..1.0) * 0.5f64.powi(k))
        .collect();
    SineSeriesProfile::new(coeffs).expect("finite coefficients")
}

/// Random piecewise profile with `k` breakpoints projected onto the
/// closure manifold; random leading sign and vertical offset.
pub fn random_piecewise_profile<R: Rng>(rng: &mut R, k: usize) -> PiecewiseTrigProfile {
    let breakpoints =
        search::random_feasible_breakpoints(k, rng).expect("k >= 1 always has feasible points");
    let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    let offset = rng.random_range(-0.5..0.5);
    PiecewiseTrigProfile::new(breakpoints, sign, offset).expect("sampled breakpoints are valid")
}

/// Weighted Wirtinger inequality: `F(h) <= 0` on random sine profiles,
/// with equality exactly on the pure first harmonic.
pub fn run_wirtinger(samples: usize, seed: u64) -> PropertyOutcome {
    let mut battery = Battery::new("wirtinger");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let f = deficit_quadrature(&Profile::SineSeries(random_sine_profile(&mut rng)));
        battery.check(f <= 1e-12, f);
    }
    // equality case: the pure first harmonic
    let f = deficit_quadrature(&Profile::ball(1.0).expect("finite"));
    battery.check(f.abs() < 1e-12, f.abs());
    // sharpness: any higher harmonic of magnitude 1e-3 drives F below -1e-9
    for k in 1..=8 {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[0] = 0.5;
        coeffs[k] = 1e-3;
        let p = Profile::SineSeries(SineSeriesProfile::new(coeffs).expect("finite"));
        let f = deficit_quadrature(&p);
        battery.check(f <= -1e-9, f);
    }
    battery.finish()
}

/// The profile/width correspondence: constant width, pole closure and
/// convexity hold for every `w >= w0`, convexity fails below `w0`, and the
/// critical width is attained (a vertex exists) at `w = w0` for piecewise
/// profiles.
pub fn run_bijection_checks(samples: usize, seed: u64) -> PropertyOutcome {
    let mut battery = Battery::new("bijection");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let piecewise = i % 2 == 0;
        let profile = if piecewise {
            Profile::Piecewise(random_piecewise_profile(&mut rng, 1 + i % 3))
        } else {
            // rescale so w0 = 1: keeps the sharpness probe meaningful
            let raw = random_sine_profile(&mut rng);
            let w0 = raw.critical_half_width();
            if w0 < 1e-6 {
                continue;
            }
            let coeffs: Vec<f64> = raw.coefficients().iter().map(|c| c / w0).collect();
            Profile::SineSeries(SineSeriesProfile::new(coeffs).expect("finite"))
        };
        let w0 = profile.critical_half_width();
        for dw in [0.0, 0.1, 1.0] {
            let w = w0 + dw;
            let body = match Body::new(profile.clone(), w) {
                Ok(b) => b,
                Err(_) => {
                    battery.check(false, f64::INFINITY);
                    continue;
                }
            };
            let mut width_residual = 0.0f64;
            for _ in 0..32 {
                let t: f64 = rng.random_range(-10.0..10.0);
                width_residual = width_residual.max((geometry::width_at(&body, t) - 2.0 * w).abs());
            }
            battery.check(width_residual < 1e-10, width_residual);
            let pole = geometry::curve_point(&body, FRAC_PI_2)[0]
                .abs()
                .max(geometry::curve_point(&body, -FRAC_PI_2)[0].abs());
            battery.check(pole < 1e-9, pole);
            let (_, rho_min) = geometry::min_radius_of_curvature(&profile, w, 512);
            battery.check(rho_min >= -1e-9, -rho_min);
            if piecewise && dw == 0.0 {
                // a vertex is present exactly at the critical width
                battery.check(rho_min.abs() <= 1e-9, rho_min.abs());
            }
        }
        // sharpness of w0: convexity must fail below it
        let (_, rho_min) = geometry::min_radius_of_curvature(&profile, w0 - 0.05, 1024);
        battery.check(rho_min < -1e-9, rho_min);
    }
    // a ball has constant radius of curvature equal to its half width
    let ball = Profile::ball(0.4).expect("finite");
    let (_, rho_min) = geometry::min_radius_of_curvature(&ball, 1.0, 512);
    battery.check((rho_min - 1.0).abs() < 1e-12, (rho_min - 1.0).abs());
    battery.finish()
}

/// The variational mechanics: ratio monotone in the width, exact
/// quadratic expansion of the deficit, merge monotonicity, the sign laws
/// of the middle-shift derivative, and the global lower bound
/// `F >= 1 - pi/3` over the piecewise family.
pub fn run_variational_checks(samples: usize, seed: u64) -> PropertyOutcome {
    let mut battery = Battery::new("variational");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // ratio monotonicity in w whenever F < 0
    for i in 0..samples.min(100) {
        let profile = Profile::Piecewise(random_piecewise_profile(&mut rng, 1 + i % 4));
        let w0 = profile.critical_half_width();
        let mut last = f64::NEG_INFINITY;
        let mut min_gap = f64::INFINITY;
        for dw in [0.0, 0.2, 0.5, 1.0] {
            let r = functionals::ratio(&Body::new(profile.clone(), w0 + dw).expect("w >= w0"));
            if last > f64::NEG_INFINITY {
                min_gap = min_gap.min(r - last);
            }
            last = r;
        }
        battery.check(min_gap > 0.0, -min_gap);
    }

    // exact quadratic expansion of the deficit
    for _ in 0..samples.min(50) {
        let h = random_sine_profile(&mut rng);
        let v = random_sine_profile(&mut rng);
        let hp = Profile::SineSeries(h.clone());
        let vp = Profile::SineSeries(v.clone());
        for eps in [0.1, 0.01] {
            let len = h.coefficients().len().max(v.coefficients().len());
            let mut coeffs = vec![0.0; len];
            for (i, &c) in h.coefficients().iter().enumerate() {
                coeffs[i] += c;
            }
            for (i, &c) in v.coefficients().iter().enumerate() {
                coeffs[i] += eps * c;
            }
            let moved = Profile::SineSeries(SineSeriesProfile::new(coeffs).expect("finite"));
            let lhs = deficit_quadrature_tol(&moved, 1e-12);
            let rhs = deficit_quadrature_tol(&hp, 1e-12)
                + 2.0 * eps * deficit_bilinear_tol(&hp, &vp, 1e-12)
                + eps * eps * deficit_quadrature_tol(&vp, 1e-12);
            battery.check((lhs - rhs).abs() < 1e-10, (lhs - rhs).abs());
        }
    }

    // merge monotonicity on the two-breakpoint stratum
    for _ in 0..samples {
        let u1: f64 = rng.random_range(0.505..0.995);
        let profile =
            PiecewiseTrigProfile::new(vec![u1.acos(), (u1 - 0.5).acos()], 1.0, 0.0)
                .expect("closure by construction");
        let before = deficit_piecewise_exact(&profile);
        let merged = search::merge_triple(&profile, 0).expect("k = 2 always merges");
        let after = deficit_piecewise_exact(&merged);
        let delta = search::triple_at(&profile, 0)
            .and_then(|t| t.merge_deficit_delta())
            .expect("triple is admissible");
        battery.check(after < before, after - before);
        let mismatch = (delta - (after - before)).abs();
        battery.check(mismatch < 1e-10, mismatch);
    }

    // sign laws of the middle-shift derivative
    for _ in 0..samples {
        // x <= y: derivative strictly negative
        let y: f64 = rng.random_range(0.1..1.4);
        let hi = y.min(2.0 - y - 0.01);
        if hi > 0.05 {
            let x: f64 = rng.random_range(0.05..hi);
            let z: f64 = rng.random_range(0.0..0.99 * x);
            if let Ok(t) = AmplitudeTriple::new(x, y, z) {
                let d = t.middle_shift_derivative();
                battery.check(d < 0.0, d);
            }
        }
        // y <= z: derivative strictly positive
        let z: f64 = rng.random_range(0.1..1.0);
        let y: f64 = rng.random_range(0.01..z);
        let hi = (2.0 - y - 0.005).min(z + 0.9);
        if hi > z + 0.005 {
            let x: f64 = rng.random_range(z + 0.005..hi);
            if let Ok(t) = AmplitudeTriple::new(x, y, z) {
                let d = t.middle_shift_derivative();
                battery.check(d > 0.0, -d);
            }
        }
    }

    // derivative agrees with central finite differences on embedded profiles
    for _ in 0..samples.min(50) {
        let x: f64 = rng.random_range(0.3..0.9);
        let y: f64 = rng.random_range(0.2..0.9);
        let z: f64 = rng.random_range(0.05..0.9 * x);
        let Ok((profile, middle)) = search::embed_triple(x, y, z) else {
            continue;
        };
        let formula = search::triple_at(&profile, middle)
            .expect("embedded triple is admissible")
            .middle_shift_derivative();
        let eps = 1e-5;
        let plus = deficit_piecewise_exact(
            &search::shift_middle(&profile, middle, eps).expect("small shift"),
        );
        let minus = deficit_piecewise_exact(
            &search::shift_middle(&profile, middle, -eps).expect("small shift"),
        );
        let err = ((plus - minus) / (2.0 * eps) - formula).abs();
        battery.check(err < 1e-7, err);
    }

    // global bound over the piecewise family
    for i in 0..samples {
        let profile = random_piecewise_profile(&mut rng, 1 + i % 5);
        let f = deficit_piecewise_exact(&profile);
        battery.check(f >= REULEAUX_DEFICIT - 1e-9, REULEAUX_DEFICIT - f);
    }

    battery.finish()
}

/// Run the full battery.
pub fn run_all(samples: usize, seed: u64) -> Vec<PropertyOutcome> {
    vec![
        run_wirtinger(samples, seed),
        run_bijection_checks(samples, seed.wrapping_add(1)),
        run_variational_checks(samples, seed.wrapping_add(2)),
    ]
}
