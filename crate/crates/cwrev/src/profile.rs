//! Support-function profiles for constant-width bodies of revolution.
//!
//! A convex body of revolution with constant width `2w` is encoded by a
//! function `h` on `[0, pi/2]` with `h(0) = 0` and `h'(pi/2) = 0`, extended
//! to the circle by the two symmetries
//!
//! ```text
//! h(t) + h(t + pi) = 0        (constant width)
//! h(t) - h(pi - t) = 0        (axial symmetry)
//! ```
//!
//! The support function of the generating curve is `s = h + w`, and the pair
//! `(h, w)` yields a convex body exactly when `w >= w0(h)`, where
//! `w0(h) = ess sup |h + h''|` is the critical half width.
//!
//! Two analytic families are supported:
//!
//! * [`SineSeriesProfile`]: smooth profiles `h(t) = sum c_k sin((2k+1) t)`.
//!   The odd harmonics are precisely the trigonometric modes that satisfy
//!   the boundary conditions and both circle symmetries identically.
//! * [`PiecewiseTrigProfile`]: profiles with `|h'' + h| = 1` a.e., i.e.
//!   `h = A_i cos t + B_i sin t + sigma_i` between breakpoints, with
//!   alternating signs `sigma_i`. These carry the extremal geometry: the
//!   single-breakpoint member is the rotated Reuleaux triangle.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use crate::error::{Error, Result};

/// Feasibility slack on `w >= w0(h)`, so that `w = w0(h)` exactly is
/// accepted under floating-point noise.
pub const FEAS_TOL: f64 = 1e-9;

/// Absolute tolerance for the structural residuals reported by
/// [`Profile::validate`].
pub const VALIDATE_TOL: f64 = 1e-10;

/// Value and first two derivatives of a profile at one angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eval {
    pub h: f64,
    pub dh: f64,
    pub ddh: f64,
}

// ---------------------------------------------------------------------------
// Sine series
// ---------------------------------------------------------------------------

/// Smooth profile `h(t) = sum_k c_k sin((2k+1) t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SineSeriesProfile {
    coefficients: Vec<f64>,
}

impl SineSeriesProfile {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite {
                what: "sine series coefficient",
            });
        }
        Ok(Self { coefficients })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    fn eval_base(&self, t: f64) -> Eval {
        let mut h = 0.0;
        let mut dh = 0.0;
        let mut ddh = 0.0;
        for (k, &c) in self.coefficients.iter().enumerate() {
            let m = (2 * k + 1) as f64;
            let (s, cos) = (m * t).sin_cos();
            h += c * s;
            dh += c * m * cos;
            ddh -= c * m * m * s;
        }
        Eval { h, dh, ddh }
    }

    /// `h'' + h = sum_k c_k (1 - (2k+1)^2) sin((2k+1) t)`; the first
    /// harmonic drops out.
    pub fn curvature_deviation(&self, t: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| {
                let m = (2 * k + 1) as f64;
                c * (1.0 - m * m) * (m * t).sin()
            })
            .sum()
    }

    /// `w0 = max |h + h''|` over `[0, pi/2]`, located by a 4096-point scan
    /// refined with golden-section search.
    pub fn critical_half_width(&self) -> f64 {
        if self.coefficients.iter().skip(1).all(|&c| c == 0.0) {
            return 0.0;
        }
        let f = |t: f64| self.curvature_deviation(t).abs();
        const SAMPLES: usize = 4096;
        let step = FRAC_PI_2 / SAMPLES as f64;
        let values: Vec<f64> = (0..=SAMPLES).map(|i| f(i as f64 * step)).collect();
        let mut best = values[0].max(values[SAMPLES]);
        for i in 1..SAMPLES {
            if values[i] >= values[i - 1] && values[i] >= values[i + 1] {
                let refined = golden_max(&f, (i - 1) as f64 * step, (i + 1) as f64 * step);
                best = best.max(refined);
            }
        }
        best
    }
}

fn golden_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    const TOL: f64 = 1e-12;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > TOL {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    f(0.5 * (a + b))
}

// ---------------------------------------------------------------------------
// Piecewise trigonometric profiles
// ---------------------------------------------------------------------------

/// One piece `h = cos_coeff * cos t + sin_coeff * sin t + constant` of a
/// piecewise profile; `constant` is the value of `h'' + h` on the piece.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigPiece {
    pub cos_coeff: f64,
    pub sin_coeff: f64,
    pub constant: f64,
}

impl TrigPiece {
    pub fn eval(&self, t: f64) -> Eval {
        let (sin, cos) = t.sin_cos();
        let wave = self.cos_coeff * cos + self.sin_coeff * sin;
        Eval {
            h: wave + self.constant,
            dh: -self.cos_coeff * sin + self.sin_coeff * cos,
            ddh: -wave,
        }
    }
}

/// Profile with `|h'' + h| = 1` a.e.: `k` breakpoints `0 < tau_1 < ... <
/// tau_k < pi/2` split `[0, pi/2]` into `k + 1` pieces on which `h'' + h`
/// alternates between `+1` and `-1`, starting with `leading_sign`.
///
/// The per-piece coefficients follow from `h(0) = 0` and C1 continuity:
///
/// ```text
/// A_0 = -sigma_0,  A_i = A_{i-1} + (sigma_{i-1} - sigma_i) cos tau_i,
/// B_0 = offset,    B_i = B_{i-1} + (sigma_{i-1} - sigma_i) sin tau_i.
/// ```
///
/// `h'(pi/2) = 0` holds iff the closure constraint
/// `sum_i (-1)^(i-1) cos tau_i = 1/2` does; construction does not force it,
/// [`Profile::validate`] reports its residual.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseTrigProfile {
    breakpoints: Vec<f64>,
    leading_sign: f64,
    vertical_offset: f64,
    pieces: Vec<TrigPiece>,
}

impl PiecewiseTrigProfile {
    pub fn new(breakpoints: Vec<f64>, leading_sign: f64, vertical_offset: f64) -> Result<Self> {
        if leading_sign != 1.0 && leading_sign != -1.0 {
            return Err(Error::InvalidLeadingSign(leading_sign));
        }
        if !vertical_offset.is_finite() {
            return Err(Error::NonFinite {
                what: "vertical offset",
            });
        }
        for (index, &tau) in breakpoints.iter().enumerate() {
            if !tau.is_finite() {
                return Err(Error::NonFinite { what: "breakpoint" });
            }
            if tau <= 0.0 || tau >= FRAC_PI_2 {
                return Err(Error::BreakpointOutOfRange { index, value: tau });
            }
            if index > 0 && breakpoints[index - 1] >= tau {
                return Err(Error::BreakpointsNotIncreasing { index });
            }
        }
        let pieces = build_pieces(&breakpoints, leading_sign, vertical_offset);
        Ok(Self {
            breakpoints,
            leading_sign,
            vertical_offset,
            pieces,
        })
    }

    /// The single-breakpoint profile `tau_1 = pi/3`: the generating curve is
    /// the Reuleaux triangle of width 2 (for `w = 1`).
    pub fn reuleaux() -> Self {
        Self::new(vec![PI / 3.0], 1.0, 0.0).expect("reuleaux profile is valid")
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn leading_sign(&self) -> f64 {
        self.leading_sign
    }

    pub fn vertical_offset(&self) -> f64 {
        self.vertical_offset
    }

    pub fn pieces(&self) -> &[TrigPiece] {
        &self.pieces
    }

    /// Sign of `h'' + h` on piece `i`.
    pub fn piece_sign(&self, i: usize) -> f64 {
        self.pieces[i].constant
    }

    /// `h -> -h`; leaves breakpoints (and every functional of `|h'' + h|`)
    /// unchanged.
    pub fn negated(&self) -> Self {
        Self::new(
            self.breakpoints.clone(),
            -self.leading_sign,
            -self.vertical_offset,
        )
        .expect("negation preserves validity")
    }

    /// Residual of the closure constraint `sum (-1)^(i-1) cos tau_i = 1/2`.
    pub fn closure_residual(&self) -> f64 {
        let mut acc = 0.0;
        let mut sign = 1.0;
        for &tau in &self.breakpoints {
            acc += sign * tau.cos();
            sign = -sign;
        }
        (acc - 0.5).abs()
    }

    /// Piece index at angle `u` in `[0, pi/2]`; at a breakpoint the piece on
    /// the right is used, so `h''` is the right-limit there.
    pub fn piece_index(&self, u: f64) -> usize {
        self.breakpoints.partition_point(|&tau| tau <= u)
    }

    fn eval_base(&self, u: f64) -> Eval {
        self.pieces[self.piece_index(u)].eval(u)
    }
}

fn build_pieces(breakpoints: &[f64], leading_sign: f64, vertical_offset: f64) -> Vec<TrigPiece> {
    let mut pieces = Vec::with_capacity(breakpoints.len() + 1);
    let mut cos_coeff = -leading_sign; // h(0) = 0
    let mut sin_coeff = vertical_offset;
    let mut sign = leading_sign;
    pieces.push(TrigPiece {
        cos_coeff,
        sin_coeff,
        constant: sign,
    });
    for &tau in breakpoints {
        let jump = 2.0 * sign; // sigma_{i-1} - sigma_i
        cos_coeff += jump * tau.cos();
        sin_coeff += jump * tau.sin();
        sign = -sign;
        pieces.push(TrigPiece {
            cos_coeff,
            sin_coeff,
            constant: sign,
        });
    }
    pieces
}

// ---------------------------------------------------------------------------
// Profile: the tagged union and the circle extension
// ---------------------------------------------------------------------------

/// A member of the profile space, in one of its two analytic representations.
#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    SineSeries(SineSeriesProfile),
    Piecewise(PiecewiseTrigProfile),
}

impl Profile {
    /// Profile `h = c sin t` of a round ball (the generating curve is a
    /// circle centered on the axis at height `c`).
    pub fn ball(c: f64) -> Result<Profile> {
        Ok(Profile::SineSeries(SineSeriesProfile::new(vec![c])?))
    }

    /// Evaluate `h, h', h''` at any angle, using the circle extension.
    ///
    /// The angle is reduced modulo `2 pi`; values outside `[0, pi/2]` are
    /// obtained from the two symmetries. At a breakpoint of a piecewise
    /// profile `h''` is the right-limit in the reduced coordinate.
    pub fn eval(&self, t: f64) -> Eval {
        let tau = t.rem_euclid(TAU);
        let (u, sh, sd, sdd) = if tau <= FRAC_PI_2 {
            (tau, 1.0, 1.0, 1.0)
        } else if tau <= PI {
            (PI - tau, 1.0, -1.0, 1.0)
        } else if tau <= 1.5 * PI {
            (tau - PI, -1.0, -1.0, -1.0)
        } else {
            (TAU - tau, -1.0, 1.0, -1.0)
        };
        let u = u.clamp(0.0, FRAC_PI_2);
        let e = match self {
            Profile::SineSeries(p) => p.eval_base(u),
            Profile::Piecewise(p) => p.eval_base(u),
        };
        Eval {
            h: sh * e.h,
            dh: sd * e.dh,
            ddh: sdd * e.ddh,
        }
    }

    /// Critical half width `w0(h) = ess sup |h + h''|` over `[0, pi/2]`.
    ///
    /// Exact (`= 1`) for piecewise profiles; located numerically for sine
    /// series.
    pub fn critical_half_width(&self) -> f64 {
        match self {
            Profile::SineSeries(p) => p.critical_half_width(),
            Profile::Piecewise(_) => 1.0,
        }
    }

    /// Check the structural constraints and report every violation with its
    /// residual. Never aborts.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut push = |constraint: ConstraintKind, residual: f64| {
            // NaN must count as a violation, so compare in the passing direction
            let passes = residual.abs() <= VALIDATE_TOL;
            if !passes {
                violations.push(Violation {
                    constraint,
                    residual,
                });
            }
        };
        match self {
            Profile::SineSeries(p) => {
                push(ConstraintKind::RootValue, p.eval_base(0.0).h);
                push(ConstraintKind::ApexSlope, p.eval_base(FRAC_PI_2).dh);
            }
            Profile::Piecewise(p) => {
                push(ConstraintKind::RootValue, p.pieces[0].eval(0.0).h);
                let last = p.pieces.len() - 1;
                push(ConstraintKind::ApexSlope, p.pieces[last].eval(FRAC_PI_2).dh);
                for (i, &tau) in p.breakpoints.iter().enumerate() {
                    let left = p.pieces[i].eval(tau);
                    let right = p.pieces[i + 1].eval(tau);
                    push(ConstraintKind::ValueContinuity(i), right.h - left.h);
                    push(ConstraintKind::SlopeContinuity(i), right.dh - left.dh);
                }
                push(ConstraintKind::Closure, p.closure_residual());
            }
        }
        ValidationReport { violations }
    }
}

/// Structural constraint checked by [`Profile::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    /// `h(0) = 0`
    RootValue,
    /// `h'(pi/2) = 0`
    ApexSlope,
    /// continuity of `h` at breakpoint `i`
    ValueContinuity(usize),
    /// continuity of `h'` at breakpoint `i`
    SlopeContinuity(usize),
    /// `sum (-1)^(i-1) cos tau_i = 1/2`
    Closure,
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintKind::RootValue => write!(f, "h(0) = 0"),
            ConstraintKind::ApexSlope => write!(f, "h'(pi/2) = 0"),
            ConstraintKind::ValueContinuity(i) => write!(f, "continuity of h at breakpoint {i}"),
            ConstraintKind::SlopeContinuity(i) => write!(f, "continuity of h' at breakpoint {i}"),
            ConstraintKind::Closure => write!(f, "closure sum (-1)^(i-1) cos tau_i = 1/2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub constraint: ConstraintKind,
    pub residual: f64,
}

/// Outcome of [`Profile::validate`]: empty means every constraint holds
/// within [`VALIDATE_TOL`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "all constraints satisfied");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} violated (residual {:.6e})", v.constraint, v.residual)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Body
// ---------------------------------------------------------------------------

/// A constant-width body of revolution: a profile paired with a half width
/// `w >= w0(h)`. The width of the body is `2w`.
#[derive(Debug, Clone, PartialEq)]
pub struct Body {
    profile: Profile,
    half_width: f64,
    critical: f64,
}

impl Body {
    pub fn new(profile: Profile, half_width: f64) -> Result<Self> {
        if !half_width.is_finite() {
            return Err(Error::NonFinite { what: "half width" });
        }
        if half_width <= 0.0 {
            return Err(Error::NonPositiveHalfWidth { half_width });
        }
        let report = profile.validate();
        if !report.is_valid() {
            return Err(Error::InvalidProfile(report));
        }
        let critical = profile.critical_half_width();
        if half_width < critical - FEAS_TOL {
            return Err(Error::WidthBelowCritical {
                half_width,
                critical,
            });
        }
        Ok(Self {
            profile,
            half_width,
            critical,
        })
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// Width of the body, equal in every direction.
    pub fn width(&self) -> f64 {
        2.0 * self.half_width
    }

    /// `w0(h)`, cached at construction.
    pub fn critical_half_width(&self) -> f64 {
        self.critical
    }

    /// Support function `s(t) = h(t) + w` of the generating curve.
    pub fn support(&self, t: f64) -> f64 {
        self.profile.eval(t).h + self.half_width
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reuleaux() -> Profile {
        Profile::Piecewise(PiecewiseTrigProfile::reuleaux())
    }

    #[test]
    fn sine_eval_first_harmonic() {
        let p = Profile::SineSeries(SineSeriesProfile::new(vec![1.0]).unwrap());
        let e = p.eval(FRAC_PI_2 / 2.0);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((e.h - r).abs() < 1e-15);
        assert!((e.dh - r).abs() < 1e-15);
        assert!((e.ddh + r).abs() < 1e-15);
    }

    #[test]
    fn reuleaux_eval_on_first_piece() {
        // h = -cos t + 1 on [0, pi/3]
        let e = reuleaux().eval(PI / 4.0);
        assert!((e.h - (1.0 - std::f64::consts::FRAC_1_SQRT_2)).abs() < 1e-15);
        assert!((e.dh - (PI / 4.0).sin()).abs() < 1e-15);
    }

    #[test]
    fn second_derivative_uses_the_right_limit_at_breakpoints() {
        // h'' + h jumps from +1 to -1 across tau_1 = pi/3
        let e = reuleaux().eval(PI / 3.0);
        assert!((e.ddh + e.h - (-1.0)).abs() < 1e-12);
        let just_left = reuleaux().eval(PI / 3.0 - 1e-9);
        assert!((just_left.ddh + just_left.h - 1.0).abs() < 1e-6);
    }

    #[test]
    fn reuleaux_coefficients_follow_continuity() {
        let p = PiecewiseTrigProfile::reuleaux();
        let pieces = p.pieces();
        assert_eq!(pieces.len(), 2);
        assert!((pieces[0].cos_coeff + 1.0).abs() < 1e-15);
        assert!((pieces[0].sin_coeff).abs() < 1e-15);
        assert!((pieces[1].cos_coeff).abs() < 1e-15);
        // B_1 = B_0 + 2 sin(pi/3) = sqrt(3): forced by continuity of h
        assert!((pieces[1].sin_coeff - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn extension_symmetries_hold_for_both_representations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let profiles = [
            Profile::SineSeries(SineSeriesProfile::new(vec![0.4, -0.2, 0.05, 0.01]).unwrap()),
            reuleaux(),
            Profile::Piecewise(
                PiecewiseTrigProfile::new(vec![0.4, (0.4f64.cos() - 0.5).acos()], 1.0, 0.3)
                    .unwrap(),
            ),
        ];
        for p in &profiles {
            for _ in 0..1000 {
                let t: f64 = rng.random_range(-10.0..10.0);
                let sum = p.eval(t).h + p.eval(t + PI).h;
                let refl = p.eval(t).h - p.eval(PI - t).h;
                assert!(sum.abs() < 1e-12, "width symmetry broke at t = {t}: {sum}");
                assert!(refl.abs() < 1e-12, "axial symmetry broke at t = {t}: {refl}");
            }
        }
    }

    #[test]
    fn odd_harmonics_satisfy_boundary_conditions() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for k in 0..=8 {
            let mut coeffs = vec![0.0; k + 1];
            coeffs[k] = 1.0;
            let p = Profile::SineSeries(SineSeriesProfile::new(coeffs).unwrap());
            assert_eq!(p.eval(0.0).h, 0.0);
            assert!(p.eval(FRAC_PI_2).dh.abs() < 1e-12);
            for _ in 0..1000 {
                let t: f64 = rng.random_range(-7.0..7.0);
                assert!((p.eval(t).h + p.eval(t + PI).h).abs() < 1e-12);
                assert!((p.eval(t).h - p.eval(PI - t).h).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn critical_half_width_examples() {
        let ball = Profile::ball(0.7).unwrap();
        assert_eq!(ball.critical_half_width(), 0.0);

        // 0.1 sin 3t: |h + h''| = 0.8 |sin 3t|, max at t = pi/6
        let p = Profile::SineSeries(SineSeriesProfile::new(vec![0.0, 0.1]).unwrap());
        assert!((p.critical_half_width() - 0.8).abs() < 1e-12);

        assert_eq!(reuleaux().critical_half_width(), 1.0);
    }

    #[test]
    fn critical_half_width_mixed_series() {
        // independent check: brute-force scan at 10x the sampling density
        let p = SineSeriesProfile::new(vec![0.3, -0.15, 0.08, -0.02, 0.01]).unwrap();
        let brute = (0..=40960)
            .map(|i| p.curvature_deviation(i as f64 * FRAC_PI_2 / 40960.0).abs())
            .fold(0.0f64, f64::max);
        assert!((p.critical_half_width() - brute).abs() < 1e-8);
        assert!(p.critical_half_width() >= brute - 1e-12);
    }

    #[test]
    fn validate_reuleaux_is_clean() {
        assert!(reuleaux().validate().is_valid());
    }

    #[test]
    fn validate_reports_closure_violation() {
        let p = Profile::Piecewise(PiecewiseTrigProfile::new(vec![PI / 4.0], 1.0, 0.0).unwrap());
        let report = p.validate();
        assert!(!report.is_valid());
        let closure = report
            .violations
            .iter()
            .find(|v| v.constraint == ConstraintKind::Closure)
            .expect("closure violation must be reported");
        assert!((closure.residual - 0.207_106_781_186_547_57).abs() < 1e-12);
    }

    #[test]
    fn validate_sine_series_always_clean() {
        let p = Profile::SineSeries(SineSeriesProfile::new(vec![2.0, -1.0, 0.5, 3.0]).unwrap());
        assert!(p.validate().is_valid());
    }

    #[test]
    fn body_enforces_critical_width() {
        let p = reuleaux();
        assert!(Body::new(p.clone(), 1.0).is_ok());
        assert!(Body::new(p.clone(), 3.0).is_ok());
        match Body::new(p.clone(), 0.9) {
            Err(Error::WidthBelowCritical { .. }) => {}
            other => panic!("expected WidthBelowCritical, got {other:?}"),
        }
        match Body::new(p, -1.0) {
            Err(Error::NonPositiveHalfWidth { .. }) => {}
            other => panic!("expected NonPositiveHalfWidth, got {other:?}"),
        }
    }

    #[test]
    fn body_accepts_exact_critical_width() {
        let p = Profile::SineSeries(SineSeriesProfile::new(vec![0.0, 0.1]).unwrap());
        let w0 = p.critical_half_width();
        assert!(Body::new(p, w0).is_ok());
    }

    #[test]
    fn constructor_rejects_malformed_input() {
        assert!(matches!(
            PiecewiseTrigProfile::new(vec![0.3], 2.0, 0.0),
            Err(Error::InvalidLeadingSign(_))
        ));
        assert!(matches!(
            PiecewiseTrigProfile::new(vec![0.0], 1.0, 0.0),
            Err(Error::BreakpointOutOfRange { .. })
        ));
        assert!(matches!(
            PiecewiseTrigProfile::new(vec![0.5, 0.4], 1.0, 0.0),
            Err(Error::BreakpointsNotIncreasing { .. })
        ));
        assert!(matches!(
            SineSeriesProfile::new(vec![]),
            Err(Error::EmptyCoefficients)
        ));
        assert!(matches!(
            SineSeriesProfile::new(vec![f64::NAN]),
            Err(Error::NonFinite { .. })
        ));
    }
}
