//! Scalar functionals of a profile: the volume-deficit functional, the
//! volume and ratio of the associated body, and the normal flow.
//!
//! Everything rests on one quantity,
//!
//! ```text
//! F(h) = int_0^{pi/2} (h^2 - (h')^2 / 2) cos t dt,
//! ```
//!
//! in terms of which the volume of the body `(h, w)` is
//! `V = 4 pi (w^3 / 3 + w F(h))` and the ratio against the ball of equal
//! width is `I = V / (4 pi w^3 / 3) = 1 + 3 F(h) / w^2`. A weighted
//! Wirtinger inequality gives `F(h) <= 0`, with equality exactly for
//! `h = c sin t` (the ball), so `I <= 1` always.
//!
//! Three evaluation routes are provided and must agree: direct quadrature,
//! the boundary form `int (h + h'')(h cos t - h' sin t) dt` (equal to `F`
//! by parts, the boundary terms vanish), and a closed form on piecewise
//! profiles, where `(h + h'')(h cos t - h' sin t) = sigma_i A_i + cos t`
//! on each piece, hence
//!
//! ```text
//! F(h) = sum_i sigma_i A_i (tau_{i+1} - tau_i) + 1.
//! ```

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry;
use crate::profile::{Body, PiecewiseTrigProfile, Profile, FEAS_TOL};
use crate::quad;

/// Ratio of Meissner's tetrahedron, the non-revolution body witnessing that
/// the three-dimensional minimizer is not a body of revolution. Literature
/// reference value; nothing in this crate computes it.
pub const MEISSNER_RATIO: f64 = 0.8019;

/// `1 - pi/3`, the deficit of the rotated Reuleaux triangle and the minimum
/// of `F` over unit-critical-width profiles.
pub const REULEAUX_DEFICIT: f64 = 1.0 - PI / 3.0;

fn breakpoints_of(profile: &Profile) -> &[f64] {
    match profile {
        Profile::Piecewise(p) => p.breakpoints(),
        Profile::SineSeries(_) => &[],
    }
}

/// `F(h)` by adaptive quadrature of the defining integral.
pub fn deficit_quadrature(profile: &Profile) -> f64 {
    deficit_quadrature_tol(profile, quad::DEFAULT_TOL)
}

pub fn deficit_quadrature_tol(profile: &Profile, tol: f64) -> f64 {
    let integrand = |t: f64| {
        let e = profile.eval(t);
        (e.h * e.h - 0.5 * e.dh * e.dh) * t.cos()
    };
    quad::integrate_split(integrand, 0.0, FRAC_PI_2, breakpoints_of(profile), tol)
}

/// `F(h)` via the boundary form `int (h + h'')(h cos t - h' sin t) dt`.
pub fn deficit_boundary_form(profile: &Profile) -> f64 {
    let integrand = |t: f64| {
        let e = profile.eval(t);
        (e.h + e.ddh) * (e.h * t.cos() - e.dh * t.sin())
    };
    quad::integrate_split(
        integrand,
        0.0,
        FRAC_PI_2,
        breakpoints_of(profile),
        quad::DEFAULT_TOL,
    )
}

/// Closed form of `F(h)` on a piecewise profile; exact up to rounding.
pub fn deficit_piecewise_exact(profile: &PiecewiseTrigProfile) -> f64 {
    let mut edges = Vec::with_capacity(profile.breakpoints().len() + 2);
    edges.push(0.0);
    edges.extend_from_slice(profile.breakpoints());
    edges.push(FRAC_PI_2);
    let mut acc = 0.0;
    for (i, piece) in profile.pieces().iter().enumerate() {
        acc += piece.constant * piece.cos_coeff * (edges[i + 1] - edges[i]);
    }
    acc + 1.0
}

/// `F(h)` by the preferred route for the representation: closed form for
/// piecewise profiles, quadrature for sine series.
pub fn deficit(profile: &Profile) -> f64 {
    match profile {
        Profile::Piecewise(p) => deficit_piecewise_exact(p),
        Profile::SineSeries(_) => deficit_quadrature(profile),
    }
}

/// The symmetric bilinear form `B(u, v) = int (u v - u'v'/2) cos t dt`
/// polarizing `F`: `B(h, h) = F(h)`, and for any perturbation
/// `F(h + eps v) = F(h) + 2 eps B(h, v) + eps^2 F(v)` exactly.
pub fn deficit_bilinear(u: &Profile, v: &Profile) -> f64 {
    deficit_bilinear_tol(u, v, quad::DEFAULT_TOL)
}

pub fn deficit_bilinear_tol(u: &Profile, v: &Profile, tol: f64) -> f64 {
    let mut splits: Vec<f64> = breakpoints_of(u).to_vec();
    splits.extend_from_slice(breakpoints_of(v));
    splits.sort_by(|a, b| a.partial_cmp(b).expect("breakpoints are finite"));
    let integrand = |t: f64| {
        let eu = u.eval(t);
        let ev = v.eval(t);
        (eu.h * ev.h - 0.5 * eu.dh * ev.dh) * t.cos()
    };
    quad::integrate_split(integrand, 0.0, FRAC_PI_2, &splits, tol)
}

/// `V = 4 pi (w^3/3 + w F(h))`. Bodies with `w < w0(h)` cannot be
/// constructed, so every input is a genuine convex body.
pub fn volume(body: &Body) -> f64 {
    let w = body.half_width();
    4.0 * PI * (w * w * w / 3.0 + w * deficit(body.profile()))
}

/// `I = V / (4 pi w^3 / 3) = 1 + 3 F(h) / w^2 <= 1`, with equality only
/// for balls.
pub fn ratio(body: &Body) -> f64 {
    let w = body.half_width();
    1.0 + 3.0 * deficit(body.profile()) / (w * w)
}

/// Flow the boundary inward along unit normals for time `tau`: the profile
/// is unchanged and the half width shrinks to `w - tau`, so the width
/// decreases by `2 tau` and the ratio does not increase (strictly decreases
/// when `F < 0`). Admissible as long as the result stays convex, i.e.
/// `tau <= w - w0(h)`.
pub fn normal_flow(body: &Body, tau: f64) -> Result<Body> {
    if !tau.is_finite() {
        return Err(Error::NonFinite { what: "flow time" });
    }
    let max_tau = body.half_width() - body.critical_half_width();
    if tau < 0.0 || tau > max_tau + FEAS_TOL {
        return Err(Error::FlowExitsConvexity { tau, max_tau });
    }
    Body::new(body.profile().clone(), body.half_width() - tau)
}

/// Evaluation route used for the scalar functionals of a body.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactPiecewise,
    Quadrature,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::ExactPiecewise => write!(f, "exact-piecewise"),
            Method::Quadrature => write!(f, "quadrature"),
        }
    }
}

/// All scalar functionals of one body.
#[derive(Debug, Clone, Serialize)]
pub struct FunctionalReport {
    pub half_width: f64,
    pub critical_half_width: f64,
    pub deficit: f64,
    pub volume: f64,
    pub area: f64,
    pub ratio: f64,
    pub method: Method,
}

pub fn report(body: &Body) -> FunctionalReport {
    let w = body.half_width();
    let deficit = deficit(body.profile());
    let method = match body.profile() {
        Profile::Piecewise(_) => Method::ExactPiecewise,
        Profile::SineSeries(_) => Method::Quadrature,
    };
    FunctionalReport {
        half_width: w,
        critical_half_width: body.critical_half_width(),
        deficit,
        volume: 4.0 * PI * (w * w * w / 3.0 + w * deficit),
        area: geometry::surface_area(body),
        ratio: 1.0 + 3.0 * deficit / (w * w),
        method,
    }
}
