//! Crate-wide error type.

use thiserror::Error;

use crate::profile::ValidationReport;

/// Errors produced by profile construction, body validation, geometry,
/// the variational search, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} must be finite")]
    NonFinite { what: &'static str },

    #[error("leading sign must be +1 or -1 (got {0})")]
    InvalidLeadingSign(f64),

    #[error("sine series needs at least one coefficient")]
    EmptyCoefficients,

    #[error("breakpoint {index} = {value} lies outside the open interval (0, pi/2)")]
    BreakpointOutOfRange { index: usize, value: f64 },

    #[error("breakpoints must be strictly increasing (violated at index {index})")]
    BreakpointsNotIncreasing { index: usize },

    #[error("profile fails validation: {0}")]
    InvalidProfile(ValidationReport),

    #[error("half width must be positive (got {half_width})")]
    NonPositiveHalfWidth { half_width: f64 },

    #[error("half width {half_width} is below the critical width w0 = {critical}")]
    WidthBelowCritical { half_width: f64, critical: f64 },

    #[error("flow time {tau} leaves the convex range [0, {max_tau}]; maximal admissible tau = {max_tau}")]
    FlowExitsConvexity { tau: f64, max_tau: f64 },

    #[error("convexity violated: radius of curvature {rho} at t = {t}")]
    ConvexityViolation { t: f64, rho: f64 },

    #[error("tessellation needs nt >= 3 and ntheta >= 3 (got nt = {nt}, ntheta = {ntheta})")]
    MeshResolution { nt: usize, ntheta: usize },

    #[error("merge infeasible: {reason}")]
    InfeasibleMerge { reason: String },

    #[error("perturbation infeasible: {reason}")]
    InfeasiblePerturbation { reason: String },

    #[error("no feasible breakpoint configuration: {reason}")]
    InfeasibleConfiguration { reason: String },

    #[error("arccos argument {value} outside [-1, 1]")]
    ArccosDomain { value: f64 },

    #[error("invalid amplitude triple: {reason}")]
    InvalidTriple { reason: String },

    #[error("config error: {message}")]
    Config { message: String },

    #[error("malformed mesh data: {message}")]
    MeshFormat { message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
