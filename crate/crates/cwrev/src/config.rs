//! JSON body configurations for the CLI and file-based workflows.
//!
//! Schema (one object, tagged by `"type"`):
//!
//! ```json
//! {"type": "sine_series", "coefficients": [0.3, -0.1], "w": 1.2}
//! {"type": "piecewise", "breakpoints": [1.0471975512], "sigma0": 1, "b0": 0.0}
//! {"type": "ball", "c": 0.0, "w": 1.0}
//! ```
//!
//! Angles are radians. `w` may be omitted: it defaults to the critical
//! width `w0(h)` (the minimizing width), and to 1 for a ball.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::{Body, PiecewiseTrigProfile, Profile, SineSeriesProfile};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BodyConfig {
    SineSeries {
        coefficients: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        w: Option<f64>,
    },
    Piecewise {
        breakpoints: Vec<f64>,
        sigma0: i32,
        #[serde(default)]
        b0: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        w: Option<f64>,
    },
    Ball {
        c: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        w: Option<f64>,
    },
}

/// Parse a JSON config; diagnostics carry the line/column of the problem.
pub fn parse_config(text: &str) -> Result<BodyConfig> {
    serde_json::from_str(text).map_err(|e| Error::Config {
        message: e.to_string(),
    })
}

impl BodyConfig {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    fn explicit_half_width(&self) -> Option<f64> {
        match self {
            BodyConfig::SineSeries { w, .. }
            | BodyConfig::Piecewise { w, .. }
            | BodyConfig::Ball { w, .. } => *w,
        }
    }

    fn profile(&self) -> Result<Profile> {
        match self {
            BodyConfig::SineSeries { coefficients, .. } => Ok(Profile::SineSeries(
                SineSeriesProfile::new(coefficients.clone())?,
            )),
            BodyConfig::Piecewise {
                breakpoints,
                sigma0,
                b0,
                ..
            } => {
                let sign = match sigma0 {
                    1 => 1.0,
                    -1 => -1.0,
                    other => {
                        return Err(Error::Config {
                            message: format!("sigma0 must be 1 or -1 (got {other})"),
                        })
                    }
                };
                Ok(Profile::Piecewise(PiecewiseTrigProfile::new(
                    breakpoints.clone(),
                    sign,
                    *b0,
                )?))
            }
            BodyConfig::Ball { c, .. } => Profile::ball(*c),
        }
    }

    /// Materialize into a validated body, rejecting any violated profile
    /// constraint with a diagnostic naming it.
    pub fn body(&self) -> Result<Body> {
        let profile = self.profile()?;
        let report = profile.validate();
        if !report.is_valid() {
            return Err(Error::InvalidProfile(report));
        }
        let w = match self.explicit_half_width() {
            Some(w) => w,
            None => match self {
                BodyConfig::Ball { .. } => 1.0,
                _ => {
                    let w0 = profile.critical_half_width();
                    if w0 <= 0.0 {
                        return Err(Error::Config {
                            message: "profile has w0 = 0 (a ball); supply w explicitly or use \
                                      the ball type"
                                .into(),
                        });
                    }
                    w0
                }
            },
        };
        Body::new(profile, w)
    }
}
