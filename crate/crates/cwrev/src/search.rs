//! Variational search over piecewise profiles.
//!
//! On the piecewise family the deficit is a function of the breakpoint
//! angles alone, constrained by the closure identity
//! `sum (-1)^(i-1) cos tau_i = 1/2`. Around the middle of three successive
//! discontinuities of `h'' + h` the local data reduces to an amplitude
//! triple `(x, y, z)`: the sign-normalized cosine amplitudes of the three
//! consecutive pieces. Two operations drive every descent argument:
//!
//! * **merge** - replace the middle pair of discontinuities by a single one
//!   at `t* = arccos((x + z)/2)`, sign-flipping the tail. The deficit
//!   change has the closed form
//!   `(z-x) arccos((x+z)/2) + (x-y) arccos((x+y)/2) + (y-z) arccos((y+z)/2)`
//!   and is strictly negative whenever `z < y < x`.
//! * **middle shift** - move both middle cosines by `eps/2` (equivalently
//!   `y -> y + eps`), leaving the outer discontinuities fixed and the
//!   closure identity intact. The derivative of the deficit is negative
//!   when `x <= y` and positive when `y <= z`.
//!
//! Together these force minimizing sequences out of every stratum with at
//! least two interior discontinuities; the multi-start minimizer below
//! observes exactly that, collapsing onto the single-breakpoint profile
//! `tau_1 = pi/3`.

use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::functionals::{deficit_piecewise_exact, REULEAUX_DEFICIT};
use crate::profile::PiecewiseTrigProfile;

/// Breakpoints closer than this (to each other or to the domain ends)
/// are collapsed onto the lower stratum; the deficit is continuous under
/// the collapse.
pub const COLLISION_TOL: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Amplitude triples
// ---------------------------------------------------------------------------

/// Sign-normalized cosine amplitudes `(x, y, z)` of three consecutive
/// pieces around a middle pair of discontinuities: with the first piece
/// normalized to `h'' + h = +1`, `x = -A_first`, `y = A_middle`,
/// `z = -A_last`. The inner discontinuities sit at
/// `cos t_1 = (x + y)/2` and `cos t_2 = (y + z)/2`, so `z < x` encodes
/// `t_1 < t_2`. `z = 0` occurs whenever the last discontinuity is followed
/// by `pi/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeTriple {
    left: f64,
    middle: f64,
    right: f64,
}

impl AmplitudeTriple {
    pub fn new(left: f64, middle: f64, right: f64) -> Result<Self> {
        let reject = |reason: &str| Err(Error::InvalidTriple {
            reason: format!("(x, y, z) = ({left}, {middle}, {right}): {reason}"),
        });
        if !(left.is_finite() && middle.is_finite() && right.is_finite()) {
            return reject("amplitudes must be finite");
        }
        if left < 0.0 || middle < 0.0 || right < 0.0 {
            return reject("amplitudes must be nonnegative");
        }
        if right >= left {
            return reject("z < x is required (t_1 < t_2)");
        }
        if left + middle <= 0.0 || left + middle >= 2.0 {
            return reject("x + y must lie in (0, 2)");
        }
        if middle + right >= 2.0 {
            return reject("y + z must lie in [0, 2)");
        }
        Ok(Self {
            left,
            middle,
            right,
        })
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn middle(&self) -> f64 {
        self.middle
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    /// Angle `t* = arccos((x + z)/2)` of the merged discontinuity.
    pub fn merge_angle(&self) -> Result<f64> {
        let arg = 0.5 * (self.left + self.right);
        if !(-1.0..=1.0).contains(&arg) {
            return Err(Error::ArccosDomain { value: arg });
        }
        Ok(arg.acos())
    }

    /// Deficit change under the merge,
    /// `(z-x) arccos((x+z)/2) + (x-y) arccos((x+y)/2) + (y-z) arccos((y+z)/2)`;
    /// strictly negative whenever `z < y < x`.
    pub fn merge_deficit_delta(&self) -> Result<f64> {
        let (x, y, z) = (self.left, self.middle, self.right);
        let t_star = self.merge_angle()?;
        Ok((z - x) * t_star + (x - y) * (0.5 * (x + y)).acos() + (y - z) * (0.5 * (y + z)).acos())
    }

    /// Derivative of the deficit under the middle shift `y -> y + eps`:
    ///
    /// ```text
    /// arccos((x+y)/2) - arccos((y+z)/2)
    ///   + (x-y)/sqrt(4-(x+y)^2) + (y-z)/sqrt(4-(y+z)^2).
    /// ```
    ///
    /// Negative when `x <= y`, positive when `y <= z`.
    pub fn middle_shift_derivative(&self) -> f64 {
        let (x, y, z) = (self.left, self.middle, self.right);
        (0.5 * (x + y)).acos() - (0.5 * (y + z)).acos()
            + (x - y) / (4.0 - (x + y) * (x + y)).sqrt()
            + (y - z) / (4.0 - (y + z) * (y + z)).sqrt()
    }
}

/// Neighborhood of the middle pair `(tau[middle], tau[middle+1])`:
/// the enclosing discontinuities `t0` (previous breakpoint or 0) and `t3`
/// (next breakpoint or `pi/2`), plus whether the piece entering `t1`
/// carries `h'' + h = -1` and the construction must run on the negated
/// profile.
struct TripleContext {
    t0: f64,
    t3: f64,
    flipped: bool,
    x: f64,
    y: f64,
    z: f64,
}

fn triple_context(profile: &PiecewiseTrigProfile, middle: usize) -> Result<TripleContext> {
    let k = profile.breakpoints().len();
    if k < 2 || middle + 1 >= k {
        return Err(Error::InfeasibleMerge {
            reason: format!(
                "middle index {middle} does not select a pair of interior discontinuities \
                 (profile has {k} breakpoints)"
            ),
        });
    }
    let t0 = if middle == 0 {
        0.0
    } else {
        profile.breakpoints()[middle - 1]
    };
    let t3 = if middle + 2 < k {
        profile.breakpoints()[middle + 2]
    } else {
        FRAC_PI_2
    };
    let flipped = profile.piece_sign(middle) < 0.0;
    let orient = if flipped { -1.0 } else { 1.0 };
    let pieces = profile.pieces();
    // the coefficient recursion leaves rounding noise of order 1e-16 on
    // amplitudes that are exactly zero (e.g. A_k under the closure
    // constraint); snap it so sign checks stay meaningful
    let snap = |v: f64| if v.abs() < 1e-12 { 0.0 } else { v };
    Ok(TripleContext {
        t0,
        t3,
        flipped,
        x: snap(-orient * pieces[middle].cos_coeff),
        y: snap(orient * pieces[middle + 1].cos_coeff),
        z: snap(-orient * pieces[middle + 2].cos_coeff),
    })
}

/// Amplitude triple around the middle pair `(tau[middle], tau[middle+1])`.
pub fn triple_at(profile: &PiecewiseTrigProfile, middle: usize) -> Result<AmplitudeTriple> {
    let ctx = triple_context(profile, middle)?;
    AmplitudeTriple::new(ctx.x, ctx.y, ctx.z)
}

// ---------------------------------------------------------------------------
// Merge and shift constructions
// ---------------------------------------------------------------------------

/// Replace the discontinuity pair `(tau[middle], tau[middle+1])` by the
/// single discontinuity `t* = arccos((x+z)/2)`, sign-flipping the profile
/// past `t3`. The result has one breakpoint fewer and satisfies the closure
/// constraint automatically; its deficit drops by
/// [`AmplitudeTriple::merge_deficit_delta`] whenever `z < y < x`.
///
/// When the piece entering the pair carries `h'' + h = -1`, the
/// construction runs on the negated profile (same deficit).
pub fn merge_triple(
    profile: &PiecewiseTrigProfile,
    middle: usize,
) -> Result<PiecewiseTrigProfile> {
    let ctx = triple_context(profile, middle)?;
    let arg = 0.5 * (ctx.x + ctx.z);
    if !(-1.0..=1.0).contains(&arg) {
        return Err(Error::InfeasibleMerge {
            reason: format!("merged cosine {arg} outside [-1, 1]"),
        });
    }
    let t_star = arg.acos();
    if t_star <= ctx.t0 || t_star >= ctx.t3 {
        return Err(Error::InfeasibleMerge {
            reason: format!(
                "merged discontinuity t* = {t_star} falls outside ({}, {})",
                ctx.t0, ctx.t3
            ),
        });
    }
    let base = if ctx.flipped {
        profile.negated()
    } else {
        profile.clone()
    };
    let mut breakpoints = base.breakpoints().to_vec();
    breakpoints.splice(middle..middle + 2, [t_star]);
    PiecewiseTrigProfile::new(breakpoints, base.leading_sign(), base.vertical_offset())
}

/// Shift both middle cosines by `eps/2` (the exact form of `y -> y + eps`):
/// `cos tau[middle] += eps/2`, `cos tau[middle+1] += eps/2`. The outer
/// breakpoints stay fixed and the closure constraint is preserved exactly.
pub fn shift_middle(
    profile: &PiecewiseTrigProfile,
    middle: usize,
    eps: f64,
) -> Result<PiecewiseTrigProfile> {
    let ctx = triple_context(profile, middle).map_err(|_| Error::InfeasiblePerturbation {
        reason: format!(
            "middle index {middle} does not select a pair of interior discontinuities (profile \
             has {} breakpoints)",
            profile.breakpoints().len()
        ),
    })?;
    if !eps.is_finite() {
        return Err(Error::NonFinite {
            what: "shift parameter",
        });
    }
    if eps == 0.0 {
        return Ok(profile.clone());
    }
    let cos_hi = ctx.t0.cos(); // 1 when t0 = 0
    let cos_lo = ctx.t3.cos(); // 0 when t3 = pi/2
    let c1 = profile.breakpoints()[middle].cos() + 0.5 * eps;
    let c2 = profile.breakpoints()[middle + 1].cos() + 0.5 * eps;
    if c1 >= cos_hi || c2 <= cos_lo {
        return Err(Error::InfeasiblePerturbation {
            reason: format!(
                "shift eps = {eps} pushes a breakpoint past its neighbor \
                 (cosines {c1}, {c2} must stay inside ({cos_lo}, {cos_hi}))"
            ),
        });
    }
    let mut breakpoints = profile.breakpoints().to_vec();
    breakpoints[middle] = c1.acos();
    breakpoints[middle + 1] = c2.acos();
    PiecewiseTrigProfile::new(breakpoints, profile.leading_sign(), profile.vertical_offset())
}

/// Profile with `k` breakpoints realizing a given admissible triple at its
/// middle pair (handy for finite-difference checks): breakpoint cosines
/// `(1+x)/2, (x+y)/2, (y+z)/2, z/2` (the last dropped when `z = 0`), with
/// leading sign `-1` so the piece entering the pair carries `+1`. The
/// closure constraint holds identically. Requires `x, y` in `(0, 1)` and
/// `0 <= z < x`.
pub fn embed_triple(x: f64, y: f64, z: f64) -> Result<(PiecewiseTrigProfile, usize)> {
    if !(0.0 < x && x < 1.0 && 0.0 < y && y < 1.0 && 0.0 <= z && z < x) {
        return Err(Error::InvalidTriple {
            reason: format!("({x}, {y}, {z}) is not embeddable with x, y in (0,1), 0 <= z < x"),
        });
    }
    let mut cosines = vec![0.5 * (1.0 + x), 0.5 * (x + y), 0.5 * (y + z)];
    if z > 0.0 {
        cosines.push(0.5 * z);
    }
    let breakpoints: Vec<f64> = cosines.into_iter().map(f64::acos).collect();
    let profile = PiecewiseTrigProfile::new(breakpoints, -1.0, 0.0)?;
    Ok((profile, 1))
}

// ---------------------------------------------------------------------------
// Deficit over breakpoint configurations
// ---------------------------------------------------------------------------

/// Deficit of the profile whose breakpoint cosines (descending) are
/// `cosines`; independent of the leading sign.
pub fn deficit_from_cosines(cosines: &[f64]) -> f64 {
    let mut acc = 0.0;
    let mut amplitude = -1.0; // A_0 with sigma_0 = +1
    let mut sign = 1.0;
    let mut prev = 0.0;
    for &u in cosines {
        let tau = u.acos();
        acc += sign * amplitude * (tau - prev);
        amplitude += 2.0 * sign * u;
        sign = -sign;
        prev = tau;
    }
    acc += sign * amplitude * (FRAC_PI_2 - prev);
    acc + 1.0
}

/// Sample breakpoint angles with `k` entries satisfying the closure
/// constraint: cosines drawn uniformly, sorted, then projected along the
/// alternating direction; rejected until strictly feasible.
pub fn random_feasible_breakpoints<R: Rng>(k: usize, rng: &mut R) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::InfeasibleConfiguration {
            reason: "at least one interior breakpoint is required".into(),
        });
    }
    if k == 1 {
        return Ok(vec![0.5f64.acos()]);
    }
    const MARGIN: f64 = 1e-3;
    for _ in 0..10_000 {
        let mut u: Vec<f64> = (0..k).map(|_| rng.random_range(0.0..1.0)).collect();
        u.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
        project_to_closure(&mut u);
        let ordered = u.windows(2).all(|w| w[0] - w[1] > MARGIN);
        if ordered && u[0] < 1.0 - MARGIN && u[k - 1] > MARGIN {
            return Ok(u.into_iter().map(f64::acos).collect());
        }
    }
    Err(Error::InfeasibleConfiguration {
        reason: format!("sampling found no interior configuration with {k} breakpoints"),
    })
}

/// Adjust cosines (descending) by a constant along the alternating
/// direction so the closure sum becomes exactly 1/2.
fn project_to_closure(cosines: &mut [f64]) {
    let mut alt = 0.0;
    let mut sign = 1.0;
    for &u in cosines.iter() {
        alt += sign * u;
        sign = -sign;
    }
    let lambda = (0.5 - alt) / cosines.len() as f64;
    let mut sign = 1.0;
    for u in cosines.iter_mut() {
        *u += sign * lambda;
        sign = -sign;
    }
}

// ---------------------------------------------------------------------------
// Multi-start minimization
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Number of interior breakpoints of the searched stratum.
    pub breakpoints: usize,
    /// Number of random restarts.
    pub seeds: usize,
    pub rng_seed: u64,
    /// Leading sign of constructed profiles; the deficit landscape is
    /// identical for both signs.
    pub leading_sign: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            breakpoints: 1,
            seeds: 32,
            rng_seed: crate::DEFAULT_SEED,
            leading_sign: 1.0,
        }
    }
}

/// One multi-start descent endpoint.
#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub breakpoints: Vec<f64>,
    pub deficit: f64,
    /// Whether the endpoint is strictly inside its stratum (no breakpoint
    /// within [`COLLISION_TOL`] of a neighbor or a domain end).
    pub interior: bool,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best: PiecewiseTrigProfile,
    pub best_deficit: f64,
    pub trace: Vec<TraceEntry>,
    pub converged: bool,
}

/// Minimize the deficit over the stratum with `options.breakpoints`
/// interior breakpoints, multi-start Nelder-Mead with the closure
/// constraint eliminated analytically (the last cosine is solved from the
/// first `k - 1`).
///
/// For `k = 1` the feasible set is the single point `tau_1 = pi/3`. For
/// `k >= 2` every interior configuration has deficit strictly above
/// `1 - pi/3` and descent runs into breakpoint collisions, which are
/// collapsed onto the lower stratum.
pub fn minimize(options: &SearchOptions) -> Result<SearchResult> {
    let k = options.breakpoints;
    let sign = options.leading_sign;
    if sign != 1.0 && sign != -1.0 {
        return Err(Error::InvalidLeadingSign(sign));
    }
    if k == 0 {
        return Err(Error::InfeasibleConfiguration {
            reason: "at least one interior breakpoint is required".into(),
        });
    }
    if options.seeds == 0 {
        return Err(Error::InfeasibleConfiguration {
            reason: "at least one seed is required".into(),
        });
    }
    if k == 1 {
        // closure forces cos tau_1 = 1/2
        let profile = PiecewiseTrigProfile::new(vec![std::f64::consts::FRAC_PI_3], sign, 0.0)?;
        let deficit = deficit_piecewise_exact(&profile);
        return Ok(SearchResult {
            trace: vec![TraceEntry {
                breakpoints: profile.breakpoints().to_vec(),
                deficit,
                interior: true,
            }],
            best: profile,
            best_deficit: deficit,
            converged: true,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(options.rng_seed);
    let objective = |free: &[f64]| penalized_deficit(k, free);
    let mut best: Option<(PiecewiseTrigProfile, f64)> = None;
    let mut trace = Vec::with_capacity(options.seeds);
    let mut converged = false;

    for _ in 0..options.seeds {
        let start = random_feasible_breakpoints(k, &mut rng)?;
        let free0: Vec<f64> = start[..k - 1].iter().map(|t| t.cos()).collect();
        let (free, _, ok) = nelder_mead(&objective, &free0, 0.02, 600 * k, 1e-13);
        converged |= ok;
        let Some(cosines) = complete_cosines(k, &free) else {
            continue; // endpoint left the feasible cone; nothing to record
        };
        let taus: Vec<f64> = cosines.iter().map(|u| u.acos()).collect();
        let deficit = deficit_from_cosines(&cosines);
        trace.push(TraceEntry {
            breakpoints: taus.clone(),
            deficit,
            interior: is_interior(&taus),
        });
        if let Some(profile) = representative(&taus, sign) {
            let exact = deficit_piecewise_exact(&profile);
            if best.as_ref().is_none_or(|(_, f)| exact < *f) {
                best = Some((profile, exact));
            }
        }
    }

    let (best, best_deficit) = best.ok_or_else(|| Error::InfeasibleConfiguration {
        reason: format!("no descent endpoint could be realized with {k} breakpoints"),
    })?;
    debug_assert!(best_deficit >= REULEAUX_DEFICIT - 1e-9);
    Ok(SearchResult {
        best,
        best_deficit,
        trace,
        converged,
    })
}

fn is_interior(taus: &[f64]) -> bool {
    if taus.is_empty() {
        return false;
    }
    taus[0] >= COLLISION_TOL
        && FRAC_PI_2 - taus[taus.len() - 1] >= COLLISION_TOL
        && taus.windows(2).all(|w| w[1] - w[0] >= COLLISION_TOL)
}

/// Solve the last cosine from the closure constraint; `None` when the
/// completed vector is not strictly decreasing in (0, 1).
fn complete_cosines(k: usize, free: &[f64]) -> Option<Vec<f64>> {
    let mut alt = 0.0;
    let mut sign = 1.0;
    for &u in free {
        alt += sign * u;
        sign = -sign;
    }
    let last = sign * (0.5 - alt);
    let mut cosines = free.to_vec();
    cosines.push(last);
    let ordered = cosines.windows(2).all(|w| w[0] > w[1]);
    (ordered && cosines[0] < 1.0 && cosines[k - 1] > 0.0).then_some(cosines)
}

fn penalized_deficit(k: usize, free: &[f64]) -> f64 {
    let mut alt = 0.0;
    let mut sign = 1.0;
    for &u in free {
        if !u.is_finite() {
            return 1e6;
        }
        alt += sign * u;
        sign = -sign;
    }
    let last = sign * (0.5 - alt);
    let mut cosines = free.to_vec();
    cosines.push(last);
    let mut violation = (cosines[0] - 1.0).max(0.0) + (-cosines[k - 1]).max(0.0);
    for w in cosines.windows(2) {
        violation += (w[1] - w[0]).max(0.0);
    }
    if violation > 0.0 {
        return 10.0 + 100.0 * violation;
    }
    deficit_from_cosines(&cosines)
}

/// Exact member of the family closest to the descent endpoint: collapse
/// collided breakpoints onto the lower stratum, then re-project the
/// remaining cosines onto the closure manifold (an adjustment of the same
/// order as the collapsed gaps).
fn representative(taus: &[f64], sign: f64) -> Option<PiecewiseTrigProfile> {
    let mut taus = taus.to_vec();
    let mut sign = sign;
    loop {
        if let Some(&first) = taus.first() {
            if first < COLLISION_TOL {
                taus.remove(0);
                sign = -sign;
                continue;
            }
        }
        if let Some(&last) = taus.last() {
            if FRAC_PI_2 - last < COLLISION_TOL {
                taus.pop();
                continue;
            }
        }
        if let Some(i) = (0..taus.len().saturating_sub(1))
            .find(|&i| taus[i + 1] - taus[i] < COLLISION_TOL)
        {
            taus.drain(i..=i + 1);
            continue;
        }
        break;
    }
    if taus.is_empty() {
        return None;
    }
    let mut cosines: Vec<f64> = taus.iter().map(|t| t.cos()).collect();
    project_to_closure(&mut cosines);
    let ordered = cosines.windows(2).all(|w| w[0] > w[1]);
    if !(ordered && cosines[0] < 1.0 && *cosines.last().unwrap() > 0.0) {
        return None;
    }
    let breakpoints: Vec<f64> = cosines.into_iter().map(f64::acos).collect();
    PiecewiseTrigProfile::new(breakpoints, sign, 0.0).ok()
}

/// Plain Nelder-Mead; returns the best vertex, its value and whether the
/// simplex contracted below tolerance.
fn nelder_mead<F: Fn(&[f64]) -> f64>(
    f: &F,
    x0: &[f64],
    step: f64,
    max_iter: usize,
    tol: f64,
) -> (Vec<f64>, f64, bool) {
    let n = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        let fx = f(&x);
        simplex.push((x, fx));
    }

    let mut converged = false;
    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("objective is not NaN"));
        let spread = simplex[n].1 - simplex[0].1;
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max)
            })
            .fold(0.0f64, f64::max);
        if spread < tol && diameter < 1e-10 {
            converged = true;
            break;
        }

        let centroid: Vec<f64> = (0..n)
            .map(|i| simplex[..n].iter().map(|(x, _)| x[i]).sum::<f64>() / n as f64)
            .collect();
        let worst = simplex[n].clone();
        let point = |coef: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&worst.0)
                .map(|(c, w)| c + coef * (c - w))
                .collect()
        };

        let reflected = point(1.0);
        let fr = f(&reflected);
        if fr < simplex[0].1 {
            let expanded = point(2.0);
            let fe = f(&expanded);
            simplex[n] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let contracted = if fr < worst.1 {
                point(0.5)
            } else {
                point(-0.5)
            };
            let fc = f(&contracted);
            if fc < worst.1.min(fr) {
                simplex[n] = (contracted, fc);
            } else {
                // shrink toward the best vertex
                let best = simplex[0].0.clone();
                for entry in simplex.iter_mut().skip(1) {
                    for (xi, bi) in entry.0.iter_mut().zip(&best) {
                        *xi = bi + 0.5 * (*xi - bi);
                    }
                    entry.1 = f(&entry.0);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("objective is not NaN"));
    (simplex[0].0.clone(), simplex[0].1, converged)
}
