//! Watertight triangulation of a body and the divergence-theorem volume.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::geometry;
use crate::profile::Body;

/// Triangulated closed surface; triangles are outward-oriented.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[u32; 3]>,
}

impl Mesh {
    /// Signed enclosed volume `(1/6) sum det(v0, v1, v2)`; positive for
    /// outward orientation.
    pub fn signed_volume(&self) -> f64 {
        let six_v: f64 = self
            .triangles
            .iter()
            .map(|tri| {
                let a = self.vertices[tri[0] as usize];
                let b = self.vertices[tri[1] as usize];
                let c = self.vertices[tri[2] as usize];
                det3(a, b, c)
            })
            .sum();
        six_v / 6.0
    }

    /// Every directed edge occurs exactly once and its reverse occurs too:
    /// closed, consistently oriented, edge-manifold.
    pub fn is_watertight(&self) -> bool {
        let mut directed: HashMap<(u32, u32), u32> = HashMap::new();
        for tri in &self.triangles {
            for e in 0..3 {
                let a = tri[e];
                let b = tri[(e + 1) % 3];
                if a == b {
                    return false;
                }
                *directed.entry((a, b)).or_insert(0) += 1;
            }
        }
        directed
            .iter()
            .all(|(&(a, b), &n)| n == 1 && directed.get(&(b, a)) == Some(&1))
    }

    /// `V - E + F`; 2 for a topological sphere.
    pub fn euler_characteristic(&self) -> i64 {
        let mut edges = std::collections::HashSet::new();
        for tri in &self.triangles {
            for e in 0..3 {
                let a = tri[e];
                let b = tri[(e + 1) % 3];
                edges.insert((a.min(b), a.max(b)));
            }
        }
        self.vertices.len() as i64 - edges.len() as i64 + self.triangles.len() as i64
    }

    /// Same mesh with every triangle flipped (negates the signed volume).
    pub fn reversed(&self) -> Mesh {
        Mesh {
            vertices: self.vertices.clone(),
            triangles: self
                .triangles
                .iter()
                .map(|t| [t[0], t[2], t[1]])
                .collect(),
        }
    }
}

fn det3(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Tessellate the boundary of `body` with `nt` latitude bands and `ntheta`
/// meridians.
///
/// Grid layout: `nt + 1` normal angles `t_j = -pi/2 + pi j / nt`; the two
/// extreme angles are the poles (where `x = 0`) and become single fan
/// vertices, the `nt - 1` interior angles become rings of `ntheta`
/// vertices. Face count is `2 ntheta (nt - 1)`: `2 ntheta` pole-fan
/// triangles plus two triangles per interior quad.
///
/// Fails on resolutions below 3 and on bodies whose curvature scan shows a
/// convexity violation (radius of curvature below `-1e-9`).
pub fn tessellate(body: &Body, nt: usize, ntheta: usize) -> Result<Mesh> {
    if nt < 3 || ntheta < 3 {
        return Err(Error::MeshResolution { nt, ntheta });
    }
    let (t_bad, rho_min) =
        geometry::min_radius_of_curvature(body.profile(), body.half_width(), 4 * nt.max(256));
    if rho_min < -1e-9 {
        return Err(Error::ConvexityViolation {
            t: t_bad,
            rho: rho_min,
        });
    }

    let rings = nt - 1;
    let mut vertices = Vec::with_capacity(rings * ntheta + 2);
    let south = geometry::curve_point(body, -FRAC_PI_2);
    vertices.push([0.0, 0.0, south[1]]);
    for j in 1..nt {
        let t = -FRAC_PI_2 + PI * j as f64 / nt as f64;
        for l in 0..ntheta {
            let theta = TAU * l as f64 / ntheta as f64;
            vertices.push(geometry::surface_point(body, t, theta));
        }
    }
    let north = geometry::curve_point(body, FRAC_PI_2);
    vertices.push([0.0, 0.0, north[1]]);

    let south_id = 0u32;
    let north_id = (rings * ntheta + 1) as u32;
    let ring_vertex = |j: usize, l: usize| (1 + (j - 1) * ntheta + l % ntheta) as u32;

    let mut triangles = Vec::with_capacity(2 * ntheta * rings);
    for l in 0..ntheta {
        // south fan, wound so that det(v, e_theta, e_t) > 0 (outward)
        triangles.push([south_id, ring_vertex(1, l + 1), ring_vertex(1, l)]);
    }
    for j in 1..rings {
        for l in 0..ntheta {
            let a = ring_vertex(j, l);
            let b = ring_vertex(j, l + 1);
            let c = ring_vertex(j + 1, l + 1);
            let d = ring_vertex(j + 1, l);
            triangles.push([a, b, c]);
            triangles.push([a, c, d]);
        }
    }
    for l in 0..ntheta {
        triangles.push([ring_vertex(rings, l), ring_vertex(rings, l + 1), north_id]);
    }

    Ok(Mesh {
        vertices,
        triangles,
    })
}
