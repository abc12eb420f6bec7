//! Mesh and profile export: binary STL, OBJ, CSV curve samples, and an SVG
//! outline of the generating curve.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::geometry;
use crate::mesh::Mesh;
use crate::profile::Body;

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn facet_normal(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> [f64; 3] {
    let n = cross(sub(b, a), sub(c, a));
    let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    if len > 0.0 {
        [n[0] / len, n[1] / len, n[2] / len]
    } else {
        [0.0, 0.0, 0.0] // degenerate facet (pole fan on a vertex interval)
    }
}

/// Binary STL: 80-byte header, little-endian `u32` triangle count, then
/// one 50-byte record per triangle (normal, three vertices as `f32`
/// triples, and a zero attribute word). Output is byte-deterministic for
/// a fixed mesh.
pub fn write_stl<W: Write>(mesh: &Mesh, sink: &mut W) -> Result<()> {
    let mut header = [0u8; 80];
    let tag = b"cwrev binary STL: surface of revolution";
    header[..tag.len()].copy_from_slice(tag);
    sink.write_all(&header)?;
    sink.write_all(&(mesh.triangles.len() as u32).to_le_bytes())?;
    for tri in &mesh.triangles {
        let a = mesh.vertices[tri[0] as usize];
        let b = mesh.vertices[tri[1] as usize];
        let c = mesh.vertices[tri[2] as usize];
        for v in [facet_normal(a, b, c), a, b, c] {
            for x in v {
                sink.write_all(&(x as f32).to_le_bytes())?;
            }
        }
        sink.write_all(&0u16.to_le_bytes())?;
    }
    Ok(())
}

/// Exact byte size of the binary STL for a triangle count.
pub fn stl_byte_size(triangles: usize) -> usize {
    80 + 4 + 50 * triangles
}

/// Parse a binary STL back into a mesh, welding bit-identical vertices.
///
/// STL records a triangle soup, so welding is positional: meshes whose
/// construction placed distinct vertices at the same point (the vertex
/// circles of piecewise bodies do this) are not reconstructed with the
/// original combinatorics. The enclosed volume is unaffected.
pub fn read_stl<R: Read>(source: &mut R) -> Result<Mesh> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    if bytes.len() < 84 {
        return Err(Error::MeshFormat {
            message: format!("file too short for binary STL ({} bytes)", bytes.len()),
        });
    }
    let count = u32::from_le_bytes(bytes[80..84].try_into().expect("4 bytes")) as usize;
    let expected = stl_byte_size(count);
    if bytes.len() != expected {
        return Err(Error::MeshFormat {
            message: format!(
                "binary STL length mismatch: {} triangles need {expected} bytes, found {}",
                count,
                bytes.len()
            ),
        });
    }
    let mut vertices: Vec<[f64; 3]> = Vec::new();
    let mut index: std::collections::HashMap<[u32; 3], u32> = std::collections::HashMap::new();
    let mut triangles = Vec::with_capacity(count);
    let mut offset = 84;
    for _ in 0..count {
        offset += 12; // skip the stored normal
        let mut tri = [0u32; 3];
        for slot in &mut tri {
            let mut bits = [0u32; 3];
            let mut pos = [0f64; 3];
            for axis in 0..3 {
                let raw: [u8; 4] = bytes[offset..offset + 4].try_into().expect("4 bytes");
                let value = f32::from_le_bytes(raw);
                bits[axis] = value.to_bits();
                pos[axis] = value as f64;
                offset += 4;
            }
            *slot = *index.entry(bits).or_insert_with(|| {
                vertices.push(pos);
                (vertices.len() - 1) as u32
            });
        }
        triangles.push(tri);
        offset += 2; // attribute word
    }
    Ok(Mesh {
        vertices,
        triangles,
    })
}

/// Text OBJ with `v`/`f` records (1-based indices). The face count of a
/// tessellated body is `2 * ntheta * (nt - 1)`: two triangles per interior
/// quad plus the two pole fans.
pub fn write_obj<W: Write>(mesh: &Mesh, sink: &mut W) -> Result<()> {
    writeln!(sink, "# cwrev surface of revolution")?;
    writeln!(
        sink,
        "# {} vertices, {} faces",
        mesh.vertices.len(),
        mesh.triangles.len()
    )?;
    for v in &mesh.vertices {
        writeln!(sink, "v {} {} {}", v[0], v[1], v[2])?;
    }
    for t in &mesh.triangles {
        writeln!(sink, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
    }
    Ok(())
}

/// CSV of `n` uniform curve samples on `[-pi/2, pi/2]` with columns
/// `t,h,dh,s,x,y,rho`.
pub fn write_profile_csv<W: Write>(body: &Body, n: usize, sink: &mut W) -> Result<()> {
    writeln!(sink, "t,h,dh,s,x,y,rho")?;
    for s in geometry::sample_curve(body, n.max(2)) {
        writeln!(
            sink,
            "{},{},{},{},{},{},{}",
            s.t, s.h, s.dh, s.support, s.x, s.y, s.rho
        )?;
    }
    Ok(())
}

/// SVG outline of the closed generating curve (the profile together with
/// its mirror image across the axis of revolution).
pub fn write_profile_svg<W: Write>(body: &Body, n: usize, sink: &mut W) -> Result<()> {
    let samples = geometry::sample_curve(body, n.max(2));
    // svg y points down; the mirrored half runs back from the top pole
    let mut points: Vec<(f64, f64)> = samples.iter().map(|s| (s.x, -s.y)).collect();
    points.extend(
        samples
            .iter()
            .rev()
            .skip(1)
            .take(samples.len().saturating_sub(2))
            .map(|s| (-s.x, -s.y)),
    );
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &points {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let pad = 0.05 * (max_x - min_x).max(max_y - min_y).max(1e-9);
    let (w, h) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    writeln!(
        sink,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        min_x - pad,
        min_y - pad,
        w,
        h
    )?;
    write!(sink, r#"  <path fill="none" stroke="black" stroke-width="{}" d=""#, w / 400.0)?;
    for (i, &(x, y)) in points.iter().enumerate() {
        let op = if i == 0 { "M" } else { "L" };
        write!(sink, "{op}{x:.6} {y:.6} ")?;
    }
    writeln!(sink, r#"Z"/>"#)?;
    writeln!(sink, "</svg>")?;
    Ok(())
}
