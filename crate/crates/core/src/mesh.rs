//! Sampled profiles and triangulated surfaces, with OBJ and CSV writers.
//!
//! Numbers are written in the shortest decimal form that parses back to the
//! same `f64`, so every writer/reader pair round-trips bit for bit.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::helicoid::{Helicity, Helicoid, HelicoidClass, HelicoidParams, Point3, NATIVE_HELICITY};
use crate::invariants::Invariants;

#[derive(Debug, Clone, PartialEq)]
pub struct PlanarProfilePolyline {
    /// `(x, z)` in the half-plane `y = 0, x > 0`.
    pub points: Vec<[f64; 2]>,
    /// Parameter `u` of each point.
    pub params: Vec<f64>,
    pub cusp_indices: Vec<usize>,
    pub period_count: usize,
    /// Points per period; `points[i + points_per_period]` is `points[i]`
    /// moved along the axis by one wavelength.
    pub points_per_period: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeshMetadata {
    pub mu: f64,
    pub r: f64,
    pub helicity: Helicity,
    pub invariants: Invariants,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceMesh {
    pub vertices: Vec<Point3>,
    pub faces: Vec<[usize; 3]>,
    pub singular_flags: Vec<bool>,
    /// `u` of each grid row.
    pub u_rows: Vec<f64>,
    pub res_v: usize,
    pub metadata: Option<MeshMetadata>,
}

impl SurfaceMesh {
    pub fn empty() -> Self {
        SurfaceMesh {
            vertices: Vec::new(),
            faces: Vec::new(),
            singular_flags: Vec::new(),
            u_rows: Vec::new(),
            res_v: 0,
            metadata: None,
        }
    }

    /// Indices of the grid rows lying on a cusp parameter.
    pub fn singular_rows(&self) -> Vec<usize> {
        if self.res_v == 0 {
            return Vec::new();
        }
        (0..self.u_rows.len())
            .filter(|&i| self.singular_flags[i * self.res_v])
            .collect()
    }
}

/// Cusp offsets inside one period `[0, period)`.
fn cusp_offsets(hc: &Helicoid) -> Vec<f64> {
    match hc.kind() {
        HelicoidClass::Magnetic => vec![0.0],
        HelicoidClass::Electric => vec![0.0, 0.5 * hc.period()],
    }
}

pub fn sample_profile(
    p: &HelicoidParams,
    periods: usize,
    samples_per_period: usize,
) -> Result<PlanarProfilePolyline> {
    if periods < 1 {
        return Err(Error::domain("periods", periods as f64, "at least 1 period"));
    }
    if samples_per_period < 8 {
        return Err(Error::domain(
            "samples_per_period",
            samples_per_period as f64,
            "at least 8 samples per period",
        ));
    }
    let hc = Helicoid::new(*p)?;
    let period = hc.period();
    let cusps = cusp_offsets(&hc);

    // one period of offsets: the uniform grid, with cusps placed exactly
    let mut offsets: Vec<(f64, bool)> = (0..samples_per_period)
        .map(|i| (i as f64 * period / samples_per_period as f64, i == 0))
        .collect();
    for &c in &cusps[1..] {
        let i = (c / period * samples_per_period as f64).round() as usize;
        if i * 2 == samples_per_period {
            offsets[i] = (c, true);
        } else {
            offsets.push((c, true));
        }
    }
    offsets.sort_by(|a, b| a.0.total_cmp(&b.0));

    let n = offsets.len();
    let mut out = PlanarProfilePolyline {
        points: Vec::with_capacity(n * periods),
        params: Vec::with_capacity(n * periods),
        cusp_indices: Vec::new(),
        period_count: periods,
        points_per_period: n,
    };
    for k in 0..periods {
        let base = k as f64 * period;
        for &(off, cusp) in &offsets {
            let u = base + off;
            let g = hc.planar_profile(u);
            if cusp {
                out.cusp_indices.push(out.points.len());
            }
            out.points.push([g[0], g[2]]);
            out.params.push(u);
        }
    }
    Ok(out)
}

/// Samples `f(u, v)` on a `res_u × res_v` grid over `u ∈ [0, u_periods·period]`
/// and `v ∈ [0, v_turns]`. Rows nearest to a cusp are moved onto it and flagged.
pub fn sample_surface(
    p: &HelicoidParams,
    u_periods: usize,
    v_turns: f64,
    res_u: usize,
    res_v: usize,
) -> Result<SurfaceMesh> {
    if u_periods < 1 {
        return Err(Error::domain("u_periods", u_periods as f64, "at least 1 period"));
    }
    if !(v_turns > 0.0 && v_turns.is_finite()) {
        return Err(Error::domain("v_turns", v_turns, "positive and finite"));
    }
    if res_u < 2 {
        return Err(Error::domain("res_u", res_u as f64, "resolution of at least 2"));
    }
    if res_v < 2 {
        return Err(Error::domain("res_v", res_v as f64, "resolution of at least 2"));
    }
    let hc = Helicoid::new(*p)?;
    let period = hc.period();
    let span = u_periods as f64 * period;
    let du = span / (res_u - 1) as f64;
    let mut u_rows: Vec<f64> = (0..res_u).map(|i| i as f64 * du).collect();
    let mut row_flag = vec![false; res_u];
    for k in 0..=u_periods {
        for &off in &cusp_offsets(&hc) {
            let c = k as f64 * period + off;
            if c > span {
                continue;
            }
            let i = ((c / du).round() as usize).min(res_u - 1);
            u_rows[i] = c;
            row_flag[i] = true;
        }
    }

    let mut vertices = Vec::with_capacity(res_u * res_v);
    let mut singular_flags = Vec::with_capacity(res_u * res_v);
    for (i, &u) in u_rows.iter().enumerate() {
        for j in 0..res_v {
            let v = j as f64 * v_turns / (res_v - 1) as f64;
            vertices.push(hc.surface_point(u, v));
            singular_flags.push(row_flag[i]);
        }
    }
    let mut faces = Vec::with_capacity(2 * (res_u - 1) * (res_v - 1));
    for i in 0..res_u - 1 {
        for j in 0..res_v - 1 {
            let a = i * res_v + j;
            let b = a + res_v;
            faces.push([a, b, b + 1]);
            faces.push([a, b + 1, a + 1]);
        }
    }
    Ok(SurfaceMesh {
        vertices,
        faces,
        singular_flags,
        u_rows,
        res_v,
        metadata: Some(MeshMetadata {
            mu: p.mu,
            r: p.r,
            helicity: p.helicity,
            invariants: Invariants::of(&hc)?,
        }),
    })
}

/// Shortest round-trip decimal form of `x`.
pub fn format_f64(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && a.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn parse_f64(s: &str, line: usize) -> Result<f64> {
    s.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid number {s:?}"),
    })
}

pub fn write_obj<W: Write + ?Sized>(mesh: &SurfaceMesh, sink: &mut W) -> Result<()> {
    writeln!(sink, "# pseudospherical helicoid mesh")?;
    if let Some(md) = &mesh.metadata {
        let inv = &md.invariants;
        writeln!(
            sink,
            "# mu {} r {} helicity {:?} (native {:?})",
            format_f64(md.mu),
            format_f64(md.r),
            md.helicity,
            NATIVE_HELICITY
        )?;
        writeln!(
            sink,
            "# parity {} pitch {} wavelength {} wave_number {} inner_radius {} outer_radius {}",
            inv.parity,
            format_f64(inv.pitch),
            format_f64(inv.wavelength),
            format_f64(inv.wave_number),
            format_f64(inv.inner_radius),
            format_f64(inv.outer_radius)
        )?;
        let rows: Vec<String> = mesh.singular_rows().iter().map(|i| i.to_string()).collect();
        writeln!(sink, "# grid {}x{} singular_rows {}", mesh.u_rows.len(), mesh.res_v, rows.join(","))?;
    }
    for v in &mesh.vertices {
        writeln!(sink, "v {} {} {}", format_f64(v[0]), format_f64(v[1]), format_f64(v[2]))?;
    }
    for f in &mesh.faces {
        writeln!(sink, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1)?;
    }
    Ok(())
}

/// Reads the `v` and `f` lines of an OBJ file. Other lines are ignored.
pub fn read_obj(source: impl BufRead) -> Result<(Vec<Point3>, Vec<[usize; 3]>)> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let mut it = line.split_whitespace();
        match it.next() {
            Some("v") => {
                let xs: Vec<&str> = it.collect();
                if xs.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "expected 3 coordinates".into(),
                    });
                }
                vertices.push([
                    parse_f64(xs[0], lineno)?,
                    parse_f64(xs[1], lineno)?,
                    parse_f64(xs[2], lineno)?,
                ]);
            }
            Some("f") => {
                let idx: Vec<usize> = it
                    .map(|s| {
                        let k = s.split('/').next().unwrap_or("");
                        match k.parse::<usize>() {
                            Ok(k) if k >= 1 => Ok(k - 1),
                            _ => Err(Error::Parse {
                                line: lineno,
                                message: format!("invalid index {s:?}"),
                            }),
                        }
                    })
                    .collect::<Result<_>>()?;
                if idx.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "expected a triangle".into(),
                    });
                }
                faces.push([idx[0], idx[1], idx[2]]);
            }
            _ => {}
        }
    }
    if let Some(f) = faces.iter().flatten().find(|&&k| k >= vertices.len()) {
        return Err(Error::Parse {
            line: 0,
            message: format!("face index {} out of range", f + 1),
        });
    }
    Ok((vertices, faces))
}

pub const PROFILE_CSV_HEADER: &str = "u,x,z,is_cusp";

pub fn write_profile_csv<W: Write + ?Sized>(profile: &PlanarProfilePolyline, sink: &mut W) -> Result<()> {
    writeln!(sink, "{PROFILE_CSV_HEADER}")?;
    let mut cusps = profile.cusp_indices.iter().peekable();
    for (i, (pt, u)) in profile.points.iter().zip(&profile.params).enumerate() {
        let is_cusp = cusps.next_if_eq(&&i).is_some();
        writeln!(
            sink,
            "{},{},{},{}",
            format_f64(*u),
            format_f64(pt[0]),
            format_f64(pt[1]),
            is_cusp as u8
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    pub u: f64,
    pub x: f64,
    pub z: f64,
    pub is_cusp: bool,
}

pub fn read_profile_csv(source: impl BufRead) -> Result<Vec<ProfileRow>> {
    let mut lines = source.lines();
    match lines.next().transpose()? {
        Some(h) if h.trim_end() == PROFILE_CSV_HEADER => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected header {PROFILE_CSV_HEADER:?}"),
            })
        }
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let lineno = i + 2;
        let f: Vec<&str> = line.trim_end().split(',').collect();
        if f.len() != 4 {
            return Err(Error::Parse {
                line: lineno,
                message: "expected 4 fields".into(),
            });
        }
        let is_cusp = match f[3] {
            "0" => false,
            "1" => true,
            s => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("invalid cusp flag {s:?}"),
                })
            }
        };
        rows.push(ProfileRow {
            u: parse_f64(f[0], lineno)?,
            x: parse_f64(f[1], lineno)?,
            z: parse_f64(f[2], lineno)?,
            is_cusp,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_round_trips() {
        for x in [0.0, -0.0, 1.0, 0.1, -2.5e-7, 1e300, 5e-324, 123456.789, f64::MAX, 1e16, 9.9e-6] {
            let s = format_f64(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(format_f64(0.5), "0.5");
        assert_eq!(format_f64(1e-7), "1e-7");
    }

    #[test]
    fn empty_mesh_is_header_only() {
        let mut buf = Vec::new();
        write_obj(&SurfaceMesh::empty(), &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.lines().all(|l| l.starts_with('#')));
        assert_eq!(s.lines().count(), 1);
    }

    #[test]
    fn obj_reader_rejects_bad_faces() {
        assert!(read_obj("v 0 0 0\nf 1 2 3\n".as_bytes()).is_err());
        assert!(read_obj("v 0 0 x\n".as_bytes()).is_err());
        assert!(read_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n".as_bytes()).is_ok());
    }

    #[test]
    fn csv_reader_checks_header() {
        assert!(read_profile_csv("u,x,z\n".as_bytes()).is_err());
        assert!(read_profile_csv("u,x,z,is_cusp\n1,2,3,2\n".as_bytes()).is_err());
        assert_eq!(read_profile_csv("u,x,z,is_cusp\n".as_bytes()).unwrap().len(), 0);
    }
}
