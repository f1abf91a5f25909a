//! Phenomenological invariants of a pseudospherical helicoid and the
//! structure of its planar profile (cusps, singular helices, rationality of
//! the wave number).

use std::f64::consts::TAU;
use std::ops::Range;

use crate::elliptic::{complete_e, complete_k, complete_ke, complete_third};
use crate::error::{Error, Result};
use crate::helicoid::{Helicity, Helicoid, HelicoidClass, HelicoidParams, Point3};

/// Default tolerance of [`spatial_class`].
pub const DEFAULT_CLASS_TOL: f64 = 1e-9;
/// Default largest denominator tried by [`spatial_class`].
pub const DEFAULT_MAX_DENOMINATOR: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Invariants {
    pub helicity: Helicity,
    /// ε = −1 (magnetic) or +1 (electric).
    pub parity: i32,
    pub pitch: f64,
    pub wavelength: f64,
    pub wave_number: f64,
    pub inner_radius: f64,
    pub outer_radius: f64,
    /// `wavelength / inner_radius` for ε = −1, `wavelength / outer_radius` for ε = +1.
    pub aspect_ratio: f64,
    pub aspect_ratio_inner: f64,
    pub aspect_ratio_outer: f64,
}

/// Pitch `2π cosh r sinh r / (m + sinh² r)`.
pub fn pitch(mu: f64, r: f64) -> f64 {
    let m = 1.0 / mu;
    TAU * r.cosh() * r.sinh() / (m + r.sinh().powi(2))
}

/// Closed-form wavelength for either type.
pub fn wavelength(p: &HelicoidParams) -> Result<f64> {
    p.validate()?;
    let m = p.m();
    let (sh, ch) = (p.r.sinh(), p.r.cosh());
    let a = m + sh * sh;
    if p.mu > 1.0 {
        let (_, e) = complete_ke(m)?;
        Ok(2.0 * (ch * ch * complete_third(-sh * sh, m)? - e) / a.sqrt())
    } else {
        let m1 = 1.0 / m;
        let (k, e) = (complete_k(m1)?, complete_e(m1)?);
        let pi = complete_third(-1.0 / (sh * sh), m1)?;
        Ok(2.0 * ((m + ch * ch - 1.0) * k - m * e - ch * ch * pi) / (m * a).sqrt())
    }
}

/// Golden-section search for an extremum of `f` in `[a, b]` down to `width`.
/// Maximizes when `maximize`, otherwise minimizes. Returns `(x, f(x))`.
fn golden_section(f: impl Fn(f64) -> f64, a: f64, b: f64, width: f64, maximize: bool) -> (f64, f64) {
    let sign = if maximize { -1.0 } else { 1.0 };
    let g = |x| sign * f(x);
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (a, b);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (g(c), g(d));
    while b - a > width {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = g(d);
        }
        if d <= c {
            break;
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Extremum of the profile radius over one period: coarse scan, then
/// golden section to a bracket of width 1e-12. Returns `(u, radius)`.
pub fn radius_extremum(hc: &Helicoid, maximize: bool) -> (f64, f64) {
    const SCAN: usize = 64;
    let period = hc.period();
    let step = period / SCAN as f64;
    let better = |a: f64, b: f64| if maximize { a > b } else { a < b };
    let mut best = (0.0, hc.profile_radius(0.0));
    for i in 1..SCAN {
        let u = i as f64 * step;
        let q = hc.profile_radius(u);
        if better(q, best.1) {
            best = (u, q);
        }
    }
    golden_section(
        |u| hc.profile_radius(u),
        best.0 - step,
        best.0 + step,
        1e-12,
        maximize,
    )
}

impl Invariants {
    pub fn of(hc: &Helicoid) -> Result<Invariants> {
        let p = hc.params();
        let (m, sh, ch) = (hc.m(), p.r.sinh(), p.r.cosh());
        let a = m + sh * sh;
        let pitch = pitch(p.mu, p.r);
        let wavelength = wavelength(p)?;
        let (inner, outer) = match hc.kind() {
            HelicoidClass::Magnetic => ((m * (1.0 - m)).sqrt() / a, radius_extremum(hc, true).1),
            HelicoidClass::Electric => (radius_extremum(hc, false).1, m.sqrt() * ch / a),
        };
        let parity = hc.kind().parity();
        let (ar_in, ar_out) = (wavelength / inner, wavelength / outer);
        Ok(Invariants {
            helicity: p.helicity,
            parity,
            pitch,
            wavelength,
            wave_number: pitch / wavelength,
            inner_radius: inner,
            outer_radius: outer,
            aspect_ratio: if parity < 0 { ar_in } else { ar_out },
            aspect_ratio_inner: ar_in,
            aspect_ratio_outer: ar_out,
        })
    }
}

pub fn invariants(p: &HelicoidParams) -> Result<Invariants> {
    Invariants::of(&Helicoid::new(*p)?)
}

/// Period of the planar profile: 2K(m) magnetic, 2K(1/m)/√m electric.
pub fn profile_period(p: &HelicoidParams) -> Result<f64> {
    Ok(Helicoid::new(*p)?.period())
}

fn sub(a: Point3, b: Point3) -> [f64; 2] {
    [a[0] - b[0], a[2] - b[2]]
}

fn norm(a: [f64; 2]) -> f64 {
    a[0].hypot(a[1])
}

/// Step of the derivative check at a cusp.
const CUSP_STEP: f64 = 1e-6;
/// Largest admissible `|γ'|` at a cusp.
const CUSP_SPEED: f64 = 1e-8;

/// Checks that `u` is an ordinary cusp of the planar profile: the velocity
/// vanishes and both branches leave along the same ray.
fn check_cusp(hc: &Helicoid, u: f64) -> Result<()> {
    let g = |t| hc.planar_profile(t);
    let c = g(u);
    let speed = norm(sub(g(u + CUSP_STEP), g(u - CUSP_STEP))) / (2.0 * CUSP_STEP);
    let d = 1e-3;
    let (fwd, bwd) = (sub(g(u + d), c), sub(g(u - d), c));
    let alignment = (fwd[0] * bwd[0] + fwd[1] * bwd[1]) / (norm(fwd) * norm(bwd));
    // acceleration must not vanish, otherwise the cusp is of higher order
    let accel = norm([fwd[0] + bwd[0], fwd[1] + bwd[1]]) / (d * d);
    if speed < CUSP_SPEED && alignment > 0.999 && accel > 1e-6 {
        Ok(())
    } else {
        Err(Error::CuspCheck {
            u,
            speed,
            alignment,
        })
    }
}

/// Cusp parameters of the planar profile for `n` in `window`, each verified
/// numerically: `2nK(m)` for the magnetic type, `nω` and `ω/2 + nω` for the
/// electric type.
pub fn cusps(p: &HelicoidParams, window: Range<i64>) -> Result<Vec<f64>> {
    let hc = Helicoid::new(*p)?;
    let period = hc.period();
    let mut out = Vec::new();
    for n in window {
        let base = n as f64 * period;
        out.push(base);
        if hc.kind() == HelicoidClass::Electric {
            out.push(base + 0.5 * period);
        }
    }
    for &u in &out {
        check_cusp(&hc, u)?;
    }
    Ok(out)
}

/// Number of singular helices of a twisted column: `n` (magnetic) or `2n`
/// (electric) for integer wave number `n`.
pub fn singular_helix_count(p: &HelicoidParams, tol: f64) -> Result<u64> {
    let inv = invariants(p)?;
    let n = inv.wave_number.round();
    if (inv.wave_number - n).abs() > tol || n < 1.0 {
        return Err(Error::NotTwistedColumn {
            wave_number: inv.wave_number,
            tol,
        });
    }
    let per_turn = if inv.parity < 0 { 1 } else { 2 };
    Ok(per_turn * n as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpatialKind {
    DenseInShell,
    ImmersedCylinder,
    TwistedColumn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpatialClass {
    pub kind: SpatialKind,
    pub rational_approx: Option<(i64, u64)>,
}

/// First continued-fraction convergent of `x` within `tol`, with
/// denominator at most `max_den`.
pub fn rational_approximation(x: f64, tol: f64, max_den: u64) -> Option<(i64, u64)> {
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, x.floor() as i128, 1i128);
    let mut frac = x - x.floor();
    loop {
        if q1 as u64 > max_den {
            return None;
        }
        if (x - p1 as f64 / q1 as f64).abs() <= tol {
            return Some((p1 as i64, q1 as u64));
        }
        if frac == 0.0 {
            return None;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = a as i128;
        (p0, q0, p1, q1) = (p1, q1, a * p1 + p0, a * q1 + q0);
    }
}

/// Numerical trichotomy of the wave number: integer (twisted column),
/// rational with small denominator (immersed cylinder), otherwise dense.
pub fn spatial_class(p: &HelicoidParams, tol: f64, max_den: u64) -> Result<SpatialClass> {
    let n = invariants(p)?.wave_number;
    Ok(classify_wave_number(n, tol, max_den))
}

pub fn classify_wave_number(n: f64, tol: f64, max_den: u64) -> SpatialClass {
    if (n - n.round()).abs() <= tol {
        return SpatialClass {
            kind: SpatialKind::TwistedColumn,
            rational_approx: Some((n.round() as i64, 1)),
        };
    }
    match rational_approximation(n, tol, max_den) {
        Some(pq) => SpatialClass {
            kind: SpatialKind::ImmersedCylinder,
            rational_approx: Some(pq),
        },
        None => SpatialClass {
            kind: SpatialKind::DenseInShell,
            rational_approx: None,
        },
    }
}
