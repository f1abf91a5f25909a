//! Closed-form pseudospherical helicoids with parameters `(μ, r)`.
//!
//! `μ > 1` is the magnetic type (Jacobi parameter `m = 1/μ ∈ (0, 1)`),
//! `μ ∈ (0, 1)` the electric type (`m > 1`). The surface is
//!
//! ```text
//! f(u, v) = (R(2πv)·(x(u), y(u)), z(u) + ρ·v)
//! ```
//!
//! where `(x, y, z)` is the spatial profile. The unmirrored formulas rotate
//! counterclockwise while moving down the axis (`ρ < 0`), i.e. they are
//! left-handed; the opposite helicity is the mirror image `y ↦ −y`.

mod forms;
mod mirror;

use std::f64::consts::{PI, TAU};

pub use forms::{FdForms, FundamentalForms, SINGULAR_GUARD};
pub use mirror::{mirror_pair_check, traveling_wave_forms, MirrorPart, MirrorReport};

use crate::elliptic;
use crate::error::{Error, ExcludedCase, Result};

pub type Point3 = [f64; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Helicity {
    /// η = −1
    Left,
    /// η = +1
    Right,
}

impl Helicity {
    pub fn sign(self) -> i32 {
        match self {
            Helicity::Left => -1,
            Helicity::Right => 1,
        }
    }

    pub fn from_sign(s: i64) -> Result<Self> {
        match s {
            -1 => Ok(Helicity::Left),
            1 => Ok(Helicity::Right),
            _ => Err(Error::domain("helicity", s as f64, "helicity must be -1 or 1")),
        }
    }
}

/// Handedness produced by the closed formulas before any mirroring.
pub const NATIVE_HELICITY: Helicity = Helicity::Left;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HelicoidClass {
    Magnetic,
    Electric,
}

impl HelicoidClass {
    /// ε: −1 for magnetic, +1 for electric.
    pub fn parity(self) -> i32 {
        match self {
            HelicoidClass::Magnetic => -1,
            HelicoidClass::Electric => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelicoidParams {
    pub mu: f64,
    pub r: f64,
    pub helicity: Helicity,
}

impl HelicoidParams {
    pub fn new(mu: f64, r: f64, helicity: Helicity) -> Result<Self> {
        let p = HelicoidParams { mu, r, helicity };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.mu.is_finite() {
            return Err(Error::domain("mu", self.mu, "mu must be finite"));
        }
        if !self.r.is_finite() {
            return Err(Error::domain("r", self.r, "r must be finite"));
        }
        if self.mu == 1.0 {
            return Err(Error::Excluded(ExcludedCase::Dini));
        }
        if self.r == 0.0 {
            return Err(Error::Excluded(ExcludedCase::Revolution));
        }
        if self.mu == 0.0 {
            return Err(Error::Excluded(ExcludedCase::Degenerate));
        }
        if self.mu < 0.0 || self.r < 0.0 {
            return Err(Error::Excluded(ExcludedCase::MirrorImage));
        }
        Ok(())
    }

    pub fn m(&self) -> f64 {
        1.0 / self.mu
    }
}

pub fn classify(p: &HelicoidParams) -> Result<HelicoidClass> {
    p.validate()?;
    Ok(if p.mu > 1.0 {
        HelicoidClass::Magnetic
    } else {
        HelicoidClass::Electric
    })
}

/// Raw values of ψ, ξ, ζ, q¹, q², ρ at one parameter.
///
/// For the magnetic type `q1` and `q2` are infinite at `u = 2hK(m)`; use
/// [`Helicoid::spatial_profile`] or [`Helicoid::profile_radius`] there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelperValues {
    pub psi: f64,
    pub xi: f64,
    pub zeta: f64,
    pub q1: f64,
    pub q2: f64,
    pub rho: f64,
}

/// Profile data with the `ξ·q` products already cancelled.
#[derive(Debug, Clone, Copy)]
struct Cancelled {
    psi: f64,
    zeta: f64,
    p1: f64,
    p2: f64,
}

// Elliptic calls below only see parameters checked in `Helicoid::new`.
fn ok(x: Result<f64>) -> f64 {
    x.expect("elliptic parameter validated at construction")
}

fn jacobi(u: f64, m: f64) -> (f64, f64, f64) {
    elliptic::sn_cn_dn(u, m).expect("elliptic parameter validated at construction")
}

/// A validated helicoid with its constants precomputed.
#[derive(Debug, Clone)]
pub struct Helicoid {
    params: HelicoidParams,
    kind: HelicoidClass,
    m: f64,
    sh: f64,
    ch: f64,
    a: f64,
    rho: f64,
    /// K(m) (magnetic) or K(1/m) (electric).
    k: f64,
    /// E(m); unused for the electric type.
    e: f64,
    /// Π(−m csch²r, m), the constant term of ψ; unused for the electric type.
    pi_psi: f64,
    period: f64,
}

impl Helicoid {
    pub fn new(params: HelicoidParams) -> Result<Self> {
        let kind = classify(&params)?;
        let m = params.m();
        let (sh, ch) = (params.r.sinh(), params.r.cosh());
        let a = m + sh * sh;
        let rho = -TAU * ch * sh / a;
        let (k, e, pi_psi, period) = match kind {
            HelicoidClass::Magnetic => {
                let (k, e) = elliptic::complete_ke(m)?;
                (k, e, elliptic::complete_third(-m / (sh * sh), m)?, 2.0 * k)
            }
            HelicoidClass::Electric => {
                let k = elliptic::complete_k(1.0 / m)?;
                (k, 0.0, 0.0, 2.0 * k / m.sqrt())
            }
        };
        Ok(Helicoid {
            params,
            kind,
            m,
            sh,
            ch,
            a,
            rho,
            k,
            e,
            pi_psi,
            period,
        })
    }

    pub fn params(&self) -> &HelicoidParams {
        &self.params
    }

    pub fn kind(&self) -> HelicoidClass {
        self.kind
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// Signed axial advance per turn of the unmirrored surface (always < 0).
    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Period of the profile radius: 2K(m) magnetic, 2K(1/m)/√m electric.
    pub fn period(&self) -> f64 {
        self.period
    }

    /// Spacing of consecutive cusps of the profile.
    pub fn cusp_spacing(&self) -> f64 {
        match self.kind {
            HelicoidClass::Magnetic => self.period,
            HelicoidClass::Electric => 0.5 * self.period,
        }
    }

    /// Distance in `u` to the nearest cusp parameter.
    pub fn singular_distance(&self, u: f64) -> f64 {
        let c = self.cusp_spacing();
        (u - c * (u / c).round()).abs()
    }

    /// Regular reference parameter, midway between two cusps.
    pub fn calibration_u(&self) -> f64 {
        0.5 * self.cusp_spacing()
    }

    fn mirrored(&self) -> bool {
        self.params.helicity != NATIVE_HELICITY
    }

    fn mirror(&self, p: Point3) -> Point3 {
        if self.mirrored() {
            [p[0], -p[1], p[2]]
        } else {
            p
        }
    }

    pub fn helpers(&self, u: f64) -> HelperValues {
        let (m, sh, ch, a) = (self.m, self.sh, self.ch, self.a);
        let (s, c, d) = jacobi(u, m);
        let g = m * s * s + sh * sh;
        let c0 = self.cancelled(u);
        let (xi, q1, q2) = match self.kind {
            HelicoidClass::Magnetic => (
                d * s * s * g.sqrt(),
                -m.sqrt() / (a.sqrt() * s * g),
                m.sqrt() * ch * sh * c / (a * s * s * d * g),
            ),
            HelicoidClass::Electric => ((m / g).sqrt(), ch * sh * c / a, d * s / a.sqrt()),
        };
        HelperValues {
            psi: c0.psi,
            xi,
            zeta: c0.zeta,
            q1,
            q2,
            rho: self.rho,
        }
    }

    fn cancelled(&self, u: f64) -> Cancelled {
        let (m, sh, ch, a) = (self.m, self.sh, self.ch, self.a);
        let sa = a.sqrt();
        let (s, c, d) = jacobi(u, m);
        let g = m * s * s + sh * sh;
        match self.kind {
            HelicoidClass::Magnetic => {
                let n = -m / (sh * sh);
                let psi = sa * (ch / sh) * (self.pi_psi - ok(elliptic::pi_fn(n, u, m)));
                let zeta = (self.e + ch * ch * (u - self.k) - ok(elliptic::epsilon_fn(u, m))) / sa;
                let sg = g.sqrt();
                Cancelled {
                    psi,
                    zeta,
                    p1: -m.sqrt() * d * s / (sa * sg),
                    p2: m.sqrt() * ch * sh * c / (a * sg),
                }
            }
            HelicoidClass::Electric => {
                let sm = m.sqrt();
                let n = -1.0 / (sh * sh);
                let psi = -(sa * (ch / sh) / sm) * ok(elliptic::pi_fn(n, sm * u, 1.0 / m));
                let zeta =
                    ((ch * ch + m - 1.0) * u - sm * ok(elliptic::epsilon_fn(sm * u, 1.0 / m))) / sa;
                let xi = (m / g).sqrt();
                Cancelled {
                    psi,
                    zeta,
                    p1: xi * ch * sh * c / a,
                    p2: xi * d * s / sa,
                }
            }
        }
    }

    /// The spatial profile `f(u, 0)`.
    pub fn spatial_profile(&self, u: f64) -> Point3 {
        let c = self.cancelled(u);
        let (sp, cp) = c.psi.sin_cos();
        self.mirror([cp * c.p1 - sp * c.p2, sp * c.p1 + cp * c.p2, c.zeta])
    }

    pub fn surface_point(&self, u: f64, v: f64) -> Point3 {
        let c = self.cancelled(u);
        let (sa, ca) = (c.psi + TAU * v).sin_cos();
        self.mirror([ca * c.p1 - sa * c.p2, sa * c.p1 + ca * c.p2, c.zeta + self.rho * v])
    }

    /// Applies the screw motion by `w` turns that maps `f(u, v)` to `f(u, v + w)`.
    pub fn screw(&self, p: Point3, w: f64) -> Point3 {
        let sense = if self.mirrored() { -1.0 } else { 1.0 };
        let (s, c) = (sense * TAU * w).sin_cos();
        [c * p[0] - s * p[1], s * p[0] + c * p[1], p[2] + self.rho * w]
    }

    /// Distance of the profile from the screw axis, finite for every `u`.
    pub fn profile_radius(&self, u: f64) -> f64 {
        let c = self.cancelled(u);
        c.p1.hypot(c.p2)
    }

    /// θ(u) in turns: `2πθ` is the continuous angle from the half-plane
    /// `y = 0, x > 0` to the half-plane through the unmirrored profile point.
    pub fn angular_function(&self, u: f64) -> f64 {
        match self.kind {
            HelicoidClass::Magnetic => {
                // (p1, p2) changes sign every 2K; unwrap by counting half-turns
                let j = ((u + self.k) / (2.0 * self.k)).floor();
                let c = self.cancelled(u - 2.0 * self.k * j);
                let psi = self.cancelled(u).psi;
                (psi + c.p2.atan2(c.p1) + PI * j) / TAU
            }
            HelicoidClass::Electric => {
                let c = self.cancelled(u);
                (c.psi + (c.p2 / c.p1).atan()) / TAU
            }
        }
    }

    /// θ from the raw `arctan(q²/q¹)` with the step correction
    /// `π([u/2K] + δ₋(u))` (magnetic). Undefined at `u = 2hK(m)`.
    pub fn angular_function_formula(&self, u: f64) -> f64 {
        let h = self.helpers(u);
        let base = h.psi + (h.q2 / h.q1).atan();
        match self.kind {
            HelicoidClass::Magnetic => {
                let step = if u >= 0.0 { 1.0 } else { 0.0 };
                (base + PI * ((u / (2.0 * self.k)).trunc() + step)) / TAU
            }
            HelicoidClass::Electric => base / TAU,
        }
    }

    /// The planar profile `γ(u) = (q(u), 0, ζ(u) − ρ·θ(u))`.
    pub fn planar_profile(&self, u: f64) -> Point3 {
        let c = self.cancelled(u);
        [
            c.p1.hypot(c.p2),
            0.0,
            c.zeta - self.rho * self.angular_function(u),
        ]
    }

    /// Sweep of the planar profile: `f(u, v) = (q cos 2πv, q sin 2πv, z(u) + ρv)`.
    ///
    /// `surface_from_profile(u, v + θ(u)) == surface_point(u, v)`.
    pub fn surface_from_profile(&self, u: f64, v: f64) -> Point3 {
        let g = self.planar_profile(u);
        let (s, c) = (TAU * v).sin_cos();
        self.mirror([g[0] * c, g[0] * s, g[2] + self.rho * v])
    }

    /// Screw sense of `surface_point` measured from its `v`-velocity at a
    /// regular point: the sign of (angular rate)·(axial rate).
    pub fn measured_helicity(&self) -> Helicity {
        let (u, h) = (self.calibration_u(), 1e-6);
        let p = self.surface_point(u, 0.0);
        let a = self.surface_point(u, h);
        let b = self.surface_point(u, -h);
        let dv = [(a[0] - b[0]) / (2.0 * h), (a[1] - b[1]) / (2.0 * h), (a[2] - b[2]) / (2.0 * h)];
        let spin = p[0] * dv[1] - p[1] * dv[0];
        if spin * dv[2] > 0.0 {
            Helicity::Right
        } else {
            Helicity::Left
        }
    }
}

pub fn helpers(p: &HelicoidParams, u: f64) -> Result<HelperValues> {
    Ok(Helicoid::new(*p)?.helpers(u))
}

pub fn spatial_profile(p: &HelicoidParams, u: f64) -> Result<Point3> {
    Ok(Helicoid::new(*p)?.spatial_profile(u))
}

pub fn surface_point(p: &HelicoidParams, u: f64, v: f64) -> Result<Point3> {
    Ok(Helicoid::new(*p)?.surface_point(u, v))
}

pub fn angular_function(p: &HelicoidParams, u: f64) -> Result<f64> {
    Ok(Helicoid::new(*p)?.angular_function(u))
}

pub fn planar_profile(p: &HelicoidParams, u: f64) -> Result<Point3> {
    Ok(Helicoid::new(*p)?.planar_profile(u))
}

pub fn surface_from_profile(p: &HelicoidParams, u: f64, v: f64) -> Result<Point3> {
    Ok(Helicoid::new(*p)?.surface_from_profile(u, v))
}

pub fn closed_fundamental_forms(p: &HelicoidParams, u: f64) -> Result<FundamentalForms> {
    Ok(Helicoid::new(*p)?.closed_forms(u))
}

pub fn fd_fundamental_forms(p: &HelicoidParams, u: f64, v: f64, h: f64) -> Result<FdForms> {
    Helicoid::new(*p)?.fd_forms(u, v, h)
}

pub fn gauss_curvature(p: &HelicoidParams, u: f64, v: f64, h: f64) -> Result<f64> {
    Helicoid::new(*p)?.gauss_curvature(u, v, h)
}
