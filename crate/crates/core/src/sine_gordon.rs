//! Traveling-wave solutions of the sine-Gordon equation `φ_ss − φ_tt = sin φ`.

use std::f64::consts::PI;

use crate::elliptic::amplitude;
use crate::error::{Error, Result};

/// Default stencil step for [`sg_residual`].
pub const DEFAULT_STEP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub mu: f64,
    pub r: f64,
}

impl PotentialParams {
    pub fn new(mu: f64, r: f64) -> Result<Self> {
        if mu == 0.0 || !mu.is_finite() {
            return Err(Error::domain("mu", mu, "mu must be finite and nonzero"));
        }
        if !r.is_finite() {
            return Err(Error::domain("r", r, "r must be finite"));
        }
        Ok(PotentialParams { mu, r })
    }
}

/// The traveling wave φ_{μ,r}(s, t).
///
/// `μ < 0` travels along `cosh r·s + sinh r·t`, `μ > 0` along
/// `sinh r·s + cosh r·t`; `μ = 1` is the kink.
pub fn potential(p: PotentialParams, s: f64, t: f64) -> Result<f64> {
    let PotentialParams { mu, r } = p;
    if mu == 0.0 {
        return Err(Error::domain("mu", mu, "mu must be nonzero"));
    }
    let (sh, ch) = (r.sinh(), r.cosh());
    if mu == 1.0 {
        let w = r * s + (1.0 + r * r).sqrt() * t;
        return Ok(PI - 4.0 * w.exp().atan());
    }
    let arg = if mu < 0.0 {
        (ch * s + sh * t) / (-mu).sqrt()
    } else {
        (sh * s + ch * t) / mu.sqrt()
    };
    Ok(-2.0 * amplitude(arg, mu)?)
}

/// Central-difference estimate of `φ_ss − φ_tt − sin φ` at `(s, t)`.
pub fn sg_residual(p: PotentialParams, s: f64, t: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::domain("h", h, "step must be positive"));
    }
    let f = |s, t| potential(p, s, t);
    let c = f(s, t)?;
    let phi_ss = (f(s + h, t)? - 2.0 * c + f(s - h, t)?) / (h * h);
    let phi_tt = (f(s, t + h)? - 2.0 * c + f(s, t - h)?) / (h * h);
    Ok(phi_ss - phi_tt - c.sin())
}
