//! Mirror identities between traveling-wave surfaces with related parameters.
//!
//! `L_{μ,r} = f_{μ,r} ∘ Φ_{μ,r}` is the surface in the coordinates
//! `(s, t) = √|μ|·(−sinh r·u + cosh r·v, cosh r·u − sinh r·v)`, whose forms are
//! pulled back from the sine-Gordon forms
//! `g = cos²(φ/2) ds² + sin²(φ/2) dt²`, `h = sin(φ/2) cos(φ/2) (ds² − dt²)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FundamentalForms;
use crate::elliptic::complete_k;
use crate::error::{Error, Result};
use crate::sine_gordon::{potential, PotentialParams};

/// Agreement required of the pulled-back coefficients.
pub const MIRROR_TOL: f64 = 1e-8;

type Mat2 = [[f64; 2]; 2];

/// `g' = JᵀgJ`, `h' = h_sign·JᵀhJ`.
fn congruence(f: &FundamentalForms, j: Mat2, h_sign: f64) -> FundamentalForms {
    let quad = |a11: f64, a12: f64, a22: f64| {
        let col = |k: usize| [j[0][k], j[1][k]];
        let form = |x: [f64; 2], y: [f64; 2]| {
            a11 * x[0] * y[0] + a12 * (x[0] * y[1] + x[1] * y[0]) + a22 * x[1] * y[1]
        };
        (form(col(0), col(0)), form(col(0), col(1)), form(col(1), col(1)))
    };
    let (g11, g12, g22) = quad(f.g11, f.g12, f.g22);
    let (h11, h12, h22) = quad(f.h11, f.h12, f.h22);
    FundamentalForms {
        g11,
        g12,
        g22,
        h11: h_sign * h11,
        h12: h_sign * h12,
        h22: h_sign * h22,
    }
}

/// Forms of `±F ∘ J` given those of `F`: the normal `∂u × ∂v` flips with the
/// orientation of `J`, and negating the map flips `h` once more.
fn pull_back(f: &FundamentalForms, j: Mat2, negate: bool) -> FundamentalForms {
    let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    let sign = if negate { -1.0 } else { 1.0 } * det.signum();
    congruence(f, j, sign)
}

/// Fundamental forms of `L_{μ,r}` at `(u, v)`; valid for every `μ ≠ 0`.
pub fn traveling_wave_forms(mu: f64, r: f64, u: f64, v: f64) -> Result<FundamentalForms> {
    let p = PotentialParams::new(mu, r)?;
    let a = mu.abs().sqrt();
    let (sh, ch) = (r.sinh(), r.cosh());
    let j = [[-a * sh, a * ch], [a * ch, -a * sh]];
    let s = j[0][0] * u + j[0][1] * v;
    let t = j[1][0] * u + j[1][1] * v;
    let (sin, cos) = (0.5 * potential(p, s, t)?).sin_cos();
    let base = FundamentalForms {
        g11: cos * cos,
        g12: 0.0,
        g22: sin * sin,
        h11: sin * cos,
        h12: 0.0,
        h22: -sin * cos,
    };
    // the sine-Gordon forms are written in (u, v) directly, with no normal flip
    Ok(congruence(&base, j, 1.0))
}

/// Outcome of one identity over the sampled points.
#[derive(Debug, Clone, PartialEq)]
pub struct MirrorPart {
    pub source_mu: f64,
    pub target_mu: f64,
    pub r: f64,
    pub samples: usize,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MirrorReport {
    /// Negative-parameter identity `μ < 0 ↔ μ/(μ−1) ∈ (0, 1)`; `None` for `μ > 1`.
    pub part1: Option<MirrorPart>,
    /// Sign-of-`r` identity `(μ, r) ↔ (μ, −r)`.
    pub part2: MirrorPart,
}

/// `−L_{μ,r} ∘ Φ'` against `L_{μ',r}` with `μ' = μ/(μ−1)`, for `μ < 0`.
///
/// `Φ'(u, v) = (v, u − K(μ'))/√(1−μ)`.
fn part1_deviation(mu: f64, r: f64, u: f64, v: f64) -> Result<f64> {
    let target = mu / (mu - 1.0);
    let w = (1.0 - mu).sqrt();
    let kp = complete_k(target)?;
    let j = [[0.0, 1.0 / w], [1.0 / w, 0.0]];
    let src = traveling_wave_forms(mu, r, v / w, (u - kp) / w)?;
    let lhs = pull_back(&src, j, true);
    Ok(lhs.max_deviation(&traveling_wave_forms(target, r, u, v)?))
}

/// `−L_{μ,r}` with one coordinate reflected against `L_{μ,−r}`: `v ↦ −v`
/// when `μ > 0`, `u ↦ −u` when `μ < 0`.
fn part2_deviation(mu: f64, r: f64, u: f64, v: f64) -> Result<f64> {
    let (j, src) = if mu > 0.0 {
        ([[1.0, 0.0], [0.0, -1.0]], traveling_wave_forms(mu, r, u, -v)?)
    } else {
        ([[-1.0, 0.0], [0.0, 1.0]], traveling_wave_forms(mu, r, -u, v)?)
    };
    let lhs = pull_back(&src, j, true);
    Ok(lhs.max_deviation(&traveling_wave_forms(mu, -r, u, v)?))
}

fn run_part(
    name: &'static str,
    samples: usize,
    rng: &mut ChaCha8Rng,
    dev: impl Fn(f64, f64) -> Result<f64>,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let u = rng.gen_range(-2.0..2.0);
        let v = rng.gen_range(-2.0..2.0);
        let d = dev(u, v)?;
        if !(d <= MIRROR_TOL) {
            return Err(Error::MirrorMismatch {
                part: name,
                u,
                v,
                deviation: d,
            });
        }
        worst = worst.max(d);
    }
    Ok(worst)
}

/// Checks both mirror identities at `samples` pseudo-random points.
///
/// For `μ ∈ (0, 1)` the negative-parameter identity is checked with source
/// `μ/(μ−1) < 0`, whose partner is `μ` itself.
pub fn mirror_pair_check(mu: f64, r: f64, samples: usize, seed: u64) -> Result<MirrorReport> {
    if !mu.is_finite() || mu == 0.0 || mu == 1.0 {
        return Err(Error::domain("mu", mu, "mu must be finite, nonzero and different from 1"));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain("r", r, "r must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let source = if mu < 0.0 {
        Some(mu)
    } else if mu < 1.0 {
        Some(mu / (mu - 1.0))
    } else {
        None
    };
    let part1 = match source {
        Some(src) => {
            let worst = run_part("1", samples, &mut rng, |u, v| part1_deviation(src, r, u, v))?;
            Some(MirrorPart {
                source_mu: src,
                target_mu: src / (src - 1.0),
                r,
                samples,
                max_deviation: worst,
            })
        }
        None => None,
    };
    let worst = run_part("2", samples, &mut rng, |u, v| part2_deviation(mu, r, u, v))?;
    Ok(MirrorReport {
        part1,
        part2: MirrorPart {
            source_mu: mu,
            target_mu: mu,
            r,
            samples,
            max_deviation: worst,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_mu_forms_match_closed_expression() {
        // g = μ(sn² + sh²) du² − μ sinh 2r du dv + μ(cn² + sh²) dv², h = μ sn cn (du² − dv²)
        let (mu, r, u, v) = (0.6f64, 0.4f64, 0.9, -0.3);
        let f = traveling_wave_forms(mu, r, u, v).unwrap();
        let (s, c, _) = crate::elliptic::sn_cn_dn(u, mu).unwrap();
        let sh2 = r.sinh().powi(2);
        assert!((f.g11 - mu * (s * s + sh2)).abs() < 1e-14);
        assert!((f.g12 + 0.5 * mu * (2.0 * r).sinh()).abs() < 1e-14);
        assert!((f.g22 - mu * (c * c + sh2)).abs() < 1e-14);
        assert!((f.h11 - mu * s * c).abs() < 1e-14);
        assert!(f.h12.abs() < 1e-14);
        assert!((f.h22 + mu * s * c).abs() < 1e-14);
    }

    #[test]
    fn no_samples_is_vacuous() {
        let rep = mirror_pair_check(2.0, 0.4, 0, 1).unwrap();
        assert!(rep.part1.is_none());
        assert_eq!(rep.part2.max_deviation, 0.0);
    }

    #[test]
    fn literal_reflection_fails_for_negative_mu() {
        // reflecting v instead of u does not give the (μ, −r) forms when μ < 0
        let (mu, r, u, v) = (-1.0, 0.4, 0.3, 0.7);
        let src = traveling_wave_forms(mu, r, u, -v).unwrap();
        let lhs = pull_back(&src, [[1.0, 0.0], [0.0, -1.0]], true);
        let d = lhs.max_deviation(&traveling_wave_forms(mu, -r, u, v).unwrap());
        assert!(d > 1e-3);
    }
}
