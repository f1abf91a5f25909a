//! Inverse problem: parameters `(μ, r)` of the helicoid with prescribed
//! helicity, parity, wave number and aspect ratio.
//!
//! Fixing the wave number expresses `r` through the Jacobi parameter `y`
//! (`r = ϱ_{n,d}(y)`), and the aspect ratio then becomes the single equation
//! `h_{n,d}(y) = 0` with `h` strictly increasing: on `(0, 1)` for parity −1,
//! on `(1, ∞)` for parity +1. The solution is `μ = 1/y`.

use std::f64::consts::PI;

use crate::elliptic::{complete_e, complete_k, complete_ke, complete_third};
use crate::error::{Error, Result};
use crate::helicoid::{Helicity, HelicoidParams};
use crate::invariants;

/// Relative bracket width at which refinement stops.
const Y_TOL: f64 = 1e-14;
const MAX_ITER: usize = 200;
const MAX_EXPANSIONS: usize = 200;
/// Upper end beyond which the parity +1 bracket search gives up.
const ELECTRIC_CAP: f64 = 1.267_650_600_228_229_4e30; // 2^100

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveRequest {
    pub helicity: Helicity,
    /// −1 (magnetic) or +1 (electric).
    pub parity: i32,
    pub wave_number: f64,
    pub aspect_ratio: f64,
}

impl SolveRequest {
    pub fn new(helicity: Helicity, parity: i32, wave_number: f64, aspect_ratio: f64) -> Result<Self> {
        check_parity(parity)?;
        check_positive("wave_number", wave_number)?;
        check_positive("aspect_ratio", aspect_ratio)?;
        Ok(SolveRequest {
            helicity,
            parity,
            wave_number,
            aspect_ratio,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveResult {
    pub mu: f64,
    pub r: f64,
    pub m_root: f64,
    /// `|h_{n,d}(m_root)|`
    pub residual: f64,
    pub iterations: usize,
    pub params: HelicoidParams,
}

fn check_parity(parity: i32) -> Result<()> {
    if parity == 1 || parity == -1 {
        Ok(())
    } else {
        Err(Error::domain("parity", parity as f64, "parity must be -1 or 1"))
    }
}

fn check_positive(name: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(name, x, "must be positive and finite"))
    }
}

fn check_y(parity: i32, y: f64, closed: bool) -> Result<()> {
    let ok = if parity < 0 {
        if closed { (0.0..=1.0).contains(&y) } else { y > 0.0 && y < 1.0 }
    } else if closed {
        y >= 1.0 && y.is_finite()
    } else {
        y > 0.0 && y.is_finite()
    };
    if ok {
        Ok(())
    } else if parity < 0 {
        Err(Error::domain("y", y, "y must lie in (0, 1) for parity -1"))
    } else {
        Err(Error::domain("y", y, "y must lie in (1, inf) for parity +1"))
    }
}

/// `r = ϱ_{n,d}(y)`: the boost parameter giving wave number `n`.
pub fn r_of_m(parity: i32, n: f64, d: f64, y: f64) -> Result<f64> {
    check_parity(parity)?;
    check_y(parity, y, false)?;
    Ok(if parity < 0 {
        0.5 * (d * n * (y * (1.0 - y)).sqrt() / PI).asinh()
    } else {
        (n * y.sqrt() * d / (2.0 * PI)).asinh()
    })
}

/// `h_{n,d}(y)`, whose unique zero is the Jacobi parameter of the solution.
///
/// Parity −1 accepts `y ∈ [0, 1]`, with the limits `−2dπ/√(n²d² + 4π²)` at
/// 0 and `+∞` at 1. Parity +1 accepts `y ∈ [1, ∞)`, with `−∞` at 1.
pub fn h_fn(parity: i32, n: f64, d: f64, y: f64) -> Result<f64> {
    check_parity(parity)?;
    check_y(parity, y, true)?;
    let four_pi2 = 4.0 * PI * PI;
    let a = d * d * n * n;
    if parity < 0 {
        if y == 0.0 {
            return Ok(-2.0 * d * PI / (a + four_pi2).sqrt());
        }
        if y == 1.0 {
            return Ok(f64::INFINITY);
        }
        let r = r_of_m(parity, n, d, y)?;
        let (sh, ch) = (r.sinh(), r.cosh());
        let (_, e) = complete_ke(y)?;
        let pi = complete_third(-sh * sh, y)?;
        Ok(-2.0 * e + 2.0 * ch * ch * pi - d * (y * (1.0 - y) / (y + sh * sh)).sqrt())
    } else {
        if y == 1.0 {
            return Ok(f64::NEG_INFINITY);
        }
        let m1 = 1.0 / y;
        let (k, e) = (complete_k(m1)?, complete_e(m1)?);
        let pi = complete_third(-four_pi2 / (a * y), m1)?;
        Ok(2.0 * d * PI * PI * (a * y * y + four_pi2 * y).sqrt() / (a + four_pi2).sqrt()
            + four_pi2 * y * e
            - y * (a + four_pi2) * k
            + (a * y + four_pi2) * pi)
    }
}

/// Bracketed root refinement: regula falsi with the Illinois weighting,
/// falling back to bisection whenever the bracket fails to halve.
fn refine(
    f: impl Fn(f64) -> Result<f64>,
    mut lo: f64,
    mut flo: f64,
    mut hi: f64,
    mut fhi: f64,
) -> Result<(f64, usize)> {
    let mut side = 0i8;
    let mut window = hi - lo;
    for it in 1..=MAX_ITER {
        // every third step, bisect unless the last three steps halved the bracket
        let stalled = it % 3 == 0 && hi - lo > 0.5 * window;
        if it % 3 == 0 {
            window = hi - lo;
        }
        let mut x = (lo * fhi - hi * flo) / (fhi - flo);
        if stalled || !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        if x <= lo || x >= hi {
            return Ok((x, it));
        }
        let fx = f(x)?;
        if !fx.is_finite() {
            return Err(Error::NonFinite {
                what: "h",
                y: x,
                value: fx,
            });
        }
        if fx == 0.0 {
            return Ok((x, it));
        }
        if (fx < 0.0) == (flo < 0.0) {
            lo = x;
            flo = fx;
            if side == -1 {
                fhi *= 0.5;
            }
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if side == 1 {
                flo *= 0.5;
            }
            side = 1;
        }
        if hi - lo < Y_TOL * lo.abs().max(1.0) {
            let y = if flo.abs() < fhi.abs() { lo } else { hi };
            return Ok((y, it));
        }
    }
    Ok((0.5 * (lo + hi), MAX_ITER))
}

fn finite(y: f64, v: f64) -> Result<f64> {
    if v.is_nan() {
        Err(Error::NonFinite {
            what: "h",
            y,
            value: v,
        })
    } else {
        Ok(v)
    }
}

pub fn solve(req: &SolveRequest) -> Result<SolveResult> {
    check_parity(req.parity)?;
    check_positive("wave_number", req.wave_number)?;
    check_positive("aspect_ratio", req.aspect_ratio)?;
    let (parity, n, d) = (req.parity, req.wave_number, req.aspect_ratio);
    let h = |y: f64| finite(y, h_fn(parity, n, d, y)?);

    let (mut lo, mut hi) = if parity < 0 { (1e-6, 1.0 - 1e-9) } else { (1.0 + 1e-9, 2.0) };
    let (mut flo, mut fhi) = (h(lo)?, h(hi)?);
    let mut expansions = 0;
    while flo > 0.0 {
        if expansions == MAX_EXPANSIONS {
            return Err(Error::Bracket { expansions, lo, hi });
        }
        lo = if parity < 0 { 0.1 * lo } else { 1.0 + 0.1 * (lo - 1.0) };
        flo = h(lo)?;
        expansions += 1;
    }
    while fhi < 0.0 {
        if expansions == MAX_EXPANSIONS || (parity > 0 && hi >= ELECTRIC_CAP) {
            return Err(Error::Bracket { expansions, lo, hi });
        }
        if parity < 0 {
            hi = 1.0 - 0.1 * (1.0 - hi);
        } else {
            lo = hi;
            flo = fhi;
            hi *= 2.0;
        }
        fhi = h(hi)?;
        expansions += 1;
    }
    let (y, iterations) = if flo == 0.0 {
        (lo, 0)
    } else if fhi == 0.0 {
        (hi, 0)
    } else {
        refine(h, lo, flo, hi, fhi)?
    };
    let r = r_of_m(parity, n, d, y)?;
    let mu = 1.0 / y;
    Ok(SolveResult {
        mu,
        r,
        m_root: y,
        residual: h(y)?.abs(),
        iterations,
        params: HelicoidParams::new(mu, r, req.helicity)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub n: u32,
    pub mu: f64,
    pub r: f64,
    pub pitch: f64,
    pub wavelength: f64,
}

/// Solutions for wave numbers `1..=n_max` at fixed parity and aspect ratio.
pub fn series_table(parity: i32, d: f64, n_max: u32) -> Result<Vec<TableRow>> {
    if n_max < 1 {
        return Err(Error::domain("n_max", n_max as f64, "n_max must be at least 1"));
    }
    (1..=n_max)
        .map(|n| {
            let req = SolveRequest::new(Helicity::Left, parity, n as f64, d)?;
            let s = solve(&req)?;
            Ok(TableRow {
                n,
                mu: s.mu,
                r: s.r,
                pitch: invariants::pitch(s.mu, s.r),
                wavelength: invariants::wavelength(&s.params)?,
            })
        })
        .collect()
}
