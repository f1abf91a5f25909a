//! Real Jacobi elliptic functions and Legendre elliptic integrals.
//!
//! Everything here uses the Jacobi *parameter* `m = k²`. The integrals are
//! evaluated through Carlson's symmetric forms (duplication theorem), the
//! complete integrals K and E through the arithmetic-geometric mean, and the
//! amplitude through the descending Landen (AGM) recursion.
//!
//! All functions are extended to every real argument by quasi-periodicity:
//!
//! ```text
//! F(φ + π, m) = F(φ, m) + 2K(m)
//! E(φ + π, m) = E(φ, m) + 2E(m)
//! am(u + 2K, m) = am(u, m) + π
//! ```
//!
//! Parameters outside `(0, 1)` are supported where the rest of the crate needs
//! them: `m > 1` for sn/cn/dn and am through the reciprocal-parameter
//! transformation, `m < 0` through the negative-parameter transformation, and
//! `m = 0`, `m = 1` through the trigonometric/hyperbolic closed forms.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Relative agreement at which the AGM and duplication iterations stop.
const ITER_TOL: f64 = 1e-15;
const MAX_ITER: usize = 64;

/// Error parameter `r` of Carlson's termination test.
const CARLSON_R: f64 = 1e-16;

fn max_abs_dev(a: f64, xs: &[f64]) -> f64 {
    xs.iter().fold(0.0_f64, |acc, &x| acc.max((a - x).abs()))
}

/// Carlson's RF(x, y, z). At most one argument may be zero.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + z) / 3.0;
    let mut a = a0;
    let q = (3.0 * CARLSON_R).powf(-1.0 / 6.0) * max_abs_dev(a0, &[x, y, z]);
    let (x0, y0) = (x, y);
    let mut pow4 = 1.0;
    for _ in 0..MAX_ITER {
        if pow4 * q < a.abs() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        pow4 *= 0.25;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = -(xx + yy);
    let e2 = xx * yy - zz * zz;
    let e3 = xx * yy * zz;
    (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt()
}

/// Carlson's RD(x, y, z) = RJ(x, y, z, z).
pub fn carlson_rd(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + 3.0 * z) / 5.0;
    let mut a = a0;
    let q = (0.25 * CARLSON_R).powf(-1.0 / 6.0) * max_abs_dev(a0, &[x, y, z]);
    let (x0, y0) = (x, y);
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    for _ in 0..MAX_ITER {
        if pow4 * q < a.abs() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        sum += pow4 / (sz * (z + lambda));
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        pow4 *= 0.25;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = -(xx + yy) / 3.0;
    let xy = xx * yy;
    let z2 = zz * zz;
    let e2 = xy - 6.0 * z2;
    let e3 = (3.0 * xy - 8.0 * z2) * zz;
    let e4 = 3.0 * (xy - z2) * z2;
    let e5 = xy * z2 * zz;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    pow4 * series / (a * a.sqrt()) + 3.0 * sum
}

/// RC(1, 1 + e) for e > -1, with a series near e = 0.
fn rc_one_plus(e: f64) -> f64 {
    if e.abs() < 1e-3 {
        // 1 - e/3 + e²/5 - e³/7 + ...
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 0..8 {
            sum += term / (2 * k + 1) as f64;
            term *= -e;
        }
        sum
    } else if e > 0.0 {
        let s = e.sqrt();
        s.atan() / s
    } else {
        let s = (-e).sqrt();
        s.atanh() / s
    }
}

/// Carlson's RJ(x, y, z, p) for p > 0.
pub fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> f64 {
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let a0 = (x + y + z + 2.0 * p) / 5.0;
    let mut a = a0;
    let delta = (p - x) * (p - y) * (p - z);
    let q = (0.25 * CARLSON_R).powf(-1.0 / 6.0) * max_abs_dev(a0, &[x, y, z, p]);
    let (x0, y0, z0) = (x, y, z);
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    for _ in 0..MAX_ITER {
        if pow4 * q < a.abs() {
            break;
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = pow4 * pow4 * pow4 * delta / (d * d);
        sum += pow4 / d * rc_one_plus(e);
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        p = 0.25 * (p + lambda);
        a = 0.25 * (a + lambda);
        pow4 *= 0.25;
    }
    let xx = (a0 - x0) * pow4 / a;
    let yy = (a0 - y0) * pow4 / a;
    let zz = (a0 - z0) * pow4 / a;
    let pp = -(xx + yy + zz) / 2.0;
    let p2 = pp * pp;
    let e2 = xx * yy + xx * zz + yy * zz - 3.0 * p2;
    let e3 = xx * yy * zz + 2.0 * e2 * pp + 4.0 * p2 * pp;
    let e4 = (2.0 * xx * yy * zz + e2 * pp + 3.0 * p2 * pp) * pp;
    let e5 = xx * yy * zz * p2;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    pow4 * series / (a * a.sqrt()) + 6.0 * sum
}

fn check_below_one(m: f64) -> Result<()> {
    if m < 1.0 {
        Ok(())
    } else {
        Err(Error::domain("m", m, "m < 1"))
    }
}

fn check_characteristic(n: f64) -> Result<()> {
    if n < 1.0 {
        Ok(())
    } else {
        Err(Error::domain("n", n, "characteristic n < 1"))
    }
}

/// Complete integrals `(K(m), E(m))` by the arithmetic-geometric mean.
///
/// Accepts every `m < 1`; negative parameters are handled by the same
/// iteration since `b0 = sqrt(1 - m)` stays real.
pub fn complete_ke(m: f64) -> Result<(f64, f64)> {
    check_below_one(m)?;
    if m == 0.0 {
        return Ok((FRAC_PI_2, FRAC_PI_2));
    }
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    // c_0² = m; sum accumulates 2^(n-1) c_n²
    let mut c_sq = m;
    let mut sum = 0.5 * m;
    let mut weight = 0.5;
    for _ in 0..MAX_ITER {
        let a_next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = a_next;
        // c_{n+1} = c_n² / (4 a_{n+1}) avoids the a - b cancellation
        let c = c_sq / (4.0 * a);
        c_sq = c * c;
        weight *= 2.0;
        sum += weight * c_sq;
        if c.abs() <= ITER_TOL * a {
            break;
        }
    }
    let k = PI / (2.0 * a);
    Ok((k, k * (1.0 - sum)))
}

/// K(m) only.
pub fn complete_k(m: f64) -> Result<f64> {
    complete_ke(m).map(|(k, _)| k)
}

/// E(m) only.
pub fn complete_e(m: f64) -> Result<f64> {
    complete_ke(m).map(|(_, e)| e)
}

/// Splits `phi = j·π + rest` with `rest ∈ [-π/2, π/2]`.
fn reduce_angle(phi: f64) -> (f64, f64) {
    let j = (phi / PI).round();
    (j, phi - j * PI)
}

/// Incomplete integral of the first kind F(φ, m), any real φ.
pub fn incomplete_first(phi: f64, m: f64) -> Result<f64> {
    check_below_one(m)?;
    if m == 0.0 {
        return Ok(phi);
    }
    let (j, rest) = reduce_angle(phi);
    let (s, c) = rest.sin_cos();
    let base = s * carlson_rf(c * c, 1.0 - m * s * s, 1.0);
    if j == 0.0 {
        Ok(base)
    } else {
        Ok(2.0 * j * complete_k(m)? + base)
    }
}

/// Incomplete integral of the second kind E(φ, m), any real φ.
///
/// Also defined at `m = 1`, where `E(φ, 1) = sin φ` on `[-π/2, π/2]`.
pub fn incomplete_second(phi: f64, m: f64) -> Result<f64> {
    if m == 1.0 {
        let (j, rest) = reduce_angle(phi);
        return Ok(2.0 * j + rest.sin());
    }
    check_below_one(m)?;
    if m == 0.0 {
        return Ok(phi);
    }
    let (j, rest) = reduce_angle(phi);
    let (s, c) = rest.sin_cos();
    let base = second_kind_from_sncndn(s, c, (1.0 - m * s * s).sqrt(), m);
    if j == 0.0 {
        Ok(base)
    } else {
        Ok(2.0 * j * complete_e(m)? + base)
    }
}

/// Incomplete integral of the third kind Π(n, φ, m), `n < 1`, any real φ.
pub fn incomplete_third(n: f64, phi: f64, m: f64) -> Result<f64> {
    check_characteristic(n)?;
    check_below_one(m)?;
    if n == 0.0 {
        return incomplete_first(phi, m);
    }
    let (j, rest) = reduce_angle(phi);
    let (s, c) = rest.sin_cos();
    let base = third_kind_from_sncndn(n, s, c, (1.0 - m * s * s).sqrt());
    if j == 0.0 {
        Ok(base)
    } else {
        Ok(2.0 * j * complete_third(n, m)? + base)
    }
}

/// Complete integral of the third kind Π(n, m), `n < 1`.
pub fn complete_third(n: f64, m: f64) -> Result<f64> {
    check_characteristic(n)?;
    check_below_one(m)?;
    if n == 0.0 {
        return complete_k(m);
    }
    if m == 0.0 {
        return Ok(FRAC_PI_2 / (1.0 - n).sqrt());
    }
    let y = 1.0 - m;
    Ok(carlson_rf(0.0, y, 1.0) + n / 3.0 * carlson_rj(0.0, y, 1.0, 1.0 - n))
}

/// E(am) from sn, cn ≥ 0, dn of a reduced argument.
fn second_kind_from_sncndn(s: f64, c: f64, d: f64, m: f64) -> f64 {
    let (c2, d2) = (c * c, d * d);
    s * carlson_rf(c2, d2, 1.0) - m / 3.0 * s * s * s * carlson_rd(c2, d2, 1.0)
}

/// Π(n, am) from sn, cn ≥ 0, dn of a reduced argument.
fn third_kind_from_sncndn(n: f64, s: f64, c: f64, d: f64) -> f64 {
    let (c2, d2) = (c * c, d * d);
    s * carlson_rf(c2, d2, 1.0) + n / 3.0 * s * s * s * carlson_rj(c2, d2, 1.0, 1.0 - n * s * s)
}

/// Amplitude for `m ∈ (0, 1)` and `|u| ≤ K(m)` by descending Landen transformation.
fn landen_amplitude(u: f64, m: f64) -> f64 {
    let mut a = [0.0_f64; MAX_ITER];
    let mut c = [0.0_f64; MAX_ITER];
    a[0] = 1.0;
    c[0] = m.sqrt();
    let mut b = (1.0 - m).sqrt();
    let mut c_sq = m;
    let mut n = 0;
    while c[n].abs() > ITER_TOL * a[n] && n + 1 < MAX_ITER {
        let a_next = 0.5 * (a[n] + b);
        b = (a[n] * b).sqrt();
        n += 1;
        a[n] = a_next;
        c[n] = c_sq / (4.0 * a_next);
        c_sq = c[n] * c[n];
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for i in (1..=n).rev() {
        phi = 0.5 * (phi + (c[i] / a[i] * phi.sin()).asin());
    }
    phi
}

/// Quarter-period reduction for `m ∈ (0, 1)`: `u = 2jK + rest`, `|rest| ≤ K`.
fn reduce_argument(u: f64, k: f64) -> (f64, f64) {
    let j = (u / (2.0 * k)).round();
    (j, u - 2.0 * j * k)
}

/// Jacobi amplitude am(u, m).
///
/// Strictly increasing and odd for `m ≤ 1`; for `m > 1` it is the bounded
/// branch `arcsin(sn(u, m))` (cn stays positive there).
pub fn amplitude(u: f64, m: f64) -> Result<f64> {
    if m.is_nan() {
        return Err(Error::domain("m", m, "a real parameter"));
    }
    if m == 0.0 {
        return Ok(u);
    }
    if m == 1.0 {
        return Ok(u.sinh().atan());
    }
    if m > 1.0 {
        let (s, c, _) = sn_cn_dn(u, m)?;
        return Ok(s.atan2(c));
    }
    if m < 0.0 {
        // am(u, m) = atan2(sd(w u, m1)/w, cd(w u, m1)) with w = sqrt(1 - m)
        let m1 = m / (m - 1.0);
        let w = (1.0 - m).sqrt();
        let k1 = complete_k(m1)?;
        let (j, rest) = reduce_argument(u * w, k1);
        let phi = landen_amplitude(rest, m1);
        let (s, c) = phi.sin_cos();
        return Ok(j * PI + (s / w).atan2(c));
    }
    let k = complete_k(m)?;
    let (j, rest) = reduce_argument(u, k);
    Ok(j * PI + landen_amplitude(rest, m))
}

/// sn, cn, dn for `m ∈ (0, 1)`.
fn sn_cn_dn_unit(u: f64, m: f64) -> Result<(f64, f64, f64)> {
    let k = complete_k(m)?;
    let (j, rest) = reduce_argument(u, k);
    let (mut s, mut c) = landen_amplitude(rest, m).sin_cos();
    if j.rem_euclid(2.0) == 1.0 {
        s = -s;
        c = -c;
    }
    // dn² = cn² + (1 - m) sn², free of cancellation
    let d = (c * c + (1.0 - m) * s * s).sqrt();
    Ok((s, c, d))
}

/// Jacobi elliptic functions `(sn, cn, dn)` for any real parameter.
///
/// `m > 1` uses `sn(u,m) = sn(u√m, 1/m)/√m`, `cn(u,m) = dn(u√m, 1/m)`,
/// `dn(u,m) = cn(u√m, 1/m)`; `m < 0` uses the transformation to
/// `m/(m-1) ∈ (0, 1)`.
pub fn sn_cn_dn(u: f64, m: f64) -> Result<(f64, f64, f64)> {
    if m.is_nan() {
        return Err(Error::domain("m", m, "a real parameter"));
    }
    if m == 0.0 {
        let (s, c) = u.sin_cos();
        return Ok((s, c, 1.0));
    }
    if m == 1.0 {
        let sech = 1.0 / u.cosh();
        return Ok((u.tanh(), sech, sech));
    }
    if m > 1.0 {
        let k = m.sqrt();
        let (s, c, d) = sn_cn_dn(u * k, 1.0 / m)?;
        return Ok((s / k, d, c));
    }
    if m < 0.0 {
        let m1 = m / (m - 1.0);
        let w = (1.0 - m).sqrt();
        let (s, c, d) = sn_cn_dn_unit(u * w, m1)?;
        return Ok((s / (w * d), c / d, 1.0 / d));
    }
    sn_cn_dn_unit(u, m)
}

/// ε(u, m) = E(am(u, m), m) for every real u, `m < 1`.
pub fn epsilon_fn(u: f64, m: f64) -> Result<f64> {
    check_below_one(m)?;
    if m == 0.0 {
        return Ok(u);
    }
    let (k, e) = complete_ke(m)?;
    let (j, rest) = reduce_argument(u, k);
    let (s, c, d) = sn_cn_dn(rest, m)?;
    Ok(2.0 * j * e + second_kind_from_sncndn(s, c.max(0.0), d, m))
}

/// Π(n, am(u, m), m) for every real u, `n < 1`, `m < 1`.
pub fn pi_fn(n: f64, u: f64, m: f64) -> Result<f64> {
    check_characteristic(n)?;
    check_below_one(m)?;
    if n == 0.0 {
        // Π(0, am(u)) = F(am(u)) = u
        return Ok(u);
    }
    let k = complete_k(m)?;
    let (j, rest) = reduce_argument(u, k);
    let (s, c, d) = sn_cn_dn(rest, m)?;
    let base = third_kind_from_sncndn(n, s, c.max(0.0), d);
    if j == 0.0 {
        Ok(base)
    } else {
        Ok(2.0 * j * complete_third(n, m)? + base)
    }
}
