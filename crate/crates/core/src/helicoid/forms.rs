use std::f64::consts::{PI, SQRT_2};

use super::{jacobi, Helicoid, Point3};
use crate::error::{Error, Result};

/// Minimum distance in `u` from a cusp for finite-difference curvature.
pub const SINGULAR_GUARD: f64 = 0.05;

/// Coefficients of the first (`g`) and second (`h`) fundamental forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
    pub h11: f64,
    pub h12: f64,
    pub h22: f64,
}

impl FundamentalForms {
    pub fn det_g(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }

    pub fn det_h(&self) -> f64 {
        self.h11 * self.h22 - self.h12 * self.h12
    }

    pub fn gauss_curvature(&self) -> f64 {
        self.det_h() / self.det_g()
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.g11, self.g12, self.g22, self.h11, self.h12, self.h22]
    }

    /// Largest absolute coefficient difference.
    pub fn max_deviation(&self, other: &FundamentalForms) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }
}

/// Result of a finite-difference evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FdForms {
    Regular(FundamentalForms),
    /// The tangent plane degenerates; only the metric is reported.
    Singular { g11: f64, g12: f64, g22: f64 },
}

impl FdForms {
    pub fn regular(self) -> Option<FundamentalForms> {
        match self {
            FdForms::Regular(f) => Some(f),
            FdForms::Singular { .. } => None,
        }
    }
}

fn add(a: Point3, b: Point3) -> Point3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn dot(a: Point3, b: Point3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Point3, b: Point3) -> Point3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn scale(a: Point3, s: f64) -> Point3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

impl Helicoid {
    /// Closed-form coefficients in the `(u, v)` coordinates of `surface_point`.
    pub fn closed_forms(&self, u: f64) -> FundamentalForms {
        let (m, sh) = (self.m, self.sh);
        let (s, _, d) = jacobi(u, m);
        let c2r = (2.0 * self.params.r).cosh();
        let big_d = -1.0 + 2.0 * m + c2r;
        let pi2 = PI * PI;
        FundamentalForms {
            g11: m * s * s + sh * sh,
            g12: -SQRT_2 * PI * (2.0 * self.params.r).sinh() / big_d.sqrt(),
            g22: 4.0 * pi2 * (1.0 + c2r - 2.0 * m * s * s) / big_d,
            h11: -m.sqrt() * d * s,
            h12: 0.0,
            h22: 8.0 * pi2 * m.sqrt() * d * s / big_d,
        }
    }

    /// Gauss curvature from the closed-form coefficients.
    pub fn closed_gauss_curvature(&self, u: f64) -> f64 {
        self.closed_forms(u).gauss_curvature()
    }

    /// Fourth-order central-difference forms with the normal `∂u × ∂v`.
    fn fd_raw(&self, u: f64, v: f64, h: f64) -> (FundamentalForms, f64) {
        // weights of f(x + kh), k = -2..=2
        const D1: [f64; 5] = [1.0, -8.0, 0.0, 8.0, -1.0];
        const D2: [f64; 5] = [-1.0, 16.0, -30.0, 16.0, -1.0];
        let f = |a, b| self.surface_point(a, b);
        let comb = |w: &[f64; 5], g: &dyn Fn(f64) -> Point3, denom: f64| {
            let mut acc = [0.0; 3];
            for (i, wi) in w.iter().enumerate() {
                if *wi != 0.0 {
                    acc = add(acc, scale(g((i as f64 - 2.0) * h), *wi));
                }
            }
            scale(acc, 1.0 / denom)
        };
        let fu = comb(&D1, &|d| f(u + d, v), 12.0 * h);
        let fv = comb(&D1, &|d| f(u, v + d), 12.0 * h);
        let fuu = comb(&D2, &|d| f(u + d, v), 12.0 * h * h);
        let fvv = comb(&D2, &|d| f(u, v + d), 12.0 * h * h);
        let fuv = comb(&D1, &|d| comb(&D1, &|e| f(u + d, v + e), 12.0 * h), 12.0 * h);
        let n = cross(fu, fv);
        let norm = dot(n, n).sqrt();
        let n = scale(n, 1.0 / norm);
        let forms = FundamentalForms {
            g11: dot(fu, fu),
            g12: dot(fu, fv),
            g22: dot(fv, fv),
            h11: dot(fuu, n),
            h12: dot(fuv, n),
            h22: dot(fvv, n),
        };
        (forms, norm)
    }

    /// Orientation of the front normal relative to `∂u × ∂v` at `u`.
    ///
    /// `∂u` reverses at every cusp, so `∂u × ∂v` flips once per cusp crossed;
    /// the overall sign is calibrated once against the closed-form `h11` at
    /// the regular parameter midway between the first two cusps.
    fn normal_sign(&self, u: f64) -> f64 {
        let uc = self.calibration_u();
        let (fd, _) = self.fd_raw(uc, 0.0, 1e-3);
        let base = if fd.h11 * self.closed_forms(uc).h11 < 0.0 { -1.0 } else { 1.0 };
        let crossings = (u / self.cusp_spacing()).floor() as i64;
        if crossings.rem_euclid(2) == 0 {
            base
        } else {
            -base
        }
    }

    /// Fundamental forms from fourth-order central differences of `surface_point`.
    ///
    /// Reports [`FdForms::Singular`] when the tangents are numerically
    /// dependent (`|∂u × ∂v| < 1e-10` or a Gram eigenvalue ratio below `100h²`).
    pub fn fd_forms(&self, u: f64, v: f64, h: f64) -> Result<FdForms> {
        if !(h > 0.0) {
            return Err(Error::domain("h", h, "step must be positive"));
        }
        let (mut forms, norm) = self.fd_raw(u, v, h);
        let (g11, g12, g22) = (forms.g11, forms.g12, forms.g22);
        let tr = g11 + g22;
        let det = forms.det_g().max(0.0);
        let disc = (0.25 * tr * tr - det).max(0.0).sqrt();
        let (lmax, lmin) = (0.5 * tr + disc, det / (0.5 * tr + disc));
        if !(norm >= 1e-10) || lmin < 1e4 * h.powi(4) * lmax {
            return Ok(FdForms::Singular { g11, g12, g22 });
        }
        let s = self.normal_sign(u);
        forms.h11 *= s;
        forms.h12 *= s;
        forms.h22 *= s;
        Ok(FdForms::Regular(forms))
    }

    /// Finite-difference Gauss curvature; refuses parameters within
    /// [`SINGULAR_GUARD`] of a cusp.
    pub fn gauss_curvature(&self, u: f64, v: f64, h: f64) -> Result<f64> {
        let distance = self.singular_distance(u);
        if distance <= SINGULAR_GUARD {
            return Err(Error::UnreliableEstimate { u, distance });
        }
        match self.fd_forms(u, v, h)? {
            FdForms::Regular(f) => Ok(f.gauss_curvature()),
            FdForms::Singular { .. } => Err(Error::UnreliableEstimate { u, distance }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Helicity, HelicoidParams};
    use super::*;

    #[test]
    fn closed_forms_at_origin_and_quarter_period() {
        let hc = Helicoid::new(HelicoidParams::new(2.0, 0.3, Helicity::Left).unwrap()).unwrap();
        let f = hc.closed_forms(0.0);
        assert!((f.g11 - 0.3f64.sinh().powi(2)).abs() < 1e-15);
        assert_eq!(f.h11, 0.0);
        let m = hc.m();
        let f = hc.closed_forms(0.5 * hc.period());
        assert!((f.g11 - (m + 0.3f64.sinh().powi(2))).abs() < 1e-14);
        assert!((f.h11 + (m * (1.0 - m)).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn cusp_is_singular() {
        let hc = Helicoid::new(HelicoidParams::new(2.0, 0.3, Helicity::Left).unwrap()).unwrap();
        assert!(matches!(hc.fd_forms(0.0, 0.2, 1e-4).unwrap(), FdForms::Singular { .. }));
        assert!(matches!(hc.fd_forms(0.7, 0.2, 1e-4).unwrap(), FdForms::Regular(_)));
        assert!(hc.gauss_curvature(0.01, 0.0, 1e-4).is_err());
    }
}
