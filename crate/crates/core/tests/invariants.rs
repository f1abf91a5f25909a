mod common;

use common::*;
use pshelicoid::helicoid::{Helicity, Helicoid, HelicoidParams};
use pshelicoid::invariants::*;
use pshelicoid::solver::{solve, SolveRequest};
use pshelicoid::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(mu: f64, r: f64) -> HelicoidParams {
    HelicoidParams::new(mu, r, Helicity::Left).unwrap()
}

fn solved(parity: i32, n: f64) -> HelicoidParams {
    solve(&SolveRequest::new(Helicity::Left, parity, n, GOLDEN).unwrap()).unwrap().params
}

#[test]
fn golden_series_rows() {
    let inv = invariants(&params(1.90951, 0.127237)).unwrap();
    assert_eq!(inv.parity, -1);
    assert!((inv.wave_number - 1.0).abs() < 1e-4);
    assert!((inv.aspect_ratio - 1.6180).abs() < 1e-3);
    let inv = invariants(&params(0.849115, 0.533287)).unwrap();
    assert_eq!(inv.parity, 1);
    assert!((inv.wave_number - 2.0).abs() < 1e-4);
    assert!((inv.aspect_ratio - GOLDEN).abs() < 1e-3);
}

#[test]
fn record_is_consistent() {
    for (mu, r) in [(1.3, 0.2), (4.0, 1.1), (0.3, 0.5), (0.9, 2.0)] {
        let inv = invariants(&params(mu, r)).unwrap();
        assert!(0.0 < inv.inner_radius && inv.inner_radius <= inv.outer_radius);
        assert_eq!(inv.wave_number, inv.pitch / inv.wavelength);
        assert_eq!(inv.aspect_ratio_inner, inv.wavelength / inv.inner_radius);
        assert_eq!(inv.aspect_ratio_outer, inv.wavelength / inv.outer_radius);
        let expected = if mu > 1.0 { inv.aspect_ratio_inner } else { inv.aspect_ratio_outer };
        assert_eq!(inv.aspect_ratio, expected);
    }
}

#[test]
fn wavelength_is_profile_translation() {
    for (mu, r) in [(1.90951, 0.127237), (0.770862, 0.289255), (3.0, 0.8), (0.5, 0.4)] {
        let hc = Helicoid::new(params(mu, r)).unwrap();
        let w = wavelength(hc.params()).unwrap();
        for u in [0.0, 0.37, -1.9, 4.2] {
            let a = hc.planar_profile(u);
            let b = hc.planar_profile(u + hc.period());
            assert!((b[0] - a[0]).abs() < 1e-12);
            // the profile advances by +w along the axis over one period
            assert!((b[2] - a[2] - w).abs() < 1e-9, "mu {mu} u {u}: {}", b[2] - a[2]);
        }
    }
}

#[test]
fn radii_match_numerical_extrema() {
    for (mu, r) in [(1.90951, 0.127237), (0.770862, 0.289255), (2.5, 0.7), (0.6, 1.2)] {
        let hc = Helicoid::new(params(mu, r)).unwrap();
        let inv = Invariants::of(&hc).unwrap();
        let (_, lo) = radius_extremum(&hc, false);
        let (_, hi) = radius_extremum(&hc, true);
        assert!((lo - inv.inner_radius).abs() < 1e-9);
        assert!((hi - inv.outer_radius).abs() < 1e-9);
        let (m, sh, ch) = (hc.m(), r.sinh(), r.cosh());
        let a = m + sh * sh;
        if mu > 1.0 {
            assert!((hi - m.sqrt() * ch / a).abs() < 1e-12);
        } else {
            assert!((lo - sh * (m - 1.0).sqrt() / a).abs() < 1e-12);
        }
    }
}

#[test]
fn profile_stays_within_radii() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for (mu, r) in [(1.90951, 0.127237), (0.770862, 0.289255)] {
        let hc = Helicoid::new(params(mu, r)).unwrap();
        let inv = Invariants::of(&hc).unwrap();
        for _ in 0..200 {
            let x = hc.profile_radius(rng.gen_range(-10.0..10.0));
            assert!(x >= inv.inner_radius - 1e-14 && x <= inv.outer_radius + 1e-14);
        }
    }
}

#[test]
fn cusp_windows() {
    let p = params(1.90951, 0.127237);
    let hc = Helicoid::new(p).unwrap();
    let c = cusps(&p, 0..2).unwrap();
    assert_eq!(c, vec![0.0, hc.period()]);
    assert_eq!(cusps(&p, 0..1).unwrap().len(), 1);
    let p = params(0.770862, 0.289255);
    let hc = Helicoid::new(p).unwrap();
    let c = cusps(&p, 0..1).unwrap();
    assert_eq!(c, vec![0.0, 0.5 * hc.period()]);
    assert_eq!(cusps(&p, -2..3).unwrap().len(), 10);
}

#[test]
fn cusps_have_vanishing_velocity() {
    for p in [params(1.90951, 0.127237), params(0.770862, 0.289255)] {
        let hc = Helicoid::new(p).unwrap();
        for u in cusps(&p, -1..2).unwrap() {
            let h = 1e-6;
            let a = hc.planar_profile(u + h);
            let b = hc.planar_profile(u - h);
            let speed = ((a[0] - b[0]).powi(2) + (a[2] - b[2]).powi(2)).sqrt() / (2.0 * h);
            assert!(speed < 1e-8);
        }
        // midway between cusps the profile is regular
        let u = hc.calibration_u();
        let a = hc.planar_profile(u + 1e-6);
        let b = hc.planar_profile(u - 1e-6);
        assert!(((a[0] - b[0]).powi(2) + (a[2] - b[2]).powi(2)).sqrt() / 2e-6 > 1e-3);
    }
}

#[test]
fn parity_matches_cusp_count() {
    for p in [params(1.90951, 0.127237), params(0.770862, 0.289255), params(5.0, 0.1), params(0.2, 2.0)] {
        let h = cusps(&p, 0..1).unwrap().len() as i32;
        assert_eq!((-1i32).pow(h as u32), invariants(&p).unwrap().parity);
    }
}

#[test]
fn singular_helices() {
    for n in 1..=3u64 {
        assert_eq!(singular_helix_count(&solved(-1, n as f64), 1e-9).unwrap(), n);
        assert_eq!(singular_helix_count(&solved(1, n as f64), 1e-9).unwrap(), 2 * n);
    }
    assert_eq!(singular_helix_count(&params(1.90951, 0.127237), 1e-4).unwrap(), 1);
    assert_eq!(singular_helix_count(&params(0.770862, 0.289255), 1e-4).unwrap(), 2);
    assert_eq!(singular_helix_count(&params(0.884453, 0.749346), 1e-4).unwrap(), 6);
    let e = singular_helix_count(&solved(-1, 2.5), 1e-6).unwrap_err();
    assert!(matches!(e, Error::NotTwistedColumn { .. }));
}

#[test]
fn spatial_classes() {
    for n in 1..=6 {
        for parity in [-1, 1] {
            let c = spatial_class(&solved(parity, n as f64), DEFAULT_CLASS_TOL, DEFAULT_MAX_DENOMINATOR)
                .unwrap();
            assert_eq!(c.kind, SpatialKind::TwistedColumn);
            assert_eq!(c.rational_approx, Some((n, 1)));
        }
    }
    let c = spatial_class(&solved(1, 2.5), 1e-9, 1000).unwrap();
    assert_eq!(c.kind, SpatialKind::ImmersedCylinder);
    assert_eq!(c.rational_approx, Some((5, 2)));
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..10 {
        let mu = if rng.gen_bool(0.5) { rng.gen_range(1.1..5.0) } else { rng.gen_range(0.1..0.9) };
        let p = params(mu, rng.gen_range(0.1..1.5));
        assert_eq!(spatial_class(&p, 1e-9, 1000).unwrap().kind, SpatialKind::DenseInShell);
        assert_eq!(spatial_class(&p, f64::INFINITY, 1000).unwrap().kind, SpatialKind::TwistedColumn);
    }
}
