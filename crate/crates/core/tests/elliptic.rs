use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use pshelicoid::elliptic::*;
use pshelicoid::oracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

// Reference values below were computed at 30 digits with an independent
// arbitrary-precision library and rounded to f64.

#[test]
fn frozen_reference_values() {
    let (k, e) = complete_ke(0.5).unwrap();
    assert!(rel(k, 1.854_074_677_301_371_9) < 1e-14);
    assert!(rel(e, 1.350_643_881_047_675_5) < 1e-14);
    assert!(rel(incomplete_first(1.0, 0.5).unwrap(), 1.083_216_772_845_168_8) < 1e-14);
    assert!(rel(incomplete_second(1.0, 0.5).unwrap(), 0.927_329_883_624_440_1) < 1e-14);
    assert!(rel(incomplete_third(-0.7, 1.2, 0.3).unwrap(), 1.036_059_462_433_301) < 1e-14);
    assert!(rel(complete_third(-0.5, 0.5).unwrap(), 1.487_846_992_668_798_4) < 1e-14);
    assert!(rel(amplitude(2.0, 0.4).unwrap(), 1.743_694_929_075_742_7) < 1e-14);
    assert!(rel(epsilon_fn(5.0, 0.52).unwrap(), 3.707_422_708_763_845) < 1e-14);
    assert!(rel(pi_fn(-0.4, 3.7, 0.6).unwrap(), 3.035_472_525_332_035) < 1e-14);
    let (s, c, d) = sn_cn_dn(1.3, 2.5).unwrap();
    assert!(rel(s, 0.617_703_506_214_184_9) < 1e-13);
    assert!(rel(c, 0.786_411_074_699_932_3) < 1e-13);
    assert!(rel(d, -0.214_722_951_793_132_93) < 1e-13);
}

#[test]
fn quadrature_oracle_agrees_on_examples() {
    assert!(rel(complete_k(0.5).unwrap(), oracle::first_kind(FRAC_PI_2, 0.5)) < 1e-12);
    assert!(rel(complete_e(0.5).unwrap(), oracle::second_kind(FRAC_PI_2, 0.5)) < 1e-12);
    assert!(rel(incomplete_first(1.0, 0.5).unwrap(), oracle::first_kind(1.0, 0.5)) < 1e-12);
    assert!(rel(incomplete_second(1.0, 0.5).unwrap(), oracle::second_kind(1.0, 0.5)) < 1e-12);
    assert!(
        rel(
            incomplete_third(-0.7, 1.2, 0.3).unwrap(),
            oracle::third_kind(-0.7, 1.2, 0.3)
        ) < 1e-12
    );
    assert!(rel(complete_third(-0.5, 0.5).unwrap(), oracle::third_kind(-0.5, FRAC_PI_2, 0.5)) < 1e-12);
    assert!(rel(amplitude(2.0, 0.4).unwrap(), oracle::amplitude(2.0, 0.4)) < 1e-12);
    let am = oracle::amplitude(5.0, 0.52);
    assert!(rel(epsilon_fn(5.0, 0.52).unwrap(), oracle::second_kind(am, 0.52)) < 1e-12);
    let am = oracle::amplitude(3.7, 0.6);
    assert!(rel(pi_fn(-0.4, 3.7, 0.6).unwrap(), oracle::third_kind(-0.4, am, 0.6)) < 1e-12);
}

#[test]
fn randomized_grid_against_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let phi = rng.gen_range(-3.0 * PI..3.0 * PI);
        let m = rng.gen_range(0.0..0.95);
        let n = rng.gen_range(-4.0..0.9);
        assert!(rel(incomplete_first(phi, m).unwrap(), oracle::first_kind(phi, m)) < 1e-12);
        assert!(rel(incomplete_second(phi, m).unwrap(), oracle::second_kind(phi, m)) < 1e-12);
        assert!(rel(incomplete_third(n, phi, m).unwrap(), oracle::third_kind(n, phi, m)) < 1e-12);
    }
}

#[test]
fn reciprocal_parameter_reduction() {
    // the m > 1 branch is the composition of the m < 1 core
    let (u, m) = (1.3, 2.5);
    let (s, c, d) = sn_cn_dn(u, m).unwrap();
    let (s1, c1, d1) = sn_cn_dn(u * m.sqrt(), 1.0 / m).unwrap();
    assert_eq!(s, s1 / m.sqrt());
    assert_eq!(c, d1);
    assert_eq!(d, c1);
    assert!((s * s + c * c - 1.0).abs() < 1e-12);
    assert!((d * d + m * s * s - 1.0).abs() < 1e-12);
}

#[test]
fn modular_transformation_of_negative_parameter() {
    // cn(u, mu) = sn(sqrt(1-mu) u + K(mu'), mu'), sn(u, mu) = -cn(sqrt(1-mu) u + K(mu'), mu')
    for &mu in &[-0.3, -1.0, -2.5] {
        let mup = mu / (mu - 1.0);
        let kp = complete_k(mup).unwrap();
        assert!((kp - (1.0 - mu).sqrt() * complete_k(mu).unwrap()).abs() < 1e-12);
        for i in 0..20 {
            let u = -3.0 + 0.3 * i as f64;
            let (s, c, _) = sn_cn_dn(u, mu).unwrap();
            let (s2, c2, _) = sn_cn_dn((1.0 - mu).sqrt() * u + kp, mup).unwrap();
            assert!((c - s2).abs() < 1e-12, "cn mismatch at u = {u}");
            assert!((s + c2).abs() < 1e-12, "sn mismatch at u = {u}");
        }
    }
}

#[test]
fn legendre_relation() {
    for i in 1..100 {
        let m = i as f64 / 100.0;
        let (k, e) = complete_ke(m).unwrap();
        let (kc, ec) = complete_ke(1.0 - m).unwrap();
        assert!((e * kc + ec * k - k * kc - FRAC_PI_2).abs() < 1e-12, "m = {m}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pythagorean_identities(u in -10.0f64..10.0, k in 1usize..10) {
        let m = k as f64 / 10.0;
        let (s, c, d) = sn_cn_dn(u, m).unwrap();
        prop_assert!((s * s + c * c - 1.0).abs() < 1e-12);
        prop_assert!((d * d + m * s * s - 1.0).abs() < 1e-12);
        prop_assert!((s - amplitude(u, m).unwrap().sin()).abs() < 1e-12);
    }

    #[test]
    fn amplitude_inverts_first_kind(phi in -3.0 * PI..3.0 * PI, m in 0.01f64..0.99) {
        let u = incomplete_first(phi, m).unwrap();
        prop_assert!((amplitude(u, m).unwrap() - phi).abs() < 1e-10);
    }

    #[test]
    fn quasi_periodicity(phi in -6.0f64..6.0, u in -8.0f64..8.0, m in 0.01f64..0.95, n in -3.0f64..0.9) {
        let (k, e) = complete_ke(m).unwrap();
        let f = incomplete_first(phi + PI, m).unwrap() - incomplete_first(phi, m).unwrap();
        prop_assert!((f - 2.0 * k).abs() < 1e-11);
        let eps = epsilon_fn(u + 2.0 * k, m).unwrap() - epsilon_fn(u, m).unwrap();
        prop_assert!((eps - 2.0 * e).abs() < 1e-11);
        let pi = pi_fn(n, u + 2.0 * k, m).unwrap() - pi_fn(n, u, m).unwrap();
        prop_assert!((pi - 2.0 * complete_third(n, m).unwrap()).abs() < 1e-11);
        let am = amplitude(u + 2.0 * k, m).unwrap() - amplitude(u, m).unwrap();
        prop_assert!((am - PI).abs() < 1e-11);
    }

    #[test]
    fn odd_symmetry(x in 0.0f64..7.0, m in 0.0f64..0.95) {
        prop_assert_eq!(incomplete_first(-x, m).unwrap(), -incomplete_first(x, m).unwrap());
        prop_assert!((epsilon_fn(-x, m).unwrap() + epsilon_fn(x, m).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn complete_integrals_are_monotone(a in 0.0f64..0.98, b in 0.0f64..0.98) {
        prop_assume!(a < b);
        let (ka, ea) = complete_ke(a).unwrap();
        let (kb, eb) = complete_ke(b).unwrap();
        prop_assert!(ka < kb);
        prop_assert!(ea > eb);
    }
}
