//! Brute-force reference values for tests: adaptive Gauss–Kronrod quadrature
//! of the defining integrals, and bisection for their inverses.
//!
//! Nothing here shares code with `elliptic`; it integrates the Legendre
//! integrands directly.

// 7-point Gauss / 15-point Kronrod abscissae and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, abs_tol: f64, depth: u32) -> f64 {
    let (value, err) = gk15(f, a, b);
    if err <= abs_tol || depth == 0 {
        return value;
    }
    let mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * abs_tol, depth - 1) + adapt(f, mid, b, 0.5 * abs_tol, depth - 1)
}

/// Adaptive quadrature of `f` over `[a, b]` to relative tolerance `rel_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    // Coarse pass over 16 panels sets the absolute scale.
    let panels = 16;
    let h = (b - a) / panels as f64;
    let scale: f64 = (0..panels)
        .map(|i| gk15(&f, a + i as f64 * h, a + (i + 1) as f64 * h).0)
        .sum::<f64>()
        .abs()
        .max(f64::MIN_POSITIVE);
    let tol = rel_tol * scale / panels as f64;
    (0..panels)
        .map(|i| adapt(&f, a + i as f64 * h, a + (i + 1) as f64 * h, tol, 40))
        .sum()
}

const REL: f64 = 1e-15;

pub fn first_kind(phi: f64, m: f64) -> f64 {
    integrate(|t| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt(), 0.0, phi, REL)
}

pub fn second_kind(phi: f64, m: f64) -> f64 {
    integrate(|t| (1.0 - m * t.sin().powi(2)).sqrt(), 0.0, phi, REL)
}

pub fn third_kind(n: f64, phi: f64, m: f64) -> f64 {
    integrate(
        |t| {
            let s2 = t.sin().powi(2);
            1.0 / ((1.0 - n * s2) * (1.0 - m * s2).sqrt())
        },
        0.0,
        phi,
        REL,
    )
}

/// Inverse of `first_kind` in φ by bisection, `m ∈ [0, 1)`.
pub fn amplitude(u: f64, m: f64) -> f64 {
    if u < 0.0 {
        return -amplitude(-u, m);
    }
    // u·sqrt(1-m) ≤ am(u) ≤ u
    let mut lo = u * (1.0 - m).sqrt();
    let mut hi = u;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if first_kind(mid, m) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
