#![allow(dead_code, clippy::excessive_precision)]

pub mod ei_table;

use std::f64::consts::LN_2;

use pass_noma::model::{DerivedParams, NetworkConfig};

/// Reference deployment with the residual and NLoS powers used throughout
/// the validation runs.
pub fn table1() -> NetworkConfig {
    NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    }
}

// Gauss–Kronrod 7/15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let pair = f(c - h * XGK[j]) + f(c + h * XGK[j]);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let (value, err) = gk15(f, a, b);
    if err <= tol || depth == 0 || (b - a).abs() < 1e-300 {
        return value;
    }
    let m = 0.5 * (a + b);
    adapt(f, a, m, tol / 2.0, depth - 1) + adapt(f, m, b, tol / 2.0, depth - 1)
}

/// Adaptive Gauss–Kronrod over consecutive breakpoints.
pub fn integrate<F: Fn(f64) -> f64>(f: F, breaks: &[f64], tol: f64) -> f64 {
    breaks
        .windows(2)
        .map(|w| adapt(&f, w[0], w[1], tol, 60))
        .sum()
}

/// `0`, then `top·10^{-j}` for `j = depth..1`, then `top`: resolves
/// boundary layers at the lower end.
pub fn geometric_breaks(top: f64, depth: i32) -> Vec<f64> {
    let mut v = vec![0.0];
    v.extend((1..=depth).rev().map(|j| top * 10f64.powi(-j)));
    v.push(top);
    v
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Far-node NLoS rate as the integral over the SINR axis of
/// `P(γ_f > x)/(1 + x)`, with the survival function in closed form.
pub fn nlos_rate_integral(p: &DerivedParams, cfg: &NetworkConfig) -> f64 {
    let d2 = cfg.height_m.powi(2);
    let r2 = cfg.radius_f_m.powi(2);
    let top = p.a_f / p.a_n;
    let survival = |x: f64| {
        if x <= 0.0 {
            return 1.0;
        }
        let k = cfg.omega_f * p.rho * p.eta * (p.a_f / x - p.a_n);
        if k <= 0.0 {
            return 0.0;
        }
        k / r2 * (-d2 / k).exp() * -(-r2 / k).exp_m1()
    };
    integrate(
        |x| survival(x) / (1.0 + x),
        &geometric_breaks(top, 14),
        1e-16,
    ) / LN_2
}
