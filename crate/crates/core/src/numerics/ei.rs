use super::NumericsError;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Below this argument E1 uses the power series; above it the continued fraction.
const SERIES_LIMIT: f64 = 1.0;

const MAX_ITER: usize = 500;

/// Exponential integral `Ei(x) = -∫_{-x}^∞ e^{-t}/t dt` for `x < 0`.
///
/// Uses `Ei(x) = -E1(-x)`, with the convergent power series for `|x| <= 1`
/// and a modified-Lentz continued fraction otherwise. Relative error is
/// about 1e-15 over `[-700, -1e-12]`. For `x` below roughly `-745` the
/// result underflows to `-0.0`.
pub fn exp_integral_ei(x: f64) -> Result<f64, NumericsError> {
    if !(x < 0.0) {
        return Err(NumericsError::Domain(x));
    }
    if x == f64::NEG_INFINITY {
        return Ok(-0.0);
    }
    let z = -x;
    if z <= SERIES_LIMIT {
        Ok(-e1_series(z))
    } else {
        Ok(-(e1_continued_fraction(z) * (-z).exp()))
    }
}

/// `e^z · E1(z)` for `z > 0`, i.e. `-e^z · Ei(-z)`.
///
/// Bounded by `1/z` for large `z`, so products like `e^{s} Ei(-a)` can be
/// formed as `-e^{s-a} · scaled_e1(a)` without overflow.
pub(crate) fn scaled_e1(z: f64) -> f64 {
    debug_assert!(z > 0.0, "scaled_e1 needs a positive argument, got {z}");
    if z <= SERIES_LIMIT {
        z.exp() * e1_series(z)
    } else {
        e1_continued_fraction(z)
    }
}

// E1(z) = -γ - ln z - Σ_{k≥1} (-z)^k / (k·k!)
fn e1_series(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0; // (-z)^k / k!
    for k in 1..MAX_ITER {
        let kf = k as f64;
        power *= -z / kf;
        let term = power / kf;
        sum += term;
        if term.abs() < f64::EPSILON * sum.abs() * 0.25 {
            break;
        }
    }
    -EULER_GAMMA - z.ln() - sum
}

// Returns e^z E1(z) via the continued fraction
// E1(z) = e^{-z} · 1/(z+1- 1/(z+3- 4/(z+5- ...))).
fn e1_continued_fraction(z: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = z + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < f64::EPSILON {
            break;
        }
    }
    h
}
