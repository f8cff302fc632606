use std::f64::consts::TAU;

use rand::Rng;

/// Uniform point in a disk of radius `radius` via `r = R√u`, `θ = 2πv`.
pub fn sample_disk<R: Rng + ?Sized>(radius: f64, rng: &mut R) -> (f64, f64) {
    let r = radius * rng.random::<f64>().sqrt();
    let (sin, cos) = (TAU * rng.random::<f64>()).sin_cos();
    (r * cos, r * sin)
}

/// Exponential variate with mean `omega`: the power of a `CN(0, Ω)` tap.
pub fn sample_exp_power<R: Rng + ?Sized>(omega: f64, rng: &mut R) -> f64 {
    -omega * (-rng.random::<f64>()).ln_1p()
}

/// One realisation of everything random in the downlink.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialDraw {
    pub pos_n: (f64, f64),
    pub pos_f: (f64, f64),
    /// `|h_I|²`, mean `Ω_I`.
    pub residual_power: f64,
    /// `|h̃_f|²`, mean `Ω_f`.
    pub nlos_power_f: f64,
}

impl TrialDraw {
    pub fn sample<R: Rng + ?Sized>(
        radius_n: f64,
        radius_f: f64,
        omega_i: f64,
        omega_f: f64,
        rng: &mut R,
    ) -> Self {
        TrialDraw {
            pos_n: sample_disk(radius_n, rng),
            pos_f: sample_disk(radius_f, rng),
            residual_power: sample_exp_power(omega_i, rng),
            nlos_power_f: sample_exp_power(omega_f, rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_xoshiro::Xoshiro256PlusPlus;

    #[test]
    fn disk_points_stay_inside() {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(3);
        for _ in 0..10_000 {
            let (x, y) = sample_disk(2.5, &mut rng);
            assert!(x * x + y * y <= 2.5 * 2.5);
        }
    }

    #[test]
    fn exponential_is_nonnegative() {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(4);
        assert!((0..10_000).all(|_| sample_exp_power(0.3, &mut rng) >= 0.0));
    }
}
