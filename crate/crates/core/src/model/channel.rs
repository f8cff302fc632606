use std::fmt;
use std::str::FromStr;

use super::{DerivedParams, ModelError};

/// Successive interference cancellation quality at the near node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SicMode {
    /// Ideal cancellation, no residual interference (ϖ = 0).
    Isic,
    /// Imperfect cancellation leaving residual interference (ϖ = 1).
    Nisic,
}

impl SicMode {
    /// The conversion coefficient ϖ.
    pub fn residual_weight(self) -> f64 {
        match self {
            SicMode::Isic => 0.0,
            SicMode::Nisic => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChannelCondition {
    Los,
    /// Rayleigh-faded link; modelled for the far node only.
    Nlos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Near,
    Far,
}

macro_rules! text_enum {
    ($ty:ty, $kind:literal, $($variant:path => $text:literal),+) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($variant => $text),+ })
            }
        }

        impl FromStr for $ty {
            type Err = ModelError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.to_ascii_lowercase().as_str() {
                    $($text => Ok($variant),)+
                    _ => Err(ModelError::UnknownVariant { kind: $kind, value: s.to_string() }),
                }
            }
        }
    };
}

text_enum!(SicMode, "SIC mode", SicMode::Isic => "isic", SicMode::Nisic => "nisic");
text_enum!(ChannelCondition, "channel condition", ChannelCondition::Los => "los", ChannelCondition::Nlos => "nlos");
text_enum!(Node, "node", Node::Near => "n", Node::Far => "f");

/// CDF of the squared distance to the origin of a point uniform in a disk
/// of radius `radius`: `0` below zero, `y/R²` on `[0, R²)`, `1` above.
pub fn cdf_squared_distance(y: f64, radius: f64) -> Result<f64, ModelError> {
    if !(radius > 0.0) {
        return Err(ModelError::NonPositiveRadius(radius));
    }
    let r2 = radius * radius;
    Ok(if y < 0.0 {
        0.0
    } else if y < r2 {
        y / r2
    } else {
        1.0
    })
}

/// Free-space gain `η / (r² + d²)` from the antenna at height `d` to a
/// ground node at squared horizontal distance `r_sq`.
pub fn channel_power_los(r_sq: f64, height: f64, eta: f64) -> f64 {
    eta / (r_sq + height * height)
}

/// SINR at the near node while decoding the far node's stream, treating its
/// own stream as interference. Both streams reach the near node through the
/// same channel, so only its own gain enters.
pub fn sinr_n_to_f(gain_n: f64, p: &DerivedParams) -> f64 {
    let s = p.rho * gain_n;
    s * p.a_f / (s * p.a_n + 1.0)
}

/// SINR at the near node for its own stream after SIC. `residual_power` is
/// `|h_I|²` and is ignored under ideal SIC.
pub fn sinr_n(gain_n: f64, residual_power: f64, mode: SicMode, p: &DerivedParams) -> f64 {
    p.rho * gain_n * p.a_n / (mode.residual_weight() * p.rho * residual_power + 1.0)
}

/// SINR at the far node, which decodes directly with the near node's
/// stream as interference. Bounded above by `a_f / a_n`.
pub fn sinr_f(gain_f: f64, p: &DerivedParams) -> f64 {
    let s = p.rho * gain_f;
    s * p.a_f / (s * p.a_n + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{derive, NetworkConfig};
    use proptest::prelude::*;

    fn params(rho_db: f64) -> DerivedParams {
        derive(&NetworkConfig::default(), rho_db).unwrap()
    }

    #[test]
    fn squared_distance_cdf() {
        let r = 6.0;
        assert_eq!(cdf_squared_distance(18.0, r).unwrap(), 0.5);
        assert_eq!(cdf_squared_distance(-1.0, r).unwrap(), 0.0);
        assert_eq!(cdf_squared_distance(72.0, r).unwrap(), 1.0);
        assert!(matches!(
            cdf_squared_distance(1.0, 0.0),
            Err(ModelError::NonPositiveRadius(_))
        ));
    }

    #[test]
    fn los_gain() {
        let eta = params(0.0).eta;
        assert_eq!(channel_power_los(0.0, 5.0, eta), eta / 25.0);
        assert!((channel_power_los(75.0, 5.0, eta) - 5.691_433_657_143_45e-6).abs() < 1e-18);
        assert!(channel_power_los(100.0, 5.0, eta) < channel_power_los(50.0, 5.0, eta));
    }

    #[test]
    fn sinr_limits() {
        let p = params(30.0);
        assert_eq!(sinr_f(0.0, &p), 0.0);
        assert_eq!(sinr_n_to_f(0.0, &p), 0.0);
        let huge = params(300.0);
        assert!((sinr_f(1.0, &huge) - 7.0 / 3.0).abs() < 1e-12);
        assert!((sinr_n_to_f(1.0, &huge) - 7.0 / 3.0).abs() < 1e-12);
        let g = 1e-5;
        assert_eq!(sinr_n(g, 0.4, SicMode::Isic, &p), p.rho * g * 0.3);
        assert_eq!(
            sinr_n(g, 0.0, SicMode::Nisic, &p),
            sinr_n(g, 0.0, SicMode::Isic, &p)
        );
        let v = sinr_n(g, 0.02, SicMode::Nisic, &huge);
        assert!((v - g * 0.3 / 0.02).abs() < 1e-12 * v);
    }

    #[test]
    fn n_to_f_by_hand() {
        let p = params(50.0);
        let g = p.eta / 25.0;
        let by_hand = 1e5 * g * 0.7 / (1e5 * g * 0.3 + 1.0);
        assert!((sinr_n_to_f(g, &p) - by_hand).abs() < 1e-14);
    }

    #[test]
    fn enum_text_round_trip() {
        for m in [SicMode::Isic, SicMode::Nisic] {
            assert_eq!(m.to_string().parse::<SicMode>().unwrap(), m);
        }
        assert_eq!(
            "NLoS".parse::<ChannelCondition>().unwrap(),
            ChannelCondition::Nlos
        );
        assert_eq!("f".parse::<Node>().unwrap(), Node::Far);
        assert!("x".parse::<Node>().is_err());
    }

    proptest! {
        #[test]
        fn far_sinr_below_ceiling(rho_db in -20.0f64..120.0, r_sq in 0.0f64..900.0) {
            let p = params(rho_db);
            let g = channel_power_los(r_sq, 5.0, p.eta);
            prop_assert!(sinr_f(g, &p) < p.a_f / p.a_n);
        }

        #[test]
        fn ideal_sic_dominates(rho_db in -20.0f64..100.0, r_sq in 0.0f64..36.0, x in 1e-9f64..10.0) {
            let p = params(rho_db);
            let g = channel_power_los(r_sq, 5.0, p.eta);
            prop_assert!(sinr_n(g, x, SicMode::Isic, &p) >= sinr_n(g, x, SicMode::Nisic, &p));
        }

        #[test]
        fn cdf_nondecreasing(y1 in -10.0f64..100.0, dy in 0.0f64..50.0, r in 0.5f64..10.0) {
            prop_assert!(cdf_squared_distance(y1, r).unwrap() <= cdf_squared_distance(y1 + dy, r).unwrap());
        }
    }
}
