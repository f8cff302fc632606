//! Ergodic rates of both nodes and their high-SNR limits. The far node is
//! interference limited, so both its LoS and NLoS rates saturate at
//! `log2(1 + a_f/a_n)`; the near node with ideal SIC keeps growing.

use std::error::Error;

use pass_noma::analytic;
use pass_noma::model::{derive, ChannelCondition, NetworkConfig, SicMode};
use pass_noma::numerics::{chebyshev_nodes, DEFAULT_QUADRATURE_ORDER};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    };
    let rule = chebyshev_nodes(DEFAULT_QUADRATURE_ORDER)?;

    println!("rho_dB  n-ISIC    n-ISIC-bound  n-NISIC    f-LoS     f-NLoS");
    for db in (30..=90).step_by(10).map(f64::from) {
        let p = derive(&cfg, db)?;
        println!(
            "{db:>5}  {:>8.4}  {:>8.4}      {:>9.6}  {:>8.5}  {:>8.5}",
            analytic::ergodic_rate_n(&p, &cfg, SicMode::Isic, &rule)?.rate,
            analytic::rate_upper_n_isic_asym(&p, &cfg)?,
            analytic::ergodic_rate_n(&p, &cfg, SicMode::Nisic, &rule)?.rate,
            analytic::ergodic_rate_f(&p, &cfg, ChannelCondition::Los, &rule)?.rate,
            analytic::ergodic_rate_f(&p, &cfg, ChannelCondition::Nlos, &rule)?.rate,
        );
    }
    println!(
        "far-node ceilings: LoS {:.6}, NLoS {:.6}",
        analytic::asym_rate_f(&cfg, ChannelCondition::Los, &rule)?,
        analytic::asym_rate_f(&cfg, ChannelCondition::Nlos, &rule)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
