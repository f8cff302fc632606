//! NOMA against the orthogonal benchmark under both resource conventions.

use std::error::Error;

use pass_noma::analytic;
use pass_noma::model::{derive, ChannelCondition, NetworkConfig, SicMode};
use pass_noma::numerics::chebyshev_nodes;
use pass_noma::simulator::{mc_oma_system, OmaScheme};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    };
    let rule = chebyshev_nodes(1000)?;
    let trials = 100_000;

    println!("rho_dB  NOMA sum  OMA(tdma-half)  OMA(full-resource)");
    for db in (20..=80).step_by(10).map(f64::from) {
        let p = derive(&cfg, db)?;
        let noma = analytic::throughput_latency_tolerant(
            &p,
            &cfg,
            SicMode::Isic,
            ChannelCondition::Los,
            &rule,
        )?;
        let half = mc_oma_system(
            &cfg,
            db,
            ChannelCondition::Los,
            OmaScheme::TdmaHalf,
            trials,
            11,
        )?;
        let full = mc_oma_system(
            &cfg,
            db,
            ChannelCondition::Los,
            OmaScheme::FullResource,
            trials,
            11,
        )?;
        println!(
            "{db:>5}  {noma:>8.4}  {:>14.4}  {:>18.4}",
            half.sum_rate.mean, full.sum_rate.mean
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
