//! Delay-constrained and latency-tolerant system throughput for every
//! SIC / far-node channel combination, closed form next to simulation.

use std::error::Error;

use pass_noma::analytic;
use pass_noma::model::{derive, ChannelCondition, NetworkConfig, SicMode};
use pass_noma::numerics::chebyshev_nodes;
use pass_noma::simulator::{mc_throughput_delay_constrained, mc_throughput_latency_tolerant};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    };
    let rule = chebyshev_nodes(1000)?;
    let trials = 50_000;

    for (mode, cond) in [
        (SicMode::Isic, ChannelCondition::Los),
        (SicMode::Isic, ChannelCondition::Nlos),
        (SicMode::Nisic, ChannelCondition::Los),
        (SicMode::Nisic, ChannelCondition::Nlos),
    ] {
        println!("{mode}/{cond}");
        for db in [40.0, 55.0, 70.0] {
            let p = derive(&cfg, db)?;
            let dc = analytic::throughput_delay_constrained(&p, &cfg, mode, cond)?;
            let lt = analytic::throughput_latency_tolerant(&p, &cfg, mode, cond, &rule)?;
            let dc_mc = mc_throughput_delay_constrained(&cfg, db, mode, cond, trials, 3)?;
            let lt_mc = mc_throughput_latency_tolerant(&cfg, db, mode, cond, trials, 3)?;
            println!(
                "  {db:>4} dB  delay-constrained {dc:.4} (MC {:.4})  latency-tolerant {lt:.4} (MC {:.4})",
                dc_mc.mean, lt_mc.mean
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
