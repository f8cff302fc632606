//! The library path behind `pass-noma sweep` followed by `pass-noma compare`:
//! build a sweep, run both engines, write CSV, reload it and score it.

use std::error::Error;

use pass_noma::model::NetworkConfig;
use pass_noma::runner::{compare_report, run_sweep, Dataset, Engine, MetricSpec, SweepSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let metrics = [
        "blockage_n:nisic",
        "blockage_f:nlos",
        "rate_n:isic",
        "rate_f:los",
    ]
    .iter()
    .map(|m| MetricSpec::parse(m, Engine::Both))
    .collect::<Result<Vec<_>, _>>()?;
    let spec = SweepSpec {
        mc_trials: 50_000,
        seed: 9,
        ..SweepSpec::new(metrics)
    }
    .with_grid(40.0, 60.0, 5.0);
    let cfg = NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    };

    let ds = run_sweep(&spec, &cfg)?;
    let path = std::env::temp_dir().join("pass_noma_sweep_and_compare.csv");
    ds.save(&path)?;
    println!("wrote {} rows to {}", ds.rows.len(), path.display());

    let report = compare_report(&Dataset::load(&path)?);
    println!("{report}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
