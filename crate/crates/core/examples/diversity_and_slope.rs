//! Finite-difference diversity orders and rate slopes over sliding SNR
//! windows, showing where each curve settles into its asymptotic regime.

use std::error::Error;

use pass_noma::analytic::{self, DiversityEstimate};
use pass_noma::model::{derive, ChannelCondition, NetworkConfig, SicMode};
use pass_noma::numerics::chebyshev_nodes;

fn show(d: DiversityEstimate) -> String {
    match d {
        DiversityEstimate::Finite(v) => format!("{:>8.4}", v + 0.0),
        DiversityEstimate::TruncatedToZero => "     inf".into(),
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    };
    let rule = chebyshev_nodes(1000)?;
    let blk = |mode: Option<SicMode>, cond| {
        let cfg = cfg.clone();
        move |db: f64| {
            let p = derive(&cfg, db)?;
            Ok(match mode {
                Some(m) => analytic::blockage_n(&p, &cfg, m)?.probability,
                None => analytic::blockage_f(&p, &cfg, cond)?.probability,
            })
        }
    };

    println!("window      d(n-ISIC) d(n-NISIC) d(f-LoS) d(f-NLoS)  s(n-ISIC) s(f-NLoS)");
    for lo in (40..=90).step_by(10).map(f64::from) {
        let w = (lo, lo + 10.0);
        let slope_n = analytic::high_snr_slope(
            |db| Ok(analytic::ergodic_rate_n_isic(&derive(&cfg, db)?, &cfg)?.rate),
            w,
        )?;
        let slope_f = analytic::high_snr_slope(
            |db| Ok(analytic::ergodic_rate_f_nlos(&derive(&cfg, db)?, &cfg, &rule)?.rate),
            w,
        )?;
        println!(
            "[{lo:>3},{:>3}]  {} {}  {} {}  {slope_n:>9.4} {slope_f:>9.5}",
            lo + 10.0,
            show(analytic::diversity_gain_numeric(
                blk(Some(SicMode::Isic), ChannelCondition::Los),
                w
            )?),
            show(analytic::diversity_gain_numeric(
                blk(Some(SicMode::Nisic), ChannelCondition::Los),
                w
            )?),
            show(analytic::diversity_gain_numeric(
                blk(None, ChannelCondition::Los),
                w
            )?),
            show(analytic::diversity_gain_numeric(
                blk(None, ChannelCondition::Nlos),
                w
            )?),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
