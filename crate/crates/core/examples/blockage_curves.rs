//! Closed-form blockage probabilities for both nodes across transmit SNR,
//! with the high-SNR asymptotes alongside.

use std::error::Error;

use pass_noma::analytic;
use pass_noma::model::{derive, ChannelCondition, NetworkConfig, SicMode};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    };
    println!("rho_dB   n-ISIC    n-NISIC   f-LoS     f-NLoS    floor(NISIC)  asym(f-NLoS)");
    for db in (40..=80).step_by(4).map(f64::from) {
        let p = derive(&cfg, db)?;
        let n_isic = analytic::blockage_n(&p, &cfg, SicMode::Isic)?;
        let n_nisic = analytic::blockage_n(&p, &cfg, SicMode::Nisic)?;
        let f_los = analytic::blockage_f(&p, &cfg, ChannelCondition::Los)?;
        let f_nlos = analytic::blockage_f(&p, &cfg, ChannelCondition::Nlos)?;
        println!(
            "{db:>5}   {:.6}  {:.6}  {:.6}  {:.6}  {:.6}      {:.6}",
            n_isic.probability,
            n_nisic.probability,
            f_los.probability,
            f_nlos.probability,
            analytic::asym_blockage_n_nisic(&p, &cfg)?,
            analytic::asym_blockage_f_nlos(&p, &cfg)?.min(1.0),
        );
    }
    let p = derive(&cfg, 55.0)?;
    println!(
        "branch at 55 dB: n-ISIC {:?}, f-LoS {:?}",
        analytic::blockage_n_isic(&p, &cfg)?.branch,
        analytic::blockage_f_los(&p, &cfg)?.branch
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
