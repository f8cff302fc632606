//! Turn a deployment description into the quantities every closed form is
//! built from: path-loss constant, transmit SNR, SINR thresholds and the
//! coverage constants `C_n`, `C_f`.

use std::error::Error;

use pass_noma::model::{derive, NetworkConfig};

const DEPLOYMENT: &str = "
# 28 GHz carrier, wider cell, stricter far-node target
fc_hz = 28e9
R_D_m = 20
R_n_m = 12
R_f_m = 20
rate_f_bpcu = 0.5
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let defaults = NetworkConfig::default();
    let custom = NetworkConfig::parse(DEPLOYMENT)?;

    for (name, cfg) in [("defaults", &defaults), ("28 GHz", &custom)] {
        let p = derive(cfg, 40.0)?;
        println!(
            "{name}: noise {:.1} dB, eta {:.3e}",
            cfg.noise_power_db(),
            p.eta
        );
        println!("  P_b = 0 dB  ->  rho = {:.1} dB", cfg.transmit_snr_db(0.0));
        println!("  gamma_th n/f = {:.3}/{:.3}", p.gamma_thn, p.gamma_thf);
        match p.c_f {
            Some(c_f) => println!("  C_n = {:.4e}, C_f = {:.4e} at 40 dB", p.c_n, c_f),
            None => println!("  C_n = {:.4e}, far node infeasible", p.c_n),
        }
    }

    let bad = NetworkConfig {
        rate_f_bpcu: 2.0,
        ..defaults
    };
    println!("rate_f = 2 bpcu: C_f = {:?}", derive(&bad, 40.0)?.c_f);
    println!("\nround-tripped config:\n{}", custom.to_config_string());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
