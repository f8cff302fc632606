//! Cross-check closed forms against the Monte Carlo engine, with standard
//! errors, at a handful of SNRs. Pass a trial count as the first argument.

use std::error::Error;

use pass_noma::analytic;
use pass_noma::model::{derive, ChannelCondition, NetworkConfig, Node, SicMode};
use pass_noma::numerics::chebyshev_nodes;
use pass_noma::simulator::{derive_seed, mc_blockage, mc_ergodic_rate};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(100_000)
}

fn run(trials: u64) -> Result<(), Box<dyn Error>> {
    let cfg = NetworkConfig {
        omega_i: 0.01,
        omega_f: 1.0,
        ..NetworkConfig::default()
    };
    let rule = chebyshev_nodes(1000)?;
    let cases = [
        ("n ISIC", Node::Near, SicMode::Isic, ChannelCondition::Los),
        ("n NISIC", Node::Near, SicMode::Nisic, ChannelCondition::Los),
        ("f LoS", Node::Far, SicMode::Isic, ChannelCondition::Los),
        ("f NLoS", Node::Far, SicMode::Isic, ChannelCondition::Nlos),
    ];

    println!("{trials} trials per point; z = |analytic - MC| / SE");
    for (i, db) in [30.0, 50.0, 54.0, 58.0].into_iter().enumerate() {
        let p = derive(&cfg, db)?;
        for (label, node, mode, cond) in cases {
            let exact = match node {
                Node::Near => analytic::blockage_n(&p, &cfg, mode)?.probability,
                Node::Far => analytic::blockage_f(&p, &cfg, cond)?.probability,
            };
            let rate = match node {
                Node::Near => analytic::ergodic_rate_n(&p, &cfg, mode, &rule)?.rate,
                Node::Far => analytic::ergodic_rate_f(&p, &cfg, cond, &rule)?.rate,
            };
            let seed = derive_seed(7, i as u64, label);
            let b = mc_blockage(&cfg, db, mode, node, cond, trials, seed)?;
            let r = mc_ergodic_rate(&cfg, db, mode, node, cond, trials, seed)?;
            let z = |a: f64, m: f64, se: f64| {
                if se > 0.0 {
                    format!("{:5.2}", (a - m).abs() / se)
                } else {
                    "  -  ".into()
                }
            };
            println!(
                "{db:>4} dB {label:<8} blockage {exact:.5} vs {:.5} (z {})   rate {rate:.5} vs {:.5} (z {})",
                b.mean,
                z(exact, b.mean, b.std_error),
                r.mean,
                z(rate, r.mean, r.std_error)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    match std::env::args().nth(1) {
        Some(n) => run(n.parse()?),
        None => run_example(),
    }
}
