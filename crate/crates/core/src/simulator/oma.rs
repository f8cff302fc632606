use std::fmt;
use std::str::FromStr;

use super::{check_combination, indicator, run_trials, MetricEstimate, SimError};
use crate::model::{derive, ChannelCondition, NetworkConfig, Node};

/// How the orthogonal benchmark shares the channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OmaScheme {
    /// Each node gets half of the channel uses at full SNR:
    /// rate `½ log2(1 + ρg)`, blocked when `ρg < 2^{2R̂} - 1`.
    #[default]
    TdmaHalf,
    /// The served node gets the whole resource: rate `log2(1 + ρg)`,
    /// blocked when `ρg < 2^{R̂} - 1`.
    FullResource,
}

impl OmaScheme {
    fn share(self) -> f64 {
        match self {
            OmaScheme::TdmaHalf => 0.5,
            OmaScheme::FullResource => 1.0,
        }
    }
}

impl fmt::Display for OmaScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OmaScheme::TdmaHalf => "tdma-half",
            OmaScheme::FullResource => "full-resource",
        })
    }
}

impl FromStr for OmaScheme {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tdma-half" => Ok(OmaScheme::TdmaHalf),
            "full-resource" => Ok(OmaScheme::FullResource),
            _ => Err(SimError::UnknownScheme(s.to_string())),
        }
    }
}

/// Orthogonal-access benchmark for one node: `(blockage, ergodic rate)`
/// estimated from the same draws.
pub fn mc_oma_baseline(
    cfg: &NetworkConfig,
    rho_db: f64,
    node: Node,
    cond: ChannelCondition,
    scheme: OmaScheme,
    trials: u64,
    seed: u64,
) -> Result<(MetricEstimate, MetricEstimate), SimError> {
    check_combination(node, cond)?;
    let p = derive(cfg, rho_db)?;
    let share = scheme.share();
    let target = match node {
        Node::Near => cfg.rate_n_bpcu,
        Node::Far => cfg.rate_f_bpcu,
    };
    let [blocked, rate] = run_trials(cfg, &p, trials, seed, |link| {
        let gain = match node {
            Node::Near => link.gain_n,
            Node::Far => link.gain_f(cond),
        };
        let r = share * (p.rho * gain).ln_1p() / std::f64::consts::LN_2;
        [indicator(r < target), r]
    })?;
    Ok((
        MetricEstimate::proportion(blocked, seed),
        MetricEstimate::average(rate, seed),
    ))
}

/// System-level orthogonal benchmark from one set of draws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmaSystem {
    /// Sum of both nodes' rates.
    pub sum_rate: MetricEstimate,
    /// `R̂_n·1{n served} + R̂_f·1{f served}` averaged over draws.
    pub throughput_dc: MetricEstimate,
}

/// Sum rate and delay-constrained throughput of the orthogonal benchmark.
/// Node n is LoS; `cond` applies to node f.
pub fn mc_oma_system(
    cfg: &NetworkConfig,
    rho_db: f64,
    cond: ChannelCondition,
    scheme: OmaScheme,
    trials: u64,
    seed: u64,
) -> Result<OmaSystem, SimError> {
    let p = derive(cfg, rho_db)?;
    let share = scheme.share();
    let [sum, delivered] = run_trials(cfg, &p, trials, seed, |link| {
        let r_n = share * (p.rho * link.gain_n).ln_1p() / std::f64::consts::LN_2;
        let r_f = share * (p.rho * link.gain_f(cond)).ln_1p() / std::f64::consts::LN_2;
        let bits = indicator(r_n >= cfg.rate_n_bpcu) * cfg.rate_n_bpcu
            + indicator(r_f >= cfg.rate_f_bpcu) * cfg.rate_f_bpcu;
        [r_n + r_f, bits]
    })?;
    Ok(OmaSystem {
        sum_rate: MetricEstimate::average(sum, seed),
        throughput_dc: MetricEstimate::average(delivered, seed),
    })
}
