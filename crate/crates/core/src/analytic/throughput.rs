use super::{blockage_f, blockage_n, ergodic_rate_f, ergodic_rate_n, AnalyticError};
use crate::model::{ChannelCondition, DerivedParams, NetworkConfig, SicMode};
use crate::numerics::QuadratureRule;

/// Delay-constrained throughput `(1 - P_n) R̂_n + (1 - P_f) R̂_f`, in BPCU.
pub fn throughput_delay_constrained(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    mode: SicMode,
    cond: ChannelCondition,
) -> Result<f64, AnalyticError> {
    let p_n = blockage_n(p, cfg, mode)?.probability;
    let p_f = blockage_f(p, cfg, cond)?.probability;
    Ok((1.0 - p_n) * cfg.rate_n_bpcu + (1.0 - p_f) * cfg.rate_f_bpcu)
}

/// Latency-tolerant throughput: the sum of both ergodic rates.
pub fn throughput_latency_tolerant(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    mode: SicMode,
    cond: ChannelCondition,
    rule: &QuadratureRule,
) -> Result<f64, AnalyticError> {
    Ok(ergodic_rate_n(p, cfg, mode, rule)?.rate + ergodic_rate_f(p, cfg, cond, rule)?.rate)
}
