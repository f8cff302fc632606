//! Closed-form and quadrature evaluators for blockage probability, ergodic
//! rate, their high-SNR limits, and system throughput.
//!
//! Every evaluator requires the free-space exponent `alpha = 2`; other
//! exponents are only supported by the simulator.

mod asymptotic;
mod blockage;
mod rate;
mod throughput;

use std::sync::atomic::{AtomicU64, Ordering};

pub use asymptotic::{
    asym_blockage_f, asym_blockage_f_nlos, asym_blockage_n, asym_blockage_n_nisic, asym_rate_f,
    asym_rate_f_los, asym_rate_f_nlos, diversity_gain_numeric, high_snr_slope,
    rate_upper_n_isic_asym, DiversityEstimate,
};
pub use blockage::{
    blockage_f, blockage_f_los, blockage_f_nlos, blockage_n, blockage_n_isic, blockage_n_nisic,
    sinr_n_nisic_cdf,
};
pub use rate::{
    ergodic_rate_f, ergodic_rate_f_los, ergodic_rate_f_nlos, ergodic_rate_n, ergodic_rate_n_isic,
    ergodic_rate_n_nisic, NLOS_RATE_NODE_MAPPING,
};
pub use throughput::{throughput_delay_constrained, throughput_latency_tolerant};

use thiserror::Error;

use crate::model::{ModelError, NetworkConfig};
use crate::numerics::NumericsError;

#[derive(Debug, Error)]
pub enum AnalyticError {
    #[error("closed forms assume path-loss exponent 2, got {0}")]
    UnsupportedPathLoss(f64),
    #[error(
        "far node is infeasible: needs a_f > gamma_thf * a_n, got a_f={a_f}, gamma_thf={gamma_thf}, a_n={a_n}"
    )]
    Infeasible { a_f: f64, gamma_thf: f64, a_n: f64 },
    #[error("diversity/slope estimate needs two distinct SNR points")]
    DegenerateSnrPair,
    #[error("probability {0} is negative")]
    NegativeProbability(f64),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Which arm of a piecewise blockage expression produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `C <= d²`: no position can meet the threshold.
    BelowD2,
    /// `d² < C < R² + d²`.
    Mid,
    /// `C >= R² + d²`.
    AboveOuter,
    /// Expressions without a piecewise structure (NLoS).
    Smooth,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockageResult {
    pub probability: f64,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateMethod {
    ClosedForm,
    Quadrature { order: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateResult {
    /// bits/s/Hz
    pub rate: f64,
    pub method: RateMethod,
}

static CLAMP_EVENTS: AtomicU64 = AtomicU64::new(0);

/// Number of probabilities pulled back into `[0, 1]` since start-up (or the
/// last [`reset_clamp_events`]). Rounding in the Ei combinations can push
/// results outside the unit interval by ~1e-12.
pub fn clamp_events() -> u64 {
    CLAMP_EVENTS.load(Ordering::Relaxed)
}

pub fn reset_clamp_events() {
    CLAMP_EVENTS.store(0, Ordering::Relaxed);
}

fn clamp_probability(v: f64) -> f64 {
    if (0.0..=1.0).contains(&v) {
        v
    } else {
        CLAMP_EVENTS.fetch_add(1, Ordering::Relaxed);
        log::debug!("clamping probability {v:e} into [0, 1]");
        v.clamp(0.0, 1.0)
    }
}

fn require_closed_form(cfg: &NetworkConfig) -> Result<(), AnalyticError> {
    cfg.validate()?;
    if cfg.path_loss_alpha != 2.0 {
        return Err(AnalyticError::UnsupportedPathLoss(cfg.path_loss_alpha));
    }
    Ok(())
}
