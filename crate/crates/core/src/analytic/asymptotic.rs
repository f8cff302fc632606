use std::f64::consts::LN_2;

use super::{require_closed_form, AnalyticError};
use crate::model::{ChannelCondition, DerivedParams, NetworkConfig, SicMode};
use crate::numerics::{exp_integral_ei, QuadratureRule};

/// High-SNR error floor of near-node blockage under imperfect SIC. It does
/// not depend on the transmit SNR and grows with `Ω_I`.
pub fn asym_blockage_n_nisic(p: &DerivedParams, cfg: &NetworkConfig) -> Result<f64, AnalyticError> {
    require_closed_form(cfg)?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_n_m * cfg.radius_n_m;
    let xi1 = p.eta * p.a_n / (cfg.omega_i * p.gamma_thn);
    let xi4 = d2 / r2;
    let inner = xi1 / d2;
    let outer = xi1 / (r2 + d2);
    let ei_gap = exp_integral_ei(-inner)? - exp_integral_ei(-outer)?;
    Ok((1.0 + xi4) * (-outer).exp() - xi4 * (-inner).exp() - xi1 / r2 * ei_gap)
}

/// First-order high-SNR approximation of far-node NLoS blockage,
/// `(2d² + R_f²) / (2 Ω_f C_f)`; proportional to `1/ρ`.
pub fn asym_blockage_f_nlos(p: &DerivedParams, cfg: &NetworkConfig) -> Result<f64, AnalyticError> {
    require_closed_form(cfg)?;
    let c_f = p.c_f.ok_or(AnalyticError::Infeasible {
        a_f: p.a_f,
        gamma_thf: p.gamma_thf,
        a_n: p.a_n,
    })?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_f_m * cfg.radius_f_m;
    Ok((2.0 * d2 + r2) / (2.0 * cfg.omega_f * c_f))
}

/// Asymptote for near-node blockage: the NISIC floor, or `0` under ideal
/// SIC (the piecewise form is truncated past its outer knee).
pub fn asym_blockage_n(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    mode: SicMode,
) -> Result<f64, AnalyticError> {
    match mode {
        SicMode::Isic => require_closed_form(cfg).map(|_| 0.0),
        SicMode::Nisic => asym_blockage_n_nisic(p, cfg),
    }
}

pub fn asym_blockage_f(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    cond: ChannelCondition,
) -> Result<f64, AnalyticError> {
    match cond {
        ChannelCondition::Los => {
            require_closed_form(cfg)?;
            p.c_f.map(|_| 0.0).ok_or(AnalyticError::Infeasible {
                a_f: p.a_f,
                gamma_thf: p.gamma_thf,
                a_n: p.a_n,
            })
        }
        ChannelCondition::Nlos => asym_blockage_f_nlos(p, cfg),
    }
}

/// Jensen upper bound on the ideal-SIC near-node rate,
/// `log2(1 + E[γ_n]) = log2(1 + (ηρa_n/R_n²) ln((R_n²+d²)/d²))`.
/// Grows by one bit per doubling of `ρ` at high SNR.
pub fn rate_upper_n_isic_asym(
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<f64, AnalyticError> {
    require_closed_form(cfg)?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_n_m * cfg.radius_n_m;
    let mean_sinr = p.eta * p.rho * p.a_n / r2 * ((r2 + d2) / d2).ln();
    Ok(mean_sinr.ln_1p() / LN_2)
}

/// Interference-limited ceiling of the far-node LoS rate, `log2(1 + a_f/a_n)`.
pub fn asym_rate_f_los(cfg: &NetworkConfig) -> Result<f64, AnalyticError> {
    require_closed_form(cfg)?;
    Ok((cfg.a_f / cfg.a_n).ln_1p() / LN_2)
}

/// Ceiling of the far-node NLoS rate,
/// `π/(M ln 2) · Σ a_f √(1-t_k²) / (2a_n + a_f(t_k+1))`.
///
/// The sum is a quadrature of `∫_0^{a_f/a_n} dx/(1+x)`, so it converges to
/// [`asym_rate_f_los`] as `M` grows (the difference is `O(M⁻²)`).
pub fn asym_rate_f_nlos(cfg: &NetworkConfig, rule: &QuadratureRule) -> Result<f64, AnalyticError> {
    require_closed_form(cfg)?;
    let sum: f64 = rule
        .points()
        .map(|(t, w)| cfg.a_f * w / (2.0 * cfg.a_n + cfg.a_f * (t + 1.0)))
        .sum();
    Ok(rule.weight_factor() * sum / LN_2)
}

pub fn asym_rate_f(
    cfg: &NetworkConfig,
    cond: ChannelCondition,
    rule: &QuadratureRule,
) -> Result<f64, AnalyticError> {
    match cond {
        ChannelCondition::Los => asym_rate_f_los(cfg),
        ChannelCondition::Nlos => asym_rate_f_nlos(cfg, rule),
    }
}

/// Outcome of a finite-difference diversity estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiversityEstimate {
    Finite(f64),
    /// One of the probabilities is exactly zero: the curve has been
    /// truncated and the diversity order is unbounded.
    TruncatedToZero,
}

impl DiversityEstimate {
    pub fn finite(self) -> Option<f64> {
        match self {
            DiversityEstimate::Finite(v) => Some(v),
            DiversityEstimate::TruncatedToZero => None,
        }
    }
}

/// `-(log10 P₂ - log10 P₁) / (log10 ρ₂ - log10 ρ₁)` for a blockage curve
/// sampled at two transmit SNRs given in dB.
pub fn diversity_gain_numeric<F>(
    mut metric: F,
    rho_db_pair: (f64, f64),
) -> Result<DiversityEstimate, AnalyticError>
where
    F: FnMut(f64) -> Result<f64, AnalyticError>,
{
    let (lo, hi) = rho_db_pair;
    if !(lo != hi && lo.is_finite() && hi.is_finite()) {
        return Err(AnalyticError::DegenerateSnrPair);
    }
    let (p1, p2) = (metric(lo)?, metric(hi)?);
    for v in [p1, p2] {
        if v < 0.0 {
            return Err(AnalyticError::NegativeProbability(v));
        }
    }
    if p1 == 0.0 || p2 == 0.0 {
        return Ok(DiversityEstimate::TruncatedToZero);
    }
    Ok(DiversityEstimate::Finite(
        -(p2.log10() - p1.log10()) / ((hi - lo) / 10.0),
    ))
}

/// Finite-difference slope of a rate curve against `log2 ρ`.
pub fn high_snr_slope<F>(mut rate: F, rho_db_pair: (f64, f64)) -> Result<f64, AnalyticError>
where
    F: FnMut(f64) -> Result<f64, AnalyticError>,
{
    let (lo, hi) = rho_db_pair;
    if !(lo != hi && lo.is_finite() && hi.is_finite()) {
        return Err(AnalyticError::DegenerateSnrPair);
    }
    let octaves = (hi - lo) / 10.0 * 10f64.log2();
    Ok((rate(hi)? - rate(lo)?) / octaves)
}
