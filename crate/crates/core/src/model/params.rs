use std::f64::consts::PI;

use super::{ModelError, NetworkConfig};

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Constants fixed by a configuration and one transmit SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// `c² / (16 π² f_c²)`, in m².
    pub eta: f64,
    /// Linear transmit SNR `P_b / (K σ²)`.
    pub rho: f64,
    pub gamma_thn: f64,
    pub gamma_thf: f64,
    /// `η ρ a_n / γ_thn`, in m².
    pub c_n: f64,
    /// `η ρ (a_f/γ_thf - a_n)`; `None` when `a_f <= γ_thf a_n`, where the far
    /// node's SINR ceiling `a_f/a_n` never reaches its threshold.
    pub c_f: Option<f64>,
    pub a_n: f64,
    pub a_f: f64,
}

pub fn derive(cfg: &NetworkConfig, rho_db: f64) -> Result<DerivedParams, ModelError> {
    cfg.validate()?;
    if !rho_db.is_finite() {
        return Err(ModelError::Invalid(vec![format!(
            "transmit SNR must be finite, got {rho_db} dB"
        )]));
    }
    let eta = SPEED_OF_LIGHT.powi(2) / (16.0 * PI * PI * cfg.carrier_freq_hz.powi(2));
    let rho = 10f64.powf(rho_db / 10.0);
    let gamma_thn = cfg.rate_n_bpcu.exp2() - 1.0;
    let gamma_thf = cfg.rate_f_bpcu.exp2() - 1.0;
    let c_n = eta * rho * cfg.a_n / gamma_thn;
    let c_f = (cfg.a_f > gamma_thf * cfg.a_n).then(|| eta * rho * (cfg.a_f / gamma_thf - cfg.a_n));
    Ok(DerivedParams {
        eta,
        rho,
        gamma_thn,
        gamma_thf,
        c_n,
        c_f,
        a_n: cfg.a_n,
        a_f: cfg.a_f,
    })
}

impl DerivedParams {
    pub fn rho_db(&self) -> f64 {
        10.0 * self.rho.log10()
    }
}
