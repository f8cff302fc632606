use std::f64::consts::LN_2;

use super::blockage::nisic_outage;
use super::{clamp_probability, require_closed_form, AnalyticError, RateMethod, RateResult};
use crate::model::{ChannelCondition, DerivedParams, NetworkConfig, SicMode};
use crate::numerics::{gc_integrate, QuadratureRule};

/// Change of variables used by the far-node NLoS rate: the SINR axis
/// `x ∈ (0, a_f/a_n)` is mapped onto Chebyshev nodes by this affine map.
pub const NLOS_RATE_NODE_MAPPING: &str = "x = (a_f/a_n)(t_k+1)/2";

/// Near-node ergodic rate under imperfect SIC.
///
/// Integrates `(1 - F(x))/(1 + x)` where `F` is the NISIC blockage
/// expression with the threshold replaced by `x`. The support
/// `[0, ηρa_n/d²]` is split at `ηρa_n/(R_n²+d²)` where `F` changes arm, and
/// each segment gets its own Gauss–Chebyshev pass.
pub fn ergodic_rate_n_nisic(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    rule: &QuadratureRule,
) -> Result<RateResult, AnalyticError> {
    require_closed_form(cfg)?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_n_m * cfg.radius_n_m;
    let scale = p.eta * p.rho * p.a_n;
    let knee_outer = scale / (r2 + d2);
    let knee_inner = scale / d2;
    let integrand = |x: f64| {
        let cdf = clamp_probability(nisic_outage(x, p, cfg).0);
        (1.0 - cdf) / (1.0 + x)
    };
    let total = gc_integrate(integrand, 0.0, knee_outer, rule)?
        + gc_integrate(integrand, knee_outer, knee_inner, rule)?;
    Ok(RateResult {
        rate: (total / LN_2).max(0.0),
        method: RateMethod::Quadrature {
            order: rule.order(),
        },
    })
}

/// Near-node ergodic rate under ideal SIC, exact.
pub fn ergodic_rate_n_isic(
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<RateResult, AnalyticError> {
    require_closed_form(cfg)?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_n_m * cfg.radius_n_m;
    let a = p.eta * p.rho * p.a_n;
    let nats = a / r2 * ((r2 + d2) / d2).ln() - (a + d2) / r2 * (a / d2).ln_1p()
        + ((a + d2) / r2 + 1.0) * (a / (r2 + d2)).ln_1p();
    Ok(RateResult {
        rate: (nats / LN_2).max(0.0),
        method: RateMethod::ClosedForm,
    })
}

/// Far-node ergodic rate over LoS links, exact. Approaches
/// `log2(1 + a_f/a_n)` as the SNR grows.
pub fn ergodic_rate_f_los(
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<RateResult, AnalyticError> {
    require_closed_form(cfg)?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_f_m * cfg.radius_f_m;
    let an = p.eta * p.rho * p.a_n;
    let af = p.eta * p.rho * p.a_f;
    let ratio = ((d2 + an + af) / (d2 + an)) * ((r2 + d2 + an) / (r2 + d2 + an + af));
    let rate = (af / (r2 + d2 + an)).ln_1p() / LN_2 + af / r2 * (r2 / (d2 + an)).ln_1p() / LN_2
        - (an + af + d2) / r2 * ratio.log2();
    Ok(RateResult {
        rate: rate.max(0.0),
        method: RateMethod::ClosedForm,
    })
}

/// Far-node ergodic rate over Rayleigh NLoS links.
///
/// Gauss–Chebyshev sum over `t_k` with [`NLOS_RATE_NODE_MAPPING`]:
/// `κ_k = Ω_f ρ η a_n (2/(t_k+1) - 1)` and summand
/// `a_f κ_k √(1-t_k²) / (2 a_n R_f² [1 + a_f(t_k+1)/(2a_n)]) · (e^{-d²/κ_k} - e^{-(R_f²+d²)/κ_k})`.
pub fn ergodic_rate_f_nlos(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    rule: &QuadratureRule,
) -> Result<RateResult, AnalyticError> {
    require_closed_form(cfg)?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_f_m * cfg.radius_f_m;
    let base = cfg.omega_f * p.rho * p.eta * p.a_n;
    let sum: f64 = rule
        .points()
        .map(|(t, w)| {
            // 2/(t+1) - 1 without cancellation near t = 1
            let kappa = base * (1.0 - t) / (1.0 + t);
            if kappa == 0.0 {
                return 0.0;
            }
            let window = (-d2 / kappa).exp() * -(-r2 / kappa).exp_m1();
            p.a_f * kappa * w / (2.0 * p.a_n * r2 * (1.0 + p.a_f / (2.0 * p.a_n) * (t + 1.0)))
                * window
        })
        .sum();
    Ok(RateResult {
        rate: (rule.weight_factor() * sum / LN_2).max(0.0),
        method: RateMethod::Quadrature {
            order: rule.order(),
        },
    })
}

pub fn ergodic_rate_n(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    mode: SicMode,
    rule: &QuadratureRule,
) -> Result<RateResult, AnalyticError> {
    match mode {
        SicMode::Isic => ergodic_rate_n_isic(p, cfg),
        SicMode::Nisic => ergodic_rate_n_nisic(p, cfg, rule),
    }
}

pub fn ergodic_rate_f(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    cond: ChannelCondition,
    rule: &QuadratureRule,
) -> Result<RateResult, AnalyticError> {
    match cond {
        ChannelCondition::Los => ergodic_rate_f_los(p, cfg),
        ChannelCondition::Nlos => ergodic_rate_f_nlos(p, cfg, rule),
    }
}
