use super::{clamp_probability, require_closed_form, AnalyticError, BlockageResult, Branch};
use crate::model::{ChannelCondition, DerivedParams, NetworkConfig, SicMode};
use crate::numerics::scaled_e1;

/// Classifies `c` against the knees `d²` and `R² + d²`. Equality with `d²`
/// falls in the first arm and equality with `R² + d²` in the last.
fn branch_of(c: f64, d2: f64, r2: f64) -> Branch {
    if c <= d2 {
        Branch::BelowD2
    } else if c >= r2 + d2 {
        Branch::AboveOuter
    } else {
        Branch::Mid
    }
}

fn linear_piecewise(c: f64, d2: f64, r2: f64) -> BlockageResult {
    let branch = branch_of(c, d2, r2);
    let probability = match branch {
        Branch::BelowD2 => 1.0,
        Branch::AboveOuter => 0.0,
        _ => 1.0 - (c - d2) / r2,
    };
    BlockageResult {
        probability,
        branch,
    }
}

/// `P(γ_n < threshold)` under imperfect SIC, unclamped.
///
/// With `s = 1/(Ω_I ρ)`, `ξ1 = η a_n/(Ω_I·threshold)` and `ξ4 = d²/R_n²`,
/// products `e^{s}·Ei(-a)` are formed as `-e^{s-a}·e^{a}E1(a)` so nothing
/// overflows at low SNR.
pub(super) fn nisic_outage(
    threshold: f64,
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> (f64, Branch) {
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_n_m * cfg.radius_n_m;
    let c = p.eta * p.rho * p.a_n / threshold;
    let branch = branch_of(c, d2, r2);
    if branch == Branch::BelowD2 {
        return (1.0, branch);
    }
    let s = 1.0 / (cfg.omega_i * p.rho);
    let xi1 = p.eta * p.a_n / (cfg.omega_i * threshold);
    let xi4 = d2 / r2;
    let inner = xi1 / d2;
    let e_inner = (s - inner).exp();
    // e^{s} Ei(-ξ1/d²)
    let ei_inner = -e_inner * scaled_e1(inner);
    let value = match branch {
        Branch::Mid => {
            // e^{s} [Ei(-ξ1/d²) - Ei(-s)]
            let xi2 = ei_inner + scaled_e1(s);
            1.0 + xi4 - xi4 * e_inner - xi1 / r2 * xi2
        }
        _ => {
            let outer = xi1 / (r2 + d2);
            let e_outer = (s - outer).exp();
            // e^{s} [Ei(-ξ1/d²) - Ei(-ξ1/(R²+d²))]
            let xi3 = ei_inner + e_outer * scaled_e1(outer);
            (1.0 + xi4) * e_outer - xi4 * e_inner - xi1 / r2 * xi3
        }
    };
    (value, branch)
}

/// Near-node blockage under imperfect SIC over LoS links.
pub fn blockage_n_nisic(
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<BlockageResult, AnalyticError> {
    require_closed_form(cfg)?;
    let (v, branch) = nisic_outage(p.gamma_thn, p, cfg);
    Ok(BlockageResult {
        probability: clamp_probability(v),
        branch,
    })
}

/// CDF of the near node's SINR under imperfect SIC, `P(γ_n < x)`. This is
/// the NISIC blockage expression with the threshold replaced by `x`, and
/// is the function the NISIC ergodic rate integrates.
pub fn sinr_n_nisic_cdf(
    x: f64,
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<f64, AnalyticError> {
    require_closed_form(cfg)?;
    if x <= 0.0 {
        return Ok(0.0);
    }
    Ok(clamp_probability(nisic_outage(x, p, cfg).0))
}

/// Near-node blockage under ideal SIC: `1`, `1 - (C_n - d²)/R_n²`, `0`.
pub fn blockage_n_isic(
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<BlockageResult, AnalyticError> {
    require_closed_form(cfg)?;
    Ok(linear_piecewise(
        p.c_n,
        cfg.height_m * cfg.height_m,
        cfg.radius_n_m * cfg.radius_n_m,
    ))
}

fn far_constant(p: &DerivedParams) -> Result<f64, AnalyticError> {
    p.c_f.ok_or(AnalyticError::Infeasible {
        a_f: p.a_f,
        gamma_thf: p.gamma_thf,
        a_n: p.a_n,
    })
}

/// Far-node blockage over LoS links, piecewise in `C_f`.
pub fn blockage_f_los(
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<BlockageResult, AnalyticError> {
    require_closed_form(cfg)?;
    let c_f = far_constant(p)?;
    Ok(linear_piecewise(
        c_f,
        cfg.height_m * cfg.height_m,
        cfg.radius_f_m * cfg.radius_f_m,
    ))
}

/// Far-node blockage over Rayleigh NLoS links:
/// `1 - (Ω_f C_f/R_f²)(e^{-d²/(Ω_f C_f)} - e^{-(R_f²+d²)/(Ω_f C_f)})`.
pub fn blockage_f_nlos(
    p: &DerivedParams,
    cfg: &NetworkConfig,
) -> Result<BlockageResult, AnalyticError> {
    require_closed_form(cfg)?;
    let k = cfg.omega_f * far_constant(p)?;
    let d2 = cfg.height_m * cfg.height_m;
    let r2 = cfg.radius_f_m * cfg.radius_f_m;
    let success = k / r2 * (-d2 / k).exp() * -(-r2 / k).exp_m1();
    Ok(BlockageResult {
        probability: clamp_probability(1.0 - success),
        branch: Branch::Smooth,
    })
}

pub fn blockage_n(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    mode: SicMode,
) -> Result<BlockageResult, AnalyticError> {
    match mode {
        SicMode::Isic => blockage_n_isic(p, cfg),
        SicMode::Nisic => blockage_n_nisic(p, cfg),
    }
}

pub fn blockage_f(
    p: &DerivedParams,
    cfg: &NetworkConfig,
    cond: ChannelCondition,
) -> Result<BlockageResult, AnalyticError> {
    match cond {
        ChannelCondition::Los => blockage_f_los(p, cfg),
        ChannelCondition::Nlos => blockage_f_nlos(p, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::derive;

    fn cfg() -> NetworkConfig {
        NetworkConfig::default()
    }

    /// Transmit SNR (dB) at which `C_n` equals `target`.
    fn rho_db_for_cn(target: f64) -> f64 {
        let p = derive(&cfg(), 0.0).unwrap();
        10.0 * (target / (p.eta * p.a_n / p.gamma_thn)).log10()
    }

    #[test]
    fn isic_knees_and_midpoint() {
        let c = cfg();
        let at_d2 = derive(&c, rho_db_for_cn(25.0)).unwrap();
        let r = blockage_n_isic(&at_d2, &c).unwrap();
        assert!((r.probability - 1.0).abs() < 1e-12);

        let mid = derive(&c, rho_db_for_cn(25.0 + 18.0)).unwrap();
        let r = blockage_n_isic(&mid, &c).unwrap();
        assert_eq!(r.branch, Branch::Mid);
        assert!((r.probability - 0.5).abs() < 1e-12);

        let past = derive(&c, rho_db_for_cn(70.0)).unwrap();
        let r = blockage_n_isic(&past, &c).unwrap();
        assert_eq!((r.probability, r.branch), (0.0, Branch::AboveOuter));
    }

    #[test]
    fn exact_knee_uses_outer_arms() {
        let c = cfg();
        let mut p = derive(&c, 50.0).unwrap();
        p.c_n = 25.0;
        assert_eq!(blockage_n_isic(&p, &c).unwrap().branch, Branch::BelowD2);
        p.c_n = 61.0;
        let r = blockage_n_isic(&p, &c).unwrap();
        assert_eq!((r.probability, r.branch), (0.0, Branch::AboveOuter));
    }

    #[test]
    fn piecewise_forms_are_continuous_at_knees() {
        let c = cfg();
        let mut p = derive(&c, 50.0).unwrap();
        for (knee, far) in [(25.0, false), (61.0, false), (25.0, true), (125.0, true)] {
            let eval = |p: &DerivedParams| {
                if far {
                    blockage_f_los(p, &c).unwrap().probability
                } else {
                    blockage_n_isic(p, &c).unwrap().probability
                }
            };
            let mut side = |delta: f64| {
                p.c_n = knee + delta;
                p.c_f = Some(knee + delta);
                eval(&p)
            };
            let (lo, hi) = (side(-1e-9), side(1e-9));
            assert!((lo - hi).abs() < 1e-8, "knee {knee}: {lo} vs {hi}");
        }
    }

    #[test]
    fn nisic_first_branch_is_one() {
        let c = cfg();
        let p = derive(&c, 40.0).unwrap();
        assert!(p.c_n < 25.0);
        let r = blockage_n_nisic(&p, &c).unwrap();
        assert_eq!((r.probability, r.branch), (1.0, Branch::BelowD2));
    }

    #[test]
    fn far_los_needs_feasible_split() {
        let c = NetworkConfig {
            rate_f_bpcu: 2.0,
            ..cfg()
        };
        let p = derive(&c, 60.0).unwrap();
        let err = blockage_f_los(&p, &c).unwrap_err();
        assert!(matches!(err, AnalyticError::Infeasible { .. }));
        assert!(err.to_string().contains("a_f > gamma_thf * a_n"));
        assert!(blockage_f_nlos(&p, &c).is_err());
    }

    #[test]
    fn nlos_limits() {
        let c = cfg();
        let mut p = derive(&c, 0.0).unwrap();
        p.c_f = Some(1e-9);
        assert_eq!(blockage_f_nlos(&p, &c).unwrap().probability, 1.0);
        p.c_f = Some(1e12);
        assert!(blockage_f_nlos(&p, &c).unwrap().probability < 1e-9);
    }

    #[test]
    fn other_path_loss_rejected() {
        let c = NetworkConfig {
            path_loss_alpha: 3.0,
            ..cfg()
        };
        let p = derive(&c, 50.0).unwrap();
        assert!(matches!(
            blockage_n_isic(&p, &c),
            Err(AnalyticError::UnsupportedPathLoss(a)) if a == 3.0
        ));
    }

    #[test]
    fn rate_cdf_reuses_blockage_expression() {
        let c = cfg();
        for rho_db in [52.0, 54.0, 58.0, 64.0] {
            let p = derive(&c, rho_db).unwrap();
            let cdf = sinr_n_nisic_cdf(p.gamma_thn, &p, &c).unwrap();
            let blockage = blockage_n_nisic(&p, &c).unwrap().probability;
            assert!(((1.0 - cdf) - (1.0 - blockage)).abs() < 1e-10);
        }
    }
}
