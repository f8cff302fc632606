use std::fmt;
use std::str::FromStr;

use super::metric::{Engine, MetricSpec};
use super::sweep::{Series, SweepAxis, SweepSpec};
use super::RunnerError;
use crate::numerics::DEFAULT_QUADRATURE_ORDER;
use crate::simulator::{OmaScheme, DEFAULT_TRIALS};

pub const CELL_RADII_M: [f64; 3] = [10.0, 20.0, 30.0];
pub const ANTENNA_COUNTS: [u32; 3] = [5, 10, 20];
pub const DEFAULT_OMEGA_I_LIST: [f64; 3] = [0.001, 0.01, 0.1];

/// Curve families behind each published figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurePreset {
    /// Blockage vs ρ: both nodes, asymptotes, OMA, residual-interference family.
    Fig2,
    /// Blockage vs ρ across cell radii.
    Fig3,
    /// Blockage vs transmit power across antenna counts.
    Fig4,
    /// Ergodic rates vs ρ with asymptotes, OMA and the sum-rate comparison.
    Fig5,
    /// Ergodic rates across cell radii.
    Fig6,
    /// Ergodic rates across antenna counts.
    Fig7,
    /// Delay-constrained throughput across cell radii.
    Fig8,
    /// Latency-tolerant throughput across cell radii.
    Fig9,
}

pub const ALL_PRESETS: [FigurePreset; 8] = [
    FigurePreset::Fig2,
    FigurePreset::Fig3,
    FigurePreset::Fig4,
    FigurePreset::Fig5,
    FigurePreset::Fig6,
    FigurePreset::Fig7,
    FigurePreset::Fig8,
    FigurePreset::Fig9,
];

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = ALL_PRESETS.iter().position(|p| p == self).unwrap() + 2;
        write!(f, "fig{n}")
    }
}

impl FromStr for FigurePreset {
    type Err = RunnerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_PRESETS
            .iter()
            .find(|p| p.to_string() == s.to_ascii_lowercase())
            .copied()
            .ok_or_else(|| RunnerError::Validation(format!("unknown preset `{s}` (fig2 .. fig9)")))
    }
}

/// Knobs shared by all presets.
#[derive(Debug, Clone, PartialEq)]
pub struct PresetOptions {
    pub trials: u64,
    pub seed: u64,
    pub engine: Engine,
    pub quad_order: usize,
    pub oma_scheme: OmaScheme,
    pub omega_i_list: Vec<f64>,
}

impl Default for PresetOptions {
    fn default() -> Self {
        PresetOptions {
            trials: DEFAULT_TRIALS,
            seed: 1,
            engine: Engine::Both,
            quad_order: DEFAULT_QUADRATURE_ORDER,
            oma_scheme: OmaScheme::TdmaHalf,
            omega_i_list: DEFAULT_OMEGA_I_LIST.to_vec(),
        }
    }
}

fn specs(list: &[&str], engine: Engine) -> Vec<MetricSpec> {
    list.iter()
        .map(|m| MetricSpec::parse(m, engine).expect("preset metric names are valid"))
        .collect()
}

fn radius_family(metrics: &[&str], engine: Engine) -> Vec<Series> {
    CELL_RADII_M
        .iter()
        .map(|&r| Series {
            label: format!("R_D={r}"),
            overrides: vec![
                ("R_D_m".into(), r.to_string()),
                ("R_n_m".into(), (0.6 * r).to_string()),
                ("R_f_m".into(), r.to_string()),
            ],
            metrics: specs(metrics, engine),
        })
        .collect()
}

fn antenna_family(metrics: &[&str], engine: Engine) -> Vec<Series> {
    ANTENNA_COUNTS
        .iter()
        .map(|&k| Series {
            label: format!("K={k}"),
            overrides: vec![("K".into(), k.to_string())],
            metrics: specs(metrics, engine),
        })
        .collect()
}

fn residual_family(metrics: &[&str], omega_i_list: &[f64], engine: Engine) -> Vec<Series> {
    omega_i_list
        .iter()
        .map(|&w| Series {
            label: format!("omega_I={w}"),
            overrides: vec![("omega_I".into(), w.to_string())],
            metrics: specs(metrics, engine),
        })
        .collect()
}

const BLOCKAGES: [&str; 4] = [
    "blockage_n:isic",
    "blockage_n:nisic",
    "blockage_f:los",
    "blockage_f:nlos",
];
const RATES: [&str; 4] = ["rate_n:isic", "rate_n:nisic", "rate_f:los", "rate_f:nlos"];

impl FigurePreset {
    pub fn sweep(self, opts: &PresetOptions) -> SweepSpec {
        let e = opts.engine;
        let mut axis = SweepAxis::Rho;
        let series = match self {
            FigurePreset::Fig2 => {
                let mut s = vec![Series::base(specs(
                    &[
                        "blockage_n:isic",
                        "blockage_f:los",
                        "blockage_f:nlos",
                        "asym_blockage_f:los",
                        "asym_blockage_f:nlos",
                        "oma_blockage_n",
                        "oma_blockage_f:los",
                        "oma_blockage_f:nlos",
                    ],
                    e,
                ))];
                s.extend(residual_family(
                    &["blockage_n:nisic", "asym_blockage_n:nisic"],
                    &opts.omega_i_list,
                    e,
                ));
                s
            }
            FigurePreset::Fig3 => radius_family(&BLOCKAGES, e),
            FigurePreset::Fig4 => {
                axis = SweepAxis::TransmitPower;
                antenna_family(&BLOCKAGES, e)
            }
            FigurePreset::Fig5 => {
                let mut s = vec![Series::base(specs(
                    &[
                        "rate_n:isic",
                        "rate_f:los",
                        "rate_f:nlos",
                        "rate_upper_n",
                        "asym_rate_f:los",
                        "asym_rate_f:nlos",
                        "oma_rate_n",
                        "oma_rate_f:los",
                        "oma_rate_f:nlos",
                        "throughput_lt:isic:los",
                        "oma_sum_rate:los",
                    ],
                    e,
                ))];
                s.extend(residual_family(&["rate_n:nisic"], &opts.omega_i_list, e));
                s
            }
            FigurePreset::Fig6 => radius_family(&RATES, e),
            FigurePreset::Fig7 => {
                axis = SweepAxis::TransmitPower;
                antenna_family(&RATES, e)
            }
            FigurePreset::Fig8 => radius_family(
                &[
                    "throughput_dc:isic:los",
                    "throughput_dc:nisic:los",
                    "throughput_dc:isic:nlos",
                    "throughput_dc:nisic:nlos",
                    "oma_throughput_dc:los",
                    "oma_throughput_dc:nlos",
                ],
                e,
            ),
            FigurePreset::Fig9 => radius_family(
                &[
                    "throughput_lt:isic:los",
                    "throughput_lt:nisic:los",
                    "throughput_lt:isic:nlos",
                    "throughput_lt:nisic:nlos",
                    "oma_sum_rate:los",
                    "oma_sum_rate:nlos",
                ],
                e,
            ),
        };
        // the power axis is chosen so that K = 10 spans ρ = 0..60 dB
        let (start, stop) = match axis {
            SweepAxis::Rho => (0.0, 60.0),
            SweepAxis::TransmitPower => (-40.0, 20.0),
        };
        SweepSpec {
            start_db: start,
            stop_db: stop,
            step_db: 2.0,
            axis,
            series,
            mc_trials: opts.trials,
            seed: opts.seed,
            quad_order: opts.quad_order,
            oma_scheme: opts.oma_scheme,
            output_path: None,
            label: Some(self.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::NetworkConfig;

    #[test]
    fn ids_round_trip() {
        for p in ALL_PRESETS {
            assert_eq!(p.to_string().parse::<FigurePreset>().unwrap(), p);
        }
        assert!("fig10".parse::<FigurePreset>().is_err());
    }

    #[test]
    fn every_preset_builds_valid_configs() {
        let cfg = NetworkConfig::default();
        for p in ALL_PRESETS {
            let spec = p.sweep(&PresetOptions::default());
            spec.validate().unwrap();
            for s in &spec.series {
                s.config(&cfg).unwrap();
            }
        }
    }

    #[test]
    fn fig2_has_eight_analytic_curves_plus_residual_family() {
        let spec = FigurePreset::Fig2.sweep(&PresetOptions::default());
        let base = &spec.series[0].metrics;
        assert_eq!(base.iter().filter(|m| m.metric.has_analytic()).count(), 5);
        assert_eq!(spec.series.len(), 4);
    }

    #[test]
    fn antenna_presets_use_power_axis() {
        let spec = FigurePreset::Fig7.sweep(&PresetOptions::default());
        assert_eq!(spec.axis, SweepAxis::TransmitPower);
        assert_eq!(
            spec.series
                .iter()
                .map(|s| s.label.as_str())
                .collect::<Vec<_>>(),
            ["K=5", "K=10", "K=20"]
        );
    }
}
