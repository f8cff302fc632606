use std::path::PathBuf;

use rayon::prelude::*;

use super::dataset::{Dataset, Row};
use super::metric::{Engine, Metric, MetricSpec};
use super::RunnerError;
use crate::analytic::{self, AnalyticError};
use crate::model::{derive, NetworkConfig, Node, CONFIG_KEYS};
use crate::numerics::{chebyshev_nodes, QuadratureRule, DEFAULT_QUADRATURE_ORDER};
use crate::simulator::{self, derive_seed, MetricEstimate, OmaScheme, DEFAULT_TRIALS};

/// What the swept dB value means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepAxis {
    /// Transmit SNR ρ itself.
    #[default]
    Rho,
    /// Total transmit power `P_b` in dB; each series converts it to
    /// `ρ = P_b / (K σ²)` with its own antenna count.
    TransmitPower,
}

impl SweepAxis {
    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::Rho => "rho_db",
            SweepAxis::TransmitPower => "transmit_power_db",
        }
    }
}

/// A curve family member: config overrides plus the metrics to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    /// `(config key, value)` pairs applied on top of the base config.
    pub overrides: Vec<(String, String)>,
    pub metrics: Vec<MetricSpec>,
}

impl Series {
    pub fn base(metrics: Vec<MetricSpec>) -> Self {
        Series {
            label: "base".into(),
            overrides: Vec::new(),
            metrics,
        }
    }

    pub fn config(&self, base: &NetworkConfig) -> Result<NetworkConfig, RunnerError> {
        let mut pairs: Vec<(String, String)> = base
            .to_pairs()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        for (key, value) in &self.overrides {
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(RunnerError::Validation(format!(
                    "series `{}`: unknown key `{key}`",
                    self.label
                )));
            }
            match pairs.iter_mut().find(|(k, _)| k == key) {
                Some(slot) => slot.1 = value.clone(),
                None => pairs.push((key.clone(), value.clone())),
            }
        }
        let text: String = pairs.iter().map(|(k, v)| format!("{k} = {v}\n")).collect();
        Ok(NetworkConfig::parse(&text)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub start_db: f64,
    pub stop_db: f64,
    pub step_db: f64,
    pub axis: SweepAxis,
    pub series: Vec<Series>,
    pub mc_trials: u64,
    pub seed: u64,
    pub quad_order: usize,
    pub oma_scheme: OmaScheme,
    pub output_path: Option<PathBuf>,
    /// Free-form tag written to the dataset header (preset id, etc.).
    pub label: Option<String>,
}

impl SweepSpec {
    /// 0–60 dB in 2 dB steps over the base config.
    pub fn new(metrics: Vec<MetricSpec>) -> Self {
        SweepSpec {
            start_db: 0.0,
            stop_db: 60.0,
            step_db: 2.0,
            axis: SweepAxis::Rho,
            series: vec![Series::base(metrics)],
            mc_trials: DEFAULT_TRIALS,
            seed: 1,
            quad_order: DEFAULT_QUADRATURE_ORDER,
            oma_scheme: OmaScheme::TdmaHalf,
            output_path: None,
            label: None,
        }
    }

    pub fn with_grid(mut self, start_db: f64, stop_db: f64, step_db: f64) -> Self {
        (self.start_db, self.stop_db, self.step_db) = (start_db, stop_db, step_db);
        self
    }

    pub fn validate(&self) -> Result<(), RunnerError> {
        let fail = |m: String| Err(RunnerError::Validation(m));
        if !(self.step_db > 0.0 && self.step_db.is_finite()) {
            return fail(format!("step must be positive, got {}", self.step_db));
        }
        if !(self.start_db <= self.stop_db && self.start_db.is_finite() && self.stop_db.is_finite())
        {
            return fail(format!(
                "need start <= stop, got {} > {}",
                self.start_db, self.stop_db
            ));
        }
        if self.series.is_empty() || self.series.iter().any(|s| s.metrics.is_empty()) {
            return fail("metric list is empty".into());
        }
        if self.mc_trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.quad_order == 0 {
            return fail("quadrature order must be at least 1".into());
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let n = ((self.stop_db - self.start_db) / self.step_db + 1e-9).floor() as usize;
        (0..=n)
            .map(|i| self.start_db + i as f64 * self.step_db)
            .collect()
    }
}

struct Task<'a> {
    series: &'a Series,
    cfg: &'a NetworkConfig,
    x_index: usize,
    x_db: f64,
    spec: MetricSpec,
    engine: Engine,
}

/// Evaluates every (series, grid point, metric, engine) combination.
/// Rows come back in exactly that nesting order whatever the thread
/// schedule; failures of individual combinations become error rows.
pub fn run_sweep(spec: &SweepSpec, cfg: &NetworkConfig) -> Result<Dataset, RunnerError> {
    spec.validate()?;
    cfg.validate()?;
    let rule =
        chebyshev_nodes(spec.quad_order).map_err(|e| RunnerError::Validation(e.to_string()))?;
    let configs = spec
        .series
        .iter()
        .map(|s| s.config(cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let grid = spec.grid();

    let mut tasks = Vec::new();
    for (series, scfg) in spec.series.iter().zip(&configs) {
        for (x_index, &x_db) in grid.iter().enumerate() {
            for m in &series.metrics {
                let mut push = |engine| {
                    tasks.push(Task {
                        series,
                        cfg: scfg,
                        x_index,
                        x_db,
                        spec: *m,
                        engine,
                    })
                };
                match m.engine {
                    Engine::Both => {
                        if m.metric.has_analytic() {
                            push(Engine::Analytic);
                        }
                        if m.metric.has_mc() {
                            push(Engine::Mc);
                        }
                    }
                    e => push(e),
                }
            }
        }
    }

    let clamps_before = analytic::clamp_events();
    let rows: Vec<Row> = tasks.par_iter().map(|t| evaluate(t, spec, &rule)).collect();
    let clamps = analytic::clamp_events().saturating_sub(clamps_before);

    let mut meta = vec![
        ("tool".to_string(), env!("CARGO_PKG_NAME").to_string()),
        ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
    ];
    if let Some(label) = &spec.label {
        meta.push(("preset".into(), label.clone()));
    }
    meta.extend([
        ("axis".to_string(), spec.axis.name().to_string()),
        (
            "grid".to_string(),
            format!("{}:{}:{}", spec.start_db, spec.stop_db, spec.step_db),
        ),
        ("seed".to_string(), spec.seed.to_string()),
        ("trials".to_string(), spec.mc_trials.to_string()),
        (
            "rng".to_string(),
            "xoshiro256++ (SplitMix64 seeding, jump() per 16384-trial chunk)".to_string(),
        ),
        ("quad_order".to_string(), spec.quad_order.to_string()),
        (
            "nlos_rate_node_mapping".to_string(),
            analytic::NLOS_RATE_NODE_MAPPING.to_string(),
        ),
        ("oma_scheme".to_string(), spec.oma_scheme.to_string()),
    ]);
    meta.extend(
        cfg.to_pairs()
            .into_iter()
            .map(|(k, v)| (format!("config.{k}"), v)),
    );
    for s in &spec.series {
        let overrides: Vec<String> = s
            .overrides
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        meta.push((format!("series.{}", s.label), overrides.join(";")));
    }
    meta.push(("clamp_events".into(), clamps.to_string()));
    Ok(Dataset { meta, rows })
}

fn evaluate(t: &Task<'_>, spec: &SweepSpec, rule: &QuadratureRule) -> Row {
    let rho_db = match spec.axis {
        SweepAxis::Rho => t.x_db,
        SweepAxis::TransmitPower => t.cfg.transmit_snr_db(t.x_db),
    };
    let mut row = Row {
        series: t.series.label.clone(),
        x_db: t.x_db,
        rho_db,
        metric: t.spec.metric,
        mode: t.spec.mode,
        condition: t.spec.condition,
        engine: t.engine,
        value: None,
        std_error: None,
        trials: None,
        seed: None,
        error: None,
    };
    match t.engine {
        Engine::Mc => {
            let seed = derive_seed(
                spec.seed,
                t.x_index as u64,
                &format!("{}/{}", t.series.label, t.spec.key()),
            );
            match mc_value(t.spec, t.cfg, rho_db, spec, seed) {
                Ok(e) => {
                    row.value = Some(e.mean);
                    row.std_error = Some(e.std_error);
                    row.trials = Some(e.trials);
                    row.seed = Some(e.seed);
                }
                Err(e) => row.error = Some(e),
            }
        }
        _ => match analytic_value(t.spec, t.cfg, rho_db, rule) {
            Ok(v) => row.value = Some(v),
            Err(e) => row.error = Some(e),
        },
    }
    row
}

fn analytic_value(
    m: MetricSpec,
    cfg: &NetworkConfig,
    rho_db: f64,
    rule: &QuadratureRule,
) -> Result<f64, String> {
    if !m.metric.has_analytic() {
        return Err(format!("{} has no analytic evaluator", m.metric));
    }
    let (mode, cond) = (m.mode_or_default(), m.condition_or_default());
    let value = (|| -> Result<f64, AnalyticError> {
        let p = derive(cfg, rho_db)?;
        Ok(match m.metric {
            Metric::BlockageN => analytic::blockage_n(&p, cfg, mode)?.probability,
            Metric::BlockageF => analytic::blockage_f(&p, cfg, cond)?.probability,
            Metric::AsymBlockageN => analytic::asym_blockage_n(&p, cfg, mode)?,
            Metric::AsymBlockageF => analytic::asym_blockage_f(&p, cfg, cond)?,
            Metric::RateN => analytic::ergodic_rate_n(&p, cfg, mode, rule)?.rate,
            Metric::RateF => analytic::ergodic_rate_f(&p, cfg, cond, rule)?.rate,
            Metric::RateUpperN => analytic::rate_upper_n_isic_asym(&p, cfg)?,
            Metric::AsymRateF => analytic::asym_rate_f(cfg, cond, rule)?,
            Metric::ThroughputDc => analytic::throughput_delay_constrained(&p, cfg, mode, cond)?,
            Metric::ThroughputLt => {
                analytic::throughput_latency_tolerant(&p, cfg, mode, cond, rule)?
            }
            _ => unreachable!("checked has_analytic"),
        })
    })();
    value.map_err(|e| e.to_string())
}

fn mc_value(
    m: MetricSpec,
    cfg: &NetworkConfig,
    rho_db: f64,
    spec: &SweepSpec,
    seed: u64,
) -> Result<MetricEstimate, String> {
    if !m.metric.has_mc() {
        return Err(format!("{} has no Monte Carlo estimator", m.metric));
    }
    let (mode, cond, n) = (
        m.mode_or_default(),
        m.condition_or_default(),
        spec.mc_trials,
    );
    let los = crate::model::ChannelCondition::Los;
    let scheme = spec.oma_scheme;
    let result = match m.metric {
        Metric::BlockageN => simulator::mc_blockage(cfg, rho_db, mode, Node::Near, los, n, seed),
        Metric::BlockageF => simulator::mc_blockage(cfg, rho_db, mode, Node::Far, cond, n, seed),
        Metric::RateN => simulator::mc_ergodic_rate(cfg, rho_db, mode, Node::Near, los, n, seed),
        Metric::RateF => simulator::mc_ergodic_rate(cfg, rho_db, mode, Node::Far, cond, n, seed),
        Metric::ThroughputDc => {
            simulator::mc_throughput_delay_constrained(cfg, rho_db, mode, cond, n, seed)
        }
        Metric::ThroughputLt => {
            simulator::mc_throughput_latency_tolerant(cfg, rho_db, mode, cond, n, seed)
        }
        Metric::OmaBlockageN => {
            simulator::mc_oma_baseline(cfg, rho_db, Node::Near, los, scheme, n, seed).map(|r| r.0)
        }
        Metric::OmaBlockageF => {
            simulator::mc_oma_baseline(cfg, rho_db, Node::Far, cond, scheme, n, seed).map(|r| r.0)
        }
        Metric::OmaRateN => {
            simulator::mc_oma_baseline(cfg, rho_db, Node::Near, los, scheme, n, seed).map(|r| r.1)
        }
        Metric::OmaRateF => {
            simulator::mc_oma_baseline(cfg, rho_db, Node::Far, cond, scheme, n, seed).map(|r| r.1)
        }
        Metric::OmaSumRate => {
            simulator::mc_oma_system(cfg, rho_db, cond, scheme, n, seed).map(|s| s.sum_rate)
        }
        Metric::OmaThroughputDc => {
            simulator::mc_oma_system(cfg, rho_db, cond, scheme, n, seed).map(|s| s.throughput_dc)
        }
        _ => unreachable!("checked has_mc"),
    };
    result.map_err(|e| e.to_string())
}
