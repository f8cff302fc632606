//! Monte Carlo oracle for the downlink: samples node positions and fading,
//! applies the decoding rules trial by trial, and estimates blockage
//! probabilities, ergodic rates and the orthogonal-access baseline.
//!
//! Estimates are bit-reproducible for a given `(config, ρ, trials, seed)`;
//! see [`rng`] for the stream layout.

mod oma;
pub mod rng;
mod sampling;

pub use oma::{mc_oma_baseline, mc_oma_system, OmaScheme, OmaSystem};
pub use rng::{derive_seed, CHUNK_TRIALS};
pub use sampling::{sample_disk, sample_exp_power, TrialDraw};

use rayon::prelude::*;
use thiserror::Error;

use crate::model::{
    derive, sinr_f, sinr_n, sinr_n_to_f, ChannelCondition, DerivedParams, ModelError,
    NetworkConfig, Node, SicMode,
};

pub const DEFAULT_TRIALS: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("node n is only modelled over LoS links")]
    NearNodeNlos,
    #[error("at least one trial is required")]
    ZeroTrials,
    #[error("unknown OMA scheme `{0}` (expected tdma-half or full-resource)")]
    UnknownScheme(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
}

impl MetricEstimate {
    fn proportion(m: Moments, seed: u64) -> Self {
        let p = m.mean;
        MetricEstimate {
            mean: p,
            std_error: (p * (1.0 - p) / m.count as f64).max(0.0).sqrt(),
            trials: m.count,
            seed,
        }
    }

    fn average(m: Moments, seed: u64) -> Self {
        let var = if m.count > 1 {
            m.m2 / (m.count - 1) as f64
        } else {
            0.0
        };
        MetricEstimate {
            mean: m.mean,
            std_error: (var / m.count as f64).sqrt(),
            trials: m.count,
            seed,
        }
    }
}

/// Running mean and sum of squared deviations.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let w = other.count as f64 / count as f64;
        Moments {
            count,
            mean: self.mean + delta * w,
            m2: self.m2 + other.m2 + delta * delta * self.count as f64 * w,
        }
    }
}

/// Positions and gains of one trial, with everything the SINR evaluators need.
pub(crate) struct Link {
    pub gain_n: f64,
    pub gain_f_los: f64,
    pub gain_f_nlos: f64,
    pub residual: f64,
}

impl Link {
    fn new(draw: &TrialDraw, cfg: &NetworkConfig, eta: f64) -> Self {
        let d2 = cfg.height_m * cfg.height_m;
        let half_alpha = cfg.path_loss_alpha / 2.0;
        let loss = |(x, y): (f64, f64)| {
            let dist2 = x * x + y * y + d2;
            if half_alpha == 1.0 {
                eta / dist2
            } else {
                eta / dist2.powf(half_alpha)
            }
        };
        let gain_f_los = loss(draw.pos_f);
        Link {
            gain_n: loss(draw.pos_n),
            gain_f_los,
            gain_f_nlos: gain_f_los * draw.nlos_power_f,
            residual: draw.residual_power,
        }
    }

    pub fn gain_f(&self, cond: ChannelCondition) -> f64 {
        match cond {
            ChannelCondition::Los => self.gain_f_los,
            ChannelCondition::Nlos => self.gain_f_nlos,
        }
    }
}

/// Runs `trials` draws in parallel chunks and folds `K` per-trial
/// statistics. Chunk results are merged in chunk order so the output does
/// not depend on scheduling.
fn run_trials<const K: usize, F>(
    cfg: &NetworkConfig,
    p: &DerivedParams,
    trials: u64,
    seed: u64,
    stat: F,
) -> Result<[Moments; K], SimError>
where
    F: Fn(&Link) -> [f64; K] + Sync,
{
    if trials == 0 {
        return Err(SimError::ZeroTrials);
    }
    let chunks = trials.div_ceil(CHUNK_TRIALS);
    let per_chunk: Vec<[Moments; K]> = rng::chunk_streams(seed, chunks)
        .into_par_iter()
        .enumerate()
        .map(|(c, mut rng)| {
            let len = CHUNK_TRIALS.min(trials - c as u64 * CHUNK_TRIALS);
            let mut acc = [Moments::default(); K];
            for _ in 0..len {
                let draw = TrialDraw::sample(
                    cfg.radius_n_m,
                    cfg.radius_f_m,
                    cfg.omega_i,
                    cfg.omega_f,
                    &mut rng,
                );
                let values = stat(&Link::new(&draw, cfg, p.eta));
                for (a, v) in acc.iter_mut().zip(values) {
                    a.push(v);
                }
            }
            acc
        })
        .collect();
    Ok(per_chunk
        .into_iter()
        .fold([Moments::default(); K], |total, chunk| {
            std::array::from_fn(|k| total[k].merge(chunk[k]))
        }))
}

fn check_combination(node: Node, cond: ChannelCondition) -> Result<(), SimError> {
    if node == Node::Near && cond == ChannelCondition::Nlos {
        return Err(SimError::NearNodeNlos);
    }
    Ok(())
}

fn indicator(event: bool) -> f64 {
    if event {
        1.0
    } else {
        0.0
    }
}

/// Monte Carlo blockage probability.
///
/// Node n is blocked when it cannot decode the far stream
/// (`γ_{n→f} < γ_thf`) or, having decoded it, cannot decode its own
/// (`γ_n < γ_thn`). Node f is blocked when `γ_f < γ_thf`. `mode` is ignored
/// for node f and `cond` only applies to node f.
pub fn mc_blockage(
    cfg: &NetworkConfig,
    rho_db: f64,
    mode: SicMode,
    node: Node,
    cond: ChannelCondition,
    trials: u64,
    seed: u64,
) -> Result<MetricEstimate, SimError> {
    check_combination(node, cond)?;
    let p = derive(cfg, rho_db)?;
    let [m] = run_trials(cfg, &p, trials, seed, |link| {
        [indicator(match node {
            Node::Near => {
                sinr_n_to_f(link.gain_n, &p) < p.gamma_thf
                    || sinr_n(link.gain_n, link.residual, mode, &p) < p.gamma_thn
            }
            Node::Far => sinr_f(link.gain_f(cond), &p) < p.gamma_thf,
        })]
    })?;
    Ok(MetricEstimate::proportion(m, seed))
}

/// Monte Carlo ergodic rate: sample mean of `log2(1 + γ)`, where `γ` is
/// `γ_n` (unconditionally, whatever happened to the far stream) or `γ_f`.
pub fn mc_ergodic_rate(
    cfg: &NetworkConfig,
    rho_db: f64,
    mode: SicMode,
    node: Node,
    cond: ChannelCondition,
    trials: u64,
    seed: u64,
) -> Result<MetricEstimate, SimError> {
    check_combination(node, cond)?;
    let p = derive(cfg, rho_db)?;
    let [m] = run_trials(cfg, &p, trials, seed, |link| {
        let sinr = match node {
            Node::Near => sinr_n(link.gain_n, link.residual, mode, &p),
            Node::Far => sinr_f(link.gain_f(cond), &p),
        };
        [sinr.ln_1p() / std::f64::consts::LN_2]
    })?;
    Ok(MetricEstimate::average(m, seed))
}

/// Per-trial delivered bits `R̂_n·1{n decodes} + R̂_f·1{f decodes}`; its
/// mean is the delay-constrained throughput. Node n is always LoS.
pub fn mc_throughput_delay_constrained(
    cfg: &NetworkConfig,
    rho_db: f64,
    mode: SicMode,
    cond: ChannelCondition,
    trials: u64,
    seed: u64,
) -> Result<MetricEstimate, SimError> {
    let p = derive(cfg, rho_db)?;
    let [m] = run_trials(cfg, &p, trials, seed, |link| {
        let near_ok = sinr_n_to_f(link.gain_n, &p) >= p.gamma_thf
            && sinr_n(link.gain_n, link.residual, mode, &p) >= p.gamma_thn;
        let far_ok = sinr_f(link.gain_f(cond), &p) >= p.gamma_thf;
        [indicator(near_ok) * cfg.rate_n_bpcu + indicator(far_ok) * cfg.rate_f_bpcu]
    })?;
    Ok(MetricEstimate::average(m, seed))
}

/// Per-trial `log2(1+γ_n) + log2(1+γ_f)`; its mean is the sum ergodic rate.
pub fn mc_throughput_latency_tolerant(
    cfg: &NetworkConfig,
    rho_db: f64,
    mode: SicMode,
    cond: ChannelCondition,
    trials: u64,
    seed: u64,
) -> Result<MetricEstimate, SimError> {
    let p = derive(cfg, rho_db)?;
    let [m] = run_trials(cfg, &p, trials, seed, |link| {
        let near = sinr_n(link.gain_n, link.residual, mode, &p);
        let far = sinr_f(link.gain_f(cond), &p);
        [(near.ln_1p() + far.ln_1p()) / std::f64::consts::LN_2]
    })?;
    Ok(MetricEstimate::average(m, seed))
}
