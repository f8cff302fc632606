use std::collections::BTreeMap;
use std::fmt;

use super::dataset::Dataset;
use super::metric::Engine;

/// Absolute agreement floor; below it Monte Carlo resolution at desk-scale
/// trial counts is not meaningful.
pub const ABS_FLOOR: f64 = 1e-4;
pub const SE_MULTIPLIER: f64 = 3.0;

/// One analytic value that disagreed with its Monte Carlo partner.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub x_db: f64,
    pub rho_db: f64,
    pub analytic: f64,
    pub mc: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricComparison {
    pub series: String,
    /// `metric[:mode][:condition]`
    pub metric: String,
    pub pairs: usize,
    pub max_abs_diff: f64,
    /// Largest `|Δ| / SE` over points with a nonzero standard error.
    pub max_se_ratio: f64,
    pub mismatches: Vec<Mismatch>,
}

impl MetricComparison {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport {
    pub metrics: Vec<MetricComparison>,
    pub clamp_events: Option<u64>,
    pub node_mapping: Option<String>,
    pub warnings: Vec<String>,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.metrics.iter().all(MetricComparison::passed)
    }

    /// `0` when every pair agrees, `2` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }
}

/// Pairs analytic and Monte Carlo rows of the same series, metric and grid
/// point and checks `|analytic − mc| ≤ max(3·SE, 1e-4)`.
pub fn compare_report(ds: &Dataset) -> CompareReport {
    type Key = (String, String, u64);
    let mut analytic: BTreeMap<Key, f64> = BTreeMap::new();
    let mut mc: Vec<(Key, f64, f64, f64)> = Vec::new();
    let mut order: Vec<(String, String)> = Vec::new();
    for r in &ds.rows {
        let Some(value) = r.value else { continue };
        let mut metric = r.metric.to_string();
        if let Some(m) = r.mode {
            metric = format!("{metric}:{m}");
        }
        if let Some(c) = r.condition {
            metric = format!("{metric}:{c}");
        }
        let key = (r.series.clone(), metric, r.x_db.to_bits());
        match r.engine {
            Engine::Analytic => {
                analytic.insert(key, value);
            }
            Engine::Mc => mc.push((key, value, r.std_error.unwrap_or(0.0), r.rho_db)),
            Engine::Both => {}
        }
    }

    let mut groups: BTreeMap<(String, String), MetricComparison> = BTreeMap::new();
    for ((series, metric, x_bits), mc_value, se, rho_db) in mc {
        let Some(&a) = analytic.get(&(series.clone(), metric.clone(), x_bits)) else {
            continue;
        };
        let group_key = (series.clone(), metric.clone());
        if !groups.contains_key(&group_key) {
            order.push(group_key.clone());
        }
        let g = groups.entry(group_key).or_insert_with(|| MetricComparison {
            series,
            metric,
            pairs: 0,
            max_abs_diff: 0.0,
            max_se_ratio: 0.0,
            mismatches: Vec::new(),
        });
        let diff = (a - mc_value).abs();
        g.pairs += 1;
        g.max_abs_diff = g.max_abs_diff.max(diff);
        if se > 0.0 {
            g.max_se_ratio = g.max_se_ratio.max(diff / se);
        }
        if diff > (SE_MULTIPLIER * se).max(ABS_FLOOR) {
            g.mismatches.push(Mismatch {
                x_db: f64::from_bits(x_bits),
                rho_db,
                analytic: a,
                mc: mc_value,
                std_error: se,
            });
        }
    }

    let mut warnings = Vec::new();
    if groups.is_empty() {
        warnings.push("no comparable analytic/Monte Carlo pairs in dataset".to_string());
        log::warn!("{}", warnings[0]);
    }
    CompareReport {
        metrics: order
            .into_iter()
            .filter_map(|k| groups.remove(&k))
            .collect(),
        clamp_events: ds.meta_value("clamp_events").and_then(|v| v.parse().ok()),
        node_mapping: ds.meta_value("nlos_rate_node_mapping").map(str::to_string),
        warnings,
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<14} {:<28} {:>5} {:>12} {:>9}  verdict",
            "series", "metric", "pairs", "max|diff|", "max/SE"
        )?;
        for m in &self.metrics {
            writeln!(
                f,
                "{:<14} {:<28} {:>5} {:>12.3e} {:>9.2}  {}",
                m.series,
                m.metric,
                m.pairs,
                m.max_abs_diff,
                m.max_se_ratio,
                if m.passed() { "pass" } else { "FAIL" }
            )?;
            for x in &m.mismatches {
                writeln!(
                    f,
                    "    at rho = {} dB: analytic {:.6e}, mc {:.6e} (se {:.2e})",
                    x.rho_db, x.analytic, x.mc, x.std_error
                )?;
            }
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        if let Some(c) = self.clamp_events {
            writeln!(f, "clamp events: {c}")?;
        }
        if let Some(m) = &self.node_mapping {
            writeln!(f, "nlos rate node mapping: {m}")?;
        }
        write!(
            f,
            "overall: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}
