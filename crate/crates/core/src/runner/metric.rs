use std::fmt;
use std::str::FromStr;

use super::RunnerError;
use crate::model::{ChannelCondition, SicMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    BlockageN,
    BlockageF,
    AsymBlockageN,
    AsymBlockageF,
    RateN,
    RateF,
    RateUpperN,
    AsymRateF,
    ThroughputDc,
    ThroughputLt,
    OmaBlockageN,
    OmaBlockageF,
    OmaRateN,
    OmaRateF,
    OmaSumRate,
    OmaThroughputDc,
}

const NAMES: [(Metric, &str); 16] = [
    (Metric::BlockageN, "blockage_n"),
    (Metric::BlockageF, "blockage_f"),
    (Metric::AsymBlockageN, "asym_blockage_n"),
    (Metric::AsymBlockageF, "asym_blockage_f"),
    (Metric::RateN, "rate_n"),
    (Metric::RateF, "rate_f"),
    (Metric::RateUpperN, "rate_upper_n"),
    (Metric::AsymRateF, "asym_rate_f"),
    (Metric::ThroughputDc, "throughput_dc"),
    (Metric::ThroughputLt, "throughput_lt"),
    (Metric::OmaBlockageN, "oma_blockage_n"),
    (Metric::OmaBlockageF, "oma_blockage_f"),
    (Metric::OmaRateN, "oma_rate_n"),
    (Metric::OmaRateF, "oma_rate_f"),
    (Metric::OmaSumRate, "oma_sum_rate"),
    (Metric::OmaThroughputDc, "oma_throughput_dc"),
];

impl Metric {
    pub fn all() -> impl Iterator<Item = Metric> {
        NAMES.iter().map(|(m, _)| *m)
    }

    pub fn name(self) -> &'static str {
        NAMES
            .iter()
            .find(|(m, _)| *m == self)
            .map(|(_, n)| *n)
            .unwrap()
    }

    pub fn uses_mode(self) -> bool {
        matches!(
            self,
            Metric::BlockageN
                | Metric::AsymBlockageN
                | Metric::RateN
                | Metric::ThroughputDc
                | Metric::ThroughputLt
        )
    }

    pub fn uses_condition(self) -> bool {
        matches!(
            self,
            Metric::BlockageF
                | Metric::AsymBlockageF
                | Metric::RateF
                | Metric::AsymRateF
                | Metric::ThroughputDc
                | Metric::ThroughputLt
                | Metric::OmaBlockageF
                | Metric::OmaRateF
                | Metric::OmaSumRate
                | Metric::OmaThroughputDc
        )
    }

    pub fn has_analytic(self) -> bool {
        !self.is_oma()
    }

    pub fn has_mc(self) -> bool {
        !matches!(
            self,
            Metric::AsymBlockageN | Metric::AsymBlockageF | Metric::RateUpperN | Metric::AsymRateF
        )
    }

    pub fn is_oma(self) -> bool {
        matches!(
            self,
            Metric::OmaBlockageN
                | Metric::OmaBlockageF
                | Metric::OmaRateN
                | Metric::OmaRateF
                | Metric::OmaSumRate
                | Metric::OmaThroughputDc
        )
    }

    pub fn is_probability(self) -> bool {
        matches!(
            self,
            Metric::BlockageN
                | Metric::BlockageF
                | Metric::AsymBlockageN
                | Metric::OmaBlockageN
                | Metric::OmaBlockageF
        )
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = RunnerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(m, _)| *m)
            .ok_or_else(|| RunnerError::Validation(format!("unknown metric `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    Analytic,
    Mc,
    #[default]
    Both,
}

impl Engine {
    pub fn wants_analytic(self) -> bool {
        self != Engine::Mc
    }

    pub fn wants_mc(self) -> bool {
        self != Engine::Analytic
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Analytic => "analytic",
            Engine::Mc => "mc",
            Engine::Both => "both",
        })
    }
}

impl FromStr for Engine {
    type Err = RunnerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "analytic" => Ok(Engine::Analytic),
            "mc" => Ok(Engine::Mc),
            "both" => Ok(Engine::Both),
            _ => Err(RunnerError::Validation(format!(
                "unknown engine `{s}` (analytic, mc, both)"
            ))),
        }
    }
}

/// One curve: a metric with its SIC mode and far-node link condition.
/// Fields the metric ignores are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MetricSpec {
    pub metric: Metric,
    pub mode: Option<SicMode>,
    pub condition: Option<ChannelCondition>,
    pub engine: Engine,
}

impl MetricSpec {
    pub fn new(metric: Metric, mode: SicMode, condition: ChannelCondition, engine: Engine) -> Self {
        MetricSpec {
            metric,
            mode: metric.uses_mode().then_some(mode),
            condition: metric.uses_condition().then_some(condition),
            engine,
        }
    }

    pub fn mode_or_default(&self) -> SicMode {
        self.mode.unwrap_or(SicMode::Isic)
    }

    pub fn condition_or_default(&self) -> ChannelCondition {
        self.condition.unwrap_or(ChannelCondition::Los)
    }

    /// Parses `metric[:mode][:condition]`, e.g. `blockage_n:nisic` or
    /// `throughput_lt:nisic:nlos`. Omitted qualifiers default to ISIC/LoS.
    pub fn parse(text: &str, engine: Engine) -> Result<Self, RunnerError> {
        let mut parts = text.split(':');
        let metric: Metric = parts.next().unwrap_or_default().parse()?;
        let (mut mode, mut condition) = (SicMode::Isic, ChannelCondition::Los);
        for q in parts {
            if let Ok(m) = q.parse::<SicMode>() {
                mode = m;
            } else if let Ok(c) = q.parse::<ChannelCondition>() {
                condition = c;
            } else {
                return Err(RunnerError::Validation(format!(
                    "unknown qualifier `{q}` in `{text}`"
                )));
            }
        }
        Ok(MetricSpec::new(metric, mode, condition, engine))
    }

    /// Label used for seeding and for grouping in reports.
    pub fn key(&self) -> String {
        let mut key = self.metric.name().to_string();
        if let Some(m) = self.mode {
            key.push(':');
            key.push_str(&m.to_string());
        }
        if let Some(c) = self.condition {
            key.push(':');
            key.push_str(&c.to_string());
        }
        key
    }
}
