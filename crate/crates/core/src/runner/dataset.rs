use std::io::Write;
use std::path::Path;

use super::metric::{Engine, Metric};
use super::RunnerError;
use crate::model::{ChannelCondition, SicMode};

pub const COLUMNS: [&str; 12] = [
    "series",
    "x_db",
    "rho_db",
    "metric_id",
    "mode",
    "condition",
    "engine",
    "value",
    "std_error",
    "trials",
    "seed",
    "error",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub series: String,
    /// Swept axis value (equals `rho_db` on a ρ sweep).
    pub x_db: f64,
    pub rho_db: f64,
    pub metric: Metric,
    pub mode: Option<SicMode>,
    pub condition: Option<ChannelCondition>,
    pub engine: Engine,
    pub value: Option<f64>,
    pub std_error: Option<f64>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub error: Option<String>,
}

/// Sweep output: `# key=value` provenance lines plus one row per
/// evaluated point.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Dataset {
    pub meta: Vec<(String, String)>,
    pub rows: Vec<Row>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn parse_opt<T: std::str::FromStr>(field: &str, column: &str) -> Result<Option<T>, RunnerError> {
    if field.is_empty() {
        return Ok(None);
    }
    field
        .parse()
        .map(Some)
        .map_err(|_| RunnerError::Parse(format!("bad {column} `{field}`")))
}

impl Dataset {
    pub fn meta_value(&self, key: &str) -> Option<&str> {
        self.meta
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn write_to(&self, mut out: impl Write) -> Result<(), RunnerError> {
        let io = |e: std::io::Error| RunnerError::Io {
            path: "<output>".into(),
            source: e,
        };
        for (k, v) in &self.meta {
            writeln!(out, "# {k}={v}").map_err(io)?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(COLUMNS).map_err(csv_err)?;
        for r in &self.rows {
            w.write_record([
                r.series.clone(),
                r.x_db.to_string(),
                r.rho_db.to_string(),
                r.metric.to_string(),
                opt(&r.mode),
                opt(&r.condition),
                r.engine.to_string(),
                opt(&r.value),
                opt(&r.std_error),
                opt(&r.trials),
                opt(&r.seed),
                r.error.clone().unwrap_or_default(),
            ])
            .map_err(csv_err)?;
        }
        w.flush().map_err(io)
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn save(&self, path: &Path) -> Result<(), RunnerError> {
        let file = std::fs::File::create(path).map_err(|e| RunnerError::Io {
            path: path.into(),
            source: e,
        })?;
        self.write_to(std::io::BufWriter::new(file))
            .map_err(|e| match e {
                RunnerError::Io { source, .. } => RunnerError::Io {
                    path: path.into(),
                    source,
                },
                other => other,
            })
    }

    pub fn load(path: &Path) -> Result<Self, RunnerError> {
        let text = std::fs::read_to_string(path).map_err(|e| RunnerError::Io {
            path: path.into(),
            source: e,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, RunnerError> {
        let meta = text
            .lines()
            .map_while(|l| l.strip_prefix("# "))
            .filter_map(|l| l.split_once('='))
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header = reader.headers().map_err(csv_err)?.clone();
        if header.iter().ne(COLUMNS) {
            return Err(RunnerError::Parse(format!(
                "unexpected header {:?}",
                header
            )));
        }
        let mut rows = Vec::new();
        for rec in reader.records() {
            let rec = rec.map_err(csv_err)?;
            let f = |i: usize| rec.get(i).unwrap_or("");
            let num = |i: usize| -> Result<f64, RunnerError> {
                f(i).parse()
                    .map_err(|_| RunnerError::Parse(format!("bad {} `{}`", COLUMNS[i], f(i))))
            };
            let model = |e: crate::model::ModelError| RunnerError::Parse(e.to_string());
            rows.push(Row {
                series: f(0).to_string(),
                x_db: num(1)?,
                rho_db: num(2)?,
                metric: f(3).parse()?,
                mode: if f(4).is_empty() {
                    None
                } else {
                    Some(f(4).parse().map_err(model)?)
                },
                condition: if f(5).is_empty() {
                    None
                } else {
                    Some(f(5).parse().map_err(model)?)
                },
                engine: f(6).parse()?,
                value: parse_opt(f(7), COLUMNS[7])?,
                std_error: parse_opt(f(8), COLUMNS[8])?,
                trials: parse_opt(f(9), COLUMNS[9])?,
                seed: parse_opt(f(10), COLUMNS[10])?,
                error: Some(f(11).to_string()).filter(|s| !s.is_empty()),
            });
        }
        Ok(Dataset { meta, rows })
    }
}

fn csv_err(e: csv::Error) -> RunnerError {
    RunnerError::Parse(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Dataset {
        Dataset {
            meta: vec![
                ("seed".into(), "7".into()),
                ("config.a_n".into(), "0.3".into()),
            ],
            rows: vec![
                Row {
                    series: "R_D=20".into(),
                    x_db: 12.0,
                    rho_db: 12.0,
                    metric: Metric::BlockageN,
                    mode: Some(SicMode::Nisic),
                    condition: None,
                    engine: Engine::Mc,
                    value: Some(0.123_456_789_012_345_67),
                    std_error: Some(3.2e-4),
                    trials: Some(1000),
                    seed: Some(u64::MAX),
                    error: None,
                },
                Row {
                    series: "base".into(),
                    x_db: -3.5,
                    rho_db: 0.1,
                    metric: Metric::BlockageF,
                    mode: None,
                    condition: Some(ChannelCondition::Los),
                    engine: Engine::Analytic,
                    value: None,
                    std_error: None,
                    trials: None,
                    seed: None,
                    error: Some("far node is infeasible: a, \"quoted\"".into()),
                },
            ],
        }
    }

    #[test]
    fn round_trip_is_exact() {
        let ds = sample();
        let text = ds.to_csv_string();
        assert!(text.starts_with("# seed=7\n# config.a_n=0.3\nseries,x_db,"));
        assert_eq!(Dataset::parse(&text).unwrap(), ds);
    }

    #[test]
    fn rejects_foreign_header() {
        assert!(matches!(
            Dataset::parse("a,b\n1,2\n"),
            Err(RunnerError::Parse(_))
        ));
    }
}
