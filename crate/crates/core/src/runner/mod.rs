//! Sweeps over transmit SNR, figure presets, CSV datasets and
//! analytic-versus-simulation reports.

mod compare;
mod dataset;
mod metric;
mod preset;
mod sweep;

use std::path::PathBuf;

pub use compare::{
    compare_report, CompareReport, MetricComparison, Mismatch, ABS_FLOOR, SE_MULTIPLIER,
};
pub use dataset::{Dataset, Row, COLUMNS};
pub use metric::{Engine, Metric, MetricSpec};
pub use preset::{
    FigurePreset, PresetOptions, ALL_PRESETS, ANTENNA_COUNTS, CELL_RADII_M, DEFAULT_OMEGA_I_LIST,
};
pub use sweep::{run_sweep, Series, SweepAxis, SweepSpec};

use thiserror::Error;

use crate::model::ModelError;

#[derive(Debug, Error)]
pub enum RunnerError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed dataset: {0}")]
    Parse(String),
}

impl RunnerError {
    /// Process exit status: `1` for bad input, `3` for I/O trouble.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunnerError::Validation(_) | RunnerError::Model(_) => 1,
            RunnerError::Io { .. } | RunnerError::Parse(_) => 3,
        }
    }
}
