//! System configuration, derived link constants and the per-draw SINR evaluators.

mod channel;
mod config;
mod params;

pub use channel::{
    cdf_squared_distance, channel_power_los, sinr_f, sinr_n, sinr_n_to_f, ChannelCondition, Node,
    SicMode,
};
pub use config::{NetworkConfig, CONFIG_KEYS};
pub use params::{derive, DerivedParams, SPEED_OF_LIGHT};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid configuration: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("line {line}: unknown config key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: expected `key = value`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: key `{key}` given more than once")]
    DuplicateKey { line: usize, key: String },
    #[error("line {line}: cannot parse value `{value}` for `{key}`")]
    BadValue {
        line: usize,
        key: String,
        value: String,
    },
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("unknown {kind} `{value}`")]
    UnknownVariant { kind: &'static str, value: String },
    #[error("reading config: {0}")]
    Io(#[from] std::io::Error),
}
