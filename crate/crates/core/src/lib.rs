//! Performance analysis of a pinching-antenna NOMA downlink: a near node
//! and a far node, uniformly placed in concentric disks under one
//! waveguide, share a superposition-coded transmission.
//!
//! * [`numerics`]: exponential integral and Gauss–Chebyshev quadrature.
//! * [`model`]: configuration, derived link constants, per-draw SINRs.
//! * [`analytic`]: closed-form blockage probabilities, ergodic rates,
//!   high-SNR asymptotes, diversity/slope estimators and throughput.
//! * [`simulator`]: seeded Monte Carlo oracle for every analytic metric,
//!   plus the orthogonal-access baseline.
//! * [`runner`]: SNR sweeps, figure presets, CSV datasets and
//!   analytic-vs-simulation comparison reports.
//!
//! ```
//! use pass_noma::{analytic, model::{derive, NetworkConfig}};
//!
//! let cfg = NetworkConfig::default();
//! let p = derive(&cfg, 54.0).unwrap();
//! let blockage = analytic::blockage_n_isic(&p, &cfg).unwrap();
//! assert!(blockage.probability > 0.0 && blockage.probability < 1.0);
//! ```

// `!(x > 0.0)` doubles as a NaN rejection
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod model;
pub mod numerics;
pub mod runner;
pub mod simulator;
