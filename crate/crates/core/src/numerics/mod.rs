//! Special functions and quadrature shared by the closed-form evaluators.

mod ei;
mod quadrature;

pub use ei::exp_integral_ei;
pub(crate) use ei::scaled_e1;
pub use quadrature::{chebyshev_nodes, gc_integrate, QuadratureRule, DEFAULT_QUADRATURE_ORDER};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("exponential integral is only defined here for negative arguments, got {0}")]
    Domain(f64),
    #[error("quadrature order must be at least 1")]
    ZeroOrder,
    #[error("integration interval is empty or reversed: [{a}, {b}]")]
    EmptyInterval { a: f64, b: f64 },
    #[error("integrand is not finite at x = {abscissa} (value {value})")]
    NonFinite { abscissa: f64, value: f64 },
}
