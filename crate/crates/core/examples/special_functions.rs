//! The two numerical building blocks: the exponential integral on the
//! negative axis and Gauss–Chebyshev quadrature.

use std::error::Error;

use pass_noma::numerics::{chebyshev_nodes, exp_integral_ei, gc_integrate};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("{:>10}  {:>22}  {:>22}", "x", "Ei(x)", "-e^x Ei(x)");
    for x in [-1e-6, -1e-3, -0.5, -1.0, -5.0, -30.0, -200.0] {
        let ei = exp_integral_ei(x)?;
        println!("{x:>10}  {ei:>22.15e}  {:>22.15e}", -x.exp() * ei);
    }
    // Ei(-1) = -0.219383934395520...
    assert!((exp_integral_ei(-1.0)? + 0.219_383_934_395_520_3).abs() < 1e-15);

    // ∫₀¹ ln(1+x) dx = 2 ln 2 - 1
    let exact = 2.0 * std::f64::consts::LN_2 - 1.0;
    for m in [4, 16, 100, 1000] {
        let rule = chebyshev_nodes(m)?;
        let v = gc_integrate(|x: f64| x.ln_1p(), 0.0, 1.0, &rule)?;
        println!("M = {m:>4}: {v:.12}  error {:.2e}", (v - exact).abs());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
