use std::f64::consts::PI;

use super::NumericsError;

/// Order used by every quadrature-based evaluator unless overridden.
pub const DEFAULT_QUADRATURE_ORDER: usize = 1000;

/// Gauss–Chebyshev (first kind) rule of order `M`.
///
/// Nodes are `t_k = cos((2k-1)π/(2M))`, `k = 1..=M`, strictly decreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    // √(1 - t_k²), stored as sin((2k-1)π/(2M)) to avoid cancellation near ±1
    root_weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// `π/M`.
    pub fn weight_factor(&self) -> f64 {
        PI / self.order() as f64
    }

    /// Iterates `(t_k, √(1 - t_k²))`.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes
            .iter()
            .copied()
            .zip(self.root_weights.iter().copied())
    }

    pub fn integrate<F: FnMut(f64) -> f64>(
        &self,
        f: F,
        a: f64,
        b: f64,
    ) -> Result<f64, NumericsError> {
        gc_integrate(f, a, b, self)
    }
}

impl Default for QuadratureRule {
    fn default() -> Self {
        chebyshev_nodes(DEFAULT_QUADRATURE_ORDER).expect("default order is positive")
    }
}

pub fn chebyshev_nodes(order: usize) -> Result<QuadratureRule, NumericsError> {
    if order == 0 {
        return Err(NumericsError::ZeroOrder);
    }
    let m = order as f64;
    let (nodes, root_weights) = (1..=order)
        .map(|k| {
            let theta = (2 * k - 1) as f64 * PI / (2.0 * m);
            (theta.cos(), theta.sin())
        })
        .unzip();
    Ok(QuadratureRule {
        nodes,
        root_weights,
    })
}

/// `∫_a^b f(x) dx ≈ (b-a)/2 · π/M · Σ √(1-t_k²) f(a + (b-a)(t_k+1)/2)`.
pub fn gc_integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rule: &QuadratureRule,
) -> Result<f64, NumericsError> {
    if !(a < b) {
        return Err(NumericsError::EmptyInterval { a, b });
    }
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (t, w) in rule.points() {
        let x = a + half * (t + 1.0);
        let value = f(x);
        if !value.is_finite() {
            return Err(NumericsError::NonFinite { abscissa: x, value });
        }
        sum += w * value;
    }
    Ok(half * rule.weight_factor() * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_orders() {
        let r1 = chebyshev_nodes(1).unwrap();
        assert!(r1.nodes()[0].abs() < 1e-16);
        let r2 = chebyshev_nodes(2).unwrap();
        let h = 0.5f64.sqrt();
        assert!((r2.nodes()[0] - h).abs() < 1e-15);
        assert!((r2.nodes()[1] + h).abs() < 1e-15);
        let r4 = chebyshev_nodes(4).unwrap();
        assert!((r4.nodes()[0] - 0.923_879_532_511_286_7).abs() < 1e-15);
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(chebyshev_nodes(0), Err(NumericsError::ZeroOrder));
    }

    #[test]
    fn nodes_strictly_decreasing_inside_interval() {
        for m in [1, 2, 3, 10, 257] {
            let r = chebyshev_nodes(m).unwrap();
            assert_eq!(r.order(), m);
            assert!(r.nodes().iter().all(|t| t.abs() < 1.0));
            assert!(r.nodes().windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn constant_and_linear() {
        let r = chebyshev_nodes(200).unwrap();
        let c = gc_integrate(|_| 1.0, 0.0, 2.0, &r).unwrap();
        assert!((c - 2.0).abs() < 1e-3);
        let r = chebyshev_nodes(100).unwrap();
        let l = gc_integrate(|x| x, 0.0, 1.0, &r).unwrap();
        assert!((l - 0.5).abs() < 1e-3);
    }

    #[test]
    fn error_shrinks_with_order() {
        let err = |m| {
            let r = chebyshev_nodes(m).unwrap();
            (gc_integrate(|_| 1.0, -1.0, 1.0, &r).unwrap() - 2.0).abs()
        };
        assert!(err(1000) < err(50));
    }

    #[test]
    fn bad_interval_and_non_finite() {
        let r = chebyshev_nodes(4).unwrap();
        assert!(matches!(
            gc_integrate(|x| x, 1.0, 1.0, &r),
            Err(NumericsError::EmptyInterval { .. })
        ));
        match gc_integrate(|x| 1.0 / (x - 0.5 - 0.5 * r.nodes()[1]), 0.0, 1.0, &r) {
            Err(NumericsError::NonFinite { abscissa, .. }) => {
                assert!((abscissa - (0.5 + 0.5 * r.nodes()[1])).abs() < 1e-15)
            }
            other => panic!("expected non-finite error, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn linear_in_integrand(alpha in -5.0f64..5.0, beta in -5.0f64..5.0, m in 1usize..300) {
            let r = chebyshev_nodes(m).unwrap();
            let f = |x: f64| x.sin();
            let g = |x: f64| (x * x).exp();
            let combined = gc_integrate(|x| alpha * f(x) + beta * g(x), -0.3, 1.1, &r).unwrap();
            let split = alpha * gc_integrate(f, -0.3, 1.1, &r).unwrap()
                + beta * gc_integrate(g, -0.3, 1.1, &r).unwrap();
            prop_assert!((combined - split).abs() <= 1e-12 * (1.0 + combined.abs()));
        }
    }
}
