use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Gauss–Legendre rule on `[-1, 1]`, nodes ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureRule1D<T> {
    pub points: Vec<T>,
    pub weights: Vec<T>,
    /// Highest polynomial degree integrated exactly.
    pub exactness_degree: usize,
}

impl<T: Scalar> QuadratureRule1D<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `(L_n(x), L_n'(x))` for `|x| < 1`.
fn legendre_with_derivative<T: Scalar>(n: usize, x: T) -> (T, T) {
    let one = T::one();
    let mut prev = one;
    let mut cur = x;
    for k in 1..n {
        let k_t = T::int(k);
        let next = (T::int(2 * k + 1) * x * cur - k_t * prev) / (k_t + one);
        prev = cur;
        cur = next;
    }
    let deriv = T::int(n) * (x * cur - prev) / (x * x - one);
    (cur, deriv)
}

/// `npts`-point Gauss–Legendre rule, exact up to degree `2·npts - 1`.
///
/// Roots come from Newton iteration on `L_npts` started at the Chebyshev
/// asymptotic guess; the rule is symmetric about 0 by construction.
pub fn gauss_rule<T: Scalar>(npts: usize) -> Result<QuadratureRule1D<T>> {
    if npts == 0 {
        return Err(Error::EmptyRule);
    }
    let zero = T::zero();
    let one = T::one();
    let two = T::lit(2.0);
    let mut points = vec![zero; npts];
    let mut weights = vec![zero; npts];
    if npts == 1 {
        weights[0] = two;
    } else {
        let tol = T::iteration_tolerance();
        let pi = T::lit(std::f64::consts::PI);
        for i in 0..npts / 2 {
            let mut x = (pi * (T::int(i) + T::lit(0.75)) / (T::int(npts) + T::lit(0.5))).cos();
            let mut deriv = one;
            for _ in 0..100 {
                let (value, d) = legendre_with_derivative(npts, x);
                let dx = value / d;
                x = x - dx;
                deriv = d;
                if dx.abs() <= tol {
                    deriv = legendre_with_derivative(npts, x).1;
                    break;
                }
            }
            let w = two / ((one - x * x) * deriv * deriv);
            points[npts - 1 - i] = x;
            points[i] = -x;
            weights[npts - 1 - i] = w;
            weights[i] = w;
        }
        if npts % 2 == 1 {
            let (_, d) = legendre_with_derivative(npts, zero);
            weights[npts / 2] = two / (d * d);
        }
    }
    Ok(QuadratureRule1D {
        points,
        weights,
        exactness_degree: 2 * npts - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{jacobi_eval, jacobi_norm};

    #[test]
    fn midpoint_rule() {
        let r = gauss_rule::<f64>(1).unwrap();
        assert_eq!(r.points, vec![0.0]);
        assert_eq!(r.weights, vec![2.0]);
        assert_eq!(r.exactness_degree, 1);
    }

    #[test]
    fn empty_rule_rejected() {
        assert_eq!(gauss_rule::<f64>(0), Err(Error::EmptyRule));
    }

    #[test]
    fn second_moment() {
        let r = gauss_rule::<f64>(2).unwrap();
        assert!((r.integrate(|x| x * x) - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn weights_sum_and_symmetry() {
        for n in 1..=40 {
            let r = gauss_rule::<f64>(n).unwrap();
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-14, "n={n} sum={s}");
            for i in 0..n {
                assert_eq!(r.points[i], -r.points[n - 1 - i]);
                assert!(r.weights[i] > 0.0);
            }
            assert!(r.points.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn monomial_exactness() {
        for n in 1..=20 {
            let r = gauss_rule::<f64>(n).unwrap();
            for d in 0..=r.exactness_degree {
                let exact = if d % 2 == 1 { 0.0 } else { 2.0 / (d as f64 + 1.0) };
                let got = r.integrate(|x| x.powi(d as i32));
                assert!((got - exact).abs() <= 1e-13 * exact.abs().max(1.0), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn weighted_jacobi_norm() {
        let r = gauss_rule::<f64>(12).unwrap();
        let got = r.integrate(|x| {
            let p = jacobi_eval(5, 1.0, 1.0, x).unwrap();
            p * p * (1.0 - x * x)
        });
        let exact = jacobi_norm(5, 1.0, 1).unwrap();
        assert!((got - exact).abs() < 1e-13 * exact);
    }

    #[test]
    fn single_precision_rule() {
        let r = gauss_rule::<f32>(8).unwrap();
        let s: f32 = r.weights.iter().sum();
        assert!((s - 2.0).abs() < 1e-5);
        assert!((r.integrate(|x| x.powi(6)) - 2.0 / 7.0).abs() < 1e-5);
    }
}
