use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Jacobi polynomial `P_n^{(a,b)}(x)` by the three-term recurrence in `n`.
///
/// No weight validation: callers inside the crate also evaluate shifted
/// parameter pairs such as `(alpha - 1, 1)` whose first exponent may drop
/// below -1 while the polynomial itself stays well defined.
pub(crate) fn jacobi<T: Scalar>(n: usize, a: T, b: T, x: T) -> T {
    let one = T::one();
    let two = T::lit(2.0);
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = ((a - b) + (a + b + two) * x) / two;
    for k in 2..=n {
        let k_t = T::int(k);
        let c = two * k_t + a + b;
        let a1 = two * k_t * (k_t + a + b) * (c - two);
        let a2 = (c - one) * (a * a - b * b);
        let a3 = (c - two) * (c - one) * c;
        let a4 = two * (k_t + a - one) * (k_t + b - one) * c;
        let next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn check_weight<T: Scalar>(w: T) -> Result<()> {
    if w > -T::one() {
        Ok(())
    } else {
        Err(Error::InvalidWeight(w.to_f64().unwrap_or(f64::NAN)))
    }
}

/// `P_n^{(alpha,beta)}(x)`, orthogonal under `(1-x)^alpha (1+x)^beta` on `[-1,1]`.
pub fn jacobi_eval<T: Scalar>(n: usize, alpha: T, beta: T, x: T) -> Result<T> {
    check_weight(alpha)?;
    check_weight(beta)?;
    Ok(jacobi(n, alpha, beta, x))
}

/// Legendre polynomial `L_n(x)`.
#[inline]
pub fn legendre<T: Scalar>(n: usize, x: T) -> T {
    jacobi(n, T::zero(), T::zero(), x)
}

/// `P^{(a,b)}_n` with integer weights, the form every shape function uses.
#[inline]
pub(crate) fn jac<T: Scalar>(n: usize, a: usize, b: usize, x: T) -> T {
    jacobi(n, T::int(a), T::int(b), x)
}

/// Integrated Jacobi polynomial `∫_{-1}^x P_{n-1}^{(alpha,0)}(t) dt`.
///
/// Evaluated through the closed form `(1+x)/n · P_{n-1}^{(alpha-1,1)}(x)`,
/// so `n = 1` gives `1 + x`.
pub fn integrated_jacobi_eval<T: Scalar>(n: usize, alpha: T, x: T) -> Result<T> {
    check_weight(alpha)?;
    if n == 0 {
        return Err(Error::ZeroIntegratedDegree);
    }
    Ok(int_jac(n, alpha, x))
}

#[inline]
pub(crate) fn int_jac<T: Scalar>(n: usize, alpha: T, x: T) -> T {
    (T::one() + x) / T::int(n) * jacobi(n - 1, alpha - T::one(), T::one(), x)
}

/// Integrated Legendre polynomial `L̂_n(x) = ∫_{-1}^x L_{n-1}`, `n ≥ 1`.
///
/// For `n ≥ 2` this is `(x²-1)/(2(n-1)) · P_{n-2}^{(1,1)}(x)`; `L̂_1 = 1 + x`.
pub fn integrated_legendre<T: Scalar>(n: usize, x: T) -> T {
    assert!(n >= 1, "integrated Legendre polynomials start at degree 1");
    if n == 1 {
        return T::one() + x;
    }
    (x * x - T::one()) / T::int(2 * (n - 1)) * jac(n - 2, 1, 1, x)
}

/// Exact value of `∫ (1-x)^alpha (1+x)^beta (P_n^{(alpha,beta)})² dx` for `beta ∈ {0, 1}`.
pub fn jacobi_norm<T: Scalar>(n: usize, alpha: T, beta: u8) -> Result<T> {
    check_weight(alpha)?;
    let two = T::lit(2.0);
    let n_t = T::int(n);
    match beta {
        0 => Ok(two.powf(alpha + T::one()) / (two * n_t + alpha + T::one())),
        1 => Ok(two.powf(alpha + two) / (two * n_t + alpha + two) * (n_t + T::one())
            / (n_t + alpha + T::one())),
        _ => Err(Error::Unsupported(format!(
            "closed-form Jacobi norm only for beta in {{0, 1}}, got {beta}"
        ))),
    }
}

/// `∫_{-1}^1 L_i(x) P_k^{(1,1)}(x) dx`: `4/(2+k)` when `k ≥ i` with equal parity, else 0.
pub fn mixed_legendre_jacobi_integral<T: Scalar>(i: usize, k: usize) -> T {
    if k >= i && (k - i) % 2 == 0 {
        T::lit(4.0) / T::int(2 + k)
    } else {
        T::zero()
    }
}
