//! Jacobi, Legendre and integrated Jacobi/Legendre polynomials, their
//! orthogonality constants, and Gauss–Legendre rules on `[-1, 1]`.

mod gauss;
mod jacobi;

pub use gauss::{gauss_rule, QuadratureRule1D};
pub(crate) use jacobi::{int_jac, jac};
pub use jacobi::{
    integrated_jacobi_eval, integrated_legendre, jacobi_eval, jacobi_norm, legendre,
    mixed_legendre_jacobi_integral,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolynomialFamily {
    Jacobi,
    IntegratedJacobi,
    Legendre,
    IntegratedLegendre,
}

/// One univariate (integrated) Jacobi polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolynomialSpec<T> {
    family: PolynomialFamily,
    degree: usize,
    alpha: T,
    beta: T,
}

impl<T: Scalar> PolynomialSpec<T> {
    pub fn jacobi(degree: usize, alpha: T, beta: T) -> Result<Self> {
        jacobi::check_weight(alpha)?;
        jacobi::check_weight(beta)?;
        Ok(Self { family: PolynomialFamily::Jacobi, degree, alpha, beta })
    }

    pub fn legendre(degree: usize) -> Self {
        Self { family: PolynomialFamily::Legendre, degree, alpha: T::zero(), beta: T::zero() }
    }

    pub fn integrated_jacobi(degree: usize, alpha: T) -> Result<Self> {
        jacobi::check_weight(alpha)?;
        if degree == 0 {
            return Err(Error::ZeroIntegratedDegree);
        }
        Ok(Self { family: PolynomialFamily::IntegratedJacobi, degree, alpha, beta: T::zero() })
    }

    pub fn integrated_legendre(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroIntegratedDegree);
        }
        Ok(Self {
            family: PolynomialFamily::IntegratedLegendre,
            degree,
            alpha: T::zero(),
            beta: T::zero(),
        })
    }

    pub fn family(&self) -> PolynomialFamily {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn eval(&self, x: T) -> T {
        match self.family {
            PolynomialFamily::Jacobi => jacobi::jacobi(self.degree, self.alpha, self.beta, x),
            PolynomialFamily::Legendre => legendre(self.degree, x),
            PolynomialFamily::IntegratedJacobi => int_jac(self.degree, self.alpha, x),
            PolynomialFamily::IntegratedLegendre => integrated_legendre(self.degree, x),
        }
    }
}
