//! Dual-coefficient L² projection onto the interior span.

use std::f64::consts::PI;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::biorth::{assemble_gram, dual_family, tabulate, verify_identity, BiorthReport, DualMode};
use crate::error::{Error, Result};
use crate::family::{BasisFamily, CombinedFamily, FamilySpec, Role, ShapeFamily};
use crate::index::ShapeIndex;
use crate::refelem::{element_quadrature, ElementQuadrature};
use crate::scalar::Scalar;

/// Coefficients `g_i = ∫ u · ψ_i` and the error of `Σ g_i φ_i`.
#[derive(Debug, Clone)]
pub struct ProjectionResult<T> {
    pub spec: FamilySpec,
    pub coefficients: Vec<(ShapeIndex, T)>,
    pub l2_error: T,
    /// Max pointwise error over the quadrature points.
    pub linf_error_sampled: T,
}

impl<T: Scalar> ProjectionResult<T> {
    pub fn values(&self) -> Vec<T> {
        self.coefficients.iter().map(|(_, v)| *v).collect()
    }

    pub fn to_json(&self) -> Value {
        let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
        json!({
            "family": {
                "element": self.spec.element.name(),
                "space": self.spec.space.name(),
                "p": self.spec.p,
            },
            "coefficients": self
                .coefficients
                .iter()
                .map(|(idx, v)| json!({"index": idx.to_string(), "value": f(*v)}))
                .collect::<Vec<_>>(),
            "l2_error": f(self.l2_error),
            "linf_error_sampled": f(self.linf_error_sampled),
        })
    }
}

/// Precomputed tabulations for repeated projections onto one family.
pub struct Projector<T> {
    pub spec: FamilySpec,
    pub quad: ElementQuadrature<T>,
    primal: BasisFamily,
    duals: CombinedFamily<T>,
    primal_tab: Vec<T>,
    dual_tab: Vec<T>,
}

impl<T: Scalar> Projector<T> {
    /// Uses the normalized oracle duals and a rule of degree `2p + quad_margin`.
    pub fn new(spec: FamilySpec, quad_margin: usize) -> Result<Self> {
        let duals = dual_family(spec, DualMode::Oracle, quad_margin)?;
        Ok(Self::with_duals(spec, duals, quad_margin))
    }

    pub fn with_duals(spec: FamilySpec, duals: CombinedFamily<T>, quad_margin: usize) -> Self {
        let primal = BasisFamily::new(spec, Role::Primal);
        let quad = element_quadrature(spec.element, 2 * spec.p + quad_margin);
        let primal_tab = tabulate::<T>(&primal, &quad);
        let dual_tab = tabulate::<T>(&duals, &quad);
        Self { spec, quad, primal, duals, primal_tab, dual_tab }
    }

    pub fn members(&self) -> &[ShapeIndex] {
        ShapeFamily::<T>::members(&self.primal)
    }

    fn vd(&self) -> usize {
        self.spec.value_dim()
    }

    /// `u` sampled at the quadrature points (Cartesian coordinates).
    fn sample<F: Fn(&[T; 3]) -> [T; 3]>(&self, u: F) -> Vec<[T; 3]> {
        self.quad.points.iter().map(u).collect()
    }

    fn coefficients_from(&self, samples: &[[T; 3]]) -> Vec<T> {
        let (nq, vd) = (self.quad.len(), self.vd());
        (0..self.members().len())
            .map(|m| {
                let mut acc = T::zero();
                for (q, s) in samples.iter().enumerate() {
                    let b = &self.dual_tab[(m * nq + q) * vd..(m * nq + q + 1) * vd];
                    let dot = b.iter().zip(s).fold(T::zero(), |a, (&x, &y)| a + x * y);
                    acc = acc + self.quad.weights[q] * dot;
                }
                acc
            })
            .collect()
    }

    /// Dual coefficients of `u`.
    pub fn coefficients<F: Fn(&[T; 3]) -> [T; 3]>(&self, u: F) -> Vec<T> {
        self.coefficients_from(&self.sample(u))
    }

    pub fn project<F: Fn(&[T; 3]) -> [T; 3]>(&self, u: F) -> ProjectionResult<T> {
        let samples = self.sample(u);
        let g = self.coefficients_from(&samples);
        let (nq, vd) = (self.quad.len(), self.vd());
        let mut l2 = T::zero();
        let mut linf = T::zero();
        for (q, s) in samples.iter().enumerate() {
            let mut err2 = T::zero();
            for c in 0..vd {
                let mut pu = T::zero();
                for (m, &gm) in g.iter().enumerate() {
                    pu = pu + gm * self.primal_tab[(m * nq + q) * vd + c];
                }
                let e = s[c] - pu;
                err2 = err2 + e * e;
                linf = linf.max(e.abs());
            }
            l2 = l2 + self.quad.weights[q] * err2;
        }
        ProjectionResult {
            spec: self.spec,
            coefficients: self.members().iter().copied().zip(g).collect(),
            l2_error: l2.sqrt(),
            linf_error_sampled: linf,
        }
    }

    /// `Σ g_i φ_i` at a native point.
    pub fn reconstruct(&self, coefficients: &[T], native: &[T; 3]) -> [T; 3] {
        let vd = self.vd();
        let mut out = [T::zero(); 3];
        let mut buf = [T::zero(); 3];
        for (m, &g) in coefficients.iter().enumerate() {
            self.primal.eval_native(m, native, &mut buf[..vd]);
            for c in 0..vd {
                out[c] = out[c] + g * buf[c];
            }
        }
        out
    }

    pub fn reconstruct_cartesian(&self, coefficients: &[T], cart: &[T; 3]) -> [T; 3] {
        self.reconstruct(coefficients, &self.spec.element.cartesian_to_native(*cart))
    }

    pub fn duals(&self) -> &CombinedFamily<T> {
        &self.duals
    }
}

/// One-shot projection of `u` onto the family `spec`.
pub fn project<T: Scalar, F: Fn(&[T; 3]) -> [T; 3]>(
    u: F,
    spec: FamilySpec,
    quad_margin: usize,
) -> Result<ProjectionResult<T>> {
    Ok(Projector::new(spec, quad_margin)?.project(u))
}

/// Checks that the primal basis against its normalized duals is the identity.
pub fn projection_matrix_diagnostic<T: Scalar>(spec: FamilySpec, quad_margin: usize, tol: T) -> Result<BiorthReport<T>> {
    let duals = dual_family::<T>(spec, DualMode::Oracle, quad_margin)?;
    projection_matrix_diagnostic_with(spec, &duals, quad_margin, tol)
}

/// Identity check against an arbitrary dual family.
pub fn projection_matrix_diagnostic_with<T: Scalar>(
    spec: FamilySpec,
    duals: &dyn ShapeFamily<T>,
    quad_margin: usize,
    tol: T,
) -> Result<BiorthReport<T>> {
    let primal = BasisFamily::new(spec, Role::Primal);
    let g = assemble_gram::<T>(&primal, duals, quad_margin)?;
    Ok(verify_identity(&g, tol))
}

/// Built-in functions for projection experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunction {
    /// `sin(πx) sin(πy) [sin(πz)]` in every component.
    Sin,
    /// A fixed low-degree polynomial.
    Poly,
    Zero,
}

impl TestFunction {
    pub fn name(self) -> &'static str {
        match self {
            Self::Sin => "sin",
            Self::Poly => "poly",
            Self::Zero => "zero",
        }
    }

    /// Value at a Cartesian point; `dim` is the element dimension.
    pub fn eval<T: Scalar>(self, x: &[T; 3], dim: usize) -> [T; 3] {
        let pi = T::lit(PI);
        match self {
            Self::Zero => [T::zero(); 3],
            Self::Sin => {
                let mut s = (pi * x[0]).sin() * (pi * x[1]).sin();
                if dim == 3 {
                    s = s * (pi * x[2]).sin();
                }
                [s; 3]
            }
            Self::Poly => {
                let (a, b, c) = (x[0], x[1], x[2]);
                let h = T::lit(0.5);
                [a * a * b + h * b * b * b - a * c, a * b - c * c, b * c + a]
            }
        }
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sin" => Ok(Self::Sin),
            "poly" => Ok(Self::Poly),
            "zero" => Ok(Self::Zero),
            other => Err(Error::Unsupported(format!("unknown function '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Role;
    use crate::index::Space;
    use crate::refelem::ElementKind;

    #[test]
    fn basis_function_projects_to_unit_vector() {
        let spec = FamilySpec::new(ElementKind::Triangle, Space::HCurl, 5).unwrap();
        let proj = Projector::<f64>::new(spec, 6).unwrap();
        let target = 3;
        let fam = BasisFamily::new(spec, Role::Primal);
        let res = proj.project(|x| {
            let mut out = [0.0; 3];
            fam.eval_native(target, &ElementKind::Triangle.cartesian_to_native(*x), &mut out[..2]);
            out
        });
        for (m, (_, g)) in res.coefficients.iter().enumerate() {
            let e = if m == target { 1.0 } else { 0.0 };
            assert!((g - e).abs() < 1e-11, "{m}: {g}");
        }
        assert!(res.l2_error <= 1e-12);
    }

    #[test]
    fn zero_projects_to_zero() {
        let spec = FamilySpec::new(ElementKind::Quad, Space::H1, 4).unwrap();
        let res = project::<f64, _>(|x| TestFunction::Zero.eval(x, 2), spec, 6).unwrap();
        assert!(res.coefficients.iter().all(|(_, g)| *g == 0.0));
        assert_eq!(res.l2_error, 0.0);
    }

    #[test]
    fn diagnostic_detects_unnormalized_duals() {
        let spec = FamilySpec::new(ElementKind::Triangle, Space::H1, 6).unwrap();
        let raw = BasisFamily::new(spec, Role::DualAux);
        let r = projection_matrix_diagnostic_with::<f64>(spec, &raw, 6, 1e-10).unwrap();
        assert!(!r.pass);
        assert!(r.max_offdiag_rel < 1e-12);
        assert!(projection_matrix_diagnostic::<f64>(spec, 6, 1e-10).unwrap().pass);
    }

    #[test]
    fn json_shape() {
        let spec = FamilySpec::new(ElementKind::Quad, Space::H1, 3).unwrap();
        let res = project::<f64, _>(|x| TestFunction::Poly.eval(x, 2), spec, 6).unwrap();
        let v = res.to_json();
        assert_eq!(v["family"]["element"], "quad");
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 4);
        assert_eq!(v["coefficients"][0]["index"], "quad/u/2,2");
    }
}
