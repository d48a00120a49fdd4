//! Reference elements, the collapsed-coordinate (Duffy) charts of the
//! simplices, and tensorized Gauss rules on each element.
//!
//! Every shape function is evaluated in the element's *native* chart:
//! Cartesian `(x, y[, z])` on the quadrilateral and hexahedron, collapsed
//! `(η, y)` on the triangle and `(η, χ, z)` on the tetrahedron. Native
//! points are stored as `[T; 3]`, unused trailing slots are zero.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orthopoly::gauss_rule;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Quad,
    Hex,
    #[serde(rename = "tri")]
    Triangle,
    #[serde(rename = "tet")]
    Tetrahedron,
}

impl ElementKind {
    pub const ALL: [ElementKind; 4] = [Self::Quad, Self::Hex, Self::Triangle, Self::Tetrahedron];

    pub fn dim(self) -> usize {
        match self {
            Self::Quad | Self::Triangle => 2,
            Self::Hex | Self::Tetrahedron => 3,
        }
    }

    /// Short name used in index labels and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Self::Quad => "quad",
            Self::Hex => "hex",
            Self::Triangle => "tri",
            Self::Tetrahedron => "tet",
        }
    }

    pub fn is_simplex(self) -> bool {
        matches!(self, Self::Triangle | Self::Tetrahedron)
    }

    /// Lebesgue measure of the reference element.
    pub fn measure<T: Scalar>(self) -> T {
        match self {
            Self::Quad => T::lit(4.0),
            Self::Hex => T::lit(8.0),
            Self::Triangle => T::lit(2.0),
            Self::Tetrahedron => T::lit(4.0 / 3.0),
        }
    }

    /// Polynomial degree of the Duffy volume factor in the collapsed chart.
    pub fn volume_factor_degree(self) -> usize {
        match self {
            Self::Quad | Self::Hex => 0,
            Self::Triangle => 1,
            Self::Tetrahedron => 2,
        }
    }

    pub fn vertices<T: Scalar>(self) -> Vec<[T; 3]> {
        let v = |a: f64, b: f64, c: f64| [T::lit(a), T::lit(b), T::lit(c)];
        match self {
            Self::Quad => vec![v(-1., -1., 0.), v(1., -1., 0.), v(1., 1., 0.), v(-1., 1., 0.)],
            Self::Hex => {
                let mut out = Vec::with_capacity(8);
                for z in [-1., 1.] {
                    for (x, y) in [(-1., -1.), (1., -1.), (1., 1.), (-1., 1.)] {
                        out.push(v(x, y, z));
                    }
                }
                out
            }
            Self::Triangle => vec![v(-1., -1., 0.), v(1., -1., 0.), v(0., 1., 0.)],
            Self::Tetrahedron => {
                vec![v(-1., -1., -1.), v(1., -1., -1.), v(0., 1., -1.), v(0., 0., 1.)]
            }
        }
    }

    /// Maps a Cartesian point into the native chart.
    pub fn cartesian_to_native<T: Scalar>(self, cart: [T; 3]) -> [T; 3] {
        match self {
            Self::Quad | Self::Hex => cart,
            Self::Triangle | Self::Tetrahedron => {
                let c = cartesian_to_duffy(self, cart).expect("simplex");
                match self {
                    Self::Triangle => [c.eta, c.last, T::zero()],
                    _ => [c.eta, c.chi, c.last],
                }
            }
        }
    }

    pub fn native_to_cartesian<T: Scalar>(self, native: [T; 3]) -> [T; 3] {
        match self {
            Self::Quad | Self::Hex => native,
            Self::Triangle => {
                let p = CollapsedPoint { eta: native[0], chi: T::zero(), last: native[1] };
                duffy_to_cartesian(self, p).expect("simplex")
            }
            Self::Tetrahedron => {
                let p = CollapsedPoint { eta: native[0], chi: native[1], last: native[2] };
                duffy_to_cartesian(self, p).expect("simplex")
            }
        }
    }
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElementKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quad" => Ok(Self::Quad),
            "hex" => Ok(Self::Hex),
            "tri" | "triangle" => Ok(Self::Triangle),
            "tet" | "tetrahedron" => Ok(Self::Tetrahedron),
            other => Err(Error::Unsupported(format!("unknown element '{other}'"))),
        }
    }
}

/// A reference element together with its vertex list.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceElement<T> {
    pub kind: ElementKind,
    pub vertices: Vec<[T; 3]>,
}

impl<T: Scalar> ReferenceElement<T> {
    pub fn new(kind: ElementKind) -> Self {
        Self { kind, vertices: kind.vertices() }
    }
}

/// Collapsed coordinates on a simplex.
///
/// Triangle: `eta = 2x/(1-y)`, `last = y`, `chi` unused.
/// Tetrahedron: `eta = 4x/(1-2y-z)`, `chi = 2y/(1-z)`, `last = z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CollapsedPoint<T> {
    pub eta: T,
    pub chi: T,
    pub last: T,
}

fn simplex_only(kind: ElementKind) -> Result<()> {
    if kind.is_simplex() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{kind} has no collapsed chart")))
    }
}

pub fn duffy_to_cartesian<T: Scalar>(kind: ElementKind, p: CollapsedPoint<T>) -> Result<[T; 3]> {
    simplex_only(kind)?;
    let one = T::one();
    let half = T::lit(0.5);
    Ok(match kind {
        ElementKind::Triangle => [p.eta * (one - p.last) * half, p.last, T::zero()],
        _ => {
            let tz = (one - p.last) * half;
            [p.eta * (one - p.chi) * half * tz, p.chi * tz, p.last]
        }
    })
}

/// Inverse Duffy map. On a collapse line the singular coordinate is set to 0.
pub fn cartesian_to_duffy<T: Scalar>(kind: ElementKind, x: [T; 3]) -> Result<CollapsedPoint<T>> {
    simplex_only(kind)?;
    let one = T::one();
    let two = T::lit(2.0);
    let tiny = T::epsilon() * T::lit(4.0);
    let ratio = |num: T, den: T| if den.abs() <= tiny { T::zero() } else { num / den };
    Ok(match kind {
        ElementKind::Triangle => CollapsedPoint {
            eta: ratio(two * x[0], one - x[1]),
            chi: T::zero(),
            last: x[1],
        },
        _ => CollapsedPoint {
            eta: ratio(T::lit(4.0) * x[0], one - two * x[1] - x[2]),
            chi: ratio(two * x[1], one - x[2]),
            last: x[2],
        },
    })
}

/// Jacobian determinant of the collapsed chart.
pub fn duffy_volume_factor<T: Scalar>(kind: ElementKind, p: CollapsedPoint<T>) -> T {
    let half = T::lit(0.5);
    let one = T::one();
    match kind {
        ElementKind::Quad | ElementKind::Hex => one,
        ElementKind::Triangle => (one - p.last) * half,
        ElementKind::Tetrahedron => {
            let tz = (one - p.last) * half;
            (one - p.chi) * half * tz * tz
        }
    }
}

/// Tensor Gauss rule on an element with the volume factor folded into the weights.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ElementQuadrature<T> {
    pub kind: ElementKind,
    /// Cartesian coordinates of the nodes.
    pub points: Vec<[T; 3]>,
    /// The same nodes in the native chart.
    pub native: Vec<[T; 3]>,
    pub weights: Vec<T>,
    /// Total degree on simplices, per-direction degree on tensor elements.
    pub exactness_degree: usize,
}

impl<T: Scalar> ElementQuadrature<T> {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Integrates a function given in Cartesian coordinates.
    pub fn integrate<F: Fn([T; 3]) -> T>(&self, f: F) -> T {
        self.points.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Points per direction needed for `target_degree` on `kind`.
pub fn points_per_direction(kind: ElementKind, target_degree: usize) -> usize {
    (target_degree + kind.volume_factor_degree()).div_ceil(2) + 1
}

pub fn element_quadrature<T: Scalar>(kind: ElementKind, target_degree: usize) -> ElementQuadrature<T> {
    let n = points_per_direction(kind, target_degree);
    let rule = gauss_rule::<T>(n).expect("n >= 1");
    let dim = kind.dim();
    let total = n.pow(dim as u32);
    let mut points = Vec::with_capacity(total);
    let mut native = Vec::with_capacity(total);
    let mut weights = Vec::with_capacity(total);
    let zero = T::zero();
    for flat in 0..total {
        let mut node = [zero; 3];
        let mut w = T::one();
        let mut rest = flat;
        for d in (0..dim).rev() {
            let q = rest % n;
            rest /= n;
            node[d] = rule.points[q];
            w = w * rule.weights[q];
        }
        let vf = match kind {
            ElementKind::Quad | ElementKind::Hex => T::one(),
            ElementKind::Triangle => duffy_volume_factor(
                kind,
                CollapsedPoint { eta: node[0], chi: zero, last: node[1] },
            ),
            ElementKind::Tetrahedron => duffy_volume_factor(
                kind,
                CollapsedPoint { eta: node[0], chi: node[1], last: node[2] },
            ),
        };
        points.push(kind.native_to_cartesian(node));
        native.push(node);
        weights.push(w * vf);
    }
    ElementQuadrature { kind, points, native, weights, exactness_degree: target_degree }
}
