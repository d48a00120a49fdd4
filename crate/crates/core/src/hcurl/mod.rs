//! Interior H(curl) shape functions, their auxiliary splitting and the
//! vector-valued dual auxiliary families.
//!
//! Every primal field is a signed sum of auxiliary fields (see [`split`]);
//! each auxiliary field `aI/aII/aIII` has one dual partner `B/C/D` with the
//! same multi-index. On the quadrilateral the type III functions carry the
//! indices `(1, j)` (first family) and `(i, 1)` (second family).

mod fields;
pub mod printed;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{enumerate, ShapeIndex, Tag};
use crate::refelem::ElementKind;
use crate::scalar::Scalar;

pub(crate) use fields::eval as eval_field;

/// A 2- or 3-component field value; unused trailing slots are zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VectorValue<T> {
    pub components: [T; 3],
    pub dim: usize,
}

impl<T: Scalar> VectorValue<T> {
    pub fn new(components: [T; 3], dim: usize) -> Self {
        Self { components, dim }
    }

    pub fn as_slice(&self) -> &[T] {
        &self.components[..self.dim]
    }

    pub fn dot(&self, other: &Self) -> T {
        self.as_slice().iter().zip(other.as_slice()).map(|(&a, &b)| a * b).sum()
    }

    pub fn norm_inf(&self) -> T {
        self.as_slice().iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }
}

/// Which of the two tetrahedral Q-polynomials to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QKind {
    /// `Q_{m-1,1}`, degree `m - 1`.
    Qm1,
    /// `Q_{m,2}`, degree `m`.
    Qm2,
}

pub fn q_polynomial<T: Scalar>(kind: QKind, l: usize, m: usize, chi: T) -> Result<T> {
    if l < 2 || m < 1 {
        return Err(Error::Unsupported(format!("Q polynomial needs l >= 2, m >= 1 (got l={l}, m={m})")));
    }
    Ok(match kind {
        QKind::Qm1 => fields::q_m1(l, m, chi),
        QKind::Qm2 => fields::q_m2(l, m, chi),
    })
}

fn in_range(kind: ElementKind, tag: Tag, [i, j, k]: [usize; 3], p: usize) -> bool {
    use Tag::*;
    match kind {
        ElementKind::Quad => {
            let r = |v: usize| (2..=p).contains(&v);
            match tag {
                I | II | DualI | DualII => r(i) && r(j),
                III | DualIII => (i == 1 && r(j)) || (r(i) && j == 1),
                AuxI | B => (1..=p).contains(&i) && r(j),
                AuxII | C => r(i) && (1..=p).contains(&j),
                _ => false,
            }
        }
        ElementKind::Triangle => {
            let base = j >= 1 && i + j <= p;
            match tag {
                I | II | AuxII | C | DualI | DualII => base && i >= 2,
                III | DualIII => base && i == 1,
                AuxI | B => base && i >= 1,
                _ => false,
            }
        }
        ElementKind::Tetrahedron => {
            let base = j >= 1 && k >= 1 && i + j + k <= p;
            match tag {
                I | II | III | AuxII | AuxIII | C | D | DualI | DualII | DualIII => base && i >= 2,
                IV | DualIV => base && i == 1,
                AuxI | B => base && i >= 1,
                _ => false,
            }
        }
        ElementKind::Hex => false,
    }
}

/// Primal type tags present on an element, in global block order.
pub fn primal_tags(kind: ElementKind) -> &'static [Tag] {
    match kind {
        ElementKind::Tetrahedron => &[Tag::I, Tag::II, Tag::III, Tag::IV],
        ElementKind::Hex => &[],
        _ => &[Tag::I, Tag::II, Tag::III],
    }
}

pub fn aux_tags(kind: ElementKind) -> &'static [Tag] {
    match kind {
        ElementKind::Tetrahedron => &[Tag::AuxI, Tag::AuxII, Tag::AuxIII],
        ElementKind::Hex => &[],
        _ => &[Tag::AuxI, Tag::AuxII],
    }
}

pub fn dual_aux_tags(kind: ElementKind) -> &'static [Tag] {
    match kind {
        ElementKind::Tetrahedron => &[Tag::B, Tag::C, Tag::D],
        ElementKind::Hex => &[],
        _ => &[Tag::B, Tag::C],
    }
}

/// Members of one tag up to degree `p`, lexicographic in the indices.
pub fn members(kind: ElementKind, tag: Tag, p: usize) -> Vec<ShapeIndex> {
    enumerate(kind.dim(), p, |i, j, k| in_range(kind, tag, [i, j, k], p))
        .into_iter()
        .map(|ind| ShapeIndex::new(kind, tag, ind))
        .collect()
}

/// Members of several tags, concatenated block by block.
pub fn members_of(kind: ElementKind, tags: &[Tag], p: usize) -> Vec<ShapeIndex> {
    tags.iter().flat_map(|&t| members(kind, t, p)).collect()
}

/// Checks that `idx` is a structurally valid H(curl) index (and `≤ p` when given).
pub fn validate(idx: &ShapeIndex, p: Option<usize>) -> Result<()> {
    if idx.element == ElementKind::Hex {
        return Err(Error::Unsupported("no H(curl) interior family on the hexahedron".into()));
    }
    let bound = p.unwrap_or(usize::MAX / 4);
    if in_range(idx.element, idx.tag, idx.indices, bound) {
        Ok(())
    } else {
        Err(idx.out_of_range("H(curl) index", p.unwrap_or(0)))
    }
}

fn check_tag(idx: &ShapeIndex, allowed: &[Tag], what: &'static str) -> Result<()> {
    validate(idx, None)?;
    if allowed.contains(&idx.tag) {
        Ok(())
    } else {
        Err(idx.out_of_range(what, 0))
    }
}

/// Expresses a primal field as a signed sum of auxiliary fields.
pub fn split(idx: &ShapeIndex) -> Result<Vec<(ShapeIndex, i8)>> {
    check_tag(idx, &[Tag::I, Tag::II, Tag::III, Tag::IV], "primal H(curl) index")?;
    let at = |t: Tag| idx.with_tag(t);
    let three = idx.element == ElementKind::Tetrahedron;
    let out = match idx.tag {
        Tag::I if three => vec![(at(Tag::AuxI), 1), (at(Tag::AuxII), 1), (at(Tag::AuxIII), 1)],
        Tag::II if three => vec![(at(Tag::AuxI), 1), (at(Tag::AuxII), -1), (at(Tag::AuxIII), 1)],
        Tag::III if three => vec![(at(Tag::AuxI), 1), (at(Tag::AuxII), 1), (at(Tag::AuxIII), -1)],
        Tag::I => vec![(at(Tag::AuxI), 1), (at(Tag::AuxII), 1)],
        Tag::II => vec![(at(Tag::AuxI), 1), (at(Tag::AuxII), -1)],
        Tag::III if idx.element == ElementKind::Quad && idx.j() == 1 => vec![(at(Tag::AuxII), -1)],
        Tag::III | Tag::IV => vec![(at(Tag::AuxI), 1)],
        _ => unreachable!(),
    };
    Ok(out)
}

fn value<T: Scalar>(idx: &ShapeIndex, native: &[T; 3]) -> VectorValue<T> {
    VectorValue::new(fields::eval(idx.element, idx.tag, idx.indices, native), idx.element.dim())
}

/// Primal field of type I–IV at a native point.
pub fn hcurl_primal_eval<T: Scalar>(idx: &ShapeIndex, native: &[T; 3]) -> Result<VectorValue<T>> {
    check_tag(idx, &[Tag::I, Tag::II, Tag::III, Tag::IV], "primal H(curl) index")?;
    Ok(value(idx, native))
}

/// Auxiliary field `aI/aII/aIII` at a native point.
pub fn hcurl_aux_eval<T: Scalar>(idx: &ShapeIndex, native: &[T; 3]) -> Result<VectorValue<T>> {
    check_tag(idx, &[Tag::AuxI, Tag::AuxII, Tag::AuxIII], "auxiliary H(curl) index")?;
    Ok(value(idx, native))
}

/// Dual auxiliary field `B/C/D` at a native point.
pub fn hcurl_dual_aux_eval<T: Scalar>(idx: &ShapeIndex, native: &[T; 3]) -> Result<VectorValue<T>> {
    check_tag(idx, &[Tag::B, Tag::C, Tag::D], "dual auxiliary H(curl) index")?;
    Ok(value(idx, native))
}

pub fn hcurl_primal_eval_cartesian<T: Scalar>(idx: &ShapeIndex, cart: [T; 3]) -> Result<VectorValue<T>> {
    hcurl_primal_eval(idx, &idx.element.cartesian_to_native(cart))
}

pub fn hcurl_aux_eval_cartesian<T: Scalar>(idx: &ShapeIndex, cart: [T; 3]) -> Result<VectorValue<T>> {
    hcurl_aux_eval(idx, &idx.element.cartesian_to_native(cart))
}

pub fn hcurl_dual_aux_eval_cartesian<T: Scalar>(idx: &ShapeIndex, cart: [T; 3]) -> Result<VectorValue<T>> {
    hcurl_dual_aux_eval(idx, &idx.element.cartesian_to_native(cart))
}

/// Evaluates a dual given as a linear combination of dual auxiliary fields,
/// e.g. the terms returned by `biorth::dual_terms`.
pub fn hcurl_dual_eval<T: Scalar>(terms: &[(ShapeIndex, T)], native: &[T; 3]) -> Result<VectorValue<T>> {
    let Some((first, _)) = terms.first() else {
        return Err(Error::Unsupported("empty dual combination".into()));
    };
    let dim = first.element.dim();
    let mut acc = [T::zero(); 3];
    for (idx, c) in terms {
        let v = hcurl_dual_aux_eval(idx, native)?;
        for (a, &x) in acc.iter_mut().zip(&v.components) {
            *a = *a + *c * x;
        }
    }
    Ok(VectorValue::new(acc, dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(kind: ElementKind, tag: Tag, ind: [usize; 3]) -> ShapeIndex {
        ShapeIndex::new(kind, tag, ind)
    }

    #[test]
    fn quad_type_one_vanishes_at_origin() {
        let v = hcurl_primal_eval(&id(ElementKind::Quad, Tag::I, [2, 2, 0]), &[0.0f64; 3]).unwrap();
        assert_eq!(v.as_slice(), &[0.0, 0.0]);
    }

    #[test]
    fn quad_aux_one_has_zero_second_component() {
        for idx in members(ElementKind::Quad, Tag::AuxI, 5) {
            let v = hcurl_aux_eval(&idx, &[0.3f64, -0.7, 0.0]).unwrap();
            assert_eq!(v.components[1], 0.0);
        }
    }

    #[test]
    fn triangle_edge_gradient_factor() {
        // aI_{1,j} / P̂^3_j(y) equals ((1-y)/4) (1, x/(1-y)).
        let (x, y) = (0.1f64, -0.4);
        let idx = id(ElementKind::Triangle, Tag::III, [1, 2, 0]);
        let v = hcurl_primal_eval_cartesian(&idx, [x, y, 0.0]).unwrap();
        let pj = crate::orthopoly::integrated_jacobi_eval(2, 3.0, y).unwrap();
        assert!((v.components[0] / pj - (1.0 - y) / 4.0).abs() < 1e-15);
        assert!((v.components[1] / pj - x / 4.0).abs() < 1e-15);
    }

    #[test]
    fn tet_type_four_first_component_independent_of_eta() {
        let idx = id(ElementKind::Tetrahedron, Tag::IV, [1, 2, 1]);
        let a = hcurl_primal_eval(&idx, &[-0.9f64, 0.2, -0.3]).unwrap();
        let b = hcurl_primal_eval(&idx, &[0.7f64, 0.2, -0.3]).unwrap();
        assert_eq!(a.components[0], b.components[0]);
    }

    #[test]
    fn triangle_b21_at_origin_is_zero() {
        let v = hcurl_dual_aux_eval_cartesian(&id(ElementKind::Triangle, Tag::B, [2, 1, 0]), [0.0f64; 3]).unwrap();
        assert_eq!(v.as_slice(), &[0.0, 0.0]);
    }

    #[test]
    fn triangle_c21_components() {
        // C_{2,1} = (3 P_1^{(1,1)}(η), -4 P_0^{(1,1)}(η)) ((1-y)/2) at y where P_0^{(4,0)} = 1.
        let (eta, y) = (0.4f64, 0.2);
        let v = hcurl_dual_aux_eval(&id(ElementKind::Triangle, Tag::C, [2, 1, 0]), &[eta, y, 0.0]).unwrap();
        let s = (1.0 - y) / 2.0;
        assert!((v.components[0] - 3.0 * 2.0 * eta * s).abs() < 1e-15);
        assert!((v.components[1] + 4.0 * s).abs() < 1e-15);
    }

    #[test]
    fn tet_d_third_component() {
        let (eta, chi, z) = (0.3f64, -0.2, 0.1);
        let v = hcurl_dual_aux_eval(&id(ElementKind::Tetrahedron, Tag::D, [2, 1, 2]), &[eta, chi, z]).unwrap();
        let expected = (1.0 - z) / 2.0 * crate::orthopoly::jacobi_eval(1, 6.0, 0.0, z).unwrap();
        assert!((v.components[2] - expected).abs() < 1e-15);
    }

    #[test]
    fn q_polynomial_examples() {
        for chi in [-1.0f64, -0.3, 0.0, 0.8] {
            assert!((q_polynomial(QKind::Qm1, 2, 1, chi).unwrap() - 1.25).abs() < 1e-15);
        }
        assert!((q_polynomial(QKind::Qm2, 2, 1, 0.0f64).unwrap() - 0.125).abs() < 1e-15);
        assert!(q_polynomial(QKind::Qm1, 1, 1, 0.0f64).is_err());
    }

    #[test]
    fn qm1_has_reduced_degree() {
        // The m-th divided difference of a degree m-1 polynomial vanishes.
        for l in 2..5 {
            for m in 1..=8 {
                let nodes: Vec<f64> = (0..=m).map(|s| -0.9 + 1.8 * s as f64 / m as f64).collect();
                let mut dd: Vec<f64> = nodes.iter().map(|&c| q_polynomial(QKind::Qm1, l, m, c).unwrap()).collect();
                let mut dd2: Vec<f64> = nodes.iter().map(|&c| q_polynomial(QKind::Qm2, l, m, c).unwrap()).collect();
                for level in 1..=m {
                    for s in 0..=(m - level) {
                        let h = nodes[s + level] - nodes[s];
                        dd[s] = (dd[s + 1] - dd[s]) / h;
                        dd2[s] = (dd2[s + 1] - dd2[s]) / h;
                    }
                }
                assert!(dd[0].abs() < 1e-8 * (1.0 + dd2[0].abs()), "l={l} m={m}: {}", dd[0]);
                assert!(dd2[0].abs() > 1e-6, "Qm2 should have full degree m");
            }
        }
    }

    #[test]
    fn splitting_matches_fields() {
        let pts = [[0.2f64, -0.3, 0.4], [-0.8, 0.9, -0.1], [0.0, 0.0, 0.0]];
        for kind in [ElementKind::Quad, ElementKind::Triangle, ElementKind::Tetrahedron] {
            for idx in members_of(kind, primal_tags(kind), 5) {
                for x in &pts {
                    let v = hcurl_primal_eval(&idx, x).unwrap();
                    let mut acc = [0.0; 3];
                    for (a, s) in split(&idx).unwrap() {
                        let w = hcurl_aux_eval(&a, x).unwrap();
                        for c in 0..3 {
                            acc[c] += s as f64 * w.components[c];
                        }
                    }
                    for c in 0..3 {
                        assert!((acc[c] - v.components[c]).abs() < 1e-14, "{idx}");
                    }
                }
            }
        }
    }

    #[test]
    fn member_counts_and_ranges() {
        assert_eq!(members(ElementKind::Quad, Tag::III, 4).len(), 6);
        assert_eq!(members(ElementKind::Quad, Tag::AuxI, 4).len(), 12);
        assert_eq!(members(ElementKind::Triangle, Tag::III, 4).len(), 3);
        assert_eq!(members(ElementKind::Tetrahedron, Tag::IV, 4).len(), 3);
        let prim = members_of(ElementKind::Triangle, primal_tags(ElementKind::Triangle), 6).len();
        let dual = members_of(ElementKind::Triangle, dual_aux_tags(ElementKind::Triangle), 6).len();
        assert_eq!(prim, dual);
        assert!(validate(&id(ElementKind::Hex, Tag::I, [2, 2, 2]), None).is_err());
        assert!(validate(&id(ElementKind::Triangle, Tag::III, [2, 1, 0]), None).is_err());
        assert!(hcurl_primal_eval(&id(ElementKind::Quad, Tag::B, [1, 2, 0]), &[0.0f64; 3]).is_err());
    }
}
