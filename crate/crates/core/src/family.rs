//! Finite families of shape functions that can be tabulated and paired.

use crate::error::{Error, Result};
use crate::h1;
use crate::hcurl;
use crate::index::{ShapeIndex, Space, Tag};
use crate::refelem::ElementKind;
use crate::scalar::Scalar;

/// Element, space and polynomial degree of an interior family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub element: ElementKind,
    pub space: Space,
    pub p: usize,
}

impl FamilySpec {
    pub fn new(element: ElementKind, space: Space, p: usize) -> Result<Self> {
        if element == ElementKind::Hex && space == Space::HCurl {
            return Err(Error::Unsupported("hcurl on hex".into()));
        }
        if p < 2 {
            return Err(Error::Unsupported(format!("p must be at least 2 (got {p})")));
        }
        Ok(Self { element, space, p })
    }

    pub fn value_dim(&self) -> usize {
        match self.space {
            Space::H1 => 1,
            Space::HCurl => self.element.dim(),
        }
    }
}

/// Which closed-form family a [`BasisFamily`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// The interior basis (H¹ bubbles, H(curl) types I–IV).
    Primal,
    /// Auxiliary splitting fields; for H¹ this is the primal basis itself.
    Aux,
    /// Unnormalized partners of [`Role::Aux`].
    DualAux,
}

/// Anything that can be evaluated member by member at native points.
pub trait ShapeFamily<T: Scalar>: Sync {
    fn element(&self) -> ElementKind;
    fn value_dim(&self) -> usize;
    /// Polynomial degree parameter the family was built for.
    fn degree(&self) -> usize;
    fn members(&self) -> &[ShapeIndex];
    /// Writes member `m` at `native` into `out[..value_dim]`.
    fn eval_native(&self, m: usize, native: &[T; 3], out: &mut [T]);
}

/// Evaluates any closed-form member; scalar values occupy slot 0.
pub(crate) fn eval_closed_form<T: Scalar>(idx: &ShapeIndex, native: &[T; 3]) -> [T; 3] {
    let z = T::zero();
    match idx.tag {
        Tag::U => [h1::primal(idx.element, idx.indices, native), z, z],
        Tag::Bh => [h1::dual(idx.element, idx.indices, native), z, z],
        tag => hcurl::eval_field(idx.element, tag, idx.indices, native),
    }
}

#[derive(Debug, Clone)]
pub struct BasisFamily {
    pub spec: FamilySpec,
    pub role: Role,
    members: Vec<ShapeIndex>,
}

impl BasisFamily {
    pub fn new(spec: FamilySpec, role: Role) -> Self {
        let kind = spec.element;
        let members = match (spec.space, role) {
            (Space::H1, Role::Primal | Role::Aux) => tagged(kind, Tag::U, spec.p),
            (Space::H1, Role::DualAux) => tagged(kind, Tag::Bh, spec.p),
            (Space::HCurl, Role::Primal) => hcurl::members_of(kind, hcurl::primal_tags(kind), spec.p),
            (Space::HCurl, Role::Aux) => hcurl::members_of(kind, hcurl::aux_tags(kind), spec.p),
            (Space::HCurl, Role::DualAux) => hcurl::members_of(kind, hcurl::dual_aux_tags(kind), spec.p),
        };
        Self { spec, role, members }
    }
}

fn tagged(kind: ElementKind, tag: Tag, p: usize) -> Vec<ShapeIndex> {
    h1::members(kind, p).into_iter().map(|ind| ShapeIndex::new(kind, tag, ind)).collect()
}

impl<T: Scalar> ShapeFamily<T> for BasisFamily {
    fn element(&self) -> ElementKind {
        self.spec.element
    }

    fn value_dim(&self) -> usize {
        self.spec.value_dim()
    }

    fn degree(&self) -> usize {
        self.spec.p
    }

    fn members(&self) -> &[ShapeIndex] {
        &self.members
    }

    fn eval_native(&self, m: usize, native: &[T; 3], out: &mut [T]) {
        let v = eval_closed_form(&self.members[m], native);
        out.copy_from_slice(&v[..out.len()]);
    }
}

/// Members given as linear combinations of closed-form functions,
/// e.g. normalized or recombined duals.
#[derive(Debug, Clone)]
pub struct CombinedFamily<T> {
    pub spec: FamilySpec,
    members: Vec<ShapeIndex>,
    terms: Vec<Vec<(ShapeIndex, T)>>,
}

impl<T: Scalar> CombinedFamily<T> {
    pub fn new(spec: FamilySpec, members: Vec<ShapeIndex>, terms: Vec<Vec<(ShapeIndex, T)>>) -> Self {
        assert_eq!(members.len(), terms.len(), "one term list per member");
        Self { spec, members, terms }
    }

    pub fn terms(&self, m: usize) -> &[(ShapeIndex, T)] {
        &self.terms[m]
    }

    pub fn position(&self, idx: &ShapeIndex) -> Option<usize> {
        self.members.iter().position(|m| m == idx)
    }
}

impl<T: Scalar> ShapeFamily<T> for CombinedFamily<T> {
    fn element(&self) -> ElementKind {
        self.spec.element
    }

    fn value_dim(&self) -> usize {
        self.spec.value_dim()
    }

    fn degree(&self) -> usize {
        self.spec.p
    }

    fn members(&self) -> &[ShapeIndex] {
        &self.members
    }

    fn eval_native(&self, m: usize, native: &[T; 3], out: &mut [T]) {
        out.iter_mut().for_each(|o| *o = T::zero());
        for (idx, c) in &self.terms[m] {
            let v = eval_closed_form(idx, native);
            for (o, &x) in out.iter_mut().zip(&v) {
                *o = *o + *c * x;
            }
        }
    }
}
