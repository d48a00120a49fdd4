//! Interior H¹ bubbles and their dual functions.
//!
//! The duals are unnormalized: `⟨u_idx, b_idx⟩` equals [`diagonal_closed_form`],
//! a product of one-dimensional orthogonality constants. Normalized duals
//! are produced by `biorth` from the measured diagonal.

use crate::error::Result;
use crate::index::{enumerate, ShapeIndex, Tag};
use crate::orthopoly::{int_jac, integrated_legendre as lhat, jac};
use crate::refelem::ElementKind;
use crate::scalar::Scalar;

fn index_ok(kind: ElementKind, [i, j, k]: [usize; 3], p: usize) -> bool {
    match kind {
        ElementKind::Quad => (2..=p).contains(&i) && (2..=p).contains(&j),
        ElementKind::Hex => (2..=p).contains(&i) && (2..=p).contains(&j) && (2..=p).contains(&k),
        ElementKind::Triangle => i >= 2 && j >= 1 && i + j <= p,
        ElementKind::Tetrahedron => i >= 2 && j >= 1 && k >= 1 && i + j + k <= p,
    }
}

/// Interior index tuples on `kind` up to degree `p`, lexicographic.
pub fn members(kind: ElementKind, p: usize) -> Vec<[usize; 3]> {
    enumerate(kind.dim(), p, |i, j, k| index_ok(kind, [i, j, k], p))
}

/// Checks the structural bounds of an H¹ index (and `≤ p` when given).
pub fn validate(idx: &ShapeIndex, p: Option<usize>) -> Result<()> {
    let bound = p.unwrap_or(usize::MAX / 4);
    let tag_ok = matches!(idx.tag, Tag::U | Tag::Bh);
    if tag_ok && index_ok(idx.element, idx.indices, bound) {
        Ok(())
    } else {
        Err(idx.out_of_range("H1 interior index", p.unwrap_or(0)))
    }
}

#[inline]
fn half<T: Scalar>(v: T) -> T {
    (T::one() - v) * T::lit(0.5)
}

/// Primal bubble at a native point, no index checks.
pub(crate) fn primal<T: Scalar>(kind: ElementKind, [i, j, k]: [usize; 3], x: &[T; 3]) -> T {
    match kind {
        ElementKind::Quad => lhat(i, x[0]) * lhat(j, x[1]),
        ElementKind::Hex => lhat(i, x[0]) * lhat(j, x[1]) * lhat(k, x[2]),
        ElementKind::Triangle => {
            let s = half(x[1]);
            lhat(i, x[0]) * s.powi(i as i32) * int_jac(j, T::int(2 * i), x[1])
        }
        ElementKind::Tetrahedron => {
            let a = half(x[1]);
            let t = half(x[2]);
            lhat(i, x[0])
                * a.powi(i as i32)
                * int_jac(j, T::int(2 * i), x[1])
                * t.powi((i + j) as i32)
                * int_jac(k, T::int(2 * i + 2 * j), x[2])
        }
    }
}

/// Unnormalized dual at a native point, no index checks.
pub(crate) fn dual<T: Scalar>(kind: ElementKind, [i, j, k]: [usize; 3], x: &[T; 3]) -> T {
    match kind {
        ElementKind::Quad => jac(i - 2, 1, 1, x[0]) * jac(j - 2, 1, 1, x[1]),
        ElementKind::Hex => jac(i - 2, 1, 1, x[0]) * jac(j - 2, 1, 1, x[1]) * jac(k - 2, 1, 1, x[2]),
        ElementKind::Triangle => {
            let s = half(x[1]);
            jac(i - 2, 1, 1, x[0]) * s.powi(i as i32 - 2) * jac(j - 1, 2 * i - 1, 1, x[1])
        }
        ElementKind::Tetrahedron => {
            let a = half(x[1]);
            let t = half(x[2]);
            jac(i - 2, 1, 1, x[0])
                * a.powi(i as i32 - 2)
                * jac(j - 1, 2 * i - 1, 1, x[1])
                * t.powi((i + j) as i32 - 3)
                * jac(k - 1, 2 * i + 2 * j - 1, 1, x[2])
        }
    }
}

/// `u_idx` at a point in the element's native chart.
pub fn h1_primal_eval<T: Scalar>(idx: &ShapeIndex, native: &[T; 3]) -> Result<T> {
    validate(idx, None)?;
    Ok(primal(idx.element, idx.indices, native))
}

/// Unnormalized dual `b_idx` at a point in the element's native chart.
pub fn h1_dual_eval<T: Scalar>(idx: &ShapeIndex, native: &[T; 3]) -> Result<T> {
    validate(idx, None)?;
    Ok(dual(idx.element, idx.indices, native))
}

pub fn h1_primal_eval_cartesian<T: Scalar>(idx: &ShapeIndex, cart: [T; 3]) -> Result<T> {
    h1_primal_eval(idx, &idx.element.cartesian_to_native(cart))
}

pub fn h1_dual_eval_cartesian<T: Scalar>(idx: &ShapeIndex, cart: [T; 3]) -> Result<T> {
    h1_dual_eval(idx, &idx.element.cartesian_to_native(cart))
}

/// `∫ L̂_i P_{i-2}^{(1,1)} = -4 / ((2i-1) i)`.
fn bubble_factor<T: Scalar>(i: usize) -> T {
    -T::lit(4.0) / T::int((2 * i - 1) * i)
}

/// `∫ ((1-x)/2)^{a} (1+x)/j (P_{j-1}^{(a,1)})² dx = 4 / ((2j+a)(j+a))`.
fn collapsed_factor<T: Scalar>(a: usize, j: usize) -> T {
    T::lit(4.0) / T::int((2 * j + a) * (j + a))
}

/// `⟨u_idx, b_idx⟩` assembled from the one-dimensional orthogonality constants.
pub fn diagonal_closed_form<T: Scalar>(kind: ElementKind, [i, j, k]: [usize; 3]) -> T {
    match kind {
        ElementKind::Quad => bubble_factor::<T>(i) * bubble_factor(j),
        ElementKind::Hex => bubble_factor::<T>(i) * bubble_factor(j) * bubble_factor(k),
        ElementKind::Triangle => bubble_factor::<T>(i) * collapsed_factor(2 * i - 1, j),
        ElementKind::Tetrahedron => {
            bubble_factor::<T>(i)
                * collapsed_factor(2 * i - 1, j)
                * collapsed_factor(2 * i + 2 * j - 1, k)
        }
    }
}
