//! Closed forms of every H(curl) field in the native chart.

use crate::index::Tag;
use crate::orthopoly::{int_jac, integrated_legendre as lhat, jac, legendre as leg};
use crate::refelem::ElementKind;
use crate::scalar::Scalar;

#[inline]
fn half<T: Scalar>(v: T) -> T {
    (T::one() - v) * T::lit(0.5)
}

#[inline]
fn scale<T: Scalar>(v: [T; 3], s: T) -> [T; 3] {
    [v[0] * s, v[1] * s, v[2] * s]
}

#[inline]
fn add<T: Scalar>(a: [T; 3], b: [T; 3], sign: T) -> [T; 3] {
    [a[0] + sign * b[0], a[1] + sign * b[1], a[2] + sign * b[2]]
}

/// Evaluates the field `tag` with multi-index `ind` at native point `x`.
///
/// Callers guarantee the index is valid for the element and tag.
pub(crate) fn eval<T: Scalar>(kind: ElementKind, tag: Tag, ind: [usize; 3], x: &[T; 3]) -> [T; 3] {
    match kind {
        ElementKind::Quad => quad(tag, ind, x),
        ElementKind::Triangle => triangle(tag, ind, x),
        ElementKind::Tetrahedron => tet(tag, ind, x),
        ElementKind::Hex => unreachable!("no H(curl) family on the hexahedron"),
    }
}

fn quad<T: Scalar>(tag: Tag, [i, j, _]: [usize; 3], x: &[T; 3]) -> [T; 3] {
    let z = T::zero();
    let aux1 = || [leg(i - 1, x[0]) * lhat(j, x[1]), z, z];
    let aux2 = || [z, lhat(i, x[0]) * leg(j - 1, x[1]), z];
    match tag {
        Tag::AuxI => aux1(),
        Tag::AuxII => aux2(),
        Tag::I => add(aux1(), aux2(), T::one()),
        Tag::II => add(aux1(), aux2(), -T::one()),
        Tag::III if i == 1 => [lhat(j, x[1]), z, z],
        Tag::III => [z, -lhat(i, x[0]), z],
        Tag::B => [leg(i - 1, x[0]) * jac(j - 2, 1, 1, x[1]), z, z],
        Tag::C => [z, jac(i - 2, 1, 1, x[0]) * leg(j - 1, x[1]), z],
        _ => unreachable!("tag {tag} on quad"),
    }
}

/// `∇f_i` on the triangle; `i = 1` is the lowest-order edge field.
fn tri_grad_f<T: Scalar>(i: usize, eta: T, s: T) -> [T; 3] {
    let z = T::zero();
    let h = T::lit(0.5);
    if i == 1 {
        return [s * h, s * h * eta * h, z];
    }
    scale([leg(i - 1, eta), h * leg(i - 2, eta), z], s.powi(i as i32 - 1))
}

fn triangle<T: Scalar>(tag: Tag, [i, j, _]: [usize; 3], x: &[T; 3]) -> [T; 3] {
    let z = T::zero();
    let (eta, y) = (x[0], x[1]);
    let s = half(y);
    let aux1 = || {
        if i == 1 {
            scale(tri_grad_f(1, eta, s), int_jac(j, T::int(3), y))
        } else {
            scale(tri_grad_f(i, eta, s), int_jac(j, T::int(2 * i), y))
        }
    };
    let aux2 = || {
        let f = lhat(i, eta) * s.powi(i as i32);
        [z, f * jac(j - 1, 2 * i, 0, y), z]
    };
    match tag {
        Tag::AuxI | Tag::III => aux1(),
        Tag::AuxII => aux2(),
        Tag::I => add(aux1(), aux2(), T::one()),
        Tag::II => add(aux1(), aux2(), -T::one()),
        Tag::B if i == 1 => [jac(j - 1, 2, 1, y), z, z],
        Tag::B => [leg(i - 1, eta) * s.powi(i as i32 - 1) * jac(j - 1, 2 * i - 1, 1, y), z, z],
        Tag::C => {
            let common = s.powi(i as i32 - 1) * jac(j - 1, 2 * i, 0, y);
            [
                T::int(i + 1) * jac(i - 1, 1, 1, eta) * common,
                -T::int(2 * i) * jac(i - 2, 1, 1, eta) * common,
                z,
            ]
        }
        _ => unreachable!("tag {tag} on triangle"),
    }
}

/// `Q_{m-1,1}(χ)` of the tetrahedral dual (degree `m - 1`).
pub(crate) fn q_m1<T: Scalar>(l: usize, m: usize, chi: T) -> T {
    jac(m - 1, 2 * l - 1, 1, chi) + T::int(m) / T::int(2 * l + m - 1) * jac(m - 1, 2 * l, 0, chi)
}

/// `Q_{m,2}(χ)` of the tetrahedral dual (degree `m`).
pub(crate) fn q_m2<T: Scalar>(l: usize, m: usize, chi: T) -> T {
    let h = T::lit(0.5);
    -chi * h * jac(m - 1, 2 * l - 1, 1, chi)
        + T::int(m) / T::int(2 * l + m - 1) * half(chi) * jac(m - 1, 2 * l, 0, chi)
}

fn tet<T: Scalar>(tag: Tag, [i, j, k]: [usize; 3], x: &[T; 3]) -> [T; 3] {
    let z0 = T::zero();
    let h = T::lit(0.5);
    let q = T::lit(0.25);
    let (eta, chi, z) = (x[0], x[1], x[2]);
    let a = half(chi);
    let t = half(z);
    let two_i = T::int(2 * i);

    // Factors of v = f_i g_ij h_ijk and their gradients.
    let f = || lhat(i, eta) * (a * t).powi(i as i32);
    let grad_f = || {
        scale([leg(i - 1, eta), h * leg(i - 2, eta), q * leg(i - 2, eta)], (a * t).powi(i as i32 - 1))
    };
    let g = || int_jac(j, two_i, chi) * t.powi(j as i32);
    let grad_g = || {
        let pj = jac(j - 1, 2 * i, 0, chi);
        let third = chi * h * pj - T::int(j) * h * int_jac(j, two_i, chi);
        scale([z0, pj, third], t.powi(j as i32 - 1))
    };
    let hk = || int_jac(k, T::int(2 * i + 2 * j), z);
    let grad_h = || [z0, z0, jac(k - 1, 2 * i + 2 * j, 0, z)];

    let aux1 = || {
        if i == 1 {
            let s = a * int_jac(j, T::int(3), chi) * t.powi(j as i32 + 1) * int_jac(k, T::int(2 * j + 3), z);
            [s, s * eta * h, s * eta * q]
        } else {
            scale(grad_f(), g() * hk())
        }
    };
    let aux2 = || scale(grad_g(), f() * hk());
    let aux3 = || scale(grad_h(), f() * g());

    match tag {
        Tag::AuxI | Tag::IV => aux1(),
        Tag::AuxII => aux2(),
        Tag::AuxIII => aux3(),
        Tag::I => add(add(aux1(), aux2(), T::one()), aux3(), T::one()),
        Tag::II => add(add(aux1(), aux2(), -T::one()), aux3(), T::one()),
        Tag::III => add(add(aux1(), aux2(), T::one()), aux3(), -T::one()),
        Tag::B if i == 1 => {
            let s = jac(j - 1, 2, 1, chi) * t.powi(j as i32 - 1) * jac(k - 1, 2 * j + 2, 1, z);
            [s, z0, z0]
        }
        Tag::B => {
            let s = leg(i - 1, eta)
                * a.powi(i as i32 - 1)
                * jac(j - 1, 2 * i - 1, 1, chi)
                * t.powi((i + j) as i32 - 2)
                * jac(k - 1, 2 * i + 2 * j - 1, 1, z);
            [s, z0, z0]
        }
        Tag::C => {
            let common = a.powi(i as i32 - 1)
                * jac(j - 1, 2 * i, 0, chi)
                * t.powi((i + j) as i32 - 2)
                * jac(k - 1, 2 * i + 2 * j - 1, 1, z);
            [
                T::int(i + 1) * jac(i - 1, 1, 1, eta) * common,
                -T::int(2 * i) * jac(i - 2, 1, 1, eta) * common,
                z0,
            ]
        }
        Tag::D => {
            let zpart = t.powi((i + j) as i32 - 2) * jac(k - 1, 2 * i + 2 * j, 0, z);
            let low = jac(i - 2, 1, 1, eta) * a.powi(i as i32 - 2);
            [
                -T::int(i + 1) / T::int(2 * i) * jac(i - 1, 1, 1, eta) * a.powi(i as i32 - 1) * q_m1(i, j, chi) * zpart,
                low * q_m2(i, j, chi) * zpart,
                low * jac(j - 1, 2 * i - 1, 1, chi) * zpart,
            ]
        }
        _ => unreachable!("tag {tag} on tetrahedron"),
    }
}
