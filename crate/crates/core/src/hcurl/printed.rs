//! Constants and dual recombinations exactly as printed in the source
//! derivation. They are kept verbatim so the audit can compare them with
//! measured values; the oracle path in `biorth` never relies on them.

use crate::index::{ShapeIndex, Tag};
use crate::refelem::ElementKind;
use crate::scalar::Scalar;

fn prod<T: Scalar>(factors: &[i64]) -> T {
    factors.iter().fold(T::one(), |acc, &f| acc * T::lit(f as f64))
}

fn p2<T: Scalar>(e: i32) -> T {
    T::lit(2.0).powi(e)
}

/// Quadrilateral `α_ij = i(2i-1)(2j-1)/8`.
pub fn quad_alpha<T: Scalar>(i: usize, j: usize) -> T {
    let (i, j) = (i as i64, j as i64);
    prod::<T>(&[i, 2 * i - 1, 2 * j - 1]) / T::lit(8.0)
}

/// Triangle `α₁` as stated in the lemma: `(2i-1)(2j+2i-1)(j+2i-1)/8`.
pub fn tri_alpha1<T: Scalar>(i: usize, j: usize) -> T {
    let (i, j) = (i as i64, j as i64);
    prod::<T>(&[2 * i - 1, 2 * j + 2 * i - 1, j + 2 * i - 1]) / T::lit(8.0)
}

/// Triangle `α₁` as it reappears in the proof: `(2i-1)(2j-2i-1)(j+2i-1)/8`.
pub fn tri_alpha1_proof<T: Scalar>(i: usize, j: usize) -> T {
    let (i, j) = (i as i64, j as i64);
    prod::<T>(&[2 * i - 1, 2 * j - 2 * i - 1, j + 2 * i - 1]) / T::lit(8.0)
}

pub fn tri_alpha2<T: Scalar>(i: usize, j: usize) -> T {
    let (i, j) = (i as i64, j as i64);
    prod::<T>(&[2 * i - 1, 2 * j + 2 * i - 1]) / T::lit(16.0)
}

pub fn tri_alpha3<T: Scalar>(j: usize) -> T {
    let j = j as i64;
    prod::<T>(&[2 * j + 2, j + 2]) / T::lit(16.0)
}

pub fn tet_alpha1<T: Scalar>(l: usize, m: usize, n: usize) -> T {
    let (l, m, n) = (l as i64, m as i64, n as i64);
    prod::<T>(&[2 * l - 1, 2 * m + 2 * l - 1, m + 2 * l - 1, 2 * n + 2 * l + 2 * m - 1, n + 2 * l + 2 * m - 1])
        / p2(7)
}

pub fn tet_alpha2<T: Scalar>(l: usize, m: usize, n: usize) -> T {
    let (l, m, n) = (l as i64, m as i64, n as i64);
    prod::<T>(&[2 * l - 1, 2 * m + 2 * l - 1, 2 * n + 2 * l + 2 * m - 1, n + 2 * l + 2 * m - 1]) / p2(6)
}

pub fn tet_alpha3<T: Scalar>(l: usize, m: usize, n: usize) -> T {
    let (l, m, n) = (l as i64, m as i64, n as i64);
    -prod::<T>(&[l, 2 * l - 1, 2 * m + 2 * l - 1, m + 2 * l - 1, 2 * n + 2 * l + 2 * m - 1]) / p2(5)
}

pub fn tet_alpha4<T: Scalar>(m: usize, n: usize) -> T {
    let (m, n) = (m as i64, n as i64);
    prod::<T>(&[2 * m + 2, m + 2, n + 2 * m + 2, 2 * n + 2 * m + 2]) / p2(5)
}

/// Triangle `⟨ṽ^I_ij, B_ij⟩ = 8 / ((2i-1)(2j+2i-1)(j+2i-1))`.
pub fn tri_diag1<T: Scalar>(i: usize, j: usize) -> T {
    T::lit(8.0) / (tri_alpha1::<T>(i, j) * T::lit(8.0))
}

/// Triangle `⟨ṽ^II_ij, C_ij⟩ = 16 / ((2i-1)(2j+2i-1))`.
pub fn tri_diag2<T: Scalar>(i: usize, j: usize) -> T {
    T::one() / tri_alpha2::<T>(i, j)
}

pub fn tet_diag1<T: Scalar>(i: usize, j: usize, k: usize) -> T {
    T::one() / tet_alpha1::<T>(i, j, k)
}

pub fn tet_diag2<T: Scalar>(i: usize, j: usize, k: usize) -> T {
    T::one() / tet_alpha2::<T>(i, j, k)
}

/// `⟨ṽ^III, b̃^III⟩ = 2⁶ / ((2i-1) i (2i+2j-1)(j+2i-1)(2k+2i+2j-1))`.
pub fn tet_diag3<T: Scalar>(i: usize, j: usize, k: usize) -> T {
    let (i, j, k) = (i as i64, j as i64, k as i64);
    p2::<T>(6) / prod::<T>(&[2 * i - 1, i, 2 * i + 2 * j - 1, j + 2 * i - 1, 2 * k + 2 * i + 2 * j - 1])
}

/// Dual of a primal H(curl) function as the printed linear combination
/// of dual auxiliary functions.
pub fn paper_dual_terms<T: Scalar>(primal: &ShapeIndex) -> Vec<(ShapeIndex, T)> {
    let [i, j, k] = primal.indices;
    let at = |tag: Tag| primal.with_tag(tag);
    let h = T::lit(0.5);
    match (primal.element, primal.tag) {
        (ElementKind::Quad, Tag::I) => {
            vec![(at(Tag::B), quad_alpha(i, j)), (at(Tag::C), -quad_alpha::<T>(j, i))]
        }
        (ElementKind::Quad, Tag::II) => {
            vec![(at(Tag::B), quad_alpha(i, j)), (at(Tag::C), quad_alpha(j, i))]
        }
        (ElementKind::Quad, Tag::III) if i == 1 => vec![(at(Tag::B), T::one())],
        (ElementKind::Quad, Tag::III) => vec![(at(Tag::C), T::one())],
        (ElementKind::Triangle, Tag::I) => vec![
            (at(Tag::B), -h * tri_alpha1::<T>(i, j)),
            (at(Tag::C), -h * tri_alpha2::<T>(i, j)),
        ],
        (ElementKind::Triangle, Tag::II) => vec![
            (at(Tag::B), h * tri_alpha1::<T>(i, j)),
            (at(Tag::C), -h * tri_alpha2::<T>(i, j)),
        ],
        (ElementKind::Triangle, Tag::III) => vec![(at(Tag::B), tri_alpha3(j))],
        (ElementKind::Tetrahedron, Tag::I) => vec![
            (at(Tag::C), h * tet_alpha2::<T>(i, j, k)),
            (at(Tag::D), h * tet_alpha3::<T>(i, j, k)),
        ],
        (ElementKind::Tetrahedron, Tag::II) => vec![
            (at(Tag::B), h * tet_alpha1::<T>(i, j, k)),
            (at(Tag::C), -h * tet_alpha2::<T>(i, j, k)),
        ],
        (ElementKind::Tetrahedron, Tag::III) => vec![
            (at(Tag::B), h * tet_alpha1::<T>(i, j, k)),
            (at(Tag::D), -h * tet_alpha3::<T>(i, j, k)),
        ],
        (ElementKind::Tetrahedron, Tag::IV) => vec![(at(Tag::B), tet_alpha4(j, k))],
        (el, tag) => panic!("no printed dual for {tag} on {el}"),
    }
}
