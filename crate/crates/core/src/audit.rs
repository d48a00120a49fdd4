//! Side-by-side comparison of printed constants with measured ones.


use serde_json::{json, Value};

use crate::biorth::{csv_rows, dual_family, fmt_num, measured_diagonal, DualMode};
use crate::error::Result;
use crate::family::{BasisFamily, FamilySpec, Role, ShapeFamily};
use crate::h1;
use crate::hcurl::printed::{self, paper_dual_terms};
use crate::index::{ShapeIndex, Space, Tag};
use crate::refelem::{element_quadrature, ElementKind, ElementQuadrature};
use crate::scalar::Scalar;

/// Relative tolerance for declaring two constants equal.
pub const AUDIT_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Match,
    /// Equal magnitude, opposite sign.
    Sign,
    Mismatch,
}

impl Status {
    pub fn discrepancy(self) -> &'static str {
        match self {
            Status::Match => "",
            Status::Sign => "sign",
            Status::Mismatch => "mismatch",
        }
    }
}

#[derive(Debug, Clone)]
pub struct AuditRow<T> {
    pub family: String,
    pub index: ShapeIndex,
    pub paper: T,
    pub oracle: T,
    /// `paper / oracle`.
    pub ratio: T,
    pub status: Status,
}

fn row<T: Scalar>(family: &str, index: ShapeIndex, paper: T, oracle: T) -> AuditRow<T> {
    let tol = T::lit(AUDIT_TOL);
    let (ratio, status) = if oracle == T::zero() {
        let st = if paper == T::zero() { Status::Match } else { Status::Mismatch };
        (if paper == T::zero() { T::one() } else { T::infinity() }, st)
    } else {
        let r = paper / oracle;
        let st = if (r - T::one()).abs() <= tol {
            Status::Match
        } else if (r + T::one()).abs() <= tol {
            Status::Sign
        } else {
            Status::Mismatch
        };
        (r, st)
    };
    AuditRow { family: family.to_string(), index, paper, oracle, ratio, status }
}

fn members(spec: &FamilySpec, tag: Tag) -> Vec<ShapeIndex> {
    crate::hcurl::members(spec.element, tag, spec.p)
}

fn quad_rule<T: Scalar>(spec: &FamilySpec, margin: usize) -> ElementQuadrature<T> {
    element_quadrature(spec.element, 2 * spec.p + margin)
}

fn recip_measured<T: Scalar>(aux: ShapeIndex, q: &ElementQuadrature<T>) -> T {
    T::one() / measured_diagonal(&aux, q)
}

/// Printed α coefficients against reciprocals of the diagonals they claim to invert.
fn alpha_rows<T: Scalar>(spec: &FamilySpec, q: &ElementQuadrature<T>) -> Vec<AuditRow<T>> {
    let mut out = Vec::new();
    let mut push = |family: &str, tag: Tag, aux: Tag, f: &dyn Fn([usize; 3]) -> T| {
        for idx in members(spec, tag) {
            out.push(row(family, idx, f(idx.indices), recip_measured(idx.with_tag(aux), q)));
        }
    };
    match spec.element {
        ElementKind::Quad => {
            push("alpha_ij", Tag::I, Tag::AuxII, &|[i, j, _]| printed::quad_alpha(i, j));
            push("alpha_ji", Tag::I, Tag::AuxI, &|[i, j, _]| printed::quad_alpha(j, i));
        }
        ElementKind::Triangle => {
            push("alpha1", Tag::I, Tag::AuxI, &|[i, j, _]| printed::tri_alpha1(i, j));
            push("alpha1_proof", Tag::I, Tag::AuxI, &|[i, j, _]| printed::tri_alpha1_proof(i, j));
            push("alpha2", Tag::I, Tag::AuxII, &|[i, j, _]| printed::tri_alpha2(i, j));
            push("alpha3", Tag::III, Tag::AuxI, &|[_, j, _]| printed::tri_alpha3(j));
        }
        ElementKind::Tetrahedron => {
            push("alpha1", Tag::I, Tag::AuxI, &|[i, j, k]| printed::tet_alpha1(i, j, k));
            push("alpha2", Tag::I, Tag::AuxII, &|[i, j, k]| printed::tet_alpha2(i, j, k));
            push("alpha3", Tag::I, Tag::AuxIII, &|[i, j, k]| printed::tet_alpha3(i, j, k));
            push("alpha4", Tag::IV, Tag::AuxI, &|[_, j, k]| printed::tet_alpha4(j, k));
        }
        ElementKind::Hex => {}
    }
    out
}

/// Coefficient of every dual auxiliary term in every recombined dual,
/// printed combination against the oracle combination.
fn term_rows<T: Scalar>(spec: FamilySpec, margin: usize) -> Result<Vec<AuditRow<T>>> {
    let oracle = dual_family::<T>(spec, DualMode::Oracle, margin)?;
    let primal = BasisFamily::new(spec, Role::Primal);
    let mut out = Vec::new();
    for (pos, idx) in ShapeFamily::<T>::members(&primal).iter().enumerate() {
        let paper: Vec<(ShapeIndex, T)> = paper_dual_terms(idx);
        let orc = oracle.terms(pos);
        let scale = orc.iter().fold(T::zero(), |m, (_, c)| m.max(c.abs()));
        let dual_tag = idx.tag.dual_of().unwrap();
        for partner in crate::hcurl::dual_aux_tags(spec.element) {
            let target = idx.with_tag(*partner);
            let p = paper.iter().find(|(x, _)| *x == target).map_or(T::zero(), |t| t.1);
            let mut o = orc.iter().find(|(x, _)| *x == target).map_or(T::zero(), |t| t.1);
            if o.abs() <= T::lit(1e-13) * scale {
                o = T::zero();
            }
            if p != T::zero() || o != T::zero() {
                out.push(row(&format!("{dual_tag}:{partner}"), idx.with_tag(dual_tag), p, o));
            }
        }
    }
    Ok(out)
}

/// Paper-mode against oracle-mode coefficients for the family `spec`.
pub fn coefficient_table<T: Scalar>(spec: FamilySpec, quad_margin: usize) -> Result<Vec<AuditRow<T>>> {
    let q = quad_rule::<T>(&spec, quad_margin);
    match spec.space {
        Space::H1 => Ok(h1::members(spec.element, spec.p)
            .into_iter()
            .map(|ind| {
                let idx = ShapeIndex::new(spec.element, Tag::U, ind);
                let closed = T::one() / h1::diagonal_closed_form::<T>(spec.element, ind);
                row("1/<u,b>", idx.with_tag(Tag::Bh), closed, recip_measured(idx, &q))
            })
            .collect()),
        Space::HCurl => {
            let mut rows = alpha_rows(&spec, &q);
            rows.extend(term_rows(spec, quad_margin)?);
            Ok(rows)
        }
    }
}

/// Printed diagonal constants against measured auxiliary diagonals.
pub fn diagonal_table<T: Scalar>(spec: FamilySpec, quad_margin: usize) -> Result<Vec<AuditRow<T>>> {
    let q = quad_rule::<T>(&spec, quad_margin);
    let mut out = Vec::new();
    let mut push = |family: &str, tag: Tag, keep: &dyn Fn(usize) -> bool, f: &dyn Fn([usize; 3]) -> T| {
        for idx in members(&spec, tag).into_iter().filter(|x| keep(x.i())) {
            out.push(row(family, idx, f(idx.indices), measured_diagonal(&idx, &q)));
        }
    };
    let all = |_: usize| true;
    let edge = |i: usize| i == 1;
    let interior = |i: usize| i >= 2;
    let one = T::one();
    match (spec.space, spec.element) {
        (Space::H1, kind) => {
            for ind in h1::members(kind, spec.p) {
                let idx = ShapeIndex::new(kind, Tag::U, ind);
                out.push(row("<u,b>", idx, h1::diagonal_closed_form(kind, ind), measured_diagonal(&idx, &q)));
            }
        }
        (Space::HCurl, ElementKind::Quad) => {
            push("<aI,B>", Tag::AuxI, &all, &|[i, j, _]| one / printed::quad_alpha::<T>(j, i));
            push("<aII,C>", Tag::AuxII, &all, &|[i, j, _]| one / printed::quad_alpha::<T>(i, j));
        }
        (Space::HCurl, ElementKind::Triangle) => {
            push("<aI,B>", Tag::AuxI, &interior, &|[i, j, _]| printed::tri_diag1(i, j));
            push("<aI,B>_1j", Tag::AuxI, &edge, &|[_, j, _]| one / printed::tri_alpha3::<T>(j));
            push("<aII,C>", Tag::AuxII, &all, &|[i, j, _]| printed::tri_diag2(i, j));
        }
        (Space::HCurl, ElementKind::Tetrahedron) => {
            push("<aI,B>", Tag::AuxI, &interior, &|[i, j, k]| printed::tet_diag1(i, j, k));
            push("<aI,B>_1jk", Tag::AuxI, &edge, &|[_, j, k]| one / printed::tet_alpha4::<T>(j, k));
            push("<aII,C>", Tag::AuxII, &all, &|[i, j, k]| printed::tet_diag2(i, j, k));
            push("<aIII,D>", Tag::AuxIII, &all, &|[i, j, k]| printed::tet_diag3(i, j, k));
        }
        (Space::HCurl, ElementKind::Hex) => {}
    }
    Ok(out)
}

/// Per-family tally: `(family, rows, matches, sign flips, mismatches)`.
pub fn summarize<T: Scalar>(rows: &[AuditRow<T>]) -> Vec<(String, usize, usize, usize, usize)> {
    let mut out: Vec<(String, usize, usize, usize, usize)> = Vec::new();
    for r in rows {
        let pos = match out.iter().position(|e| e.0 == r.family) {
            Some(p) => p,
            None => {
                out.push((r.family.clone(), 0, 0, 0, 0));
                out.len() - 1
            }
        };
        let e = &mut out[pos];
        e.1 += 1;
        match r.status {
            Status::Match => e.2 += 1,
            Status::Sign => e.3 += 1,
            Status::Mismatch => e.4 += 1,
        }
    }
    out
}

/// CSV with the `mode` column first and a discrepancy column last.
pub fn to_csv<T: Scalar>(rows: &[AuditRow<T>], mode: DualMode) -> String {
    let (first, second) = match mode {
        DualMode::Paper => ("paper", "oracle"),
        DualMode::Oracle => ("oracle", "paper"),
    };
    let header = ["family", "index", first, second, "ratio", "discrepancy"].map(String::from).to_vec();
    let body = rows.iter().map(|r| {
        let (a, b) = match mode {
            DualMode::Paper => (r.paper, r.oracle),
            DualMode::Oracle => (r.oracle, r.paper),
        };
        vec![r.family.clone(), r.index.to_string(), fmt_num(a), fmt_num(b), fmt_num(r.ratio), r.status.discrepancy().to_string()]
    });
    csv_rows(std::iter::once(header).chain(body))
}

pub fn to_json<T: Scalar>(rows: &[AuditRow<T>], mode: DualMode) -> Value {
    let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
    json!({
        "mode": mode.name(),
        "rows": rows.iter().map(|r| json!({
            "family": r.family,
            "index": r.index.to_string(),
            "value": f(match mode { DualMode::Paper => r.paper, DualMode::Oracle => r.oracle }),
            "paper": f(r.paper),
            "oracle": f(r.oracle),
            "ratio": f(r.ratio),
            "discrepancy": r.status.discrepancy(),
        })).collect::<Vec<_>>(),
        "summary": summarize(rows).into_iter().map(|(fam, n, m, s, x)| json!({
            "family": fam, "rows": n, "match": m, "sign": s, "mismatch": x,
        })).collect::<Vec<_>>(),
    })
}
