//! Gram assembly, the recombination solver and biorthogonality reports.

use std::collections::HashMap;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::{eval_closed_form, BasisFamily, CombinedFamily, FamilySpec, Role, ShapeFamily};
use crate::h1;
use crate::hcurl::{self, printed};
use crate::index::{ShapeIndex, Space, Tag};
use crate::refelem::{element_quadrature, ElementKind, ElementQuadrature};
use crate::scalar::Scalar;

/// Default extra quadrature degree on top of `2p`.
pub const DEFAULT_MARGIN: usize = 4;

/// Formats a number with 17 significant digits.
pub fn fmt_num<T: Scalar>(v: T) -> String {
    format!("{:.16e}", v.to_f64().unwrap_or(f64::NAN))
}

/// Dense matrix of pairings `⟨primal_r, dual_c⟩`.
#[derive(Debug, Clone)]
pub struct GramMatrix<T> {
    pub element: ElementKind,
    pub space: Space,
    pub p: usize,
    pub quadrature_degree: usize,
    rows: Vec<ShapeIndex>,
    cols: Vec<ShapeIndex>,
    values: Vec<T>,
}

impl<T: Scalar> GramMatrix<T> {
    /// Wraps precomputed values (row-major).
    pub fn from_values(
        element: ElementKind,
        space: Space,
        p: usize,
        rows: Vec<ShapeIndex>,
        cols: Vec<ShapeIndex>,
        values: Vec<T>,
    ) -> Result<Self> {
        if values.len() != rows.len() * cols.len() {
            return Err(Error::DimensionMismatch(values.len(), rows.len() * cols.len()));
        }
        let g = Self { element, space, p, quadrature_degree: 0, rows, cols, values };
        g.check_finite()?;
        Ok(g)
    }

    fn check_finite(&self) -> Result<()> {
        match self.values.iter().position(|v| !v.is_finite()) {
            Some(pos) => Err(Error::NonFinite { row: pos / self.ncols(), col: pos % self.ncols() }),
            None => Ok(()),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn rows(&self) -> &[ShapeIndex] {
        &self.rows
    }

    pub fn cols(&self) -> &[ShapeIndex] {
        &self.cols
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        self.values[r * self.ncols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        let n = self.ncols();
        self.values[r * n + c] = v;
    }

    pub fn row_of(&self, idx: &ShapeIndex) -> Option<usize> {
        self.rows.iter().position(|r| r == idx)
    }

    pub fn col_of(&self, idx: &ShapeIndex) -> Option<usize> {
        self.cols.iter().position(|c| c == idx)
    }

    pub fn max_abs(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.nrows().min(self.ncols())).map(|i| self.get(i, i)).collect()
    }

    /// CSV with a header row of dual labels and a leading column of primal labels.
    pub fn to_csv(&self) -> String {
        let header = std::iter::once("primal".to_string()).chain(self.cols.iter().map(|c| c.to_string()));
        let body = self.rows.iter().enumerate().map(|(r, label)| {
            std::iter::once(label.to_string()).chain((0..self.ncols()).map(move |c| fmt_num(self.get(r, c)))).collect()
        });
        csv_rows(std::iter::once(header.collect()).chain(body))
    }
}

/// Writes records as CSV, quoting only where needed.
pub(crate) fn csv_rows(records: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// A single field as it appears in the CSV output.
pub fn csv_field(v: &str) -> String {
    csv_rows([vec![v.to_string()]]).trim_end().to_string()
}

/// Values of every member at every quadrature point, `[member][point][component]`.
pub fn tabulate<T: Scalar>(family: &dyn ShapeFamily<T>, quad: &ElementQuadrature<T>) -> Vec<T> {
    let vd = family.value_dim();
    let nq = quad.len();
    let mut out = vec![T::zero(); family.members().len() * nq * vd];
    for m in 0..family.members().len() {
        for (q, x) in quad.native.iter().enumerate() {
            let start = (m * nq + q) * vd;
            family.eval_native(m, x, &mut out[start..start + vd]);
        }
    }
    out
}

fn family_space<T: Scalar>(f: &dyn ShapeFamily<T>) -> Space {
    match f.value_dim() {
        1 => Space::H1,
        _ => Space::HCurl,
    }
}

/// `∫ primal_r · dual_c` with a rule of degree `2p + quad_margin`.
pub fn assemble_gram<T: Scalar>(
    primal: &dyn ShapeFamily<T>,
    dual: &dyn ShapeFamily<T>,
    quad_margin: usize,
) -> Result<GramMatrix<T>> {
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    assemble_gram_threads(primal, dual, quad_margin, threads)
}

/// Same as [`assemble_gram`] with an explicit worker count; the result
/// does not depend on it.
pub fn assemble_gram_threads<T: Scalar>(
    primal: &dyn ShapeFamily<T>,
    dual: &dyn ShapeFamily<T>,
    quad_margin: usize,
    threads: usize,
) -> Result<GramMatrix<T>> {
    if primal.element() != dual.element() {
        return Err(Error::ElementMismatch(primal.element().name(), dual.element().name()));
    }
    if primal.value_dim() != dual.value_dim() {
        return Err(Error::DimensionMismatch(primal.value_dim(), dual.value_dim()));
    }
    let p = primal.degree().max(dual.degree());
    let degree = 2 * p + quad_margin;
    let quad = element_quadrature::<T>(primal.element(), degree);
    let ta = tabulate(primal, &quad);
    let tb = tabulate(dual, &quad);
    let (nr, nc, nq, vd) = (primal.members().len(), dual.members().len(), quad.len(), primal.value_dim());

    let entry = |r: usize, c: usize| -> T {
        let mut acc = T::zero();
        for q in 0..nq {
            let a = &ta[(r * nq + q) * vd..(r * nq + q + 1) * vd];
            let b = &tb[(c * nq + q) * vd..(c * nq + q + 1) * vd];
            let mut dot = T::zero();
            for k in 0..vd {
                dot = dot + a[k] * b[k];
            }
            acc = acc + quad.weights[q] * dot;
        }
        acc
    };

    let mut values = vec![T::zero(); nr * nc];
    let rows_per = nr.div_ceil(threads.max(1)).max(1);
    std::thread::scope(|scope| {
        for (chunk_id, chunk) in values.chunks_mut(rows_per * nc.max(1)).enumerate() {
            let entry = &entry;
            scope.spawn(move || {
                for (k, v) in chunk.iter_mut().enumerate() {
                    let r = chunk_id * rows_per + k / nc;
                    *v = entry(r, k % nc);
                }
            });
        }
    });

    let g = GramMatrix {
        element: primal.element(),
        space: family_space(primal),
        p,
        quadrature_degree: degree,
        rows: primal.members().to_vec(),
        cols: dual.members().to_vec(),
        values,
    };
    g.check_finite()?;
    Ok(g)
}

/// `∫ a · b` for two closed-form members, by the given rule.
pub fn pair_integral<T: Scalar>(a: &ShapeIndex, b: &ShapeIndex, quad: &ElementQuadrature<T>) -> T {
    let mut acc = T::zero();
    for (x, &w) in quad.native.iter().zip(&quad.weights) {
        let (va, vb) = (eval_closed_form(a, x), eval_closed_form(b, x));
        acc = acc + w * (va[0] * vb[0] + va[1] * vb[1] + va[2] * vb[2]);
    }
    acc
}

/// `⟨aux, partner⟩` for an auxiliary (or H¹ primal) index and its dual partner.
pub fn measured_diagonal<T: Scalar>(aux: &ShapeIndex, quad: &ElementQuadrature<T>) -> T {
    let partner = aux.with_tag(aux.tag.dual_aux().expect("auxiliary tag"));
    pair_integral(aux, &partner, quad)
}

/// The solved system `A · D · Bᵀ = I` of one recombination block.
#[derive(Debug, Clone, PartialEq)]
pub struct RecombinationSpec<T> {
    pub a: Vec<Vec<T>>,
    pub d: Vec<T>,
    pub b: Vec<Vec<T>>,
    /// `max |A D Bᵀ - I|`.
    pub residual: T,
}

/// Solves `A·D·Bᵀ = I` for `B = (A·D)^{-T}`; `block` names the block in errors.
pub fn solve_recombination<T: Scalar>(a: &[Vec<T>], d: &[T], block: &str) -> Result<RecombinationSpec<T>> {
    let n = d.len();
    let fail = |reason: String| Error::SingularRecombination { block: block.to_string(), reason };
    if a.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(fail(format!("A must be {n}x{n}")));
    }
    if let Some(s) = d.iter().position(|v| *v == T::zero() || !v.is_finite()) {
        return Err(fail(format!("diagonal entry {s} is zero")));
    }
    // Gauss-Jordan on [M | I] with M = A·diag(D).
    let mut m: Vec<Vec<T>> = a.iter().map(|row| row.iter().zip(d).map(|(&x, &y)| x * y).collect()).collect();
    let mut inv: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect();
    let scale = m.iter().flatten().fold(T::zero(), |acc, v| acc.max(v.abs()));
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| m[x][col].abs().partial_cmp(&m[y][col].abs()).unwrap())
            .unwrap();
        if m[piv][col].abs() <= T::epsilon() * T::int(n) * scale {
            return Err(fail("A is singular".into()));
        }
        m.swap(col, piv);
        inv.swap(col, piv);
        let pv = m[col][col];
        for j in 0..n {
            m[col][j] = m[col][j] / pv;
            inv[col][j] = inv[col][j] / pv;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col];
                for j in 0..n {
                    m[r][j] = m[r][j] - f * m[col][j];
                    inv[r][j] = inv[r][j] - f * inv[col][j];
                }
            }
        }
    }
    let b: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| inv[j][i]).collect()).collect();
    let mut residual = T::zero();
    for t in 0..n {
        for r in 0..n {
            let mut s = T::zero();
            for k in 0..n {
                s = s + a[t][k] * d[k] * b[r][k];
            }
            let target = if t == r { T::one() } else { T::zero() };
            residual = residual.max((s - target).abs());
        }
    }
    let tol = T::lit(1e-13).max(T::epsilon() * T::lit(64.0));
    if residual > tol {
        return Err(fail(format!("residual {residual} exceeds {tol}")));
    }
    Ok(RecombinationSpec { a: a.to_vec(), d: d.to_vec(), b, residual })
}

/// Where dual coefficients come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualMode {
    /// Printed formulas, taken literally.
    Paper,
    /// Reciprocals of measured diagonals fed through the recombination solver.
    Oracle,
}

impl DualMode {
    pub fn name(self) -> &'static str {
        match self {
            Self::Paper => "paper",
            Self::Oracle => "oracle",
        }
    }
}

impl FromStr for DualMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Self::Paper),
            "oracle" => Ok(Self::Oracle),
            other => Err(Error::Unsupported(format!("unknown mode '{other}'"))),
        }
    }
}

fn dual_label(primal: &ShapeIndex) -> ShapeIndex {
    primal.with_tag(primal.tag.dual_of().expect("primal tag"))
}

fn block_name(primals: &[ShapeIndex]) -> String {
    let tags: Vec<&str> = primals.iter().map(|p| p.tag.label()).collect();
    let first = primals[0];
    let [i, j, k] = first.indices;
    let ind = if first.element.dim() == 3 { format!("{i},{j},{k}") } else { format!("{i},{j}") };
    format!("{}/{}/{}", first.element, tags.join("+"), ind)
}

/// Oracle coefficients for one block of primal functions sharing their auxiliary fields.
pub fn oracle_block<T: Scalar>(
    primals: &[ShapeIndex],
    quad: &ElementQuadrature<T>,
) -> Result<(RecombinationSpec<T>, Vec<ShapeIndex>)> {
    let splits = primals.iter().map(hcurl::split).collect::<Result<Vec<_>>>()?;
    let aux: Vec<ShapeIndex> = splits[0].iter().map(|(a, _)| *a).collect();
    let a: Vec<Vec<T>> = splits
        .iter()
        .map(|sp| {
            aux.iter()
                .map(|x| sp.iter().find(|(y, _)| y == x).map_or(T::zero(), |&(_, s)| T::lit(s as f64)))
                .collect()
        })
        .collect();
    let d: Vec<T> = aux.iter().map(|x| measured_diagonal(x, quad)).collect();
    let partners = aux.iter().map(|x| x.with_tag(x.tag.dual_aux().unwrap())).collect();
    Ok((solve_recombination(&a, &d, &block_name(primals))?, partners))
}

fn block_key(idx: &ShapeIndex) -> Result<Vec<ShapeIndex>> {
    let mut key: Vec<ShapeIndex> = hcurl::split(idx)?.into_iter().map(|(a, _)| a).collect();
    key.sort();
    Ok(key)
}

fn quad_for<T: Scalar>(spec: &FamilySpec, margin: usize) -> ElementQuadrature<T> {
    element_quadrature(spec.element, 2 * spec.p + margin)
}

/// Normalized dual family of the primal basis described by `spec`.
pub fn dual_family<T: Scalar>(spec: FamilySpec, mode: DualMode, quad_margin: usize) -> Result<CombinedFamily<T>> {
    let primal = BasisFamily::new(spec, Role::Primal);
    let primals = ShapeFamily::<T>::members(&primal).to_vec();
    let quad = quad_for::<T>(&spec, quad_margin);
    let labels: Vec<ShapeIndex> = primals.iter().map(dual_label).collect();
    let terms = match (spec.space, mode) {
        (Space::H1, _) => primals
            .iter()
            .map(|u| {
                let d = match mode {
                    DualMode::Oracle => measured_diagonal(u, &quad),
                    DualMode::Paper => h1::diagonal_closed_form(u.element, u.indices),
                };
                vec![(u.with_tag(Tag::Bh), T::one() / d)]
            })
            .collect(),
        (Space::HCurl, DualMode::Paper) => primals.iter().map(printed::paper_dual_terms).collect(),
        (Space::HCurl, DualMode::Oracle) => {
            let mut groups: Vec<Vec<usize>> = Vec::new();
            let mut seen: HashMap<Vec<ShapeIndex>, usize> = HashMap::new();
            for (pos, idx) in primals.iter().enumerate() {
                let key = block_key(idx)?;
                let g = *seen.entry(key).or_insert_with(|| {
                    groups.push(Vec::new());
                    groups.len() - 1
                });
                groups[g].push(pos);
            }
            let mut terms = vec![Vec::new(); primals.len()];
            for g in groups {
                let members: Vec<ShapeIndex> = g.iter().map(|&p| primals[p]).collect();
                let (rec, partners) = oracle_block(&members, &quad)?;
                for (t, &pos) in g.iter().enumerate() {
                    terms[pos] = partners.iter().zip(&rec.b[t]).map(|(x, &c)| (*x, c)).collect();
                }
            }
            terms
        }
    };
    Ok(CombinedFamily::new(spec, labels, terms))
}

/// Linear combination of dual auxiliary fields forming the dual of one primal function.
pub fn dual_terms<T: Scalar>(primal: &ShapeIndex, mode: DualMode, quad_margin: usize) -> Result<Vec<(ShapeIndex, T)>> {
    // The index sum bounds the polynomial degree on every element.
    let p: usize = primal.indices.iter().sum();
    let spec = FamilySpec::new(primal.element, primal.tag.space(), p.max(2))?;
    let quad = quad_for::<T>(&spec, quad_margin);
    match (primal.tag.space(), mode) {
        (Space::H1, _) => {
            h1::validate(primal, None)?;
            let d = match mode {
                DualMode::Oracle => measured_diagonal(primal, &quad),
                DualMode::Paper => h1::diagonal_closed_form(primal.element, primal.indices),
            };
            Ok(vec![(primal.with_tag(Tag::Bh), T::one() / d)])
        }
        (Space::HCurl, DualMode::Paper) => {
            hcurl::split(primal)?;
            Ok(printed::paper_dual_terms(primal))
        }
        (Space::HCurl, DualMode::Oracle) => {
            let key = block_key(primal)?;
            let members: Vec<ShapeIndex> = hcurl::primal_tags(primal.element)
                .iter()
                .map(|&t| primal.with_tag(t))
                .filter(|m| hcurl::validate(m, None).is_ok() && block_key(m).ok().as_ref() == Some(&key))
                .collect();
            let (rec, partners) = oracle_block(&members, &quad)?;
            let t = members.iter().position(|m| m == primal).unwrap();
            Ok(partners.iter().zip(&rec.b[t]).map(|(x, &c)| (*x, c)).collect())
        }
    }
}

/// What a report checks the Gram matrix against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Off-diagonal entries small relative to the largest diagonal entry.
    Diagonal,
    /// `|G - I|` small in max-norm.
    Identity,
}

/// Boolean occupancy of a Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsityPattern {
    pub nrows: usize,
    pub ncols: usize,
    cells: Vec<bool>,
}

impl SparsityPattern {
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.cells[r * self.ncols + c]
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// True when exactly the diagonal is occupied.
    pub fn is_diagonal(&self) -> bool {
        (0..self.nrows).all(|r| (0..self.ncols).all(|c| self.get(r, c) == (r == c)))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for r in 0..self.nrows {
            let row: Vec<&str> = (0..self.ncols).map(|c| if self.get(r, c) { "1" } else { "0" }).collect();
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }

    /// Plain PBM (P1); black pixels mark nonzero entries.
    pub fn to_pbm(&self) -> String {
        let mut s = format!("P1\n{} {}\n", self.ncols, self.nrows);
        for r in 0..self.nrows {
            let row: Vec<&str> = (0..self.ncols).map(|c| if self.get(r, c) { "1" } else { "0" }).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// `pattern[r][c] = |g_rc| > tol · max |g|`.
pub fn sparsity_pattern<T: Scalar>(gram: &GramMatrix<T>, tol: T) -> SparsityPattern {
    let cut = tol * gram.max_abs();
    SparsityPattern {
        nrows: gram.nrows(),
        ncols: gram.ncols(),
        cells: gram.values().iter().map(|v| v.abs() > cut).collect(),
    }
}

#[derive(Debug, Clone)]
pub struct BiorthReport<T> {
    pub element: ElementKind,
    pub space: Space,
    pub p: usize,
    pub mode: CheckMode,
    pub tol: T,
    /// Largest off-diagonal magnitude over the largest diagonal magnitude.
    pub max_offdiag_rel: T,
    /// `max |G - I|`.
    pub identity_error: T,
    pub diag_values: Vec<T>,
    pub pattern: SparsityPattern,
    pub pass: bool,
}

impl<T: Scalar> BiorthReport<T> {
    pub fn to_json(&self) -> Value {
        let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
        json!({
            "element": self.element.name(),
            "space": self.space.name(),
            "p": self.p,
            "check": match self.mode { CheckMode::Diagonal => "diagonal", CheckMode::Identity => "identity" },
            "tol": f(self.tol),
            "diag": self.diag_values.iter().map(|&v| f(v)).collect::<Vec<_>>(),
            "max_offdiag_rel": f(self.max_offdiag_rel),
            "identity_error": f(self.identity_error),
            "pass": self.pass,
        })
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        format!(
            "{} {} p={} n={} max_offdiag_rel={} identity_error={} {}",
            self.element,
            self.space,
            self.p,
            self.diag_values.len(),
            fmt_num(self.max_offdiag_rel),
            fmt_num(self.identity_error),
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

fn report<T: Scalar>(gram: &GramMatrix<T>, tol: T, mode: CheckMode) -> BiorthReport<T> {
    let diag = gram.diagonal();
    let max_diag = diag.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let mut max_off = T::zero();
    let mut id_err = T::zero();
    for r in 0..gram.nrows() {
        for c in 0..gram.ncols() {
            let v = gram.get(r, c);
            if r == c {
                id_err = id_err.max((v - T::one()).abs());
            } else {
                max_off = max_off.max(v.abs());
                id_err = id_err.max(v.abs());
            }
        }
    }
    let max_offdiag_rel = if max_diag > T::zero() {
        max_off / max_diag
    } else if max_off > T::zero() {
        T::infinity()
    } else {
        T::zero()
    };
    let pass = gram.is_square()
        && match mode {
            CheckMode::Diagonal => {
                max_offdiag_rel <= tol && diag.iter().all(|d| d.abs() > tol * max_diag)
            }
            CheckMode::Identity => id_err <= tol,
        };
    BiorthReport {
        element: gram.element,
        space: gram.space,
        p: gram.p,
        mode,
        tol,
        max_offdiag_rel,
        identity_error: id_err,
        diag_values: diag,
        pattern: sparsity_pattern(gram, tol),
        pass,
    }
}

/// Checks that `gram` is diagonal up to `tol` relative to its largest diagonal entry.
pub fn verify_biorthogonality<T: Scalar>(gram: &GramMatrix<T>, tol: T) -> BiorthReport<T> {
    report(gram, tol, CheckMode::Diagonal)
}

/// Checks that `gram` is the identity up to `tol` in max-norm.
pub fn verify_identity<T: Scalar>(gram: &GramMatrix<T>, tol: T) -> BiorthReport<T> {
    report(gram, tol, CheckMode::Identity)
}

/// Which pair of families a Gram matrix is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramKind {
    /// Auxiliary fields against their dual partners (H¹: primal against raw duals).
    Aux,
    /// Primal basis against the dual auxiliary fields.
    Mixed,
    /// Primal basis against the normalized, recombined duals.
    Combined,
}

impl FromStr for GramKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "aux" => Ok(Self::Aux),
            "mixed" => Ok(Self::Mixed),
            "combined" => Ok(Self::Combined),
            other => Err(Error::Unsupported(format!("unknown gram kind '{other}'"))),
        }
    }
}

/// Builds the families for `kind` and assembles their Gram matrix.
pub fn gram_for<T: Scalar>(spec: FamilySpec, kind: GramKind, mode: DualMode, quad_margin: usize) -> Result<GramMatrix<T>> {
    match kind {
        GramKind::Aux => assemble_gram::<T>(
            &BasisFamily::new(spec, Role::Aux),
            &BasisFamily::new(spec, Role::DualAux),
            quad_margin,
        ),
        GramKind::Mixed => assemble_gram::<T>(
            &BasisFamily::new(spec, Role::Primal),
            &BasisFamily::new(spec, Role::DualAux),
            quad_margin,
        ),
        GramKind::Combined => {
            let duals = dual_family::<T>(spec, mode, quad_margin)?;
            assemble_gram::<T>(&BasisFamily::new(spec, Role::Primal), &duals, quad_margin)
        }
    }
}
