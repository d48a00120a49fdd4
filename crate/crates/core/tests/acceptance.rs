//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::time::{Duration, Instant};

use hpdual::audit::{self, Status};
use hpdual::biorth::{csv_field, fmt_num, GramKind};
use hpdual::family::{BasisFamily, Role, ShapeFamily};
use hpdual::hcurl::{self, hcurl_primal_eval};
use hpdual::orthopoly::{gauss_rule, integrated_jacobi_eval, jacobi_eval, jacobi_norm, legendre, mixed_legendre_jacobi_integral};
use hpdual::project::Projector;
use hpdual::{
    gram_for, sparsity_pattern, verify_biorthogonality, verify_identity, DualMode, ElementKind, FamilySpec, ShapeIndex,
    Space, Tag,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MARGIN: usize = 4;

struct Outcome {
    pass: bool,
    detail: String,
}

fn spec(kind: ElementKind, space: Space, p: usize) -> FamilySpec {
    FamilySpec::new(kind, space, p).unwrap()
}

fn orthogonality_constants() -> Outcome {
    let mut worst = 0.0f64;
    for beta in 0..=1u8 {
        for alpha in 0..=8usize {
            for n in 0..=20usize {
                for m in 0..=20usize {
                    let rule = gauss_rule::<f64>(n + m + alpha + beta as usize + 2).unwrap();
                    let (a, b) = (alpha as f64, beta as f64);
                    let v = rule.integrate(|x| {
                        (1.0 - x).powi(alpha as i32)
                            * (1.0 + x).powi(beta as i32)
                            * jacobi_eval(n, a, b, x).unwrap()
                            * jacobi_eval(m, a, b, x).unwrap()
                    });
                    let norm = jacobi_norm(n.max(m), a, beta).unwrap();
                    let err = if n == m { (v - norm).abs() / norm } else { v.abs() / norm };
                    worst = worst.max(err);
                }
            }
        }
    }
    Outcome { pass: worst <= 1e-12, detail: format!("max relative error {worst:.3e} (limit 1e-12)") }
}

fn mixed_integral() -> Outcome {
    let rule = gauss_rule::<f64>(20).unwrap();
    let mut worst = 0.0f64;
    for i in 0..=15 {
        for k in 0..=15 {
            let v = rule.integrate(|x| legendre(i, x) * jacobi_eval(k, 1.0, 1.0, x).unwrap());
            worst = worst.max((v - mixed_legendre_jacobi_integral::<f64>(i, k)).abs());
        }
    }
    Outcome { pass: worst <= 1e-12, detail: format!("max abs error {worst:.3e} (limit 1e-12)") }
}

fn identity_checks(cases: &[(ElementKind, Space, usize)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for &(kind, space, p) in cases {
        let g = gram_for::<f64>(spec(kind, space, p), GramKind::Combined, DualMode::Oracle, MARGIN).unwrap();
        let r = verify_identity(&g, 1e-10);
        pass &= r.pass;
        parts.push(format!("{kind} p={p} n={} err={:.2e}", g.nrows(), r.identity_error));
    }
    Outcome { pass, detail: parts.join("; ") }
}

fn aux_diagonal() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (kind, p) in [(ElementKind::Triangle, 6), (ElementKind::Quad, 10), (ElementKind::Tetrahedron, 6)] {
        let g = gram_for::<f64>(spec(kind, Space::HCurl, p), GramKind::Aux, DualMode::Oracle, MARGIN).unwrap();
        let r = verify_biorthogonality(&g, 1e-10);
        let pat = sparsity_pattern(&g, 1e-10);
        let n = g.nrows();
        let mut expected = format!("P1\n{n} {n}\n");
        for r in 0..n {
            let row: Vec<&str> = (0..n).map(|c| if r == c { "1" } else { "0" }).collect();
            expected.push_str(&row.join(" "));
            expected.push('\n');
        }
        let ok = r.pass && pat.is_diagonal() && pat.to_pbm() == expected;
        pass &= ok;
        parts.push(format!("{kind} p={p} n={n} offdiag_rel={:.2e} pbm_diagonal={}", r.max_offdiag_rel, pat.is_diagonal()));
    }
    Outcome { pass, detail: parts.join("; ") }
}

/// `∫ w(x) f(x) dx` on `[-1, 1]` with a generous Gauss rule.
fn integrate_1d(f: impl Fn(f64) -> f64) -> f64 {
    gauss_rule::<f64>(40).unwrap().integrate(f)
}

/// Tetrahedral `⟨aI, B⟩` reduced to one-dimensional integrals.
fn tet_d1_analytic(i: usize, j: usize, k: usize) -> f64 {
    let (fi, fj) = (i as f64, j as f64);
    let eta = integrate_1d(|x| legendre(i - 1, x).powi(2));
    let chi = integrate_1d(|x| {
        ((1.0 - x) / 2.0).powi(2 * i as i32 - 1)
            * integrated_jacobi_eval(j, 2.0 * fi, x).unwrap()
            * jacobi_eval(j - 1, 2.0 * fi - 1.0, 1.0, x).unwrap()
    });
    let z = integrate_1d(|x| {
        ((1.0 - x) / 2.0).powi(2 * (i + j) as i32 - 1)
            * integrated_jacobi_eval(k, 2.0 * (fi + fj), x).unwrap()
            * jacobi_eval(k - 1, 2.0 * (fi + fj) - 1.0, 1.0, x).unwrap()
    });
    eta * chi * z
}

/// Tetrahedral `⟨aIII, D⟩` reduced to one-dimensional integrals.
fn tet_d3_analytic(i: usize, j: usize, k: usize) -> f64 {
    let (fi, fj) = (i as f64, j as f64);
    let eta = integrate_1d(|x| hpdual::orthopoly::integrated_legendre(i, x) * jacobi_eval(i - 2, 1.0, 1.0, x).unwrap());
    let chi = integrate_1d(|x| {
        ((1.0 - x) / 2.0).powi(2 * i as i32 - 1)
            * integrated_jacobi_eval(j, 2.0 * fi, x).unwrap()
            * jacobi_eval(j - 1, 2.0 * fi - 1.0, 1.0, x).unwrap()
    });
    let z = integrate_1d(|x| {
        ((1.0 - x) / 2.0).powi(2 * (i + j) as i32) * jacobi_eval(k - 1, 2.0 * (fi + fj), 0.0, x).unwrap().powi(2)
    });
    eta * chi * z
}

fn printed_constant_audit() -> Outcome {
    let mut confirmed = Vec::new();
    let mut flagged = Vec::new();
    let mut problems = Vec::new();

    // Anchors that must agree with the measured diagonals up to sign.
    let mut expect_agree = |rows: &[hpdual::AuditRow], family: &str, label: &str| {
        let sel: Vec<_> = rows.iter().filter(|r| r.family == family).collect();
        if !sel.is_empty() && sel.iter().all(|r| r.status != Status::Mismatch) {
            confirmed.push(label.to_string());
        } else {
            problems.push(format!("{label} disagrees"));
        }
    };
    let quad = spec(ElementKind::Quad, Space::HCurl, 10);
    let quad_coeffs = audit::coefficient_table::<f64>(quad, MARGIN).unwrap();
    expect_agree(&quad_coeffs, "alpha_ij", "quad alpha_ij");
    expect_agree(&quad_coeffs, "alpha_ji", "quad alpha_ji");
    let tri = spec(ElementKind::Triangle, Space::HCurl, 10);
    let tri_diag = audit::diagonal_table::<f64>(tri, MARGIN).unwrap();
    expect_agree(&tri_diag, "<aI,B>", "tri <aI,B>=8/(..)");
    expect_agree(&tri_diag, "<aII,C>", "tri <aII,C>=16/(..)");
    let tet = spec(ElementKind::Tetrahedron, Space::HCurl, 8);
    let tet_diag = audit::diagonal_table::<f64>(tet, MARGIN).unwrap();

    // The tetrahedral anchors: either confirmed, or every row is flagged and the
    // measured value agrees with an independent one-dimensional reduction.
    let tet_anchors: [(&str, &str, Option<fn(usize, usize, usize) -> f64>); 3] = [
        ("<aI,B>", "tet <aI,B>=2^7/(..)", Some(tet_d1_analytic)),
        ("<aII,C>", "tet <aII,C>=2^6/(..)", None),
        ("<aIII,D>", "tet <aIII,D>=2^6/(..)", Some(tet_d3_analytic)),
    ];
    let csv = audit::to_csv(&tet_diag, DualMode::Paper);
    for (family, label, analytic) in tet_anchors {
        let sel: Vec<_> = tet_diag.iter().filter(|r| r.family == family).collect();
        if sel.iter().all(|r| r.status != Status::Mismatch) {
            confirmed.push(label.to_string());
            continue;
        }
        let all_flagged = sel.iter().all(|r| {
            r.status == Status::Mismatch
                && csv.lines().any(|l| l.starts_with(&format!("{},{},", csv_field(&r.family), csv_field(&r.index.to_string()))) && l.ends_with(",mismatch"))
        });
        let ratios: Vec<f64> = sel.iter().map(|r| r.ratio).collect();
        let constant = ratios.iter().all(|x| (x - ratios[0]).abs() < 1e-11 * ratios[0].abs());
        let verified = analytic.is_some_and(|f| {
            sel.iter().all(|r| {
                let [i, j, k] = r.index.indices;
                let a = f(i, j, k);
                ((a - r.oracle) / a).abs() < 1e-11
            })
        });
        if all_flagged && verified {
            let ratio = if constant { format!("printed/measured = {}", fmt_num(ratios[0])) } else { "non-constant ratio".into() };
            flagged.push(format!("{label} ({ratio}, measured value confirmed by 1-D reduction)"));
        } else {
            problems.push(format!("{label}: flagged={all_flagged} verified={verified}"));
        }
    }

    // The triangle alpha_1 lemma-versus-proof inconsistency must surface as a discrepancy.
    let tri_coeffs = audit::coefficient_table::<f64>(tri, MARGIN).unwrap();
    let proof_rows = tri_coeffs.iter().filter(|r| r.family == "alpha1_proof");
    let csv = audit::to_csv(&tri_coeffs, DualMode::Oracle);
    let proof_flagged = csv.lines().filter(|l| l.starts_with("alpha1_proof,") && l.ends_with(",mismatch")).count();
    let proof_mismatch = proof_rows.filter(|r| r.status == Status::Mismatch).count();
    if proof_mismatch > 0 && proof_flagged == proof_mismatch {
        flagged.push(format!("tri alpha1 proof variant ({proof_mismatch} rows)"));
    } else {
        problems.push("tri alpha1 proof variant not flagged".into());
    }

    let detail = format!(
        "confirmed up to sign: [{}]; flagged discrepancies: [{}]{}",
        confirmed.join(", "),
        flagged.join(", "),
        if problems.is_empty() { String::new() } else { format!("; problems: [{}]", problems.join(", ")) }
    );
    Outcome { pass: problems.is_empty(), detail }
}

fn edge_type_orthogonality() -> Outcome {
    let mut worst = 0.0f64;
    let p = 8;
    for kind in [ElementKind::Triangle, ElementKind::Tetrahedron] {
        let g = gram_for::<f64>(spec(kind, Space::HCurl, p), GramKind::Mixed, DualMode::Oracle, MARGIN).unwrap();
        let scale = g.max_abs();
        let edge_tag = if kind == ElementKind::Triangle { Tag::III } else { Tag::IV };
        for (r, row) in g.rows().iter().enumerate() {
            if row.tag != edge_tag {
                continue;
            }
            for (c, col) in g.cols().iter().enumerate() {
                // B_{1..} is the edge functions' own dual; everything else must vanish.
                if col.tag == Tag::B && col.i() == 1 {
                    continue;
                }
                worst = worst.max(g.get(r, c).abs() / scale);
            }
        }
    }
    Outcome { pass: worst <= 1e-11, detail: format!("max |pairing|/scale {worst:.3e} (limit 1e-11) at p={p}") }
}

fn random_interior_point(kind: ElementKind, rng: &mut StdRng) -> [f64; 3] {
    loop {
        let mut n = [0.0; 3];
        for v in n.iter_mut().take(kind.dim()) {
            *v = rng.gen_range(-0.95..0.95);
        }
        let x: [f64; 3] = kind.native_to_cartesian(n);
        if x.iter().all(|c| c.is_finite()) {
            return x;
        }
    }
}

fn gradient_and_curl() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let (mut grad_err, mut curl_err) = (0.0f64, 0.0f64);
    let p = 5;
    for kind in [ElementKind::Quad, ElementKind::Triangle, ElementKind::Tetrahedron] {
        let dim = kind.dim();
        let fields = hcurl::members(kind, Tag::I, p);
        for _ in 0..100 {
            let x = random_interior_point(kind, &mut rng);
            for idx in &fields {
                let bubble = idx.with_tag(Tag::U);
                let u = |y: [f64; 3]| hpdual::h1::h1_primal_eval_cartesian(&bubble, y).unwrap();
                let v = |y: [f64; 3]| hpdual::hcurl::hcurl_primal_eval_cartesian(idx, y).unwrap().components;
                let shift = |y: [f64; 3], d: usize, h: f64| {
                    let mut z = y;
                    z[d] += h;
                    z
                };
                let vx = v(x);
                let h = 1e-6;
                for d in 0..dim {
                    let fd = (u(shift(x, d, h)) - u(shift(x, d, -h))) / (2.0 * h);
                    grad_err = grad_err.max((fd - vx[d]).abs() / vx[d].abs().max(1.0));
                }
                let h = 1e-5;
                let dv = |comp: usize, d: usize| (v(shift(x, d, h))[comp] - v(shift(x, d, -h))[comp]) / (2.0 * h);
                if dim == 2 {
                    curl_err = curl_err.max((dv(1, 0) - dv(0, 1)).abs());
                } else {
                    for (a, b) in [(1, 2), (2, 0), (0, 1)] {
                        curl_err = curl_err.max((dv(b, a) - dv(a, b)).abs());
                    }
                }
            }
        }
    }
    // Sanity: the checked fields really are primal type I fields.
    let idx = ShapeIndex::new(ElementKind::Quad, Tag::I, [2, 2, 0]);
    let ok = hcurl_primal_eval(&idx, &[0.0f64; 3]).is_ok();
    Outcome {
        pass: ok && grad_err <= 1e-6 && curl_err <= 1e-6,
        detail: format!("gradient mismatch {grad_err:.2e}, curl {curl_err:.2e} (limits 1e-6), p={p}, 100 points/element"),
    }
}

fn projection() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut worst = 0.0f64;
    let families = [
        (ElementKind::Quad, Space::H1, 6),
        (ElementKind::Hex, Space::H1, 5),
        (ElementKind::Triangle, Space::H1, 7),
        (ElementKind::Tetrahedron, Space::H1, 6),
        (ElementKind::Quad, Space::HCurl, 6),
        (ElementKind::Triangle, Space::HCurl, 6),
        (ElementKind::Tetrahedron, Space::HCurl, 5),
    ];
    for (kind, space, p) in families {
        let s = spec(kind, space, p);
        let proj = Projector::new(s, 6).unwrap();
        let basis = BasisFamily::new(s, Role::Primal);
        let n = ShapeFamily::<f64>::members(&basis).len();
        let vd = s.value_dim();
        for _ in 0..20 {
            let mut c: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm = c.iter().map(|v| v * v).sum::<f64>().sqrt();
            let shrink: f64 = rng.gen_range(0.1..1.0);
            c.iter_mut().for_each(|v| *v *= shrink / norm);
            let u = |x: &[f64; 3]| {
                let native = kind.cartesian_to_native(*x);
                let mut out = [0.0; 3];
                let mut buf = [0.0; 3];
                for (m, cm) in c.iter().enumerate() {
                    basis.eval_native(m, &native, &mut buf[..vd]);
                    for k in 0..vd {
                        out[k] += cm * buf[k];
                    }
                }
                out
            };
            worst = worst.max(proj.project(u).l2_error);
        }
    }
    let errs: Vec<f64> = [4, 6, 8]
        .iter()
        .map(|&p| {
            let proj = Projector::new(spec(ElementKind::Quad, Space::H1, p), 6).unwrap();
            proj.project(|x| hpdual::TestFunction::Sin.eval(x, 2)).l2_error
        })
        .collect();
    let decreasing = errs.windows(2).all(|w| w[1] < w[0]);
    Outcome {
        pass: worst <= 1e-11 && decreasing,
        detail: format!(
            "span reproduction max l2 {worst:.2e} (limit 1e-11); sin·sin l2 p=4,6,8: {:.3e}, {:.3e}, {:.3e}",
            errs[0], errs[1], errs[2]
        ),
    }
}

fn main() {
    let criteria: Vec<(&str, Option<Duration>, fn() -> Outcome)> = vec![
        ("orthogonality constants", Some(Duration::from_secs(5)), orthogonality_constants),
        ("mixed Legendre-Jacobi integral", Some(Duration::from_secs(1)), mixed_integral),
        ("H1 biorthogonality", Some(Duration::from_secs(60)), || {
            identity_checks(&[
                (ElementKind::Quad, Space::H1, 10),
                (ElementKind::Hex, Space::H1, 8),
                (ElementKind::Triangle, Space::H1, 10),
                (ElementKind::Tetrahedron, Space::H1, 8),
            ])
        }),
        ("H(curl) auxiliary biorthogonality", None, aux_diagonal),
        ("H(curl) combined biorthogonality", Some(Duration::from_secs(120)), || {
            identity_checks(&[
                (ElementKind::Quad, Space::HCurl, 10),
                (ElementKind::Triangle, Space::HCurl, 10),
                (ElementKind::Tetrahedron, Space::HCurl, 8),
            ])
        }),
        ("printed-constant audit", None, printed_constant_audit),
        ("type III/IV orthogonality", None, edge_type_orthogonality),
        ("gradient and curl checks", None, gradient_and_curl),
        ("projection", None, projection),
    ];
    let mut failures = 0;
    for (n, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > limit {
                out.pass = false;
                out.detail.push_str(&format!("; exceeded runtime limit {limit:?}"));
            }
        }
        if !out.pass {
            failures += 1;
        }
        println!(
            "criterion {}: {} - {name}: {} [{:.2}s]",
            n + 1,
            if out.pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
