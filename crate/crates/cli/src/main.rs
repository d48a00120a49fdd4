use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use hpdual::audit;
use hpdual::biorth::fmt_num;
use hpdual::{
    gram_for, sparsity_pattern, verify_biorthogonality, verify_identity, DualMode, ElementKind, FamilySpec,
    GramKind, Projector, Space, TestFunction,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "hpdual", version, about = "Reference-element dual bases: Gram matrices, audits, projection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a Gram matrix for biorthogonality (exit 1 on failure).
    Verify(Common),
    /// Write a Gram matrix.
    Gram(Common),
    /// Write the sparsity pattern of a Gram matrix.
    Sparsity(Common),
    /// Printed coefficients next to oracle coefficients.
    Coeffs(Common),
    /// Project a built-in function onto the interior span.
    Project(ProjectArgs),
    /// Printed diagonal constants next to measured ones.
    Tables(Common),
}

fn parse<T: FromStr>(s: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.parse::<T>().map_err(|e| e.to_string())
}

#[derive(Args)]
struct Common {
    #[arg(long, value_parser = parse::<ElementKind>)]
    element: ElementKind,
    #[arg(long, value_parser = parse::<Space>, default_value = "h1")]
    space: Space,
    #[arg(long)]
    p: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// csv, json, pbm or text; the default depends on the command.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = parse::<DualMode>, default_value = "oracle")]
    mode: DualMode,
    /// aux, mixed or combined.
    #[arg(long, value_parser = parse::<GramKind>)]
    which: Option<GramKind>,
    /// Skip the identity/diagonal check for `gram` and `sparsity` unless set.
    #[arg(long)]
    check: bool,
    /// Quadrature degree on top of 2p.
    #[arg(long, default_value_t = hpdual::DEFAULT_MARGIN)]
    margin: usize,
}

#[derive(Args)]
struct ProjectArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_parser = parse::<TestFunction>, default_value = "sin")]
    function: TestFunction,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<hpdual::Error> for Failure {
    fn from(e: hpdual::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

impl Common {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Failure::Usage(format!("--tol must be positive (got {})", self.tol)));
        }
        Ok(FamilySpec::new(self.element, self.space, self.p)?)
    }

    fn format(&self, default: &str, allowed: &[&str]) -> Result<String, Failure> {
        let f = self.format.clone().unwrap_or_else(|| default.to_string());
        if allowed.contains(&f.as_str()) {
            Ok(f)
        } else {
            Err(Failure::Usage(format!("format '{f}' not available here (use one of {})", allowed.join(", "))))
        }
    }

    fn emit(&self, text: &str) -> io::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text),
            None => io::stdout().lock().write_all(text.as_bytes()),
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn verify(c: &Common) -> Outcome {
    let spec = c.spec()?;
    let fmt = c.format("text", &["text", "json"])?;
    let which = c.which.unwrap_or(GramKind::Combined);
    let g = gram_for::<f64>(spec, which, c.mode, c.margin)?;
    let report = match which {
        GramKind::Combined => verify_identity(&g, c.tol),
        GramKind::Aux => verify_biorthogonality(&g, c.tol),
        GramKind::Mixed => return Err(Failure::Usage("verify needs --which aux or combined".into())),
    };
    let text = if fmt == "json" { pretty(&report.to_json()) } else { format!("{}\n", report.summary()) };
    c.emit(&text)?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification(report.summary()))
    }
}

fn gram(c: &Common) -> Outcome {
    let spec = c.spec()?;
    let fmt = c.format("csv", &["csv", "json"])?;
    let g = gram_for::<f64>(spec, c.which.unwrap_or(GramKind::Combined), c.mode, c.margin)?;
    let text = if fmt == "csv" {
        g.to_csv()
    } else {
        let values: Vec<Vec<f64>> = (0..g.nrows()).map(|r| (0..g.ncols()).map(|k| g.get(r, k)).collect()).collect();
        pretty(&json!({
            "element": g.element.name(),
            "space": g.space.name(),
            "p": g.p,
            "quadrature_degree": g.quadrature_degree,
            "rows": g.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "cols": g.cols().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "values": values,
        }))
    };
    c.emit(&text)?;
    Ok(())
}

fn sparsity(c: &Common) -> Outcome {
    let spec = c.spec()?;
    let fmt = c.format("pbm", &["pbm", "csv"])?;
    let which = c.which.unwrap_or(GramKind::Aux);
    let g = gram_for::<f64>(spec, which, c.mode, c.margin)?;
    let pattern = sparsity_pattern(&g, c.tol);
    c.emit(&if fmt == "pbm" { pattern.to_pbm() } else { pattern.to_csv() })?;
    if c.check && which != GramKind::Mixed && !pattern.is_diagonal() {
        return Err(Failure::Verification(format!("pattern has {} nonzeros off a diagonal of {}", pattern.count(), g.nrows())));
    }
    Ok(())
}

fn audit_output(c: &Common, rows: &[hpdual::AuditRow]) -> Outcome {
    let fmt = c.format("csv", &["csv", "json"])?;
    let text = if fmt == "csv" { audit::to_csv(rows, c.mode) } else { pretty(&audit::to_json(rows, c.mode)) };
    c.emit(&text)?;
    for (family, n, m, s, x) in audit::summarize(rows) {
        eprintln!("{family}: {n} rows, {m} match, {s} sign, {x} mismatch");
    }
    Ok(())
}

fn coeffs(c: &Common) -> Outcome {
    let rows = audit::coefficient_table::<f64>(c.spec()?, c.margin)?;
    audit_output(c, &rows)
}

fn tables(c: &Common) -> Outcome {
    let rows = audit::diagonal_table::<f64>(c.spec()?, c.margin)?;
    audit_output(c, &rows)
}

fn project(a: &ProjectArgs) -> Outcome {
    let c = &a.common;
    let spec = c.spec()?;
    c.format("json", &["json"])?;
    let projector = Projector::new(spec, c.margin)?;
    let dim = spec.element.dim();
    let res = projector.project(|x| a.function.eval(x, dim));
    let mut v = res.to_json();
    v["function"] = json!(a.function.name());
    c.emit(&pretty(&v))?;
    eprintln!("l2_error {}", fmt_num(res.l2_error));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(c) => verify(c),
        Command::Gram(c) => gram(c),
        Command::Sparsity(c) => sparsity(c),
        Command::Coeffs(c) => coeffs(c),
        Command::Tables(c) => tables(c),
        Command::Project(a) => project(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
