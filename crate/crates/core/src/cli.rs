//! Batch command-line front end. Five subcommands (spectrum, power, det,
//! factor, verify) each produce a `Report`; `--output json` prints it as
//! byte-stable JSON, the default pretty mode renders it for humans.
//! Exit codes: 0 success, 2 precondition or usage violation, 3 verification
//! failure.

use crate::error::{Error, Result};
use crate::fibfact::{fib_poly, fibpoly_factor_product, DaggerVariant, FibPolyValue};
use crate::numkit::{tridiag_det, ComplexScalar};
use crate::powers::{power, Method, PowerRequest};
use crate::report::{
    errata, ComplexOut, DetOutputs, FactorOutputs, Float, Inputs, Outputs, PowerOutputs,
    PropertyOutputs, Report, SpectrumOutputs, VerifyOutputs,
};
use crate::specmat::{build, eigen_residual, eigenvalues, nodes_for, Family, FamilySpec};
use crate::verify;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Debug, Parser)]
#[command(
    name = "tripow",
    version,
    about = "Closed-form spectra, integer powers, and determinant factorizations \
             of two structured complex tridiagonal matrix families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    pub output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form eigenvalues and nodes, with the worst eigenpair residual.
    Spectrum(MatrixArgs),
    /// Integer matrix power: spectral closed form at odd orders (with an
    /// oracle cross-check), brute-force oracle at even orders.
    Power(PowerArgs),
    /// Determinant via the band recurrence and via the eigenvalue product.
    Det(MatrixArgs),
    /// Integer sequence values recovered as complex eigenvalue factor
    /// products, against the exact big-integer recurrence.
    Factor(FactorArgs),
    /// Property sweep over every module invariant.
    Verify,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix family: A or A-dagger.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,

    /// Matrix order (n >= 2; spectra of family A need n >= 3).
    #[arg(long)]
    pub n: usize,

    /// Diagonal parameter as "re" or "re,im".
    #[arg(long, value_parser = parse_complex)]
    pub a: ComplexScalar,

    /// Off-diagonal parameter as "re" or "re,im"; must be nonzero
    /// (b = i is "--b 0,1").
    #[arg(long, value_parser = parse_complex)]
    pub b: ComplexScalar,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,

    /// Integer exponent (any sign; negative exponents need an invertible
    /// matrix).
    #[arg(long, allow_hyphen_values = true)]
    pub r: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceArg {
    /// Fibonacci numbers.
    Fib,
    /// Pell numbers.
    Pell,
    /// Fibonacci polynomial values F_{n-1}(x).
    Fibpoly,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    /// Which sequence identity to evaluate.
    #[arg(long, value_enum)]
    pub sequence: SequenceArg,

    /// Sequence index (fib/pell: n >= 1; fibpoly: matrix order n >= 3).
    #[arg(long)]
    pub n: u64,

    /// Polynomial argument for fibpoly, as "re" or "re,im".
    #[arg(long, value_parser = parse_complex, required_if_eq("sequence", "fibpoly"))]
    pub x: Option<ComplexScalar>,
}

pub fn parse_complex(s: &str) -> std::result::Result<ComplexScalar, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let parse_part = |p: &str, what: &str| -> std::result::Result<f64, String> {
        let v: f64 = p
            .trim()
            .parse()
            .map_err(|_| format!("cannot parse {what} part '{p}' of complex value '{s}'"))?;
        if !v.is_finite() {
            return Err(format!("non-finite {what} part in complex value '{s}'"));
        }
        Ok(v)
    };
    match parts.as_slice() {
        [re] => Ok(ComplexScalar::new(parse_part(re, "real")?, 0.0)),
        [re, im] => Ok(ComplexScalar::new(parse_part(re, "real")?, parse_part(im, "imaginary")?)),
        _ => Err(format!("complex value '{s}' must be 're' or 're,im'")),
    }
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn matrix_inputs(spec: &FamilySpec, r: Option<i64>) -> Inputs {
    Inputs {
        family: Some(spec.family().to_string()),
        n: Some(spec.n() as u64),
        a: Some(spec.a().into()),
        b: Some(spec.b().into()),
        r,
        ..Inputs::default()
    }
}

/// Sign-pattern note applies whenever eigenvectors of an even order >= 6
/// are in play.
fn eigenvector_errata(n: usize) -> Vec<String> {
    if n >= 6 && n.is_multiple_of(2) {
        vec![errata::EVEN_ORDER_SIGNS.to_string()]
    } else {
        Vec::new()
    }
}

pub fn spectrum_report(spec: &FamilySpec) -> Result<Report> {
    let eigenvalues = eigenvalues(spec)?;
    let nodes = nodes_for(spec.family(), spec.n())?;
    let mut worst = 0.0f64;
    for k in 1..=spec.n() {
        worst = worst.max(eigen_residual(spec, k)?);
    }
    let mut residuals = std::collections::BTreeMap::new();
    residuals.insert("max_eigen_residual".to_string(), Float(worst));
    Ok(Report {
        command: "spectrum".to_string(),
        inputs: matrix_inputs(spec, None),
        outputs: Outputs::Spectrum(SpectrumOutputs {
            eigenvalues: eigenvalues.into_iter().map(ComplexOut::from).collect(),
            nodes: nodes.into_iter().map(Float).collect(),
        }),
        residuals,
        errata_notes: eigenvector_errata(spec.n()),
    })
}

fn is_power_fixture(spec: &FamilySpec, r: i64, n: usize, want_r: i64) -> bool {
    spec.family() == Family::A
        && spec.n() == n
        && r == want_r
        && spec.a() == ComplexScalar::new(1.0, 0.0)
        && spec.b() == ComplexScalar::new(3.0, 0.0)
}

pub fn power_report(spec: &FamilySpec, r: i64) -> Result<Report> {
    let request = PowerRequest::new(*spec, r)?;
    let result = power(&request)?;
    let mut residuals = std::collections::BTreeMap::new();
    if let Some(residual) = result.cross_check_residual {
        residuals.insert("cross_check_max_abs".to_string(), Float(residual));
    }
    let mut errata_notes = Vec::new();
    if is_power_fixture(spec, r, 3, 3) {
        errata_notes.push(errata::CUBE_PREFACTOR.to_string());
    }
    if is_power_fixture(spec, r, 5, 4) {
        errata_notes.push(errata::FOURTH_POWER_PREFACTOR.to_string());
    }
    if result.method == Method::ClosedForm {
        errata_notes.push(errata::MODAL_WEIGHTS.to_string());
    }
    let matrix = result
        .value
        .rows()
        .into_iter()
        .map(|row| row.into_iter().map(ComplexOut::from).collect())
        .collect();
    Ok(Report {
        command: "power".to_string(),
        inputs: matrix_inputs(spec, Some(r)),
        outputs: Outputs::Power(PowerOutputs {
            matrix,
            method: result.method.name().to_string(),
        }),
        residuals,
        errata_notes,
    })
}

pub fn det_report(spec: &FamilySpec) -> Result<Report> {
    let by_recurrence = tridiag_det(&build(spec));
    let by_product = eigenvalues(spec)?
        .into_iter()
        .fold(ComplexScalar::new(1.0, 0.0), |acc, v| acc * v);
    let mut residuals = std::collections::BTreeMap::new();
    residuals.insert(
        "lane_rel_diff".to_string(),
        Float((by_recurrence - by_product).norm() / by_recurrence.norm().max(1.0)),
    );
    Ok(Report {
        command: "det".to_string(),
        inputs: matrix_inputs(spec, None),
        outputs: Outputs::Det(DetOutputs {
            det_recurrence: by_recurrence.into(),
            det_eigen_product: by_product.into(),
        }),
        residuals,
        errata_notes: Vec::new(),
    })
}

#[derive(Debug, Clone, Copy)]
pub enum FactorSelector {
    Fib(u64),
    Pell(u64),
    FibPoly(usize, ComplexScalar),
}

pub fn factor_report(selector: &FactorSelector) -> Result<Report> {
    let mut residuals = std::collections::BTreeMap::new();
    let (inputs, outputs, errata_notes) = match *selector {
        FactorSelector::Fib(n) | FactorSelector::Pell(n) => {
            let variant = match selector {
                FactorSelector::Fib(_) => DaggerVariant::Fib,
                _ => DaggerVariant::Pell,
            };
            let product = match variant {
                DaggerVariant::Fib => crate::fibfact::fib_factor_product(n)?,
                DaggerVariant::Pell => crate::fibfact::pell_factor_product(n)?,
            };
            let exact = variant.exact(n);
            let reference = FibPolyValue::Exact(exact.clone()).to_complex();
            residuals.insert(
                "rel_residual".to_string(),
                Float((product - reference).norm() / reference.norm().max(1.0)),
            );
            residuals.insert(
                "imag_leak".to_string(),
                Float(product.im.abs() / product.re.abs().max(1.0)),
            );
            let inputs = Inputs {
                sequence: Some(variant.name().to_string()),
                n: Some(n),
                ..Inputs::default()
            };
            let outputs = Outputs::Factor(FactorOutputs {
                sequence: variant.name().to_string(),
                exact: Some(exact.to_string()),
                product: product.into(),
                reference: reference.into(),
            });
            (inputs, outputs, vec![errata::SEQUENCE_HYPOTHESIS.to_string()])
        }
        FactorSelector::FibPoly(n, x) => {
            let product = fibpoly_factor_product(n, x)?;
            let value = fib_poly((n - 1) as u64, x);
            let reference = value.to_complex();
            residuals.insert(
                "rel_residual".to_string(),
                Float((product - reference).norm() / reference.norm().max(1.0)),
            );
            let exact = match &value {
                FibPolyValue::Exact(v) => Some(v.to_string()),
                FibPolyValue::Numeric(_) => None,
            };
            let inputs = Inputs {
                sequence: Some("fibpoly".to_string()),
                n: Some(n as u64),
                x: Some(x.into()),
                ..Inputs::default()
            };
            let outputs = Outputs::Factor(FactorOutputs {
                sequence: "fibpoly".to_string(),
                exact,
                product: product.into(),
                reference: reference.into(),
            });
            (inputs, outputs, Vec::new())
        }
    };
    Ok(Report {
        command: "factor".to_string(),
        inputs,
        outputs,
        residuals,
        errata_notes,
    })
}

pub fn verify_report() -> Report {
    let summary = verify::run_all();
    let mut residuals = std::collections::BTreeMap::new();
    let properties: Vec<PropertyOutputs> = summary
        .reports
        .iter()
        .map(|r| {
            residuals.insert(r.name.clone(), Float(r.max_residual));
            PropertyOutputs {
                name: r.name.clone(),
                passed: r.passed,
                cases: r.cases as u64,
                max_residual: Float(r.max_residual),
                tolerance: Float(r.tolerance),
                detail: r.detail.clone(),
            }
        })
        .collect();
    let total = properties.len() as u64;
    let failed = summary.failed_count() as u64;
    let max_n = std::env::var("VERIFY_MAX_N").ok().and_then(|v| v.trim().parse().ok());
    Report {
        command: "verify".to_string(),
        inputs: Inputs { max_n, ..Inputs::default() },
        outputs: Outputs::Verify(VerifyOutputs { properties, total, failed }),
        residuals,
        errata_notes: vec![
            errata::MODAL_WEIGHTS.to_string(),
            errata::EVEN_ORDER_SIGNS.to_string(),
            errata::SEQUENCE_HYPOTHESIS.to_string(),
        ],
    }
}

fn complex_pretty(z: &ComplexOut) -> String {
    format!("{}", z.to_complex())
}

fn render_pretty(report: &Report) -> String {
    let mut lines = Vec::new();
    lines.push(format!("command: {}", report.command));
    let inp = &report.inputs;
    let mut input_parts = Vec::new();
    if let Some(f) = &inp.family {
        input_parts.push(format!("family {f}"));
    }
    if let Some(n) = inp.n {
        input_parts.push(format!("n {n}"));
    }
    if let Some(a) = &inp.a {
        input_parts.push(format!("a {}", complex_pretty(a)));
    }
    if let Some(b) = &inp.b {
        input_parts.push(format!("b {}", complex_pretty(b)));
    }
    if let Some(r) = inp.r {
        input_parts.push(format!("r {r}"));
    }
    if let Some(s) = &inp.sequence {
        input_parts.push(format!("sequence {s}"));
    }
    if let Some(x) = &inp.x {
        input_parts.push(format!("x {}", complex_pretty(x)));
    }
    if let Some(m) = inp.max_n {
        input_parts.push(format!("max_n {m}"));
    }
    if !input_parts.is_empty() {
        lines.push(format!("inputs: {}", input_parts.join(", ")));
    }
    match &report.outputs {
        Outputs::Spectrum(s) => {
            for (i, (v, m)) in s.eigenvalues.iter().zip(s.nodes.iter()).enumerate() {
                lines.push(format!(
                    "lambda[{}] = {} (node {})",
                    i + 1,
                    complex_pretty(v),
                    m.0
                ));
            }
        }
        Outputs::Power(p) => {
            lines.push(format!("method: {}", p.method));
            for row in &p.matrix {
                let cells: Vec<String> = row.iter().map(complex_pretty).collect();
                lines.push(format!("[ {} ]", cells.join(", ")));
            }
        }
        Outputs::Det(d) => {
            lines.push(format!("det (recurrence): {}", complex_pretty(&d.det_recurrence)));
            lines.push(format!(
                "det (eigenvalue product): {}",
                complex_pretty(&d.det_eigen_product)
            ));
        }
        Outputs::Factor(f) => {
            if let Some(exact) = &f.exact {
                lines.push(format!("exact: {exact}"));
            }
            lines.push(format!("product: {}", complex_pretty(&f.product)));
            lines.push(format!("reference: {}", complex_pretty(&f.reference)));
        }
        Outputs::Verify(v) => {
            for p in &v.properties {
                lines.push(format!(
                    "{} {} ({} cases, max residual {:.3e}, tolerance {:.3e}){}",
                    if p.passed { "PASS" } else { "FAIL" },
                    p.name,
                    p.cases,
                    p.max_residual.0,
                    p.tolerance.0,
                    if p.detail.is_empty() || p.passed {
                        String::new()
                    } else {
                        format!(" worst: {}", p.detail)
                    }
                ));
            }
            lines.push(format!("{} properties, {} failed", v.total, v.failed));
        }
    }
    for (name, value) in &report.residuals {
        lines.push(format!("residual {name}: {:.3e}", value.0));
    }
    for note in &report.errata_notes {
        lines.push(format!("errata: {note}"));
    }
    lines.join("\n")
}

fn emit(report: &Report, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => {
            let json = serde_json::to_string(report)
                .map_err(|e| Error::NonFinite(format!("report serialization failed: {e}")))?;
            println!("{json}");
        }
        OutputFormat::Pretty => println!("{}", render_pretty(report)),
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Spectrum(args) => {
            let spec = FamilySpec::new(args.family, args.n, args.a, args.b)?;
            emit(&spectrum_report(&spec)?, cli.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Power(args) => {
            let m = &args.matrix;
            let spec = FamilySpec::new(m.family, m.n, m.a, m.b)?;
            emit(&power_report(&spec, args.r)?, cli.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Det(args) => {
            let spec = FamilySpec::new(args.family, args.n, args.a, args.b)?;
            emit(&det_report(&spec)?, cli.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Factor(args) => {
            let selector = match args.sequence {
                SequenceArg::Fib => FactorSelector::Fib(args.n),
                SequenceArg::Pell => FactorSelector::Pell(args.n),
                SequenceArg::Fibpoly => {
                    let x = args.x.ok_or_else(|| {
                        Error::InvalidSpec("fibpoly needs --x".to_string())
                    })?;
                    FactorSelector::FibPoly(args.n as usize, x)
                }
            };
            emit(&factor_report(&selector)?, cli.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let report = verify_report();
            let failed = matches!(&report.outputs, Outputs::Verify(v) if v.failed > 0);
            emit(&report, cli.output)?;
            if failed {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

/// Entry point for the binary: parse, run, map errors to exit code 2 with
/// a one-line reason on stderr.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
