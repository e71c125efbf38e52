use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use pompeiu::combinat::gallery::exp_counterexample_1d;
use pompeiu::combinat::{coloring_solution, color_search, solves_all_ones, transversal_search, CopySystem};
use pompeiu::exactfield::{lemma2_relation, parse_rational, BigRational, FieldDescriptor};
use pompeiu::linsys::{infeasible_core, prop1_force};
use pompeiu::search::{minimize_witness, rotation_pool, witness_search, SearchOutcome};

use crate::config::{field_name, parse_field, parse_weights, ProblemConfig};
use crate::document::{
    certificate_document, certificate_value, emit, exhaustion_document, parse_certificate, row_value, FORMAT,
};
use crate::instance::{parse_copy_system, parse_gen_system, render_equation};
use crate::verify::verify_document;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "pompeiu", version, about = "Exact forcing certificates for weighted congruent-copy equations")]
pub struct Cli {
    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a certificate that the target value is forced to vanish.
    Witness {
        #[arg(long)]
        config: PathBuf,
        /// Keep every cited placement instead of greedily shrinking the set.
        #[arg(long)]
        no_minimize: bool,
    },
    /// Re-check a certificate document from scratch.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Find a coloring splitting every copy evenly.
    Color {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        colors: usize,
    },
    /// Find a set meeting every copy in exactly m points.
    Transversal {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Integer relation among three powers of a root of cx² + x + c.
    Lemma2 {
        #[arg(long)]
        c: i64,
        /// Three increasing exponents, e.g. `0,1,3`.
        #[arg(long)]
        exponents: String,
    },
    /// List the rotation pool used by the search.
    Rotations {
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, default_value_t = 2)]
        dimension: usize,
        #[arg(long, default_value_t = 8)]
        size: usize,
    },
    /// Forcing on the integer lattice with maps x ↦ b + κx.
    Prop1 {
        /// Lattice points separated by `;`, coordinates by `,`.
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        weights: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        translations: String,
        #[arg(long)]
        scales: String,
    },
    /// Deletion-minimal infeasible subsystem of an affine system.
    Core {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Exponential solutions on the line for the tuple a.
    Gallery1d {
        /// Rational points separated by `,`.
        #[arg(long)]
        points: String,
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// A finished run: exit code 0 or 1 and the document text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub text: String,
}

impl Output {
    fn new(code: i32, doc: &Value) -> Self {
        Output { code, text: emit(doc) }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn int_list(text: &str, sep: char) -> Result<Vec<i64>, CliError> {
    text.split(sep)
        .map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("bad integer {t:?}"))))
        .collect()
}

fn lattice_points(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    text.split(';').map(|p| int_list(p, ',')).collect()
}

fn instance_echo(sys: &CopySystem) -> Value {
    json!({ "points": sys.point_count(), "size": sys.copy_size(), "copies": sys.copies() })
}

fn witness(config: &Path, no_minimize: bool) -> Result<Output, CliError> {
    let cfg = ProblemConfig::parse(&read(config)?)?;
    let problem = cfg.problem()?;
    match witness_search(&problem, &cfg.budget) {
        SearchOutcome::Exhausted(report) => Ok(Output::new(1, &exhaustion_document(&cfg, &report))),
        SearchOutcome::Certificate(found) => {
            let cert = if no_minimize {
                found.certificate.clone()
            } else {
                minimize_witness(&found.rows, &found.certificate)?
            };
            let mut doc = certificate_document(&cfg, &found, &cert);
            let report = verify_document(&doc);
            if !report.passed() {
                return Err(usage(format!("internal error: certificate failed verification: {:?}", report.diagnostics)));
            }
            doc.verification = "verified".to_string();
            Ok(Output {
                code: 0,
                text: emit(&doc),
            })
        }
    }
}

fn verify(input: &Path) -> Result<Output, CliError> {
    let doc = parse_certificate(&read(input)?)?;
    let report = verify_document(&doc);
    let status = if report.passed() { "pass" } else { "fail" };
    let out = json!({
        "format": FORMAT,
        "kind": "verification",
        "status": status,
        "diagnostics": report.diagnostics,
    });
    Ok(Output::new(if report.passed() { 0 } else { 1 }, &out))
}

fn color(instance: &Path, d: usize) -> Result<Output, CliError> {
    let sys = parse_copy_system(&read(instance)?)?;
    let doc = match color_search(&sys, d)? {
        Some(col) => {
            let f = coloring_solution(&col, d);
            json!({
                "format": FORMAT,
                "kind": "coloring",
                "colors": d,
                "instance": instance_echo(&sys),
                "coloring": col.colors,
                "solution": f.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "solution_checked": solves_all_ones(&sys, &f),
            })
        }
        None => json!({
            "format": FORMAT,
            "kind": "coloring",
            "colors": d,
            "instance": instance_echo(&sys),
            "coloring": Value::Null,
            "obstruction": "no coloring of this finite system puts exactly n/d points of each color in every copy",
        }),
    };
    Ok(Output::new(0, &doc))
}

fn transversal(instance: &Path, m: usize) -> Result<Output, CliError> {
    let sys = parse_copy_system(&read(instance)?)?;
    let mut doc = json!({
        "format": FORMAT,
        "kind": "transversal",
        "m": m,
        "instance": instance_echo(&sys),
    });
    match transversal_search(&sys, m)? {
        Some(t) => doc["members"] = json!(t.members),
        None => {
            doc["members"] = Value::Null;
            doc["obstruction"] = json!("no set of points of this finite system meets every copy in exactly m points");
        }
    }
    Ok(Output::new(0, &doc))
}

fn lemma2(c: i64, exponents: &str) -> Result<Output, CliError> {
    let e = int_list(exponents, ',')?;
    let [r, s, t] = e.as_slice() else {
        return Err(usage("expected three exponents r,s,t"));
    };
    if [r, s, t].iter().any(|x| **x < 0) {
        return Err(usage("exponents must be nonnegative"));
    }
    let rel = lemma2_relation(c, *r as u64, *s as u64, *t as u64)?;
    let doc = json!({
        "format": FORMAT,
        "kind": "lemma2",
        "c": c,
        "exponents": [r, s, t],
        "modulus": pompeiu::exactfield::IntPolynomial::lemma2_modulus(c).to_string(),
        "relation": rel.n.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "sum": rel.sum().to_string(),
        "cofactor": rel.cofactor.to_string(),
    });
    Ok(Output::new(0, &doc))
}

fn rotations(field: &str, dimension: usize, size: usize) -> Result<Output, CliError> {
    let field = parse_field(field)?;
    if dimension < 2 || size == 0 {
        return Err(usage("need dimension >= 2 and size >= 1"));
    }
    let pool = rotation_pool(field, dimension, size);
    let doc = json!({
        "format": FORMAT,
        "kind": "rotations",
        "field": field_name(field),
        "dimension": dimension,
        "rotations": pool
            .iter()
            .map(|q| q.entries().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    Ok(Output::new(0, &doc))
}

fn prop1(tuple: &str, weights: &str, target: &str, translations: &str, scales: &str) -> Result<Output, CliError> {
    let tuple = lattice_points(tuple)?;
    let weights = parse_weights(weights, FieldDescriptor::Rational)?;
    let target = int_list(target, ',')?;
    let translations = lattice_points(translations)?;
    let scales = int_list(scales, ',')?;
    let run = prop1_force(&tuple, &weights, &target, &translations, &scales)?;
    let doc = json!({
        "format": FORMAT,
        "kind": "prop1",
        "points": run.store.points().iter().map(crate::config::point_strings).collect::<Vec<_>>(),
        "rows": run.rows.iter().map(row_value).collect::<Vec<_>>(),
        "certificate": run.certificate.as_ref().map(certificate_value),
    });
    Ok(Output::new(if run.certificate.is_some() { 0 } else { 1 }, &doc))
}

fn core(instance: &Path) -> Result<Output, CliError> {
    let sys = parse_gen_system(&read(instance)?)?;
    let equations: Vec<String> = sys.rows.iter().map(|(r, b)| render_equation(r, b)).collect();
    let doc = match infeasible_core(&sys) {
        Some(core) => json!({
            "format": FORMAT,
            "kind": "core",
            "equations": equations,
            "feasible": false,
            "core": core.rows,
            "multipliers": core.multipliers.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        None => json!({
            "format": FORMAT,
            "kind": "core",
            "equations": equations,
            "feasible": true,
            "core": Value::Null,
        }),
    };
    let code = if doc["feasible"] == json!(true) { 1 } else { 0 };
    Ok(Output::new(code, &doc))
}

fn float(x: f64) -> String {
    format!("{x:e}")
}

fn gallery1d(points: &str, tolerance: f64, samples: usize) -> Result<Output, CliError> {
    let a = points
        .split(',')
        .map(|t| parse_rational(t.trim()))
        .collect::<pompeiu::Result<Vec<BigRational>>>()?;
    let r = exp_counterexample_1d(&a, tolerance, samples)?;
    let doc = json!({
        "format": FORMAT,
        "kind": "gallery1d",
        "points": a.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "lambda": { "re": float(r.lambda.re), "im": float(r.lambda.im) },
        "samples": samples,
        "tolerance": float(tolerance),
        "max_residual": float(r.max_residual),
        "reflection_residual": float(r.reflection_residual),
        "real_exponent_residual": float(r.real_exponent_residual),
        "note": "floating point; e^(λx) with λ = 2π/n (no imaginary unit) does not solve the equations",
    });
    Ok(Output::new(0, &doc))
}

/// Runs one subcommand. Errors correspond to exit code 2.
pub fn execute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Witness { config, no_minimize } => witness(config, *no_minimize),
        Command::Verify { input } => verify(input),
        Command::Color { instance, colors } => color(instance, *colors),
        Command::Transversal { instance, m } => transversal(instance, *m),
        Command::Lemma2 { c, exponents } => lemma2(*c, exponents),
        Command::Rotations { field, dimension, size } => rotations(field, *dimension, *size),
        Command::Prop1 {
            tuple,
            weights,
            target,
            translations,
            scales,
        } => prop1(tuple, weights, target, translations, scales),
        Command::Core { instance } => core(instance),
        Command::Gallery1d {
            points,
            tolerance,
            samples,
        } => gallery1d(points, *tolerance, *samples),
    }
}

/// Parses `args`, runs the subcommand and writes the document. Returns the
/// process exit code; usage and parse errors give 2.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let output = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output.text) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", output.text),
    }
    output.code
}
