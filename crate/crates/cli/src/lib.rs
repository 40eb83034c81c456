//! The `symsig` command line. Every subcommand runs one pipeline stage and
//! writes a single JSON (or CSV) document to stdout.
//!
//! Exit codes: 0 on success, 1 for invalid input, 2 when an internal
//! consistency check fails.

mod decimal;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;

use symsig_core::{
    convergence_report, default_grid, exact_signature, general_signature, kernel_lattice, minimal_generators,
    multiplicity, ratio_series, run_verification, sym_dim, syzygy_weights, AbelianGroup, Character, CyclicType,
    DiagonalRepresentation, Error, RatioSeries,
};

pub use decimal::significant_digits;

const DEFAULT_N_MAX: u64 = 100;

#[derive(Debug, Parser)]
#[command(name = "symsig", version, about = "Generalized symmetric signatures of cyclic quotient singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of the invariant semigroup, as (i, j) exponents.
    Staircase(TypeArgs),
    /// Characters of the syzygy representation.
    Weights(TypeArgs),
    /// Multiplicity of a character in one symmetric power.
    Multiplicity(MultiplicityArgs),
    /// Exact partial ratios up to a degree bound.
    Series(SeriesArgs),
    /// Exact generalized symmetric signature.
    Signature(SignatureArgs),
    /// Signature of an arbitrary diagonal representation.
    General(GeneralArgs),
    /// Cross-check every stage against its oracle for all types up to an order.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Group order.
    #[arg(long)]
    pub n: u64,
    /// Exponent of the action on the second variable.
    #[arg(long)]
    pub a: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct MultiplicityArgs {
    #[command(flatten)]
    pub singularity: TypeArgs,
    #[arg(long, default_value_t = 0)]
    pub chi: u64,
    /// Degree of the symmetric power.
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub singularity: TypeArgs,
    #[arg(long, default_value_t = 0)]
    pub chi: u64,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub n_max: u64,
    /// Degree bounds to report (default 1, 2, 5, 10, ... and N_max).
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct SignatureArgs {
    #[command(flatten)]
    pub singularity: TypeArgs,
    #[arg(long, default_value_t = 0)]
    pub chi: u64,
}

#[derive(Debug, Args)]
pub struct GeneralArgs {
    /// Orders of the cyclic factors, e.g. `2,2`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub moduli: Vec<u64>,
    /// One weight vector per line, e.g. `1,0;0,1`.
    #[arg(long)]
    pub weights: String,
    /// Character as a residue vector (default: trivial).
    #[arg(long, value_delimiter = ',')]
    pub chi: Option<Vec<u64>>,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub n_max: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    pub n_max: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// A failed job: the message and the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_internal() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

/// Parses `args` (including the program name), runs the job and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(doc) => match writeln!(out, "{doc}") {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write output: {e}");
                1
            }
        },
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Staircase(args) => staircase(args),
        Command::Weights(args) => weights(args),
        Command::Multiplicity(args) => multiplicity_cmd(args),
        Command::Series(args) => series(args),
        Command::Signature(args) => signature(args),
        Command::General(args) => general(args),
        Command::Verify(args) => verify(args),
    }
}

fn singularity(args: &TypeArgs) -> Result<CyclicType, Failure> {
    Ok(CyclicType::validate(args.n, args.a)?)
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure {
        code: 2,
        message: format!("serialization failed: {e}"),
    })
}

fn csv(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut text = header.to_string();
    for row in rows {
        text.push('\n');
        text.push_str(&row.join(","));
    }
    text
}

fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn staircase(args: &TypeArgs) -> Result<String, Failure> {
    let t = singularity(args)?;
    let pairs: Vec<[u64; 2]> = minimal_generators(t)
        .as_pairs()
        .into_iter()
        .map(|(i, j)| [i, j])
        .collect();
    match args.format {
        Format::Json => json(&pairs),
        Format::Csv => Ok(csv("i,j", pairs.iter().map(|p| vec![p[0].to_string(), p[1].to_string()]))),
    }
}

#[derive(Serialize)]
struct WeightsDoc {
    n: u64,
    a: u64,
    weights: Vec<u64>,
    dim: usize,
    faithful: bool,
}

fn weights(args: &TypeArgs) -> Result<String, Failure> {
    let t = singularity(args)?;
    let syz = syzygy_weights(t);
    let doc = WeightsDoc {
        n: t.n(),
        a: t.a(),
        weights: syz.weights().to_vec(),
        dim: syz.dim(),
        faithful: syz.is_faithful(),
    };
    match args.format {
        Format::Json => json(&doc),
        Format::Csv => Ok(csv(
            "index,weight",
            doc.weights.iter().enumerate().map(|(i, w)| vec![i.to_string(), w.to_string()]),
        )),
    }
}

#[derive(Serialize)]
struct MultiplicityDoc {
    n: u64,
    a: u64,
    chi: u64,
    q: u64,
    weights: Vec<u64>,
    multiplicity: String,
    sym_dim: String,
}

fn multiplicity_cmd(args: &MultiplicityArgs) -> Result<String, Failure> {
    let t = singularity(&args.singularity)?;
    if args.chi >= t.n() {
        return Err(Error::CharacterOutOfRange { chi: args.chi, n: t.n() }.into());
    }
    let syz = syzygy_weights(t);
    let m = multiplicity(&syz.to_diagonal(), &Character::cyclic(args.chi), args.q)?;
    let doc = MultiplicityDoc {
        n: t.n(),
        a: t.a(),
        chi: args.chi,
        q: args.q,
        weights: syz.weights().to_vec(),
        multiplicity: m.to_string(),
        sym_dim: sym_dim(syz.dim() as u64, args.q).to_string(),
    };
    match args.singularity.format {
        Format::Json => json(&doc),
        Format::Csv => Ok(csv(
            "q,multiplicity,sym_dim",
            [vec![doc.q.to_string(), doc.multiplicity, doc.sym_dim]],
        )),
    }
}

#[derive(Serialize)]
struct EntryDoc {
    #[serde(rename = "N")]
    degree_bound: u64,
    numerator: String,
    denominator: String,
    ratio: String,
}

#[derive(Serialize)]
struct ScaledGapDoc {
    #[serde(rename = "N")]
    degree_bound: u64,
    scaled_gap: String,
}

#[derive(Serialize)]
struct ConvergenceDoc {
    final_gap: String,
    scaled_gaps: Vec<ScaledGapDoc>,
    monotone_tail: bool,
}

#[derive(Serialize)]
struct SeriesDoc {
    target: String,
    entries: Vec<EntryDoc>,
    convergence: ConvergenceDoc,
}

impl SeriesDoc {
    fn new(series: &RatioSeries) -> Result<Self, Failure> {
        let report = convergence_report(series)?;
        Ok(SeriesDoc {
            target: rational(&series.target),
            entries: series
                .entries
                .iter()
                .map(|e| EntryDoc {
                    degree_bound: e.degree_bound,
                    numerator: e.numerator.to_string(),
                    denominator: e.denominator.to_string(),
                    ratio: rational(&e.ratio),
                })
                .collect(),
            convergence: ConvergenceDoc {
                final_gap: rational(&report.final_gap),
                scaled_gaps: report
                    .scaled_gaps
                    .iter()
                    .map(|(n, g)| ScaledGapDoc {
                        degree_bound: *n,
                        scaled_gap: rational(g),
                    })
                    .collect(),
                monotone_tail: report.monotone_tail,
            },
        })
    }
}

/// `N,numerator,denominator,ratio_decimal`; the last column is a rounded
/// rendering for display only, the exact value is numerator/denominator.
fn series_csv(series: &RatioSeries) -> String {
    csv(
        "N,numerator,denominator,ratio_decimal",
        series.entries.iter().map(|e| {
            vec![
                e.degree_bound.to_string(),
                e.numerator.to_string(),
                e.denominator.to_string(),
                significant_digits(&e.ratio, 12),
            ]
        }),
    )
}

#[derive(Serialize)]
struct CyclicSeriesDoc {
    n: u64,
    a: u64,
    chi: u64,
    n_max: u64,
    #[serde(flatten)]
    series: SeriesDoc,
}

fn series(args: &SeriesArgs) -> Result<String, Failure> {
    let t = singularity(&args.singularity)?;
    let grid = args.grid.clone().unwrap_or_else(|| default_grid(args.n_max));
    if grid.is_empty() {
        return Err(invalid("--grid needs at least one degree bound"));
    }
    let series = ratio_series(t, args.chi, args.n_max, &grid)?;
    match args.singularity.format {
        Format::Json => json(&CyclicSeriesDoc {
            n: t.n(),
            a: t.a(),
            chi: args.chi,
            n_max: args.n_max,
            series: SeriesDoc::new(&series)?,
        }),
        Format::Csv => Ok(series_csv(&series)),
    }
}

#[derive(Serialize)]
struct SignatureDoc {
    n: u64,
    a: u64,
    signature: String,
    chi: u64,
    weights: Vec<u64>,
    lattice_index: String,
}

fn signature(args: &SignatureArgs) -> Result<String, Failure> {
    let t = singularity(&args.singularity)?;
    let value = exact_signature(t, args.chi)?;
    let syz = syzygy_weights(t);
    let index: BigUint = kernel_lattice(&syz.to_diagonal())?.index().clone();
    let doc = SignatureDoc {
        n: t.n(),
        a: t.a(),
        signature: rational(&value),
        chi: args.chi,
        weights: syz.weights().to_vec(),
        lattice_index: index.to_string(),
    };
    match args.singularity.format {
        Format::Json => json(&doc),
        Format::Csv => Ok(csv(
            "n,a,chi,signature",
            [vec![doc.n.to_string(), doc.a.to_string(), doc.chi.to_string(), doc.signature]],
        )),
    }
}

#[derive(Serialize)]
struct GeneralDoc {
    moduli: Vec<u64>,
    weights: Vec<Vec<u64>>,
    chi: Vec<u64>,
    n_max: u64,
    signature: String,
    series: SeriesDoc,
}

/// Parses `1,0;0,1` into weight vectors.
fn parse_weights(text: &str) -> Result<Vec<Vec<u64>>, Failure> {
    text.split(';')
        .map(|vector| {
            vector
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u64>()
                        .map_err(|_| invalid(format!("invalid weight component {c:?} in {text:?}")))
                })
                .collect()
        })
        .collect()
}

fn general(args: &GeneralArgs) -> Result<String, Failure> {
    let group = AbelianGroup::new(args.moduli.clone())?;
    let k = args.moduli.len();
    let vectors = parse_weights(&args.weights)?;
    let mut weights = Vec::with_capacity(vectors.len());
    for v in &vectors {
        if v.len() != k {
            return Err(invalid(format!(
                "weight {v:?} has {} components, the group has {k} factors",
                v.len()
            )));
        }
        weights.push(Character::new(v.clone()));
    }
    let chi = Character::new(args.chi.clone().unwrap_or_else(|| vec![0; k]));
    let rep = DiagonalRepresentation::new(group, weights)?;
    let (value, series) = general_signature(&rep, &chi, args.n_max)?;
    match args.format {
        Format::Json => json(&GeneralDoc {
            moduli: args.moduli.clone(),
            weights: vectors,
            chi: chi.components().to_vec(),
            n_max: args.n_max,
            signature: rational(&value),
            series: SeriesDoc::new(&series)?,
        }),
        Format::Csv => Ok(series_csv(&series)),
    }
}

#[derive(Serialize)]
struct CheckDoc {
    name: &'static str,
    cases: usize,
    failure_count: usize,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct VerifyDoc {
    n_max: u64,
    passed: bool,
    checks: Vec<CheckDoc>,
}

fn verify(args: &VerifyArgs) -> Result<String, Failure> {
    if args.n_max < 2 {
        return Err(invalid("--n-max must be at least 2"));
    }
    let report = run_verification(args.n_max)?;
    let doc = VerifyDoc {
        n_max: report.n_max,
        passed: report.passed(),
        checks: report
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name,
                cases: c.cases,
                failure_count: c.failure_count,
                failures: c.failures.clone(),
            })
            .collect(),
    };
    let text = match args.format {
        Format::Json => json(&doc)?,
        Format::Csv => csv(
            "check,cases,failures",
            doc.checks
                .iter()
                .map(|c| vec![c.name.to_string(), c.cases.to_string(), c.failure_count.to_string()]),
        ),
    };
    if doc.passed {
        Ok(text)
    } else {
        // still show the report, but signal the disagreement
        Err(Failure {
            code: 2,
            message: format!("oracle cross-check failed\n{text}"),
        })
    }
}
