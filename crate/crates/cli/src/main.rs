//! Command-line front end.
//!
//! Subcommands mirror the library modules one-to-one: `series` and
//! `contrib` for contribution series, `hodge` for Hodge integral
//! values, `gv` and `enum` for the table transforms, `verify` for the
//! cross-route identity suites. Output is JSON by default or CSV with
//! `--format csv`; every value is an exact rational string unless
//! `--decimal N` asks for a marked approximation.
//!
//! Exit codes: 0 on success, 1 on domain errors (unreadable or
//! malformed input, failed verification), 2 on usage errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use multicover::contributions::{
    contribution_degree, contribution_series, ContributionValue, CoverModel, GeometrySignature,
};
use multicover::hodge;
use multicover::rational::Rational;
use multicover::series::EvenSeries;
use multicover::transforms::{
    enumerative_forward, enumerative_solve, gv_forward, gv_invert, BpsTable, ETable, GwTable,
    TableError, TableFile,
};
use multicover::verify;

#[derive(Parser)]
#[command(
    name = "multicover",
    version,
    about = "Exact-rational multiple-cover contribution tables, Hodge integrals, and BPS/enumerative extraction"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Render values as N-digit decimal approximations, prefixed with
    /// `~` to mark them approximate.
    #[arg(long, global = true, value_name = "N")]
    decimal: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of an integer power of the sine-ratio series
    /// S(t) = sin(t/2)/(t/2), indexed by h (the power of t^2).
    Series(SeriesArgs),
    /// Degenerate contribution values C_g(h, .) for one geometry.
    Contrib(ContribArgs),
    /// Hodge integral values.
    Hodge {
        #[command(subcommand)]
        what: HodgeCommand,
    },
    /// BPS extraction: the multiple-cover expansion and its inversion
    /// with integrality audit.
    Gv {
        #[command(subcommand)]
        op: GvCommand,
    },
    /// Enumerative corrections: the degree-1 cover system and its
    /// solve.
    #[command(name = "enum")]
    Enumerative {
        #[command(subcommand)]
        op: EnumCommand,
    },
    /// Run every cross-route identity suite; nonzero exit on failure.
    Verify,
}

#[derive(Args)]
struct SeriesArgs {
    /// Truncation order T: coefficients of t^0 .. t^{2T}.
    #[arg(long)]
    order: usize,
    /// Integer exponent m in S(t)^m.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    power: i64,
    /// Substitute t -> d t.
    #[arg(long, default_value_t = 1)]
    scale: u64,
}

#[derive(Args)]
struct ContribArgs {
    /// Genus g of the contributing curve.
    #[arg(long)]
    genus: u32,
    /// Anticanonical degree k = -K_X . beta (0 for Calabi-Yau).
    #[arg(long = "anti-k", default_value_t = 0)]
    anti_k: u32,
    /// Largest h to tabulate.
    #[arg(long = "max-h")]
    max_h: u32,
    /// Cover degree; degrees >= 2 are only defined for anti-k = 0.
    #[arg(long, default_value_t = 1)]
    d: u64,
    /// Multiple-cover model used for degrees >= 2.
    #[arg(long, value_enum, default_value_t = ModelArg::Geometric)]
    model: ModelArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Geometric,
    Mtheory,
}

impl ModelArg {
    fn to_model(self) -> CoverModel {
        match self {
            ModelArg::Geometric => CoverModel::Geometric,
            ModelArg::Mtheory => CoverModel::MTheory,
        }
    }

    fn label(self) -> &'static str {
        match self {
            ModelArg::Geometric => "geometric",
            ModelArg::Mtheory => "mtheory",
        }
    }
}

#[derive(Subcommand)]
enum HodgeCommand {
    /// alpha_q = |B_2q| / ((2q)(2q)!) for q = 1..max-q.
    Alpha {
        #[arg(long = "max-q", value_parser = clap::value_parser!(u32).range(1..))]
        max_q: u32,
    },
    /// The kappa integrals for q = 2..max-q.
    Kappa {
        #[arg(long = "max-q", value_parser = clap::value_parser!(u32).range(2..))]
        max_q: u32,
    },
    /// The Faber ratio table: alpha, kappa integral, their quotient,
    /// and the expected 2^{q-1}/q!.
    Faber {
        #[arg(long = "max-q", value_parser = clap::value_parser!(u32).range(2..))]
        max_q: u32,
    },
    /// psi-lambda integrals for h = 1..max-h, 0 <= i <= h.
    PsiLambda {
        #[arg(long = "max-h", value_parser = clap::value_parser!(u32).range(1..))]
        max_h: u32,
    },
}

#[derive(Subcommand)]
enum GvCommand {
    /// Assemble the GW table generated by a BPS table.
    Forward {
        /// Input BPS table (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Output genus cutoff; defaults to the table's max_genus.
        #[arg(long = "genus-cutoff")]
        genus_cutoff: Option<u32>,
        /// Output degree cutoffs, comma separated; default from the table.
        #[arg(long = "degree-cutoffs", value_delimiter = ',')]
        degree_cutoffs: Option<Vec<u32>>,
    },
    /// Extract BPS states from a GW table and audit integrality.
    Invert {
        /// Input GW table (JSON).
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum EnumCommand {
    /// Apply the degree-1 correction to an enumerative table.
    Forward {
        /// Input enumerative table (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Canonical pairing vector, comma separated; defaults to the
        /// `canonical` field of the input file.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        canonical: Option<Vec<i64>>,
    },
    /// Solve for enumerative invariants from a GW table carrying a
    /// canonical vector.
    Solve {
        /// Input GW table (JSON).
        #[arg(long)]
        input: PathBuf,
    },
}

enum CliError {
    /// Bad input data: exit 1.
    Domain(String),
    /// Bad flag combination: exit 2.
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            code
        }
        Err(CliError::Domain(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, CliError> {
    let render = Renderer {
        decimal: cli.decimal,
    };
    match cli.command {
        Command::Series(args) => series_cmd(args, cli.format, &render, out)?,
        Command::Contrib(args) => contrib_cmd(args, cli.format, &render, out)?,
        Command::Hodge { what } => hodge_cmd(what, cli.format, &render, out)?,
        Command::Gv { op } => gv_cmd(op, cli.format, &render, out)?,
        Command::Enumerative { op } => enum_cmd(op, cli.format, &render, out)?,
        Command::Verify => return verify_cmd(cli.format, out),
    }
    Ok(ExitCode::SUCCESS)
}

/// Renders rational values: exact `p/q` strings by default, or
/// `~`-prefixed truncated decimals under `--decimal N`.
struct Renderer {
    decimal: Option<usize>,
}

impl Renderer {
    fn value(&self, v: &Rational) -> String {
        match self.decimal {
            None => v.to_string(),
            Some(digits) => format!("~{}", v.to_decimal(digits)),
        }
    }
}

fn emit_json(out: &mut impl Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("output serialization");
    writeln!(out, "{text}").map_err(io_error)?;
    Ok(())
}

fn io_error(e: io::Error) -> CliError {
    CliError::Domain(format!("cannot write output: {e}"))
}

fn series_cmd(
    args: SeriesArgs,
    format: Format,
    render: &Renderer,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if args.scale == 0 {
        return Err(CliError::Usage("--scale must be positive".to_owned()));
    }
    let series = EvenSeries::sine_ratio(args.order)
        .int_pow(args.power)
        .scale_variable(args.scale);
    let values: Vec<String> = series.coeffs().iter().map(|c| render.value(c)).collect();
    match format {
        Format::Json => emit_json(out, &values)?,
        Format::Csv => {
            writeln!(out, "h,value").map_err(io_error)?;
            for (h, value) in values.iter().enumerate() {
                writeln!(out, "{h},{value}").map_err(io_error)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ContribRow {
    genus: u32,
    anti_k: u32,
    h: u32,
    d: u64,
    model: &'static str,
    defined: bool,
    value: Option<String>,
}

fn contrib_cmd(
    args: ContribArgs,
    format: Format,
    render: &Renderer,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if args.d == 0 {
        return Err(CliError::Usage("--d must be positive".to_owned()));
    }
    if args.d >= 2 && args.anti_k > 0 {
        return Err(CliError::Usage(
            "cover degrees >= 2 are only defined in the Calabi-Yau case (--anti-k 0)".to_owned(),
        ));
    }
    let model = args.model.to_model();
    let rows: Vec<ContribRow> = (0..=args.max_h)
        .map(|h| {
            let contribution = if args.anti_k > 0 {
                let sig = GeometrySignature::new(args.genus, args.anti_k);
                ContributionValue::Defined(
                    contribution_series(sig, h as usize).coeff(h as usize).clone(),
                )
            } else {
                contribution_degree(args.genus, h, args.d, model)
            };
            ContribRow {
                genus: args.genus,
                anti_k: args.anti_k,
                h,
                d: args.d,
                model: args.model.label(),
                defined: contribution.is_defined(),
                value: contribution.value().map(|v| render.value(v)),
            }
        })
        .collect();
    match format {
        Format::Json => emit_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "genus,anti_k,h,d,model,defined,value").map_err(io_error)?;
            for row in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    row.genus,
                    row.anti_k,
                    row.h,
                    row.d,
                    row.model,
                    row.defined,
                    row.value.as_deref().unwrap_or("")
                )
                .map_err(io_error)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct HodgeRow {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<u32>,
    value: String,
}

#[derive(Serialize)]
struct FaberRow {
    q: u32,
    alpha: String,
    kappa_integral: String,
    ratio: String,
    expected: String,
    equal: bool,
}

#[derive(Serialize)]
struct FaberOutput {
    rows: Vec<FaberRow>,
    all_equal: bool,
}

fn hodge_cmd(
    what: HodgeCommand,
    format: Format,
    render: &Renderer,
    out: &mut impl Write,
) -> Result<(), CliError> {
    match what {
        HodgeCommand::Alpha { max_q } => {
            let rows: Vec<HodgeRow> = (1..=max_q)
                .map(|q| HodgeRow {
                    kind: "alpha",
                    q: Some(q),
                    h: None,
                    i: None,
                    value: render.value(&hodge::alpha(q)),
                })
                .collect();
            emit_hodge_rows(rows, format, out)
        }
        HodgeCommand::Kappa { max_q } => {
            let rows: Vec<HodgeRow> = (2..=max_q)
                .map(|q| HodgeRow {
                    kind: "kappa_integral",
                    q: Some(q),
                    h: None,
                    i: None,
                    value: render.value(&hodge::kappa_integral(q)),
                })
                .collect();
            emit_hodge_rows(rows, format, out)
        }
        HodgeCommand::PsiLambda { max_h } => {
            let mut rows = Vec::new();
            for h in 1..=max_h {
                for i in 0..=h {
                    rows.push(HodgeRow {
                        kind: "psi_lambda",
                        q: None,
                        h: Some(h),
                        i: Some(i),
                        value: render.value(&hodge::psi_lambda_integral(h, i)),
                    });
                }
            }
            emit_hodge_rows(rows, format, out)
        }
        HodgeCommand::Faber { max_q } => {
            let rows: Vec<FaberRow> = (2..=max_q)
                .map(|q| {
                    let ratio = hodge::faber_ratio_check(q);
                    let expected = hodge::faber_ratio_expected(q);
                    FaberRow {
                        q,
                        alpha: render.value(&hodge::alpha(q)),
                        kappa_integral: render.value(&hodge::kappa_integral(q)),
                        ratio: render.value(&ratio),
                        expected: render.value(&expected),
                        equal: ratio == expected,
                    }
                })
                .collect();
            let all_equal = rows.iter().all(|r| r.equal);
            match format {
                Format::Json => emit_json(out, &FaberOutput { rows, all_equal })?,
                Format::Csv => {
                    writeln!(out, "q,alpha,kappa_integral,ratio,expected,equal")
                        .map_err(io_error)?;
                    for r in &rows {
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            r.q, r.alpha, r.kappa_integral, r.ratio, r.expected, r.equal
                        )
                        .map_err(io_error)?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn emit_hodge_rows(
    rows: Vec<HodgeRow>,
    format: Format,
    out: &mut impl Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => emit_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "kind,q,h,i,value").map_err(io_error)?;
            for r in &rows {
                let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.kind,
                    opt(r.q),
                    opt(r.h),
                    opt(r.i),
                    r.value
                )
                .map_err(io_error)?;
            }
        }
    }
    Ok(())
}

fn load_table_file(path: &Path) -> Result<TableFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    TableFile::from_json(&text)
        .map_err(|e| CliError::Domain(format!("{}: malformed table JSON: {e}", path.display())))
}

fn table_domain<T>(path: &Path, result: Result<T, TableError>) -> Result<T, CliError> {
    result.map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn emit_table(
    file: &TableFile,
    format: Format,
    render: &Renderer,
    out: &mut impl Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => match render.decimal {
            None => write!(out, "{}", file.to_json()).map_err(io_error)?,
            Some(_) => emit_json(out, &approximate_table(file, render))?,
        },
        Format::Csv => {
            writeln!(out, "genus,class,value").map_err(io_error)?;
            for entry in &file.entries {
                let class: Vec<String> = entry.class.iter().map(u32::to_string).collect();
                writeln!(
                    out,
                    "{},{},{}",
                    entry.genus,
                    class.join(";"),
                    render.value(&entry.value)
                )
                .map_err(io_error)?;
            }
        }
    }
    Ok(())
}

/// The table with every value replaced by its marked decimal
/// rendering; only for human reading, not reloadable.
fn approximate_table(file: &TableFile, render: &Renderer) -> serde_json::Value {
    use serde_json::{json, Map, Value};
    let entry_rows = |entries: &[multicover::transforms::TableEntry]| -> Value {
        Value::Array(
            entries
                .iter()
                .map(|e| {
                    json!({
                        "genus": e.genus,
                        "class": e.class,
                        "value": render.value(&e.value),
                    })
                })
                .collect(),
        )
    };
    let mut map = Map::new();
    map.insert("rank".to_owned(), json!(file.rank));
    if let Some(c) = &file.canonical {
        map.insert("canonical".to_owned(), json!(c));
    }
    map.insert("max_genus".to_owned(), json!(file.max_genus));
    map.insert("degree_cutoffs".to_owned(), json!(file.degree_cutoffs));
    map.insert("entries".to_owned(), entry_rows(&file.entries));
    if let Some(report) = &file.integrality_report {
        map.insert("integrality_report".to_owned(), entry_rows(report));
    }
    Value::Object(map)
}

fn gv_cmd(
    op: GvCommand,
    format: Format,
    render: &Renderer,
    out: &mut impl Write,
) -> Result<(), CliError> {
    match op {
        GvCommand::Forward {
            input,
            genus_cutoff,
            degree_cutoffs,
        } => {
            let file = load_table_file(&input)?;
            let bps = table_domain(&input, BpsTable::from_file(file))?;
            let genus_cutoff = genus_cutoff.unwrap_or_else(|| bps.max_genus());
            let cutoffs = degree_cutoffs.unwrap_or_else(|| bps.degree_cutoffs().to_vec());
            let gw = table_domain(&input, gv_forward(&bps, genus_cutoff, &cutoffs))?;
            emit_table(&gw.to_file(), format, render, out)
        }
        GvCommand::Invert { input } => {
            let file = load_table_file(&input)?;
            let gw = table_domain(&input, GwTable::from_file(file))?;
            let bps = gv_invert(&gw);
            emit_table(&bps.to_file(), format, render, out)
        }
    }
}

fn enum_cmd(
    op: EnumCommand,
    format: Format,
    render: &Renderer,
    out: &mut impl Write,
) -> Result<(), CliError> {
    match op {
        EnumCommand::Forward { input, canonical } => {
            let file = load_table_file(&input)?;
            let canonical = canonical
                .or_else(|| file.canonical.clone())
                .ok_or_else(|| {
                    CliError::Domain(format!(
                        "{}: missing canonical vector (pass --canonical or add it to the file)",
                        input.display()
                    ))
                })?;
            let table = table_domain(&input, ETable::from_file(file))?;
            let gw = table_domain(&input, enumerative_forward(&table, &canonical))?;
            emit_table(&gw.to_file(), format, render, out)
        }
        EnumCommand::Solve { input } => {
            let file = load_table_file(&input)?;
            let gw = table_domain(&input, GwTable::from_file(file))?;
            let canonical = gw.canonical().map(<[i64]>::to_vec);
            let solved = table_domain(&input, enumerative_solve(&gw))?;
            emit_table(&solved.to_file(canonical), format, render, out)
        }
    }
}

#[derive(Serialize)]
struct SuiteRow {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyOutput {
    suites: Vec<SuiteRow>,
    all_passed: bool,
}

fn verify_cmd(format: Format, out: &mut impl Write) -> Result<ExitCode, CliError> {
    let suites: Vec<SuiteRow> = verify::run_all()
        .into_iter()
        .map(|suite| SuiteRow {
            name: suite.name,
            cases: suite.cases,
            passed: suite.passed(),
            failures: suite.failures,
        })
        .collect();
    let all_passed = suites.iter().all(|r| r.passed);
    match format {
        Format::Json => emit_json(out, &VerifyOutput { suites, all_passed })?,
        Format::Csv => {
            writeln!(out, "suite,cases,failures,passed").map_err(io_error)?;
            for r in &suites {
                writeln!(out, "{},{},{},{}", r.name, r.cases, r.failures.len(), r.passed)
                    .map_err(io_error)?;
            }
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
