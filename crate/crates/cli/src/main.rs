use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isolab::lie::Sign;
use serde_json::Value;

mod commands;

/// Exact computations for the isogenies SL(2)xSL(2) -> SO(4) and
/// SL(4) -> SO(6) on Higgs bundles.
///
/// Inputs are JSON documents read from --input, --json or standard input.
/// Exit codes: 0 success, 1 invalid input, 2 a checked property failed,
/// 3 internal error.
#[derive(Debug, Parser)]
#[command(name = "isolab", version)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Read the input document from a file ("-" for standard input).
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Input document given inline.
    #[arg(long, global = true, value_name = "JSON", conflicts_with = "input")]
    json: Option<String>,
    /// Orientation sign for Pfaffians and base maps.
    #[arg(long, global = true, default_value_t = 1, allow_negative_numbers = true)]
    orientation: i64,
    /// Seed for randomized suites; ISOLAB_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Number of random samples per check.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    /// Report format; defaults to json, or text for `verify`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lie-level maps.
    #[command(subcommand)]
    Iso(IsoCmd),
    /// Hitchin base maps and oracles.
    #[command(subcommand)]
    Base(BaseCmd),
    /// Fiber products and symmetrizations.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Divisor push-forwards and norms.
    #[command(subcommand)]
    Divisor(DivisorCmd),
    /// Toledo invariants, lifting and counts.
    #[command(subcommand)]
    Invariants(InvariantsCmd),
    /// Higgs field assembly.
    #[command(subcommand)]
    Higgs(HiggsCmd),
    /// Verification suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, Debug, Subcommand)]
enum IsoCmd {
    /// {"a1", "a2"} or {"a"}: image under the Lie map; with --group, under the group map.
    Apply {
        #[arg(long)]
        group: bool,
    },
    /// {"a"}: alpha block and Pfaffian of a symmetric traceless matrix.
    Alpha,
    /// {"q"}: Hodge star and eigenspaces of a rank-4 form.
    Hodge,
}

#[derive(Clone, Copy, Debug, Subcommand)]
enum BaseCmd {
    /// {"a1", "a2"} -> (b1, pf).
    MapSo4,
    /// {"a2", "a3", "a4"} -> (b1, b2, pf).
    MapSo6,
    /// Pair or triple: base map, resultant oracle and Lie char poly.
    Oracle,
    /// {"a2", "a3", "a4"}: smoothness verdict and branch locus.
    Genericity,
}

#[derive(Clone, Copy, Debug, Subcommand)]
enum CoverCmd {
    /// {"fiber"} or {"first", "second"}.
    Product,
    /// {"fiber"}: Sym fiber with its involution.
    Sym,
    /// {"fiber"}: ramification identity and twist ledgers.
    Ramcheck,
}

#[derive(Clone, Copy, Debug, Subcommand)]
enum DivisorCmd {
    /// {"fiber", "divisor"}: pullback to pairs and push to the Sym fiber.
    Push,
    /// {"fiber", "divisor", "covering", "second"?}.
    Norm,
    /// {"fiber", "divisor"}: Prym membership before and after the push.
    PrymTest,
}

#[derive(Clone, Copy, Debug, Subcommand)]
enum InvariantsCmd {
    /// {"d": [d1, d2]}.
    Map,
    /// {"pair", "group", "genus"}.
    Mw,
    /// {"group": "so022", "c", "genus"} or {"group": "so033", "w2"}.
    Lift,
    /// {"isogeny", "genus"}.
    Count,
    /// {"group", "genus"}.
    Census,
}

#[derive(Clone, Copy, Debug, Subcommand)]
enum HiggsCmd {
    /// {"n_degrees", "beta", "gamma"}.
    AssembleSo22,
}

#[derive(Clone, Copy, Debug, Subcommand)]
enum VerifyCmd {
    /// Every check of the suite.
    All,
}

/// How a command ended, beyond its printed report.
pub enum Outcome {
    Ok(Value),
    /// Report printed, but a checked property failed.
    CheckFailed(Value),
}

fn read_input(opts: &GlobalOpts) -> Result<Value, isolab::Error> {
    let text = match (&opts.json, &opts.input) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| isolab::Error::validation(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| isolab::Error::validation(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| isolab::Error::validation(format!("input is not valid JSON: {e}")))
}

fn seed(opts: &GlobalOpts) -> Result<u64, isolab::Error> {
    match std::env::var("ISOLAB_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| isolab::Error::validation(format!("ISOLAB_SEED is not an unsigned integer: {s:?}"))),
        Err(_) => Ok(opts.seed),
    }
}

fn dispatch(cli: &Cli) -> Result<(Outcome, Format), isolab::Error> {
    let opts = &cli.opts;
    let orientation = Sign::from_i64(opts.orientation)?;
    if let Command::Verify(VerifyCmd::All) = cli.command {
        let config = isolab::verify::VerifyConfig { seed: seed(opts)?, samples: opts.samples, orientation };
        let report = isolab::verify::run_all(config)?;
        let format = opts.format.unwrap_or(Format::Text);
        let value = match format {
            Format::Json => report.to_json(),
            Format::Text => Value::String(report.table()),
        };
        let outcome = if report.passed() { Outcome::Ok(value) } else { Outcome::CheckFailed(value) };
        return Ok((outcome, format));
    }
    let input = read_input(opts)?;
    let outcome = match cli.command {
        Command::Iso(IsoCmd::Apply { group }) => commands::iso_apply(&input, group)?,
        Command::Iso(IsoCmd::Alpha) => commands::iso_alpha(&input, orientation)?,
        Command::Iso(IsoCmd::Hodge) => commands::iso_hodge(&input, orientation)?,
        Command::Base(BaseCmd::MapSo4) => commands::base_map_so4(&input, orientation)?,
        Command::Base(BaseCmd::MapSo6) => commands::base_map_so6(&input, orientation)?,
        Command::Base(BaseCmd::Oracle) => commands::base_oracle(&input, orientation)?,
        Command::Base(BaseCmd::Genericity) => commands::base_genericity(&input)?,
        Command::Cover(CoverCmd::Product) => commands::cover_product(&input)?,
        Command::Cover(CoverCmd::Sym) => commands::cover_sym(&input)?,
        Command::Cover(CoverCmd::Ramcheck) => commands::cover_ramcheck(&input)?,
        Command::Divisor(DivisorCmd::Push) => commands::divisor_push(&input)?,
        Command::Divisor(DivisorCmd::Norm) => commands::divisor_norm(&input)?,
        Command::Divisor(DivisorCmd::PrymTest) => commands::divisor_prym_test(&input)?,
        Command::Invariants(InvariantsCmd::Map) => commands::invariants_map(&input)?,
        Command::Invariants(InvariantsCmd::Mw) => commands::invariants_mw(&input)?,
        Command::Invariants(InvariantsCmd::Lift) => commands::invariants_lift(&input)?,
        Command::Invariants(InvariantsCmd::Count) => commands::invariants_count(&input)?,
        Command::Invariants(InvariantsCmd::Census) => commands::invariants_census(&input)?,
        Command::Higgs(HiggsCmd::AssembleSo22) => commands::higgs_assemble_so22(&input, orientation)?,
        Command::Verify(_) => unreachable!(),
    };
    Ok((outcome, opts.format.unwrap_or(Format::Json)))
}

fn render(value: &Value, format: Format) -> String {
    match (value, format) {
        (Value::String(s), Format::Text) => s.trim_end().to_string(),
        (_, Format::Text) => text_lines(value, ""),
        _ => serde_json::to_string_pretty(value).expect("JSON values always serialize"),
    }
}

/// Flattened `path = value` lines for the text format.
fn text_lines(value: &Value, prefix: &str) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                text_lines(v, &p)
            })
            .collect::<Vec<_>>()
            .join("\n"),
        _ => format!("{prefix} = {value}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((Outcome::Ok(v), format)) => {
            println!("{}", render(&v, format));
            ExitCode::SUCCESS
        }
        Ok((Outcome::CheckFailed(v), format)) => {
            println!("{}", render(&v, format));
            eprintln!("error: a checked property failed");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 1 } else { 3 })
        }
    }
}
