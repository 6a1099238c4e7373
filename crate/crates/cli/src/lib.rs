//! Command-line front end: builds towers and algebra catalogs, runs the
//! checks, and writes a JSON or CSV report.
//!
//! Exit codes: 0 when every record is consistent or exception-witnessed,
//! 1 when any record is FALSIFIED, 2 on usage or configuration errors.

pub mod checks;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use normbasis::probe::{default_catalog, parse_catalog, Catalog};
use normbasis::{Limits, Result, Tower};
use rayon::prelude::*;

use crate::checks::{algebra_records, cycle_inverse_records, fits, tower_records, SUITE_TOWERS};
use crate::report::{emit_report, ConfigEcho, Format, Record, Report};

#[derive(Debug, Parser)]
#[command(name = "normbasis", version, about = "Exact checks on normal bases and hyperplanes of finite algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tower moduli, Frobenius order and trace kernel.
    Tower(Opts),
    /// Normal elements counted by rank, by group-algebra units, and in closed form.
    Normal(Opts),
    /// Least primitive normal element.
    Pnb(Opts),
    /// The multiplier group C, its character map, and the group-algebra bridge.
    Gamma(Opts),
    /// Hyperplane verdicts on an algebra catalog.
    Probe(Opts),
    /// Every tower check on the built-in tower list, then the catalog.
    Suite(Opts),
}

#[derive(Debug, Clone, Args)]
struct Opts {
    /// Characteristic of the prime field.
    #[arg(long)]
    p: Option<u64>,
    /// Degree of K over F_p.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Degree of L over K.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    m: Option<u64>,
    /// Most elements a single exhaustive scan may visit.
    #[arg(long, default_value_t = Limits::DEFAULT_MAX_CARD, value_parser = clap::value_parser!(u64).range(1..))]
    max_card: u64,
    /// Most hyperplanes enumerated per algebra.
    #[arg(long, default_value_t = Limits::DEFAULT_MAX_HYPERPLANES, value_parser = clap::value_parser!(u64).range(1..))]
    max_hyperplanes: u64,
    /// Catalog file; the built-in catalog when absent.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for independent subjects.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    workers: u64,
    /// Leave timing fields out of the report.
    #[arg(long)]
    no_timing: bool,
}

impl Opts {
    fn limits(&self) -> Limits {
        Limits::new(self.max_card, self.max_hyperplanes)
    }

    fn echo(&self, command: &str) -> ConfigEcho {
        ConfigEcho {
            command: command.to_string(),
            p: self.p,
            k: self.k,
            m: self.m,
            max_card: self.max_card,
            max_hyperplanes: self.max_hyperplanes,
            catalog: self
                .catalog
                .as_ref()
                .map_or_else(|| "default".to_string(), |p| p.display().to_string()),
            format: self.format.name().to_string(),
            workers: self.workers as usize,
            timing: !self.no_timing,
        }
    }

    fn tower(&self) -> std::result::Result<Tower, String> {
        let (Some(p), Some(m)) = (self.p, self.m) else {
            return Err("--p and --m are required".into());
        };
        Tower::build(p, self.k as usize, m as usize).map_err(|e| e.to_string())
    }

    fn catalog(&self) -> std::result::Result<Catalog, String> {
        match &self.catalog {
            None => default_catalog().map_err(|e| e.to_string()),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                parse_catalog(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
        }
    }
}

type Outcome = std::result::Result<(Vec<Record>, Vec<String>), String>;

fn flatten(groups: Vec<Result<Vec<Record>>>) -> std::result::Result<Vec<Record>, String> {
    let mut out = Vec::new();
    for g in groups {
        out.extend(g.map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn probe(opts: &Opts, timing: bool) -> Outcome {
    let catalog = opts.catalog()?;
    let limits = opts.limits();
    let mut skipped = Vec::new();
    let mut entries = Vec::new();
    for e in &catalog.entries {
        match fits(e, &limits) {
            Ok(()) => entries.push(e),
            Err(why) => skipped.push(format!("{}: {why}", e.algebra.name())),
        }
    }
    let groups: Vec<Result<Vec<Record>>> = entries
        .par_iter()
        .map(|e| algebra_records(e, &limits, timing))
        .collect();
    let mut records = flatten(groups)?;
    records.extend(cycle_inverse_records(timing).map_err(|e| e.to_string())?);
    Ok((records, skipped))
}

fn suite(opts: &Opts, timing: bool) -> Outcome {
    let limits = opts.limits();
    let mut skipped = Vec::new();
    let mut towers = Vec::new();
    for &(p, k, m) in SUITE_TOWERS {
        let t = Tower::build(p, k, m).map_err(|e| e.to_string())?;
        if t.order() > limits.max_card {
            skipped.push(format!("{}: {} elements exceed max-card {}", t.id(), t.order(), limits.max_card));
        } else {
            towers.push(t);
        }
    }
    let sections = ["tower", "normal", "pnb", "gamma"];
    let groups: Vec<Result<Vec<Record>>> = towers
        .par_iter()
        .map(|t| tower_records(t, &sections, &limits, timing))
        .collect();
    let mut records = flatten(groups)?;
    let (more, more_skipped) = probe(opts, timing)?;
    records.extend(more);
    skipped.extend(more_skipped);
    Ok((records, skipped))
}

fn execute(command: &Command) -> (&'static str, &Opts, Outcome) {
    let single = |name: &'static str, opts: &Opts| -> Outcome {
        let t = opts.tower()?;
        let timing = !opts.no_timing;
        let r = tower_records(&t, &[name], &opts.limits(), timing).map_err(|e| e.to_string())?;
        Ok((r, Vec::new()))
    };
    match command {
        Command::Tower(o) => ("tower", o, single("tower", o)),
        Command::Normal(o) => ("normal", o, single("normal", o)),
        Command::Pnb(o) => ("pnb", o, single("pnb", o)),
        Command::Gamma(o) => ("gamma", o, single("gamma", o)),
        Command::Probe(o) => ("probe", o, probe(o, !o.no_timing)),
        Command::Suite(o) => ("suite", o, suite(o, !o.no_timing)),
    }
}

/// Runs the CLI on `argv` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_to<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let workers = match &cli.command {
        Command::Tower(o)
        | Command::Normal(o)
        | Command::Pnb(o)
        | Command::Gamma(o)
        | Command::Probe(o)
        | Command::Suite(o) => o.workers as usize,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start workers: {e}");
            return 2;
        }
    };
    let (name, opts, outcome) = pool.install(|| execute(&cli.command));
    let (records, skipped) = match outcome {
        Ok(x) => x,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let report = Report::new(opts.echo(name), records, skipped);
    if let Err(e) = emit_report(&report, opts.format, out) {
        let _ = writeln!(err, "error: writing report: {e}");
        return 2;
    }
    i32::from(report.any_falsified())
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_to(argv, &mut stdout.lock(), &mut stderr.lock())
}
