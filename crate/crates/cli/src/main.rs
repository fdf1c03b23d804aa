//! `hyperpath`: generate 3-graphs, search them for linear paths and cycles,
//! run the rotation-extension finder, verify constructions and run seeded
//! experiments.
//!
//! Exit codes: 0 on success or when a witness is found, 1 when the answer is
//! negative (absent, verification failed, counterexample found), 2 on usage
//! or I/O errors.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use hyperpath::constructions::{ConstructionKind, ConstructionSpec};
use hyperpath::finder::{check_lemma_bounds, find_guaranteed, make_context, FinderOutcome, LemmaPremise};
use hyperpath::lab::{self, ExperimentConfig, GeneratorKind, SweepFamily};
use hyperpath::oracle::{self, Budget, Outcome};
use hyperpath::text::{from_text, to_text};
use hyperpath::{Hypergraph, LinearPath, VerificationReport};

/// Largest order for which `find` cross-checks with the oracle by default.
const CROSS_CHECK_ORDER: usize = 12;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Hypergraph(#[from] hyperpath::HypergraphError),
    #[error(transparent)]
    Construction(#[from] hyperpath::ConstructionError),
    #[error(transparent)]
    Finder(#[from] hyperpath::FinderError),
    #[error(transparent)]
    Lab(#[from] hyperpath::LabError),
    #[error(transparent)]
    Path(#[from] hyperpath::PathError),
}

/// Whether the command produced a positive answer.
enum Verdict {
    Yes,
    No,
}

#[derive(Parser)]
#[command(name = "hyperpath", version, about = "Linear paths in 3-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a construction or a seeded random graph in the text format.
    Gen(GenArgs),
    /// Exact search for a linear path, cycle or cycle with a parallel edge.
    Oracle(OracleArgs),
    /// Run the rotation-extension finder for a path of a given length.
    Find(FindArgs),
    /// Certify a construction, check all small graphs, or check codegree bounds.
    Verify(VerifyArgs),
    /// Seeded trials of the finder, written as CSV.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Star,
    Core,
    #[value(alias = "star_plus")]
    StarPlus,
    Complete,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    n: usize,
    /// Size of the special set (core size for `core`).
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Minimum degree for `random`.
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of standard output.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["path", "cycle", "cycleplus", "longest"])))]
struct OracleArgs {
    /// Graph file, or `-` for standard input.
    #[arg(long, short)]
    input: String,
    /// Look for a linear path with this many edges.
    #[arg(long, alias = "length")]
    path: Option<usize>,
    /// Look for a linear cycle with this many edges.
    #[arg(long)]
    cycle: Option<usize>,
    /// Look for a linear cycle with a parallel edge, with this many cycle edges.
    #[arg(long)]
    cycleplus: Option<usize>,
    /// Longest linear path up to this length.
    #[arg(long)]
    longest: Option<usize>,
    /// Search node budget (default scales with n).
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FindMode {
    Finder,
    Oracle,
}

#[derive(Args)]
struct FindArgs {
    #[arg(long, short)]
    input: String,
    /// Target path length.
    #[arg(long, short = 't')]
    length: usize,
    #[arg(long, value_enum, default_value_t = FindMode::Finder)]
    mode: FindMode,
    /// Move budget for the finder.
    #[arg(long)]
    budget: Option<usize>,
    /// Print each accepted move.
    #[arg(long)]
    trace: bool,
    /// Skip the oracle cross-check done by default for n <= 12.
    #[arg(long)]
    no_cross_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    Star,
    #[value(alias = "star_plus")]
    StarPlus,
    Random,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["construction", "exhaustive", "sweep", "bounds"])))]
struct VerifyArgs {
    /// Certify a construction; with --input, certify that file against it.
    #[arg(long)]
    construction: Option<ConstructionKind>,
    /// Check every labeled 3-graph on --n vertices with min degree >= --delta.
    #[arg(long)]
    exhaustive: bool,
    /// Check codegree bounds on every path of a family of hosts.
    #[arg(long, value_enum)]
    sweep: Option<SweepKind>,
    /// Check codegree bounds on one path of --input, given as 1-based labels.
    #[arg(long)]
    bounds: Option<String>,
    #[arg(long, short)]
    input: Option<String>,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long, short = 't')]
    length: Option<usize>,
    /// Smallest order in a sweep (default: --n).
    #[arg(long)]
    n_min: Option<usize>,
    /// Largest order in a sweep (default: --n).
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long)]
    n: usize,
    /// Minimum degree of generated instances.
    #[arg(long)]
    delta: usize,
    /// Target path length.
    #[arg(long, short = 't')]
    length: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `random`, `exhaustive`, or KIND:K such as `star_plus:1`.
    #[arg(long, default_value = "random")]
    generator: GeneratorKind,
    /// Cross-check this many trials with the oracle.
    #[arg(long, default_value_t = 0)]
    oracle_trials: usize,
    #[arg(long)]
    budget: Option<usize>,
    /// Record wall time (the CSV is then no longer reproducible).
    #[arg(long)]
    timing: bool,
    /// CSV file; counterexamples are written next to it. Default: stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|v| {
        out.flush()?;
        Ok(v)
    });
    match result {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<Verdict, CliError> {
    match command {
        Command::Gen(args) => gen(args, out),
        Command::Oracle(args) => search(args, out),
        Command::Find(args) => find(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Experiment(args) => experiment(args, out),
    }
}

fn read_graph(input: &str) -> Result<Hypergraph, CliError> {
    let mut text = String::new();
    if input == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(input).map_err(|source| CliError::Read {
            path: input.into(),
            source,
        })?;
    }
    Ok(from_text(&text)?)
}

fn gen(args: GenArgs, out: &mut impl Write) -> Result<Verdict, CliError> {
    let kind = match args.kind {
        GenKind::Star => Some(ConstructionKind::Star),
        GenKind::Core => Some(ConstructionKind::Core),
        GenKind::StarPlus => Some(ConstructionKind::StarPlus),
        GenKind::Complete => Some(ConstructionKind::Complete),
        GenKind::Random => None,
    };
    let h = match kind {
        Some(kind) => ConstructionSpec {
            kind,
            r: args.r,
            n: args.n,
            parameter: args.k,
        }
        .generate()?,
        None => {
            if args.r != 3 {
                return Err(CliError::Usage("random graphs are 3-uniform".into()));
            }
            let delta = args.delta.ok_or_else(|| CliError::Usage("--kind random needs --delta".into()))?;
            lab::random_min_degree_graph(args.n, delta, args.seed)?
        }
    };
    match args.out {
        Some(path) => fs::write(path, to_text(&h))?,
        None => out.write_all(to_text(&h).as_bytes())?,
    }
    Ok(Verdict::Yes)
}

fn print_outcome<T>(
    out: &mut impl Write,
    outcome: Outcome<T>,
    show: impl FnOnce(&mut dyn Write, T) -> io::Result<()>,
) -> Result<Verdict, CliError> {
    Ok(match outcome {
        Outcome::Found(x) => {
            show(out, x)?;
            Verdict::Yes
        }
        Outcome::Absent => {
            writeln!(out, "absent")?;
            Verdict::No
        }
        Outcome::Exhausted => {
            writeln!(out, "exhausted")?;
            Verdict::No
        }
    })
}

fn search(args: OracleArgs, out: &mut impl Write) -> Result<Verdict, CliError> {
    let h = read_graph(&args.input)?;
    let budget = args.budget.map_or_else(|| Budget::default_for(h.n()), Budget::nodes);
    if let Some(t) = args.path {
        positive("--path", t, 1)?;
        return print_outcome(out, oracle::find_path_with(&h, t, budget)?, |o, p| writeln!(o, "path: {p}"));
    }
    if let Some(k) = args.cycle {
        positive("--cycle", k, 3)?;
        return print_outcome(out, oracle::find_cycle_with(&h, k, budget)?, |o, c| writeln!(o, "cycle: {c}"));
    }
    if let Some(k) = args.cycleplus {
        positive("--cycleplus", k, 3)?;
        return print_outcome(out, oracle::find_cycle_plus_with(&h, k, budget)?, |o, w| {
            writeln!(o, "cycleplus: {w}")
        });
    }
    let cap = args.longest.expect("clap requires one target");
    positive("--longest", cap, 1)?;
    print_outcome(out, oracle::longest_path(&h, cap)?, |o, (len, p)| {
        writeln!(o, "longest: {len}")?;
        match p {
            Some(p) => writeln!(o, "path: {p}"),
            None => Ok(()),
        }
    })
}

fn positive(flag: &str, value: usize, min: usize) -> Result<(), CliError> {
    if value < min {
        return Err(CliError::Usage(format!("{flag} must be at least {min}")));
    }
    Ok(())
}

fn find(args: FindArgs, out: &mut impl Write) -> Result<Verdict, CliError> {
    let h = read_graph(&args.input)?;
    positive("--length", args.length, 1)?;
    let t = args.length;
    if args.mode == FindMode::Oracle {
        return print_outcome(out, oracle::find_path(&h, t)?, |o, p| writeln!(o, "path: {p}"));
    }
    let run = find_guaranteed(&h, t, args.budget)?;
    if args.trace {
        for m in &run.trace {
            writeln!(out, "{m}")?;
        }
    }
    let found = match &run.outcome {
        FinderOutcome::Path(p) => {
            writeln!(out, "path: {p}")?;
            true
        }
        FinderOutcome::Violation(v) => {
            writeln!(out, "violation: {v}")?;
            false
        }
    };
    writeln!(out, "moves: {}", run.moves())?;
    let mut verdict = if found { Verdict::Yes } else { Verdict::No };
    if h.n() <= CROSS_CHECK_ORDER && !args.no_cross_check {
        let answer = match oracle::find_path(&h, t)? {
            Outcome::Found(_) => Some(true),
            Outcome::Absent => Some(false),
            Outcome::Exhausted => None,
        };
        match answer {
            Some(exists) => {
                writeln!(out, "oracle: {}", if exists { "present" } else { "absent" })?;
                if exists != found {
                    writeln!(out, "agreement: no")?;
                    verdict = Verdict::No;
                } else {
                    writeln!(out, "agreement: yes")?;
                }
            }
            None => writeln!(out, "oracle: exhausted")?,
        }
    }
    Ok(verdict)
}

fn print_report(out: &mut impl Write, report: &VerificationReport) -> Result<Verdict, CliError> {
    writeln!(out, "{report}")?;
    Ok(if report.passed() { Verdict::Yes } else { Verdict::No })
}

fn require<T>(value: Option<T>, flag: &str, mode: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{mode} needs {flag}")))
}

fn parse_labels(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c == ',' || c.is_ascii_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(CliError::Usage(format!("bad vertex label `{s}` (labels are 1-based)"))),
        })
        .collect()
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<Verdict, CliError> {
    if let Some(kind) = args.construction {
        let spec = ConstructionSpec {
            kind,
            r: args.r,
            n: require(args.n, "--n", "--construction")?,
            parameter: args.k,
        };
        let report = match &args.input {
            Some(input) => lab::certify_construction(&spec, &read_graph(input)?)?,
            None => lab::verify_construction(&spec)?,
        };
        return print_report(out, &report);
    }
    if args.exhaustive {
        let n = require(args.n, "--n", "--exhaustive")?;
        let delta = require(args.delta, "--delta", "--exhaustive")?;
        let t = require(args.length, "--length", "--exhaustive")?;
        positive("--length", t, 1)?;
        return print_report(out, &lab::exhaustive_check(n, delta, t)?.report());
    }
    if let Some(kind) = args.sweep {
        let t = require(args.length, "--length", "--sweep")?;
        positive("--length", t, 1)?;
        let lo = require(args.n_min.or(args.n), "--n-min or --n", "--sweep")?;
        let hi = args.n_max.or(args.n).unwrap_or(lo);
        let family = match kind {
            SweepKind::Star => SweepFamily::Star { k: args.k },
            SweepKind::StarPlus => SweepFamily::StarPlus { k: args.k },
            SweepKind::Random => SweepFamily::Random {
                min_degree: require(args.delta, "--delta", "--sweep random")?,
            },
        };
        return print_report(out, &lab::lemma_sweep(family, lo..=hi, t, args.samples, args.seed)?);
    }
    let labels = args.bounds.expect("clap requires one mode");
    let h = read_graph(&require(args.input, "--input", "--bounds")?)?;
    let path = LinearPath::new(&h, parse_labels(&labels)?)?;
    let t = path.len();
    let ctx = make_context(&h, path)?;
    let premise = match LemmaPremise::establish(&h, t)? {
        Outcome::Found(p) => p,
        _ => return Err(CliError::Lab(hyperpath::LabError::OracleBudget(format!("P_{} search", t + 1)))),
    };
    print_report(out, &check_lemma_bounds(&h, &ctx, premise))
}

fn experiment(args: ExperimentArgs, out: &mut impl Write) -> Result<Verdict, CliError> {
    let config = ExperimentConfig {
        n: args.n,
        t: args.length,
        min_degree: args.delta,
        trials: args.trials,
        seed: args.seed,
        generator: args.generator,
        oracle_trials: args.oracle_trials,
        budget: args.budget,
        timing: args.timing,
        out: args.out.clone(),
    };
    let result = lab::run_trials(&config)?;
    let counterexamples = result.counterexamples().count();
    match &args.out {
        Some(_) => {
            let written = result.persist()?;
            writeln!(out, "trials: {}", result.rows.len())?;
            writeln!(
                out,
                "success_rate: {:.6} ({}/{})",
                result.success_rate(),
                result.successes(),
                result.rows.len()
            )?;
            writeln!(out, "counterexamples: {counterexamples}")?;
            for path in written {
                writeln!(out, "wrote: {}", path.display())?;
            }
        }
        None => result.write_csv(&mut *out)?,
    }
    Ok(if counterexamples == 0 { Verdict::Yes } else { Verdict::No })
}
