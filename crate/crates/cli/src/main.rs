//! `wellcover`: command-line front end.
//!
//! Every command prints one report document on standard output and a short
//! human summary on standard error. Vertex labels are 1-based.
//!
//! Exit codes: 0 success, 1 a report failed verification, 2 unparsable
//! input, 3 routes or theorem checks disagree, 64 usage error, 65 a size
//! limit was exceeded, 66 an input file could not be read.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wellcover::certify::Route;
use wellcover::io::{self, Format, ReportDocument};
use wellcover::lab::{self, Check, ConfigRequest, GeneratorConfig, Mode, ScanOptions};
use wellcover::{CliqueCover, Error, Graph};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_LIMIT: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;

const TIMEOUT_ENV: &str = "WELLCOVER_TIMEOUT_SECS";

#[derive(Parser)]
#[command(name = "wellcover", version, about = "Recognize well-covered and uniformly well-covered graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Well-covered and uniformly well-covered verdicts with certificates.
    Check(GraphArgs),
    /// Decide well-coveredness by several independent routes and compare them.
    Certify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "all")]
        route: RouteArg,
    },
    /// Variable sums of a clique cover and their zero-divisor witnesses.
    Algebra {
        #[command(flatten)]
        graph: GraphArgs,
        /// Parts separated by `;`, vertices by `,` (for example "1,5,6;2,3,4").
        #[arg(long)]
        cover: String,
    },
    /// The perfect-matching criterion for bipartite graphs.
    Bipartite(GraphArgs),
    /// Scan generated graphs for qualifying s-partite graphs that are not uniformly well-covered.
    Conjecture(GeneratorArgs),
    /// Run every recognition equivalence on generated graphs.
    Theorems {
        #[command(flatten)]
        generator: GeneratorArgs,
        /// Comma-separated subset of checks (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
    /// Re-check every verdict and witness in a report.
    Verify {
        report: PathBuf,
    },
}

#[derive(Args)]
struct GraphArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: FormatArg,
}

#[derive(Args)]
struct GeneratorArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Part sizes, comma-separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    count: Option<u64>,
    /// Edge probability for random modes.
    #[arg(long)]
    p: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Oracle,
    Corollary3,
    Algebraic,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    EdgeList,
    Graph6,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    ExhaustiveLabeled,
    ExhaustiveSpartite,
    RandomSpartite,
    RandomGnp,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            _ if e.is_limit() => EXIT_LIMIT,
            Error::InvalidConfig(_) => EXIT_USAGE,
            _ => EXIT_PARSE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_NO_INPUT, message: format!("cannot read {}: {e}", path.display()) })
}

fn load(args: &GraphArgs) -> Result<(String, Graph), Failure> {
    let format = match args.format {
        FormatArg::EdgeList => Format::EdgeList,
        FormatArg::Graph6 => Format::Graph6,
        FormatArg::Dimacs => Format::Dimacs,
    };
    let text = read(&args.file)?;
    let name = args.file.file_stem().map_or_else(|| "graph".to_string(), |s| s.to_string_lossy().into_owned());
    let graph = format.parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", args.file.display(), f.message);
        f
    })?;
    Ok((name, graph))
}

fn scan_options() -> Result<ScanOptions, Failure> {
    match std::env::var(TIMEOUT_ENV) {
        Ok(raw) => {
            let secs: f64 = raw.trim().parse().map_err(|_| usage(format!("{TIMEOUT_ENV}=`{raw}` is not a number")))?;
            if !secs.is_finite() || secs <= 0.0 {
                return Err(usage(format!("{TIMEOUT_ENV} must be positive")));
            }
            Ok(ScanOptions { timeout: Duration::from_secs_f64(secs) })
        }
        Err(_) => Ok(ScanOptions::default()),
    }
}

fn generator(args: &GeneratorArgs) -> Result<GeneratorConfig, Failure> {
    let mode = match args.mode {
        ModeArg::ExhaustiveLabeled => Mode::ExhaustiveLabeled,
        ModeArg::ExhaustiveSpartite => Mode::ExhaustiveSpartite,
        ModeArg::RandomSpartite => Mode::RandomSpartite,
        ModeArg::RandomGnp => Mode::RandomGnp,
    };
    let request =
        ConfigRequest { n: args.n, s: args.s, parts: args.parts.clone(), p: args.p, seed: args.seed, count: args.count };
    Ok(GeneratorConfig::new(mode, request)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        ""
    } else {
        "not "
    }
}

/// Runs a command; returns the report to print and the exit code.
fn run(command: Command) -> Result<(ReportDocument, u8), Failure> {
    match command {
        Command::Check(args) => {
            let (name, g) = load(&args)?;
            let doc = io::check_report(&name, &g);
            let wc = doc.get("well_covered") == Some("true");
            let uwc = doc.get("uniformly_well_covered") == Some("true");
            let mut summary = format!("{name}: {}well-covered, {}uniformly well-covered", yes_no(wc), yes_no(uwc));
            if let Some(p) = doc.get("uniformly_well_covered.partition") {
                summary.push_str(&format!(" (partition {p})"));
            }
            eprintln!("{summary}");
            Ok((doc, 0))
        }
        Command::Certify { graph, route } => {
            let (name, g) = load(&graph)?;
            let routes: Vec<Route> = match route {
                RouteArg::Oracle => vec![Route::Oracle],
                RouteArg::Corollary3 => vec![Route::Domination],
                RouteArg::Algebraic => vec![Route::Algebraic],
                RouteArg::All => Route::ALL.to_vec(),
            };
            let (doc, report) = io::certify_report(&name, &g, &routes)?;
            let verdicts: Vec<String> = report
                .equivalence
                .verdicts
                .iter()
                .map(|v| format!("{}={}", v.condition.label(), v.holds))
                .collect();
            let applicability = if report.equivalence.applicable { "" } else { " (no cover of size alpha)" };
            eprintln!("{name}: {}{applicability}", verdicts.join(" "));
            if report.consistent() {
                Ok((doc, 0))
            } else {
                eprintln!("{name}: routes disagree");
                Ok((doc, EXIT_DISAGREE))
            }
        }
        Command::Algebra { graph, cover } => {
            let (name, g) = load(&graph)?;
            let cover = CliqueCover::from_labels(&g, &cover)?;
            let doc = io::algebra_report(&name, &g, &cover)?;
            let regular = doc.get("theta_regular") == Some("true");
            eprintln!("{name}: every part sum is {}a non-zero-divisor", if regular { "" } else { "not " });
            Ok((doc, 0))
        }
        Command::Bipartite(args) => {
            let (name, g) = load(&args)?;
            let (doc, report) = io::bipartite_report(&name, &g);
            if !report.applicable {
                eprintln!("{name}: not applicable (needs a bipartite graph without isolated vertices)");
                return Ok((doc, 0));
            }
            eprintln!("{name}: bipartite criterion {}", if report.holds { "holds" } else { "fails" });
            let code = if doc.get("agree") == Some("true") { 0 } else { EXIT_DISAGREE };
            Ok((doc, code))
        }
        Command::Conjecture(args) => {
            let config = generator(&args)?;
            let report = lab::conjecture_scan(&config, &scan_options()?);
            eprintln!(
                "examined {}, qualifying {}, counterexamples {}, timed out {}",
                report.examined, report.qualifying, report.counterexamples_total, report.timed_out
            );
            let code = if report.counterexamples_reproduce() { 0 } else { EXIT_VERIFY_FAILED };
            Ok((io::scan_report(&report), code))
        }
        Command::Theorems { generator: args, checks } => {
            let config = generator(&args)?;
            let checks: Vec<Check> = if checks.is_empty() {
                Check::THEOREMS.to_vec()
            } else {
                checks
                    .iter()
                    .map(|c| Check::from_label(c).ok_or_else(|| usage(format!("unknown check `{c}`"))))
                    .collect::<Result<_, _>>()?
            };
            let report = lab::theorem_corpus_check(&config, &checks, &scan_options()?)?;
            eprintln!(
                "examined {}, applicable {}, violations {}, timed out {}",
                report.examined,
                report.qualifying,
                report.failures(),
                report.timed_out
            );
            let code = if report.failures() == 0 { 0 } else { EXIT_DISAGREE };
            Ok((io::scan_report(&report), code))
        }
        Command::Verify { report } => {
            let text = read(&report)?;
            let doc = ReportDocument::parse(&text)?;
            let outcome = io::verify(&doc)?;
            let mut out = ReportDocument::new();
            out.push("kind", "verification");
            out.push("tool.name", io::TOOL_NAME);
            out.push("tool.version", io::TOOL_VERSION);
            out.push("report.kind", doc.require("kind")?);
            out.push("checked", outcome.checked);
            out.push("failed", outcome.failures.len());
            for (i, failure) in outcome.failures.iter().enumerate() {
                out.push(format!("failure.{}", i + 1), failure);
            }
            out.push("ok", outcome.ok());
            for failure in &outcome.failures {
                eprintln!("verification failed: {failure}");
            }
            eprintln!("{} claims checked, {} failed", outcome.checked, outcome.failures.len());
            Ok((out, if outcome.ok() { 0 } else { EXIT_VERIFY_FAILED }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((doc, code)) => {
            print!("{doc}");
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
