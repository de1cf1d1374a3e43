//! `eccx`: topological indices, named families, enumeration, extremal sweeps
//! and claim verification from the command line.
//!
//! Exit codes: 0 on success, 1 when a verified claim is refuted, 2 on usage
//! or input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use eccx_core::enumerate::{
    class_graphs, report, verify_claims, Index, Status, SweepConfig, VerificationOutcome,
};
use eccx_core::families::{FamilySpec, GraphClass};
use eccx_core::indices::{summarize, GraphSummary};
use eccx_core::io::{read_graphs, to_edge_list, to_graph6};
use eccx_core::matching::has_perfect_matching;
use eccx_core::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "eccx",
    version,
    about = "Eccentricity-based graph indices and extremal sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the indices of input graphs or of a named family member
    Index(IndexArgs),
    /// Emit one member of a named family
    Family(FamilyArgs),
    /// Emit or count every graph of a class
    Enumerate(EnumerateArgs),
    /// Minimum and maximum index over a class
    Sweep(SweepArgs),
    /// Check the extremal claims for conjugated unicyclic and bicyclic graphs
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Markdown,
    Graph6,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Tree,
    Unicyclic,
    Bicyclic,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Tree => GraphClass::Tree,
            ClassArg::Unicyclic => GraphClass::Unicyclic,
            ClassArg::Bicyclic => GraphClass::Bicyclic,
        }
    }
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list or graph6 file
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Family spec such as `path:9`, `u1bar:10` or `kab:3,4`
    #[arg(long, short)]
    family: Option<String>,
}

#[derive(Args)]
struct IndexArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family spec such as `b2bar:8`
    spec: String,
    /// graph6 (default) or plain edge list
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Orders {
    /// Orders: comma-separated values or inclusive ranges, e.g. `10,12` or `4..8`
    #[arg(long = "n")]
    n: Option<String>,
    /// Inclusive range of orders, e.g. `4..14`
    #[arg(long = "n-range")]
    n_range: Option<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[command(flatten)]
    orders: Orders,
    /// Keep only graphs with a perfect matching
    #[arg(long)]
    conjugated: bool,
    /// One graph per isomorphism class
    #[arg(long)]
    dedupe: bool,
    /// plain prints counts, graph6 prints the graphs
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[command(flatten)]
    orders: Orders,
    #[arg(long)]
    conjugated: bool,
    #[arg(long)]
    dedupe: bool,
    /// `tau` (total eccentricity) or `xi` (eccentric connectivity)
    #[arg(long, default_value = "tau")]
    index: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Worker threads, 0 for one per core
    #[arg(long, env = "ECCX_WORKERS", default_value_t = 0)]
    workers: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    orders: Orders,
    /// Restrict to one class; both unicyclic and bicyclic by default
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
    #[arg(long, env = "ECCX_WORKERS", default_value_t = 0)]
    workers: usize,
    #[command(flatten)]
    out: Output,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn parse_range(item: &str) -> Result<Vec<usize>, Failure> {
    let number = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("invalid order {s:?}")))
    };
    match item.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (number(a)?, number(b.trim_start_matches('='))?);
            if a > b {
                return Err(usage(format!("empty range {item:?}")));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![number(item)?]),
    }
}

impl Orders {
    fn resolve(&self, even_only_ranges: bool) -> Result<Vec<usize>, Failure> {
        let mut out = Vec::new();
        if let Some(list) = &self.n {
            for item in list.split(',').filter(|s| !s.trim().is_empty()) {
                out.extend(parse_range(item)?);
            }
        }
        if let Some(range) = &self.n_range {
            let all = parse_range(range)?;
            out.extend(all.into_iter().filter(|n| !even_only_ranges || n % 2 == 0));
        }
        if out.is_empty() {
            return Err(usage("no orders given; use --n or --n-range"));
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

const INDEX_COLUMNS: [&str; 10] = [
    "n",
    "m",
    "class",
    "radius",
    "diameter",
    "tau",
    "avec",
    "xi",
    "randic",
    "conjugated",
];

fn summary_fields(s: &GraphSummary) -> [String; 10] {
    let avec = s.average_eccentricity;
    [
        s.order.to_string(),
        s.size.to_string(),
        s.class.to_string(),
        s.radius.to_string(),
        s.diameter.to_string(),
        s.total_eccentricity.to_string(),
        if avec.is_integer() {
            avec.to_integer().to_string()
        } else {
            format!("{}/{}", avec.numer(), avec.denom())
        },
        s.eccentric_connectivity.to_string(),
        format!("{:.9}", s.randic),
        s.conjugated.to_string(),
    ]
}

fn cmd_index(args: &IndexArgs) -> Result<(), Failure> {
    let graphs = match (&args.source.input, &args.source.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            read_graphs(&text)?
        }
        (None, Some(spec)) => vec![spec.parse::<FamilySpec>()?.build()?],
        _ => return Err(usage("give exactly one of --input or --family")),
    };
    let rows = graphs
        .iter()
        .map(|g| summarize(g).map(|s| summary_fields(&s)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    match args.format {
        Format::Csv => {
            let _ = writeln!(text, "{}", INDEX_COLUMNS.join(","));
            for r in &rows {
                let _ = writeln!(text, "{}", r.join(","));
            }
        }
        Format::Markdown => {
            let _ = writeln!(text, "| {} |", INDEX_COLUMNS.join(" | "));
            let _ = writeln!(text, "|{}", "---|".repeat(INDEX_COLUMNS.len()));
            for r in &rows {
                let _ = writeln!(text, "| {} |", r.join(" | "));
            }
        }
        Format::Plain => {
            let _ = writeln!(text, "{}", INDEX_COLUMNS.join("\t"));
            for r in &rows {
                let _ = writeln!(text, "{}", r.join("\t"));
            }
        }
        Format::Graph6 => return Err(usage("index output supports csv, markdown or plain")),
    }
    emit(&args.out, &text)
}

fn cmd_family(args: &FamilyArgs) -> Result<(), Failure> {
    let g = args.spec.parse::<FamilySpec>()?.build()?;
    let text = match args.format {
        Format::Graph6 => format!("{}\n", to_graph6(&g)),
        Format::Plain => to_edge_list(&g),
        _ => return Err(usage("family output supports graph6 or plain")),
    };
    emit(&args.out, &text)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<(), Failure> {
    let class = GraphClass::from(args.class);
    let mut text = String::new();
    for n in args.orders.resolve(false)? {
        let keep = |g: &Graph| !args.conjugated || has_perfect_matching(g);
        let graphs = class_graphs(class, n, args.dedupe)?.filter(keep);
        match args.format {
            Format::Graph6 => {
                for g in graphs {
                    let _ = writeln!(text, "{}", to_graph6(&g));
                }
            }
            Format::Plain => {
                let _ = writeln!(text, "{class}\t{n}\t{}", graphs.count());
            }
            _ => return Err(usage("enumerate output supports plain or graph6")),
        }
    }
    emit(&args.out, &text)
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let class = GraphClass::from(args.class);
    let index: Index = args.index.parse()?;
    let orders = args.orders.resolve(false)?;
    let mut reports = Vec::new();
    for n in orders {
        if args.conjugated && n % 2 == 1 {
            if args.orders.n_range.is_some() {
                continue;
            }
            return Err(usage(format!("no conjugated graphs of odd order {n}")));
        }
        let report = SweepConfig::new(class, n)
            .conjugated_only(args.conjugated)
            .dedupe(args.dedupe)
            .index(index)
            .workers(args.workers)
            .run()?;
        eprintln!(
            "{class} n={n}: {} graphs in {:.3}s",
            report.graphs_inspected,
            report.elapsed.as_secs_f64()
        );
        reports.push(report);
    }
    let text = match args.format {
        Format::Csv => report::reports_csv(&reports),
        Format::Markdown => report::reports_markdown(&reports),
        Format::Graph6 => {
            let mut text = String::new();
            for r in &reports {
                for c in r.min_witnesses.iter().chain(&r.max_witnesses) {
                    let _ = writeln!(text, "{c}");
                }
            }
            text
        }
        Format::Plain => return Err(usage("sweep output supports csv, markdown or graph6")),
    };
    emit(&args.out, &text)
}

fn verify_summary(outcomes: &[VerificationOutcome]) -> String {
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    format!(
        "\n{} claims: {} confirmed, {} discrepant-formula, {} recorded, {} refuted\n",
        outcomes.len(),
        count(Status::Confirmed),
        count(Status::DiscrepantFormula),
        count(Status::Recorded),
        count(Status::Refuted)
    )
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let orders = args.orders.resolve(true)?;
    let classes = match args.class {
        Some(ClassArg::Tree) => return Err(usage("verify covers unicyclic and bicyclic classes")),
        Some(c) => vec![GraphClass::from(c)],
        None => vec![GraphClass::Unicyclic, GraphClass::Bicyclic],
    };
    let outcomes = verify_claims(&orders, &classes, args.workers)?;
    let text = match args.format {
        Format::Markdown => {
            let mut t = report::outcomes_markdown(&outcomes);
            t.push_str(&verify_summary(&outcomes));
            t
        }
        Format::Csv => report::outcomes_csv(&outcomes),
        _ => return Err(usage("verify output supports markdown or csv")),
    };
    emit(&args.out, &text)?;
    Ok(outcomes.iter().all(|o| o.status != Status::Refuted))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Index(a) => cmd_index(a).map(|()| true),
        Command::Family(a) => cmd_family(a).map(|()| true),
        Command::Enumerate(a) => cmd_enumerate(a).map(|()| true),
        Command::Sweep(a) => cmd_sweep(a).map(|()| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("eccx: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
