mod output;
mod range;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::result::Result;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unrefinable::maximal::{generate_maximal_report, HPolicy, TupleFloor};
use unrefinable::*;

use output::{Format, Row, Sink};
use range::{PartList, Span};
use verify::Suite;

#[derive(Parser)]
#[command(
    name = "unrefinable",
    version,
    about = "Unrefinable partitions into distinct parts"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Worker threads for the parallel searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List partitions of N into distinct parts, optionally only unrefinable ones.
    Enumerate(EnumerateArgs),
    /// Count partitions of N into distinct parts or unrefinable partitions of N.
    Count(CountArgs),
    /// List the maximal unrefinable partitions of T_n with their classes.
    Maximal(MaximalArgs),
    /// Classify a maximal unrefinable partition of a triangular number.
    Classify(ClassifyArgs),
    /// Apply σ (or its inverse) between MUP(T_{2k-1}) and partitions of k.
    Sigma(SigmaArgs),
    /// Run self-verification suites; exit status 1 when any check fails.
    Verify(VerifyArgs),
    /// Print integer sequences.
    Sequence(SequenceArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Sum, or inclusive range `a..b`.
    #[arg(long = "N", value_name = "N")]
    total: Span,
    /// Only unrefinable partitions.
    #[arg(long)]
    unrefinable: bool,
    /// Only partitions with at least two parts.
    #[arg(long)]
    at_least_two: bool,
    /// Largest allowed part.
    #[arg(long)]
    max_part: Option<u64>,
    /// Smallest allowed part.
    #[arg(long)]
    min_part: Option<u64>,
    /// Most parts allowed.
    #[arg(long)]
    max_len: Option<usize>,
    /// Search window for unrefinable partitions.
    #[arg(long, value_enum, default_value_t = Window::Bounds)]
    window: Window,
}

#[derive(Clone, Copy, ValueEnum)]
enum Window {
    /// Largest part restricted to the proven interval.
    Bounds,
    /// Every largest part up to N.
    Full,
}

impl From<Window> for SearchWindow {
    fn from(w: Window) -> Self {
        match w {
            Window::Bounds => SearchWindow::Bounds,
            Window::Full => SearchWindow::Full,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Sum, or inclusive range `a..b`.
    #[arg(long = "N", value_name = "N")]
    total: Span,
    /// Count unrefinable partitions instead of all distinct-part ones.
    #[arg(long)]
    unrefinable: bool,
    /// Only partitions with at least two parts.
    #[arg(long)]
    at_least_two: bool,
}

#[derive(Args)]
struct MaximalArgs {
    /// Triangular index n (N = T_n), or a range.
    #[arg(long)]
    tri: Span,
    /// Try small removed parts from 1 instead of ⌈(n-3)/2⌉.
    #[arg(long)]
    floor_one: bool,
    /// Try every feasible h instead of the proven range.
    #[arg(long)]
    exhaustive_h: bool,
    /// Print the shapes the unrefinability filter rejected instead.
    #[arg(long)]
    rejections: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Comma-separated parts.
    #[arg(long)]
    parts: PartList,
}

#[derive(Args)]
struct SigmaArgs {
    /// Comma-separated parts of a maximal partition (or of an image with --inverse).
    #[arg(long, conflicts_with = "tri")]
    parts: Option<PartList>,
    /// Map every member of MUP(T_n) for n in this range.
    #[arg(long)]
    tri: Option<Span>,
    /// Map a partition of k back to MUP(T_{2k-1}).
    #[arg(long, requires = "parts")]
    inverse: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checks to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Range of N for the bounds suite.
    #[arg(long = "N", value_name = "N")]
    total: Option<Span>,
    /// Range of n for the suites over T_n.
    #[arg(long)]
    tri: Option<Span>,
    /// Range of k for the bijection suite.
    #[arg(long)]
    k: Option<Span>,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum SequenceKind {
    /// #MUP(T_{2k-1}) next to the number of partitions of k into at least two
    /// distinct parts (with --k), or #MUP(T_n) (with --tri).
    MupCounts,
    /// Number of unrefinable partitions of N, with provenance.
    UnrefinableCounts,
    /// Partitions of k into distinct parts, with and without single parts.
    DistinctCounts,
}

#[derive(Args)]
struct SequenceArgs {
    /// Which sequence to print.
    #[arg(long, value_enum)]
    kind: SequenceKind,
    /// Range of N (unrefinable-counts).
    #[arg(long = "N", value_name = "N")]
    total: Option<Span>,
    /// Range of n (mup-counts over T_n).
    #[arg(long)]
    tri: Option<Span>,
    /// Range of k (mup-counts, distinct-counts).
    #[arg(long)]
    k: Option<Span>,
}

/// Exit statuses.
const VERIFICATION_FAILURE: u8 = 1;
const USAGE_ERROR: u8 = 2;

enum Failure {
    Io(io::Error),
    /// Bad input discovered after parsing.
    Usage(String),
    /// The input was well formed but did not pass a check.
    Rejected(String),
    /// Reported checks failed; rows are already written.
    Checks,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn partition_of(list: &PartList) -> Result<DistinctPartition, Failure> {
    make_partition(&list.0).map_err(|e| Failure::Usage(format!("invalid partition: {e}")))
}

fn positive(span: Span, what: &str) -> Result<Span, Failure> {
    if span.lo == 0 {
        Err(Failure::Usage(format!("{what} must be positive")))
    } else {
        Ok(span)
    }
}

fn describe(lambda: &DistinctPartition) -> Row {
    let a = lambda.analyze_missing();
    Row::new()
        .with("N", lambda.sum())
        .with("parts", lambda.parts())
        .with("t", lambda.len())
        .with("largest", lambda.largest())
        .with("m", a.m())
        .with("mex", a.mex)
}

fn enumerate<W: Write>(args: &EnumerateArgs, sink: &mut Sink<W>) -> Outcome {
    for total in positive(args.total, "N")?.iter() {
        let mut c = EnumerationConstraints::new(total);
        if let Some(v) = args.max_part {
            c = c.max_part(v);
        }
        if let Some(v) = args.min_part {
            c = c.min_part(v);
        }
        if let Some(v) = args.max_len {
            c = c.max_len(v);
        }
        if args.at_least_two {
            c = c.at_least_two_parts();
        }
        if args.unrefinable {
            for lambda in enumerate_unrefinable_with(&c, args.window.into()) {
                sink.emit(describe(&lambda))?;
            }
        } else {
            for lambda in enumerate_distinct(&c) {
                sink.emit(describe(&lambda))?;
            }
        }
    }
    Ok(())
}

fn count<W: Write>(args: &CountArgs, sink: &mut Sink<W>) -> Outcome {
    for total in positive(args.total, "N")?.iter() {
        let n: u128 = match (args.unrefinable, args.at_least_two) {
            (true, false) => count_unrefinable_parallel(total).into(),
            (true, true) => {
                let c = EnumerationConstraints::new(total).at_least_two_parts();
                unrefinable_iter(&c, SearchWindow::Bounds).count() as u128
            }
            (false, false) => count_distinct(total, DistinctConvention::AnyLength),
            (false, true) => count_distinct(total, DistinctConvention::AtLeastTwo),
        };
        sink.emit(Row::new().with("N", total).with("count", n))?;
    }
    Ok(())
}

fn maximal_rows<W: Write>(args: &MaximalArgs, sink: &mut Sink<W>) -> Outcome {
    let opts = GeneratorOptions {
        floor: if args.floor_one {
            TupleFloor::One
        } else {
            TupleFloor::MexBound
        },
        h_policy: if args.exhaustive_h {
            HPolicy::Exhaustive
        } else {
            HPolicy::Corollary
        },
    };
    for n in positive(args.tri, "n")?.iter() {
        let report = generate_maximal_report(n, opts);
        if args.rejections {
            for shape in report.rejections {
                let lambda = shape.assemble();
                let witness = lambda
                    .refinability_witness()
                    .expect("rejected shapes are refinable");
                sink.emit(
                    Row::new()
                        .with("n", n)
                        .with("class", shape.class().to_string())
                        .with("removed", &shape.small[..])
                        .with("parts", lambda.parts())
                        .with(
                            "witness",
                            format!("{}+{}={}", witness.smaller, witness.larger, witness.part),
                        ),
                )?;
            }
            continue;
        }
        for (lambda, class) in report.members {
            sink.emit(
                Row::new()
                    .with("n", n)
                    .with("parts", lambda.parts())
                    .with("class", class.to_string())
                    .with("t", lambda.len())
                    .with("mex", lambda.mex()),
            )?;
        }
    }
    Ok(())
}

fn classify<W: Write>(args: &ClassifyArgs, sink: &mut Sink<W>) -> Outcome {
    let lambda = partition_of(&args.parts)?;
    let class = classify_maximal(&lambda).map_err(|e| Failure::Rejected(e.to_string()))?;
    let n = triangular_context(lambda.sum()).n;
    sink.emit(
        Row::new()
            .with("n", n)
            .with("parts", lambda.parts())
            .with("class", class.to_string())
            .with("mex", lambda.mex()),
    )?;
    Ok(())
}

fn sigma_row(
    n: u64,
    lambda: &DistinctPartition,
    image: &DistinctPartition,
) -> Result<Row, Failure> {
    let class = classify_maximal(lambda).map_err(|e| Failure::Rejected(e.to_string()))?;
    let image_class = classify_distinct(image).map_err(|e| Failure::Rejected(e.to_string()))?;
    Ok(Row::new()
        .with("n", n)
        .with("maximal", lambda.parts())
        .with("image", image.parts())
        .with("class", class.to_string())
        .with("image_class", image_class.to_string()))
}

fn domain_or_rejected(e: Error) -> Failure {
    match e {
        Error::Domain(_) => Failure::Usage(e.to_string()),
        _ => Failure::Rejected(e.to_string()),
    }
}

fn sigma_cmd<W: Write>(args: &SigmaArgs, sink: &mut Sink<W>) -> Outcome {
    match (&args.parts, args.tri) {
        (Some(list), _) => {
            let given = partition_of(list)?;
            if args.inverse {
                let k = given.sum();
                let lambda =
                    sigma_inverse(&given, k).map_err(|e| Failure::Rejected(e.to_string()))?;
                sink.emit(sigma_row(2 * k - 1, &lambda, &given)?)?;
            } else {
                let ctx = triangular_context(given.sum());
                if !ctx.is_triangular() {
                    return Err(Failure::Rejected(format!(
                        "{} is not a triangular number",
                        given.sum()
                    )));
                }
                let image = sigma(&given, ctx.n).map_err(domain_or_rejected)?;
                sink.emit(sigma_row(ctx.n, &given, &image)?)?;
            }
        }
        (None, Some(span)) => {
            for n in span.iter() {
                if n % 2 == 0 || n < 13 {
                    return Err(Failure::Usage(format!("σ needs odd n >= 13, got {n}")));
                }
                for lambda in generate_maximal(n) {
                    let image = sigma(&lambda, n).map_err(domain_or_rejected)?;
                    sink.emit(sigma_row(n, &lambda, &image)?)?;
                }
            }
        }
        (None, None) => return Err(Failure::Usage("sigma needs --parts or --tri".into())),
    }
    Ok(())
}

fn verify_cmd<W: Write>(args: &VerifyArgs, sink: &mut Sink<W>) -> Outcome {
    let span = match args.suite {
        Suite::Bounds => args.total,
        Suite::Bijection => args.k,
        Suite::All => None,
        _ => args.tri,
    };
    if let Some(s) = span {
        positive(s, "range start")?;
    }
    let mut failed = 0;
    for c in verify::run(args.suite, span) {
        failed += usize::from(!c.ok);
        sink.emit(
            Row::new()
                .with("suite", c.suite)
                .with("item", c.item)
                .with("status", if c.ok { "PASS" } else { "FAIL" })
                .with("detail", c.detail),
        )?;
    }
    if failed > 0 {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn sequence<W: Write>(args: &SequenceArgs, sink: &mut Sink<W>) -> Outcome {
    let need = |s: Option<Span>, flag: &str| {
        s.ok_or_else(|| Failure::Usage(format!("this sequence needs {flag}")))
    };
    match args.kind {
        SequenceKind::MupCounts => {
            if let Some(tri) = args.tri {
                for n in positive(tri, "n")?.iter() {
                    sink.emit(
                        Row::new()
                            .with("n", n)
                            .with("mup", generate_maximal(n).len()),
                    )?;
                }
            } else {
                for k in positive(need(args.k, "--k or --tri")?, "k")?.iter() {
                    let mup = generate_maximal(2 * k - 1).len() as u128;
                    let distinct = count_distinct(k, DistinctConvention::AtLeastTwo);
                    sink.emit(
                        Row::new()
                            .with("k", k)
                            .with("mup", mup)
                            .with("distinct", distinct)
                            .with("equal", mup == distinct),
                    )?;
                }
            }
        }
        SequenceKind::UnrefinableCounts => {
            for total in positive(need(args.total, "--N")?, "N")?.iter() {
                let provenance = if total == 45 {
                    "literature"
                } else {
                    "computed"
                };
                sink.emit(
                    Row::new()
                        .with("N", total)
                        .with("count", count_unrefinable_parallel(total))
                        .with("provenance", provenance),
                )?;
            }
        }
        SequenceKind::DistinctCounts => {
            for k in positive(need(args.k, "--k")?, "k")?.iter() {
                sink.emit(
                    Row::new()
                        .with("k", k)
                        .with("any", count_distinct(k, DistinctConvention::AnyLength))
                        .with(
                            "at_least_two",
                            count_distinct(k, DistinctConvention::AtLeastTwo),
                        ),
                )?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    }
    let stdout = io::stdout();
    let mut sink = Sink::new(cli.format, BufWriter::new(stdout.lock()));
    let result = match &cli.command {
        Command::Enumerate(a) => enumerate(a, &mut sink),
        Command::Count(a) => count(a, &mut sink),
        Command::Maximal(a) => maximal_rows(a, &mut sink),
        Command::Classify(a) => classify(a, &mut sink),
        Command::Sigma(a) => sigma_cmd(a, &mut sink),
        Command::Verify(a) => verify_cmd(a, &mut sink),
        Command::Sequence(a) => sequence(a, &mut sink),
    };
    let flushed = sink.finish();
    match result.and(flushed.map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(VERIFICATION_FAILURE)
        }
        Err(Failure::Checks) => ExitCode::from(VERIFICATION_FAILURE),
    }
}
