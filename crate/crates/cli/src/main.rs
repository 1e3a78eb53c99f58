//! `szeged` command-line tool: exact Wiener / Szeged / revised Szeged
//! computation, tricyclic family generation, exhaustive enumeration, and the
//! sweep / verify / crossover searches.
//!
//! Machine output conventions: quarter-unit integers travel under the key
//! `sz4`; the decimal rendering `sz_star` is presentation only. Graphs are
//! exchanged as graph6. Exit status: 0 all checks pass, 1 any failure or
//! runtime error, 2 usage error.

use std::io::{BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use szeged_core::records::RecordFormat;
use szeged_core::search::{BoundCheck, CheckStatus};
use szeged_core::*;

#[derive(Parser)]
#[command(
    name = "szeged",
    version,
    about = "Exact distance-based graph indices and tricyclic extremal search"
)]
struct Cli {
    /// Output format; defaults to a table on a terminal, jsonl when piped.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Suppress the timestamped header line in table output.
    #[arg(long, global = true)]
    no_header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Jsonl,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum IndexKind {
    Wiener,
    Szeged,
    RevisedSzeged,
}

/// Inclusive order range: `a..b` or a single `n`.
#[derive(Debug, Clone, Copy)]
struct RangeArg {
    lo: usize,
    hi: usize,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse_one = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("invalid order {t:?}"))
        };
        if let Some((a, b)) = s.split_once("..") {
            Ok(RangeArg {
                lo: parse_one(a)?,
                hi: parse_one(b)?,
            })
        } else {
            let n = parse_one(s)?;
            Ok(RangeArg { lo: n, hi: n })
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute indices of graphs given inline or as a graph6 file.
    Compute(ComputeArgs),

    /// Build one member of a parametric family and report on it.
    Family(FamilyArgs),

    /// Enumerate tricyclic graphs of one order as graph6 lines.
    Enumerate(EnumerateArgs),

    /// Scan all pendant-free tricyclic graphs per order, reporting the
    /// revised-Szeged maximum and its argmax.
    Sweep(SweepArgs),

    /// Check that the sweep maximum equals the closed form with a unique
    /// argmax for each order in the range.
    Verify(VerifyArgs),

    /// Report every graph exceeding the closed form across a range of
    /// orders, and where the exceeders stop.
    Crossover(CrossoverArgs),

    /// Exhaustively check the Theta1 per-edge delta characterization.
    Lemma31(Lemma31Args),

    /// Sample pendant tricyclic graphs and check the delta-squared penalty.
    PendantCheck(PendantCheckArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).multiple(false))]
struct ComputeArgs {
    /// Inline graph6 string.
    #[arg(long, group = "source")]
    g6: Option<String>,

    /// Newline-delimited graph6 file.
    #[arg(long, group = "source")]
    file: Option<PathBuf>,

    /// Report every index (default when --index is absent).
    #[arg(long)]
    all: bool,

    /// Report a single index.
    #[arg(long, value_enum, conflicts_with = "all")]
    index: Option<IndexKind>,

    /// Include the per-edge partition and delta table.
    #[arg(long)]
    per_edge: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// theta1 | theta2 | theta3 | theta4 | base:ID
    spec: String,

    /// Comma-separated path lengths, one per family slot.
    #[arg(long, value_delimiter = ',', required = true)]
    lengths: Vec<usize>,

    /// Print only the graph6 line.
    #[arg(long)]
    emit_g6: bool,

    /// Include the full index report.
    #[arg(long)]
    report: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order to enumerate.
    #[arg(long)]
    n: usize,

    /// Use the parametric pendant-free generator instead of the
    /// brute-force small-order enumeration.
    #[arg(long)]
    pendant_free: bool,

    /// Write the graph6 stream to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Order or inclusive range `a..b`.
    #[arg(long)]
    n: RangeArg,

    /// Append per-graph records (JSONL, or CSV with --format csv) here.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads (default: SZEGED_WORKERS or the rayon default).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Order or inclusive range `a..b`.
    #[arg(long)]
    n: RangeArg,

    /// Allow orders below 29; their rows are reported without asserting.
    #[arg(long)]
    informational: bool,
}

#[derive(Args)]
struct CrossoverArgs {
    /// Order or inclusive range `a..b` (within 7..=40).
    #[arg(long)]
    n: RangeArg,
}

#[derive(Args)]
struct Lemma31Args {
    /// Largest total path length of the Theta1 graphs to check.
    #[arg(long)]
    max_total: usize,
}

#[derive(Args)]
struct PendantCheckArgs {
    #[arg(long)]
    n: usize,

    #[arg(long)]
    samples: usize,

    #[arg(long)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            Format::Table
        } else {
            Format::Jsonl
        }
    });
    let ctx = Ctx {
        format,
        header: !cli.no_header && format == Format::Table,
    };
    match run(&cli.command, &ctx) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("szeged: error: {e}");
            ExitCode::from(1)
        }
    }
}

struct Ctx {
    format: Format,
    header: bool,
}

impl Ctx {
    fn header(&self, what: &str) {
        if self.header {
            let secs = std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            println!("# szeged {what} (unix {secs})");
        }
    }
}

fn run(cmd: &Command, ctx: &Ctx) -> Result<ExitCode> {
    match cmd {
        Command::Compute(args) => cmd_compute(args, ctx),
        Command::Family(args) => cmd_family(args, ctx),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Sweep(args) => cmd_sweep(args, ctx),
        Command::Verify(args) => cmd_verify(args, ctx),
        Command::Crossover(args) => cmd_crossover(args, ctx),
        Command::Lemma31(args) => cmd_lemma31(args, ctx),
        Command::PendantCheck(args) => cmd_pendant_check(args, ctx),
    }
}

fn load_graphs(args: &ComputeArgs) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    if let Some(s) = &args.g6 {
        out.push((s.clone(), graph6::decode_str(s)?));
    }
    if let Some(path) = &args.file {
        let file = std::fs::File::open(path)?;
        for line in std::io::BufReader::new(file).lines() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            out.push((trimmed.to_string(), graph6::decode_str(trimmed)?));
        }
    }
    Ok(out)
}

fn report_json(tag: &str, g: &Graph, r: &IndexReport, per_edge: bool) -> Result<serde_json::Value> {
    let mut v = json!({
        "g6": tag,
        "n": g.order(),
        "m": g.size(),
        "wiener": r.wiener,
        "szeged": r.szeged,
        "sz_star": r.sz_star_display(),
        "sz4": r.sz_star_q,
        "delta_sq_sum": r.delta_sq_sum,
    });
    if per_edge {
        let mut edges = Vec::new();
        for (u, vtx) in g.edges() {
            let p = edge_partition(g, u, vtx)?;
            edges.push(json!({
                "edge": [u, vtx],
                "n_u": p.n_u,
                "n_v": p.n_v,
                "n_0": p.n_0,
                "delta": p.delta(),
            }));
        }
        v["edges"] = serde_json::Value::Array(edges);
    }
    Ok(v)
}

fn cmd_compute(args: &ComputeArgs, ctx: &Ctx) -> Result<ExitCode> {
    let graphs = load_graphs(args)?;
    ctx.header("compute");
    let mut json_rows = Vec::new();
    for (tag, g) in &graphs {
        if let Some(kind) = args.index {
            let (name, value) = match kind {
                IndexKind::Wiener => ("wiener", json!(wiener(g)?)),
                IndexKind::Szeged => ("szeged", json!(szeged(g)?)),
                IndexKind::RevisedSzeged => {
                    let q = revised_szeged_q(g)?;
                    ("sz4", json!(q))
                }
            };
            match ctx.format {
                Format::Table => {
                    if kind == IndexKind::RevisedSzeged {
                        let q = revised_szeged_q(g)?;
                        println!("graph {tag}");
                        println!("sz_star {}", format_quarters(q));
                        println!("sz4 {q}");
                    } else {
                        println!("graph {tag}");
                        println!("{name} {value}");
                    }
                }
                _ => json_rows.push(json!({ "g6": tag, name: value })),
            }
            continue;
        }
        let r = index_report(g)?;
        match ctx.format {
            Format::Table => {
                println!("graph {tag}");
                println!("n {}", g.order());
                println!("m {}", g.size());
                println!("W {}", r.wiener);
                println!("Sz {}", r.szeged);
                println!("sz_star {}", r.sz_star_display());
                println!("sz4 {}", r.sz_star_q);
                println!("delta_sq_sum {}", r.delta_sq_sum);
                if args.per_edge {
                    println!("edge n_u n_v n_0 delta");
                    for (u, v) in g.edges() {
                        let p = edge_partition(g, u, v)?;
                        println!("{u}-{v} {} {} {} {}", p.n_u, p.n_v, p.n_0, p.delta());
                    }
                }
            }
            _ => json_rows.push(report_json(tag, g, &r, args.per_edge)?),
        }
    }
    emit_json_rows(ctx, json_rows)?;
    Ok(ExitCode::SUCCESS)
}

fn build_family(spec: &str, lengths: &[usize]) -> Result<(String, Graph)> {
    if let Some(id) = spec.strip_prefix("base:") {
        let base = base_by_id(id)?;
        return Ok((id.to_string(), base.subdivide(lengths)?));
    }
    let variant: ThetaVariant = spec.parse()?;
    let params = ThetaParams::new(variant, lengths.to_vec())?;
    Ok((variant.name().to_string(), theta(&params)?.graph))
}

fn cmd_family(args: &FamilyArgs, ctx: &Ctx) -> Result<ExitCode> {
    let (name, g) = build_family(&args.spec, &args.lengths)?;
    let enc = graph6::encode(&g);
    if args.emit_g6 {
        println!("{enc}");
        return Ok(ExitCode::SUCCESS);
    }
    ctx.header("family");
    if args.report {
        let r = index_report(&g)?;
        match ctx.format {
            Format::Table => {
                println!("family {name}");
                println!(
                    "lengths {}",
                    args.lengths
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                println!("g6 {enc}");
                println!("n {}", g.order());
                println!("m {}", g.size());
                println!("W {}", r.wiener);
                println!("Sz {}", r.szeged);
                println!("sz_star {}", r.sz_star_display());
                println!("sz4 {}", r.sz_star_q);
                println!("delta_sq_sum {}", r.delta_sq_sum);
            }
            _ => emit_json_rows(
                ctx,
                vec![json!({
                    "family": name,
                    "lengths": args.lengths,
                    "g6": enc,
                    "n": g.order(),
                    "m": g.size(),
                    "wiener": r.wiener,
                    "szeged": r.szeged,
                    "sz_star": r.sz_star_display(),
                    "sz4": r.sz_star_q,
                    "delta_sq_sum": r.delta_sq_sum,
                })],
            )?,
        }
    } else {
        match ctx.format {
            Format::Table => {
                println!("family {name}");
                println!("n {}", g.order());
                println!("m {}", g.size());
                println!("g6 {enc}");
            }
            _ => emit_json_rows(
                ctx,
                vec![json!({
                    "family": name,
                    "lengths": args.lengths,
                    "g6": enc,
                    "n": g.order(),
                    "m": g.size(),
                })],
            )?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<ExitCode> {
    let mut sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    if args.pendant_free {
        for assignment in enumerate_assignments(args.n)? {
            let g = subdivide(&assignment)?;
            writeln!(sink, "{}", graph6::encode(&g))?;
        }
    } else {
        for g in enumerate_small(args.n)? {
            writeln!(sink, "{}", graph6::encode(&g))?;
        }
    }
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn workers_from(args: &Option<usize>) -> usize {
    args.or_else(|| {
        std::env::var("SZEGED_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

fn cmd_sweep(args: &SweepArgs, ctx: &Ctx) -> Result<ExitCode> {
    if args.n.lo > args.n.hi {
        return Err(Error::EmptyRange {
            lo: args.n.lo,
            hi: args.n.hi,
        });
    }
    ctx.header("sweep");
    let record_format = if ctx.format == Format::Csv {
        RecordFormat::Csv
    } else {
        RecordFormat::Jsonl
    };
    let mut json_rows = Vec::new();
    for n in args.n.lo..=args.n.hi {
        let opts = SweepOptions {
            workers: workers_from(&args.workers),
            out: args.out.clone(),
            format: record_format,
            run_id: None,
        };
        let report = sweep_pendant_free_with(n, &opts)?;
        match ctx.format {
            Format::Table => {
                println!(
                    "n {} max_sz_star {} sz4 {} closed_form {} argmax {} scanned {}",
                    report.n,
                    format_quarters(report.max_sz_star_q),
                    report.max_sz_star_q,
                    report.closed_form_q,
                    report
                        .argmax
                        .iter()
                        .map(|e| e.g6.as_str())
                        .collect::<Vec<_>>()
                        .join(" "),
                    report.count_scanned
                );
            }
            _ => json_rows.push(serde_json::to_value(&report).expect("report serializes")),
        }
    }
    emit_json_rows(ctx, json_rows)?;
    Ok(ExitCode::SUCCESS)
}

fn verify_line(row: &BoundCheck) -> String {
    let tag = match row.status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Info => "INFO",
    };
    format!(
        "{tag} n={} max={} closed_form={} unique_argmax={} argmax={}",
        row.n,
        format_quarters(row.sweep_max),
        format_quarters(row.closed_form_q),
        row.unique_argmax,
        row.argmax
            .iter()
            .map(|e| e.g6.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    )
}

fn cmd_verify(args: &VerifyArgs, ctx: &Ctx) -> Result<ExitCode> {
    let rows = verify_bound(args.n.lo, args.n.hi, args.informational)?;
    ctx.header("verify");
    let mut any_fail = false;
    let mut json_rows = Vec::new();
    for row in &rows {
        any_fail |= row.status == CheckStatus::Fail;
        match ctx.format {
            Format::Table => println!("{}", verify_line(row)),
            _ => json_rows.push(serde_json::to_value(row).expect("row serializes")),
        }
    }
    emit_json_rows(ctx, json_rows)?;
    Ok(if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_crossover(args: &CrossoverArgs, ctx: &Ctx) -> Result<ExitCode> {
    let report = crossover_scan(args.n.lo, args.n.hi)?;
    ctx.header("crossover");
    match ctx.format {
        Format::Table => {
            println!("n sweep_max closed_form exceeders");
            for row in &report.rows {
                print!(
                    "{} {} {} {}",
                    row.n,
                    row.sweep_max,
                    row.closed_form_q,
                    row.exceeders.len()
                );
                for e in &row.exceeders {
                    print!(" {}:{}", e.g6, e.sz4);
                }
                println!();
            }
            match report.observed_threshold {
                Some(t) => println!("threshold {t}"),
                None => println!("threshold none"),
            }
        }
        _ => {
            emit_json_rows(
                ctx,
                vec![serde_json::to_value(&report).expect("report serializes")],
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lemma31(args: &Lemma31Args, ctx: &Ctx) -> Result<ExitCode> {
    let report = check_lemma31(args.max_total)?;
    ctx.header("lemma31");
    let ok = report.violations.is_empty();
    match ctx.format {
        Format::Table => {
            println!(
                "{} graphs {} edges {} violations {}",
                if ok { "PASS" } else { "FAIL" },
                report.graphs_checked,
                report.edges_checked,
                report.violations.len()
            );
            for v in &report.violations {
                println!(
                    "violation lengths={:?} path={} pos={} edge={:?} case={} delta={} partition={:?} {}",
                    v.lengths, v.path_letter, v.position, v.edge, v.case, v.delta, v.partition, v.detail
                );
            }
        }
        _ => emit_json_rows(
            ctx,
            vec![serde_json::to_value(&report).expect("report serializes")],
        )?,
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_pendant_check(args: &PendantCheckArgs, ctx: &Ctx) -> Result<ExitCode> {
    let report = check_pendant_lemma(args.samples, args.n, args.seed)?;
    ctx.header("pendant-check");
    let ok = report.passed();
    match ctx.format {
        Format::Table => {
            println!(
                "{} n={} samples={} failures={}",
                if ok { "PASS" } else { "FAIL" },
                report.n,
                report.samples,
                report.failures.len()
            );
            for f in &report.failures {
                println!(
                    "failure seed={} dsq={} sz4={} bound={} closed_form={}",
                    f.sample_seed, f.dsq, f.sz4, f.penalty_bound, f.closed_form_q
                );
            }
        }
        _ => emit_json_rows(
            ctx,
            vec![serde_json::to_value(&report).expect("report serializes")],
        )?,
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Machine output: jsonl prints one standalone record per line; json prints
/// a single array; csv is only meaningful for record sinks and falls back
/// to jsonl on stdout.
fn emit_json_rows(ctx: &Ctx, rows: Vec<serde_json::Value>) -> Result<()> {
    match ctx.format {
        Format::Table => Ok(()),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Array(rows))
                    .expect("values serialize")
            );
            Ok(())
        }
        Format::Jsonl | Format::Csv => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for row in rows {
                writeln!(
                    lock,
                    "{}",
                    serde_json::to_string(&row).expect("values serialize")
                )?;
            }
            Ok(())
        }
    }
}
