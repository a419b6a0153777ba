//! Command line front end: per-graph invariants and inequality checks over
//! graph6 streams, exhaustive sweeps by order, family membership, and
//! closed-form evaluation.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use szpi::enumerate::{extremal_census, survey, EnumerationOptions, MAX_ENUMERATION_ORDER};
use szpi::families::{self, SrgParams};
use szpi::graph::{parse_graph6, write_graph6, GRAPH6_MAX_ORDER};
use szpi::theorems::{run_all, TheoremVerdict};
use szpi::{compute_invariants, InvariantVector};

const EXIT_OK: i32 = 0;
const EXIT_IO: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_GRAPH: i32 = 3;
const EXIT_FAILED: i32 = 4;
const EXIT_USAGE: i32 = 64;

const LINES_PER_CHUNK: usize = 4096;

const COMPUTE_HEADER: &str = "graph6,n,m,w,pi,piv,sz,sze,m1,m2,t,diam,min_deg,error";
const VERIFY_HEADER: &str =
    "graph6,theorem,applicable,lhs,rhs,holds,equality,predicted_equality,consistent,error";
const FAMILIES_HEADER: &str = "graph6,in_xn,xn_characterization,universal_vertex,in_yn,error";

// empty data columns between graph6 and error in a failed csv row
const COMPUTE_ERROR_FIELDS: usize = 12;
const VERIFY_ERROR_FIELDS: usize = 8;
const FAMILIES_ERROR_FIELDS: usize = 4;

#[derive(Parser)]
#[command(
    name = "szpi",
    version,
    about = "Distance-based graph invariants and exact inequality checks",
    after_help = "Exit codes: 0 success, 1 input or output failure, 2 graph6 parse error,\n\
        3 graph error such as disconnected input, 4 failed check or census\n\
        mismatch, 64 usage error. Lines are processed to the end and the worst\n\
        code wins."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant vector of each input graph
    #[command(after_help = "Record fields: graph6, n, m, w, pi, piv, sz, sze, m1, m2, t, diam,\n\
        min_deg, plus error on lines that fail.")]
    Compute(StreamArgs),
    /// Run every inequality check on each input graph
    #[command(after_help = "One record per check per graph. Fields: graph6, id, applicable, lhs,\n\
        rhs, holds, equality, predicted_equality (absent for checks with only\n\
        necessary equality conditions), consistent. Check ids: piv_sz, pi_sze,\n\
        piv_nm3t, sz_n2m3t, sz_m2, pi_sze_ratio, sz_piv_sq.")]
    Verify(StreamArgs),
    /// Check every inequality on all graphs of one order
    Survey(SurveyArgs),
    /// Count the graphs attaining the nm - 3t bound against the expected census
    Extremal(ExtremalArgs),
    /// Family membership of input graphs, or generation of family members
    #[command(after_help = "Record fields: graph6, in_xn, xn_characterization, universal_vertex,\n\
        in_yn, plus error on lines that fail. With --yn N the members of the\n\
        second equality family at order N are printed as graph6 lines instead.")]
    Families(FamiliesArgs),
    /// Closed-form index values from strongly regular parameters
    Formulas(FormulasArgs),
}

#[derive(Args)]
struct StreamArgs {
    /// Input file with one graph6 string per line, or - for stdin
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = StreamFormat::Human)]
    format: StreamFormat,
    /// Worker threads for processing input lines
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct SurveyArgs {
    /// Graph order to sweep
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Process one deterministic slice of the work, written INDEX/COUNT
    #[arg(long)]
    shard: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    format: ReportFormat,
    /// Permit orders 9 and 10, which take far longer
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Single order to census; the default covers 3 through 8
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    format: ReportFormat,
    /// Permit orders 9 and 10, which take far longer
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct FamiliesArgs {
    /// Print the second-family members of this order as graph6 and exit
    #[arg(long)]
    yn: Option<usize>,
    /// Input file with one graph6 string per line, or - for stdin
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = StreamFormat::Human)]
    format: StreamFormat,
    /// Worker threads for processing input lines
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct FormulasArgs {
    /// Strongly regular parameters, written V,K,LAMBDA,MU
    #[arg(long)]
    srg: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
    format: ReportFormat,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    /// One readable line per graph
    Human,
    /// JSON lines
    Json,
    /// Comma-separated rows under a header line
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Human,
    Json,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let code = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Survey(args) => cmd_survey(&args),
        Command::Extremal(args) => cmd_extremal(&args),
        Command::Families(args) => cmd_families(&args),
        Command::Formulas(args) => cmd_formulas(&args),
    };
    std::process::exit(code);
}

fn cmd_compute(args: &StreamArgs) -> i32 {
    let format = args.format;
    let header = (format == StreamFormat::Csv).then_some(COMPUTE_HEADER);
    process_lines(&args.input, args.workers, header, move |line| render_compute(line, format))
}

fn cmd_verify(args: &StreamArgs) -> i32 {
    let format = args.format;
    let header = (format == StreamFormat::Csv).then_some(VERIFY_HEADER);
    process_lines(&args.input, args.workers, header, move |line| render_verify(line, format))
}

fn cmd_survey(args: &SurveyArgs) -> i32 {
    if let Err(code) = check_order(args.n, args.allow_large) {
        return code;
    }
    let shard = match parse_shard(args.shard.as_deref()) {
        Ok(shard) => shard,
        Err(msg) => {
            eprintln!("szpi: {}", msg);
            return EXIT_USAGE;
        }
    };
    let opts = EnumerationOptions { workers: args.workers.max(1), shard };
    let summary = match survey(args.n, &opts) {
        Ok(summary) => summary,
        Err(err) => {
            eprintln!("szpi: {}", err);
            return EXIT_USAGE;
        }
    };
    match args.format {
        ReportFormat::Json => {
            println!("{}", serde_json::to_string(&summary).expect("serializable summary"))
        }
        ReportFormat::Human => {
            println!(
                "order {}: {} graphs, {} connected",
                summary.order, summary.total_graphs, summary.connected_graphs
            );
            println!(
                "{:<13} {:>10} {:>10} {:>10} {:>12}",
                "check", "applicable", "holds", "equality", "inconsistent"
            );
            for stats in &summary.theorems {
                println!(
                    "{:<13} {:>10} {:>10} {:>10} {:>12}",
                    stats.id.as_str(),
                    stats.applicable,
                    stats.holds,
                    stats.equality,
                    stats.inconsistent
                );
            }
            if summary.counterexamples.is_empty() {
                println!("counterexamples: none");
            } else {
                for g6 in &summary.counterexamples {
                    println!("counterexample: {}", g6);
                }
            }
        }
    }
    eprintln!("elapsed: {:?}", summary.elapsed);
    let clean = summary.counterexamples.is_empty()
        && summary.theorems.iter().all(|t| t.holds == t.applicable && t.inconsistent == 0);
    if clean {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Census counts the survey is expected to reproduce at each order.
const EXPECTED_EXTREMAL: [(usize, u64); 8] =
    [(3, 1), (4, 2), (5, 4), (6, 7), (7, 11), (8, 17), (9, 25), (10, 36)];

#[derive(Serialize)]
struct ExtremalRow {
    order: u32,
    count: u64,
    expected: u64,
    all_within_diameter_two: bool,
    ok: bool,
}

fn cmd_extremal(args: &ExtremalArgs) -> i32 {
    let orders: Vec<usize> = match args.n {
        Some(n) => {
            if let Err(code) = check_order(n, args.allow_large) {
                return code;
            }
            vec![n]
        }
        None => (3..=8).collect(),
    };
    let opts = EnumerationOptions { workers: args.workers.max(1), shard: None };
    let mut rows = Vec::new();
    for n in orders {
        let census = match extremal_census(n, &opts) {
            Ok(census) => census,
            Err(err) => {
                eprintln!("szpi: {}", err);
                return EXIT_USAGE;
            }
        };
        let expected = EXPECTED_EXTREMAL
            .iter()
            .find(|&&(order, _)| order == n)
            .map(|&(_, count)| count)
            .expect("order was range checked");
        rows.push(ExtremalRow {
            order: census.order,
            count: census.count,
            expected,
            all_within_diameter_two: census.all_within_diameter_two,
            ok: census.count == expected && census.all_within_diameter_two,
        });
    }
    match args.format {
        ReportFormat::Json => {
            println!("{}", serde_json::to_string(&rows).expect("serializable rows"))
        }
        ReportFormat::Human => {
            println!("{:<6} {:>8} {:>9} {:>8}  status", "order", "count", "expected", "diam<=2");
            for row in &rows {
                println!(
                    "{:<6} {:>8} {:>9} {:>8}  {}",
                    row.order,
                    row.count,
                    row.expected,
                    if row.all_within_diameter_two { "yes" } else { "no" },
                    if row.ok { "ok" } else { "MISMATCH" }
                );
            }
        }
    }
    if rows.iter().all(|row| row.ok) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn cmd_families(args: &FamiliesArgs) -> i32 {
    if let Some(n) = args.yn {
        if n == 0 || n > GRAPH6_MAX_ORDER {
            eprintln!("szpi: --yn takes an order between 1 and {}", GRAPH6_MAX_ORDER);
            return EXIT_USAGE;
        }
        let stdout = io::stdout();
        let mut out = BufWriter::new(stdout.lock());
        for member in families::yn_members(n) {
            let g = member.build().expect("generated members are valid");
            let g6 = write_graph6(&g).expect("order fits graph6");
            if writeln!(out, "{}", g6).is_err() {
                return EXIT_IO;
            }
        }
        if out.flush().is_err() {
            return EXIT_IO;
        }
        return EXIT_OK;
    }
    let format = args.format;
    let header = (format == StreamFormat::Csv).then_some(FAMILIES_HEADER);
    process_lines(&args.input, args.workers, header, move |line| render_families(line, format))
}

#[derive(Serialize)]
struct SrgRecord {
    #[serde(flatten)]
    params: SrgParams,
    #[serde(flatten)]
    values: families::SrgIndexValues,
}

fn cmd_formulas(args: &FormulasArgs) -> i32 {
    let fields: Vec<&str> = args.srg.split(',').map(str::trim).collect();
    let parsed: Result<Vec<u64>, _> = fields.iter().map(|s| s.parse::<u64>()).collect();
    let nums = match (fields.len(), parsed) {
        (4, Ok(nums)) => nums,
        _ => {
            eprintln!("szpi: --srg expects four comma-separated integers V,K,LAMBDA,MU");
            return EXIT_USAGE;
        }
    };
    let params = match SrgParams::new(nums[0], nums[1], nums[2], nums[3]) {
        Ok(params) => params,
        Err(err) => {
            eprintln!("szpi: infeasible parameters: {}", err);
            return EXIT_USAGE;
        }
    };
    let values = match families::srg_closed_forms(params) {
        Ok(values) => values,
        Err(err) => {
            eprintln!("szpi: {}", err);
            return EXIT_USAGE;
        }
    };
    match args.format {
        ReportFormat::Json => println!(
            "{}",
            serde_json::to_string(&SrgRecord { params, values }).expect("serializable record")
        ),
        ReportFormat::Human => println!(
            "srg({}, {}, {}, {}): piv = {}, sz = {}",
            params.v, params.k, params.lambda, params.mu, values.vertex_pi, values.szeged
        ),
    }
    EXIT_OK
}

fn check_order(n: usize, allow_large: bool) -> Result<(), i32> {
    if !(3..=MAX_ENUMERATION_ORDER).contains(&n) {
        eprintln!("szpi: order must be between 3 and {}", MAX_ENUMERATION_ORDER);
        return Err(EXIT_USAGE);
    }
    if n >= 9 && !allow_large {
        eprintln!("szpi: order {} is expensive, pass --allow-large to run it", n);
        return Err(EXIT_USAGE);
    }
    Ok(())
}

fn parse_shard(spec: Option<&str>) -> Result<Option<(usize, usize)>, String> {
    let Some(spec) = spec else { return Ok(None) };
    let (index, count) = spec
        .split_once('/')
        .ok_or_else(|| format!("shard must be written INDEX/COUNT, got {}", spec))?;
    let index: usize =
        index.trim().parse().map_err(|_| format!("bad shard index in {}", spec))?;
    let count: usize =
        count.trim().parse().map_err(|_| format!("bad shard count in {}", spec))?;
    if count == 0 || index >= count {
        return Err(format!("shard index {} out of range for {} shards", index, count));
    }
    Ok(Some((index, count)))
}

fn open_input(path: &str) -> io::Result<Box<dyn BufRead>> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

/// Feed every input line through `render` and print the results in input
/// order, a chunk at a time. Blank lines and `>>` header lines are skipped.
/// Returns the worst per-line exit code; input and output failures trump it.
fn process_lines<F>(input: &str, workers: usize, header: Option<&str>, render: F) -> i32
where
    F: Fn(&str) -> (String, i32) + Sync,
{
    let mut reader = match open_input(input) {
        Ok(reader) => reader,
        Err(err) => {
            eprintln!("szpi: cannot open {}: {}", input, err);
            return EXIT_IO;
        }
    };
    let pool = if workers > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => Some(pool),
            Err(err) => {
                eprintln!("szpi: cannot start worker pool: {}", err);
                return EXIT_IO;
            }
        }
    } else {
        None
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if let Some(header) = header {
        if writeln!(out, "{}", header).is_err() {
            return EXIT_IO;
        }
    }
    let mut worst = EXIT_OK;
    let mut chunk: Vec<String> = Vec::with_capacity(LINES_PER_CHUNK);
    let mut line = String::new();
    loop {
        chunk.clear();
        while chunk.len() < LINES_PER_CHUNK {
            line.clear();
            match reader.read_line(&mut line) {
                Ok(0) => break,
                Ok(_) => {
                    let trimmed = line.trim_end_matches(['\n', '\r']);
                    if trimmed.is_empty() || trimmed.starts_with(">>") {
                        continue;
                    }
                    chunk.push(trimmed.to_string());
                }
                Err(err) => {
                    eprintln!("szpi: read error: {}", err);
                    return EXIT_IO;
                }
            }
        }
        if chunk.is_empty() {
            break;
        }
        let rendered: Vec<(String, i32)> = match &pool {
            Some(pool) => pool.install(|| chunk.par_iter().map(|l| render(l)).collect()),
            None => chunk.iter().map(|l| render(l)).collect(),
        };
        for (text, code) in rendered {
            worst = worst.max(code);
            if writeln!(out, "{}", text).is_err() {
                return EXIT_IO;
            }
        }
        if chunk.len() < LINES_PER_CHUNK {
            break;
        }
    }
    if out.flush().is_err() {
        return EXIT_IO;
    }
    worst
}

#[derive(Serialize)]
struct GraphRecord<'a> {
    graph6: &'a str,
    n: usize,
    m: usize,
    #[serde(flatten)]
    invariants: &'a InvariantVector,
}

#[derive(Serialize)]
struct GraphErrorRecord<'a> {
    graph6: &'a str,
    n: usize,
    m: usize,
    error: &'a str,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    graph6: &'a str,
    error: &'a str,
}

#[derive(Serialize)]
struct VerdictRecord<'a> {
    graph6: &'a str,
    #[serde(flatten)]
    verdict: &'a TheoremVerdict,
}

#[derive(Serialize)]
struct FamilyRecord<'a> {
    graph6: &'a str,
    in_xn: bool,
    xn_characterization: bool,
    universal_vertex: bool,
    in_yn: bool,
}

fn render_compute(line: &str, format: StreamFormat) -> (String, i32) {
    let g = match parse_graph6(line) {
        Ok(g) => g,
        Err(err) => {
            return (
                render_error_record(line, &err.to_string(), format, COMPUTE_ERROR_FIELDS),
                EXIT_PARSE,
            )
        }
    };
    let (n, m) = (g.order(), g.edge_count());
    match compute_invariants(&g) {
        Ok(inv) => {
            let text = match format {
                StreamFormat::Human => format!(
                    "{} n={} m={} w={} pi={} piv={} sz={} sze={} m1={} m2={} t={} diam={} min_deg={}",
                    line,
                    n,
                    m,
                    inv.wiener,
                    inv.edge_pi,
                    inv.vertex_pi,
                    inv.szeged,
                    inv.edge_szeged,
                    inv.first_zagreb,
                    inv.second_zagreb,
                    inv.triangles,
                    inv.diameter,
                    inv.min_degree
                ),
                StreamFormat::Json => {
                    serde_json::to_string(&GraphRecord { graph6: line, n, m, invariants: &inv })
                        .expect("serializable record")
                }
                StreamFormat::Csv => format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},",
                    csv_field(line),
                    n,
                    m,
                    inv.wiener,
                    inv.edge_pi,
                    inv.vertex_pi,
                    inv.szeged,
                    inv.edge_szeged,
                    inv.first_zagreb,
                    inv.second_zagreb,
                    inv.triangles,
                    inv.diameter,
                    inv.min_degree
                ),
            };
            (text, EXIT_OK)
        }
        Err(err) => {
            let msg = err.to_string();
            let text = match format {
                StreamFormat::Human => format!("{} n={} m={} error: {}", line, n, m, msg),
                StreamFormat::Json => {
                    serde_json::to_string(&GraphErrorRecord { graph6: line, n, m, error: &msg })
                        .expect("serializable record")
                }
                StreamFormat::Csv => {
                    format!("{},{},{},,,,,,,,,,,{}", csv_field(line), n, m, csv_field(&msg))
                }
            };
            (text, EXIT_GRAPH)
        }
    }
}

fn render_verify(line: &str, format: StreamFormat) -> (String, i32) {
    let g = match parse_graph6(line) {
        Ok(g) => g,
        Err(err) => {
            return (
                render_error_record(line, &err.to_string(), format, VERIFY_ERROR_FIELDS),
                EXIT_PARSE,
            )
        }
    };
    let verdicts = match run_all(&g) {
        Ok(verdicts) => verdicts,
        Err(err) => {
            return (
                render_error_record(line, &err.to_string(), format, VERIFY_ERROR_FIELDS),
                EXIT_GRAPH,
            )
        }
    };
    let all_consistent = verdicts.iter().all(|v| v.detail.is_none_or(|d| d.consistent));
    let text = match format {
        StreamFormat::Human => {
            let mut s = String::from(line);
            for v in &verdicts {
                s.push(' ');
                s.push_str(v.id.as_str());
                s.push(':');
                s.push_str(match v.detail {
                    None => "-",
                    Some(d) if !d.consistent => "FAIL",
                    Some(d) if d.equality => "eq",
                    Some(_) => "ok",
                });
            }
            s
        }
        StreamFormat::Json => verdicts
            .iter()
            .map(|v| {
                serde_json::to_string(&VerdictRecord { graph6: line, verdict: v })
                    .expect("serializable record")
            })
            .collect::<Vec<_>>()
            .join("\n"),
        StreamFormat::Csv => verdicts
            .iter()
            .map(|v| verdict_csv_row(line, v))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    (text, if all_consistent { EXIT_OK } else { EXIT_FAILED })
}

fn verdict_csv_row(line: &str, v: &TheoremVerdict) -> String {
    match v.detail {
        Some(d) => format!(
            "{},{},true,{},{},{},{},{},{},",
            csv_field(line),
            v.id.as_str(),
            d.lhs,
            d.rhs,
            d.holds,
            d.equality,
            d.predicted_equality.map(|p| p.to_string()).unwrap_or_default(),
            d.consistent
        ),
        None => format!("{},{},false,,,,,,,", csv_field(line), v.id.as_str()),
    }
}

fn render_families(line: &str, format: StreamFormat) -> (String, i32) {
    let g = match parse_graph6(line) {
        Ok(g) => g,
        Err(err) => {
            return (
                render_error_record(line, &err.to_string(), format, FAMILIES_ERROR_FIELDS),
                EXIT_PARSE,
            )
        }
    };
    let record = FamilyRecord {
        graph6: line,
        in_xn: families::in_xn(&g),
        xn_characterization: families::xn_characterization(&g),
        universal_vertex: families::has_universal_vertex(&g),
        in_yn: families::in_yn(&g),
    };
    let text = match format {
        StreamFormat::Human => format!(
            "{} in_xn={} xn_characterization={} universal_vertex={} in_yn={}",
            line, record.in_xn, record.xn_characterization, record.universal_vertex, record.in_yn
        ),
        StreamFormat::Json => serde_json::to_string(&record).expect("serializable record"),
        StreamFormat::Csv => format!(
            "{},{},{},{},{},",
            csv_field(line),
            record.in_xn,
            record.xn_characterization,
            record.universal_vertex,
            record.in_yn
        ),
    };
    (text, EXIT_OK)
}

fn render_error_record(line: &str, msg: &str, format: StreamFormat, empty_fields: usize) -> String {
    match format {
        StreamFormat::Human => format!("{} error: {}", line, msg),
        StreamFormat::Json => serde_json::to_string(&ErrorRecord { graph6: line, error: msg })
            .expect("serializable record"),
        StreamFormat::Csv => {
            let mut row = csv_field(line);
            for _ in 0..=empty_fields {
                row.push(',');
            }
            row.push_str(&csv_field(msg));
            row
        }
    }
}

/// graph6 never needs quoting (its alphabet is above the comma), error
/// messages get quoted defensively.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
