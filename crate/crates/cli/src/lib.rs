//! Library half of the `altind` command-line tool: argument model, command
//! implementations and output writers. `main.rs` only wires these to stdio.

use std::fmt::Display;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use altind::bounds::{self, CorpusOptions, Record};
use altind::constructions::realize_with;
use altind::cycles::is_ternary_with;
use altind::decycling::{cyclomatic_number, middle_bound_with, min_decycling_with, min_ternary_decycling_with};
use altind::graph::parse_edge_lists;
use altind::graph6::to_graph6;
use altind::indpoly::{alternating_number_with, independence_polynomial_with, oracle_polynomial, ORACLE_CAP};
use altind::{Graph, Limits, VertexSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Number;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest `n` accepted by `enumerate`.
pub const ENUMERATE_MAX: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "altind", version, about = "Exact independence polynomials, decycling numbers and bound checks for small graphs")]
#[command(after_help = "Exit status: 0 ok, 1 violation or failed realization, 2 input error, 3 budget exhausted (with --strict).")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// One graph6 string per line.
    Graph6,
    /// Blocks of "n m" followed by m lines "u v".
    Edgelist,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Input file, or - for standard input.
    #[arg(long, global = true, value_name = "PATH|-", default_value = "-")]
    pub input: String,
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Graph6)]
    pub input_format: InputFormat,
    /// json writes JSON lines; csv writes a header row and one row per graph.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Recursive expansions allowed per polynomial or cycle search.
    #[arg(long, global = true, value_name = "N", default_value_t = Limits::DEFAULT_EXPANSIONS,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_expansions: u64,
    /// Maximum number of chordless cycles listed.
    #[arg(long, global = true, value_name = "N", default_value_t = Limits::DEFAULT_CYCLE_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub cycle_cap: u64,
    /// Candidate subsets examined per decycling search.
    #[arg(long, global = true, value_name = "N", default_value_t = Limits::DEFAULT_SUBSET_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub subset_cap: u64,
    /// Largest k accepted by generate.
    #[arg(long, global = true, value_name = "K", default_value_t = altind::constructions::DEFAULT_DENSITY_CAP,
          value_parser = clap::value_parser!(u32).range(1..=8))]
    pub density_k: u32,
    /// Treat checks that ran out of budget as failures (exit 3).
    #[arg(long, global = true)]
    pub strict: bool,
    /// Worker threads; 0 uses every available core.
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    pub jobs: usize,
    /// verify: stop at the first violation or malformed line.
    #[arg(long, global = true)]
    pub fail_fast: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Report every invariant of each input graph.
    Analyze,
    /// Check every bound on |I(G;-1)| over a corpus and summarize.
    Verify,
    /// Build connected graphs with a given ternary decycling number k and
    /// alternating number q.
    Generate {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "all", conflicts_with = "all")]
        q: Option<i64>,
        /// Every q with |q| <= 2^k.
        #[arg(long)]
        all: bool,
        /// Also write one JSON recipe file per target into this directory.
        #[arg(long, value_name = "DIR")]
        recipe_dir: Option<PathBuf>,
    },
    /// Compare the fast polynomial with subset enumeration.
    Oracle,
    /// Print every labelled graph on n vertices as graph6, edge mask ascending.
    Enumerate { n: usize },
}

/// Fully resolved settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: String,
    pub input_format: InputFormat,
    pub format: Format,
    pub limits: Limits,
    pub density_k: u32,
    pub strict: bool,
    pub jobs: usize,
    pub fail_fast: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let o = cli.options;
        RunConfig {
            command: cli.command,
            input: o.input,
            input_format: o.input_format,
            format: o.format,
            limits: Limits {
                expansions: o.budget_expansions,
                cycle_cap: usize::try_from(o.cycle_cap).unwrap_or(usize::MAX),
                subset_cap: o.subset_cap,
            },
            density_k: o.density_k,
            strict: o.strict,
            jobs: o.jobs,
            fail_fast: o.fail_fast,
        }
    }
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: "-".into(),
            input_format: InputFormat::Graph6,
            format: Format::Json,
            limits: Limits::default(),
            density_k: altind::constructions::DEFAULT_DENSITY_CAP,
            strict: false,
            jobs: 0,
            fail_fast: false,
        }
    }

    fn corpus_options(&self) -> CorpusOptions {
        CorpusOptions { limits: self.limits, jobs: self.jobs, fail_fast: self.fail_fast }
    }

    fn pool(&self) -> io::Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(io::Error::other)
    }
}

/// Streams a command writes to.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Runs one command and returns its exit status. `Err` is reserved for
/// failures writing output.
pub fn run(config: &RunConfig, io: &mut Streams) -> io::Result<i32> {
    match &config.command {
        Command::Analyze => cmd_analyze(config, io),
        Command::Verify => cmd_verify(config, io),
        Command::Generate { k, q, all, recipe_dir } => {
            let targets = if *all { None } else { *q };
            cmd_generate(config, io, *k, targets, recipe_dir.as_ref())
        }
        Command::Oracle => cmd_oracle(config, io),
        Command::Enumerate { n } => cmd_enumerate(io, *n),
    }
}

type Parsed = Vec<(usize, Result<Graph, String>)>;

/// Reads the configured input. `Err` carries a message for exit status 2.
fn load(config: &RunConfig, io: &mut Streams) -> Result<Parsed, String> {
    let mut text = String::new();
    if config.input == "-" {
        io.stdin.read_to_string(&mut text).map_err(|e| format!("stdin: {e}"))?;
    } else {
        text = fs::read_to_string(&config.input).map_err(|e| format!("{}: {e}", config.input))?;
    }
    match config.input_format {
        InputFormat::Graph6 => bounds::read_graph6_lines(text.as_bytes()).map_err(|e| e.to_string()),
        InputFormat::Edgelist => {
            let graphs = parse_edge_lists(&text).map_err(|e| e.to_string())?;
            Ok(graphs.into_iter().enumerate().map(|(i, g)| (i + 1, Ok(g))).collect())
        }
    }
}

fn input_failure(io: &mut Streams, message: &str) -> io::Result<i32> {
    writeln!(io.err, "altind: {message}")?;
    Ok(EXIT_INPUT)
}

fn report_input_errors<'a>(io: &mut Streams, errors: impl Iterator<Item = (usize, &'a str)>) -> io::Result<()> {
    for (line, error) in errors {
        writeln!(io.err, "altind: line {line}: {error}")?;
    }
    Ok(())
}

fn num(x: impl Display) -> Number {
    x.to_string().parse().expect("integers are valid JSON numbers")
}

fn joined<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn opt<T: Display>(x: &Option<T>) -> String {
    x.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeRecord {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub e: usize,
    pub q: usize,
    pub nu: usize,
    pub phi: Option<usize>,
    pub phi_witness: Option<Vec<usize>>,
    pub phi3: Option<usize>,
    pub phi3_witness: Option<Vec<usize>>,
    pub alternating: Option<Number>,
    pub independent_sets: Option<Number>,
    pub polynomial: Option<Vec<Number>>,
    pub ternary: Option<bool>,
    pub middle_bound: Option<Number>,
    pub middle_witness: Option<Vec<usize>>,
    /// Quantities left out because a budget ran out, with the reason.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub not_evaluated: Vec<String>,
}

/// Every invariant of one graph; fields whose search ran out of budget are
/// `None` and listed in `not_evaluated`.
pub fn analyze_graph(line: usize, g: &Graph, limits: &Limits) -> AnalyzeRecord {
    fn keep<T>(missing: &mut Vec<String>, name: &str, r: altind::Result<T>) -> Option<T> {
        r.map_err(|e| missing.push(format!("{name}: {e}"))).ok()
    }
    let mut missing = Vec::new();
    let labels = |s: VertexSet| g.original_labels(s);
    let poly = keep(&mut missing, "polynomial", independence_polynomial_with(g, limits));
    let phi = keep(&mut missing, "phi", min_decycling_with(g, limits));
    let phi3 = keep(&mut missing, "phi3", min_ternary_decycling_with(g, limits));
    let ternary = keep(&mut missing, "ternary", is_ternary_with(g, limits));
    let middle = keep(&mut missing, "middle_bound", middle_bound_with(g, limits));
    AnalyzeRecord {
        line,
        graph6: to_graph6(g),
        n: g.n(),
        e: g.edge_count(),
        q: g.component_count(),
        nu: cyclomatic_number(g),
        phi: phi.map(|(k, _)| k),
        phi_witness: phi.map(|(_, w)| labels(w)),
        phi3: phi3.map(|(k, _)| k),
        phi3_witness: phi3.map(|(_, w)| labels(w)),
        alternating: poly.as_ref().map(|p| num(p.at_minus_one())),
        independent_sets: poly.as_ref().map(|p| num(p.total())),
        polynomial: poly.as_ref().map(|p| p.coefficients().iter().map(num).collect()),
        ternary,
        middle_bound: middle.as_ref().map(|(m, _)| num(m)),
        middle_witness: middle.map(|(_, w)| labels(w)),
        not_evaluated: missing,
    }
}

const ANALYZE_COLUMNS: &[&str] = &[
    "line", "graph6", "n", "e", "q", "nu", "phi", "phi_witness", "phi3", "phi3_witness", "alternating",
    "independent_sets", "polynomial", "ternary", "middle_bound", "middle_witness", "not_evaluated", "error",
];

fn analyze_row(r: &AnalyzeRecord) -> Vec<String> {
    let seq = |v: &Option<Vec<usize>>| v.as_ref().map(joined).unwrap_or_default();
    vec![
        r.line.to_string(),
        r.graph6.clone(),
        r.n.to_string(),
        r.e.to_string(),
        r.q.to_string(),
        r.nu.to_string(),
        opt(&r.phi),
        seq(&r.phi_witness),
        opt(&r.phi3),
        seq(&r.phi3_witness),
        opt(&r.alternating),
        opt(&r.independent_sets),
        r.polynomial.as_ref().map(joined).unwrap_or_default(),
        opt(&r.ternary),
        opt(&r.middle_bound),
        seq(&r.middle_witness),
        r.not_evaluated.join("; "),
        String::new(),
    ]
}

fn error_row(width: usize, line: usize, error: &str) -> Vec<String> {
    let mut row = vec![String::new(); width];
    row[0] = line.to_string();
    row[width - 1] = error.to_string();
    row
}

pub fn cmd_analyze(config: &RunConfig, io: &mut Streams) -> io::Result<i32> {
    let inputs = match load(config, io) {
        Ok(v) => v,
        Err(e) => return input_failure(io, &e),
    };
    let records: Vec<Result<AnalyzeRecord, bounds::InputError>> = config.pool()?.install(|| {
        inputs
            .par_iter()
            .map(|(line, parsed)| match parsed {
                Ok(g) => Ok(analyze_graph(*line, g, &config.limits)),
                Err(error) => Err(bounds::InputError { line: *line, error: error.clone() }),
            })
            .collect()
    });
    match config.format {
        Format::Json => {
            for r in &records {
                match r {
                    Ok(rec) => write_json(io.out, rec)?,
                    Err(e) => write_json(io.out, e)?,
                }
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| match r {
                    Ok(rec) => analyze_row(rec),
                    Err(e) => error_row(ANALYZE_COLUMNS.len(), e.line, &e.error),
                })
                .collect();
            write_csv(io.out, ANALYZE_COLUMNS, &rows)?;
        }
    }
    report_input_errors(io, records.iter().filter_map(|r| r.as_ref().err()).map(|e| (e.line, e.error.as_str())))?;
    let input_errors = records.iter().any(|r| r.is_err());
    let unevaluated = records.iter().any(|r| r.as_ref().is_ok_and(|rec| !rec.not_evaluated.is_empty()));
    Ok(if input_errors {
        EXIT_INPUT
    } else if config.strict && unevaluated {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

fn verify_columns() -> Vec<String> {
    let mut cols: Vec<String> = ["line", "graph6", "n", "alternating", "ternary", "phi", "phi3", "nu", "middle_bound"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for name in bounds::Checks::<()>::NAMES {
        cols.push(format!("{name}_status"));
        cols.push(format!("{name}_bound"));
        cols.push(format!("{name}_slack"));
    }
    cols.push("error".into());
    cols
}

fn verify_row(r: &bounds::BoundsReport) -> Vec<String> {
    let mut row = vec![
        opt(&r.line),
        r.graph6.clone(),
        r.n.to_string(),
        opt(&r.alternating),
        opt(&r.ternary),
        opt(&r.phi),
        opt(&r.phi3),
        r.nu.to_string(),
        opt(&r.middle_bound),
    ];
    for (_, c) in r.checks.iter() {
        let status = serde_json::to_value(c.status).expect("status serializes");
        row.push(status.as_str().unwrap_or_default().to_string());
        row.push(opt(&c.bound));
        row.push(opt(&c.slack));
    }
    row.push(String::new());
    row
}

/// Bound checks over the input corpus: one record per line, then a summary.
pub fn cmd_verify(config: &RunConfig, io: &mut Streams) -> io::Result<i32> {
    let inputs = match load(config, io) {
        Ok(v) => v,
        Err(e) => return input_failure(io, &e),
    };
    let outcome = bounds::verify_graphs(&inputs, &config.corpus_options())?;
    #[derive(Serialize)]
    struct Wrapped<'a> {
        summary: &'a bounds::Summary,
    }
    let summary = Wrapped { summary: &outcome.summary };
    match config.format {
        Format::Json => {
            for r in &outcome.records {
                write_json(io.out, r)?;
            }
            write_json(io.out, &summary)?;
        }
        Format::Csv => {
            let cols = verify_columns();
            let header: Vec<&str> = cols.iter().map(String::as_str).collect();
            let rows: Vec<Vec<String>> = outcome
                .records
                .iter()
                .map(|r| match r {
                    Record::Report(rep) => verify_row(rep),
                    Record::InputError(e) => error_row(cols.len(), e.line, &e.error),
                })
                .collect();
            write_csv(io.out, &header, &rows)?;
            write_json(io.err, &summary)?;
        }
    }
    report_input_errors(
        io,
        outcome.records.iter().filter_map(|r| match r {
            Record::InputError(e) => Some((e.line, e.error.as_str())),
            Record::Report(_) => None,
        }),
    )?;
    for v in &outcome.summary.violations {
        writeln!(io.err, "altind: line {}: {} violated by {}", opt(&v.line), v.check, v.graph6)?;
    }
    Ok(outcome.summary.exit_code(config.strict))
}

#[derive(Debug, Clone, Serialize)]
pub struct GenerateRecord {
    pub k: u32,
    pub q: i64,
    pub graph6: String,
    pub n: usize,
    pub alternating: Number,
    pub phi3: usize,
    pub recipe: altind::constructions::GadgetRecipe,
}

/// Realizes `(k, q)` for one `q`, or for every `|q| <= 2^k` when `q` is
/// `None`.
pub fn cmd_generate(
    config: &RunConfig,
    io: &mut Streams,
    k: u32,
    q: Option<i64>,
    recipe_dir: Option<&PathBuf>,
) -> io::Result<i32> {
    if k == 0 || k > config.density_k {
        return input_failure(io, &format!("k must be between 1 and the density cap {}", config.density_k));
    }
    let span = 1i64 << k;
    let targets: Vec<i64> = match q {
        Some(q) if q.abs() > span => return input_failure(io, &format!("|q| = {} exceeds 2^{k} = {span}", q.abs())),
        Some(q) => vec![q],
        None => (-span..=span).collect(),
    };
    let results: Vec<(i64, altind::Result<GenerateRecord>)> = config.pool()?.install(|| {
        targets
            .par_iter()
            .map(|&q| (q, generate_one(k, q, config)))
            .collect()
    });

    if let Some(dir) = recipe_dir {
        fs::create_dir_all(dir)?;
        for rec in results.iter().filter_map(|(_, r)| r.as_ref().ok()) {
            let path = dir.join(format!("k{}_q{}.json", rec.k, rec.q));
            let mut text = serde_json::to_string_pretty(rec)?;
            text.push('\n');
            fs::write(path, text)?;
        }
    }

    let ok: Vec<&GenerateRecord> = results.iter().filter_map(|(_, r)| r.as_ref().ok()).collect();
    match config.format {
        Format::Json => {
            for rec in &ok {
                write_json(io.out, rec)?;
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = ok
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.q.to_string(),
                        r.graph6.clone(),
                        r.n.to_string(),
                        r.alternating.to_string(),
                        r.phi3.to_string(),
                    ]
                })
                .collect();
            write_csv(io.out, &["k", "q", "graph6", "n", "alternating", "phi3"], &rows)?;
        }
    }
    let mut failed = false;
    for (q, r) in &results {
        if let Err(e) = r {
            failed = true;
            writeln!(io.err, "altind: could not realize k={k} q={q}: {e}")?;
        }
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn generate_one(k: u32, q: i64, config: &RunConfig) -> altind::Result<GenerateRecord> {
    let (g, recipe) = realize_with(k, q, config.density_k, &config.limits)?;
    // Reported values are recomputed from the graph, not taken from the recipe.
    let alternating = alternating_number_with(&g, &config.limits)?;
    let (phi3, _) = min_ternary_decycling_with(&g, &config.limits)?;
    Ok(GenerateRecord { k, q, graph6: to_graph6(&g), n: g.n(), alternating: num(alternating), phi3, recipe })
}

#[derive(Debug, Clone, Serialize)]
struct OracleRecord {
    line: usize,
    graph6: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomial: Option<Vec<Number>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Vec<Number>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    not_evaluated: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
struct OracleSummary {
    graphs: usize,
    agree: usize,
    mismatches: usize,
    not_evaluated: usize,
    input_errors: usize,
}

fn oracle_graph(line: usize, g: &Graph, limits: &Limits) -> OracleRecord {
    let mut rec = OracleRecord {
        line,
        graph6: to_graph6(g),
        n: g.n(),
        agree: None,
        polynomial: None,
        oracle: None,
        not_evaluated: None,
    };
    if g.n() > ORACLE_CAP {
        rec.not_evaluated = Some(format!("oracle limited to {ORACLE_CAP} vertices"));
        return rec;
    }
    match (independence_polynomial_with(g, limits), oracle_polynomial(g)) {
        (Ok(fast), Ok(slow)) => {
            rec.agree = Some(fast == slow);
            rec.polynomial = Some(fast.coefficients().iter().map(num).collect());
            rec.oracle = Some(slow.coefficients().iter().map(num).collect());
        }
        (Err(e), _) | (_, Err(e)) => rec.not_evaluated = Some(e.to_string()),
    }
    rec
}

/// Fast polynomial against subset enumeration, per graph, with a summary.
pub fn cmd_oracle(config: &RunConfig, io: &mut Streams) -> io::Result<i32> {
    let inputs = match load(config, io) {
        Ok(v) => v,
        Err(e) => return input_failure(io, &e),
    };
    let records: Vec<Result<OracleRecord, bounds::InputError>> = config.pool()?.install(|| {
        inputs
            .par_iter()
            .map(|(line, parsed)| match parsed {
                Ok(g) => Ok(oracle_graph(*line, g, &config.limits)),
                Err(error) => Err(bounds::InputError { line: *line, error: error.clone() }),
            })
            .collect()
    });
    let mut summary = OracleSummary::default();
    for r in &records {
        match r {
            Err(_) => summary.input_errors += 1,
            Ok(rec) => {
                summary.graphs += 1;
                match rec.agree {
                    Some(true) => summary.agree += 1,
                    Some(false) => summary.mismatches += 1,
                    None => summary.not_evaluated += 1,
                }
            }
        }
    }
    #[derive(Serialize)]
    struct Wrapped<'a> {
        summary: &'a OracleSummary,
    }
    match config.format {
        Format::Json => {
            for r in &records {
                match r {
                    Ok(rec) => write_json(io.out, rec)?,
                    Err(e) => write_json(io.out, e)?,
                }
            }
            write_json(io.out, &Wrapped { summary: &summary })?;
        }
        Format::Csv => {
            let header = ["line", "graph6", "n", "agree", "polynomial", "oracle", "not_evaluated", "error"];
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| match r {
                    Ok(rec) => vec![
                        rec.line.to_string(),
                        rec.graph6.clone(),
                        rec.n.to_string(),
                        opt(&rec.agree),
                        rec.polynomial.as_ref().map(joined).unwrap_or_default(),
                        rec.oracle.as_ref().map(joined).unwrap_or_default(),
                        rec.not_evaluated.clone().unwrap_or_default(),
                        String::new(),
                    ],
                    Err(e) => error_row(header.len(), e.line, &e.error),
                })
                .collect();
            write_csv(io.out, &header, &rows)?;
            write_json(io.err, &Wrapped { summary: &summary })?;
        }
    }
    report_input_errors(io, records.iter().filter_map(|r| r.as_ref().err()).map(|e| (e.line, e.error.as_str())))?;
    Ok(if summary.mismatches > 0 {
        EXIT_VIOLATION
    } else if summary.input_errors > 0 {
        EXIT_INPUT
    } else if config.strict && summary.not_evaluated > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}

/// The labelled graph on `n` vertices whose edges are the set bits of
/// `mask`, bit `b` standing for the `b`-th vertex pair in graph6 order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> altind::Result<Graph> {
    let mut g = Graph::new(n)?;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Every labelled graph on `n <= 6` vertices, edge mask ascending.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= ENUMERATE_MAX, "enumeration is limited to {ENUMERATE_MAX} vertices");
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |m| graph_from_edge_mask(n, m).expect("n is small"))
}

/// graph6 stream of every labelled graph on `n` vertices. The output format
/// flag does not apply.
pub fn cmd_enumerate(io: &mut Streams, n: usize) -> io::Result<i32> {
    if n > ENUMERATE_MAX {
        return input_failure(io, &format!("enumerate refuses n = {n}; the limit is {ENUMERATE_MAX}"));
    }
    for g in labelled_graphs(n) {
        writeln!(io.out, "{}", to_graph6(&g))?;
    }
    Ok(EXIT_OK)
}
