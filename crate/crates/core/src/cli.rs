//! Command-line surface. [`run`] parses arguments and writes to the given
//! streams, so the binary is a one-line wrapper and tests drive it directly.
//!
//! Exit codes: 0 success, 2 bad graph or input, 3 capacity exceeded,
//! 4 bad cut, 1 internal error or a failed verdict.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::atlas::{self, Addition, RecordFormat, SweepConfig, SweepMode};
use crate::certify::{self, CutReport};
use crate::error::{Error, Result};
use crate::graph::{Graph, PartitionSpec, VertexSet};
use crate::graph6;
use crate::spectral::{self, DEFAULT_TOL};
use crate::toughness::{Toughness, MAX_EXACT_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_BAD_GRAPH: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_BAD_CUT: i32 = 4;

pub const MAX_ALL_CUTS_ORDER: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "toughlab",
    version,
    about = "Exact toughness and Laplacian spectral bounds"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Laplacian spectrum, mu2, mu_n, delta and the bound mu2/(mu_n - delta).
    Spectrum(GraphArg),
    /// Exact toughness with a witness cut, compared against the bound.
    Toughness {
        #[command(flatten)]
        graph: GraphArg,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = MAX_EXACT_ORDER)]
        max_n: usize,
    },
    /// Per-cut certification of every inequality behind the bound.
    Certify {
        #[command(flatten)]
        graph: GraphArg,
        /// Cut vertices, e.g. `1`, `0,3` or `{0,3}`.
        #[arg(
            long,
            conflicts_with = "all_cuts",
            required_unless_present = "all_cuts"
        )]
        cut: Option<String>,
        /// Certify every vertex cut (n <= 12).
        #[arg(long)]
        all_cuts: bool,
    },
    /// Verify the bound over a corpus of graphs and write the records.
    Sweep(SweepArgs),
    /// Add intra-part edges to a complete multipartite graph and verify that
    /// equality survives.
    Construct {
        /// Part sizes in non-increasing order, e.g. `3,3,3`.
        #[arg(long)]
        parts: String,
        /// `i` or `i:a,b`: add an edge inside part i (1-based), between the
        /// global vertices a and b or the first free pair.
        #[arg(long = "add", required = true)]
        additions: Vec<String>,
        /// Write the final graph in graph6 to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct GraphArg {
    /// graph6 string, edge-list JSON `{"n":..,"edges":[[u,v],..]}`, or a
    /// file containing either.
    graph: String,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    exhaustive: bool,
    #[arg(long)]
    random: bool,
    /// Order, or the lower end of the range with --n-max.
    #[arg(short = 'n', long = "order")]
    n: usize,
    #[arg(long)]
    n_max: Option<usize>,
    /// Edge probability for --random.
    #[arg(short = 'p', long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of samples for --random.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Record file; records go to stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// `csv` or `json`; defaults from the output extension.
    #[arg(long)]
    format: Option<String>,
    /// Keep one canonical representative per isomorphism class.
    #[arg(long)]
    dedup: bool,
    /// Worker threads (0 = all cores). TOUGHLAB_THREADS overrides.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Reads a graph from inline text or a file path. Content starting with `{`
/// is edge-list JSON; anything else is graph6.
pub fn parse_graph_input(arg: &str) -> Result<Graph> {
    let text = match fs::metadata(arg) {
        Ok(meta) if meta.is_file() => fs::read_to_string(arg)?,
        _ => arg.to_string(),
    };
    let text = text.trim();
    if text.starts_with('{') {
        let e: EdgeList =
            serde_json::from_str(text).map_err(|e| Error::input(format!("edge-list JSON: {e}")))?;
        Graph::new(e.n, &e.edges)
    } else {
        graph6::decode(text)
    }
}

/// Formats with 12 significant digits, trailing zeros trimmed.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let trim = |s: String| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if (-5..12).contains(&exp) {
        trim(format!("{:.*}", (11 - exp).max(0) as usize, x))
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, e) = s.split_once('e').expect("exponent form");
        format!("{}e{e}", trim(mantissa.to_string()))
    }
}

/// Roundoff-sized values relative to `scale` print as 0.
fn fmt_snapped(x: f64, scale: f64) -> String {
    if x.abs() <= 1e-12 * scale.max(1.0) {
        "0".into()
    } else {
        fmt_real(x)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Domain(_) | Error::Parse { .. } | Error::Precondition { .. } => {
            EXIT_BAD_GRAPH
        }
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::NotACut(_) => EXIT_BAD_CUT,
        Error::Counterexample(_) | Error::Io(_) | Error::Json(_) => EXIT_INTERNAL,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Spectrum(g) => cmd_spectrum(&g.graph, cli.json, out),
        Command::Toughness { graph, max_n } => cmd_toughness(&graph.graph, max_n, cli.json, out),
        Command::Certify {
            graph,
            cut,
            all_cuts,
        } => cmd_certify(&graph.graph, cut.as_deref(), all_cuts, cli.json, out),
        Command::Sweep(args) => cmd_sweep(&args, cli.json, out, err),
        Command::Construct {
            parts,
            additions,
            output,
        } => cmd_construct(&parts, &additions, output.as_deref(), cli.json, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::Counterexample(bundle) = &e {
                if let Ok(json) = serde_json::to_string_pretty(bundle) {
                    let _ = writeln!(err, "{json}");
                }
            }
            exit_code(&e)
        }
    }
}

#[derive(Serialize)]
struct SpectrumOutput {
    n: usize,
    m: usize,
    delta: usize,
    eigenvalues: Vec<f64>,
    mu2: f64,
    mu_n: f64,
    mu2_multiplicity: usize,
    bound: Option<f64>,
    toughness: Option<Toughness>,
}

fn cmd_spectrum(input: &str, json: bool, out: &mut dyn Write) -> Result<i32> {
    let g = parse_graph_input(input)?;
    let s = spectral::spectrum(&g, DEFAULT_TOL)?;
    let complete = g.is_complete();
    let delta = g.min_degree();
    let report = SpectrumOutput {
        n: g.order(),
        m: g.edge_count(),
        delta,
        eigenvalues: s.eigenvalues().to_vec(),
        mu2: s.mu2(),
        mu_n: s.mu_n(),
        mu2_multiplicity: s.multiplicity(s.mu2()),
        bound: (!complete).then(|| spectral::bound_from(&s, delta)),
        toughness: complete.then_some(Toughness::Infinite),
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "n = {}, m = {}, delta = {}", report.n, report.m, delta)?;
    writeln!(out, "{:>4}  eigenvalue", "i")?;
    for (i, &x) in report.eigenvalues.iter().enumerate() {
        writeln!(out, "{:>4}  {}", i + 1, fmt_snapped(x, report.mu_n))?;
    }
    writeln!(
        out,
        "mu2 = {} (multiplicity {}), mu_n = {}",
        fmt_real(report.mu2),
        report.mu2_multiplicity,
        fmt_real(report.mu_n)
    )?;
    match report.bound {
        Some(b) => writeln!(out, "bound = {}", fmt_real(b))?,
        None => writeln!(out, "complete graph: bound undefined, t = ∞")?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ToughnessOutput {
    n: usize,
    toughness: Toughness,
    witness: Option<VertexSet>,
    components_at_witness: usize,
    bound: Option<f64>,
    gap: Option<f64>,
    tight: bool,
}

fn cmd_toughness(input: &str, max_n: usize, json: bool, out: &mut dyn Write) -> Result<i32> {
    let g = parse_graph_input(input)?;
    if g.order() > max_n {
        return Err(Error::Capacity {
            what: "order for exact toughness",
            got: g.order(),
            limit: max_n,
        });
    }
    let r = atlas::record_for(&g, graph6::encode(&g))?;
    let witness: Option<VertexSet> = match r.witness_cut.as_str() {
        "" => None,
        w => Some(w.parse()?),
    };
    let report = ToughnessOutput {
        n: g.order(),
        toughness: r.toughness,
        witness,
        components_at_witness: witness.map_or(0, |w| g.component_count(w)),
        bound: r.bound,
        gap: r.gap,
        tight: r.tight,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(EXIT_OK);
    }
    match (report.witness, report.bound, report.gap) {
        (Some(w), Some(b), Some(gap)) => {
            let c = report.components_at_witness;
            write!(
                out,
                "t = {} (witness {w}, {c} components)",
                report.toughness
            )?;
            if report.tight {
                write!(out, ", tight")?;
            }
            writeln!(
                out,
                ", bound = {}, gap = {}",
                fmt_real(b),
                fmt_snapped(gap, b)
            )?;
        }
        _ => writeln!(out, "t = ∞ (complete graph, no vertex cut)")?,
    }
    Ok(EXIT_OK)
}

fn parse_cut(g: &Graph, text: &str) -> Result<VertexSet> {
    let u: VertexSet = text
        .parse()
        .map_err(|e| Error::NotACut(format!("`{text}`: {e}")))?;
    if !u.is_subset(g.vertices()) {
        return Err(Error::NotACut(format!(
            "{u} names vertices outside 0..{}",
            g.order()
        )));
    }
    Ok(u)
}

fn print_report(r: &CutReport, out: &mut dyn Write) -> Result<()> {
    writeln!(
        out,
        "cut {} |U| = {}, components {:?}, main slack {}",
        r.partition.cut,
        r.cut_size,
        r.component_sizes,
        fmt_snapped(r.main_slack, r.mu_n)
    )?;
    if let Some(i) = r.trace.deficient_index {
        writeln!(out, "  deficient component H{}", i + 1)?;
    }
    for v in &r.verdicts {
        let status = if v.holds { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "  {status}  {:<40} {}",
            v.name,
            fmt_snapped(v.slack, r.mu_n)
        )?;
    }
    Ok(())
}

fn cmd_certify(
    input: &str,
    cut: Option<&str>,
    all_cuts: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let g = parse_graph_input(input)?;
    let s = spectral::spectrum(&g, DEFAULT_TOL)?;
    let reports = if all_cuts {
        if g.order() > MAX_ALL_CUTS_ORDER {
            return Err(Error::Capacity {
                what: "order for --all-cuts",
                got: g.order(),
                limit: MAX_ALL_CUTS_ORDER,
            });
        }
        certify::vertex_cuts(&g)
            .map(|u| certify::certify_with(&g, u, &s))
            .collect::<Result<Vec<_>>>()?
    } else {
        let u = parse_cut(&g, cut.unwrap_or_default())?;
        vec![certify::certify_with(&g, u, &s)?]
    };
    let ok = reports.iter().all(CutReport::all_hold);
    if json {
        if all_cuts {
            writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
        } else {
            writeln!(out, "{}", reports[0].to_json())?;
        }
    } else {
        writeln!(
            out,
            "n = {}, delta = {}, mu2 = {}, mu_n = {}",
            g.order(),
            g.min_degree(),
            fmt_real(s.mu2()),
            fmt_real(s.mu_n())
        )?;
        for r in &reports {
            print_report(r, out)?;
        }
        let failed = reports.iter().filter(|r| !r.all_hold()).count();
        writeln!(
            out,
            "{} cut(s) certified, {failed} with failures",
            reports.len()
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_INTERNAL })
}

fn sweep_config(args: &SweepArgs) -> SweepConfig {
    SweepConfig {
        mode: if args.random {
            SweepMode::Random {
                edge_probability: args.p,
            }
        } else {
            SweepMode::Exhaustive
        },
        n_min: args.n,
        n_max: args.n_max.unwrap_or(args.n),
        sample_count: args.count,
        seed: args.seed,
        dedup: args.dedup,
        parallelism: args.threads,
    }
}

fn cmd_sweep(
    args: &SweepArgs,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let format = match (&args.format, &args.output) {
        (Some(f), _) => f.parse()?,
        (None, Some(path)) => RecordFormat::from_path(path),
        (None, None) => RecordFormat::Csv,
    };
    let records = atlas::sweep(&sweep_config(args))?;
    let summary = atlas::summarize(&records);
    let line = if json {
        serde_json::to_string(&summary)?
    } else {
        format!(
            "records = {}, complete = {}, tight = {}, min gap = {}",
            summary.records,
            summary.complete,
            summary.tight,
            summary
                .min_gap
                .map(fmt_real)
                .unwrap_or_else(|| "none".into())
        )
    };
    match &args.output {
        Some(path) => {
            atlas::write_records(&records, path, format)?;
            writeln!(out, "{line}")?;
        }
        None => {
            write!(out, "{}", atlas::records_to_string(&records, format)?)?;
            writeln!(err, "{line}")?;
        }
    }
    Ok(EXIT_OK)
}

/// `i` or `i:a,b`.
fn parse_addition(text: &str) -> Result<Addition> {
    let bad = || Error::input(format!("--add `{text}`: expected `i` or `i:a,b`"));
    let (part, pair) = match text.split_once(':') {
        None => (text, None),
        Some((part, pair)) => {
            let (a, b) = pair.split_once(',').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            (part, Some((a, b)))
        }
    };
    Ok(Addition {
        part: part.trim().parse().map_err(|_| bad())?,
        pair,
    })
}

fn cmd_construct(
    parts: &str,
    additions: &[String],
    output: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let spec: PartitionSpec = parts.parse()?;
    let adds = additions
        .iter()
        .map(|a| parse_addition(a))
        .collect::<Result<Vec<_>>>()?;
    let report = atlas::verify_construction(&spec, &adds)?;
    if let Some(path) = output {
        fs::write(path, format!("{}\n", report.final_graph6()))?;
    }
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        writeln!(out, "start {spec}: {}", report.base_graph6)?;
        for s in &report.steps {
            writeln!(
                out,
                "step {}: edge {}-{} in V{} -> {} (m = {}, delta = {}, mu2 = {}, mu_n = {}, t = {}, bound = {})",
                s.step,
                s.pair.0,
                s.pair.1,
                s.part,
                s.graph6,
                s.m,
                s.delta,
                fmt_real(s.mu2),
                fmt_real(s.mu_n),
                s.toughness,
                fmt_real(s.bound)
            )?;
            for c in &s.checks {
                let status = if c.holds { "PASS" } else { "FAIL" };
                writeln!(out, "  {status}  {}", c.name)?;
            }
        }
        let verdict = if report.all_pass() {
            "all checks pass"
        } else {
            "FAILED"
        };
        writeln!(out, "graph6: {} ({verdict})", report.final_graph6())?;
    }
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_INTERNAL
    })
}
