//! Command-line front end: bound evaluation, constructions, exact
//! solving, set analysis/audit, and survey tables over dimension ranges.
//!
//! Exit codes: 0 success, 1 domain or usage error, 2 internal
//! inconsistency (a solver witness failing re-verification).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gridcds::analysis;
use gridcds::audit;
use gridcds::bounds::{self, BOUNDS_CSV_HEADER};
use gridcds::constructions;
use gridcds::render;
use gridcds::solver::{self, SolveOptions, SolveResult};
use gridcds::{GridDims, VertexSet};
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Duration;

const FRONTIER_LIMIT_ENV: &str = "GRIDCDS_FRONTIER_LIMIT";

#[derive(Parser)]
#[command(name = "gridcds", version, about = "Connected dominating sets of n x m grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print all lower/upper bound values for one grid
    Bounds {
        n: usize,
        m: usize,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Build one of the reference constructions
    Construct {
        #[arg(value_enum)]
        which: Construction,
        n: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Compute the exact connected domination number
    Exact {
        n: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Frontier width ceiling for the dynamic program
        #[arg(long)]
        frontier_limit: Option<usize>,
        /// Give up (status "unsolved") after this many seconds
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Structural statistics of a cell set read from a file
    Analyze {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Run every lemma-level check on a CDS read from a file
    Audit {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// One row of bounds (optionally exact values) per grid in a range
    Survey(SurveyArgs),
    /// Re-render a cell set read from a file
    Render {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Args)]
struct SurveyArgs {
    /// Row counts, e.g. 4..12
    #[arg(long = "n-range")]
    n_range: String,
    /// Column counts, e.g. 4..12
    #[arg(long = "m-range")]
    m_range: String,
    /// Solve exactly where an engine applies
    #[arg(long)]
    exact_when_feasible: bool,
    /// Emit CSV instead of an aligned table
    #[arg(long)]
    csv: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    D1,
    D2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Bf,
    Dp,
}

enum CliError {
    Domain(String),
    Internal(String),
}

impl From<gridcds::Error> for CliError {
    fn from(e: gridcds::Error) -> Self {
        match e {
            gridcds::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Domain(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Bounds { n, m, json, csv } => cmd_bounds(n, m, json, csv),
        Command::Construct { which, n, m, format } => cmd_construct(which, n, m, format),
        Command::Exact { n, m, engine, frontier_limit, timeout, json } => {
            cmd_exact(n, m, engine, frontier_limit, timeout, json)
        }
        Command::Analyze { file, json } => cmd_analyze(&file, json),
        Command::Audit { file, json } => cmd_audit(&file, json),
        Command::Survey(args) => cmd_survey(&args),
        Command::Render { file, format } => cmd_render(&file, format),
    }
}

fn parse_dims(n: usize, m: usize) -> Result<GridDims, CliError> {
    Ok(GridDims::new(n, m)?)
}

fn cmd_bounds(n: usize, m: usize, json: bool, csv: bool) -> Result<(), CliError> {
    let report = bounds::bounds_report(parse_dims(n, m)?)?;
    if json {
        println!("{}", report.to_json());
    } else if csv {
        println!("{BOUNDS_CSV_HEADER}");
        println!("{}", report.to_csv_row());
    } else {
        println!(
            "n={} m={} bound1={} bound2={} main={} upper_d1={} upper_d2={} upper={} gap={}",
            report.n,
            report.m,
            report.bound1,
            report.bound2,
            report.main_bound,
            report.upper_d1,
            report.upper_d2,
            report.upper,
            report.gap
        );
    }
    Ok(())
}

fn build(which: Construction, dims: GridDims) -> gridcds::Result<VertexSet> {
    match which {
        Construction::D1 => constructions::build_d1(dims),
        Construction::D2 => constructions::build_d2(dims),
    }
}

fn emit_set(set: &VertexSet, format: Format) {
    match format {
        Format::Ascii => print!("{}", render::to_ascii(set)),
        Format::Json => println!("{}", set.to_json()),
        Format::Svg => print!("{}", render::to_svg(set)),
    }
}

fn cmd_construct(which: Construction, n: usize, m: usize, format: Format) -> Result<(), CliError> {
    let set = build(which, parse_dims(n, m)?)?;
    emit_set(&set, format);
    Ok(())
}

fn solve_options(frontier_limit: Option<usize>, timeout: Option<f64>) -> SolveOptions {
    let mut opts = SolveOptions::default();
    if let Some(limit) = frontier_limit {
        opts.frontier_limit = limit;
    } else if let Ok(env_limit) = std::env::var(FRONTIER_LIMIT_ENV) {
        if let Ok(limit) = env_limit.parse::<usize>() {
            opts.frontier_limit = limit;
        }
    }
    opts.timeout = timeout.map(Duration::from_secs_f64);
    opts
}

fn cmd_exact(
    n: usize,
    m: usize,
    engine: EngineArg,
    frontier_limit: Option<usize>,
    timeout: Option<f64>,
    json: bool,
) -> Result<(), CliError> {
    let dims = parse_dims(n, m)?;
    let opts = solve_options(frontier_limit, timeout);
    let solved = match engine {
        EngineArg::Auto => solver::solve_auto(dims, &opts),
        EngineArg::Bf => solver::solve_bruteforce_with(dims, opts.brute_force_cell_limit, opts.timeout),
        EngineArg::Dp => solver::solve_dp_with(dims, &opts),
    };
    match solved {
        Ok(result) => {
            verify_witness(&result)?;
            if json {
                let mut body: serde_json::Value =
                    serde_json::from_str(&result.to_json()).expect("well-formed");
                body["status"] = "solved".into();
                println!("{body}");
            } else {
                println!(
                    "gamma_c = {} ({}x{}, engine {}, {} states/nodes, {:.1} ms)",
                    result.gamma_c,
                    n,
                    m,
                    result.engine,
                    result.stats.states_or_nodes,
                    result.stats.elapsed.as_secs_f64() * 1e3
                );
                print!("{}", render::to_ascii(&result.witness));
            }
            Ok(())
        }
        Err(e @ gridcds::Error::Timeout { .. }) => {
            if json {
                println!(r#"{{"status":"unsolved","reason":{:?}}}"#, e.to_string());
            } else {
                println!("status: unsolved ({e})");
            }
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

fn verify_witness(result: &SolveResult) -> Result<(), CliError> {
    let w = &result.witness;
    if w.len() != result.gamma_c || !analysis::is_dominating(w) || !analysis::is_connected(w) {
        return Err(CliError::Internal(format!(
            "witness of size {} fails verification for gamma_c={}",
            w.len(),
            result.gamma_c
        )));
    }
    Ok(())
}

fn load_set(path: &str) -> Result<VertexSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {path}: {e}")))?;
    Ok(VertexSet::from_str_any(&text)?)
}

fn cmd_analyze(path: &str, json: bool) -> Result<(), CliError> {
    let set = load_set(path)?;
    let st = analysis::structure_stats(&set);
    if json {
        println!("{}", serde_json_string(&st));
    } else {
        println!(
            "n={} m={} size={} l={} d2={} d3={} d4={} loss={} excess={} edges={} \
             h_segments={} v_segments={} h_spans_height={} v_spans_width={} \
             connected={} dominating={} corner_free={}",
            set.dims().n,
            set.dims().m,
            st.size,
            st.leaves,
            st.bends,
            st.deg3,
            st.deg4,
            st.loss,
            st.excess,
            st.edges,
            st.h_segments,
            st.v_segments,
            st.h_spans_height,
            st.v_spans_width,
            st.connected,
            st.dominating,
            st.corner_free
        );
    }
    Ok(())
}

fn serde_json_string<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn cmd_audit(path: &str, json: bool) -> Result<(), CliError> {
    let set = load_set(path)?;
    let report = audit::audit(&set)?;
    if json {
        println!("{}", report.to_json());
    } else {
        println!(
            "{}x{} size={} is_tree={} has_2x2_block={}",
            report.n, report.m, report.stats.size, report.is_tree, report.has_2x2_block
        );
        for check in &report.checks {
            let status = match check.status {
                audit::CheckStatus::Holds => "holds",
                audit::CheckStatus::Violated => "VIOLATED",
                audit::CheckStatus::Skipped => "skipped",
            };
            let note = check.note.as_deref().unwrap_or("");
            println!(
                "{:<14} {status:<9} lhs={} rhs={} slack={} {note}",
                check.name, check.lhs, check.rhs, check.slack
            );
        }
    }
    Ok(())
}

fn parse_range(spec: &str) -> Result<Vec<usize>, CliError> {
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| CliError::Domain(format!("bad range {spec:?}: expected A..B or a number")))
    };
    if let Some((a, b)) = spec.split_once("..") {
        let (a, b) = (parse(a)?, parse(b)?);
        Ok((a..=b).collect())
    } else {
        Ok(vec![parse(spec)?])
    }
}

pub const SURVEY_CSV_HEADER: &str =
    "n,m,bound1,bound2,main,upper_d1,upper_d2,upper,gamma_c,gap,sandwich_ok";

fn cmd_survey(args: &SurveyArgs) -> Result<(), CliError> {
    let rows = parse_range(&args.n_range)?;
    let cols = parse_range(&args.m_range)?;
    let opts = solve_options(None, None);
    let mut lines = vec![SURVEY_CSV_HEADER.to_string()];
    for &n in &rows {
        for &m in &cols {
            let dims = parse_dims(n, m)?;
            let report = bounds::bounds_report(dims)?;
            let (gamma, sandwich) = if args.exact_when_feasible {
                match solver::solve_auto(dims, &opts) {
                    Ok(result) => {
                        verify_witness(&result)?;
                        let ok = report.main_bound <= result.gamma_c && result.gamma_c <= report.upper;
                        (result.gamma_c.to_string(), if ok { "ok" } else { "fail" }.to_string())
                    }
                    Err(gridcds::Error::FrontierLimit { .. })
                    | Err(gridcds::Error::BruteForceLimit { .. }) => (String::new(), String::new()),
                    Err(e) => return Err(e.into()),
                }
            } else {
                (String::new(), String::new())
            };
            lines.push(format!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                report.n,
                report.m,
                report.bound1,
                report.bound2,
                report.main_bound,
                report.upper_d1,
                report.upper_d2,
                report.upper,
                gamma,
                report.gap,
                sandwich
            ));
        }
    }
    if args.csv {
        for line in &lines {
            println!("{line}");
        }
    } else {
        print!("{}", align_csv(&lines));
    }
    Ok(())
}

fn align_csv(lines: &[String]) -> String {
    let table: Vec<Vec<&str>> = lines.iter().map(|l| l.split(',').collect()).collect();
    let cols = table[0].len();
    let widths: Vec<usize> =
        (0..cols).map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &table {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{cell:>width$}", width = widths[c]);
        }
        out.push('\n');
    }
    out
}

fn cmd_render(path: &str, format: Format) -> Result<(), CliError> {
    let set = load_set(path)?;
    emit_set(&set, format);
    Ok(())
}
