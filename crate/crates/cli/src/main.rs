//! `relpoly`: connected-subgraph polynomials, their zeros and the disc
//! property from the command line.
//!
//! Exit codes: 0 success (no violation), 1 other failure, 2 parse error,
//! 3 capability exceeded, 4 undecidable boundary, 10 certified violation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use relpoly::multigraph::{is_series_parallel, parse_graph, K4Case};
use relpoly::reliability::connected_subgraph_poly;
use relpoly::reproduce::{self, Suite};
use relpoly::roots::{classify_disc, multivariate_bc_property, trace_locus, Sweep};
use relpoly::{Error, FamilySpec, Multigraph, Poly};
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAPABILITY: u8 = 3;
const EXIT_UNDECIDABLE: u8 = 4;
const EXIT_VIOLATION: u8 = 10;

#[derive(Parser)]
#[command(name = "relpoly", version, about = "Reliability polynomials and the Brown-Colbourn disc property")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact connected-subgraph polynomial as JSON.
    Poly {
        /// Graph file or family spec (k4:<case>:<p1>:<p2>[:sub=<s>], k6:<p1>:<p2>, cycle:<n>, bundle:<n>).
        input: String,
    },
    /// Find all zeros and decide whether any lies inside |λ + v| < λ.
    Roots {
        input: String,
        #[arg(long, default_value_t = 256)]
        precision: u32,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long)]
        json: bool,
    },
    /// Trace the root locus of a two-class polynomial and write CSV.
    Locus {
        #[arg(value_enum)]
        case: LocusCase,
        /// Variable moved around its circle.
        #[arg(long, value_enum, default_value_t = SweepArg::B)]
        sweep: SweepArg,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        /// CSV destination; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the reference values and compare.
    Reproduce {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = reproduce::DEFAULT_PRECISION)]
        precision: u32,
        /// Emit JSON lines instead of the table.
        #[arg(long)]
        json: bool,
        /// Also write JSON lines to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Series-parallel and multivariate disc-property verdicts.
    Check {
        input: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LocusCase {
    A,
    B,
    C,
    D,
    E,
    K6,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepArg {
    A,
    B,
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::CapabilityExceeded(_) => EXIT_CAPABILITY,
            Error::Undecidable { .. } => EXIT_UNDECIDABLE,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_FAILURE, message: format!("{}: {e}", path.display()) }
}

enum Input {
    Family(FamilySpec),
    Graph(Multigraph),
}

fn looks_like_spec(s: &str) -> bool {
    ["k4:", "k6:", "cycle:", "bundle:"].iter().any(|p| s.starts_with(p))
}

fn resolve(input: &str) -> Result<Input, Failure> {
    if looks_like_spec(input) && !Path::new(input).exists() {
        return input
            .parse()
            .map(Input::Family)
            .map_err(|e: Error| Failure { code: EXIT_PARSE, message: e.to_string() });
    }
    let path = Path::new(input);
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_graph(&text).map(Input::Graph).map_err(|e| Failure { code: EXIT_PARSE, message: format!("{input}: {e}") })
}

fn univariate(input: &Input) -> Result<Poly<relpoly::BigInt>, Failure> {
    Ok(match input {
        Input::Family(f) => f.integer_polynomial()?,
        Input::Graph(g) => connected_subgraph_poly(g)?.to_univariate(),
    })
}

fn cmd_poly(input: &str) -> Result<u8, Failure> {
    let text = match resolve(input)? {
        Input::Family(f) => {
            let sp = f.polynomial()?;
            let mut v: serde_json::Value = serde_json::from_str(&sp.poly.to_json("v")).expect("valid json");
            if sp.as_integer().is_none() {
                v["scalar"] = json!(sp.scalar.to_string());
            }
            v.to_string()
        }
        Input::Graph(g) => connected_subgraph_poly(&g)?.to_json(),
    };
    println!("{text}");
    Ok(0)
}

fn cmd_roots(input: &str, precision: u32, lambda: f64, as_json: bool) -> Result<u8, Failure> {
    let p = univariate(&resolve(input)?)?;
    let report = classify_disc(&p, lambda, precision)?;
    if as_json {
        let roots: serde_json::Value = serde_json::from_str(&report.roots.to_json()).expect("valid json");
        let out = json!({
            "roots": roots,
            "lambda": lambda,
            "min_distance": report.min_distance,
            "violation": report.violation,
            "certified_boundary": report.certified_boundary,
            "precision": report.precision,
        });
        println!("{out}");
    } else {
        let rs = &report.roots;
        println!("degree {} (zero root multiplicity {})", rs.degree(), rs.zero_multiplicity);
        for (z, e) in rs.roots_c64().iter().zip(&rs.error_radii) {
            println!("  {:+.15} {:+.15}i   err {:.2e}", z.re, z.im, relpoly::Real::to_f64(e));
        }
        println!("min |{lambda} + v| = {:.12}", report.min_distance);
        if report.certified_boundary > 0 {
            println!("{} root(s) certified on the circle |{lambda} + v| = {lambda}", report.certified_boundary);
        }
        println!("violation: {}", report.violation);
    }
    Ok(if report.violation { EXIT_VIOLATION } else { 0 })
}

fn cmd_locus(
    case: LocusCase,
    sweep: SweepArg,
    lambda: f64,
    samples: usize,
    out: Option<&Path>,
    as_json: bool,
) -> Result<u8, Failure> {
    let family = match case {
        LocusCase::A => FamilySpec::k4(K4Case::A, 1, 1),
        LocusCase::B => FamilySpec::k4(K4Case::B, 1, 1),
        LocusCase::C => FamilySpec::k4(K4Case::C, 1, 1),
        LocusCase::D => FamilySpec::k4(K4Case::D, 1, 1),
        LocusCase::E => FamilySpec::k4(K4Case::E, 1, 1),
        LocusCase::K6 => FamilySpec::K6 { p1: 1, p2: 1 },
    };
    let p = family.base_poly()?.expect("two-class family");
    let sweep = match sweep {
        SweepArg::A => Sweep::A,
        SweepArg::B => Sweep::B,
    };
    let curve = trace_locus(&p, sweep, lambda, samples)?;
    match out {
        Some(path) => {
            let f = fs::File::create(path).map_err(|e| io_failure(path, e))?;
            curve.write_csv(std::io::BufWriter::new(f)).map_err(|e| io_failure(path, e))?;
        }
        None => curve.write_csv(std::io::stdout().lock()).map_err(|e| io_failure(Path::new("<stdout>"), e))?,
    }
    let summary = json!({
        "samples": samples,
        "points": curve.point_count(),
        "violations": curve.violation_count(),
        "gaps": curve.gaps.len(),
    });
    let line = if as_json {
        summary.to_string()
    } else {
        format!(
            "{} samples, {} points, {} violation(s), {} gap(s)",
            samples,
            curve.point_count(),
            curve.violation_count(),
            curve.gaps.len()
        )
    };
    // keep standard output clean when it carries the CSV
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(0)
}

fn cmd_reproduce(suite: &str, precision: u32, as_json: bool, out: Option<&Path>) -> Result<u8, Failure> {
    let suite: Suite = suite.parse().map_err(|e: Error| Failure { code: EXIT_PARSE, message: e.to_string() })?;
    let rows = reproduce::run_suite(suite, precision);
    let lines = reproduce::to_json_lines(&rows);
    if as_json {
        print!("{lines}");
    } else {
        print!("{}", reproduce::render_table(&rows));
    }
    if let Some(path) = out {
        fs::write(path, &lines).map_err(|e| io_failure(path, e))?;
    }
    std::io::stdout().flush().ok();
    Ok(if reproduce::all_pass(&rows) { 0 } else { EXIT_FAILURE })
}

fn cmd_check(input: &str, as_json: bool) -> Result<u8, Failure> {
    let g = match resolve(input)? {
        Input::Graph(g) => g,
        Input::Family(f) => f.graph()?,
    };
    let sp = is_series_parallel(&g.without_loops());
    let bc = multivariate_bc_property(&g);
    if as_json {
        let bc_value = match &bc {
            Ok(b) => json!(b),
            Err(e) => json!({ "error": e.to_string() }),
        };
        println!("{}", json!({ "series_parallel": sp, "multivariate_bc": bc_value }));
    } else {
        println!("series-parallel: {sp}");
        match &bc {
            Ok(b) => println!("multivariate-BC: {b}"),
            Err(e) => println!("multivariate-BC: error: {e}"),
        }
        println!("(a graph has the multivariate disc property iff it is series-parallel)");
    }
    bc.map(|_| 0).map_err(Failure::from)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poly { input } => cmd_poly(input),
        Command::Roots { input, precision, lambda, json } => cmd_roots(input, *precision, *lambda, *json),
        Command::Locus { case, sweep, lambda, samples, out, json } => {
            cmd_locus(*case, *sweep, *lambda, *samples, out.as_deref(), *json)
        }
        Command::Reproduce { suite, precision, json, out } => cmd_reproduce(suite, *precision, *json, out.as_deref()),
        Command::Check { input, json } => cmd_check(input, *json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
