//! Command-line front end.
//!
//! Exit codes: `0` success or pass, `1` verification failure, `2` usage,
//! parse or guard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::enumeration::{parking_functions_within, tu_enumerate_within, DEFAULT_MAX_EDGES};
use crate::error::Error;
use crate::graph_file::{parse_graph, write_graph};
use crate::ideal::DEFAULT_MAX_BOX;
use crate::multigraph::Multigraph;
use crate::skeleton::parking_ideal;
use crate::verify::{check_equality, classify_subgraph_of_ka1, run_suite, SuiteOptions, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "gparking", version, about = "Skeleton ideals, signless Laplacians and TU-subgraphs of rooted multigraphs")]
pub struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest labeled edge count for 2^E subgraph scans.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,
    /// Largest staircase box volume scanned when listing standard monomials.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BOX)]
    max_box: u128,
    /// Also write the report (or, for `product`, the graph) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degrees, components, determinants, and the equality verdict.
    Analyze { path: PathBuf },
    /// Census of spanning TU-subgraphs against det Q~_G.
    Tu { path: PathBuf },
    /// Run a verification suite.
    Verify {
        suite: String,
        /// Non-root vertex count for the classification scan.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Largest rooted multiplicity for the classification scan.
        #[arg(long, default_value_t = 2)]
        a: u64,
        /// Number of random instances (classification scan: sample instead
        /// of enumerating).
        #[arg(long)]
        samples: Option<usize>,
    },
    /// d-fold product of two graph files.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        d: u64,
    },
    /// List the G-parking functions.
    Parking { path: PathBuf },
    /// Classify a subgraph of K^(a,1) and compare with the equality verdict.
    Classify { path: PathBuf },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(out) => {
            let _ = stdout.write_all(out.text.as_bytes());
            if let (Some(path), Some(body)) = (&cli.out, &out.file) {
                if let Err(e) = std::fs::write(path, body) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Output {
    text: String,
    file: Option<String>,
    code: i32,
}

impl Output {
    fn report(text: String, code: i32) -> Self {
        Self {
            file: Some(text.clone()),
            text,
            code,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Graph { path: String, source: Error },
    #[error("{0}")]
    Lib(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn load(path: &Path) -> Result<Multigraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text).map_err(|source| CliError::Graph {
        path: path.display().to_string(),
        source,
    })
}

fn set(labels: &[usize]) -> String {
    let v: Vec<String> = labels.iter().map(usize::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn verdict_line(count: &num_bigint::BigUint, det: &BigInt) -> String {
    let c = BigInt::from(count.clone());
    if &c == det {
        format!("equal, {count} = {det}")
    } else {
        format!("strict, {count} > {det}")
    }
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Analyze { path } => analyze(cli, &load(path)?),
        Command::Tu { path } => tu(cli, &load(path)?),
        Command::Verify {
            suite,
            n,
            a,
            samples,
        } => {
            let opts = SuiteOptions {
                seed: cli.seed,
                samples: *samples,
                n: *n,
                a: *a,
                max_edges: cli.max_edges,
                max_box: cli.max_box,
            };
            let r = run_suite(suite, &opts)?;
            let code = if r.passed() { EXIT_OK } else { EXIT_FAILED };
            let file = match (cli.format, &r.csv) {
                (Format::Csv, Some(csv)) => csv.clone(),
                _ => r.summary(),
            };
            Ok(Output {
                text: r.summary(),
                file: Some(file),
                code,
            })
        }
        Command::Product { first, second, d } => {
            let g = load(first)?.d_fold_product(&load(second)?, *d);
            let text = write_graph(&g);
            Ok(Output {
                text: if cli.out.is_some() { String::new() } else { text.clone() },
                file: Some(text),
                code: EXIT_OK,
            })
        }
        Command::Parking { path } => parking(cli, &load(path)?),
        Command::Classify { path } => classify(cli, &load(path)?),
    }
}

fn analyze(cli: &Cli, g: &Multigraph) -> Result<Output, CliError> {
    let verdict = check_equality(g)?;
    let det_l = g.laplacian_truncated().determinant();
    let parking = parking_ideal(g)?.std_count_recursive()?;
    let degrees: Vec<String> = (1..=g.n())
        .map(|i| format!("{i}:{}", g.degree(i).expect("in range")))
        .collect();
    let comps: Vec<String> = verdict.per_component.iter().map(|c| set(&c.labels)).collect();
    let mut s = String::new();
    match cli.format {
        Format::Text => {
            let _ = writeln!(s, "n: {}", g.n());
            let _ = writeln!(s, "degrees: {}", degrees.join(" "));
            let _ = writeln!(s, "essential components: {}", comps.join(" "));
            let _ = writeln!(s, "det L~: {det_l}");
            let _ = writeln!(s, "det Q~: {}", verdict.det_q);
            let _ = writeln!(s, "dim R/M_G: {parking}");
            let _ = writeln!(s, "dim R/M_G^(1): {}", verdict.std_count);
            for c in &verdict.per_component {
                let _ = writeln!(s, "component {}: {}", set(&c.labels), verdict_line(&c.std_count, &c.det));
            }
            let _ = writeln!(s, "verdict: {}", verdict_line(&verdict.std_count, &verdict.det_q));
        }
        Format::Csv => {
            let _ = writeln!(s, "key,value");
            let _ = writeln!(s, "n,{}", g.n());
            let _ = writeln!(s, "det_l,{det_l}");
            let _ = writeln!(s, "det_q,{}", verdict.det_q);
            let _ = writeln!(s, "dim_parking,{parking}");
            let _ = writeln!(s, "dim_one_skeleton,{}", verdict.std_count);
            let _ = writeln!(s, "equal,{}", verdict.equal);
            for c in &verdict.per_component {
                let labels: Vec<String> = c.labels.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "component {},{} {}", labels.join(" "), c.std_count, c.det);
            }
        }
    }
    Ok(Output::report(s, EXIT_OK))
}

fn tu(cli: &Cli, g: &Multigraph) -> Result<Output, CliError> {
    let r = tu_enumerate_within(g, cli.max_edges)?;
    let det = g.signless_laplacian_truncated().determinant();
    let matches = BigInt::from(r.weighted_sum.clone()) == det;
    let mut s = String::new();
    match cli.format {
        Format::Text => {
            let _ = writeln!(
                s,
                "{r}, det {det}, {}",
                if matches { "MATCH" } else { "MISMATCH" }
            );
        }
        Format::Csv => {
            let _ = writeln!(s, "c,count");
            for (c, k) in &r.census {
                let _ = writeln!(s, "{c},{k}");
            }
            let _ = writeln!(s, "weighted,{}", r.weighted_sum);
            let _ = writeln!(s, "det,{det}");
            let _ = writeln!(s, "match,{matches}");
        }
    }
    Ok(Output::report(s, if matches { EXIT_OK } else { EXIT_FAILED }))
}

fn parking(cli: &Cli, g: &Multigraph) -> Result<Output, CliError> {
    let pf = parking_functions_within(g, cli.max_box)?;
    let trees = g.laplacian_truncated().determinant();
    let matches = BigInt::from(pf.len()) == trees;
    let mut s = String::new();
    let sep = match cli.format {
        Format::Text => " ",
        Format::Csv => ",",
    };
    for m in &pf {
        let e: Vec<String> = m.exponents().iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{}", e.join(sep));
    }
    if cli.format == Format::Text {
        let _ = writeln!(s, "count {}, spanning trees {trees}, {}", pf.len(), if matches { "MATCH" } else { "MISMATCH" });
    }
    Ok(Output::report(s, if matches { EXIT_OK } else { EXIT_FAILED }))
}

fn classify(cli: &Cli, g: &Multigraph) -> Result<Output, CliError> {
    let c = classify_subgraph_of_ka1(g)?;
    let v = check_equality(g)?;
    let agree = c.holds == v.equal;
    let mut s = String::new();
    match cli.format {
        Format::Text => {
            let _ = writeln!(s, "components are cliques: {}", c.cliques);
            if let Some((u, w)) = c.witness {
                let _ = writeln!(s, "missing inner edge: {{{u},{w}}}");
            }
            if let Some(z) = &c.zero_component {
                let _ = writeln!(s, "zero-dimensional component: {}", set(z));
            }
            let _ = writeln!(s, "predicted equality: {}", c.holds);
            let _ = writeln!(s, "verdict: {}", verdict_line(&v.std_count, &v.det_q));
            let _ = writeln!(s, "{}", if agree { "AGREE" } else { "DISAGREE" });
        }
        Format::Csv => {
            let _ = writeln!(s, "cliques,predicted,equal,std_count,det,agreement");
            let _ = writeln!(s, "{},{},{},{},{},{agree}", c.cliques, c.holds, v.equal, v.std_count, v.det_q);
        }
    }
    Ok(Output::report(s, if agree { EXIT_OK } else { EXIT_FAILED }))
}

/// Suite names accepted by `verify`, for help text.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _, _)| *n).collect()
}
