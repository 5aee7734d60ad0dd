//! The `csf` command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain or IO errors, 2 on usage errors.
//! Every failure prints exactly one JSON line to the error stream.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::decomposition::{alpha_mis, leaf_decomposition, rho_data};
use crate::error::CsfError;
use crate::generators::{
    build_star_connection, free_trees, gen_spider, recognize_star_connection, SpiderSpec, StarConnectionSpec,
    MAX_ENUMERATE_N,
};
use crate::graph::{as_tree, canonical_code, parse_edge_list, Tree};
use crate::survey::survey;
use crate::symfunc::{csf_monomial, csf_powersum, max_block_from_csf};
use crate::theorems::{
    spider_audit, star_connection_M, star_connection_counts, star_connection_distinct, thm_componentwise_check,
    thm_leaves_check, thm_sum_check,
};

#[derive(Parser, Debug)]
#[command(name = "csf", version, about = "Chromatic symmetric functions of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    M,
    P,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand the chromatic symmetric function of a tree.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "m")]
        basis: BasisArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the leaf decomposition of a tree.
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare two trees.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Also run every distinguishing criterion on the pair.
        #[arg(long)]
        theorems: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every pair of trees on n vertices.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-pair dump.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Build a spider, or audit its closed-form block maximum.
    Spider {
        #[arg(long, value_delimiter = ',', required = true)]
        legs: Vec<usize>,
        #[arg(long)]
        audit: bool,
    },
    /// Build a star connection from a JSON spec, or audit its formulas.
    Starconn {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        audit: bool,
    },
    /// List all trees on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(CsfError),
    Io { path: PathBuf, message: String },
}

impl From<CsfError> for Failure {
    fn from(e: CsfError) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io { path: path.to_owned(), message: e.to_string() })
}

fn read_tree(path: &Path) -> CliResult<Tree> {
    Ok(as_tree(parse_edge_list(&read(path)?)?)?)
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> CliResult<()> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io { path: path.to_owned(), message: e.to_string() }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io { path: PathBuf::from("<stdout>"), message: e.to_string() }),
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let message = e.kind().as_str().map_or_else(|| e.to_string(), str::to_owned);
            let detail = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_owned();
            let _ = writeln!(stderr, "{}", json!({"error": "usage", "message": message, "detail": detail}));
            return 2;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "{}", json!({"error": e.kind(), "message": e.to_string()}));
            1
        }
        Err(Failure::Io { path, message }) => {
            let _ =
                writeln!(stderr, "{}", json!({"error": "io", "path": path.display().to_string(), "message": message}));
            1
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Compute { input, basis, out } => {
            let t = read_tree(&input)?;
            let f = match basis {
                BasisArg::M => csf_monomial(&t)?,
                BasisArg::P => csf_powersum(&t)?,
            };
            emit(&f.to_json(), out.as_deref(), stdout)
        }
        Command::Decompose { input } => {
            let t = read_tree(&input)?;
            emit(&leaf_decomposition(&t).to_json(), None, stdout)
        }
        Command::Compare { a, b, theorems, out } => {
            let (ta, tb) = (read_tree(&a)?, read_tree(&b)?);
            emit(&to_json(&compare_report(&ta, &tb, theorems)?), out.as_deref(), stdout)
        }
        Command::Survey { n, jobs, out, csv } => {
            let report = survey(n, jobs)?;
            if let Some(path) = csv {
                fs::write(&path, report.to_csv()).map_err(|e| Failure::Io { path, message: e.to_string() })?;
            }
            emit(&report.to_json(), out.as_deref(), stdout)
        }
        Command::Spider { legs, audit } => {
            let spec = SpiderSpec::new(legs)?;
            if audit {
                emit(&to_json(&spider_audit(&spec)?), None, stdout)
            } else {
                emit(&gen_spider(&spec)?.serialize(), None, stdout)
            }
        }
        Command::Starconn { spec, audit } => {
            let text = read(&spec)?;
            let spec: StarConnectionSpec =
                serde_json::from_str(&text).map_err(|e| CsfError::InvalidStarConnection(e.to_string()))?;
            let built = build_star_connection(&spec)?;
            if audit {
                let (vertex_count, degree_excess) = star_connection_counts(&spec)?;
                let formula = star_connection_M(&spec)?;
                let oracle = alpha_mis(&built.tree)?;
                let report = json!({
                    "vertex_count": vertex_count,
                    "degree_excess": degree_excess,
                    "formula": formula,
                    "oracle": oracle,
                    "agrees": formula == oracle,
                });
                emit(&report.to_string(), None, stdout)
            } else {
                emit(&built.tree.serialize(), None, stdout)
            }
        }
        Command::Enumerate { n, count_only } => {
            let trees = free_trees(n, MAX_ENUMERATE_N)?;
            if count_only {
                return emit(&trees.count().to_string(), None, stdout);
            }
            let listing: Vec<String> = trees.map(|t| t.serialize()).collect();
            emit(&listing.join("\n"), None, stdout)
        }
    }
}

/// The `compare` report: equality of the chromatic symmetric functions,
/// block maxima and level data, plus verdicts when `theorems` is set.
pub fn compare_report(a: &Tree, b: &Tree, theorems: bool) -> crate::Result<Value> {
    let (fa, fb) = (csf_monomial(a)?, csf_monomial(b)?);
    let (ca, cb) = (canonical_code(a), canonical_code(b));
    let mut report = json!({
        "n_a": a.vertex_count(),
        "n_b": b.vertex_count(),
        "isomorphic": a.vertex_count() == b.vertex_count() && ca == cb,
        "x_equal": fa == fb,
        "m_a": max_block_from_csf(&fa)?,
        "m_b": max_block_from_csf(&fb)?,
        "levels_a": leaf_decomposition(a).counts(),
        "levels_b": leaf_decomposition(b).counts(),
        "rho_a": rho_data(a),
        "rho_b": rho_data(b),
    });
    if theorems {
        let mut verdicts = Vec::new();
        let mut skipped = None;
        for check in [thm_leaves_check, thm_componentwise_check, thm_sum_check] {
            match check(a, b) {
                Ok(v) => verdicts.push(v),
                Err(e @ (CsfError::SizeMismatch(..) | CsfError::Isomorphic)) => {
                    skipped = Some(e.kind());
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if skipped.is_none() {
            if let (Some(sa), Some(sb)) = (recognize_star_connection(a), recognize_star_connection(b)) {
                verdicts.push(star_connection_distinct(&sa, &sb)?);
            }
        }
        report["theorems"] = serde_json::to_value(&verdicts).expect("serializable");
        if let Some(reason) = skipped {
            report["theorems_skipped"] = json!(reason);
        }
    }
    Ok(report)
}
