//! The `polylaw` command line: span inspection, enumeration, composition in
//! a table, verification suites and fixture dumps.

mod encoding;
mod suites;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use encoding::{encode_bijection, parse_bijection, parse_map, parse_s2, parse_s3, parse_span, EncodingError};
pub use suites::{
    bfs_components, check_delta1, check_random_polycomposition, check_spans, default_tables, dfs_acyclic, run_suite,
    Suite, SuiteConfig,
};

use crate::corpus::{preset, PRESETS};
use crate::fincard::{is_acyclic, is_connected, is_suitable_span, pushout};
use crate::matchings::{delta1_elements, whiskered_left, whiskered_right};
use crate::polycat::{Polycategory, PolyTable, TableError};
use crate::symcat::{enumerate_s2, enumerate_s3};

/// Exit status for input errors.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Encoding(#[from] EncodingError),
    #[error("{path}: {source}")]
    Table { path: String, source: TableError },
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(name = "polylaw", version, about = "Spans, suitable matchings, polycomposition and bounded coherence checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pushout, connectivity and acyclicity of a span `θ1@n;θ2@m`.
    Span { span: String },
    /// List objects or elements in canonical order.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        psi: Option<String>,
        /// Side of the whiskered profunctor.
        #[arg(long, value_enum, default_value = "right")]
        side: WhiskerSide,
    },
    /// Compose two maps of a table along a cut `i,j` (0-based positions).
    Compose {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        cut: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        bound: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Print a fixture table as JSON.
    Table {
        #[arg(long)]
        preset: String,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

#[derive(clap::Args, Debug)]
pub struct TableArgs {
    /// A table file in JSON.
    #[arg(long)]
    table: Option<PathBuf>,
    /// A built-in table.
    #[arg(long)]
    preset: Option<String>,
    /// List-length bound for `--preset`.
    #[arg(long = "table-bound", default_value_t = 4)]
    table_bound: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    S2,
    S3,
    Delta1,
    Whiskered,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhiskerSide {
    Right,
    Left,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn parse_polytable(path: &Path) -> Result<PolyTable, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    PolyTable::from_json(&text).map_err(|source| CliError::Table {
        path: path.display().to_string(),
        source,
    })
}

fn load_tables(args: &TableArgs) -> Result<Vec<(String, PolyTable)>, CliError> {
    let mut out = Vec::new();
    if let Some(path) = &args.table {
        out.push((path.display().to_string(), parse_polytable(path)?));
    }
    if let Some(name) = &args.preset {
        let t = preset(name, args.table_bound)
            .ok_or_else(|| CliError::Usage(format!("unknown preset {name:?}; known: {}", PRESETS.join(", "))))?;
        out.push((name.clone(), t));
    }
    Ok(out)
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

/// Runs one command; returns the exit status and the text for stdout.
pub fn execute(cli: Cli) -> Result<(i32, String), CliError> {
    match cli.command {
        Command::Span { span } => {
            let s = parse_span(&span)?;
            let po = pushout(&s);
            let out = format!(
                "span {s}\npushout r = {}\ntau1 {}\ntau2 {}\nconnected {}\nacyclic {}\nsuitable {}\n",
                po.r,
                po.tau1,
                po.tau2,
                is_connected(&s),
                is_acyclic(&s),
                is_suitable_span(&s)
            );
            Ok((0, out))
        }
        Command::Enumerate { kind, n, m, r, phi, psi, side } => {
            let lines: Vec<String> = match kind {
                Kind::S2 => enumerate_s2(need(n, "n")?, need(m, "m")?).iter().map(|x| x.to_string()).collect(),
                Kind::S3 => enumerate_s3(need(n, "n")?, need(m, "m")?, need(r, "r")?)
                    .iter()
                    .map(|x| x.to_string())
                    .collect(),
                Kind::Delta1 => {
                    let (a, b) = (parse_s2(&need(phi, "phi")?)?, parse_s2(&need(psi, "psi")?)?);
                    delta1_elements(&a, &b).iter().map(|x| encode_bijection(&x.f_n)).collect()
                }
                Kind::Whiskered => {
                    let (a, b) = (parse_s3(&need(phi, "phi")?)?, parse_s3(&need(psi, "psi")?)?);
                    match side {
                        WhiskerSide::Right => whiskered_right(&a, &b)
                            .iter()
                            .map(|x| format!("{} {}", encode_bijection(&x.f_n), encode_bijection(&x.f_m)))
                            .collect(),
                        WhiskerSide::Left => whiskered_left(&a, &b)
                            .iter()
                            .map(|x| format!("{} {}", encode_bijection(&x.f_n), encode_bijection(&x.f_r)))
                            .collect(),
                    }
                }
            };
            let mut out = String::new();
            for l in &lines {
                out.push_str(l);
                out.push('\n');
            }
            out.push_str(&format!("count {}\n", lines.len()));
            Ok((0, out))
        }
        Command::Compose { table, g, f, cut } => {
            let tables = load_tables(&table)?;
            let (_, t) = tables.into_iter().next().ok_or_else(|| CliError::Usage("need --table or --preset".into()))?;
            let id = |name: &str| t.id(name).ok_or_else(|| CliError::Usage(format!("unknown map {name:?}")));
            let (gi, fi) = (id(&g)?, id(&f)?);
            let (i, j) = cut
                .split_once(',')
                .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
                .ok_or_else(|| CliError::Usage(format!("cut {cut:?} is not i,j")))?;
            match t.compose(&gi, &fi, (i, j)) {
                Ok(h) => Ok((0, format!("{} : {:?} -> {:?}\n", t.name(h), t.dom(&h), t.cod(&h)))),
                Err(e) => Err(CliError::Usage(e.to_string())),
            }
        }
        Command::Verify { suite, bound, seed, format, table } => {
            let suite: Suite = suite.parse().map_err(CliError::Usage)?;
            if bound == 0 {
                return Err(CliError::Usage("bound must be at least 1".into()));
            }
            let mut cfg = SuiteConfig::new(suite, bound, seed);
            cfg.tables = load_tables(&table)?;
            let report = run_suite(&cfg);
            let out = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
            };
            Ok((if report.clean { 0 } else { 1 }, out))
        }
        Command::Table { preset: name, bound } => {
            let t = preset(&name, bound)
                .ok_or_else(|| CliError::Usage(format!("unknown preset {name:?}; known: {}", PRESETS.join(", "))))?;
            Ok((0, t.to_json() + "\n"))
        }
    }
}

/// Entry point for the binary: parses arguments, honours
/// `POLYLAW_THREADS`, prints, and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = std::env::var("POLYLAW_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match execute(cli) {
        Ok((code, out)) => {
            print!("{out}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}
