//! Front end for the calculator: `query`, `dump`, `selfcheck` and `export`.
//!
//! [`run`] does all the work and returns what to print, so the binary is a
//! thin wrapper and tests can drive it in-process.

mod query;
mod render;
pub mod selfcheck;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use projspace::Field;
use tables::{load_catalog, Catalog};

pub use query::{answer, covered_cells, Answer, Query, What};
pub use render::{machine, text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFCHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CATALOG: i32 = 3;

pub const CATALOG_ENV: &str = "GOTTLIEB_CATALOG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "gottlieb", version, about = "Homotopy, Whitehead center and Gottlieb groups of projective spaces")]
struct Cli {
    /// Catalog file; defaults to $GOTTLIEB_CATALOG, then the bundled table.
    #[arg(long, global = true)]
    catalog: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Answer one (what, field, n, k) question.
    Query {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_parser = parse_field)]
        field: Field,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Show p-components only (odd prime).
        #[arg(long)]
        p: Option<u64>,
    },
    /// Every covered cell matching the filter, ordered by (field, n, k).
    Dump {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
        /// A value or an inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        n: Option<Range>,
        #[arg(long, value_parser = parse_range)]
        k: Option<Range>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Run the invariant suites against the catalog.
    Selfcheck,
    /// Print the catalog as `space|k|group|generators|citation` records.
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: u32,
    pub hi: u32,
}

impl Range {
    pub fn iter(self) -> std::ops::RangeInclusive<u32> {
        self.lo..=self.hi
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse()
}

pub fn parse_range(s: &str) -> Result<Range, String> {
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{:?}: {}", x, e));
    match s.split_once("..") {
        Some((a, b)) => Ok(Range { lo: num(a)?, hi: num(b.strip_prefix('=').unwrap_or(b))? }),
        None => num(s).map(|v| Range { lo: v, hi: v }),
    }
}

/// What the process should print and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn err(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { stdout: String::new(), stderr, code }
    }
}

fn check_prime(p: Option<u64>) -> Result<(), String> {
    match p {
        Some(p) if p == 2 || !fga::is_prime(p) => Err(format!("--p {}: expected an odd prime", p)),
        _ => Ok(()),
    }
}

fn load(path: Option<String>, env: Option<String>) -> Result<Catalog, String> {
    match path.or(env) {
        Some(p) => load_catalog(&p).map_err(|e| format!("{}: {}", p, e)),
        None => Ok(Catalog::bundled()),
    }
}

/// Run one command line. `env_catalog` is the value of `GOTTLIEB_CATALOG`.
pub fn run<I, T>(args: I, env_catalog: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let msg = e.render().to_string();
            return if e.use_stderr() { Outcome::err(EXIT_USAGE, msg) } else { Outcome::ok(msg) };
        }
    };
    let cat = match load(cli.catalog, env_catalog) {
        Ok(c) => c,
        Err(e) => return Outcome::err(EXIT_CATALOG, format!("error: catalog: {}", e)),
    };
    match cli.cmd {
        Cmd::Query { what, field, n, k, p } => {
            if let Err(e) = check_prime(p) {
                return Outcome::err(EXIT_USAGE, format!("error: {}", e));
            }
            let q = Query { what, field, n, k, p };
            if let Err(e) = q.validate() {
                return Outcome::err(EXIT_USAGE, format!("error: {}", e));
            }
            let a = answer(&q, &cat);
            Outcome::ok(match cli.format {
                Format::Text => text(&a),
                Format::Machine => machine(&a) + "\n",
            })
        }
        Cmd::Dump { what, field, n, k, p } => {
            if let Err(e) = check_prime(p) {
                return Outcome::err(EXIT_USAGE, format!("error: {}", e));
            }
            let fields: Vec<Field> = match field {
                Some(f) => vec![f],
                None => vec![Field::R, Field::C, Field::H, Field::K],
            };
            let rows = covered_cells(what, &fields, n, k, p, &cat);
            Outcome::ok(render::dump(&rows, cli.format))
        }
        Cmd::Selfcheck => {
            let report = selfcheck::run_all(&cat);
            let code = if report.iter().all(|s| s.ok()) { EXIT_OK } else { EXIT_SELFCHECK };
            Outcome { stdout: selfcheck::render(&report), stderr: String::new(), code }
        }
        Cmd::Export => Outcome::ok(tables::export(&cat)),
    }
}
