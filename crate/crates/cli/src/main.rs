//! `mckay`: character tables, McKay quivers and quiver analysis from the
//! command line.
//!
//! Exit codes: 0 success, 1 checks failed, 2 input error, 3 internal error.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mckay::catalog::{build, natural_rep, regular_rep};
use mckay::galois::DEFAULT_PRIME_BUDGET;
use mckay::mckay::{mckay_matrix, McKayError};
use mckay::quiver::mckay_obstruction_battery;
use mckay::{CharacterTable, GroupSpec, Quiver, TableError};

#[derive(Parser)]
#[command(name = "mckay", version, about = "Exact McKay quivers of finite groups")]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Output format for quivers.
    #[arg(long, global = true, value_enum, default_value_t = Out::Json)]
    out: Out,
    /// Primes below this bound are used for solvability certificates.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_BUDGET)]
    prime_budget: u64,
    /// Accept character table files that fail verification.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group (`C:n`, `BD:m`, `Q8`, `2T`, `2O`, `2I`, products with `x`)
    /// or of a table file.
    Table { group: String },
    /// Print the McKay quiver of a representation.
    Quiver {
        group: String,
        /// A 1-based irreducible index, `regular`, `natural`, or comma-separated multiplicities.
        #[arg(long)]
        rep: String,
    },
    /// Full structural report on a quiver file.
    Analyze { file: PathBuf },
    /// Run the McKay obstruction battery on a quiver file.
    CheckMckay { file: PathBuf },
    /// Verify a character table file.
    Verify { file: PathBuf },
}

enum Failure {
    Checks(String),
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Checks(_) => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<McKayError> for Failure {
    fn from(e: McKayError) -> Self {
        match e {
            McKayError::InvalidRep(_) => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

/// A group given either by catalog spec or as a path to a table file.
enum Group {
    Catalog(GroupSpec, CharacterTable),
    File(CharacterTable),
}

impl Group {
    fn table(&self) -> &CharacterTable {
        match self {
            Group::Catalog(_, t) | Group::File(t) => t,
        }
    }
}

fn load_group(arg: &str, force: bool) -> Result<Group, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let (table, _) = CharacterTable::load(&read(path)?, force).map_err(|e| match e {
            TableError::Unverified(_) => Failure::Input(format!("{e} (use --force to accept it)")),
            _ => Failure::Input(e.to_string()),
        })?;
        return Ok(Group::File(table));
    }
    let spec: GroupSpec = arg.parse().map_err(|e| Failure::Input(format!("{e}")))?;
    let table = build(&spec).map_err(|e| Failure::Internal(e.to_string()))?;
    let report = table.verify();
    if !report.passed() {
        return Err(Failure::Internal(format!("catalog table failed verification:\n{}", report.render_text())));
    }
    Ok(Group::Catalog(spec, table))
}

fn resolve_rep(group: &Group, rep: &str) -> Result<Vec<u64>, Failure> {
    let t = group.table();
    let r = t.num_classes();
    match rep {
        "regular" => Ok(regular_rep(t)),
        "natural" => match group {
            Group::Catalog(spec, _) => natural_rep(spec).map_err(|e| Failure::Input(e.to_string())),
            Group::File(_) => Err(Failure::Input("`natural` needs a catalog group".into())),
        },
        _ if rep.contains(',') => {
            let m: Vec<u64> = rep
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::Input(format!("bad multiplicity list '{rep}'")))?;
            if m.len() != r {
                return Err(Failure::Input(format!("{} multiplicities given for {r} irreducibles", m.len())));
            }
            Ok(m)
        }
        _ => {
            let k: usize = rep.trim().parse().map_err(|_| Failure::Input(format!("bad representation '{rep}'")))?;
            if k == 0 || k > r {
                return Err(Failure::Input(format!("irreducible index {k} out of range 1..={r}")));
            }
            let mut m = vec![0; r];
            m[k - 1] = 1;
            Ok(m)
        }
    }
}

fn load_quiver(path: &Path) -> Result<Quiver, Failure> {
    Quiver::from_json(&read(path)?).map_err(|e| Failure::Input(e.to_string()))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Table { group } => {
            let g = load_group(group, cli.force)?;
            Ok(match cli.format {
                Format::Json => g.table().to_json(),
                Format::Text => g.table().render_text(),
            })
        }
        Command::Quiver { group, rep } => {
            let g = load_group(group, cli.force)?;
            let rho = resolve_rep(&g, rep)?;
            let q = mckay_matrix(g.table(), &rho)?.to_quiver();
            Ok(match cli.out {
                Out::Json => q.to_json(),
                Out::Dot => q.to_dot(),
            })
        }
        Command::Analyze { file } => {
            let q = load_quiver(file)?;
            let r = report::analyze(&q, cli.prime_budget);
            Ok(match cli.format {
                Format::Json => json(&r),
                Format::Text => r.render_text(),
            })
        }
        Command::CheckMckay { file } => {
            let q = load_quiver(file)?;
            let r = mckay_obstruction_battery(&q, cli.prime_budget);
            let text = match cli.format {
                Format::Json => json(&r),
                Format::Text => r.render_text(),
            };
            if r.passed() {
                Ok(text)
            } else {
                Err(Failure::Checks(text))
            }
        }
        Command::Verify { file } => {
            let table = CharacterTable::from_json(&read(file)?).map_err(|e| Failure::Input(e.to_string()))?;
            let r = table.verify();
            let text = match cli.format {
                Format::Json => json(&r),
                Format::Text => r.render_text(),
            };
            if r.passed() {
                Ok(text)
            } else {
                Err(Failure::Checks(text))
            }
        }
    }
}

fn emit(text: &str) {
    print!("{text}");
    if !text.ends_with('\n') {
        println!();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Checks(text) => emit(text),
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Internal(m) => eprintln!("internal error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
