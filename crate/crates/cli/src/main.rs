use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sclab_core::group::{load_group, LatticeData, LoadError, PermutationGroup, SubgroupLattice, LATTICE_FORMAT_VERSION};
use sclab_core::verify::{self, Suite};
use sclab_core::{Error, Limits};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_PARSE: u8 = 10;
const EXIT_UNKNOWN_BUILTIN: u8 = 11;
const EXIT_CAP: u8 = 12;
const EXIT_PRIME: u8 = 13;
const EXIT_IO: u8 = 14;

#[derive(Parser)]
#[command(name = "sclab", version, about = "Verify relations between collections of p-subgroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Group file, or `builtin:NAME`.
    #[arg(long)]
    group: String,
    #[arg(long)]
    prime: u64,
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    max_simplices: Option<usize>,
    /// Directory for cached subgroup lattices.
    #[arg(long, env = "SCLAB_CACHE")]
    cache: Option<PathBuf>,
    /// Exit nonzero when any edge is inconclusive.
    #[arg(long)]
    strict: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::PrimeDoesNotDivide { .. } | Error::NotPrime(_) => EXIT_PRIME,
            Error::UnknownBuiltin(_) => EXIT_UNKNOWN_BUILTIN,
            _ => EXIT_PARSE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Group(e) => e.into(),
            LoadError::Io { .. } => Failure { code: EXIT_IO, message: e.to_string() },
        }
    }
}

fn io_failure(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

fn cached_lattice(group: PermutationGroup, limits: &Limits, dir: &Path) -> Result<SubgroupLattice, Failure> {
    let path = dir.join(format!("{}-v{LATTICE_FORMAT_VERSION}.json", group.content_hash()));
    if let Ok(text) = std::fs::read_to_string(&path) {
        match serde_json::from_str::<LatticeData>(&text)
            .map_err(|e| e.to_string())
            .and_then(|d| SubgroupLattice::from_data(group.clone(), &d).map_err(|e| e.to_string()))
        {
            Ok(l) => return Ok(l),
            Err(e) => eprintln!("sclab: ignoring stale cache {}: {e}", path.display()),
        }
    }
    let lattice = SubgroupLattice::enumerate(group, limits)?;
    std::fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    let text = serde_json::to_string(&lattice.to_data()).expect("lattice data serializes");
    std::fs::write(&path, text).map_err(|e| io_failure(&path, e))?;
    Ok(lattice)
}

fn verify_cmd(args: VerifyArgs) -> Result<u8, Failure> {
    let defaults = Limits::default();
    let limits = Limits {
        max_order: args.max_order.unwrap_or(defaults.max_order),
        max_simplices: args.max_simplices.unwrap_or(defaults.max_simplices),
        ..defaults
    };
    let group = load_group(&args.group, limits.max_order)?;
    let lattice = match &args.cache {
        Some(dir) => cached_lattice(group, &limits, dir)?,
        None => SubgroupLattice::enumerate(group, &limits)?,
    };
    let report = verify::run(&lattice, args.prime, args.suite, limits)?;
    let text = match args.format {
        Format::Json => verify::to_json(&report),
        Format::Markdown => verify::to_markdown(&report),
    };
    match &args.report {
        Some(path) => std::fs::write(path, &text).map_err(|e| io_failure(path, e))?,
        None => print!("{text}"),
    }
    Ok(if report.has_mismatch() {
        EXIT_MISMATCH
    } else if args.strict && report.has_inconclusive() {
        EXIT_INCONCLUSIVE
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify_cmd(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("sclab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
