//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code:
//! 0 success, 1 mathematical failure, 2 usage or parse error, 3 guard exceeded.

mod census;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use census::CensusRecord;

use crate::abelian::AbelianGroup;
use crate::construct::{
    csm_construct, nse_construct, root_construct, CsmParams, NseParams, RootParams,
};
use crate::enumerate::{brute_force_oracle, Enumerator, Guard, DEFAULT_ORACLE_GUARD};
use crate::error::Error;
use crate::skew::{check_record, is_reciprocal_pair, RecordCheck, SkewMorphism, SkewRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "skewmorph",
    version,
    about = "Skew morphisms of finite abelian groups"
)]
struct Cli {
    /// Largest group order to enumerate (overrides the defaults of 64 for
    /// cyclic and 32 for other groups, and 10 for the oracle).
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Write records to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Only print records and failures.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every skew morphism of a group, one JSON record per line.
    Enumerate {
        /// Group literal such as Z6 or Z2xZ4.
        group: String,
        /// Use the brute-force oracle instead of the search.
        #[arg(long)]
        oracle: bool,
    },
    /// Per-group counts as CSV.
    Census(CensusArgs),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Build a skew morphism from a parametric family.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Revalidate a JSON record and compare every field.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Reciprocal pairs of skew morphisms of Z_m and Z_n.
    Reciprocal {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Print every pair.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long, requires = "cyclic_to", conflicts_with = "groups")]
    cyclic_from: Option<u64>,
    #[arg(long, requires = "cyclic_from")]
    cyclic_to: Option<u64>,
    /// Comma-separated group literals.
    #[arg(long, value_delimiter = ',')]
    groups: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// Non-smooth skew morphisms of Z_n exist exactly where predicted.
    Theorem1 {
        #[arg(long, default_value_t = 40)]
        max_n: u64,
    },
    /// The smooth family equals the proper smooth skew morphisms of Z_n.
    Csm {
        #[arg(long, conflicts_with = "max_n")]
        n: Option<u64>,
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Structural identities for every skew morphism of a group.
    Identities { group: String },
    /// Witnesses for groups failing the non-cyclic necessary condition.
    Theorem2 {
        #[arg(long, value_delimiter = ',', required = true)]
        groups: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    Csm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
    },
    Root {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        s: u64,
    },
    Nse {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        nu: u64,
        #[arg(long)]
        r: u64,
    },
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Guard(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            Error::BadLiteral(_)
            | Error::InvalidFactor(_)
            | Error::Cyclic(_)
            | Error::NotCyclic(_) => Failure::Usage(e.to_string()),
            other => Failure::Math(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub(crate) struct Context<'a> {
    guard: Option<usize>,
    quiet: bool,
    out: Box<dyn Write + 'a>,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn guard(&self) -> Guard {
        self.guard.map(Guard::uniform).unwrap_or_default()
    }

    /// Progress and summaries go to stderr when records go to stdout.
    fn note(&mut self, line: &str) -> io::Result<()> {
        if self.quiet {
            return Ok(());
        }
        writeln!(self.err, "{line}")
    }

    fn record(&mut self, phi: &SkewMorphism) -> io::Result<()> {
        writeln!(self.out, "{}", SkewRecord::from_morphism(phi).to_json())
    }
}

pub(crate) fn parse_group(literal: &str) -> Result<AbelianGroup, Failure> {
    AbelianGroup::parse(literal).map_err(Failure::from)
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    let out: Box<dyn Write> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                let _ = writeln!(stderr, "cannot create {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => Box::new(&mut *stdout),
    };
    let mut ctx = Context {
        guard: cli.max_order,
        quiet: cli.quiet,
        out,
        err: stderr,
    };
    let result =
        dispatch(cli.command, &mut ctx).and_then(|()| ctx.out.flush().map_err(Failure::from));
    match result {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Guard(m) => (EXIT_GUARD, m),
                Failure::Math(m) => (EXIT_FAILURE, m),
            };
            let _ = writeln!(ctx.err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, ctx: &mut Context) -> Result<(), Failure> {
    match command {
        Command::Enumerate { group, oracle } => enumerate(ctx, &group, oracle),
        Command::Census(args) => census::run(ctx, args),
        Command::Verify { suite } => verify::run(ctx, suite),
        Command::Construct { family } => construct(ctx, family),
        Command::Check { file } => check(ctx, &file),
        Command::Reciprocal { m, n, list } => reciprocal(ctx, m, n, list),
    }
}

fn enumerate(ctx: &mut Context, literal: &str, oracle: bool) -> Result<(), Failure> {
    let group = parse_group(literal)?;
    let report = if oracle {
        brute_force_oracle(&group, ctx.guard.unwrap_or(DEFAULT_ORACLE_GUARD))?
    } else {
        Enumerator::new().report(&group, ctx.guard())?
    };
    for phi in &report.morphisms {
        ctx.record(phi)?;
    }
    let c = report.counts;
    ctx.note(&format!(
        "{}: {} skew morphisms ({} automorphisms, {} proper, {} non-smooth) in {} ms",
        group.label(),
        c.total,
        c.automorphisms,
        c.proper,
        c.nonsmooth,
        report.elapsed.as_millis()
    ))?;
    Ok(())
}

fn construct(ctx: &mut Context, family: Family) -> Result<(), Failure> {
    let phi = match family {
        Family::Csm { n, k, r, s, t } => csm_construct(&CsmParams::new(n, k, r, s, t)?)?,
        Family::Root { n, k, s } => root_construct(&RootParams::new(n, k, s)?)?,
        Family::Nse { p, d, nu, r } => nse_construct(&NseParams::new(p, d, nu, r)?)?,
    };
    ctx.record(&phi)?;
    Ok(())
}

fn check(ctx: &mut Context, file: &PathBuf) -> Result<(), Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let record: SkewRecord = serde_json::from_str(text.trim())
        .map_err(|e| Failure::Usage(format!("malformed record: {e}")))?;
    match check_record(&record) {
        RecordCheck::Ok(_) => {
            ctx.note("record ok")?;
            Ok(())
        }
        RecordCheck::Mismatch { field, detail } => Err(Failure::Math(format!(
            "field `{field}` does not match: {detail}"
        ))),
    }
}

fn reciprocal(ctx: &mut Context, m: u64, n: u64, list: bool) -> Result<(), Failure> {
    let guard = ctx.guard();
    let enumerator = Enumerator::new();
    let left = enumerator
        .report(&AbelianGroup::cyclic(m)?, guard)?
        .morphisms;
    let right = enumerator
        .report(&AbelianGroup::cyclic(n)?, guard)?
        .morphisms;
    let mut count = 0;
    for phi in &left {
        for psi in &right {
            if is_reciprocal_pair(phi, psi)? {
                count += 1;
                if list {
                    let pair = serde_json::json!({
                        "phi": SkewRecord::from_morphism(phi),
                        "psi": SkewRecord::from_morphism(psi),
                    });
                    writeln!(ctx.out, "{pair}")?;
                }
            }
        }
    }
    if !list {
        writeln!(ctx.out, "{count}")?;
    }
    ctx.note(&format!("Z{m}, Z{n}: {count} reciprocal pairs"))?;
    Ok(())
}
