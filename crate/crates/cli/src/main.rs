//! `polyface`: build face lattices from spec strings, run structural checks,
//! and sweep the face-number bounds.
//!
//! Exit status: 0 when everything passes, 1 when a check fails, 2 for usage
//! and input errors, 3 when a size cap stops the work.

mod basic;
mod input;
mod output;
mod sweep;
mod verify;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use polyface::{CheckKind, Error};

use output::{emit, Format, Run};

#[derive(Parser, Debug)]
#[command(name = "polyface", version, about = "Face lattices and f-vector bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout. For `construct`, the lattice JSON.
    #[arg(short = 'o', long = "out", global = true)]
    out: Option<PathBuf>,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize a spec such as `nabla(3)` or `dual(tdm(6,5,2))`.
    Construct { spec: String },
    /// Print the f-vector and Euler sum of a lattice file or spec.
    Fvector { input: String },
    /// Run structural checks on a lattice file or spec (all checks if none selected).
    Check {
        input: String,
        #[command(flatten)]
        which: CheckFlags,
    },
    /// Run one verification sweep.
    Verify {
        #[arg(value_enum)]
        theorem: verify::Theorem,
        #[command(flatten)]
        range: DimRange,
        /// Seed for randomized subset sampling.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random trials for `key-prop`.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Build lattices up to this dimension; above it only formulas are compared.
        #[arg(long, default_value_t = 8)]
        construct_max: usize,
    },
    /// Emit a table over a parameter grid.
    Sweep {
        #[arg(value_enum)]
        family: sweep::Family,
        #[command(flatten)]
        range: DimRange,
    },
}

#[derive(Args, Debug)]
struct CheckFlags {
    #[arg(long)]
    lattice: bool,
    #[arg(long)]
    diamond: bool,
    #[arg(long = "coatom-dist")]
    coatom_dist: bool,
    #[arg(long = "boolean-intervals")]
    boolean_intervals: bool,
    #[arg(long)]
    pure: bool,
    #[arg(long)]
    pseudomanifold: bool,
    #[arg(long)]
    normal: bool,
    #[arg(long)]
    grunbaum: bool,
}

impl CheckFlags {
    fn selected(&self) -> Vec<CheckKind> {
        let flags = [
            self.lattice,
            self.diamond,
            self.coatom_dist,
            self.boolean_intervals,
            self.pure,
            self.pseudomanifold,
            self.normal,
            self.grunbaum,
        ];
        CheckKind::ALL.into_iter().zip(flags).filter(|&(_, on)| on).map(|(k, _)| k).collect()
    }
}

#[derive(Args, Debug)]
struct DimRange {
    /// Run a single dimension.
    #[arg(long, conflicts_with = "dmax")]
    d: Option<usize>,
    /// Run every dimension from the smallest supported one up to this.
    #[arg(long)]
    dmax: Option<usize>,
}

impl DimRange {
    fn resolve(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        match (self.d, self.dmax) {
            (Some(d), _) => d..=d,
            (None, Some(hi)) => *default.start()..=hi,
            (None, None) => default,
        }
    }
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SIZE: u8 = 3;

fn finish(run: Run, cli: &Cli) -> Result<ExitCode, Error> {
    emit(cli.out.as_deref(), &run.render(cli.format)?)?;
    Ok(if run.failed() {
        ExitCode::from(EXIT_FAIL)
    } else if run.limit_hits > 0 {
        ExitCode::from(EXIT_SIZE)
    } else {
        ExitCode::SUCCESS
    })
}

fn dispatch(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Construct { spec } => {
            basic::construct(spec, cli.out.as_deref(), cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fvector { input } => {
            basic::fvector(input, cli.out.as_deref(), cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, which } => finish(basic::check(input, &which.selected())?, cli),
        Command::Verify {
            theorem,
            range,
            seed,
            trials,
            construct_max,
        } => {
            let opts = verify::Options {
                seed: *seed,
                trials: *trials,
                construct_max: *construct_max,
            };
            finish(verify::run(*theorem, range.resolve(theorem.default_range()), opts)?, cli)
        }
        Command::Sweep { family, range } => finish(sweep::run(*family, range.resolve(family.default_range()))?, cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("polyface: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("polyface: {e}");
            match e {
                Error::SizeLimit { .. } => ExitCode::from(EXIT_SIZE),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}
