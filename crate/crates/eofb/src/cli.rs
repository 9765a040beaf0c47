use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use eofb_core::bounds::cdb_bound;
use eofb_core::search::SearchConfig;
use eofb_core::states::random::{random_density, random_separable};

use crate::ensemble::{ensemble_rows, write_csv};
use crate::error::CliError;
use crate::format::{report_csv, to_json, MatrixFile, ReportFile};
use crate::verify::verify_state;

#[derive(Debug, Parser)]
#[command(
    name = "eofb",
    version,
    about = "Entanglement-of-formation bounds for qubit-qudit density matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute channel spectra, C_db and the entanglement lower bound of a state.
    Analyze(AnalyzeArgs),
    /// Write a seeded random density matrix.
    Random(RandomArgs),
    /// Compare the bounds with decompositions found by randomized search.
    Verify(VerifyArgs),
    /// Bounds for a batch of seeded random states, as CSV.
    Ensemble(EnsembleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Budget {
    Quick,
    Default,
}

impl Budget {
    pub fn config(self, seed: u64) -> SearchConfig {
        match self {
            Budget::Quick => SearchConfig::quick(),
            Budget::Default => SearchConfig::default(),
        }
        .with_seed(seed)
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Tolerance for the Hermiticity, trace and positivity checks.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    /// Qudit dimension.
    #[arg(long = "d")]
    pub d: usize,
    /// Rank of the state (number of product terms with --separable); defaults to 2d.
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long, env = "EOFB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Mixture of random product states instead of an induced-measure state.
    #[arg(long)]
    pub separable: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Budget::Default)]
    pub budget: Budget,
    #[arg(long, env = "EOFB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Adds a constant to every bound before the soundness check (debug builds only).
    #[cfg(debug_assertions)]
    #[arg(
        long,
        hide = true,
        default_value_t = 0.0,
        allow_negative_numbers = true
    )]
    pub inject_bound_offset: f64,
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    #[arg(long = "d")]
    pub d: usize,
    #[arg(long)]
    pub count: usize,
    /// Rank of every state; defaults to 2d.
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long, env = "EOFB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also search for the smallest average concurrence of each state.
    #[arg(long)]
    pub verify: bool,
    /// Search budget used with --verify.
    #[arg(long, value_enum, default_value_t = Budget::Quick)]
    pub budget: Budget,
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::io(path, e))
}

fn emit(out: Option<&Path>, text: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => stdout
            .write_all(text)
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn check_rank(d: usize, rank: Option<usize>) -> Result<usize, CliError> {
    if d < 2 {
        return Err(eofb_core::Error::BadDimension { d }.into());
    }
    let rank = rank.unwrap_or(2 * d);
    if rank == 0 || rank > 2 * d {
        return Err(eofb_core::Error::BadRank { rank, max: 2 * d }.into());
    }
    Ok(rank)
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(a) => analyze(&a, stdout),
        Command::Random(a) => random(&a, stdout),
        Command::Verify(a) => verify(&a, stdout),
        Command::Ensemble(a) => ensemble(&a, stdout),
    }
}

fn analyze(a: &AnalyzeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let bytes = read(&a.input)?;
    let file = MatrixFile::parse(&bytes)?;
    let rho = file.to_density(a.tol)?;
    let report = cdb_bound(&rho, a.tol)?;
    let text = match a.format {
        Format::Json => to_json(&ReportFile::new(&bytes, a.tol, &report, file.label.clone())),
        Format::Csv => report_csv(&report)?,
    };
    emit(a.out.as_deref(), text.as_bytes(), stdout)
}

fn random(a: &RandomArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let rank = check_rank(a.d, a.rank)?;
    let (rho, label) = if a.separable {
        (
            random_separable(a.d, rank, a.seed)?,
            format!("separable d={} terms={rank} seed={}", a.d, a.seed),
        )
    } else {
        (
            random_density(a.d, rank, a.seed)?,
            format!("random d={} rank={rank} seed={}", a.d, a.seed),
        )
    };
    let text = to_json(&MatrixFile::from_density(&rho, Some(label)));
    emit(a.out.as_deref(), text.as_bytes(), stdout)
}

fn verify(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let bytes = read(&a.input)?;
    let rho = MatrixFile::parse(&bytes)?.to_density(a.tol)?;
    #[cfg(debug_assertions)]
    let offset = a.inject_bound_offset;
    #[cfg(not(debug_assertions))]
    let offset = 0.0;
    let outcome = verify_state(&rho, &a.budget.config(a.seed), offset)?;
    emit(None, outcome.render().as_bytes(), stdout)?;
    if outcome.is_sound() {
        Ok(())
    } else {
        Err(CliError::Soundness(outcome.describe_violations()))
    }
}

fn ensemble(a: &EnsembleArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let rank = check_rank(a.d, a.rank)?;
    if a.count == 0 {
        return Err(CliError::Invalid("--count must be at least 1".into()));
    }
    let cfg = a.budget.config(a.seed);
    let rows = ensemble_rows(a.d, a.count, rank, a.seed, a.verify.then_some(&cfg))?;
    let mut buf = Vec::new();
    write_csv(a.d, &rows, &mut buf)?;
    emit(a.out.as_deref(), &buf, stdout)
}
