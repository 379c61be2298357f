//! Command-line front end for `knotsurf`: argument definitions, the
//! subcommands and the reproduction suite.

pub mod commands;
pub mod report;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use knotsurf::fpgroup::{GroupError, DEFAULT_MAX_COSETS};
use knotsurf::obstruct::{SpecError, DEFAULT_SWEEP};
use knotsurf::pretzel::PretzelError;
use knotsurf::seifert::SeifertError;
use thiserror::Error;

use commands::{GroupArgs, GroupOp, PretzelOp, SeifertOp};
pub use report::{Report, Section, Status};

/// Errors in the input itself; the binary exits with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Pretzel(#[from] PretzelError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "knotsurf",
    version,
    about = "Exact invariants and reducibility obstructions for knotted surfaces"
)]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OutputFlags {
    /// Print only the structured key=value block.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Include full proof traces.
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finitely presented groups, e.g. "<x,y | x^2, y^3, (x*y)^7>".
    Group {
        #[command(subcommand)]
        op: GroupCommand,
    },
    /// Seifert fibered spaces, e.g. "S2(0; 1/2, -1/3, -1/7)".
    Seifert {
        #[command(subcommand)]
        op: SeifertCommand,
    },
    /// Pretzel knots, e.g. "P(-2,3,7)".
    Pretzel {
        #[command(subcommand)]
        op: PretzelCommand,
    },
    /// Run the decision procedures on every surface in a spec file.
    SurfaceCheck {
        file: PathBuf,
        /// Largest stabilization count l' checked by the irreducibility sweep.
        #[arg(long, default_value_t = DEFAULT_SWEEP)]
        sweep: usize,
    },
    /// Run the full reproduction suite.
    PaperVerify {
        /// Largest stabilization count l' checked by the irreducibility sweep.
        #[arg(long, default_value_t = DEFAULT_SWEEP)]
        sweep: usize,
        /// Coset limit for the Hurwitz enumeration.
        #[arg(long = "max-cosets", alias = "max", default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
}

#[derive(Debug, Args)]
pub struct PresentationArg {
    pub presentation: String,
}

#[derive(Debug, Args)]
pub struct EnumerationArgs {
    pub presentation: String,
    /// Comma-separated subgroup generators; empty for the trivial subgroup.
    #[arg(long, default_value = "")]
    pub subgroup: String,
    /// Image of each generator in cycle notation, in order. Enumerates the
    /// kernel of the resulting permutation quotient instead of `--subgroup`.
    #[arg(long = "image")]
    pub images: Vec<String>,
    /// Number of points permuted by the `--image` values.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Stop and report inconclusive past this many live cosets.
    #[arg(long = "max-cosets", alias = "max", default_value_t = DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Betti number and torsion of the abelianization.
    Abelianize(PresentationArg),
    /// Generators minus relators.
    Deficiency(PresentationArg),
    /// Upper bound on the rank of H_2 from the presentation.
    B2bound(PresentationArg),
    /// Coset table of a subgroup; `--trace` prints the table.
    ToddCoxeter(EnumerationArgs),
    /// Reidemeister-Schreier presentation of a finite-index subgroup.
    Schreier(EnumerationArgs),
    /// Checks a permutation representation and computes the image order.
    QuotientOrder {
        presentation: String,
        /// Image of each generator in cycle notation, in order.
        #[arg(long = "image", required = true)]
        images: Vec<String>,
        /// Number of points permuted.
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeifertCommand {
    /// Standard presentation of the fundamental group.
    Pi1 { space: String },
    /// Order of the first homology group.
    H1 { space: String },
    /// Rational Euler number.
    Euler { space: String },
    /// Orbifold group obtained by killing the regular fiber.
    KillFiber { space: String },
}

#[derive(Debug, Subcommand)]
pub enum PretzelCommand {
    /// Determinant, from the Goeritz matrix.
    Det { knot: String },
    /// Goeritz matrix of the standard diagram.
    Goeritz { knot: String },
    /// Seifert invariants of the double branched cover (3 strands).
    Dbc { knot: String },
}

fn enumeration(op: GroupOp, a: EnumerationArgs, show_table: bool) -> Result<Report, CliError> {
    let args = GroupArgs {
        subgroup: a.subgroup,
        images: a.images,
        degree: a.degree,
        max_cosets: a.max_cosets,
        show_table,
    };
    commands::cmd_group(op, &a.presentation, &args)
}

pub fn execute(command: Command, output: OutputFlags) -> Result<Report, CliError> {
    let plain = GroupArgs {
        max_cosets: DEFAULT_MAX_COSETS,
        ..GroupArgs::default()
    };
    match command {
        Command::Group { op } => match op {
            GroupCommand::Abelianize(p) => commands::cmd_group(GroupOp::Abelianize, &p.presentation, &plain),
            GroupCommand::Deficiency(p) => commands::cmd_group(GroupOp::Deficiency, &p.presentation, &plain),
            GroupCommand::B2bound(p) => commands::cmd_group(GroupOp::B2Bound, &p.presentation, &plain),
            GroupCommand::ToddCoxeter(a) => enumeration(GroupOp::ToddCoxeter, a, output.trace),
            GroupCommand::Schreier(a) => enumeration(GroupOp::Schreier, a, output.trace),
            GroupCommand::QuotientOrder {
                presentation,
                images,
                degree,
            } => {
                let args = GroupArgs {
                    images,
                    degree: Some(degree),
                    ..plain
                };
                commands::cmd_group(GroupOp::QuotientOrder, &presentation, &args)
            }
        },
        Command::Seifert { op } => match op {
            SeifertCommand::Pi1 { space } => commands::cmd_seifert(SeifertOp::Pi1, &space),
            SeifertCommand::H1 { space } => commands::cmd_seifert(SeifertOp::H1, &space),
            SeifertCommand::Euler { space } => commands::cmd_seifert(SeifertOp::Euler, &space),
            SeifertCommand::KillFiber { space } => commands::cmd_seifert(SeifertOp::KillFiber, &space),
        },
        Command::Pretzel { op } => match op {
            PretzelCommand::Det { knot } => commands::cmd_pretzel(PretzelOp::Det, &knot),
            PretzelCommand::Goeritz { knot } => commands::cmd_pretzel(PretzelOp::Goeritz, &knot),
            PretzelCommand::Dbc { knot } => commands::cmd_pretzel(PretzelOp::Dbc, &knot),
        },
        Command::SurfaceCheck { file, sweep } => commands::cmd_surface_check(&file, sweep),
        Command::PaperVerify { sweep, max_cosets } => Ok(verify::paper_verify(sweep, max_cosets)),
    }
}

pub fn render(report: &Report, output: OutputFlags) -> String {
    if output.machine {
        report.render_machine()
    } else {
        report.render_human(output.trace)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the text for stdout, or for stderr on errors, and the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    match execute(cli.command, cli.output) {
        Ok(report) => (render(&report, cli.output), report.exit_code()),
        Err(e) => (format!("error: {e}\n"), 2),
    }
}
