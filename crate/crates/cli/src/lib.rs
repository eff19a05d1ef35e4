//! The `torgit` command line: problem files in, deterministic reports out.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative verdict (empty locus,
//! obstruction, failed check), 2 for malformed input.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

mod commands;
pub mod paper;
pub mod problem;
pub mod report;

pub use problem::{InputError, Problem, ProblemFile};
pub use report::{Report, Status};

#[derive(Debug, Parser)]
#[command(name = "torgit", version, about = "Semistable loci, GIT quotients and chambers for subtorus actions")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Replay every emitted certificate through the independent checker.
    #[arg(long, global = true)]
    pub check: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Exactly one of a divisor name or a group.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Target {
    /// A divisor name from the problem file.
    #[arg(long)]
    pub divisor: Option<String>,
    /// A group name from `groups`, or a comma-separated list of divisor names.
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Faces on which every divisor of the group is Cartier.
    CartierLocus {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
    },
    /// Union of the affine charts cut out by sections of the group.
    AmpleLocus {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
    },
    /// Semistable locus of a linearized divisor or divisor group.
    Semistable {
        file: PathBuf,
        #[command(flatten)]
        target: Target,
    },
    /// Semistable locus of the trivial bundle linearized by a character.
    TrivialBundle {
        file: PathBuf,
        /// Comma-separated character coordinates.
        #[arg(long, allow_hyphen_values = true)]
        character: String,
    },
    /// Chambers of trivial-bundle characters with constant semistable locus.
    Chambers { file: PathBuf },
    /// Whether some trivial-bundle character yields the locus spanned by the given faces.
    Obstruction {
        file: PathBuf,
        /// A face as comma-separated ray indices; repeat for several, empty for the zero face.
        #[arg(long = "face", required = true)]
        faces: Vec<String>,
    },
    /// The glued quotient of a semistable locus.
    Quotient {
        file: PathBuf,
        #[command(flatten)]
        target: Target,
    },
    /// Class group and Picard rank of the toric variety.
    ClassGroup { file: PathBuf },
    /// Hilbert–Mumford computations for diagonal actions on affine space.
    #[command(subcommand)]
    Hm(HmCommand),
    /// Reproduce the two worked examples end to end.
    VerifyPaper {
        /// Replace the built-in quadric problem.
        #[arg(long)]
        quadric: Option<PathBuf>,
        /// Replace the built-in plane problem.
        #[arg(long)]
        intro: Option<PathBuf>,
    },
    /// Exhaustive witness search within bounds.
    #[command(hide = true)]
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 4)]
        n_max: i64,
        #[arg(long, default_value_t = 8)]
        exponent_box: i64,
        #[arg(long, default_value_t = 2)]
        degree_box: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HmCommand {
    /// Support of the limit of a one-parameter subgroup applied to a point.
    Limit {
        /// Coordinate weights, `;`-separated, each comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Nonzero coordinates of the point; all coordinates when absent.
        #[arg(long)]
        support: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// A one-parameter subgroup driving the point into the target coordinates.
    Destabilize {
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(long)]
        support: Option<String>,
        /// Coordinates allowed to survive in the limit; none (the origin) when absent.
        #[arg(long)]
        target: Option<String>,
    },
    /// Compare the toric locus with Hilbert–Mumford in an ambient coordinate model.
    CrossValidate {
        file: PathBuf,
        #[arg(long)]
        divisor: String,
        #[arg(long, default_value_t = 64)]
        max_basis: usize,
    },
}

/// What a process invocation prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the command line given as `args`, program name first.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Output { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match commands::execute(&cli, echo) {
        Ok(report) => {
            let stdout = if cli.json { report.to_json() } else { report.to_text() };
            Output { stdout, stderr: String::new(), code: report.exit_code() }
        }
        Err(e) => Output { stdout: String::new(), stderr: format!("torgit: error: {e}\n"), code: 2 },
    }
}
