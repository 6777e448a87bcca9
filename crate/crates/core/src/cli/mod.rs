//! Command-line front end: argument parsing, per-query reports and the
//! reproduction suite behind `verify-paper`.

mod commands;
mod report;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

pub use commands::{cmd_admissible, cmd_collapse, cmd_decompose, cmd_info, cmd_levels};
pub use report::{Check, Claim, Report, Section};
pub use verify::{cmd_verify_paper, SECTIONS};

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::walgebra::FamilyParams;

#[derive(Parser, Debug)]
#[command(name = "wlevels", version, about = "Exact conformal levels and collapsing levels of hook and rectangular W-algebras of sl(N)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct FamilyArgs {
    /// Jordan type of f, e.g. 3,1,1
    #[arg(long, value_name = "A,B,C")]
    partition: Option<String>,
    /// Hook (m, 1^n)
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    hook: Option<Vec<u32>>,
    /// Rectangle (q^m)
    #[arg(long, num_args = 2, value_names = ["Q", "M"])]
    rect: Option<Vec<u32>>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<FamilyParams> {
        if let Some(h) = &self.hook {
            FamilyParams::hook(h[0], h[1])
        } else if let Some(r) = &self.rect {
            FamilyParams::rectangular(r[0], r[1])
        } else {
            let text = self.partition.as_deref().unwrap_or_default();
            Ok(FamilyParams::from_partition(text.parse()?))
        }
    }

    fn partition_string(&self) -> Result<String> {
        let p = self.resolve()?;
        let parts: Vec<String> = p.partition().parts().iter().map(u32::to_string).collect();
        Ok(parts.join(","))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Grading, graded dimensions, strong generators and c(k)
    Info {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Conformal levels of the affine subalgebra
    Levels {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// C vs Δ comparison and collapsing status at a conformal level
    Collapse {
        #[command(flatten)]
        family: FamilyArgs,
        /// Exact level, e.g. -15/4
        #[arg(long, allow_hyphen_values = true, value_name = "NUM/DEN")]
        level: String,
        #[arg(long)]
        json: bool,
    },
    /// Admissibility of a level and d_k^W
    Admissible {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true, value_name = "NUM/DEN")]
        level: String,
        #[arg(long)]
        json: bool,
    },
    /// J(0)-charge decomposition at k^(1) or k^(2) of a hook
    Decompose {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=2))]
        case: u8,
        /// Largest |ℓ| to list
        #[arg(long, default_value_t = 2)]
        range: u32,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every closed form, table and classification on full sweeps
    VerifyPaper {
        /// Restrict to one section
        #[arg(long, value_name = "SECTION")]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_level(text: &str) -> Result<Rat> {
    text.parse()
}

fn execute(command: Command) -> Result<(Report, bool)> {
    Ok(match command {
        Command::Info { family, json } => (cmd_info(&family.partition_string()?)?, json),
        Command::Levels { family, json } => (cmd_levels(&family.resolve()?)?, json),
        Command::Collapse { family, level, json } => {
            (cmd_collapse(&family.resolve()?, &parse_level(&level)?)?, json)
        }
        Command::Admissible { family, level, json } => {
            (cmd_admissible(&family.resolve()?, &parse_level(&level)?)?, json)
        }
        Command::Decompose { family, case, range, json } => {
            (cmd_decompose(&family.resolve()?, case, range)?, json)
        }
        Command::VerifyPaper { only, json } => (cmd_verify_paper(only.as_deref())?, json),
    })
}

/// Exit status for a library error: 2 for malformed input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidPartition(_) | Error::InvalidArgument(_) | Error::Dimension { .. } => 2,
        _ => 1,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status: 0 on success, 1 when a check fails or the query is refused, 2 on
/// a usage or parse error.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok((report, json)) => {
            let text = if json { report.to_json() + "\n" } else { report.to_text() };
            let _ = out.write_all(text.as_bytes());
            if report.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
