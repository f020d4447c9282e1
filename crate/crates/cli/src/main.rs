use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use norden::exec::Execution;
use norden::family::{family_structure, Family, FamilyParams};
use norden::norden::NordenStructure;
use norden::poly::{parse_poly, Scalar, Vars};
use norden::report::{structural_verdicts, Report};
use norden::structfile::parse_structure;
use norden::verify::verify_family;

const VALIDATION: u8 = 1;
const PARSE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "norden",
    version,
    about = "Exact geometry of almost Norden structures on Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Write to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a structure file and test the Norden, Jacobi and invariance conditions
    Check { file: PathBuf },
    /// Connection, curvature, classification and sectional curvatures of a structure file
    Report {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Report for the six-parameter family
    Family {
        /// Six comma-separated rationals, e.g. 1,0,-1/2,0,0,0
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "symbolic",
            required_unless_present = "symbolic"
        )]
        lambda: Option<String>,
        /// Keep l1..l6 as indeterminates
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every reproduction check on the six-parameter family
    VerifyPaper {
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

/// An error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        fail(INTERNAL, format!("{e:#}"))
    }
}

fn load(path: &Path) -> Result<NordenStructure, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))?;
    let file = parse_structure(&text).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))?;
    file.to_structure()
        .map_err(|e| fail(VALIDATION, format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(Failure::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(report: &Report, out: &OutputArgs) -> Result<(), Failure> {
    let text = if out.json {
        format!("{:#}\n", report.to_json())
    } else {
        report.to_text()
    };
    emit(&text, out.output.as_deref())
}

fn parse_lambda(text: &str) -> Result<Vec<Scalar>, Failure> {
    let empty = Vars::empty();
    text.split(',')
        .map(|part| {
            parse_poly(part.trim(), &empty)
                .ok()
                .and_then(|p| p.constant_value())
                .ok_or_else(|| fail(PARSE, format!("--lambda: `{}` is not a rational number", part.trim())))
        })
        .collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { file } => {
            let s = load(&file)?;
            let verdicts = structural_verdicts(&s);
            let mut text = String::new();
            for (name, ok) in &verdicts {
                text += &format!("{name} {}\n", if *ok { "PASS" } else { "FAIL" });
            }
            emit(&text, None)?;
            Ok(if verdicts.iter().all(|(_, ok)| *ok) {
                0
            } else {
                VALIDATION
            })
        }
        Command::Report { file, out } => {
            let s = load(&file)?;
            render(&Report::build(&s, Execution::default()), &out)?;
            Ok(0)
        }
        Command::Family { lambda, symbolic, out } => {
            let params = if symbolic {
                FamilyParams::symbolic(Family::Table2)
            } else {
                let values = parse_lambda(lambda.as_deref().unwrap_or_default())?;
                FamilyParams::numeric(Family::Table2, &values).map_err(|e| fail(PARSE, format!("--lambda: {e}")))?
            };
            let s = family_structure(&params).context("building the family")?;
            render(&Report::build(&s, Execution::default()), &out)?;
            Ok(0)
        }
        Command::VerifyPaper { output } => {
            let checks = verify_family(Execution::default());
            let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut text = String::new();
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    text += &format!("{:<width$} {status}\n", c.name);
                } else {
                    text += &format!("{:<width$} {status}  ({})\n", c.name, c.detail);
                }
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            text += &format!("{} checks, {failed} failed\n", checks.len());
            emit(&text, output.as_deref())?;
            Ok(if failed == 0 { 0 } else { INTERNAL })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
