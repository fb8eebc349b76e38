//! `mmatrix`: generate M-matrices, inspect their orthogonal numbers, and
//! export the derived block designs and bipartite graphs.
//!
//! Exit codes: 0 success; 1 I/O, internal or verification failure; 2
//! inadmissible order or unsupported flag combination; 3 degenerate
//! design; 4 design whose associate classes do not form an association
//! scheme (the report, with its witness, is still written).

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mmatrix::{
    analyze, base_matrix, bipartite_graph, build_design, m_matrix, validate_pbib, verify_range,
    Error, MatrixType, SignConvention,
};

#[derive(Parser)]
#[command(
    name = "mmatrix",
    version,
    about = "M-matrices of Type I and II, their orthogonal numbers, designs and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the modular base matrix or the derived sign matrix.
    Generate {
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_enum, default_value_t = Stage::Sign)]
        stage: Stage,
        #[arg(long, value_parser = parse_convention, default_value = "standard")]
        convention: SignConvention,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Theoretical and realized orthogonal numbers.
    Ortho {
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_parser = parse_convention, default_value = "standard")]
        convention: SignConvention,
        /// Include the full Gram matrix M·Mᵀ.
        #[arg(long)]
        gram: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symmetric PBIB design with associate classes and identity checks.
    Design {
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_parser = parse_convention, default_value = "standard")]
        convention: SignConvention,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bipartite treatment/block graph (DOT by default).
    Graph {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every invariant check over a range of orders.
    Verify {
        /// Restrict to one matrix type; both are checked when omitted.
        #[arg(long = "type", value_parser = parse_type)]
        mtype: Option<MatrixType>,
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long)]
        max: usize,
        /// List every check with its detail, not only failures.
        #[arg(long)]
        verbose: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Published parameter values that disagree with computation.
    Errata {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "type", value_parser = parse_type)]
    mtype: MatrixType,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stage {
    Base,
    Sign,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

fn parse_type(s: &str) -> Result<MatrixType, String> {
    s.parse()
}

fn parse_convention(s: &str) -> Result<SignConvention, String> {
    s.parse()
}

enum Failure {
    Library(Error),
    Usage(String),
    Io(PathBuf, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(..) => 1,
            Failure::Library(e) => match e {
                Error::InadmissibleOrder { .. }
                | Error::DegenerateOrder { .. }
                | Error::WrongConvention
                | Error::WrongType { .. } => 2,
                Error::DegenerateDesign { .. } => 3,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Io(path, e) => format!("cannot write {}: {e}", path.display()),
            Failure::Library(e) => e.to_string(),
        }
    }
}

/// A rendered document and the exit code to report once it is written.
struct Emitted {
    text: String,
    code: u8,
}

fn ok(text: String) -> Result<Emitted, Failure> {
    Ok(Emitted { text, code: 0 })
}

fn pick(
    format: Option<Format>,
    default: Format,
    allowed: &[Format],
    command: &str,
) -> Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<String> = allowed
            .iter()
            .map(|a| format!("{a:?}").to_lowercase())
            .collect();
        Err(Failure::Usage(format!(
            "format {} is not available for {command} (use {})",
            format!("{f:?}").to_lowercase(),
            names.join(", ")
        )))
    }
}

fn run(command: Command) -> (Option<PathBuf>, Result<Emitted, Failure>) {
    use Format::*;
    match command {
        Command::Generate {
            order,
            stage,
            convention,
            output,
        } => (
            output.out,
            (|| {
                let f = pick(output.format, Text, &[Text, Json, Csv], "generate")?;
                let base = base_matrix(order.n, order.mtype)?;
                ok(match stage {
                    Stage::Base => render::base(&base, f),
                    Stage::Sign => render::sign(&mmatrix::sign_matrix(&base, convention), f),
                })
            })(),
        ),
        Command::Ortho {
            order,
            convention,
            gram,
            output,
        } => (
            output.out,
            (|| {
                let f = pick(output.format, Text, &[Text, Json], "ortho")?;
                let m = m_matrix(order.n, order.mtype, convention)?;
                ok(render::ortho(&analyze(&m)?, convention, gram, f))
            })(),
        ),
        Command::Design {
            order,
            convention,
            output,
        } => (
            output.out,
            (|| {
                let f = pick(output.format, Text, &[Text, Json], "design")?;
                let m = m_matrix(order.n, order.mtype, convention)?;
                let d = build_design(&m)?;
                let report = validate_pbib(&d);
                let code = if !report.scheme_valid {
                    4
                } else if !report.pass {
                    1
                } else {
                    0
                };
                Ok(Emitted {
                    text: render::design(&m, &d, &report, f),
                    code,
                })
            })(),
        ),
        Command::Graph { order, output } => (
            output.out,
            (|| {
                let f = pick(output.format, Dot, &[Dot, Text, Json], "graph")?;
                let m = m_matrix(order.n, order.mtype, SignConvention::Standard)?;
                let inc = mmatrix::incidence(&m)?;
                ok(render::graph(&m, &bipartite_graph(&inc), f))
            })(),
        ),
        Command::Verify {
            mtype,
            min,
            max,
            verbose,
            output,
        } => (
            output.out,
            (|| {
                let f = pick(output.format, Text, &[Text, Json], "verify")?;
                let types = mtype.map_or(MatrixType::ALL.to_vec(), |t| vec![t]);
                let mut reports = Vec::new();
                for t in types {
                    reports.extend(verify_range(t, min, max)?);
                }
                let code = if reports.iter().all(|r| r.passed()) {
                    0
                } else {
                    1
                };
                Ok(Emitted {
                    text: render::verify(&reports, verbose, f),
                    code,
                })
            })(),
        ),
        Command::Errata { output } => (
            output.out,
            (|| {
                let f = pick(output.format, Text, &[Text, Json], "errata")?;
                ok(render::errata(&mmatrix::errata::errata()?, f))
            })(),
        ),
    }
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.clone(), e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Io("<stdout>".into(), e))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, result) = run(cli.command);
    let outcome = result.and_then(|emitted| {
        write_out(out.as_ref(), &emitted.text)?;
        Ok(emitted.code)
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
