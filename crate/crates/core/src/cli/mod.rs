//! The `brauerkit` command line.

pub mod parse;
pub mod render;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::matrep::{dim_cap_from_env, rep_j_with_cap, rep_k_with_cap};
use crate::par::Exec;
use crate::semantics::{equal_sj, equal_sk, eval_iota, eval_kappa, extract_normal_form};
use crate::term::{NormalForm, Rewriter};
use crate::verify::{permutation_normal_forms, run_suite, Bounds, Suite};

pub use parse::{parse_arrow, parse_term};
pub use render::{render_diagram, render_sk};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "brauerkit", version, about = "Diagram monoids, normal forms and matrix representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of a term.
    Normalize {
        term: String,
        #[arg(long, value_enum, default_value_t = Engine::Both)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether two terms are equal.
    Eq {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Monoid::Sk)]
        monoid: Monoid,
    },
    /// Print the diagram of a term.
    Diag {
        term: String,
        #[arg(long, value_enum, default_value_t = DiagFormat::Ascii)]
        format: DiagFormat,
        /// Keep the count of circular components.
        #[arg(long)]
        sk: bool,
    },
    /// Print the matrix of an arrow term.
    Matrix {
        arrow: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        p: u32,
        #[arg(long, value_enum, default_value_t = SemiringKind::Int)]
        semiring: SemiringKind,
        /// Largest row or column count; defaults to BRAUERKIT_DIM_CAP or 4096.
        #[arg(long)]
        dim_cap: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_index: u32,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Print the normal forms of all permutation diagrams on n strands.
    Perm {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=8))]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Rewrite,
    Diagram,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DiagFormat {
    Ascii,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Monoid {
    Sk,
    Sj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SemiringKind {
    Int,
    Bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Nf,
    Group,
    Adjunction,
    Subsided,
    Faithful,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Nf => Suite::Nf,
            SuiteArg::Group => Suite::Group,
            SuiteArg::Adjunction => Suite::Adjunction,
            SuiteArg::Subsided => Suite::Subsided,
            SuiteArg::Faithful => Suite::Faithful,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DimensionCap { .. } => EXIT_CAP,
        Error::StepBudget(_) | Error::Io(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

fn show_nf(nf: &NormalForm, format: Format) -> String {
    match format {
        Format::Text => nf.to_string(),
        Format::Json => serde_json::to_string(nf).expect("serializable"),
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`,
/// and returns the exit status.
pub fn run(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cmd, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<i32> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match cmd {
        Command::Normalize {
            term,
            engine,
            format,
        } => {
            let t = parse_term(term)?;
            let rewrite = || Rewriter::default().normalize(&t);
            let extract = || extract_normal_form(&eval_kappa(&t));
            let nf = match engine {
                Engine::Rewrite => rewrite()?,
                Engine::Diagram => extract(),
                Engine::Both => {
                    let (r, x) = (rewrite()?, extract());
                    if r != x {
                        writeln!(err, "engines disagree: rewrite {r}, diagram {x}").map_err(io)?;
                        return Ok(EXIT_VERIFY);
                    }
                    r
                }
            };
            writeln!(out, "{}", show_nf(&nf, *format)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Eq {
            left,
            right,
            monoid,
        } => {
            let (t, u) = (parse_term(left)?, parse_term(right)?);
            let equal = match monoid {
                Monoid::Sk => equal_sk(&t, &u),
                Monoid::Sj => equal_sj(&t, &u),
            };
            writeln!(out, "{}", if equal { "equal" } else { "not equal" }).map_err(io)?;
            Ok(if equal { EXIT_OK } else { EXIT_NOT_EQUAL })
        }
        Command::Diag { term, format, sk } => {
            let t = parse_term(term)?;
            let text = match (format, sk) {
                (DiagFormat::Ascii, false) => render_diagram(&eval_iota(&t)),
                (DiagFormat::Ascii, true) => render_sk(&eval_kappa(&t)),
                (DiagFormat::Json, false) => eval_iota(&t).to_json() + "\n",
                (DiagFormat::Json, true) => eval_kappa(&t).to_json() + "\n",
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Matrix {
            arrow,
            p,
            semiring,
            dim_cap,
        } => {
            let f = parse_arrow(arrow)?;
            f.typ()?;
            let cap = dim_cap.unwrap_or_else(dim_cap_from_env);
            let json = match semiring {
                SemiringKind::Int => rep_k_with_cap(&f, *p as usize, cap)?.to_json(),
                SemiringKind::Bool => rep_j_with_cap(&f, *p as usize, cap)?.to_json(),
            };
            writeln!(out, "{json}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_len,
            max_index,
            seed,
        } => {
            let bounds = Bounds {
                max_len: *max_len,
                max_index: *max_index,
                seed: *seed,
            };
            let report = run_suite((*suite).into(), &bounds, Exec::default());
            write!(out, "{report}").map_err(io)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Perm { n } => {
            for nf in permutation_normal_forms(*n as usize) {
                writeln!(out, "{nf}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            code
        }
    }
}
