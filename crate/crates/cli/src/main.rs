use std::io::Write;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use colorlie_cli::{
    cmd_casimir, cmd_catalog, cmd_commutant, cmd_loop_check, cmd_report, cmd_validate, parse_modes, Outcome,
    Source, EXIT_INPUT,
};

#[derive(Parser)]
#[command(name = "colorlie", version, about = "Exact color Lie algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor laws, closure, antisymmetry and Jacobi identity.
    Validate {
        /// Spec file, or catalog:<name>.
        input: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Commutant spaces by degree.
    Commutant {
        input: String,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        degree: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Invariant form, inverse and Casimir of one degree.
    Casimir {
        input: String,
        #[arg(long)]
        degree: String,
        #[arg(long)]
        normalization: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Jacobi identity of the centrally extended loop algebra.
    LoopCheck {
        input: String,
        #[arg(long, value_parser = parse_modes, allow_hyphen_values = true, default_value = "-2..2")]
        modes: RangeInclusive<i64>,
        #[arg(long)]
        normalization: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Emit a built-in algebra as a spec file.
    Catalog {
        /// qn, z32-sl2 or osp.
        name: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Full report: validation, commutants, forms, Casimirs, roots, loop check.
    Report {
        input: String,
        #[arg(long, value_parser = parse_modes, allow_hyphen_values = true, default_value = "-2..2")]
        modes: RangeInclusive<i64>,
        #[arg(long)]
        normalization: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
}

fn emit(o: Outcome, out: Option<&str>) -> ExitCode {
    let mut code = o.code;
    match out {
        Some(path) if o.code != EXIT_INPUT => {
            if let Err(err) = std::fs::write(path, &o.text) {
                eprintln!("error: cannot write {path}: {err}");
                code = EXIT_INPUT;
            }
        }
        _ => {
            // a closed pipe is not an error worth reporting
            let _ = if o.code == EXIT_INPUT {
                std::io::stderr().write_all(o.text.as_bytes())
            } else {
                std::io::stdout().write_all(o.text.as_bytes())
            };
        }
    }
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match cli.command {
        Command::Validate { input, m, n } => emit(cmd_validate(&Source::parse(&input, m, n)), None),
        Command::Commutant { input, degree, all: _, m, n } => {
            emit(cmd_commutant(&Source::parse(&input, m, n), degree.as_deref()), None)
        }
        Command::Casimir { input, degree, normalization, m, n } => emit(
            cmd_casimir(&Source::parse(&input, m, n), &degree, normalization.as_deref()),
            None,
        ),
        Command::LoopCheck { input, modes, normalization, m, n } => emit(
            cmd_loop_check(&Source::parse(&input, m, n), modes, normalization.as_deref()),
            None,
        ),
        Command::Catalog { name, m, n, out } => emit(cmd_catalog(&name, m, n), out.as_deref()),
        Command::Report { input, modes, normalization, m, n, out } => emit(
            cmd_report(&Source::parse(&input, m, n), modes, normalization.as_deref()),
            out.as_deref(),
        ),
    }
}
