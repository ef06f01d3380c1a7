use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use invsemi::fixtures;
use invsemi::irreps::parse_supplied;
use invsemi::report::{self, FieldChoice, Input, Options, VerdictStatus};
use invsemi::semigroup::DEFAULT_ELEMENT_CAP;
use invsemi::{Error, Result};

/// Conjugacy classes and irreducible representations of finite inverse
/// semigroups of partial permutations.
#[derive(Parser)]
#[command(name = "invsemi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate, classify and decompose; write a JSON report.
    Analyze(RunArgs),
    /// Emit the generator file of a built-in family (rook-n, sym-n, chain-n, random-n).
    Builtin {
        name: String,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of generators for random-n.
        #[arg(long, default_value_t = 3)]
        gens: usize,
    },
    /// Run every executable property and report each one.
    Verify(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Generator file (JSON).
    #[arg(long, required_unless_present = "builtin", conflicts_with = "builtin")]
    input: Option<PathBuf>,
    /// Use a built-in family instead of a file.
    #[arg(long)]
    builtin: Option<String>,
    /// Where to write the JSON report.
    #[arg(long)]
    output: Option<PathBuf>,
    /// `q` for the rationals or `fp:P` for GF(P).
    #[arg(long, default_value = "q")]
    field: String,
    /// Supplied irreducible representations (JSON).
    #[arg(long)]
    reps: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
    /// Seed for random-n built-ins; echoed into the report.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of generators for random-n built-ins.
    #[arg(long, default_value_t = 3)]
    gens: usize,
    #[arg(long)]
    skip_reps: bool,
}

impl RunArgs {
    fn resolve(&self) -> Result<(Input, Options)> {
        let input = match (&self.input, &self.builtin) {
            (Some(path), _) => Input::read(path)?,
            (None, Some(name)) => {
                Input::from_file(fixtures::builtin(name, self.seed.unwrap_or(0), self.gens)?)
            }
            (None, None) => return Err(Error::Input("--input is required".into())),
        };
        let reps = match &self.reps {
            Some(path) => Some(parse_supplied(&read_text(path)?)?),
            None => None,
        };
        let options = Options {
            field: self.field.parse::<FieldChoice>()?,
            reps,
            cap: self.cap,
            seed: self.seed,
            skip_reps: self.skip_reps,
        };
        Ok((input, options))
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze(args) => {
            let (input, options) = args.resolve()?;
            let report = report::analyze(&input, &options)?;
            if let Some(path) = &args.output {
                write_text(path, &report.to_json())?;
            }
            print!("{}", report.summary());
            Ok(u8::from(report.verdict.status == VerdictStatus::Fail))
        }
        Command::Builtin {
            name,
            output,
            seed,
            gens,
        } => {
            let file = fixtures::builtin(&name, seed, gens)?;
            let mut json = file.to_json();
            json.push('\n');
            match output {
                Some(path) => write_text(&path, &json)?,
                None => print!("{json}"),
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let (input, options) = args.resolve()?;
            let report = report::verify(&input, &options)?;
            if let Some(path) = &args.output {
                write_text(path, &report.to_json())?;
            }
            print!("{}", report.summary());
            Ok(u8::from(!report.passed))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
