use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hopfext::classify::EnumerationBudget;
use hopfext_cli::{run_command, CliError, Command, Flags, Format, InputDocument, Report};

#[derive(Parser)]
#[command(name = "hopfext", version, about = "Exact computations with bicrossed-product Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(clap::Args)]
struct Common {
    /// Input document (JSON); `-` reads standard input.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Re-express cocycle values in μ_M for a multiple M of the document modulus.
    #[arg(long)]
    modulus: Option<u32>,
    /// Dimension limit for the group-like oracle and Clifford simples.
    #[arg(long, default_value_t = 32)]
    max_dim: usize,
    /// Order limit for the group isomorphism test in `classify`.
    #[arg(long, default_value_t = 64)]
    iso_limit: usize,
    /// Maximum number of crossed homomorphisms examined by `enumerate`.
    #[arg(long, default_value_t = 100_000)]
    budget: usize,
    /// Largest |Γ|·|F| accepted by `enumerate`.
    #[arg(long, default_value_t = 64)]
    max_order: usize,
    /// Maximum number of triples returned by `enumerate`.
    #[arg(long, default_value_t = 1_000)]
    max_results: usize,
}

#[derive(Subcommand)]
enum Sub {
    /// Check the bialgebra axioms and solve for the antipode.
    Verify(Common),
    /// Group-likes, structurally and by brute force.
    Grouplikes(Common),
    /// Coalgebra type from the simple comodules.
    Type(Common),
    /// Fusion rules of the simple comodules and the Tambara-Yamagami rules.
    Fusion(Common),
    /// Validate a classification triple and build its Hopf algebra.
    Classify(Common),
    /// Tambara-Yamagami data of a triple with |F| = 2.
    Ty(Common),
    /// Enumerate triples for the groups and action of a triple document.
    Enumerate(Common),
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn run(cmd: Command, c: &Common) -> Result<Report, CliError> {
    let doc = InputDocument::parse(&read_input(&c.input)?)?;
    let flags = Flags {
        modulus: c.modulus,
        max_dim: c.max_dim,
        iso_limit: c.iso_limit,
        budget: EnumerationBudget {
            max_order: c.max_order,
            max_crossed_homs: c.budget,
            max_results: c.max_results,
        },
    };
    run_command(cmd, &doc, &flags)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, common) = match &cli.command {
        Sub::Verify(c) => (Command::Verify, c),
        Sub::Grouplikes(c) => (Command::Grouplikes, c),
        Sub::Type(c) => (Command::Type, c),
        Sub::Fusion(c) => (Command::Fusion, c),
        Sub::Classify(c) => (Command::Classify, c),
        Sub::Ty(c) => (Command::Ty, c),
        Sub::Enumerate(c) => (Command::Enumerate, c),
    };
    match run(cmd, common) {
        Ok(report) => {
            print!("{}", report.emit(common.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("hopfext: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
