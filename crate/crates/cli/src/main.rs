use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use arx_core::{FieldSpec, Fp, Rational};

mod commands;
mod dot;

#[derive(Parser)]
#[command(name = "arx", version, about = "Exact Auslander-Reiten computations over truncated linear categories")]
pub struct Cli {
    /// Builtin category name or path to category JSON / quiver text
    #[arg(long, global = true, default_value = "linear:8")]
    pub cat: String,
    /// `rational` or `fp:<p>`
    #[arg(long, global = true, default_value = "rational")]
    pub field: String,
    #[arg(long, global = true, default_value_t = 3)]
    pub margin: usize,
    /// Human-readable tables instead of JSON
    #[arg(long, global = true)]
    pub pretty: bool,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build, validate or inspect a category
    #[command(subcommand)]
    Cat(CatCmd),
    /// Module operations; modules are catalog names (P:a, I:a, S:a, X:i:j) or module JSON files
    #[command(subcommand)]
    Mod(ModCmd),
    /// Run a verification suite
    Verify { suite: String },
    /// DOT diagrams
    #[command(subcommand)]
    Dot(DotCmd),
}

#[derive(Subcommand)]
pub enum CatCmd {
    /// Write the category JSON
    Build { spec: Option<String> },
    /// Check the category laws
    Validate { spec: Option<String> },
    /// dim C(a, j) for every object a, with a horizon verdict
    Growth { spec: Option<String> },
}

#[derive(Subcommand)]
pub enum ModCmd {
    Define { module: String },
    Hom { src: String, dst: String },
    Ext { src: String, dst: String },
    Tau { module: String },
    Tauminus { module: String },
    Ass { module: String },
    Classify { module: String },
    Decompose { module: String },
}

#[derive(Subcommand)]
pub enum DotCmd {
    /// Truncated AR quiver of a linear quiver
    Arquiver,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli.field.parse::<FieldSpec>().and_then(|field| match field {
        FieldSpec::Rational => commands::run::<Rational>(&cli, field),
        FieldSpec::Prime { .. } => commands::run::<Fp>(&cli, field),
    });
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = output.render(cli.pretty);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if !output.notes.is_empty() {
        eprintln!("{}", output.notes.join("\n"));
    }
    ExitCode::from(output.status)
}
