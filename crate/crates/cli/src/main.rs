use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use reclift::recollement::EmbeddingMode;
use reclift_cli::{run, Command, Corruption, Format, Input, Options};

/// Verifies recollements of module categories over finite fields and their
/// lifts to homotopy categories.
#[derive(Parser, Debug)]
#[command(name = "reclift", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Built-in instance: dualnumbers, kA2, t2-dualnumbers, cycle2, morn:<n>:<base>.
    #[arg(long, global = true, conflicts_with = "spec")]
    preset: Option<String>,

    /// Instance spec file (see docs/spec-format.md).
    #[arg(long, global = true)]
    spec: Option<PathBuf>,

    #[arg(long, global = true, env = "RECLIFT_SEED")]
    seed: Option<u64>,

    /// fast | thorough
    #[arg(long, global = true)]
    mode: Option<EmbeddingMode>,

    #[arg(long, global = true)]
    degree: Option<usize>,

    /// Largest dimension of random sample modules.
    #[arg(long, global = true)]
    dim_bound: Option<usize>,

    /// Override the idempotent of an idempotent instance (e.g. `e1`, `e1+e2`).
    #[arg(long, global = true)]
    idempotent: Option<String>,

    /// Negative control: `zero-inclusion` replaces i by the zero functor.
    #[arg(long, global = true)]
    corrupt: Option<Corruption>,

    /// json | md
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Gorenstein profile of the algebra and of the instance's three algebras.
    Analyze,
    /// Gorenstein projectivity of a module, with cross-checks.
    Gp { module: String },
    /// Cofibrant and fibrant replacements with certificates.
    Approx { module: String },
    /// dim Ext^n(x, y).
    Ext { x: String, y: String, n: usize },
    /// Dimension of the stable Hom space.
    StableHom { x: String, y: String },
    /// Abelian-level recollement axioms on the sample suite.
    Recollement {
        #[command(subcommand)]
        action: Verify,
    },
    /// Setup, conditions (i), (ii), (ii)' and the stable report.
    Lift {
        #[command(subcommand)]
        action: Verify,
    },
    /// Degree-bounded stratifying check for an idempotent instance.
    Cps {
        /// Idempotent, same as --idempotent.
        #[arg(value_name = "E")]
        e: Option<String>,
    },
    /// Re-run the witnesses of a saved JSON report.
    Replay { report: PathBuf },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Verify {
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let mut opts = Options {
        seed: g.seed,
        mode: g.mode,
        degree: g.degree,
        dim_bound: g.dim_bound,
        idempotent: g.idempotent,
        corrupt: g.corrupt,
    };
    let command = match cli.command {
        Cmd::Analyze => Command::Analyze,
        Cmd::Gp { module } => Command::Gp(module),
        Cmd::Approx { module } => Command::Approx(module),
        Cmd::Ext { x, y, n } => Command::Ext(x, y, n),
        Cmd::StableHom { x, y } => Command::StableHom(x, y),
        Cmd::Recollement { .. } => Command::RecollementVerify,
        Cmd::Lift { .. } => Command::LiftVerify,
        Cmd::Cps { e } => {
            if e.is_some() {
                opts.idempotent = e;
            }
            Command::Cps
        }
        Cmd::Replay { report } => Command::Replay(report),
    };
    let input = match (g.preset, g.spec) {
        (Some(p), _) => Some(Input::Preset(p)),
        (None, Some(s)) => Some(Input::File(s)),
        (None, None) => None,
    };
    let report = match run(&command, input.as_ref(), &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.emit(g.format);
    match &g.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
