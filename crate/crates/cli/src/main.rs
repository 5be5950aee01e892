mod commands;
mod limits;
mod render;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use limits::Limits;

#[derive(Parser, Debug)]
#[command(name = "superschur", version, about = "Schur functions in superspace")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(flatten)]
    limits: LimitArgs,

    /// Worker threads for parallel work (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Ceiling on the degree n (also read from SUPERSCHUR_MAX_N).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Ceiling on the fermionic degree m.
    #[arg(long, global = true)]
    max_m: Option<usize>,
    /// Ceiling on the number of variables N.
    #[arg(long, global = true)]
    max_vars: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a Schur family element in a basis.
    Expand {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "m")]
        basis: String,
        /// key or pieri
        #[arg(long, default_value = "key")]
        route: String,
    },
    /// Terms of a Pieri rule.
    Pieri {
        /// One of sstar_h, sbar_e, sstar_htilde, sbar_etilde, sbarstar_h,
        /// s_e, s_h, sbarstar_htilde, s_etilde, s_ptilde.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        ell: usize,
    },
    /// Kostka matrix at degree (n|m).
    Kostka {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// K or Kbar
        #[arg(long, default_value = "Kbar")]
        which: String,
    },
    /// Littlewood-Richardson coefficients of X_Γ X_Ω.
    Lr {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        omega: String,
        #[arg(long, default_value = "s")]
        family: String,
    },
    /// Tableaux of shape Λ/Ω and a given weight.
    Tableaux {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = ";")]
        omega: String,
        /// Comma-separated letters; fermionic ones end in "~", as in 1~,0~,2,1,1.
        #[arg(long)]
        weight: String,
        /// s or sbar; both when omitted.
        #[arg(long)]
        family: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        ell: usize,
        #[arg(long, default_value_t = 2)]
        nx: usize,
        #[arg(long, default_value_t = 2)]
        ny: usize,
        #[arg(long, default_value_t = 3)]
        deg: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random instances per identity.
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// Restrict the appendix suite to one identity id.
        #[arg(long)]
        identity: Option<String>,
    },
}

fn run(cli: Cli) -> Result<String, commands::CliError> {
    let limits = Limits::resolve(cli.limits.max_n, cli.limits.max_m, cli.limits.max_vars)?;
    let f = cli.format;
    match cli.command {
        Command::Expand { family, lambda, basis, route } => {
            commands::expand(&limits, f, &family, &lambda, &basis, &route)
        }
        Command::Pieri { kind, lambda, ell } => commands::pieri(f, &kind, &lambda, ell),
        Command::Kostka { n, m, which } => commands::kostka(&limits, f, n, m, &which),
        Command::Lr { gamma, omega, family } => commands::lr(&limits, f, &gamma, &omega, &family),
        Command::Tableaux { lambda, omega, weight, family } => {
            commands::tableaux(f, &lambda, &omega, &weight, family.as_deref())
        }
        Command::Verify { suite, n, m, ell, nx, ny, deg, seed, count, identity } => {
            let bounds = verify::Bounds { n, m, ell, nx, ny, deg, seed, count, identity };
            verify::run(&limits, f, suite, &bounds)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        // the global pool can only be set once; a failure here is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(commands::CliError::Failed(out)) => {
            emit(&out);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
