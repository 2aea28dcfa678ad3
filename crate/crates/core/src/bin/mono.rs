use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monodromy::commands::{self, GenOptions, Options, Output, EXIT_MALFORMED};
use monodromy::ring::RingDescriptor;

/// Exact computations with monodromy tuples of polynomial maps.
#[derive(Parser)]
#[command(name = "mono", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Instance file; standard input when absent.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Q, Z, Fp:<p> or Zn:<n>. For `gen` the coefficient ring, otherwise
    /// reinterprets the instance.
    #[arg(long, global = true)]
    ring: Option<RingDescriptor>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the monodromy at infinity as a matrix instance.
    Compose,
    /// Recover the local monodromies from a matrix instance.
    Reconstruct,
    /// Run the invariant checks on one instance.
    Verify,
    /// Fixed space at infinity, invariants and, over a field, the dimension chain.
    Invariants,
    /// Cohomology operators (inverse transposes).
    Dualize,
    /// Exact-sequence consistency and the vanishing criterion.
    Seqcheck,
    /// Intersection form from (L, M), or monodromy from (L, S).
    Seifert,
    /// Emit a random valid tuple instance.
    Gen {
        /// Number of summands, each of size 2 unless --sizes is given.
        #[arg(long)]
        t: Option<usize>,
        /// Summand sizes, e.g. 2,2,1.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1)]
        degree: u32,
        /// Over Z, draw summands with torsion.
        #[arg(long)]
        torsion: bool,
    },
    /// Emit a worked example: quartic, quartic-sequence or degenerate-seifert.
    Example { name: String },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, String> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<Output, String> {
    let c = cli.common;
    let opts = Options { pretty: c.pretty, ring: c.ring.clone(), seed: c.seed };
    let with_input = |f: fn(&str, &Options) -> Output| read_input(&c.input).map(|text| f(&text, &opts));
    match cli.command {
        Command::Compose => with_input(commands::cmd_compose),
        Command::Reconstruct => with_input(commands::cmd_reconstruct),
        Command::Verify => with_input(commands::cmd_verify),
        Command::Invariants => with_input(commands::cmd_invariants),
        Command::Dualize => with_input(commands::cmd_dualize),
        Command::Seqcheck => with_input(commands::cmd_seqcheck),
        Command::Seifert => with_input(commands::cmd_seifert),
        Command::Gen { t, sizes, degree, torsion } => {
            let sizes = match (t, sizes) {
                (_, Some(s)) if t.is_some_and(|t| t != s.len()) => return Err("--t disagrees with --sizes".into()),
                (_, Some(s)) => s,
                (Some(t), None) => vec![2; t],
                (None, None) => return Err("gen needs --t or --sizes".into()),
            };
            let ring = c.ring.unwrap_or(RingDescriptor::Rationals);
            Ok(commands::cmd_gen(&GenOptions { ring, degree, sizes, torsion }, &opts))
        }
        Command::Example { name } => Ok(commands::cmd_example(&name, &opts)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(msg) => {
            eprintln!("mono: {msg}");
            ExitCode::from(EXIT_MALFORMED as u8)
        }
    }
}
