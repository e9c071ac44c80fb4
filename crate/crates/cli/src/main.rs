//! `kbinom`: command-line access to binomial-equivalence computations.

mod commands;
mod error;
mod report;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kbinomial::Budget;

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "kbinom",
    version,
    about = "Binomial coefficients of words and k-binomial equivalence"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Maximum number of words any enumeration may visit.
    #[arg(long, global = true, env = "KBINOMIAL_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Alphabet size.
    #[arg(long)]
    pub m: usize,
    pub word: String,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceChoice {
    /// Greedy least sequence satisfying D1-D3.
    Minimal,
    /// 2·8^(8^n).
    Tower,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    /// Which growth sequence to use.
    #[arg(long, value_enum, default_value = "minimal")]
    pub sequence: SequenceChoice,
    /// Explicit comma-separated sequence terms; overrides --sequence.
    #[arg(long)]
    pub terms: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ll,
    Sing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Published,
    Literal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of occurrences of v as a scattered subword of u.
    Binom {
        #[arg(long)]
        m: usize,
        u: String,
        v: String,
    },
    /// All coefficients binom(w, x) for 1 <= |x| <= k.
    Signature {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        word: String,
    },
    /// Whether u and v are k-binomially equivalent.
    Equiv {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        u: String,
        v: String,
    },
    /// Parikh matrix of a binary word.
    ParikhMatrix {
        #[arg(long, default_value_t = 2)]
        m: usize,
        word: String,
    },
    /// Closure of a word under the 2-switch relation.
    SwitchClass(WordArgs),
    /// The 2-binomial class of a word, generated by adjacent exchanges.
    Class2 {
        #[command(flatten)]
        word: WordArgs,
        /// Write every explored tree edge as JSON lines to this file.
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// Exchanges rebuilding a word from its sorted representative.
    Trace(WordArgs),
    /// Integer coordinates of a signed word, e.g. "1.2.3'.2.3.1'".
    Phi(WordArgs),
    /// Commutator normal form of a word.
    NormalForm(WordArgs),
    /// Number of k-binomial classes of words of length n.
    Census {
        #[command(flatten)]
        args: CensusArgs,
        /// Also list every class.
        #[arg(long)]
        classes: bool,
    },
    /// Lexicographically least element of every class.
    Ll(CensusArgs),
    /// Words alone in their class.
    Sing(CensusArgs),
    /// Number of classes among words with a given Parikh vector, e.g. "2,2".
    FParikh {
        #[arg(long, default_value_t = 2)]
        k: usize,
        parikh: String,
    },
    /// Lower and upper product bounds around f(x).
    Bounds { parikh: String },
    /// The word rho(p, n) in run-length form.
    Rho {
        #[arg(long)]
        p: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        seq: SequenceArgs,
    },
    /// Check conditions D1-D3 on a sequence.
    ValidateSeq {
        /// Terms, comma or space separated.
        #[arg(required = true, num_args = 1..)]
        terms: Vec<String>,
    },
    /// The greedy least sequence satisfying D1-D3.
    MinSeq {
        #[arg(long)]
        count: usize,
    },
    /// Number of blocks of a word.
    Nb(WordArgs),
    /// Whether a word is alone in its k-binomial class.
    IsSingleton {
        #[arg(long, required_unless_present = "rho")]
        m: Option<usize>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(required_unless_present = "rho", conflicts_with = "rho")]
        word: Option<String>,
        /// Test rho(p, n) over the minimal sequence instead, given as "p,n".
        #[arg(long)]
        rho: Option<String>,
    },
    /// Exhaustive domination check around rho(p, n).
    Prop54 {
        #[arg(long)]
        p: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        seq: SequenceArgs,
    },
    /// Approximate Nerode class counts of a language slice.
    Automaticity {
        #[arg(long, value_enum, default_value = "ll")]
        kind: Kind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Cutoff length C.
        #[arg(long)]
        cutoff: usize,
        /// Depths to report, comma separated; default 1..=C.
        #[arg(long)]
        t: Option<String>,
        #[arg(long, value_enum, default_value = "published")]
        convention: Convention,
    },
    /// Regenerate every reference table in one run.
    SeedTables,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.map(Budget).unwrap_or_default();
    match run(&cli, budget) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, budget: Budget) -> Result<(), error::CliError> {
    let report = commands::execute(&cli.command, budget)?;
    let mut buf = Vec::new();
    report.render(cli.format, &mut buf)?;
    match &cli.output {
        Some(path) => File::create(path)?.write_all(&buf)?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(&buf)?;
            lock.flush()?;
        }
    }
    Ok(())
}
