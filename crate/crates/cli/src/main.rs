//! `actop`: queries and verification reports for action operads.
//!
//! Exit status: 0 success, 1 verification failure, 2 inconclusive under
//! `--strict`, 3 input error.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use actop::rewrite::DEFAULT_BUDGET;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use commands::{Report, Status};

#[derive(Parser)]
#[command(name = "actop", version, about = "Compute with action operads and check their laws")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OperadKind {
    Trivial,
    Sym,
    Braid,
    Cactus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Instance to compute in.
    #[arg(long, value_enum)]
    pub operad: Option<OperadKind>,
    /// Longest intermediate word in the rewrite search (default: longest input + 6).
    #[arg(long)]
    pub max_len: Option<usize>,
    /// States the rewrite search may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Treat an inconclusive outcome as a failure (exit 2).
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Underlying permutation of an element.
    Pi {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        element: String,
    },
    /// Group product `a·b` in Λ(n).
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        a: String,
        b: String,
    },
    /// Block sum of elements of the given arities.
    Beta {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        arities: Vec<usize>,
        elements: Vec<String>,
    },
    /// Diagonal of an element at block sizes.
    Delta {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        element: String,
    },
    /// Operadic composite `μ(g; h₁,…,hₙ)`.
    Mu {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        arities: Vec<usize>,
        g: String,
        hs: Vec<String>,
    },
    /// Decide equality of two elements.
    Equal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// Print the rewrite path of an Equal verdict.
        #[arg(long)]
        explain: bool,
        /// Check a saved rewrite path instead of searching.
        #[arg(long)]
        replay: Option<PathBuf>,
        a: String,
        b: String,
    },
    /// Check the action operad laws on enumerated or sampled tuples.
    Axioms {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        cfg: CheckArgs,
    },
    #[command(subcommand)]
    Cactus(CactusCmd),
    #[command(subcommand)]
    Borel(BorelCmd),
    #[command(subcommand)]
    Club(ClubCmd),
    #[command(subcommand)]
    Multicat(MulticatCmd),
    #[command(subcommand)]
    Present(PresentCmd),
}

#[derive(Args, Clone, Debug)]
pub struct CheckArgs {
    /// Largest arity index.
    #[arg(long, default_value_t = 3)]
    pub max_arity: usize,
    /// Largest total weight of a case (default: the max arity).
    #[arg(long)]
    pub max_total: Option<usize>,
    /// Word length used to enumerate infinite groups.
    #[arg(long, default_value_t = 2)]
    pub max_word_len: usize,
    /// Per law, cases beyond this count are sampled.
    #[arg(long, default_value_t = 20_000)]
    pub max_cases: usize,
    #[arg(long, default_value_t = 0x5eed_1a7e)]
    pub seed: u64,
}

#[derive(Subcommand)]
pub enum CactusCmd {
    /// The interval reversal ŝ(p,q) in Σ_n.
    Shat {
        #[command(flatten)]
        common: Common,
        p: usize,
        q: usize,
        n: usize,
    },
    /// The commutor σ_{m,n} in J_{m+n}.
    Commutor {
        #[command(flatten)]
        common: Common,
        m: usize,
        n: usize,
    },
    /// Defining relations of J_n.
    Relations {
        #[command(flatten)]
        common: Common,
        n: usize,
    },
    /// δ(s(p,q)) at block sizes.
    DeltaGen {
        #[command(flatten)]
        common: Common,
        p: usize,
        q: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Commutor involution, coboundary square and δ-coherence up to an arity.
    Coboundary {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
}

#[derive(Subcommand)]
pub enum BorelCmd {
    /// Morphisms between two objects `[e;x⃗] → [e;y⃗]`, one per line.
    Hom {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cat: PathBuf,
        /// Comma-separated object names.
        #[arg(long, allow_hyphen_values = true)]
        src: String,
        #[arg(long, allow_hyphen_values = true)]
        tgt: String,
        /// Word length used to enumerate an infinite group.
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Composite `second ∘ first` of morphisms written `g | f1,...`.
    Compose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cat: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        src: String,
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Contractibility of EΛ(n) and freeness of the right action.
    Infinity {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
pub enum ClubCmd {
    /// Round trip through the club BΛ and back.
    Check {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        cfg: CheckArgs,
    },
    /// The Borel construction as a pullback over the symmetric one.
    Pullback {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cat: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum MulticatCmd {
    /// Validate a multicategory file, and optionally a multifunctor out of it.
    Validate {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
        #[arg(long, requires = "target")]
        functor: Option<PathBuf>,
        #[arg(long, requires = "functor")]
        target: Option<PathBuf>,
    },
    /// Value sets of the lift of a profunctor to the Borel constructions.
    Lift {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        prof: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_arity: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Coboundary,
    Symmetric,
}

#[derive(Subcommand)]
pub enum PresentCmd {
    /// Evaluate each relation of a presentation in an instance.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// `name=element`, once per generator.
        #[arg(long)]
        interp: Vec<String>,
    },
}

fn common_of(cmd: &Cmd) -> &Common {
    match cmd {
        Cmd::Pi { common, .. }
        | Cmd::Mul { common, .. }
        | Cmd::Beta { common, .. }
        | Cmd::Delta { common, .. }
        | Cmd::Mu { common, .. }
        | Cmd::Equal { common, .. }
        | Cmd::Axioms { common, .. } => common,
        Cmd::Cactus(
            CactusCmd::Shat { common, .. }
            | CactusCmd::Commutor { common, .. }
            | CactusCmd::Relations { common, .. }
            | CactusCmd::DeltaGen { common, .. }
            | CactusCmd::Coboundary { common, .. },
        ) => common,
        Cmd::Borel(
            BorelCmd::Hom { common, .. } | BorelCmd::Compose { common, .. } | BorelCmd::Infinity { common, .. },
        ) => common,
        Cmd::Club(ClubCmd::Check { common, .. } | ClubCmd::Pullback { common, .. }) => common,
        Cmd::Multicat(MulticatCmd::Validate { common, .. } | MulticatCmd::Lift { common, .. }) => common,
        Cmd::Present(PresentCmd::Check { common, .. }) => common,
    }
}

fn emit(report: &Report, format: Format) {
    let body = match format {
        Format::Text => report.text.trim_end().to_string(),
        Format::Structured => serde_json::to_string_pretty(&report.json).expect("values serialize"),
    };
    if !body.is_empty() {
        // a closed pipe downstream is not an error
        let _ = writeln!(std::io::stdout().lock(), "{body}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return ExitCode::SUCCESS;
            }
            eprintln!("{}", Cli::command().render_usage());
            return ExitCode::from(3);
        }
    };
    let common = common_of(&cli.cmd).clone();
    match commands::run(cli.cmd, &common) {
        Ok(report) => {
            emit(&report, common.format);
            ExitCode::from(match report.status {
                Status::Ok => 0,
                Status::Fail => 1,
                Status::Inconclusive if common.strict => 2,
                Status::Inconclusive => 0,
            })
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
