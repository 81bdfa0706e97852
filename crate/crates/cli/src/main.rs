use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

/// Exact algebra over F_p(t): iterative derivations, p^m-rational ideals,
/// S-unit congruence witnesses and convergence reports.
#[derive(Parser, Debug)]
#[command(name = "hasse", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PrimeArg {
    /// The characteristic p.
    #[arg(short, value_name = "P")]
    p: u64,
}

#[derive(Args, Debug)]
struct IdealArgs {
    #[command(flatten)]
    prime: PrimeArg,
    /// Exponent m: coefficients are tested against K^(p^m).
    #[arg(short, value_name = "M", default_value_t = 1)]
    m: u32,
    /// Number of variables; defaults to one more than the largest index used.
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the i-th iterative derivation D^(i) to an element of F_p(t).
    Derive {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(short, value_name = "I")]
        i: u64,
        expr: String,
    },
    /// Project an element onto K^(p^m) with Delta_m.
    Delta {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(short, value_name = "M")]
        m: u32,
        expr: String,
    },
    /// Binomial coefficient C(I, J) mod P by base-p digits.
    Lucas { i: u64, j: u64, p: u64 },
    /// The p^m-th root of an element, when it is a p^m-th power.
    PmRoot {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(short, value_name = "M")]
        m: u32,
        expr: String,
    },
    /// Test whether the ideal generated by FILE is stable under D^(i), 0 < i < p^m.
    IdealRational {
        #[command(flatten)]
        ideal: IdealArgs,
        file: PathBuf,
    },
    /// Generators with p^m-th power coefficients for the ideal in FILE.
    IdealDescend {
        #[command(flatten)]
        ideal: IdealArgs,
        file: PathBuf,
    },
    /// Intersect the ideals in two generator files.
    IdealIntersect {
        #[command(flatten)]
        ideal: IdealArgs,
        file: PathBuf,
        other: PathBuf,
    },
    /// Vanishing ideal of projective points, e.g. "t^2:1; 1:0".
    Vanishing {
        #[command(flatten)]
        prime: PrimeArg,
        /// Also test the result for stability with this m.
        #[arg(short, value_name = "M")]
        m: Option<u32>,
        points: String,
    },
    /// Search for places S detecting O_T^*/(O_T^*)^m.
    CspSearch {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(short, value_name = "M")]
        m: u64,
        /// Comma-separated places of T, including inf.
        #[arg(long = "T", value_name = "PLACES")]
        t: String,
        #[arg(long, default_value_t = 4)]
        deg_bound: u32,
    },
    /// The filtration U_n = H ∩ (K^*)^(p^n) of H = <gens>.
    Filtration {
        #[command(flatten)]
        prime: PrimeArg,
        /// Comma-separated generators.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        gens: String,
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Valuations of x_n = (P^n + a)/(P^(2n) + b) + alpha against its limits.
    Exm0 {
        #[arg(short, value_name = "P", default_value_t = 2)]
        p: u64,
        #[arg(long, default_value = "t")]
        a: String,
        #[arg(long, default_value = "1")]
        b: String,
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value_t = 6)]
        n_max: u64,
    },
    /// Valuations of y_n = t^(p^(n!)) at places where t is a unit.
    Exm1 {
        #[arg(short, value_name = "P", default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        n_max: u64,
        /// Comma-separated places; defaults to t - 1 and the first place of degree 2.
        #[arg(long)]
        places: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
