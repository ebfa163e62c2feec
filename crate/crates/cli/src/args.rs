use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use curvezeta::curve::DEFAULT_BUDGET;
use num_bigint::BigInt;

const GRAMMAR: &str = "\
Curve expressions are homogeneous polynomials in x, y, z with integer
coefficients, reduced mod p:

  expr    := [+|-] term (('+' | '-') term)*
  term    := factor ('*' factor)*
  factor  := integer | var ['^' integer]
  var     := x | y | z

Whitespace is ignored. Juxtaposition is not multiplication: write
3*x^2*y, not 3x^2y.";

#[derive(Debug, Parser)]
#[command(
    name = "curvezeta",
    version,
    about = "Zeta functions of curves over finite fields from a few point counts",
    after_help = GRAMMAR
)]
pub struct Cli {
    /// Emit a JSON envelope on stdout instead of tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on point evaluations per brute-force count.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,

    /// Suppress info and warning diagnostics on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extend N_1..N_g to N_1..N_k through the zeta numerator.
    Bootstrap(BootstrapArgs),
    /// Coefficients c_0..c_2g of P(T) from N_1..N_g.
    Zeta(ZetaArgs),
    /// Count projective points of a plane curve by enumeration.
    Count(CountArgs),
    /// Count N_1..N_g, bootstrap to k and check against enumeration.
    Verify(VerifyArgs),
    /// Classify Weierstrass cubics over F_p and tabulate N_{p^r}.
    EcSurvey(SurveyArgs),
    /// Admissible elliptic curve cardinalities over F_q.
    Deuring(QArgs),
    /// Maximum number of points N_q(g) for g <= 3.
    Serre(QgArgs),
    /// Hasse-Weil-Serre bound q + 1 + g*floor(2*sqrt(q)).
    Hws(QgArgs),
    /// Check that N_s, N_2s, ... bootstraps over F_{q^s}.
    Subseq(SubseqArgs),
}

#[derive(Debug, Args)]
pub struct BootstrapArgs {
    #[arg(long)]
    pub q: u64,
    /// N_1..N_g, or N_1..N_2g with --basic.
    #[arg(
        long,
        value_delimiter = ',',
        num_args = 1,
        required = true,
        allow_hyphen_values = true
    )]
    pub counts: Vec<BigInt>,
    #[arg(long)]
    pub k: usize,
    /// Use N_1..N_2g and skip the functional equation.
    #[arg(long)]
    pub basic: bool,
    #[arg(long)]
    pub genus: Option<usize>,
    /// Exit 3 on WEIL_FAIL or NONINTEGRAL_C.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(
        long,
        value_delimiter = ',',
        num_args = 1,
        required = true,
        allow_hyphen_values = true
    )]
    pub counts: Vec<BigInt>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub curve: String,
    /// Extension degrees, `R` or `R1..R2` inclusive.
    #[arg(long, value_parser = parse_range)]
    pub r: RangeInclusive<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub curve: String,
    #[arg(long)]
    pub genus: usize,
    #[arg(long)]
    pub k: usize,
    /// Last degree to enumerate; defaults to k, capped by the budget.
    #[arg(long, value_name = "R")]
    pub check_upto: Option<u32>,
    /// Exit 3 on WEIL_FAIL or NONINTEGRAL_C.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct QArgs {
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Args)]
pub struct QgArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub g: u32,
}

#[derive(Debug, Args)]
pub struct SubseqArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(
        long,
        value_delimiter = ',',
        num_args = 1,
        required = true,
        allow_hyphen_values = true
    )]
    pub counts: Vec<BigInt>,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub k: usize,
}

fn parse_range(src: &str) -> Result<RangeInclusive<u32>, String> {
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match src.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let r = parse(src)?;
            (r, r)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!(
            "`{src}` is not a range of degrees starting at 1 or more"
        ));
    }
    Ok(lo..=hi)
}
