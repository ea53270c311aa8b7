//! Command-line surface. Numeric parameters are all optional at the clap
//! layer; each subcommand resolves flag > config file > default and
//! validates against the target operation's preconditions before dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "szego-lab",
    version,
    about = "Numerical experiments with weighted Szegő projections on the unit circle"
)]
pub struct Cli {
    /// Flat key=value config file; flags take precedence over its entries.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Write the artifact to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Artifact format; each subcommand has a natural default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the open interval of exponents p on which the weighted
    /// projection is bounded [JSON: {q0, p0}].
    Interval {
        /// Weight parameter, >= 0 (0 prints p0 as "inf").
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
    },

    /// Muckenhoupt clamp-ladder scan: arc quotients against a shrinking
    /// regularization, with fitted and predicted log-log slopes
    /// [CSV rows delta,quotient plus a JSON footer].
    ApScan {
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Lebesgue exponent, > 1.
        #[arg(long, allow_negative_numbers = true)]
        p: Option<f64>,
        /// Midpoint panels per dyadic block [default: 64].
        #[arg(long)]
        resolution: Option<usize>,
        /// Explicit clamp ladder, comma-separated and strictly decreasing
        /// [default: 2^-4 .. 2^-14].
        #[arg(long, value_delimiter = ',')]
        ladder: Option<Vec<f64>>,
    },

    /// Project a seeded trig polynomial (or a single mode) through both
    /// routes and tabulate the values at interior points
    /// [CSV per point plus a JSON footer].
    Project {
        #[arg(long)]
        alpha: Option<f64>,
        /// Grid size [default: 4096].
        #[arg(long)]
        n: Option<usize>,
        /// Mode window of the random input [default: 8].
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of interior evaluation points [default: 5].
        #[arg(long)]
        points: Option<usize>,
        /// Project the single mode e^{ik theta} instead of a random input.
        #[arg(long, allow_negative_numbers = true)]
        mode: Option<i64>,
    },

    /// Verify the kernel conjugation identity on seeded interior pairs
    /// [JSON: max residual and verdict].
    KernelCheck {
        /// Single weight parameter; omitted cycles a standard set.
        #[arg(long)]
        alpha: Option<f64>,
        /// Number of interior pairs [default: 100].
        #[arg(long)]
        pairs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },

    /// Build the weighted moment matrix and report its conditioning and
    /// the truncated kernel at the origin [JSON].
    Gram {
        #[arg(long)]
        alpha: Option<f64>,
        /// Number of monomials in the truncation, >= 1.
        #[arg(long)]
        dim: Option<usize>,
        /// Quadrature grid for the moments [default: 4096].
        #[arg(long)]
        grid: Option<usize>,
        /// Use closed-form moments instead of quadrature.
        #[arg(long)]
        closed_form: bool,
    },

    /// Interior p-th radial means of a seeded polynomial across the radii
    /// ladder, with the boundary norm for comparison
    /// [CSV rows radius,norm plus a JSON footer].
    NormScan {
        #[arg(long)]
        alpha: Option<f64>,
        /// Lebesgue exponent, >= 1 [default: 2].
        #[arg(long)]
        p: Option<f64>,
        /// Mode window of the random input [default: 8].
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long)]
        seed: Option<u64>,
    },

    /// Operator-norm lower bounds across a ladder of grid sizes with a
    /// trend verdict [CSV rows n,estimate plus a JSON footer].
    Blowup {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        p: Option<f64>,
        /// Strictly increasing grid sizes [default: 512,1024,2048,4096].
        #[arg(long, value_delimiter = ',')]
        grids: Option<Vec<usize>>,
        /// Coordinate-ascent steps per candidate [default: 40].
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },

    /// Self-adjointness and dual-representation residuals of the weighted
    /// projection [JSON with pass/fail].
    DualityCheck {
        /// Weight parameter [default: 0.5].
        #[arg(long)]
        alpha: Option<f64>,
        /// Lebesgue exponent, > 1 [default: 2].
        #[arg(long)]
        p: Option<f64>,
        /// Grid size [default: 4096].
        #[arg(long)]
        n: Option<usize>,
        /// Number of seeded input pairs [default: 20].
        #[arg(long)]
        tests: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },

    /// Fuzz the weighted Hoelder inequality on seeded pairs and report
    /// the minimum margin [JSON with pass/fail].
    HoelderFuzz {
        /// Weight parameter [default: 0.5].
        #[arg(long)]
        alpha: Option<f64>,
        /// Lebesgue exponent, > 1 [default: 3].
        #[arg(long)]
        p: Option<f64>,
        /// Number of seeded pairs [default: 1000].
        #[arg(long)]
        pairs: Option<usize>,
        /// Grid size [default: 512].
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },

    /// Run the named regression checks and summarize residuals
    /// [JSON; exit 1 names the first failing check].
    CheckAll {
        /// Base seed mixed into the randomized checks [default: 0].
        #[arg(long)]
        seed: Option<u64>,
        /// Run only checks whose name contains this substring.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, hide = true)]
        corrupt_tolerances: bool,
    },
}
