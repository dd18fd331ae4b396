//! Command-line argument definitions for the `dualbern` binary.
//!
//! Everything is driven by flags: no configuration files, no environment
//! variables.  Numeric flags that may legitimately be negative (`--alpha`,
//! `--beta`, `--x`, `--coeffs`) accept space-separated negative values.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Dual Bernstein polynomial toolkit.
///
/// Evaluates the dual basis `D^n_i(x; α, β)` of the Bernstein basis under
/// the Jacobi-weighted inner product on [0, 1], checks the identities the
/// dual basis satisfies, benchmarks the O(n²) degree-elevation construction
/// against the O(n) index recurrence, and computes weighted least-squares
/// approximations in Bézier form.
#[derive(Debug, Parser)]
#[command(name = "dualbern", version, about)]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate D^n_i(x; α, β) at a single point (one index or the full table).
    Eval(EvalArgs),
    /// Tabulate the dual basis on the uniform grid x_k = k/M.
    Table(TableArgs),
    /// Time full-table construction: iterated degree elevation vs the index recurrence.
    Bench(BenchArgs),
    /// Run identity and invariant check suites; exit 0 only if all pass.
    Check(CheckArgs),
    /// Least-squares approximation of a built-in integrand in Bézier form.
    Approx(ApproxArgs),
}

/// Evaluation algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    /// Jacobi–Hahn double expansion.
    JacobiHahn,
    /// Short combination of two shifted Jacobi polynomials.
    ShortJacobi,
    /// Coefficient form in powers of 1 − x.
    ShiftedPower,
    /// Iterated degree elevation from degree 0.
    Elevation,
    /// O(n) three-term recurrence in the index i (default).
    Recurrence,
    /// Brute-force Gram-matrix solve (n ≤ 12).
    GramOracle,
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

/// Identity check suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Duality,
    Symmetry,
    Diffrec,
    Ode,
    Recurrence,
    Lemma,
}

/// Built-in integrands for `approx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntegrandArg {
    /// f(x) = 1.
    Const1,
    /// Polynomial with monomial coefficients from --coeffs.
    Poly,
    /// f(x) = e^x.
    Exp,
    /// f(x) = sin(πx).
    Sinpi,
    /// Logistic ramp f(x) = 1 / (1 + e^(−20(x−1/2))).
    Smoothstep,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Degree n of the dual basis.
    #[arg(long)]
    pub n: usize,
    /// Weight exponent α (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Weight exponent β (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Evaluation point.
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    /// Single index i (0 ≤ i ≤ n); omit to print the whole table.
    #[arg(long)]
    pub i: Option<usize>,
    /// Evaluation algorithm.
    #[arg(long, value_enum, default_value_t = AlgoArg::Recurrence)]
    pub algo: AlgoArg,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Degree n of the dual basis.
    #[arg(long)]
    pub n: usize,
    /// Weight exponent α (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Weight exponent β (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Number of grid panels M; the grid is x_k = k/M for k = 0..=M.
    #[arg(long = "grid-m", default_value_t = 100)]
    pub grid_m: usize,
    /// Evaluation algorithm.
    #[arg(long, value_enum, default_value_t = AlgoArg::Recurrence)]
    pub algo: AlgoArg,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated list of degrees to benchmark, e.g. --n 10,20,40.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Weight exponent α (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Weight exponent β (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Number of grid panels M; each method fills the table at all x_k = k/M.
    #[arg(long = "grid-m", default_value_t = 100)]
    pub grid_m: usize,
    /// Timed repetitions per method (median reported, warm-up excluded); must be ≥ 3.
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Which identity suite to run.
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    /// Largest degree swept (identities with tighter documented ranges are capped).
    #[arg(long = "n-max", default_value_t = 12)]
    pub n_max: usize,
    /// Weight exponent α; omit (together with --beta) to sweep the canonical parameter sets.
    #[arg(long, allow_negative_numbers = true, requires = "beta")]
    pub alpha: Option<f64>,
    /// Weight exponent β; omit (together with --alpha) to sweep the canonical parameter sets.
    #[arg(long, allow_negative_numbers = true, requires = "alpha")]
    pub beta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    /// Built-in integrand.
    #[arg(long, value_enum)]
    pub f: IntegrandArg,
    /// Monomial coefficients c_0,c_1,… for --f poly (lowest degree first).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub coeffs: Option<Vec<f64>>,
    /// Degree n of the approximating Bézier form.
    #[arg(long)]
    pub n: usize,
    /// Weight exponent α (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Weight exponent β (must exceed −1).
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Gauss–Jacobi node count (default n + 16).
    #[arg(long = "quad-m")]
    pub quad_m: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}
