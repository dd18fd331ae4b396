//! Dual Bernstein polynomials `D^n_i(x; α, β)` and their calculus.
//!
//! The Bernstein basis `B^n_0, …, B^n_n` of the polynomials of degree at most
//! `n` has a unique dual basis under the Jacobi-weighted inner product
//!
//! ```text
//! ⟨f, g⟩ = ∫₀¹ (1−x)^α x^β f(x) g(x) dx        (α, β > −1),
//! ```
//!
//! characterised by `⟨B^n_i, D^n_j⟩ = δ_ij`.  This crate evaluates the dual
//! basis by five independent algorithms — a Jacobi–Hahn expansion, a short
//! Jacobi combination, the shifted-power coefficient form, iterated degree
//! elevation, and an O(n) three-term recurrence in the index `i` — and backs
//! them with a brute-force Gram-matrix oracle, residual evaluators for the
//! differential/recurrence identities the dual basis satisfies, Gauss–Jacobi
//! quadrature, and weighted least-squares approximation in Bézier form.
//!
//! Modules:
//!
//! * [`specfun`] — scalar special-function kernels (Pochhammer, log-Gamma,
//!   Beta, terminating hypergeometric series, shifted Jacobi and Hahn
//!   polynomials).
//! * [`polyalg`] — exact dense polynomial arithmetic in the monomial and
//!   shifted-power bases, used to build operator residuals without numerical
//!   differentiation.
//! * [`dualbern`] — the five evaluation algorithms, the Gram oracle, and
//!   linear-combination evaluation.
//! * [`relations`] — every differential-recurrence identity, differential
//!   equation, and recurrence relation packaged as a scaled residual.
//! * [`quadrature`] — exact Beta-moment integration of polynomials and
//!   Gauss–Jacobi rules on [0, 1].
//! * [`approx`] — weighted least-squares approximation with Bernstein
//!   coefficients obtained as integrals against the dual basis.

pub mod approx;
mod dd;
mod error;
pub mod dualbern;
pub mod polyalg;
pub mod quadrature;
pub mod relations;
pub mod specfun;

pub use error::Error;
pub use specfun::WeightParams;

/// Parameter pairs (α, β) exercised throughout the test and check suites:
/// the Legendre case, the Chebyshev case, and a deliberately asymmetric
/// non-standard case.
pub const CANONICAL_PARAM_SETS: [(f64, f64); 3] = [(0.0, 0.0), (-0.5, -0.5), (-0.33, 5.66)];
