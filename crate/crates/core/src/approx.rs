//! Weighted least-squares approximation by Bézier curves.
//!
//! Because the dual basis is biorthogonal to the Bernstein basis under the
//! Jacobi inner product, the best degree-n approximation of f is simply
//! `p*(x) = Σ_k I_k B^n_k(x)` with `I_k = ∫₀¹ (1−x)^α x^β f(x) D^n_k(x) dx`:
//! no normal equations, no linear solve. The integrals come from a single
//! Gauss–Jacobi rule shared across all n+1 dual polynomials, with the dual
//! values at each node supplied by the linear-time recurrence evaluator.

use crate::dualbern::eval_all_recurrence;
use crate::error::Error;
use crate::quadrature::{gauss_jacobi_rule, QuadRule};
use crate::specfun::WeightParams;

/// Outcome of a least-squares Bézier fit: the control coefficients of p*,
/// the weighted L² error ‖f − p*‖, and the quadrature size used.
#[derive(Debug, Clone, PartialEq)]
pub struct LsqResult {
    pub n: usize,
    pub params: WeightParams,
    pub coeffs: Vec<f64>,
    pub l2_error: f64,
    pub quad_m: usize,
}

/// Default quadrature size for a degree-n fit: exact for polynomial
/// integrands up to degree 2n+31, comfortable for smooth non-polynomials.
pub fn default_quad_m(n: usize) -> usize {
    n + 16
}

/// Evaluate a Bézier combination `Σ_k coeffs[k] B^n_k(x)` by de Casteljau's
/// algorithm (convex blending, unconditionally stable on [0, 1]).
fn de_casteljau(coeffs: &[f64], x: f64) -> f64 {
    let mut b = coeffs.to_vec();
    for r in 1..b.len() {
        for j in 0..b.len() - r {
            b[j] = (1.0 - x) * b[j] + x * b[j + 1];
        }
    }
    b[0]
}

fn dual_integrals_with_rule<F: FnMut(f64) -> f64>(
    f: &mut F,
    n: usize,
    params: WeightParams,
    rule: &QuadRule,
) -> Result<Vec<f64>, Error> {
    let mut acc = vec![0.0; n + 1];
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::NonFinite(format!(
                "integrand returned a non-finite value at node x = {x}"
            )));
        }
        let table = eval_all_recurrence(n, params, x);
        for (a, &d) in acc.iter_mut().zip(table.values.iter()) {
            *a += w * fx * d;
        }
    }
    Ok(acc)
}

/// The dual-basis integrals `I_k = ⟨f, D^n_k⟩` for k = 0..=n, computed with
/// one m-node Gauss–Jacobi rule shared across all k.
pub fn dual_integrals<F: FnMut(f64) -> f64>(
    mut f: F,
    n: usize,
    params: WeightParams,
    m: usize,
) -> Result<Vec<f64>, Error> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "dual_integrals requires at least one quadrature node".to_string(),
        ));
    }
    let rule = gauss_jacobi_rule(m, params)?;
    dual_integrals_with_rule(&mut f, n, params, &rule)
}

/// Weighted least-squares fit of f by a degree-n Bézier curve. Requires
/// m ≥ n + 1 so the rule integrates the projection itself exactly; the same
/// rule is reused for the error integral `‖f − p*‖²`.
pub fn lsq_bezier<F: FnMut(f64) -> f64>(
    mut f: F,
    n: usize,
    params: WeightParams,
    m: usize,
) -> Result<LsqResult, Error> {
    if m < n + 1 {
        return Err(Error::InvalidArgument(format!(
            "lsq_bezier of degree {n} requires at least {} quadrature nodes, got {m}",
            n + 1
        )));
    }
    let rule = gauss_jacobi_rule(m, params)?;
    let coeffs = dual_integrals_with_rule(&mut f, n, params, &rule)?;
    let mut err_sq = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let diff = f(x) - de_casteljau(&coeffs, x);
        err_sq += w * diff * diff;
    }
    Ok(LsqResult {
        n,
        params,
        coeffs,
        l2_error: err_sq.max(0.0).sqrt(),
        quad_m: m,
    })
}

/// Independent recomputation of the weighted L² error of a given Bézier
/// coefficient vector against f, with its own m-node rule. Useful for
/// cross-checking [`lsq_bezier`] with a different quadrature size.
pub fn lsq_error_reference<F: FnMut(f64) -> f64>(
    mut f: F,
    coeffs: &[f64],
    n: usize,
    params: WeightParams,
    m: usize,
) -> Result<f64, Error> {
    if coeffs.len() != n + 1 {
        return Err(Error::InvalidArgument(format!(
            "degree-{n} Bézier curve needs {} coefficients, got {}",
            n + 1,
            coeffs.len()
        )));
    }
    if m == 0 {
        return Err(Error::InvalidArgument(
            "lsq_error_reference requires at least one quadrature node".to_string(),
        ));
    }
    let rule = gauss_jacobi_rule(m, params)?;
    let mut err_sq = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::NonFinite(format!(
                "integrand returned a non-finite value at node x = {x}"
            )));
        }
        let diff = fx - de_casteljau(coeffs, x);
        err_sq += w * diff * diff;
    }
    Ok(err_sq.max(0.0).sqrt())
}
