//! Gauss–Jacobi quadrature on [0, 1] with weight `(1−x)^α x^β`, plus exact
//! integration of coefficient polynomials against the same weight via Beta
//! moments.

use crate::polyalg::{Basis, Poly};
use crate::specfun::WeightParams;
use crate::Error;

/// An m-point quadrature rule: `∫₀¹ (1−x)^α x^β f(x) dx ≈ Σ w_j f(x_j)`.
/// Nodes are strictly increasing and lie in the open interval (0, 1); the
/// weights are positive and sum to the weight's total mass K.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    pub m: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub params: WeightParams,
}

/// Integrates a coefficient polynomial exactly against the weight, using the
/// closed-form moments of `x^k` (or `(1−x)^j`) under `(1−x)^α x^β`:
///
/// * monomial basis: `m₀ = K`, `m_{k+1} = m_k (β+k+1)/(σ+k+1)`;
/// * shifted-power basis: `m₀ = K`, `m_{j+1} = m_j (α+j+1)/(σ+j+1)`.
///
/// Terms are accumulated with compensated (Neumaier) summation so the result
/// is accurate to a few ulps even for high-degree, sign-alternating inputs.
pub fn integrate_poly_exact(poly: &Poly, params: WeightParams) -> f64 {
    let (num_off, _) = match poly.basis {
        Basis::MonomialX => (params.beta, params.alpha),
        Basis::ShiftedPower => (params.alpha, params.beta),
    };
    let mut moment = params.big_k;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for (k, &c) in poly.coeffs.iter().enumerate() {
        let term = c * moment;
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        moment *= (num_off + k as f64 + 1.0) / (params.sigma + k as f64 + 1.0);
    }
    sum + comp
}

/// Builds the m-point Gauss–Jacobi rule by the Golub–Welsch method: form the
/// symmetric tridiagonal Jacobi matrix of the recurrence coefficients
/// (mapped from [−1, 1] to [0, 1]), find its eigenvalues and the first
/// components of its eigenvectors with an implicit-shift QL iteration, and
/// set each weight to K times the squared first eigenvector component.
pub fn gauss_jacobi_rule(m: usize, params: WeightParams) -> Result<QuadRule, Error> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "quadrature rule needs at least one node".into(),
        ));
    }
    let (a, b) = (params.alpha, params.beta);
    let ab = a + b;

    // Diagonal d[k] and off-diagonal e[k] (between rows k and k+1) of the
    // Jacobi matrix for the weight on [0, 1]. Entries come from the classical
    // recurrence coefficients on [−1, 1] through x = (t+1)/2; the k = 1
    // formulas are the cancelled forms that stay finite as α + β → −1.
    let mut d = vec![0.0f64; m];
    let mut e = vec![0.0f64; m];
    d[0] = (b + 1.0) / (ab + 2.0);
    for k in 1..m {
        let kf = k as f64;
        let denom = (2.0 * kf + ab) * (2.0 * kf + ab + 2.0);
        d[k] = 0.5 * (1.0 + (b * b - a * a) / denom);
        let beta_j = if k == 1 {
            4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0))
        } else {
            let s = 2.0 * kf + ab;
            4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        e[k - 1] = 0.5 * beta_j.sqrt();
    }

    // First row of the accumulated eigenvector transform; weights need only
    // this row, not the full matrix.
    let mut z = vec![0.0f64; m];
    z[0] = 1.0;

    // Implicit-shift QL with eigenvalue deflation (tridiagonal symmetric).
    for l in 0..m {
        let mut iter = 0;
        loop {
            // Look for a negligible off-diagonal element to split at.
            let mut split = m - 1;
            for mm in l..m - 1 {
                let dd = d[mm].abs() + d[mm + 1].abs();
                if e[mm].abs() <= f64::EPSILON * dd {
                    split = mm;
                    break;
                }
            }
            if split == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(Error::NonConvergence(format!(
                    "QL iteration exceeded 100 sweeps at eigenvalue {l} (m = {m})"
                )));
            }
            // Form the implicit Wilkinson shift.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[split] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;
            for i in (l..split).rev() {
                let mut f = s * e[i];
                let bb = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[split] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * bb;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - bb;
                // Rotate the tracked eigenvector row.
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if r == 0.0 && split > l + 1 {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[split] = 0.0;
        }
    }

    let mut pairs: Vec<(f64, f64)> = d
        .iter()
        .zip(z.iter())
        .map(|(&node, &z0)| (node, params.big_k * z0 * z0))
        .collect();
    pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).expect("finite eigenvalues"));

    let nodes: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let weights: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    for w in nodes.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::NonConvergence(format!(
                "quadrature nodes failed to separate (m = {m})"
            )));
        }
    }
    if !(nodes[0] > 0.0 && nodes[m - 1] < 1.0) {
        return Err(Error::NonConvergence(format!(
            "quadrature nodes escaped (0, 1) (m = {m})"
        )));
    }
    Ok(QuadRule {
        m,
        nodes,
        weights,
        params,
    })
}

/// Applies a rule to a function: `Σ_j w_j f(x_j)`. Errors with the offending
/// node if `f` returns a non-finite value there.
pub fn integrate_fn(rule: &QuadRule, f: &mut dyn FnMut(f64) -> f64) -> Result<f64, Error> {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFinite(format!(
                "integrand returned {v} at node x = {x}"
            )));
        }
        let term = w * v;
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    Ok(sum + comp)
}
