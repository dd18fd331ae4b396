//! The identity families satisfied by dual Bernstein polynomials —
//! differentiation recurrences, a second- and a fourth-order differential
//! equation, index recurrences, and the supporting special-function
//! identities — each packaged as a *scaled residual* evaluator.
//!
//! Every residual divides by the magnitude of the largest participating
//! term, so tolerances stay n-independent; derivatives always come from
//! exact polynomial calculus on the shifted-power coefficients, never from
//! finite differences. The explicit coefficient displays (w_j, v_j, z) are
//! treated as transcription hypotheses: composition cross-checks
//! ([`ode4_composition_mismatch`], [`rec4_composition_mismatch`]) compare
//! them against operator compositions built from independently testable
//! factors.

use crate::dualbern::{
    big_a, coeffs_shifted_power, dual_via_gram, eval_all_short_jacobi, f_kernel, DualTable,
};
use crate::polyalg::{poly_add, poly_derive, poly_eval, poly_mul, poly_scale, Basis, Poly};
use crate::specfun::{jacobi_r_ab, WeightParams};

fn scaled(residual: f64, scale: f64) -> f64 {
    residual / scale.max(f64::MIN_POSITIVE)
}

/// Σ_j |c_j| · |basis factor|^j: the magnitude a Horner evaluation sums
/// through before cancellation. Residual scales use this so that the
/// rounding floor of high-degree coefficient evaluations does not read as
/// an identity violation.
fn abs_poly_eval(p: &Poly, x: f64) -> f64 {
    let t = match p.basis {
        Basis::MonomialX => x.abs(),
        Basis::ShiftedPower => (1.0 - x).abs(),
    };
    p.coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| c.abs() * t.powi(j as i32))
        .sum()
}

/// Residual of the first-order recurrence satisfied by the kernel F(i, j) in
/// the index i (with the convention F(n+1, j) := 0):
/// `(i−n)(n−i+α) F(i+1,j) − (i+1)(n+j−i+α+1) F(i,j) + (n+1)(n+α+1)`,
/// scaled by the largest of its three terms.
pub fn residual_f_lemma(n: usize, i: usize, j: usize, alpha: f64) -> f64 {
    assert!(i <= n && j <= n, "residual_f_lemma requires 0 <= i, j <= n");
    let (nf, fi, fj) = (n as f64, i as f64, j as f64);
    let f_next = if i + 1 > n {
        0.0
    } else {
        f_kernel(n, i + 1, j, alpha)
    };
    let t1 = (fi - nf) * (nf - fi + alpha) * f_next;
    let t2 = -(fi + 1.0) * (nf + fj - fi + alpha + 1.0) * f_kernel(n, i, j, alpha);
    let t3 = (nf + 1.0) * (nf + alpha + 1.0);
    scaled(t1 + t2 + t3, t1.abs().max(t2.abs()).max(t3.abs()))
}

/// D^n_i as an exact polynomial, with the out-of-range zero convention.
fn dual_poly(n: usize, i: i64, params: WeightParams) -> Poly {
    if i < 0 || i > n as i64 {
        Poly::zero(Basis::ShiftedPower)
    } else {
        coeffs_shifted_power(n, i as usize, params)
    }
}

/// Residual of the first differentiation recurrence,
/// `(1−x) D' − (n−i+α+1) D = (i−n)(i+β+1)/(i+1) · D^n_{i+1}
///   − A_{ni}(n+α+1)/(i+1) · R_n^{(α,β+1)}(x)`.
pub fn residual_diffrec_1(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    let (alpha, beta) = (params.alpha, params.beta);
    let (nf, fi) = (n as f64, i as f64);
    let d = coeffs_shifted_power(n, i, params);
    let d1 = poly_derive(&d);
    let d_next = dual_poly(n, i as i64 + 1, params);
    let l1 = (1.0 - x) * poly_eval(&d1, x);
    let l2 = -(nf - fi + alpha + 1.0) * poly_eval(&d, x);
    let c_next = (fi - nf) * (fi + beta + 1.0) / (fi + 1.0);
    let r1 = c_next * poly_eval(&d_next, x);
    let r2 = -big_a(n, i, params) * (nf + alpha + 1.0) / (fi + 1.0)
        * jacobi_r_ab(n, alpha, beta + 1.0, x);
    let scale = ((1.0 - x) * abs_poly_eval(&d1, x))
        .max((nf - fi + alpha + 1.0).abs() * abs_poly_eval(&d, x))
        .max(c_next.abs() * abs_poly_eval(&d_next, x))
        .max(r2.abs());
    scaled((l1 + l2) - (r1 + r2), scale)
}

/// Residual of the mirrored differentiation recurrence,
/// `x D' + (i+β+1) D = i(n−i+α+1)/(n−i+1) · D^n_{i−1}
///   + A_{ni}(n+β+1)/(n−i+1) · R_n^{(α+1,β)}(x)`.
pub fn residual_diffrec_2(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    let (alpha, beta) = (params.alpha, params.beta);
    let (nf, fi) = (n as f64, i as f64);
    let d = coeffs_shifted_power(n, i, params);
    let d1 = poly_derive(&d);
    let d_prev = dual_poly(n, i as i64 - 1, params);
    let l1 = x * poly_eval(&d1, x);
    let l2 = (fi + beta + 1.0) * poly_eval(&d, x);
    let c_prev = fi * (nf - fi + alpha + 1.0) / (nf - fi + 1.0);
    let r1 = c_prev * poly_eval(&d_prev, x);
    let r2 = big_a(n, i, params) * (nf + beta + 1.0) / (nf - fi + 1.0)
        * jacobi_r_ab(n, alpha + 1.0, beta, x);
    let scale = (x * abs_poly_eval(&d1, x))
        .max((fi + beta + 1.0) * abs_poly_eval(&d, x))
        .max(c_prev.abs() * abs_poly_eval(&d_prev, x))
        .max(r2.abs());
    scaled((l1 + l2) - (r1 + r2), scale)
}

/// The Jacobi differential operator
/// `L^{(α,β)} = x(x−1) D² + ½[α − β + (σ+1)(2x−1)] D` applied to a
/// polynomial, evaluated at x via exact derivatives. Returns the two terms
/// plus their pre-cancellation magnitudes for residual scaling.
fn jacobi_operator_value(p: &Poly, params: WeightParams, x: f64) -> ((f64, f64), f64) {
    let d1 = poly_derive(p);
    let d2 = poly_derive(&d1);
    let c1 = x * (x - 1.0);
    let c2 = 0.5 * (params.alpha - params.beta + (params.sigma + 1.0) * (2.0 * x - 1.0));
    let t1 = c1 * poly_eval(&d2, x);
    let t2 = c2 * poly_eval(&d1, x);
    let mag = (c1.abs() * abs_poly_eval(&d2, x)).max(c2.abs() * abs_poly_eval(&d1, x));
    ((t1, t2), mag)
}

/// Residual of the second-order differentiation recurrence: applying the
/// Jacobi operator L^{(α,β)} in x equals a three-point combination in i,
/// `L D^n_i = a(i) D^n_{i+1} − (a+b)(i) D^n_i + b(i) D^n_{i−1}` with
/// `a(i) = (i−n)(i+β+1)` and `b(i) = i(i−α−n−1)`.
pub fn residual_diffrec_3(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    let (nf, fi) = (n as f64, i as f64);
    let d = coeffs_shifted_power(n, i, params);
    let d_next = dual_poly(n, i as i64 + 1, params);
    let d_prev = dual_poly(n, i as i64 - 1, params);
    let ((l1, l2), lhs_mag) = jacobi_operator_value(&d, params, x);
    let a = (fi - nf) * (fi + params.beta + 1.0);
    let b = fi * (fi - params.alpha - nf - 1.0);
    let r1 = a * poly_eval(&d_next, x);
    let r2 = -(a + b) * poly_eval(&d, x);
    let r3 = b * poly_eval(&d_prev, x);
    let scale = lhs_mag
        .max(a.abs() * abs_poly_eval(&d_next, x))
        .max((a + b).abs() * abs_poly_eval(&d, x))
        .max(b.abs() * abs_poly_eval(&d_prev, x));
    scaled((l1 + l2) - (r1 + r2 + r3), scale)
}

/// Residual of the second-order non-homogeneous differential equation
/// `x(x−1) D'' + [(n+σ+3)x − i − β − 2] D' + (n+σ+1) D
///   = (n+σ+1) A_{ni} R_n^{(α+1,β+1)}(x)`.
pub fn residual_ode2(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let (nf, fi) = (n as f64, i as f64);
    let d = coeffs_shifted_power(n, i, params);
    let d1 = poly_derive(&d);
    let d2 = poly_derive(&d1);
    let c1 = x * (x - 1.0);
    let c2 = (nf + sigma + 3.0) * x - fi - beta - 2.0;
    let c3 = nf + sigma + 1.0;
    let t1 = c1 * poly_eval(&d2, x);
    let t2 = c2 * poly_eval(&d1, x);
    let t3 = c3 * poly_eval(&d, x);
    let rhs = (nf + sigma + 1.0) * big_a(n, i, params) * jacobi_r_ab(n, alpha + 1.0, beta + 1.0, x);
    let scale = (c1.abs() * abs_poly_eval(&d2, x))
        .max(c2.abs() * abs_poly_eval(&d1, x))
        .max(c3 * abs_poly_eval(&d, x))
        .max(rhs.abs());
    scaled(t1 + t2 + t3 - rhs, scale)
}

/// The five polynomial coefficients w₀(x) … w₄(x) of the fourth-order
/// differential equation `Σ_j w_j(x) y^{(j)}(x) = 0` satisfied by D^n_i.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeCoeffs {
    /// w[j] multiplies the j-th derivative; all in the monomial basis.
    pub w: [Poly; 5],
}

/// Explicit coefficient polynomials of the fourth-order equation, transcribed
/// displays: w₄ = x²(x−1)², w₃ = x(x−1)[(n+2σ+10)x − i − 2β − 6], quadratic
/// w₂, linear w₁ and constant w₀ = −n(n+σ+1)(n+σ+2).
pub fn ode4_coeffs(n: usize, i: usize, params: WeightParams) -> OdeCoeffs {
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let (nf, fi) = (n as f64, i as f64);
    let w4 = Poly::new(Basis::MonomialX, vec![0.0, 0.0, 1.0, -2.0, 1.0]);
    let w3 = poly_mul(
        &Poly::new(Basis::MonomialX, vec![0.0, -1.0, 1.0]),
        &Poly::new(
            Basis::MonomialX,
            vec![-(fi + 2.0 * beta + 6.0), nf + 2.0 * sigma + 10.0],
        ),
    )
    .expect("same basis");
    let w2 = Poly::new(
        Basis::MonomialX,
        vec![
            (beta + 2.0) * (fi + beta + 3.0),
            (nf - 1.0) * (nf - 1.0) + alpha * nf - 2.0 * beta
                - (sigma + 3.0) * (fi + 2.0 * beta + 8.0)
                - 5.0,
            (nf + sigma + 3.0) * (sigma - nf + 7.0) + sigma + 3.0,
        ],
    );
    let w1 = poly_scale(
        &Poly::new(
            Basis::MonomialX,
            vec![
                (2.0 - nf) * (fi + beta + 2.0) - 2.0 * fi,
                nf * nf + (nf - 2.0) * (sigma + 3.0),
            ],
        ),
        -(nf + sigma + 2.0),
    );
    let w0 = Poly::new(
        Basis::MonomialX,
        vec![-nf * (nf + sigma + 1.0) * (nf + sigma + 2.0)],
    );
    OdeCoeffs {
        w: [w0, w1, w2, w3, w4],
    }
}

/// Coefficient-wise disagreement between the transcribed w_j displays and the
/// operator composition N∘M, where M is the second-order operator of
/// [`residual_ode2`] and N = x(x−1)D² + [(σ+3)x + (α−β−σ−3)/2]D − n(n+σ+2).
/// Returns max |Δcoefficient| / max |w coefficient|; identically small when
/// both transcriptions are faithful. Valid for any (n, i) pair, since the
/// comparison is pure coefficient algebra.
pub fn ode4_composition_mismatch(n: usize, i: usize, params: WeightParams) -> f64 {
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let (nf, fi) = (n as f64, i as f64);
    let mono = |coeffs: Vec<f64>| Poly::new(Basis::MonomialX, coeffs);
    let a = mono(vec![0.0, -1.0, 1.0]);
    let a1 = mono(vec![-1.0, 2.0]);
    let b = mono(vec![-(fi + beta + 2.0), nf + sigma + 3.0]);
    let b1 = nf + sigma + 3.0;
    let c = nf + sigma + 1.0;
    let p = mono(vec![(alpha - beta - sigma - 3.0) / 2.0, sigma + 3.0]);
    let lambda = nf * (nf + sigma + 2.0);

    let add = |x: &Poly, y: &Poly| poly_add(x, y).expect("same basis");
    let mul = |x: &Poly, y: &Poly| poly_mul(x, y).expect("same basis");

    let w4 = mul(&a, &a);
    let w3 = mul(&a, &add(&add(&poly_scale(&a1, 2.0), &b), &p));
    let w2 = add(
        &poly_scale(&a, 2.0 + 2.0 * b1 + c - lambda),
        &mul(&p, &add(&a1, &b)),
    );
    let w1 = add(&poly_scale(&p, b1 + c), &poly_scale(&b, -lambda));
    let w0 = mono(vec![-lambda * c]);
    let composed = [w0, w1, w2, w3, w4];

    let explicit = ode4_coeffs(n, i, params).w;
    let mut scale = f64::MIN_POSITIVE;
    for poly in &explicit {
        for &coef in &poly.coeffs {
            scale = scale.max(coef.abs());
        }
    }
    let mut worst = 0.0f64;
    for (lhs, rhs) in composed.iter().zip(explicit.iter()) {
        let len = lhs.coeffs.len().max(rhs.coeffs.len());
        for k in 0..len {
            let l = lhs.coeffs.get(k).copied().unwrap_or(0.0);
            let r = rhs.coeffs.get(k).copied().unwrap_or(0.0);
            worst = worst.max((l - r).abs());
        }
    }
    worst / scale
}

/// Residual of the fourth-order differential equation
/// `Σ_{j=0}^{4} w_j(x) (d^j/dx^j) D^n_i(x) = 0`, scaled by the largest term.
pub fn residual_ode4(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    debug_assert!(
        ode4_composition_mismatch(n, i, params) <= 1e-10,
        "explicit fourth-order coefficients disagree with the factored composition"
    );
    let coeffs = ode4_coeffs(n, i, params);
    let mut d = coeffs_shifted_power(n, i, params);
    let mut sum = 0.0;
    let mut scale = f64::MIN_POSITIVE;
    for j in 0..=4 {
        let wj = poly_eval(&coeffs.w[j], x);
        sum += wj * poly_eval(&d, x);
        scale = scale.max(wj.abs() * abs_poly_eval(&d, x));
        if j < 4 {
            d = poly_derive(&d);
        }
    }
    sum / scale
}

/// The coefficient functions of the fourth-order index recurrence
/// `Σ_{j=−2}^{2} v_j(i) D^n_{i+j}(x) = 0` at fixed (n, α, β, x), plus the
/// cubic z(i) appearing inside v₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecCoeffs {
    pub n: usize,
    pub params: WeightParams,
    pub x: f64,
}

impl RecCoeffs {
    pub fn new(n: usize, params: WeightParams, x: f64) -> RecCoeffs {
        RecCoeffs { n, params, x }
    }

    /// The cubic-in-i factor inside v₀:
    /// `z(i) = −6i³ + 3(3n+α−β)i² − [n(5n−6β) + (4n+3)σ + 3]i
    ///   + n[(n+1)(n+α+1) + 2β + 2]`.
    pub fn z(&self, i: i64) -> f64 {
        let (alpha, beta, sigma) = (self.params.alpha, self.params.beta, self.params.sigma);
        let nf = self.n as f64;
        let fi = i as f64;
        -6.0 * fi * fi * fi + 3.0 * (3.0 * nf + alpha - beta) * fi * fi
            - (nf * (5.0 * nf - 6.0 * beta) + (4.0 * nf + 3.0) * sigma + 3.0) * fi
            + nf * ((nf + 1.0) * (nf + alpha + 1.0) + 2.0 * beta + 2.0)
    }

    /// v_j(i) for j ∈ {−2, …, 2}; panics for other j.
    pub fn v(&self, j: i64, i: i64) -> f64 {
        let (alpha, beta) = (self.params.alpha, self.params.beta);
        let (nf, fi, x) = (self.n as f64, i as f64, self.x);
        match j {
            -2 => {
                (1.0 - x)
                    * (fi - 1.0)
                    * fi
                    * (nf - fi + alpha)
                    * (nf - fi + alpha + 1.0)
                    * (nf - fi + alpha + 2.0)
            }
            -1 => {
                -fi * (nf - fi + alpha)
                    * (nf - fi + alpha + 1.0)
                    * ((fi + beta) * (nf - 3.0 * fi)
                        + (nf * (nf - 3.0 * fi + alpha - beta + 4.0)
                            + fi * (4.0 * fi - alpha + 3.0 * beta - 4.0)
                            + 2.0 * (alpha + 2.0))
                            * x)
            }
            0 => {
                (fi + beta)
                    * (nf - fi + alpha)
                    * (self.z(i) * x + (fi + 1.0) * (fi + beta + 1.0) * (3.0 * fi - 2.0 * nf))
            }
            1 => {
                (fi - nf)
                    * (fi + beta)
                    * (fi + beta + 1.0)
                    * ((fi + 2.0) * (fi + beta + 2.0)
                        - (nf * (2.0 * nf - 5.0 * fi + 2.0 * alpha)
                            + fi * (4.0 * fi - 3.0 * alpha + beta + 4.0)
                            + 2.0 * (beta + 2.0))
                            * x)
            }
            2 => {
                x * (fi + beta)
                    * (fi + beta + 1.0)
                    * (fi + beta + 2.0)
                    * (nf - fi - 1.0)
                    * (nf - fi)
            }
            _ => panic!("v_j is defined for j in -2..=2, got {j}"),
        }
    }
}

/// `[v₋₂(i), v₋₁(i), v₀(i), v₁(i), v₂(i)]` for the recurrence at (n, x).
pub fn rec4_coeffs(n: usize, i: usize, params: WeightParams, x: f64) -> [f64; 5] {
    assert!(i <= n, "rec4_coeffs requires 0 <= i <= n");
    let rc = RecCoeffs::new(n, params, x);
    let fi = i as i64;
    [
        rc.v(-2, fi),
        rc.v(-1, fi),
        rc.v(0, fi),
        rc.v(1, fi),
        rc.v(2, fi),
    ]
}

/// m₋(i): the D^n_{i−1} coefficient of the three-term index recurrence.
fn m_minus(n: usize, fi: f64, params: WeightParams, x: f64) -> f64 {
    fi * (fi + 1.0) * (n as f64 - fi + params.alpha + 1.0) * (x - 1.0)
}

/// m₀(i): the D^n_i coefficient.
fn m_zero(n: usize, fi: f64, params: WeightParams, x: f64) -> f64 {
    let nf = n as f64;
    (fi + 1.0)
        * (nf - fi + 1.0)
        * ((fi + params.beta + 1.0) * (1.0 - x) + (nf - fi + params.alpha + 1.0) * x)
}

/// m₊(i): the D^n_{i+1} coefficient.
fn m_plus(n: usize, fi: f64, params: WeightParams, x: f64) -> f64 {
    -(n as f64 - fi) * (n as f64 - fi + 1.0) * (fi + params.beta + 1.0) * x
}

/// The right side G_{ni}(x) of the three-term index recurrence.
fn g_rhs(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    let (alpha, beta) = (params.alpha, params.beta);
    let (nf, fi) = (n as f64, i as f64);
    big_a(n, i, params)
        * ((fi + 1.0) * (nf + beta + 1.0) * (1.0 - x) * jacobi_r_ab(n, alpha + 1.0, beta, x)
            + (nf - fi + 1.0) * (nf + alpha + 1.0) * x * jacobi_r_ab(n, alpha, beta + 1.0, x))
}

/// Independently evaluated dual values for residual checks: the Gram oracle
/// where it is trustworthy, the short Jacobi form beyond.
fn reference_table(n: usize, params: WeightParams, x: f64) -> DualTable {
    if n <= 8 {
        dual_via_gram(n, params, x).expect("Gram oracle within its degree range")
    } else {
        eval_all_short_jacobi(n, params, x)
    }
}

/// Residual of the second-order non-homogeneous index recurrence
/// `m₋(i) D^n_{i−1} + m₀(i) D^n_i + m₊(i) D^n_{i+1} = G_{ni}(x)`, with dual
/// values taken from an independent evaluator (not the sweep that uses this
/// recurrence).
pub fn residual_rec_nonhomog(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    let table = reference_table(n, params, x);
    let fi = i as f64;
    let coefs = [
        m_minus(n, fi, params, x),
        m_zero(n, fi, params, x),
        m_plus(n, fi, params, x),
    ];
    let vals = [
        table.value(i as i64 - 1),
        table.value(i as i64),
        table.value(i as i64 + 1),
    ];
    let sum: f64 = coefs.iter().zip(vals.iter()).map(|(c, v)| c * v).sum();
    let g = g_rhs(n, i, params, x);
    // Scale by coefficient window × value window, not by the individual
    // products: the reference values carry error relative to the table's
    // magnitude, and products can vanish at isolated zeros of D^n_i.
    let c_max = coefs.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
    let v_max = vals.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let scale = (c_max * v_max).max(g.abs());
    scaled(sum - g, scale)
}

/// Residual of the homogeneous fourth-order index recurrence
/// `Σ_{j=−2}^{2} v_j(i) D^n_{i+j}(x) = 0`, scaled by the largest term.
pub fn residual_rec4(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    let table = reference_table(n, params, x);
    let v = rec4_coeffs(n, i, params, x);
    let mut sum = 0.0;
    let mut v_max = 0.0f64;
    let mut d_max = 0.0f64;
    for (idx, &vj) in v.iter().enumerate() {
        let j = idx as i64 - 2;
        let dj = table.value(i as i64 + j);
        sum += vj * dj;
        v_max = v_max.max(vj.abs());
        d_max = d_max.max(dj.abs());
    }
    // Coefficient window × value window: individual products can all vanish
    // simultaneously at shared zeros without the identity being in doubt.
    scaled(sum, v_max * d_max)
}

/// Disagreement between the transcribed v_j displays and the operator
/// composition 𝓝∘𝓜, where 𝓜 is the three-term recurrence operator and
/// `𝓝 = ν₋₁𝓔⁻¹ + ν₀𝓘 + ν₁𝓔` with ν₋₁ = (n−i+α)(n−i+α+1),
/// ν₀ = 2(i+β)(n−i+α), ν₁ = (i+β)(i+β+1). 𝓝 annihilates the right side G, so
/// the composition must equal −v_j termwise. Every coefficient is linear in
/// x, so checking x ∈ {0, 1} checks the polynomial identity; valid for any
/// (n, i) pair.
pub fn rec4_composition_mismatch(n: usize, i: usize, params: WeightParams) -> f64 {
    let (alpha, beta) = (params.alpha, params.beta);
    let (nf, fi) = (n as f64, i as f64);
    let nu_m1 = (nf - fi + alpha) * (nf - fi + alpha + 1.0);
    let nu_0 = 2.0 * (fi + beta) * (nf - fi + alpha);
    let nu_p1 = (fi + beta) * (fi + beta + 1.0);

    let mut worst = 0.0f64;
    let mut scale = f64::MIN_POSITIVE;
    for &x in &[0.0, 1.0] {
        let rc = RecCoeffs::new(n, params, x);
        // Addends of each composed coefficient, kept separate so the scale
        // sees them before cancellation (at n = 0 every v_j is identically
        // zero while the addends are not).
        let q_parts: [&[f64]; 5] = [
            &[nu_m1 * m_minus(n, fi - 1.0, params, x)],
            &[
                nu_m1 * m_zero(n, fi - 1.0, params, x),
                nu_0 * m_minus(n, fi, params, x),
            ],
            &[
                nu_m1 * m_plus(n, fi - 1.0, params, x),
                nu_0 * m_zero(n, fi, params, x),
                nu_p1 * m_minus(n, fi + 1.0, params, x),
            ],
            &[
                nu_0 * m_plus(n, fi, params, x),
                nu_p1 * m_zero(n, fi + 1.0, params, x),
            ],
            &[nu_p1 * m_plus(n, fi + 1.0, params, x)],
        ];
        for (idx, parts) in q_parts.iter().enumerate() {
            let j = idx as i64 - 2;
            let vj = rc.v(j, i as i64);
            let qj: f64 = parts.iter().sum();
            worst = worst.max((vj + qj).abs());
            scale = scale.max(vj.abs());
            for part in *parts {
                scale = scale.max(part.abs());
            }
        }
    }
    worst / scale
}

/// The Hahn difference operator
/// `𝓛 f(i) = a(i) f(i+1) − [a(i)+b(i)] f(i) + b(i) f(i−1)` with
/// `a(i) = (i−N)(i+α+1)` and `b(i) = i(i−β−N−1)`; its eigenfunctions are the
/// Hahn polynomials Q_k(·; α, β; N) with eigenvalues k(k+σ).
pub fn hahn_operator_apply<F: Fn(i64) -> f64>(
    f: F,
    i: i64,
    params: WeightParams,
    big_n: usize,
) -> f64 {
    debug_assert!(i >= 0 && i <= big_n as i64);
    let fi = i as f64;
    let a = (fi - big_n as f64) * (fi + params.alpha + 1.0);
    let b = fi * (fi - params.beta - big_n as f64 - 1.0);
    // a(N) = 0 and b(0) = 0, so f is never sampled outside 0..=N when i is
    // in range; skip those calls entirely rather than multiplying by zero.
    let forward = if a == 0.0 { 0.0 } else { a * f(i + 1) };
    let backward = if b == 0.0 { 0.0 } else { b * f(i - 1) };
    forward - (a + b) * f(i) + backward
}

/// Residual of the intertwining between the continuous and discrete
/// pictures: `L^{(α,β)}` applied in x to D^n_i equals the Hahn operator
/// `𝓛^{(β,α,n)}` applied in the index i.
pub fn residual_intertwining(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n);
    let d = coeffs_shifted_power(n, i, params);
    let d_next = dual_poly(n, i as i64 + 1, params);
    let d_prev = dual_poly(n, i as i64 - 1, params);
    let ((l1, l2), lhs_mag) = jacobi_operator_value(&d, params, x);
    let value_at = |j: i64| poly_eval(&dual_poly(n, j, params), x);
    let swapped = params.swapped();
    let rhs = hahn_operator_apply(value_at, i as i64, swapped, n);
    // Reconstruct the three discrete coefficients for the scale.
    let fi = i as f64;
    let a = (fi - n as f64) * (fi + params.beta + 1.0);
    let b = fi * (fi - params.alpha - n as f64 - 1.0);
    let scale = lhs_mag
        .max(a.abs() * abs_poly_eval(&d_next, x))
        .max((a + b).abs() * abs_poly_eval(&d, x))
        .max(b.abs() * abs_poly_eval(&d_prev, x));
    scaled((l1 + l2) - rhs, scale)
}

/// Residual of the Jacobi parameter-contiguity identity
/// `(n+α+1) R_n^{(α,β+1)} + (n+β+1) R_n^{(α+1,β)} = (n+σ+1) R_n^{(α+1,β+1)}`.
pub fn residual_contiguity(n: usize, params: WeightParams, x: f64) -> f64 {
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let nf = n as f64;
    let t1 = (nf + alpha + 1.0) * jacobi_r_ab(n, alpha, beta + 1.0, x);
    let t2 = (nf + beta + 1.0) * jacobi_r_ab(n, alpha + 1.0, beta, x);
    let t3 = (nf + sigma + 1.0) * jacobi_r_ab(n, alpha + 1.0, beta + 1.0, x);
    scaled(t1 + t2 - t3, t1.abs().max(t2.abs()).max(t3.abs()))
}

/// Residual of the degree-one-in-i structure of H(i) := G_{ni}(x)/A_{ni}:
/// the second difference (𝓔−𝓘)² H must vanish.
pub fn residual_h_linear(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    let (alpha, beta) = (params.alpha, params.beta);
    let nf = n as f64;
    let r_a1b = jacobi_r_ab(n, alpha + 1.0, beta, x);
    let r_ab1 = jacobi_r_ab(n, alpha, beta + 1.0, x);
    let h = |j: f64| -> f64 {
        (j + 1.0) * (nf + beta + 1.0) * (1.0 - x) * r_a1b
            + (nf - j + 1.0) * (nf + alpha + 1.0) * x * r_ab1
    };
    let fi = i as f64;
    let (h0, h1, h2) = (h(fi), h(fi + 1.0), h(fi + 2.0));
    scaled(h2 - 2.0 * h1 + h0, h0.abs().max(h1.abs()).max(h2.abs()))
}
