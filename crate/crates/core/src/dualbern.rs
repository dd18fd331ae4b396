//! Evaluation of the dual Bernstein basis D^n_0 … D^n_n at a point, by five
//! independent algorithms plus a Gram-matrix oracle.
//!
//! The bases: B^n_i are the Bernstein polynomials of degree n and D^n_i are
//! their duals under the weighted inner product
//! `⟨f, g⟩ = ∫₀¹ (1−x)^α x^β f g dx`, so that `⟨B^n_i, D^n_j⟩ = δ_ij`.
//! Everywhere the convention D^n_i := 0 for i < 0 or i > n applies.
//!
//! The algorithms, in increasing order of speed for a full table:
//! * [`dual_via_gram`] — solve the Bernstein Gram system directly (oracle,
//!   small n only);
//! * [`eval_via_jacobi_hahn`] — the Jacobi×Hahn double expansion, O(n²);
//! * [`eval_all_short_jacobi`] — per-i short Jacobi sums, O(min(i,n−i)·n);
//! * [`eval_all_shifted_power`] — exact coefficient vectors, O(n²) per i;
//! * [`build_by_elevation`] — degree elevation from n = 0, O(n²);
//! * [`eval_all_recurrence`] — the O(n) flagship: a three-term recurrence in
//!   the index i swept from both ends toward the middle.

use crate::dd::Dd;
use crate::polyalg::{bernstein_eval, binomial, poly_eval, Basis, Poly};
use crate::specfun::{beta_fn, jacobi_r, jacobi_r_ab, jacobi_r_all, HypSpec, WeightParams};
use crate::{specfun, Error};

/// Which algorithm produced a [`DualTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    JacobiHahn,
    ShortJacobi,
    ShiftedPowerForm,
    DegreeElevation,
    RecurrenceOnI,
    GramOracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::JacobiHahn => "JacobiHahn",
            Method::ShortJacobi => "ShortJacobi",
            Method::ShiftedPowerForm => "ShiftedPowerForm",
            Method::DegreeElevation => "DegreeElevation",
            Method::RecurrenceOnI => "RecurrenceOn_i",
            Method::GramOracle => "GramOracle",
        })
    }
}

/// The values D^n_0(x), …, D^n_n(x) at a single point, tagged with the
/// algorithm that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct DualTable {
    pub n: usize,
    pub params: WeightParams,
    pub x: f64,
    pub values: Vec<f64>,
    pub method: Method,
}

impl DualTable {
    pub fn new(n: usize, params: WeightParams, x: f64, values: Vec<f64>, method: Method) -> Self {
        assert_eq!(values.len(), n + 1, "a degree-n table has n+1 values");
        DualTable {
            n,
            params,
            x,
            values,
            method,
        }
    }

    /// D^n_i(x), with exact 0 for i outside 0..=n.
    pub fn value(&self, i: i64) -> f64 {
        if i < 0 || i > self.n as i64 {
            0.0
        } else {
            self.values[i as usize]
        }
    }
}

/// The scalar constants attached to (n, i): A_{ni} (short-form prefactor and
/// right-side multiplier), the coefficient sequence B_{n0..nn} of the
/// shifted-power expansion, and the degree-elevation constant C_{ni}.
#[derive(Debug, Clone, PartialEq)]
pub struct DualConstants {
    pub n: usize,
    pub i: usize,
    pub a_ni: f64,
    pub b_nj: Vec<f64>,
    pub c_ni: f64,
}

impl DualConstants {
    pub fn new(n: usize, i: usize, params: WeightParams) -> DualConstants {
        assert!(i <= n, "DualConstants requires 0 <= i <= n");
        let (alpha, sigma) = (params.alpha, params.sigma);
        let nf = n as f64;
        let mut b_nj = Vec::with_capacity(n + 1);
        let mut b = 1.0;
        for j in 0..=n {
            b_nj.push(b);
            let jf = j as f64;
            b *= (jf - nf) * (nf + sigma + 1.0 + jf) / ((jf + 1.0) * (alpha + 1.0 + jf));
        }
        DualConstants {
            n,
            i,
            a_ni: big_a(n, i, params),
            b_nj,
            c_ni: big_c(n, i, params),
        }
    }
}

/// `A_{ni} = (−1)^{n−i} (n+1) (σ+1)_n / (K (α+1)_{n−i} (β+1)_i)`, computed as
/// a product of bounded ratios so large n cannot overflow intermediate
/// Pochhammer values.
pub(crate) fn big_a(n: usize, i: usize, params: WeightParams) -> f64 {
    debug_assert!(i <= n);
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let sign = if (n - i) % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = sign * (n as f64 + 1.0) / params.big_k;
    for l in 1..=(n - i) {
        let lf = l as f64;
        acc *= (sigma + lf) / (alpha + lf);
    }
    for l in 1..=i {
        let lf = l as f64;
        acc *= (sigma + (n - i) as f64 + lf) / (beta + lf);
    }
    acc
}

/// The scalar prefactor of the shifted-power expansion,
/// `A_{ni} (α+1)_n / (n+1)! = (−1)^{n−i} (σ+1)_n (α+n−i+1)_i / (K (β+1)_i n!)`.
pub(crate) fn dual_pref(n: usize, i: usize, params: WeightParams) -> f64 {
    debug_assert!(i <= n);
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let sign = if (n - i) % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = sign / params.big_k;
    for l in 1..=n {
        let lf = l as f64;
        acc *= (sigma + lf) / lf;
    }
    for l in 0..i {
        let lf = l as f64;
        acc *= (alpha + (n - i) as f64 + 1.0 + lf) / (beta + 1.0 + lf);
    }
    acc
}

/// Degree-elevation constant
/// `C_{ni} = (−1)^{n−i+1} (2n+σ+2) (σ+1)_n / (K (α+1)_{n−i+1} (β+1)_i)`.
pub(crate) fn big_c(n: usize, i: usize, params: WeightParams) -> f64 {
    debug_assert!(i <= n);
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let sign = if (n - i) % 2 == 0 { -1.0 } else { 1.0 };
    let mut acc =
        sign * (2.0 * n as f64 + sigma + 2.0) / (params.big_k * (alpha + (n - i) as f64 + 1.0));
    for l in 1..=(n - i) {
        let lf = l as f64;
        acc *= (sigma + lf) / (alpha + lf);
    }
    for l in 1..=i {
        let lf = l as f64;
        acc *= (sigma + (n - i) as f64 + lf) / (beta + lf);
    }
    acc
}

/// `F(i, j) = ₃F₂(j−n, −i, 1; −n, −n−α; 1)`: the terminating hypergeometric
/// kernel of the shifted-power coefficients. All its terms are positive and
/// the series stops after `min(i, n−j) + 1` of them.
pub fn f_kernel(n: usize, i: usize, j: usize, alpha: f64) -> f64 {
    assert!(i <= n && j <= n, "f_kernel requires 0 <= i, j <= n");
    // For alpha > −1 the lower parameter −n−α cannot reach a nonpositive
    // integer before the series terminates.
    assert!(alpha > -1.0, "f_kernel requires alpha > -1");
    let nf = n as f64;
    let spec = HypSpec {
        upper: vec![j as f64 - nf, -(i as f64), 1.0],
        lower: vec![-nf, -nf - alpha],
        argument: 1.0,
    };
    specfun::hyp_terminating(&spec).expect("series terminates before any lower-parameter pole")
}

/// Full table through the Jacobi×Hahn double expansion:
/// `D^n_i(x) = K⁻¹ Σ_{k=0}^n (−1)^k (2k+σ)(σ+1)_{k−1}/(α+1)_k ·
/// Q_k(i; β, α; n) · R_k^{(α,β)}(x)` (the k = 0 factor is 1). The σ-singular
/// textbook factor (2k/σ+1)(σ)_k is used in this rewritten form, which stays
/// finite as σ → 0. Cost O(n²) per point.
pub fn eval_via_jacobi_hahn(n: usize, params: WeightParams, x: f64) -> DualTable {
    let (alpha, beta, sigma) = (params.alpha, params.beta, params.sigma);
    let nf = n as f64;
    let r = jacobi_r_all(n, params, x);

    // w_k = (−1)^k g_k R_k(x)/K with the ratio g_{k+1}/g_k maintained
    // multiplicatively.
    let mut w = Vec::with_capacity(n + 1);
    w.push(r[0] / params.big_k);
    let mut g = 1.0;
    for k in 1..=n {
        if k == 1 {
            g *= (2.0 + sigma) / (alpha + 1.0);
        } else {
            let km = (k - 1) as f64;
            g *= (2.0 * km + 2.0 + sigma) * (sigma + km)
                / ((2.0 * km + sigma) * (alpha + 1.0 + km));
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        w.push(sign * g * r[k] / params.big_k);
    }

    // Degree recurrence for the Hahn polynomials Q_k(i; β, α; n); the
    // parameter swap to (β, α) is part of the identity. A_0 uses the
    // cancelled form (β+1)n/(σ+1), which also survives σ = 0.
    let mut hahn_a = vec![0.0f64; n.max(1)];
    let mut hahn_c = vec![0.0f64; n.max(1)];
    if n >= 1 {
        hahn_a[0] = (beta + 1.0) * nf / (sigma + 1.0);
        for k in 1..n {
            let kf = k as f64;
            hahn_a[k] = (kf + sigma) * (kf + beta + 1.0) * (nf - kf)
                / ((2.0 * kf + sigma) * (2.0 * kf + sigma + 1.0));
            hahn_c[k] = kf * (kf + sigma + nf) * (kf + alpha)
                / ((2.0 * kf + sigma - 1.0) * (2.0 * kf + sigma));
        }
    }

    let mut values = vec![0.0f64; n + 1];
    for (i, slot) in values.iter_mut().enumerate() {
        let fi = i as f64;
        let mut acc = w[0];
        if n >= 1 {
            let mut qm1 = 1.0;
            let mut q = 1.0 - fi / hahn_a[0];
            acc += w[1] * q;
            for k in 1..n {
                let qnext = ((hahn_a[k] + hahn_c[k] - fi) * q - hahn_c[k] * qm1) / hahn_a[k];
                qm1 = q;
                q = qnext;
                acc += w[k + 1] * q;
            }
        }
        *slot = acc;
    }
    DualTable::new(n, params, x, values, Method::JacobiHahn)
}

/// Single value D^n_i(x) as a short combination of min(i, n−i)+1 shifted
/// Jacobi polynomials with shifted parameters; cost O(min(i,n−i)·n).
pub fn eval_via_short_jacobi(n: usize, i: usize, params: WeightParams, x: f64) -> f64 {
    assert!(i <= n, "eval_via_short_jacobi requires 0 <= i <= n");
    let (alpha, beta) = (params.alpha, params.beta);
    let pref = big_a(n, i, params) / (n as f64 + 1.0);
    if i <= n - i {
        let mut c = 1.0;
        let mut sum = 0.0;
        for k in 0..=i {
            sum += c * jacobi_r_ab(n - k, alpha, beta + k as f64 + 1.0, x);
            if k < i {
                c *= (i - k) as f64 / (n - k) as f64;
            }
        }
        pref * sum
    } else {
        let i2 = n - i;
        let mut c = 1.0;
        let mut sum = 0.0;
        for k in 0..=i2 {
            sum += c * jacobi_r_ab(n - k, alpha + k as f64 + 1.0, beta, x);
            if k < i2 {
                c *= -((i2 - k) as f64) / (n - k) as f64;
            }
        }
        pref * sum
    }
}

/// Full table by the short Jacobi form, one value at a time.
pub fn eval_all_short_jacobi(n: usize, params: WeightParams, x: f64) -> DualTable {
    let values = (0..=n)
        .map(|i| eval_via_short_jacobi(n, i, params, x))
        .collect();
    DualTable::new(n, params, x, values, Method::ShortJacobi)
}

/// Exact coefficients of D^n_i in powers of (1−x):
/// `D^n_i(x) = Σ_j c_j (1−x)^j` with `c_j = pref · B_{nj} · F(i, j)`. This is
/// the representation used for exact polynomial calculus (derivatives,
/// weighted integrals) and for endpoint evaluation.
pub fn coeffs_shifted_power(n: usize, i: usize, params: WeightParams) -> Poly {
    assert!(i <= n, "coeffs_shifted_power requires 0 <= i <= n");
    let (alpha, sigma) = (params.alpha, params.sigma);
    let nf = n as f64;
    let pref = dual_pref(n, i, params);
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut b = 1.0;
    for j in 0..=n {
        coeffs.push(pref * b * f_kernel(n, i, j, alpha));
        let jf = j as f64;
        b *= (jf - nf) * (nf + sigma + 1.0 + jf) / ((jf + 1.0) * (alpha + 1.0 + jf));
    }
    Poly::new(Basis::ShiftedPower, coeffs)
}

/// Full table by evaluating the exact shifted-power coefficients per i.
pub fn eval_all_shifted_power(n: usize, params: WeightParams, x: f64) -> DualTable {
    let values = (0..=n)
        .map(|i| poly_eval(&coeffs_shifted_power(n, i, params), x))
        .collect();
    DualTable::new(n, params, x, values, Method::ShiftedPowerForm)
}

/// One degree-elevation step:
/// `D^{n+1}_i = (1 − i/(n+1)) D^n_i + (i/(n+1)) D^n_{i−1} + C_{ni} R^{(α,β)}_{n+1}(x)`
/// for 0 ≤ i ≤ n+1, with the out-of-range convention on the inputs. Cost O(n).
pub fn elevate_degree(table: &DualTable) -> DualTable {
    let (n, params, x) = (table.n, table.params, table.x);
    let (alpha, beta) = (params.alpha, params.beta);
    let n1f = n as f64 + 1.0;
    let r_next = jacobi_r(n + 1, params, x);
    let mut c = big_c(n, 0, params);
    let mut values = Vec::with_capacity(n + 2);
    for i in 0..=(n as i64 + 1) {
        let fi = i as f64;
        values.push((1.0 - fi / n1f) * table.value(i) + (fi / n1f) * table.value(i - 1) + c * r_next);
        if i <= n as i64 {
            // C_{n,i+1}/C_{n,i} = −(α+n−i+1)/(β+i+1)
            c *= -(alpha + (n as i64 - i) as f64 + 1.0) / (beta + fi + 1.0);
        }
    }
    DualTable::new(n + 1, params, x, values, table.method)
}

/// Full table built by repeated degree elevation from the n = 0 table
/// [1/K]; cost O(n²).
pub fn build_by_elevation(n: usize, params: WeightParams, x: f64) -> DualTable {
    let mut table = DualTable::new(
        0,
        params,
        x,
        vec![1.0 / params.big_k],
        Method::DegreeElevation,
    );
    for _ in 0..n {
        table = elevate_degree(&table);
    }
    table
}

/// Distance from an endpoint below which [`eval_all_recurrence`] switches to
/// the shifted-power representation; both solved forms of the interior
/// recurrence divide by x or x−1.
const ENDPOINT_THRESHOLD: f64 = 1e-10;

/// Forward/backward midpoint disagreement (relative to the table magnitude)
/// above which the sweep result is discarded in favour of the boundary-value
/// rescue. The rescue is also O(n), so the threshold is set low: it only
/// needs to keep the cheap sweep on the bulk of the interior.
const MIDPOINT_HEALTH_TOL: f64 = 1e-10;

/// Full table by the O(n) flagship algorithm: a second-order non-homogeneous
/// recurrence in the index i,
/// `m₋(i) D^n_{i−1} + m₀(i) D^n_i + m₊(i) D^n_{i+1} = G_{ni}(x)`,
/// seeded near both ends from the short Jacobi form (1- and 2-term sums) and
/// swept from each end toward the middle:
///
/// `D_{i+1} = [ (i+1)(n−i+1)((i+β+1)(1−x)+(n−i+α+1)x)·D_i
///             + i(i+1)(n−i+α+1)(x−1)·D_{i−1} − G_{ni}(x) ] / ((n−i)(n−i+1)(i+β+1)x)`
///
/// forward while i+1 ≤ ⌈n/2⌉, and the same relation solved for D_{i−1}
/// backward from i = n−1. The two sweeps overlap on the two middle entries;
/// their relative disagreement is a runtime health check, and a failed check
/// switches to solving the same recurrence rows as a tridiagonal boundary
/// value problem, so the cost stays O(n) even near the ends of the x range.
/// If min(x, 1−x) is below 1e−10 the whole table comes from the shifted-power
/// representation instead (endpoint regime). Total cost O(n).
pub fn eval_all_recurrence(n: usize, params: WeightParams, x: f64) -> DualTable {
    let values = if x.min(1.0 - x) < ENDPOINT_THRESHOLD {
        endpoint_values(n, params, x)
    } else {
        recurrence_sweep(n, params, x).0
    };
    DualTable::new(n, params, x, values, Method::RecurrenceOnI)
}

/// The forward/backward disagreement of the two middle entries in the
/// interior sweep of [`eval_all_recurrence`], relative to the table
/// magnitude; exactly 0 in the endpoint regime (no sweep runs there).
pub fn recurrence_midpoint_discrepancy(n: usize, params: WeightParams, x: f64) -> f64 {
    if x.min(1.0 - x) < ENDPOINT_THRESHOLD {
        0.0
    } else {
        recurrence_sweep(n, params, x).1
    }
}

fn recurrence_sweep(n: usize, params: WeightParams, x: f64) -> (Vec<f64>, f64) {
    let (alpha, beta) = (params.alpha, params.beta);
    let nf = n as f64;
    if n == 0 {
        return (vec![eval_via_short_jacobi(0, 0, params, x)], 0.0);
    }
    if n == 1 {
        return (
            vec![
                eval_via_short_jacobi(1, 0, params, x),
                eval_via_short_jacobi(1, 1, params, x),
            ],
            0.0,
        );
    }

    // The two fixed Jacobi values entering the right side G_{ni}(x).
    let r_a1b = jacobi_r_ab(n, alpha + 1.0, beta, x);
    let r_ab1 = jacobi_r_ab(n, alpha, beta + 1.0, x);
    let g_at = |fi: f64, a_ni: f64| -> f64 {
        a_ni * ((fi + 1.0) * (nf + beta + 1.0) * (1.0 - x) * r_a1b
            + (nf - fi + 1.0) * (nf + alpha + 1.0) * x * r_ab1)
    };
    let m0_at = |fi: f64| -> f64 {
        (fi + 1.0) * (nf - fi + 1.0) * ((fi + beta + 1.0) * (1.0 - x) + (nf - fi + alpha + 1.0) * x)
    };

    let m = n.div_ceil(2);
    let mut vals = vec![0.0f64; n + 1];

    // Forward half: seeds at i = 0, 1, then solve for D_{i+1} through the
    // midpoint. A_{ni} is maintained by its ratio update.
    vals[0] = eval_via_short_jacobi(n, 0, params, x);
    vals[1] = eval_via_short_jacobi(n, 1, params, x);
    let mut a_cur = big_a(n, 0, params);
    let mut i = 1usize;
    while i + 1 <= m {
        let fi = i as f64;
        a_cur *= -(alpha + nf - fi + 1.0) / (beta + fi);
        let m_minus = fi * (fi + 1.0) * (nf - fi + alpha + 1.0) * (x - 1.0);
        let denom = (nf - fi) * (nf - fi + 1.0) * (fi + beta + 1.0) * x;
        vals[i + 1] = (m0_at(fi) * vals[i] + m_minus * vals[i - 1] - g_at(fi, a_cur)) / denom;
        i += 1;
    }
    let fwd_m1 = vals[m - 1];
    let fwd_m = vals[m];

    // Backward half: seeds at i = n, n−1, then solve for D_{i−1} down to the
    // midpoint (overwriting the overlap entries).
    vals[n] = eval_via_short_jacobi(n, n, params, x);
    vals[n - 1] = eval_via_short_jacobi(n, n - 1, params, x);
    let mut a_cur = big_a(n, n, params);
    for i in (m..=n - 1).rev() {
        let fi = i as f64;
        a_cur *= (beta + fi + 1.0) / (-(alpha + nf - fi));
        let m_plus = (nf - fi) * (nf - fi + 1.0) * (fi + beta + 1.0) * x;
        let denom = fi * (fi + 1.0) * (nf - fi + alpha + 1.0) * (x - 1.0);
        vals[i - 1] = (g_at(fi, a_cur) + m_plus * vals[i + 1] - m0_at(fi) * vals[i]) / denom;
    }

    // Health check on the doubly-computed middle entries.
    let mut max_mag = fwd_m1.abs().max(fwd_m.abs());
    for &v in &vals {
        max_mag = max_mag.max(v.abs());
    }
    max_mag = max_mag.max(f64::MIN_POSITIVE);
    let disc = (fwd_m1 - vals[m - 1]).abs().max((fwd_m - vals[m]).abs()) / max_mag;
    if disc > MIDPOINT_HEALTH_TOL {
        // The sweeps disagree beyond tolerance: switch to the boundary-value
        // rescue, still O(n). Guard it with an independent check of the two
        // entries next to the pinned boundaries against their own short
        // Jacobi sums (relative to the rescued table's magnitude); on the
        // remote chance that fails too, rebuild everything from the short
        // form rather than returning a silently bad table.
        let rescued = recurrence_bvp(n, params, x);
        let mut rescue_mag = f64::MIN_POSITIVE;
        for &v in &rescued {
            rescue_mag = rescue_mag.max(v.abs());
        }
        let dev1 = (rescued[1] - eval_via_short_jacobi(n, 1, params, x)).abs();
        let dev2 = (rescued[n - 1] - eval_via_short_jacobi(n, n - 1, params, x)).abs();
        if dev1.max(dev2) / rescue_mag <= 1e-8 {
            return (rescued, disc);
        }
        for (idx, v) in vals.iter_mut().enumerate() {
            *v = eval_via_short_jacobi(n, idx, params, x);
        }
    } else {
        // Forward owns 0..=m−1, backward owns m..=n.
        vals[m - 1] = fwd_m1;
    }
    (vals, disc)
}

/// Boundary-value rescue for [`recurrence_sweep`]. Near the ends of the x
/// range the wanted table is an intermediate solution of the recurrence: one
/// homogeneous mode grows much faster than the table itself, so an
/// initial-value sweep from either end amplifies seed-level rounding without
/// bound, regardless of the working precision. Pinning D_0 and D_n (each a
/// one-term short Jacobi sum) and solving the interior rows
/// `m₋(i) D_{i−1} + m₀(i) D_i − m₊(i) D_{i+1} = G_{ni}(x)`, i = 1 … n−1,
/// as one tridiagonal system controls both growing modes — the classical
/// boundary-value cure for such recurrences. Rows are scaled to unit max
/// magnitude and eliminated with partial pivoting (one superdiagonal of
/// fill), keeping the rescue O(n).
fn recurrence_bvp(n: usize, params: WeightParams, x: f64) -> Vec<f64> {
    debug_assert!(n >= 2, "callers handle n ≤ 1 before sweeping");
    let (alpha, beta) = (params.alpha, params.beta);
    let nf = n as f64;
    let r_a1b = jacobi_r_ab(n, alpha + 1.0, beta, x);
    let r_ab1 = jacobi_r_ab(n, alpha, beta + 1.0, x);

    let d0 = eval_via_short_jacobi(n, 0, params, x);
    let dn = eval_via_short_jacobi(n, n, params, x);

    // Assemble rows 1..=n−1; unknowns are D_1 … D_{n−1}.
    let rows = n - 1;
    let mut sub = vec![0.0f64; rows];
    let mut diag = vec![0.0f64; rows];
    let mut sup = vec![0.0f64; rows];
    let mut rhs = vec![0.0f64; rows];
    let mut a_cur = big_a(n, 0, params);
    for (k, fi) in (1..=rows).map(|i| (i - 1, i as f64)) {
        a_cur *= -(alpha + nf - fi + 1.0) / (beta + fi);
        let g = a_cur
            * ((fi + 1.0) * (nf + beta + 1.0) * (1.0 - x) * r_a1b
                + (nf - fi + 1.0) * (nf + alpha + 1.0) * x * r_ab1);
        let m_minus = fi * (fi + 1.0) * (nf - fi + alpha + 1.0) * (x - 1.0);
        let m_zero = (fi + 1.0) * (nf - fi + 1.0)
            * ((fi + beta + 1.0) * (1.0 - x) + (nf - fi + alpha + 1.0) * x);
        let m_plus = (nf - fi) * (nf - fi + 1.0) * (fi + beta + 1.0) * x;
        let scale = m_minus.abs().max(m_zero.abs()).max(m_plus.abs());
        sub[k] = m_minus / scale;
        diag[k] = m_zero / scale;
        sup[k] = -m_plus / scale;
        rhs[k] = g / scale;
    }
    // Fold the known boundary values into the first and last right sides.
    rhs[0] -= sub[0] * d0;
    sub[0] = 0.0;
    rhs[rows - 1] -= sup[rows - 1] * dn;
    sup[rows - 1] = 0.0;

    // Tridiagonal LU with partial pivoting; `fill` is the extra superdiagonal
    // a row swap introduces.
    let mut fill = vec![0.0f64; rows];
    for k in 0..rows - 1 {
        if sub[k + 1].abs() > diag[k].abs() {
            // Swap rows k and k+1 (columns k, k+1, k+2).
            let (rk, rk1) = (
                (sub[k + 1], diag[k + 1], sup[k + 1], rhs[k + 1]),
                (diag[k], sup[k], fill[k], rhs[k]),
            );
            diag[k] = rk.0;
            sup[k] = rk.1;
            fill[k] = rk.2;
            rhs[k] = rk.3;
            sub[k + 1] = rk1.0;
            diag[k + 1] = rk1.1;
            sup[k + 1] = rk1.2;
            rhs[k + 1] = rk1.3;
        }
        let factor = sub[k + 1] / diag[k];
        sub[k + 1] = 0.0;
        diag[k + 1] -= factor * sup[k];
        sup[k + 1] -= factor * fill[k];
        rhs[k + 1] -= factor * rhs[k];
    }

    let mut vals = vec![0.0f64; n + 1];
    vals[0] = d0;
    vals[n] = dn;
    vals[rows] = rhs[rows - 1] / diag[rows - 1];
    if rows >= 2 {
        vals[rows - 1] = (rhs[rows - 2] - sup[rows - 2] * vals[rows]) / diag[rows - 2];
    }
    for k in (0..rows.saturating_sub(2)).rev() {
        vals[k + 1] = (rhs[k] - sup[k] * vals[k + 2] - fill[k] * vals[k + 3]) / diag[k];
    }
    vals
}

fn endpoint_values(n: usize, params: WeightParams, x: f64) -> Vec<f64> {
    if n <= 8 {
        // Small n: evaluate the exact coefficient polynomials directly.
        return (0..=n)
            .map(|i| poly_eval(&coeffs_shifted_power(n, i, params), x))
            .collect();
    }
    if x <= ENDPOINT_THRESHOLD {
        // Near x = 0 the full alternating coefficient sum cancels
        // catastrophically for large n; route through the reflection
        // D^n_i(x; α, β) = D^n_{n−i}(1−x; β, α), whose argument lands in the
        // well-conditioned small-(1−x) branch below.
        let mut v = endpoint_values(n, params.swapped(), 1.0 - x);
        v.reverse();
        return v;
    }
    // x within 1e−10 of 1: the series in t = 1−x needs only a handful of
    // terms, so build coefficients lazily and stop once terms stop mattering.
    let t = 1.0 - x;
    let (alpha, sigma) = (params.alpha, params.sigma);
    let nf = n as f64;
    (0..=n)
        .map(|i| {
            let pref = dual_pref(n, i, params);
            let mut b = 1.0;
            let mut tpow = 1.0;
            let mut sum = 0.0;
            for j in 0..=n {
                let term = pref * b * f_kernel(n, i, j, alpha) * tpow;
                sum += term;
                if term.abs() <= sum.abs() * 1e-20 {
                    break;
                }
                let jf = j as f64;
                b *= (jf - nf) * (nf + sigma + 1.0 + jf) / ((jf + 1.0) * (alpha + 1.0 + jf));
                tpow *= t;
            }
            sum
        })
        .collect()
}

/// The (n+1)×(n+1) Bernstein Gram matrix under the weight:
/// entry (i, j) = C(n,i) C(n,j) B(i+j+β+1, 2n−i−j+α+1), built from one Beta
/// anchor and moment ratios.
pub fn gram_matrix(n: usize, params: WeightParams) -> Vec<Vec<f64>> {
    let (alpha, beta) = (params.alpha, params.beta);
    let nf = n as f64;
    let mut moments = Vec::with_capacity(2 * n + 1);
    let mut m = beta_fn(beta + 1.0, alpha + 2.0 * nf + 1.0).expect("positive Beta arguments");
    for s in 0..=(2 * n) {
        moments.push(m);
        if s < 2 * n {
            let sf = s as f64;
            m *= (beta + sf + 1.0) / (alpha + 2.0 * nf - sf);
        }
    }
    (0..=n)
        .map(|i| {
            let bi = binomial(n, i);
            (0..=n)
                .map(|j| bi * binomial(n, j) * moments[i + j])
                .collect()
        })
        .collect()
}

/// Brute-force oracle: factor the Gram matrix once (Cholesky) and solve
/// G·c_j = e_j for each j; then values[j] = Σ_i c_{j,i} B^n_i(x). Capped at
/// n ≤ 12, where the geometric growth of the Gram condition number still
/// leaves usable accuracy.
pub fn dual_via_gram(n: usize, params: WeightParams, x: f64) -> Result<DualTable, Error> {
    if n > 12 {
        return Err(Error::InvalidArgument(format!(
            "the Gram oracle is restricted to n <= 12 by conditioning (got n = {n})"
        )));
    }
    let g = gram_matrix(n, params);
    let dim = n + 1;

    let mut l = vec![vec![0.0f64; dim]; dim];
    for j in 0..dim {
        for i in j..dim {
            let mut sum = g[i][j];
            for k in 0..j {
                sum -= l[i][k] * l[j][k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::Factorization(format!(
                        "Gram matrix lost positive definiteness at pivot {j} (n = {n})"
                    )));
                }
                l[j][j] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }

    let mut values = vec![0.0f64; dim];
    let mut y = vec![0.0f64; dim];
    let mut c = vec![0.0f64; dim];
    for (j, slot) in values.iter_mut().enumerate() {
        for r in 0..dim {
            let mut s = if r == j { 1.0 } else { 0.0 };
            for k in 0..r {
                s -= l[r][k] * y[k];
            }
            y[r] = s / l[r][r];
        }
        for r in (0..dim).rev() {
            let mut s = y[r];
            for k in (r + 1)..dim {
                s -= l[k][r] * c[k];
            }
            c[r] = s / l[r][r];
        }
        *slot = (0..dim).map(|i| c[i] * bernstein_eval(n, i as i64, x)).sum();
    }
    Ok(DualTable::new(n, params, x, values, Method::GramOracle))
}

/// Dot product `Σ_i d_i · D^n_i(x)` of a coefficient vector with a table.
pub fn eval_combination(d: &[f64], table: &DualTable) -> Result<f64, Error> {
    if d.len() != table.values.len() {
        return Err(Error::InvalidArgument(format!(
            "coefficient vector length {} does not match table length {}",
            d.len(),
            table.values.len()
        )));
    }
    Ok(d.iter().zip(table.values.iter()).map(|(a, v)| a * v).sum())
}

/// `⟨B^n_i, D^n_j⟩ − δ_ij`, the biorthogonality defect, computed
/// semi-analytically: the inner product collapses to
/// `P · Σ_k B_{nk} ρ_k F(j,k)` with `P = C(n,i) · pref(n,j) · B(β+i+1, α+n−i+1)`
/// and `ρ_{k+1}/ρ_k = (α+n−i+k+1)/(σ+n+k+1)`. The sum cancels by up to
/// eleven orders of magnitude at n = 12, so it is accumulated in
/// double-double arithmetic with every ratio component formed exactly there;
/// the scalar prefactor stays in f64, where its rounding only scales δ_ij.
pub fn duality_defect(n: usize, i: usize, j: usize, params: WeightParams) -> f64 {
    assert!(i <= n && j <= n, "duality_defect requires 0 <= i, j <= n");
    let (alpha, beta) = (params.alpha, params.beta);
    let nf = n as f64;
    let m0 = beta_fn(beta + i as f64 + 1.0, alpha + nf - i as f64 + 1.0)
        .expect("positive Beta arguments");
    let p = binomial(n, i) * dual_pref(n, j, params) * m0;

    let alpha_dd = Dd::from_f64(alpha);
    let sigma_dd = alpha_dd.add(Dd::from_f64(beta)).add(Dd::ONE);
    let mut b = Dd::ONE;
    let mut rho = Dd::ONE;
    let mut s = Dd::ZERO;
    for k in 0..=n {
        s = s.add(b.mul(rho).mul(f_kernel_dd(n, j, k, alpha_dd)));
        if k < n {
            let kf = k as f64;
            let num = Dd::from_f64(kf - nf).mul(sigma_dd.add(Dd::from_f64(nf + 1.0 + kf)));
            let den = Dd::from_f64(kf + 1.0).mul(alpha_dd.add(Dd::from_f64(1.0 + kf)));
            b = b.mul(num.div(den));
            let rho_num = alpha_dd.add(Dd::from_f64(nf - i as f64 + kf + 1.0));
            let rho_den = sigma_dd.add(Dd::from_f64(nf + kf + 1.0));
            rho = rho.mul(rho_num.div(rho_den));
        }
    }
    let delta = if i == j { 1.0 } else { 0.0 };
    p * s.to_f64() - delta
}

/// F(i_slot, j_slot) in double-double arithmetic; same series as
/// [`f_kernel`], with term ratios formed from exact integers and dd images
/// of α.
fn f_kernel_dd(n: usize, i_slot: usize, j_slot: usize, alpha_dd: Dd) -> Dd {
    let kstar = i_slot.min(n - j_slot);
    let mut sum = Dd::ONE;
    let mut term = Dd::ONE;
    for l in 0..kstar {
        let num = ((j_slot + l) as f64 - n as f64) * (l as f64 - i_slot as f64);
        let l_minus_n = Dd::from_f64(l as f64 - n as f64);
        let den = l_minus_n.mul(l_minus_n.sub(alpha_dd));
        term = term.mul(Dd::from_f64(num).div(den));
        sum = sum.add(term);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CANONICAL_PARAM_SETS;

    fn wp(alpha: f64, beta: f64) -> WeightParams {
        WeightParams::new(alpha, beta).unwrap()
    }

    /// Max |a−b| over a table pair, relative to the max magnitude in `a`.
    fn table_dev(a: &[f64], b: &[f64]) -> f64 {
        let scale = a.iter().fold(f64::MIN_POSITIVE, |acc, v| acc.max(v.abs()));
        a.iter()
            .zip(b)
            .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()))
            / scale
    }

    #[test]
    fn method_display_names() {
        assert_eq!(Method::JacobiHahn.to_string(), "JacobiHahn");
        assert_eq!(Method::ShortJacobi.to_string(), "ShortJacobi");
        assert_eq!(Method::ShiftedPowerForm.to_string(), "ShiftedPowerForm");
        assert_eq!(Method::DegreeElevation.to_string(), "DegreeElevation");
        assert_eq!(Method::RecurrenceOnI.to_string(), "RecurrenceOn_i");
        assert_eq!(Method::GramOracle.to_string(), "GramOracle");
    }

    #[test]
    fn table_value_is_zero_out_of_range() {
        let t = eval_via_jacobi_hahn(3, wp(0.0, 0.0), 0.4);
        assert_eq!(t.value(-1), 0.0);
        assert_eq!(t.value(4), 0.0);
        assert_eq!(t.value(2), t.values[2]);
    }

    #[test]
    fn big_a_and_big_c_hand_values() {
        let p = wp(0.0, 0.0);
        assert_eq!(big_a(1, 0, p), -4.0);
        assert_eq!(big_a(1, 1, p), 4.0);
        assert_eq!(big_c(0, 0, p), -3.0);
        assert_eq!(dual_pref(1, 0, p), -2.0);
    }

    #[test]
    fn dual_constants_ratio_invariants() {
        for &(a, b) in &CANONICAL_PARAM_SETS {
            let p = wp(a, b);
            let n = 9;
            for i in 0..n {
                let c0 = DualConstants::new(n, i, p);
                let c1 = DualConstants::new(n, i + 1, p);
                let expected = -(p.alpha + (n - i) as f64) / (p.beta + i as f64 + 1.0);
                let ratio = c1.a_ni / c0.a_ni;
                assert!(
                    (ratio - expected).abs() <= 1e-12 * expected.abs().max(1.0),
                    "A ratio at i = {i}, params = ({a}, {b})"
                );
                let c_expected = -(p.alpha + (n - i) as f64 + 1.0) / (p.beta + i as f64 + 1.0);
                let c_ratio = c1.c_ni / c0.c_ni;
                assert!(
                    (c_ratio - c_expected).abs() <= 1e-12 * c_expected.abs().max(1.0),
                    "C ratio at i = {i}, params = ({a}, {b})"
                );
                assert_eq!(c0.b_nj[0], 1.0);
            }
        }
    }

    #[test]
    fn f_kernel_degenerate_slots_are_one() {
        assert_eq!(f_kernel(5, 0, 3, 0.7), 1.0);
        assert_eq!(f_kernel(5, 4, 5, -0.3), 1.0);
    }

    #[test]
    fn f_kernel_hand_value() {
        assert!((f_kernel(2, 1, 0, 0.0) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn f_kernel_matches_reference_values() {
        let refs = [
            (8usize, 5usize, 3usize, -0.33, 1.590747860385046038),
            (12, 7, 4, -0.5, 1.614918371180684719),
            (2, 1, 0, 0.0, 1.5),
        ];
        for (n, i, j, alpha, expected) in refs {
            let got = f_kernel(n, i, j, alpha);
            assert!(
                (got - expected).abs() <= 1e-13 * expected,
                "F({i},{j}) at n={n}, alpha={alpha}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn jacobi_hahn_degree_zero_and_one() {
        let p = wp(0.0, 0.0);
        let t0 = eval_via_jacobi_hahn(0, p, 0.3);
        assert_eq!(t0.values, vec![1.0]);
        let t1 = eval_via_jacobi_hahn(1, p, 0.5);
        assert!((t1.values[0] - 1.0).abs() < 1e-14);
        assert!((t1.values[1] - 1.0).abs() < 1e-14);
        for &x in &[0.1, 0.37, 0.8] {
            let t = eval_via_jacobi_hahn(1, p, x);
            assert!((t.values[0] - (4.0 - 6.0 * x)).abs() < 1e-13);
            assert!((t.values[1] - (6.0 * x - 2.0)).abs() < 1e-13);
        }
    }

    #[test]
    fn short_jacobi_degree_zero_and_golden_values() {
        let p = wp(0.0, 0.0);
        assert_eq!(eval_via_short_jacobi(0, 0, p, 0.77), 1.0);
        // Exact binary results at x = 1/4: every factor is a power of two
        // away from an integer.
        assert_eq!(eval_via_short_jacobi(1, 0, p, 0.25), 2.5);
        assert_eq!(eval_via_short_jacobi(1, 1, p, 0.25), -0.5);
        assert!((eval_via_short_jacobi(1, 0, p, 0.0) - 4.0).abs() < 1e-14);
    }

    #[test]
    fn coeffs_shifted_power_golden_cases() {
        let p = wp(0.0, 0.0);
        let c0 = coeffs_shifted_power(0, 0, p);
        assert_eq!(c0.coeffs, vec![1.0]);
        let c = coeffs_shifted_power(1, 0, p);
        assert_eq!(c.basis, Basis::ShiftedPower);
        assert_eq!(c.coeffs, vec![-2.0, 6.0]);
    }

    #[test]
    fn frozen_reference_table_n5_uniform() {
        // 50-digit reference values for D^5_i(0.37) under the uniform weight.
        let expected = [
            2.411746719600000000,
            -17.43097699800000000,
            44.97252879600000000,
            -34.68999159600000000,
            12.58757119800000000,
            -1.850878119600000000,
        ];
        let p = wp(0.0, 0.0);
        for t in [
            eval_via_jacobi_hahn(5, p, 0.37),
            eval_all_short_jacobi(5, p, 0.37),
            eval_all_shifted_power(5, p, 0.37),
            build_by_elevation(5, p, 0.37),
            eval_all_recurrence(5, p, 0.37),
            dual_via_gram(5, p, 0.37).unwrap(),
        ] {
            assert!(
                table_dev(&expected, &t.values) <= 1e-12,
                "method {} deviates: {:?}",
                t.method,
                t.values
            );
        }
    }

    #[test]
    fn frozen_reference_table_n10_asymmetric() {
        let expected = [
            78554.62767335737043,
            7282.577472901395759,
            -174334.0648698849815,
            297222.9056685995120,
            -271252.5603587251419,
            162727.9448333284668,
            -67875.77805066663744,
            19622.59005064634939,
            -3732.523887941993584,
            408.0528153053942255,
            -16.62425241417185686,
        ];
        let p = wp(-0.33, 5.66);
        for t in [
            eval_via_jacobi_hahn(10, p, 0.37),
            eval_all_short_jacobi(10, p, 0.37),
            eval_all_shifted_power(10, p, 0.37),
            build_by_elevation(10, p, 0.37),
            eval_all_recurrence(10, p, 0.37),
        ] {
            // The shifted-power form loses digits to cancellation as the
            // degree grows; the other four stay sharp.
            let tol = if t.method == Method::ShiftedPowerForm {
                1e-8
            } else {
                1e-10
            };
            let dev = table_dev(&expected, &t.values);
            assert!(dev <= tol, "method {} deviates: {dev:e}", t.method);
        }
    }

    #[test]
    fn frozen_reference_table_n12_chebyshev() {
        let expected = [
            -0.06329570667819760151,
            1.352984520443284921,
            -8.276774835592704468,
            24.15209642963285005,
            -30.44682634031739605,
            -24.19878181937103770,
            171.3101431819655947,
            -342.7408152120421287,
            403.1317094389674806,
            -300.8902864956814970,
            132.3289420715369951,
            -22.78460609286693331,
            0.9885113646632221994,
        ];
        let p = wp(-0.5, -0.5);
        for t in [
            eval_via_jacobi_hahn(12, p, 0.9),
            eval_all_short_jacobi(12, p, 0.9),
            eval_all_shifted_power(12, p, 0.9),
            build_by_elevation(12, p, 0.9),
            eval_all_recurrence(12, p, 0.9),
        ] {
            assert!(
                table_dev(&expected, &t.values) <= 1e-10,
                "method {} deviates",
                t.method
            );
        }
    }

    #[test]
    fn frozen_reference_table_n2_uniform() {
        let expected = [0.9, 3.6, -1.5];
        let p = wp(0.0, 0.0);
        for t in [
            eval_via_jacobi_hahn(2, p, 0.3),
            eval_all_short_jacobi(2, p, 0.3),
            eval_all_recurrence(2, p, 0.3),
            dual_via_gram(2, p, 0.3).unwrap(),
        ] {
            assert!(
                table_dev(&expected, &t.values) <= 1e-13,
                "method {} deviates: {:?}",
                t.method,
                t.values
            );
        }
    }

    #[test]
    fn elevation_from_degree_zero_matches_hand_row() {
        let p = wp(0.0, 0.0);
        let t1 = build_by_elevation(1, p, 0.37);
        assert!((t1.values[0] - (4.0 - 6.0 * 0.37)).abs() < 1e-14);
        assert!((t1.values[1] - (6.0 * 0.37 - 2.0)).abs() < 1e-14);
        assert_eq!(t1.method, Method::DegreeElevation);
    }

    #[test]
    fn recurrence_degree_one_is_exact() {
        let t = eval_all_recurrence(1, wp(0.0, 0.0), 0.25);
        assert_eq!(t.values, vec![2.5, -0.5]);
        assert_eq!(t.method, Method::RecurrenceOnI);
    }

    #[test]
    fn recurrence_endpoint_matches_coefficient_path_bitwise() {
        // Spelled in the fallback rule: at the endpoint the recurrence table
        // IS the shifted-power evaluation, same code path.
        let p = wp(-0.33, 5.66);
        let t = eval_all_recurrence(5, p, 0.0);
        for i in 0..=5 {
            let direct = poly_eval(&coeffs_shifted_power(5, i, p), 0.0);
            assert_eq!(t.values[i], direct, "i = {i}");
        }
    }

    #[test]
    fn recurrence_endpoint_mirror_for_large_n() {
        // n > 8 uses the reflected route near x = 0; it must match the short
        // form, which has no endpoint trouble.
        for &(a, b) in &CANONICAL_PARAM_SETS {
            let p = wp(a, b);
            for &x in &[0.0, 1.0] {
                let t = eval_all_recurrence(12, p, x);
                let s = eval_all_short_jacobi(12, p, x);
                assert!(
                    table_dev(&s.values, &t.values) <= 1e-9,
                    "params = ({a}, {b}), x = {x}"
                );
            }
        }
    }

    #[test]
    fn recurrence_midpoint_discrepancy_is_small() {
        for &(a, b) in &CANONICAL_PARAM_SETS {
            let p = wp(a, b);
            for n in [2usize, 5, 9, 14] {
                for &x in &[0.1, 0.5, 0.9] {
                    let d = recurrence_midpoint_discrepancy(n, p, x);
                    assert!(d <= 1e-8, "n = {n}, x = {x}, params = ({a}, {b}): {d:e}");
                }
            }
        }
        assert_eq!(recurrence_midpoint_discrepancy(9, wp(0.0, 0.0), 0.0), 0.0);
    }

    #[test]
    fn gram_matrix_small_cases() {
        let g0 = gram_matrix(0, wp(0.0, 0.0));
        assert!((g0[0][0] - 1.0).abs() < 1e-15);
        let g1 = gram_matrix(1, wp(0.0, 0.0));
        let expected = [[1.0 / 3.0, 1.0 / 6.0], [1.0 / 6.0, 1.0 / 3.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((g1[i][j] - expected[i][j]).abs() < 1e-15, "({i},{j})");
            }
        }
    }

    #[test]
    fn gram_oracle_hand_values_and_cap() {
        let p = wp(0.0, 0.0);
        let t0 = dual_via_gram(0, p, 0.5).unwrap();
        assert!((t0.values[0] - 1.0).abs() < 1e-14);
        let t1 = dual_via_gram(1, p, 1.0).unwrap();
        assert!((t1.values[0] - (-2.0)).abs() < 1e-12);
        assert!((t1.values[1] - 4.0).abs() < 1e-12);
        assert!(matches!(
            dual_via_gram(13, p, 0.5),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn eval_combination_examples() {
        let p = wp(-0.5, -0.5);
        let t = eval_via_jacobi_hahn(4, p, 0.3);
        let mut e2 = vec![0.0; 5];
        e2[2] = 1.0;
        assert_eq!(eval_combination(&e2, &t).unwrap(), t.values[2]);
        assert_eq!(eval_combination(&vec![0.0; 5], &t).unwrap(), 0.0);
        assert!(matches!(
            eval_combination(&[1.0, 2.0], &t),
            Err(Error::InvalidArgument(_))
        ));
        // Row k of the Gram matrix combines duals back into B^n_k.
        let g = gram_matrix(4, p);
        let combo = eval_combination(&g[1], &t).unwrap();
        let bern = bernstein_eval(4, 1, 0.3);
        assert!((combo - bern).abs() <= 1e-12 * bern.abs().max(1.0));
    }

    #[test]
    fn duality_defect_small_n_all_pairs() {
        for &(a, b) in &CANONICAL_PARAM_SETS {
            let p = wp(a, b);
            for n in 0..=5usize {
                for i in 0..=n {
                    for j in 0..=n {
                        let d = duality_defect(n, i, j, p);
                        assert!(
                            d.abs() <= 1e-12,
                            "defect({n},{i},{j}) at ({a},{b}) = {d:e}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn duality_defect_worst_case_degree_twelve() {
        // The hardest cancellation: middle indices of the uniform weight.
        let p = wp(0.0, 0.0);
        assert!(duality_defect(12, 6, 6, p).abs() <= 1e-9);
        assert!(duality_defect(12, 5, 7, p).abs() <= 1e-9);
    }
}
