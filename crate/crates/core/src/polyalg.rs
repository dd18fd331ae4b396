//! Dense polynomial arithmetic in two bases: powers of `x` (`MonomialX`) and
//! powers of `1 − x` (`ShiftedPower`).
//!
//! The residual evaluators apply differential operators to polynomials held
//! in exact coefficient form, so differentiation, multiplication, and basis
//! conversion here are exact up to rounding — no numerical differentiation
//! enters any identity check.

use crate::Error;

/// Which basis a [`Poly`]'s coefficients refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Coefficients of `x^j`.
    MonomialX,
    /// Coefficients of `(1 − x)^j`.
    ShiftedPower,
}

/// A dense univariate polynomial, normalized so the trailing coefficient is
/// nonzero unless the polynomial is identically zero (then `coeffs == [0.0]`).
/// Only exact zeros are stripped: tiny residual coefficients must survive so
/// identity checks can see them.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub basis: Basis,
    pub coeffs: Vec<f64>,
}

impl Poly {
    /// Builds a polynomial from raw coefficients, stripping trailing exact
    /// zeros. An empty or all-zero coefficient list becomes the zero
    /// polynomial `[0.0]`.
    pub fn new(basis: Basis, mut coeffs: Vec<f64>) -> Poly {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Poly { basis, coeffs }
    }

    /// The zero polynomial in the given basis.
    pub fn zero(basis: Basis) -> Poly {
        Poly {
            basis,
            coeffs: vec![0.0],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }
}

/// Evaluates `p` at `x` by Horner's rule in the native basis: in powers of
/// `x` for `MonomialX`, in powers of `t = 1 − x` for `ShiftedPower`.
pub fn poly_eval(p: &Poly, x: f64) -> f64 {
    let t = match p.basis {
        Basis::MonomialX => x,
        Basis::ShiftedPower => 1.0 - x,
    };
    let mut acc = 0.0;
    for &c in p.coeffs.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

/// Exact derivative with respect to `x`, staying in the same basis.
/// In the shifted basis, `d/dx (1 − x)^j = −j (1 − x)^{j−1}`.
pub fn poly_derive(p: &Poly) -> Poly {
    if p.coeffs.len() == 1 {
        return Poly::zero(p.basis);
    }
    let sign = match p.basis {
        Basis::MonomialX => 1.0,
        Basis::ShiftedPower => -1.0,
    };
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, &c)| sign * j as f64 * c)
        .collect();
    Poly::new(p.basis, coeffs)
}

/// Exact convolution product. Both operands must share a basis.
pub fn poly_mul(p: &Poly, q: &Poly) -> Result<Poly, Error> {
    if p.basis != q.basis {
        return Err(Error::BasisMismatch);
    }
    let mut coeffs = vec![0.0; p.coeffs.len() + q.coeffs.len() - 1];
    for (i, &a) in p.coeffs.iter().enumerate() {
        for (j, &b) in q.coeffs.iter().enumerate() {
            coeffs[i + j] += a * b;
        }
    }
    Ok(Poly::new(p.basis, coeffs))
}

/// Coefficient-wise sum. Both operands must share a basis.
pub fn poly_add(p: &Poly, q: &Poly) -> Result<Poly, Error> {
    if p.basis != q.basis {
        return Err(Error::BasisMismatch);
    }
    let mut coeffs = vec![0.0; p.coeffs.len().max(q.coeffs.len())];
    for (i, &a) in p.coeffs.iter().enumerate() {
        coeffs[i] += a;
    }
    for (i, &b) in q.coeffs.iter().enumerate() {
        coeffs[i] += b;
    }
    Ok(Poly::new(p.basis, coeffs))
}

/// Scalar multiple of a polynomial.
pub fn poly_scale(p: &Poly, s: f64) -> Poly {
    Poly::new(p.basis, p.coeffs.iter().map(|&c| s * c).collect())
}

/// Converts a polynomial to the `MonomialX` basis. For `ShiftedPower` input,
/// expands each `(1 − x)^j` binomially; exact to rounding for degrees up to
/// roughly 25 relative to the coefficient magnitudes.
pub fn to_monomial(p: &Poly) -> Poly {
    match p.basis {
        Basis::MonomialX => p.clone(),
        Basis::ShiftedPower => {
            let deg = p.coeffs.len() - 1;
            let mut out = vec![0.0; deg + 1];
            // Row of binomial coefficients C(j, m), updated per j.
            let mut row = vec![0.0; deg + 1];
            row[0] = 1.0;
            for (j, &c) in p.coeffs.iter().enumerate() {
                if j > 0 {
                    // Pascal update in place, right to left: row becomes C(j, ·).
                    for m in (1..=j).rev() {
                        row[m] += row[m - 1];
                    }
                }
                if c != 0.0 {
                    let mut sign = 1.0;
                    for m in 0..=j {
                        out[m] += c * sign * row[m];
                        sign = -sign;
                    }
                }
            }
            Poly::new(Basis::MonomialX, out)
        }
    }
}

/// Binomial coefficient C(n, k) as a float, by multiplicative accumulation.
pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for l in 0..k {
        acc = acc * (n - l) as f64 / (l + 1) as f64;
    }
    acc
}

/// Bernstein basis polynomial `B^n_i(x) = C(n,i) x^i (1−x)^{n−i}`.
/// Indices outside `0..=n` return exactly 0.
pub fn bernstein_eval(n: usize, i: i64, x: f64) -> f64 {
    if i < 0 || i > n as i64 {
        return 0.0;
    }
    let i = i as usize;
    binomial(n, i) * x.powi(i as i32) * (1.0 - x).powi((n - i) as i32)
}
