//! Minimal double-double ("compensated") arithmetic.
//!
//! A value is stored as an unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`,
//! giving roughly 32 significant decimal digits.  Only the operations needed
//! by the biorthogonality check are implemented: the duality sums mix terms
//! of magnitude ~10⁹ that cancel to ~10⁻⁶, which plain f64 cannot resolve to
//! the required absolute accuracy.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free transformation of a sum: `a + b = s + e` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free transformation of a product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        // One Newton step on the f64 quotient recovers double-double accuracy.
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.to_f64() / other.hi;
        let (hi, lo) = two_sum(q1, q2);
        Dd { hi, lo }
    }
}
