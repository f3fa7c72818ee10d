//! Integer Laurent polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// `Σ coeffs[i] t^(low + i)`, kept trimmed: no zero coefficient at either
/// end, and the zero polynomial has empty `coeffs` and `low == 0`.
///
/// Arithmetic panics on `i64` overflow rather than wrapping.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(0, vec![c])
    }

    /// `c t^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        Self::new(e, vec![c])
    }

    pub fn new(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> i32 {
        self.low
    }

    pub fn high_degree(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let i = e - self.low;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().fold(0i64, |acc, &c| acc.checked_add(c).expect("overflow"))
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// `Σ_{k<n} t^k`.
    pub fn geometric(n: usize) -> Self {
        Self::new(0, vec![1; n])
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = -1;
        c[n] += 1;
        Self::new(0, c)
    }

    /// Exact division; `None` if `divisor` does not divide `self` in
    /// `Z[t, t^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = &divisor.coeffs;
        let lead = *d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![0i64; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + d.len() - 1];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            quot[i] = c;
            for (j, &dj) in d.iter().enumerate() {
                let m = c.checked_mul(dj).expect("overflow in polynomial division");
                rem[i + j] = rem[i + j].checked_sub(m).expect("overflow in polynomial division");
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::new(self.low - divisor.low, quot))
    }

    /// Shift to be symmetric under `t <-> t^-1` and fix the sign so that the
    /// value at `t = 1` is non-negative. Returns `None` when the degree span
    /// is odd, which cannot happen for the Alexander polynomial of a knot.
    pub fn symmetrized(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let span = self.low + self.high_degree();
        if span % 2 != 0 {
            return None;
        }
        let mut p = self.shift(-span / 2);
        if p.eval_at_one() < 0 {
            p = -p;
        }
        Some(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().max(rhs.high_degree());
        let coeffs = (low..=high)
            .map(|e| self.coeff(e).checked_add(rhs.coeff(e)).expect("overflow in polynomial addition"))
            .collect();
        LaurentPoly::new(low, coeffs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let m = a.checked_mul(b).expect("overflow in polynomial product");
                c[i + j] = c[i + j].checked_add(m).expect("overflow in polynomial product");
            }
        }
        LaurentPoly::new(self.low + rhs.low, c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let e = self.low + i as i32;
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                write!(f, " ")?;
            }
            let mag = c.unsigned_abs();
            let body = match (e, mag) {
                (0, m) => format!("{m}"),
                (1, 1) => "t".to_string(),
                (1, m) => format!("{m}t"),
                (e, 1) => format!("t^{e}"),
                (e, m) => format!("{m}t^{e}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Determinant by fraction-free (Bareiss) elimination; every division is
/// exact in `Z[t, t^-1]`.
pub fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}
