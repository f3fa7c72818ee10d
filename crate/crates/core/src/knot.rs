//! Torus knot parameters.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive torus knot `T(p, q)` with coprime parameters, normalized so
/// that `2 <= p < q`.
///
/// The unknot is representable only through [`TorusKnot::with_unknot`]; every
/// unknot parameter pair is canonicalized to `T(1, 2)`, whose semigroup is all
/// of the natural numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct TorusKnot {
    p: u64,
    q: u64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    p: u64,
    q: u64,
}

impl TryFrom<RawParams> for TorusKnot {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        TorusKnot::with_unknot(raw.p, raw.q, true)
    }
}

impl From<TorusKnot> for RawParams {
    fn from(k: TorusKnot) -> Self {
        RawParams { p: k.p, q: k.q }
    }
}

/// Largest accepted parameter. Keeps `p * q` and all derived quantities well
/// inside `i64`.
pub const MAX_PARAM: u64 = 1 << 20;

impl TorusKnot {
    /// A non-trivial torus knot. Swapped input is normalized.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        Self::with_unknot(p, q, false)
    }

    pub fn with_unknot(p: u64, q: u64, allow_unknot: bool) -> Result<Self> {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        if p == 0 {
            return Err(Error::InvalidParams { p, q, reason: "parameters must be positive" });
        }
        if q > MAX_PARAM {
            return Err(Error::InvalidParams { p, q, reason: "parameter too large" });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParams { p, q, reason: "parameters are not coprime" });
        }
        if p == 1 {
            if !allow_unknot {
                return Err(Error::InvalidParams { p, q, reason: "unknot not allowed" });
            }
            return Ok(Self::unknot());
        }
        Ok(Self { p, q })
    }

    pub const fn unknot() -> Self {
        Self { p: 1, q: 2 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }

    /// Number of gaps of the semigroup, `(p-1)(q-1)/2`. Also the Seifert
    /// genus and the 4-ball genus of the knot.
    pub fn genus(&self) -> u64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    /// `pq - p - q`; equals `-1` for the unknot.
    pub fn frobenius(&self) -> i64 {
        (self.p * self.q) as i64 - self.p as i64 - self.q as i64
    }

    /// Every non-trivial torus knot `T(p, q)` with `2 <= p < q <= max_q` and
    /// `p <= max_p`, in lexicographic `(p, q)` order.
    pub fn enumerate(max_p: u64, max_q: u64) -> Vec<TorusKnot> {
        let mut out = Vec::new();
        for p in 2..=max_p.min(max_q) {
            for q in p + 1..=max_q {
                if p.gcd(&q) == 1 {
                    out.push(TorusKnot { p, q });
                }
            }
        }
        out
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// An ordered pair of torus knots, read as the difference knot
/// `first # -second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnotPair {
    pub first: TorusKnot,
    pub second: TorusKnot,
}

impl KnotPair {
    pub fn new(first: TorusKnot, second: TorusKnot) -> Self {
        Self { first, second }
    }

    pub fn reversed(&self) -> Self {
        Self { first: self.second, second: self.first }
    }

    /// The pair with the smaller knot (in `(p, q)` order) first.
    pub fn sorted(&self) -> Self {
        if self.first <= self.second {
            *self
        } else {
            self.reversed()
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.first == self.second
    }
}

impl fmt::Display for KnotPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} # -{}", self.first, self.second)
    }
}
