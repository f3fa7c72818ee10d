//! The numerical semigroup `<p, q>` of a torus knot and the index-wise
//! maximum difference statistic between two such semigroups.
//!
//! Indexing is 1-based and the semigroup contains zero, so `nth(1) == 0` and
//! `nth(2) == p`. An off-by-one here silently shifts every value produced by
//! [`crate::invariants`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::TorusKnot;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    knot: TorusKnot,
    bound: u64,
    elements: Vec<u64>,
}

impl NumericalSemigroup {
    /// Every semigroup element `<= bound`. The bound must reach past the
    /// Frobenius number so that the table certifies co-finiteness.
    pub fn build(knot: TorusKnot, bound: u64) -> Result<Self> {
        let frobenius = knot.frobenius();
        if (bound as i64) < frobenius + 1 {
            return Err(Error::BoundBelowFrobenius { bound, frobenius });
        }
        let (p, q) = (knot.p() as usize, knot.q() as usize);
        let len = bound as usize + 1;
        let mut member = vec![false; len];
        member[0] = true;
        for x in 1..len {
            member[x] = (x >= p && member[x - p]) || (x >= q && member[x - q]);
        }
        let elements = member
            .iter()
            .enumerate()
            .filter_map(|(x, &m)| m.then_some(x as u64))
            .collect();
        Ok(Self { knot, bound, elements })
    }

    /// The smallest table that still covers the Frobenius number.
    pub fn minimal(knot: TorusKnot) -> Self {
        let bound = (knot.frobenius() + 1).max(0) as u64;
        Self::build(knot, bound).expect("bound is frobenius + 1")
    }

    pub fn knot(&self) -> TorusKnot {
        self.knot
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn frobenius(&self) -> i64 {
        self.knot.frobenius()
    }

    pub fn gap_count(&self) -> u64 {
        self.knot.genus()
    }

    /// Gaps of the semigroup, i.e. the natural numbers it misses.
    pub fn gaps(&self) -> Vec<u64> {
        let mut it = self.elements.iter().peekable();
        let mut out = Vec::new();
        for x in 0..=self.frobenius().max(-1) as u64 {
            if it.peek() == Some(&&x) {
                it.next();
            } else {
                out.push(x);
            }
        }
        out
    }

    pub fn contains(&self, x: u64) -> bool {
        if x > self.bound {
            return true;
        }
        self.elements.binary_search(&x).is_ok()
    }

    /// `Γ(n)` with `Γ(1) = 0`. Past the table the sequence is affine:
    /// `Γ(n) = n - 1 + gap_count`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn nth(&self, n: u64) -> u64 {
        assert!(n >= 1, "semigroup elements are indexed from 1");
        match self.elements.get((n - 1) as usize) {
            Some(&x) => x,
            None => n - 1 + self.gap_count(),
        }
    }

    /// `max_n Γ_self(n) - Γ_other(n)` over all `n >= 1`.
    ///
    /// Beyond `n* = max(F_self, F_other) + 2` both sequences are affine with
    /// slope one, so the difference is constant there and a finite scan is
    /// exact.
    pub fn max_difference(&self, other: &Self) -> i64 {
        let tail = self.gap_count() as i64 - other.gap_count() as i64;
        let n_star = self.frobenius().max(other.frobenius()) + 2;
        (1..=n_star.max(1) as u64)
            .map(|n| self.nth(n) as i64 - other.nth(n) as i64)
            .fold(tail, i64::max)
    }
}

/// `Γ_{p,q}(n)`, 1-based with `Γ(1) = 0`.
pub fn nth_element(knot: TorusKnot, n: u64) -> u64 {
    NumericalSemigroup::minimal(knot).nth(n)
}

/// `Γ_{a:b} = max_n Γ_a(n) - Γ_b(n)`.
pub fn gamma_max_difference(a: TorusKnot, b: TorusKnot) -> i64 {
    NumericalSemigroup::minimal(a).max_difference(&NumericalSemigroup::minimal(b))
}

/// Exhaustive search for `x = a p + b q` with `a, b >= 0`. Independent of the
/// sieve in [`NumericalSemigroup::build`].
pub fn membership_brute_force(knot: TorusKnot, x: u64) -> bool {
    let (p, q) = (knot.p(), knot.q());
    (0..=x / p).any(|a| (x - a * p).is_multiple_of(q))
}
