//! Concordance invariants of torus knots and of differences of two positive
//! torus knots.
//!
//! `τ` is a homomorphism, so `τ(J # -K) = τ(J) - τ(K)`. For `ν⁺` of a
//! difference the semigroup formula applies,
//!
//! ```text
//! ν⁺(T_{p,q} # -T_{p',q'}) = max{ τ(T_{p,q}) - τ(T_{p',q'}) + Γ_{p',q':p,q}, 0 }
//! ```
//!
//! Note the semigroup statistic is taken in the reverse order of the
//! connected sum.

use serde::Serialize;

use crate::knot::{KnotPair, TorusKnot};
use crate::semigroup::NumericalSemigroup;

pub fn tau(k: TorusKnot) -> u64 {
    k.genus()
}

/// The smooth 4-ball genus; coincides with `τ` on positive torus knots.
pub fn four_ball_genus(k: TorusKnot) -> u64 {
    tau(k)
}

/// `τ(first) - τ(second)`.
pub fn tau_difference(pair: &KnotPair) -> i64 {
    tau(pair.first) as i64 - tau(pair.second) as i64
}

pub fn nu_plus_diff(pair: &KnotPair) -> u64 {
    let first = NumericalSemigroup::minimal(pair.first);
    let second = NumericalSemigroup::minimal(pair.second);
    nu_plus_from_tables(&first, &second)
}

/// `ν⁺(first # -second)` from precomputed semigroup tables.
pub fn nu_plus_from_tables(first: &NumericalSemigroup, second: &NumericalSemigroup) -> u64 {
    let tau_diff = first.gap_count() as i64 - second.gap_count() as i64;
    (tau_diff + second.max_difference(first)).max(0) as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NuPlusReport {
    pub pair: KnotPair,
    /// `ν⁺(first # -second)`.
    pub nu_forward: u64,
    /// `ν⁺(second # -first)`.
    pub nu_backward: u64,
    pub tau_diff: i64,
}

impl NuPlusReport {
    pub fn max(&self) -> u64 {
        self.nu_forward.max(self.nu_backward)
    }

    pub fn min(&self) -> u64 {
        self.nu_forward.min(self.nu_backward)
    }
}

pub fn nu_plus_report(pair: &KnotPair) -> NuPlusReport {
    let first = NumericalSemigroup::minimal(pair.first);
    let second = NumericalSemigroup::minimal(pair.second);
    report_from_tables(pair, &first, &second)
}

pub(crate) fn report_from_tables(
    pair: &KnotPair,
    first: &NumericalSemigroup,
    second: &NumericalSemigroup,
) -> NuPlusReport {
    NuPlusReport {
        pair: *pair,
        nu_forward: nu_plus_from_tables(first, second),
        nu_backward: nu_plus_from_tables(second, first),
        tau_diff: tau_difference(pair),
    }
}

/// `max(ν⁺(J # -K), ν⁺(K # -J))`, a lower bound for the cobordism distance.
pub fn cobordism_lower_bound_nu(pair: &KnotPair) -> u64 {
    nu_plus_report(pair).max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(p: u64, q: u64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    fn pair(a: (u64, u64), b: (u64, u64)) -> KnotPair {
        KnotPair::new(k(a.0, a.1), k(b.0, b.1))
    }

    #[test]
    fn tau_closed_form() {
        assert_eq!(tau(k(2, 3)), 1);
        assert_eq!(tau(k(5, 8)), 14);
        assert_eq!(tau(TorusKnot::unknot()), 0);
        assert_eq!(four_ball_genus(k(3, 14)), 13);
        assert_eq!(four_ball_genus(k(4, 9)), 12);
    }

    #[test]
    fn nu_plus_point_values() {
        assert_eq!(nu_plus_diff(&pair((2, 5), (2, 3))), 1);
        assert_eq!(nu_plus_diff(&pair((2, 3), (2, 5))), 0);
        assert_eq!(nu_plus_diff(&pair((7, 12), (5, 17))), 2);
        assert_eq!(nu_plus_diff(&pair((4, 15), (5, 12))), 1);
    }

    #[test]
    fn reports() {
        let r = nu_plus_report(&pair((4, 15), (5, 12)));
        assert_eq!((r.max(), r.min()), (1, 1));
        let r = nu_plus_report(&pair((2, 3), (2, 5)));
        assert_eq!((r.max(), r.min()), (1, 0));
        let r = nu_plus_report(&pair((3, 14), (5, 8)));
        assert_eq!((r.max(), r.min()), (1, 1));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(cobordism_lower_bound_nu(&pair((5, 17), (7, 12))), 2);
        assert_eq!(cobordism_lower_bound_nu(&pair((4, 9), (4, 9))), 0);
        // Γ_{2,7:2,3} = 2 by a scan of {0,2,4,6,7,..} against {0,2,3,4,..}.
        assert_eq!(cobordism_lower_bound_nu(&pair((2, 3), (2, 7))), 2);
    }

    #[test]
    fn unknot_behaves_as_trivial_semigroup() {
        let u = TorusKnot::unknot();
        assert_eq!(nu_plus_diff(&KnotPair::new(k(2, 3), u)), 1);
        assert_eq!(nu_plus_diff(&KnotPair::new(u, k(2, 3))), 0);
    }

    fn knot_strategy() -> impl Strategy<Value = TorusKnot> {
        (2u64..40, 3u64..=40).prop_filter_map("coprime", |(p, q)| TorusKnot::new(p, q).ok())
    }

    proptest! {
        #[test]
        fn nu_dominates_tau(a in knot_strategy(), b in knot_strategy()) {
            let r = nu_plus_report(&KnotPair::new(a, b));
            prop_assert!(r.nu_forward as i64 >= r.tau_diff.max(0));
            prop_assert!(r.nu_backward as i64 >= (-r.tau_diff).max(0));
            prop_assert!(r.max() <= a.genus() + b.genus());
        }

        #[test]
        fn nu_of_self_difference_vanishes(a in knot_strategy()) {
            prop_assert_eq!(nu_plus_diff(&KnotPair::new(a, a)), 0);
        }
    }
}
