//! Tristram–Levine signatures of torus knots, by lattice counting and by a
//! Seifert form of the positive braid.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::knot::{KnotPair, TorusKnot};

/// Eigenvalues closer to zero than this make the signature undefined.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;
/// Largest tolerance a caller may request.
pub const MAX_TOLERANCE: f64 = 1e-4;

/// `t` in (0,1), standing for `ω = e^{2πit}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct UnitCircleParam(Ratio<i64>);

impl UnitCircleParam {
    pub fn new(t: Ratio<i64>) -> Result<Self> {
        if t <= Ratio::from_integer(0) || t >= Ratio::from_integer(1) {
            return Err(Error::OutOfUnitInterval(t.to_string()));
        }
        Ok(Self(t))
    }

    pub fn from_fraction(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::BadRational(format!("{num}/{den}")));
        }
        Self::new(Ratio::new(num, den))
    }

    pub fn t(&self) -> Ratio<i64> {
        self.0
    }

    pub fn omega(&self) -> Complex<f64> {
        let t = *self.0.numer() as f64 / *self.0.denom() as f64;
        Complex::from_polar(1.0, 2.0 * std::f64::consts::PI * t)
    }
}

impl FromStr for UnitCircleParam {
    type Err = Error;

    /// Accepts `a/b` or a bare integer (which is never in range).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadRational(s.to_string());
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim().parse::<i64>().map_err(|_| bad())?, d.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
        };
        Self::from_fraction(num, den)
    }
}

impl TryFrom<String> for UnitCircleParam {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<UnitCircleParam> for String {
    fn from(w: UnitCircleParam) -> String {
        w.to_string()
    }
}

impl fmt::Display for UnitCircleParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Jump {
    #[serde(serialize_with = "ser_ratio")]
    pub location: Ratio<i64>,
    pub delta: i64,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// `t ↦ σ_{e^{2πit}}(T(p,q))` as a step function on (0,1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureStepFunction {
    pub knot: TorusKnot,
    /// Sorted by location; locations are distinct.
    pub jumps: Vec<Jump>,
}

/// Lattice count: with `x = i/p + j/q` for `1 ≤ i < p`, `1 ≤ j < q`, the
/// signature at regular `t` is `-2 (#{1 < x < 1+t} - #{0 < x < t})`.
pub fn lattice_step_function(knot: TorusKnot) -> SignatureStepFunction {
    let (p, q) = (knot.p() as i64, knot.q() as i64);
    let pq = p * q;
    let mut jumps: Vec<Jump> = (1..p)
        .flat_map(|i| (1..q).map(move |j| i * q + j * p))
        .map(|n| {
            if n < pq {
                Jump { location: Ratio::new(n, pq), delta: 2 }
            } else {
                Jump { location: Ratio::new(n - pq, pq), delta: -2 }
            }
        })
        .collect();
    jumps.sort_by_key(|j| j.location);
    SignatureStepFunction { knot, jumps }
}

impl SignatureStepFunction {
    pub fn is_regular(&self, w: UnitCircleParam) -> bool {
        self.jumps.binary_search_by_key(&w.t(), |j| j.location).is_err()
    }

    /// Value at a regular parameter; jump points are rejected.
    pub fn value(&self, w: UnitCircleParam) -> Result<i64> {
        match self.jumps.binary_search_by_key(&w.t(), |j| j.location) {
            Ok(_) => Err(Error::NotRegular(w.to_string())),
            Err(idx) => Ok(self.jumps[..idx].iter().map(|j| j.delta).sum()),
        }
    }

    pub fn locations(&self) -> impl Iterator<Item = Ratio<i64>> + '_ {
        self.jumps.iter().map(|j| j.location)
    }
}

pub fn is_regular(knot: TorusKnot, w: UnitCircleParam) -> bool {
    lattice_step_function(knot).is_regular(w)
}

/// Midpoints of the intervals cut out of (0,1) by the given points.
pub fn midpoints(points: impl IntoIterator<Item = Ratio<i64>>) -> Vec<UnitCircleParam> {
    let mut cuts: Vec<Ratio<i64>> = points.into_iter().collect();
    cuts.push(Ratio::from_integer(0));
    cuts.push(Ratio::from_integer(1));
    cuts.sort();
    cuts.dedup();
    cuts.windows(2)
        .map(|w| UnitCircleParam::new((w[0] + w[1]) / 2).expect("midpoint lies in (0,1)"))
        .collect()
}

/// Seifert matrix of the closure of a positive braid, from the surface with
/// one disk per strand and one band per letter. The basis has one cycle for
/// each pair of consecutive occurrences of a generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    pub size: usize,
    pub entries: Vec<Vec<i64>>,
}

pub fn seifert_matrix_from_positive_braid(word: &BraidWord) -> Result<SeifertMatrix> {
    if let Some(g) = word.first_missing_generator() {
        return Err(Error::SplitClosure(g));
    }
    // (generator, first position, second position)
    let mut cycles = Vec::new();
    for g in 1..word.strands() {
        let pos: Vec<usize> = word.letters().iter().enumerate().filter(|(_, &x)| x == g).map(|(i, _)| i).collect();
        cycles.extend(pos.windows(2).map(|w| (g, w[0], w[1])));
    }
    let n = cycles.len();
    let mut v = vec![vec![0i64; n]; n];
    for (x, &(i, s1, s2)) in cycles.iter().enumerate() {
        v[x][x] = -1;
        for (y, &(j, u1, u2)) in cycles.iter().enumerate() {
            if i == j && s2 == u1 {
                v[x][y] = 1;
            } else if j == i + 1 {
                if s1 < u1 && u1 < s2 && s2 < u2 {
                    v[x][y] = -1;
                } else if u1 < s1 && s1 < u2 && u2 < s2 {
                    v[x][y] = 1;
                }
            }
        }
    }
    Ok(SeifertMatrix { size: n, entries: v })
}

impl SeifertMatrix {
    /// `(1-ω)A + (1-ω̄)Aᵀ`
    pub fn hermitian_form(&self, w: UnitCircleParam) -> DMatrix<Complex<f64>> {
        let omega = w.omega();
        let one = Complex::new(1.0, 0.0);
        DMatrix::from_fn(self.size, self.size, |r, c| {
            (one - omega) * self.entries[r][c] as f64 + (one - omega.conj()) * self.entries[c][r] as f64
        })
    }
}

pub fn hermitian_signature(a: &SeifertMatrix, w: UnitCircleParam) -> Result<i64> {
    hermitian_signature_with_tolerance(a, w, DEFAULT_TOLERANCE)
}

/// Signature of the Hermitian form, or an error if some eigenvalue is
/// within `tolerance` of zero.
pub fn hermitian_signature_with_tolerance(a: &SeifertMatrix, w: UnitCircleParam, tolerance: f64) -> Result<i64> {
    if !(tolerance > 0.0 && tolerance <= MAX_TOLERANCE) {
        return Err(Error::ToleranceTooLoose(tolerance));
    }
    if a.size == 0 {
        return Ok(0);
    }
    let eigen = a.hermitian_form(w).symmetric_eigen();
    let mut sig = 0;
    for &lambda in eigen.eigenvalues.iter() {
        if lambda.abs() < tolerance {
            return Err(Error::IllConditioned { eigenvalue: lambda, tolerance });
        }
        sig += if lambda > 0.0 { 1 } else { -1 };
    }
    Ok(sig)
}

/// `max ½|σ_t(K) - σ_t(J)|` over parameters regular for both knots.
pub fn signature_distance_bound(pair: &KnotPair) -> u64 {
    let f = lattice_step_function(pair.first);
    let g = lattice_step_function(pair.second);
    midpoints(f.locations().chain(g.locations()))
        .into_iter()
        .map(|t| (f.value(t).unwrap() - g.value(t).unwrap()).unsigned_abs() / 2)
        .max()
        .unwrap_or(0)
}

/// `-σ_ω(first # -second) / 2`.
pub fn half_signature_of_difference(pair: &KnotPair, w: UnitCircleParam) -> Result<i64> {
    let a = lattice_step_function(pair.first).value(w)?;
    let b = lattice_step_function(pair.second).value(w)?;
    Ok(-(a - b) / 2)
}
