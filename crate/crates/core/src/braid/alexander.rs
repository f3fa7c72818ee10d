//! Alexander polynomials of braid closures via the reduced Burau
//! representation, and closure certificates for torus knots.
//!
//! For a braid `β` on `n` strands,
//! `det(I - ρ̄(β)) = ± t^k · Δ(t) · (1 + t + ... + t^{n-1})`. Both sides are
//! normalized to be symmetric with `Δ(1) = 1`. All arithmetic is exact.

use crate::error::{Error, Result};
use crate::knot::TorusKnot;
use crate::poly::{determinant, LaurentPoly};

use super::word::BraidWord;

type Matrix = Vec<Vec<LaurentPoly>>;

fn identity(m: usize) -> Matrix {
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect()
}

/// Right-multiply `acc` by the reduced Burau matrix of `a_g`. The matrix
/// differs from the identity only in row `g - 1`, which reads
/// `(.., t, -t, 1, ..)` centred on the diagonal.
fn mul_generator(acc: &mut Matrix, g: usize) {
    let m = acc.len();
    let i = g - 1;
    let t = LaurentPoly::monomial(1, 1);
    for row in acc.iter_mut() {
        // column j of the product only changes for j in {i-1, i, i+1}
        let x = row[i].clone();
        if i > 0 {
            row[i - 1] = &row[i - 1] + &(&x * &t);
        }
        if i + 1 < m {
            row[i + 1] = &row[i + 1] + &x;
        }
        row[i] = -(&x * &t);
    }
}

/// `ρ̄(β)`, an `(n-1) x (n-1)` matrix over `Z[t]`.
pub fn reduced_burau(word: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let mut acc = identity(word.strands() - 1);
    for &g in word.letters() {
        mul_generator(&mut acc, g);
    }
    acc
}

/// Symmetrized Alexander polynomial of the closure, which must be a knot.
pub fn alexander_of_closure(word: &BraidWord) -> Result<LaurentPoly> {
    let components = word.closure_component_count();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let n = word.strands();
    let rho = reduced_burau(word);
    let one = LaurentPoly::one();
    let m: Matrix = rho
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { &one - x } else { -x })
                .collect()
        })
        .collect();
    let det = determinant(m);
    let delta = det
        .div_exact(&LaurentPoly::geometric(n))
        .expect("Burau determinant of a knot closure is divisible by [n]_t");
    Ok(delta.symmetrized().expect("Alexander polynomial of a knot has even span"))
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, symmetrized.
pub fn torus_alexander(knot: TorusKnot) -> LaurentPoly {
    if knot.is_unknot() {
        return LaurentPoly::one();
    }
    let (p, q) = (knot.p() as usize, knot.q() as usize);
    let num = LaurentPoly::t_pow_minus_one(p * q) * LaurentPoly::t_pow_minus_one(1);
    let den = LaurentPoly::t_pow_minus_one(p) * LaurentPoly::t_pow_minus_one(q);
    num.div_exact(&den)
        .expect("torus knot quotient is a polynomial")
        .symmetrized()
        .expect("even span")
}

/// Certificate that the closure of `word` is the torus knot `knot`: the
/// closure is a knot, its Bennequin surface has the torus knot's genus, and
/// the Alexander polynomials agree.
///
/// This is evidence, not an isotopy proof. For positive braid closures the
/// three invariants together separate every torus knot used in this crate.
pub fn is_torus_closure_certificate(word: &BraidWord, knot: TorusKnot) -> bool {
    if word.closure_component_count() != 1 {
        return false;
    }
    if word.bennequin_genus() != Some(knot.genus()) {
        return false;
    }
    match alexander_of_closure(word) {
        Ok(a) => a == torus_alexander(knot),
        Err(_) => false,
    }
}
