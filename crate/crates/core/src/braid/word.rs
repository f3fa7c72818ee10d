use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::TorusKnot;

/// A positive braid word in the Artin generators `a_1, ..., a_{n-1}` of the
/// braid group on `n` strands. Letters are generator indices, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidScript(format!("braid needs at least 2 strands, got {strands}")));
        }
        if let Some(&bad) = letters.iter().find(|&&g| g == 0 || g >= strands) {
            return Err(Error::InvalidScript(format!(
                "generator a{bad} out of range on {strands} strands"
            )));
        }
        Ok(Self { strands, letters })
    }

    pub(crate) fn new_unchecked(strands: usize, letters: Vec<usize>) -> Self {
        debug_assert!(strands >= 2 && letters.iter().all(|&g| g >= 1 && g < strands));
        Self { strands, letters }
    }

    /// Parse the compact alphabet `a = a_1, b = a_2, ...`.
    pub fn from_alpha(strands: usize, s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                if c.is_ascii_lowercase() {
                    Ok((c as u8 - b'a') as usize + 1)
                } else {
                    Err(Error::InvalidScript(format!("bad letter {c:?} in braid word")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        Self::new_unchecked(strands.max(2), Vec::new())
    }

    /// `(a_1 a_2 ... a_{p-1})^q` on `p` strands, whose closure is `T(p, q)`.
    /// The unknot yields `a_1` on two strands.
    pub fn torus(knot: TorusKnot) -> Self {
        if knot.is_unknot() {
            return Self::new_unchecked(2, vec![1]);
        }
        let p = knot.p() as usize;
        let letters = (0..knot.q()).flat_map(|_| 1..p).collect();
        Self::new_unchecked(p, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_alpha(&self) -> String {
        self.letters
            .iter()
            .map(|&g| if g <= 26 { (b'a' + g as u8 - 1) as char } else { '?' })
            .collect()
    }

    pub fn occurrences(&self, generator: usize) -> usize {
        self.letters.iter().filter(|&&g| g == generator).count()
    }

    /// The word with its first `k` letters moved to the end.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let n = letters.len();
            letters.rotate_left(k % n);
        }
        Self::new_unchecked(self.strands, letters)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new_unchecked(strands, letters)
    }

    /// The lexicographically smallest rotation, used as a conjugacy-class key
    /// for deduplication during search.
    pub fn min_rotation(&self) -> Self {
        (0..self.len().max(1))
            .map(|k| self.rotated(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Permutation of strand positions induced by the braid, as images of
    /// `0..strands`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            pos.swap(g - 1, g);
        }
        // pos[i] is the strand that ends at position i; invert it
        let mut perm = vec![0; self.strands];
        for (end, &start) in pos.iter().enumerate() {
            perm[start] = end;
        }
        perm
    }

    /// Number of components of the closure: cycles of the permutation.
    pub fn closure_component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// The closure of a positive braid is non-split exactly when every
    /// generator occurs.
    pub fn first_missing_generator(&self) -> Option<usize> {
        let mut present = vec![false; self.strands];
        for &g in &self.letters {
            present[g] = true;
        }
        (1..self.strands).find(|&g| !present[g])
    }

    /// Euler characteristic of the Seifert surface from Seifert's algorithm on
    /// the closure: one disk per strand, one band per crossing.
    pub fn bennequin_euler(&self) -> i64 {
        self.strands as i64 - self.letters.len() as i64
    }

    /// Genus of the Bennequin surface when the closure is a knot.
    pub fn bennequin_genus(&self) -> Option<u64> {
        if self.closure_component_count() != 1 {
            return None;
        }
        Some(((1 - self.bennequin_euler()) / 2) as u64)
    }

    /// Thurston–Bennequin number of the Legendrian closure drawn as a front
    /// with one pair of cusps per strand: writhe minus the number of right
    /// cusps.
    pub fn thurston_bennequin(&self) -> i64 {
        self.letters.len() as i64 - self.strands as i64
    }
}

/// Rotation number of the Legendrian closure of a positive braid. Fronts of
/// braid closures have balanced up and down cusps.
pub const POSITIVE_BRAID_ROTATION: i64 = 0;

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1 (on {} strands)", self.strands);
        }
        for &g in &self.letters {
            write!(f, "a{g}")?;
        }
        write!(f, " (on {} strands)", self.strands)
    }
}
