//! Local moves on positive braid words.
//!
//! Positions are 0-based indices into the letter sequence. Every move is
//! checked at its site; an illegal move is reported with the violated
//! condition and never silently adjusted.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::word::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleDirection {
    /// `a_i a_{i+1} a_i -> a_{i+1} a_i a_{i+1}`
    Raise,
    /// `a_{i+1} a_i a_{i+1} -> a_i a_{i+1} a_i`
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveStep {
    /// Move the first `k` letters to the end of the word.
    CyclicPermute(usize),
    /// `a_i a_j -> a_j a_i` at `(pos, pos + 1)` with `|i - j| >= 2`.
    CommuteRelation(usize),
    TripleRelation(usize, TripleDirection),
    /// Append `a_n` on a new strand.
    MarkovStabilize,
    /// Remove the final letter `a_{n-1}` together with the last strand. The
    /// letter must be the only occurrence of `a_{n-1}`.
    MarkovDestabilize,
    /// Delete the letter at `pos` (a saddle).
    DeleteGenerator(usize),
    /// Insert `a_index` before position `pos` (a saddle).
    InsertGenerator(usize, usize),
}

impl MoveStep {
    pub fn is_saddle(&self) -> bool {
        matches!(self, MoveStep::DeleteGenerator(_) | MoveStep::InsertGenerator(..))
    }

    /// Moves that preserve the braid closure.
    pub fn is_isotopy(&self) -> bool {
        !self.is_saddle()
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MoveStep::CyclicPermute(_) => "CyclicPermute",
            MoveStep::CommuteRelation(_) => "CommuteRelation",
            MoveStep::TripleRelation(..) => "TripleRelation",
            MoveStep::MarkovStabilize => "MarkovStabilize",
            MoveStep::MarkovDestabilize => "MarkovDestabilize",
            MoveStep::DeleteGenerator(_) => "DeleteGenerator",
            MoveStep::InsertGenerator(..) => "InsertGenerator",
        }
    }

    /// The step undoing this one, given the word it is applied to.
    pub fn inverse(&self, before: &BraidWord) -> MoveStep {
        match *self {
            MoveStep::CyclicPermute(k) => {
                let n = before.len().max(1);
                MoveStep::CyclicPermute((n - k % n) % n)
            }
            MoveStep::CommuteRelation(p) => MoveStep::CommuteRelation(p),
            MoveStep::TripleRelation(p, TripleDirection::Raise) => {
                MoveStep::TripleRelation(p, TripleDirection::Lower)
            }
            MoveStep::TripleRelation(p, TripleDirection::Lower) => {
                MoveStep::TripleRelation(p, TripleDirection::Raise)
            }
            MoveStep::MarkovStabilize => MoveStep::MarkovDestabilize,
            MoveStep::MarkovDestabilize => MoveStep::MarkovStabilize,
            MoveStep::DeleteGenerator(p) => MoveStep::InsertGenerator(p, before.letters()[p]),
            MoveStep::InsertGenerator(p, _) => MoveStep::DeleteGenerator(p),
        }
    }
}

impl fmt::Display for MoveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveStep::CyclicPermute(k) => write!(f, "CyclicPermute({k})"),
            MoveStep::CommuteRelation(p) => write!(f, "CommuteRelation({p})"),
            MoveStep::TripleRelation(p, d) => write!(f, "TripleRelation({p}, {d:?})"),
            MoveStep::MarkovStabilize => write!(f, "MarkovStabilize"),
            MoveStep::MarkovDestabilize => write!(f, "MarkovDestabilize"),
            MoveStep::DeleteGenerator(p) => write!(f, "DeleteGenerator({p})"),
            MoveStep::InsertGenerator(p, g) => write!(f, "InsertGenerator({p}, a{g})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("position {pos} out of range for word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("rotation {k} out of range for word of length {len}")]
    RotationOutOfRange { k: usize, len: usize },
    #[error("a{0} and a{1} do not commute (|i - j| < 2)")]
    NotCommuting(usize, usize),
    #[error("letters {found:?} at position {pos} do not match the triple relation pattern {expected:?}")]
    NotTriple { pos: usize, found: Vec<usize>, expected: &'static str },
    #[error("generator a{index} out of range on {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("destabilization needs a{top} to occur exactly once, found {count}")]
    TopGeneratorCount { top: usize, count: usize },
    #[error("destabilization needs a{top} as the last letter")]
    TopGeneratorNotLast { top: usize },
    #[error("cannot destabilize below two strands")]
    TooFewStrands,
}

pub fn apply_move(word: &BraidWord, step: MoveStep) -> Result<BraidWord, MoveError> {
    let n = word.strands();
    let mut letters = word.letters().to_vec();
    let len = letters.len();
    let check_pos = |pos: usize, width: usize| {
        if pos + width > len {
            Err(MoveError::PositionOutOfRange { pos, len })
        } else {
            Ok(())
        }
    };
    match step {
        MoveStep::CyclicPermute(k) => {
            if k > len || (len == 0 && k > 0) {
                return Err(MoveError::RotationOutOfRange { k, len });
            }
            if len > 0 {
                letters.rotate_left(k % len);
            }
            Ok(BraidWord::new_unchecked(n, letters))
        }
        MoveStep::CommuteRelation(pos) => {
            check_pos(pos, 2)?;
            let (i, j) = (letters[pos], letters[pos + 1]);
            if i.abs_diff(j) < 2 {
                return Err(MoveError::NotCommuting(i, j));
            }
            letters.swap(pos, pos + 1);
            Ok(BraidWord::new_unchecked(n, letters))
        }
        MoveStep::TripleRelation(pos, dir) => {
            check_pos(pos, 3)?;
            let (x, y, z) = (letters[pos], letters[pos + 1], letters[pos + 2]);
            let ok = x == z
                && match dir {
                    TripleDirection::Raise => y == x + 1,
                    TripleDirection::Lower => x == y + 1,
                };
            if !ok {
                let expected = match dir {
                    TripleDirection::Raise => "a_i a_{i+1} a_i",
                    TripleDirection::Lower => "a_{i+1} a_i a_{i+1}",
                };
                return Err(MoveError::NotTriple { pos, found: vec![x, y, z], expected });
            }
            letters[pos] = y;
            letters[pos + 1] = x;
            letters[pos + 2] = y;
            Ok(BraidWord::new_unchecked(n, letters))
        }
        MoveStep::MarkovStabilize => {
            letters.push(n);
            Ok(BraidWord::new_unchecked(n + 1, letters))
        }
        MoveStep::MarkovDestabilize => {
            let top = n - 1;
            if n <= 2 {
                return Err(MoveError::TooFewStrands);
            }
            let count = word.occurrences(top);
            if count != 1 {
                return Err(MoveError::TopGeneratorCount { top, count });
            }
            if letters.last() != Some(&top) {
                return Err(MoveError::TopGeneratorNotLast { top });
            }
            letters.pop();
            Ok(BraidWord::new_unchecked(n - 1, letters))
        }
        MoveStep::DeleteGenerator(pos) => {
            check_pos(pos, 1)?;
            letters.remove(pos);
            Ok(BraidWord::new_unchecked(n, letters))
        }
        MoveStep::InsertGenerator(pos, index) => {
            if pos > len {
                return Err(MoveError::PositionOutOfRange { pos, len });
            }
            if index == 0 || index >= n {
                return Err(MoveError::GeneratorOutOfRange { index, strands: n });
            }
            letters.insert(pos, index);
            Ok(BraidWord::new_unchecked(n, letters))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::from_alpha(n, s).unwrap()
    }

    #[test]
    fn braid_relations() {
        let out = apply_move(&w(3, "aba"), MoveStep::TripleRelation(0, TripleDirection::Raise)).unwrap();
        assert_eq!(out, w(3, "bab"));
        let back = apply_move(&out, MoveStep::TripleRelation(0, TripleDirection::Lower)).unwrap();
        assert_eq!(back, w(3, "aba"));
        let out = apply_move(&w(4, "ac"), MoveStep::CommuteRelation(0)).unwrap();
        assert_eq!(out, w(4, "ca"));
    }

    #[test]
    fn illegal_sites_are_rejected() {
        assert_eq!(
            apply_move(&w(3, "ab"), MoveStep::CommuteRelation(0)),
            Err(MoveError::NotCommuting(1, 2))
        );
        assert!(matches!(
            apply_move(&w(3, "abb"), MoveStep::TripleRelation(0, TripleDirection::Raise)),
            Err(MoveError::NotTriple { .. })
        ));
        assert!(matches!(
            apply_move(&w(3, "ab"), MoveStep::CommuteRelation(1)),
            Err(MoveError::PositionOutOfRange { .. })
        ));
        assert!(matches!(
            apply_move(&w(3, "ab"), MoveStep::InsertGenerator(0, 3)),
            Err(MoveError::GeneratorOutOfRange { .. })
        ));
    }

    #[test]
    fn stabilization_adds_a_strand() {
        let t34 = w(3, &"ab".repeat(4));
        let s = apply_move(&t34, MoveStep::MarkovStabilize).unwrap();
        assert_eq!(s.strands(), 4);
        assert_eq!(s.letters().last(), Some(&3));
        // a_3 does not exist on three strands
        assert!(BraidWord::new(3, [t34.letters(), &[3]].concat()).is_err());
        assert_eq!(apply_move(&s, MoveStep::MarkovDestabilize).unwrap(), t34);
    }

    #[test]
    fn destabilization_legality() {
        assert_eq!(
            apply_move(&w(3, "abab"), MoveStep::MarkovDestabilize),
            Err(MoveError::TopGeneratorCount { top: 2, count: 2 })
        );
        assert_eq!(
            apply_move(&w(3, "aaba"), MoveStep::MarkovDestabilize),
            Err(MoveError::TopGeneratorNotLast { top: 2 })
        );
        assert_eq!(apply_move(&w(2, "aaa"), MoveStep::MarkovDestabilize), Err(MoveError::TooFewStrands));
    }

    #[test]
    fn inverses_undo() {
        let start = w(4, "abcacb");
        let steps = [
            MoveStep::CyclicPermute(2),
            MoveStep::CommuteRelation(2),
            MoveStep::DeleteGenerator(3),
            MoveStep::InsertGenerator(6, 3),
            MoveStep::MarkovStabilize,
        ];
        for s in steps {
            let out = apply_move(&start, s).unwrap();
            assert_eq!(apply_move(&out, s.inverse(&start)).unwrap(), start, "{s}");
        }
    }
}
