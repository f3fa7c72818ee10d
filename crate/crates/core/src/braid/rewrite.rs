//! Explicit braid-relation paths between positive words representing the
//! same element of the positive braid monoid.
//!
//! The positive braid monoid is cancellative and any two generators have a
//! least common left multiple (`a_i a_j` or `a_i a_j a_i`). If `x` left-divides
//! a word `y w'` with `y != x`, then so does the lcm of `x` and `y`, which
//! lets us pull `x` to the front recursively.

use super::moves::{apply_move, MoveStep, TripleDirection};
use super::word::BraidWord;

/// Steps (relative to `letters[0]`) that turn `letters` into a word starting
/// with `x`, applied to `letters` in place. `None` if `x` does not
/// left-divide the braid.
fn pull_to_front(letters: &mut Vec<usize>, start: usize, x: usize, steps: &mut Vec<MoveStep>) -> bool {
    let Some(&y) = letters.get(start) else {
        return false;
    };
    if y == x {
        return true;
    }
    let mark = steps.len();
    let snapshot = letters[start..].to_vec();
    if x.abs_diff(y) >= 2 {
        if pull_to_front(letters, start + 1, x, steps) {
            letters.swap(start, start + 1);
            steps.push(MoveStep::CommuteRelation(start));
            return true;
        }
    } else if pull_to_front(letters, start + 1, x, steps) && pull_to_front(letters, start + 2, y, steps) {
        // y x y ... -> x y x ...
        let dir = if x > y { TripleDirection::Raise } else { TripleDirection::Lower };
        letters[start] = x;
        letters[start + 1] = y;
        letters[start + 2] = x;
        steps.push(MoveStep::TripleRelation(start, dir));
        return true;
    }
    steps.truncate(mark);
    letters.truncate(start);
    letters.extend(snapshot);
    false
}

/// A sequence of commutation and triple relations turning `from` into `to`,
/// or `None` if the words represent different positive braids.
pub fn relation_path(from: &BraidWord, to: &BraidWord) -> Option<Vec<MoveStep>> {
    if from.strands() != to.strands() || from.len() != to.len() {
        return None;
    }
    let mut letters = from.letters().to_vec();
    let mut steps = Vec::new();
    for (k, &x) in to.letters().iter().enumerate() {
        if !pull_to_front(&mut letters, k, x, &mut steps) {
            return None;
        }
    }
    debug_assert_eq!(letters, to.letters());
    Some(steps)
}

/// Replays `steps` from `word`, returning the final word.
pub fn replay(word: &BraidWord, steps: &[MoveStep]) -> Option<BraidWord> {
    steps.iter().try_fold(word.clone(), |w, &s| apply_move(&w, s).ok())
}
