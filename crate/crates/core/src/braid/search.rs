//! Bounded breadth-first search for move scripts.
//!
//! States are braid words up to cyclic rotation, paired with the saddles
//! used so far. From each state the neighbours are generated in a fixed
//! order, all on the circular word:
//!
//! 1. commutation relations at circular positions `0..len`,
//! 2. triple relations at circular positions `0..len`, raise before lower,
//! 3. deletions at positions `0..len` (if the saddle budget allows),
//! 4. insertions at gaps `0..=len`, generators ascending (budget permitting),
//! 5. Markov stabilization, then destabilization (if enabled).
//!
//! A move at a site that wraps around the end of the word is preceded by the
//! cyclic permutation bringing the site to the front. The first state whose
//! closure certifies as the target knot ends the search, so the result is a
//! function of the inputs and bounds alone. A seed in the bounds shuffles
//! each neighbour list with a seeded ChaCha stream instead.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::knot::TorusKnot;

use super::alexander::{alexander_of_closure, torus_alexander};
use super::moves::{apply_move, MoveStep, TripleDirection};
use super::script::{identify_torus_closure, MoveScript};
use super::word::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchBounds {
    /// Stop after this many distinct states.
    pub max_states: usize,
    pub allow_deletions: bool,
    pub allow_insertions: bool,
    /// Markov moves are tried only when set, and never beyond this many
    /// strands.
    pub max_strands: Option<usize>,
    /// Exploration order only; `None` keeps the fixed order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { max_states: 200_000, allow_deletions: true, allow_insertions: true, max_strands: None, seed: None }
    }
}

fn canonical(word: &BraidWord) -> (usize, Vec<usize>) {
    (word.strands(), word.min_rotation().letters().to_vec())
}

/// Steps realizing a move at circular position `pos` covering `width`
/// letters: rotate first if the site wraps.
fn local(word: &BraidWord, pos: usize, width: usize, make: impl Fn(usize) -> MoveStep) -> Option<(Vec<MoveStep>, BraidWord)> {
    let len = word.len();
    if pos + width <= len {
        let step = make(pos);
        return apply_move(word, step).ok().map(|w| (vec![step], w));
    }
    let rotated = word.rotated(pos);
    let step = make(0);
    apply_move(&rotated, step).ok().map(|w| (vec![MoveStep::CyclicPermute(pos), step], w))
}

fn neighbours(word: &BraidWord, saddles_left: usize, bounds: &SearchBounds) -> Vec<(Vec<MoveStep>, BraidWord, bool)> {
    let len = word.len();
    let mut out = Vec::new();
    if len >= 2 {
        for pos in 0..len {
            if let Some((s, w)) = local(word, pos, 2, MoveStep::CommuteRelation) {
                out.push((s, w, false));
            }
        }
    }
    if len >= 3 {
        for pos in 0..len {
            for dir in [TripleDirection::Raise, TripleDirection::Lower] {
                if let Some((s, w)) = local(word, pos, 3, |p| MoveStep::TripleRelation(p, dir)) {
                    out.push((s, w, false));
                }
            }
        }
    }
    if saddles_left > 0 && bounds.allow_deletions {
        for pos in 0..len {
            let step = MoveStep::DeleteGenerator(pos);
            if let Ok(w) = apply_move(word, step) {
                out.push((vec![step], w, true));
            }
        }
    }
    if saddles_left > 0 && bounds.allow_insertions {
        for pos in 0..=len {
            for g in 1..word.strands() {
                let step = MoveStep::InsertGenerator(pos, g);
                if let Ok(w) = apply_move(word, step) {
                    out.push((vec![step], w, true));
                }
            }
        }
    }
    if let Some(max) = bounds.max_strands {
        if word.strands() < max {
            if let Ok(w) = apply_move(word, MoveStep::MarkovStabilize) {
                out.push((vec![MoveStep::MarkovStabilize], w, false));
            }
        }
        let top = word.strands() - 1;
        if word.occurrences(top) == 1 {
            let pos = word.letters().iter().position(|&g| g == top).unwrap();
            let mut steps = if pos + 1 < len { vec![MoveStep::CyclicPermute(pos + 1)] } else { vec![] };
            steps.push(MoveStep::MarkovDestabilize);
            if let Ok(w) = apply_move(&word.rotated(pos + 1), MoveStep::MarkovDestabilize) {
                out.push((steps, w, false));
            }
        }
    }
    out
}

/// Breadth-first search from `from` until `goal` holds for a state reached
/// by a saddle (or, if `goal_without_saddle`, by any move). Returns the
/// steps and the final word.
fn bfs(
    from: &BraidWord,
    max_saddles: usize,
    bounds: &SearchBounds,
    goal_without_saddle: bool,
    goal: impl Fn(&BraidWord) -> bool,
) -> Option<(Vec<MoveStep>, BraidWord)> {
    if goal(from) {
        return Some((Vec::new(), from.clone()));
    }
    // (parent, steps from parent, word, saddles used)
    let mut nodes: Vec<(usize, Vec<MoveStep>, BraidWord, usize)> = vec![(usize::MAX, vec![], from.clone(), 0)];
    let mut seen: HashSet<((usize, Vec<usize>), usize)> = HashSet::new();
    seen.insert((canonical(from), 0));
    let mut queue = VecDeque::from([0usize]);
    let mut rng = bounds.seed.map(ChaCha8Rng::seed_from_u64);
    while let Some(i) = queue.pop_front() {
        let (word, used) = (nodes[i].2.clone(), nodes[i].3);
        let mut options = neighbours(&word, max_saddles - used, bounds);
        if let Some(rng) = rng.as_mut() {
            options.shuffle(rng);
        }
        for (steps, next, saddle) in options {
            let used_next = used + saddle as usize;
            if !seen.insert((canonical(&next), used_next)) {
                continue;
            }
            if (saddle || goal_without_saddle) && goal(&next) {
                let mut path = steps;
                let mut j = i;
                while j != usize::MAX {
                    let (parent, ref s, _, _) = nodes[j];
                    path.splice(0..0, s.iter().copied());
                    j = parent;
                }
                return Some((path, next));
            }
            if nodes.len() >= bounds.max_states {
                return None;
            }
            nodes.push((i, steps, next, used_next));
            // without saddles left only isotopy goals can still be reached
            if used_next < max_saddles || goal_without_saddle {
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    None
}

/// Searches for a script from `from` to a braid whose closure certifies as
/// `to`, using at most `max_saddles` deletions and insertions.
pub fn search_script(
    from: &BraidWord,
    to: TorusKnot,
    max_saddles: usize,
    bounds: &SearchBounds,
) -> Result<Option<MoveScript>> {
    let target_alexander = torus_alexander(to);
    let is_goal = |w: &BraidWord| {
        w.bennequin_genus() == Some(to.genus()) && alexander_of_closure(w).is_ok_and(|a| a == target_alexander)
    };
    Ok(bfs(from, max_saddles, bounds, false, is_goal).map(|(steps, end)| MoveScript {
        name: format!("search-{}-to-{}", from.to_alpha(), to),
        paper_ref: "search".to_string(),
        strands: from.strands(),
        start_word: from.letters().to_vec(),
        steps,
        declared_end: end.letters().to_vec(),
        claimed_endpoints: identify_torus_closure(from).map(|k| [k, to]),
        notes: vec![format!("bounds: {}", serde_json::to_string(bounds).unwrap_or_default())],
    }))
}

/// Steps from `from` to exactly `to`, with at most `max_saddles`
/// deletions and insertions and (with `bounds.max_strands`) Markov moves.
pub fn search_to_word(from: &BraidWord, to: &BraidWord, max_saddles: usize, bounds: &SearchBounds) -> Option<Vec<MoveStep>> {
    let key = canonical(to);
    let (mut steps, end) = bfs(from, max_saddles, bounds, true, |w| canonical(w) == key)?;
    let k = (0..end.len().max(1)).find(|&k| end.rotated(k) == *to)?;
    if k > 0 {
        steps.push(MoveStep::CyclicPermute(k));
    }
    Some(steps)
}
