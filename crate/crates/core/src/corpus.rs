//! The shipped move scripts: how they are built from intermediate words,
//! and how they are loaded from disk.

use std::path::{Path, PathBuf};

use crate::braid::{BraidWord, MoveScript, MoveStep, ScriptBuilder};
use crate::error::{Error, Result};
use crate::knot::TorusKnot;

/// Environment variable overriding the corpus directory.
pub const CORPUS_ENV: &str = "TORUSGENUS_CORPUS";

pub fn default_dir() -> PathBuf {
    std::env::var_os(CORPUS_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus"))
}

/// Every `*.json` script in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<(PathBuf, MoveScript)>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p)?;
            let script = MoveScript::from_json(&text)?;
            Ok((p, script))
        })
        .collect()
}

pub fn load_named(dir: &Path, name: &str) -> Result<MoveScript> {
    load_dir(dir)?
        .into_iter()
        .map(|(_, s)| s)
        .find(|s| s.name == name)
        .ok_or_else(|| Error::InvalidScript(format!("no script named {name:?} in {}", dir.display())))
}

fn word(strands: usize, alpha: &str) -> BraidWord {
    BraidWord::from_alpha(strands, alpha).expect("hard-coded word")
}

fn knot(p: u64, q: u64) -> TorusKnot {
    TorusKnot::new(p, q).expect("hard-coded knot")
}

/// `♦_k`: the positive braid on `2k` strands swapping the first `k` strands
/// with the last `k`, as rows `a_{k-r} ... a_{2k-1-r}` for `r = 0..k`.
pub fn block_swap(k: usize) -> Vec<usize> {
    (0..k).flat_map(|r| (k - r)..=(2 * k - 1 - r)).collect()
}

/// From `♦_k Z` on `2k` strands to `Δ_k² Z` on `k` strands by `k`
/// destabilizations. Before round `r` the word is `U^r R_r ... R_{k-1} Z`,
/// where `R_r` is row `r` of the swap and `U` is `R_r` minus its first
/// letter; `U^r R_r = R_r V^r` with `V = R_r` minus its last letter, and
/// then the top generator occurs once.
fn collapse_block_swap(mut b: ScriptBuilder, k: usize, z: &[usize]) -> Result<ScriptBuilder> {
    let rows: Vec<Vec<usize>> = (0..k).map(|r| ((k - r)..=(2 * k - 1 - r)).collect()).collect();
    for r in 0..k {
        let strands = b.current().strands();
        let v: Vec<usize> = rows[r][..k - 1].to_vec();
        let mut target = rows[r].clone();
        for _ in 0..r {
            target.extend(&v);
        }
        for row in &rows[r + 1..] {
            target.extend(row);
        }
        target.extend(z);
        b = b.rewrite_to(&BraidWord::new(strands, target)?)?;
        b = b.destabilize()?;
        let mut next: Vec<usize> = v.repeat(r + 1);
        for row in &rows[r + 1..] {
            next.extend(row);
        }
        next.extend(z);
        b = b.rotate_then_rewrite(&BraidWord::new(strands - 1, next)?)?;
    }
    Ok(b)
}

/// `X ♦_k Y` to `X Δ_k² Y`, through `♦_k Y X` and `Δ_k² Y X`.
fn block_swap_to_full_twist(b: ScriptBuilder, k: usize, x: &str, y: &str) -> Result<ScriptBuilder> {
    let n = 2 * k;
    let diamond = block_swap(k);
    let xw = word(n, x);
    let yw = word(n, y);
    let mut before: Vec<usize> = xw.letters().to_vec();
    before.extend(&diamond);
    before.extend(yw.letters());
    let b = b.rewrite_to(&BraidWord::new(n, before)?)?;
    let mut z: Vec<usize> = yw.letters().to_vec();
    z.extend(xw.letters());
    let mut front = diamond.clone();
    front.extend(&z);
    let b = b.rotate_then_rewrite(&BraidWord::new(n, front)?)?;
    let b = collapse_block_swap(b, k, &z)?;
    let twist: Vec<usize> = (1..k).collect::<Vec<_>>().repeat(k);
    let mut after: Vec<usize> = xw.letters().to_vec();
    after.extend(&twist);
    after.extend(yw.letters());
    b.rotate_then_rewrite(&BraidWord::new(k, after)?)
}

/// Genus one cobordism from `T(5,7)` to `T(4,9)` through an 8-braid.
pub fn t57_to_t49() -> Result<MoveScript> {
    let b = ScriptBuilder::new(word(7, &"abcdef".repeat(5)))
        .step(MoveStep::MarkovStabilize)?
        .rotate_then_rewrite(&word(8, &format!("abcdefg{}", "abcdef".repeat(4))))?
        .rewrite_to(&word(8, "dabcabadefgcdefbcdeabcdfefabcde"))?
        .rotate_then_rewrite(&word(8, "abcabadefgcdefbcdeabcdfefabcded"))?
        .rewrite_to(&word(8, "abcabadefgcdefbcdeabcdffefabcde"))?
        .note("abcabadefgcdefbcdeabcdffefabcde")
        .step(MoveStep::DeleteGenerator(29))?
        .step(MoveStep::InsertGenerator(24, 7))?;
    assert_eq!(b.current(), &word(8, "abcabadefgcdefbcdeabcdffgefabce"));
    let b = b.note("abcabadefgcdefbcdeabcdffgefabce");
    let b = block_swap_to_full_twist(b, 4, "abcababbacba", "abc")?;
    let b = b
        .note("abcababbacbaabcabcabcabcabc")
        .rewrite_to(&word(4, "babcababacbaabcabcabcabcabc"))?
        .rotate_then_rewrite(&word(4, &"abc".repeat(9)))?;
    Ok(b.finish("t57-to-t49", "fig:beta", Some([knot(5, 7), knot(4, 9)])))
}

/// Genus one cobordism from `T(4,7)` to `T(3,10)` through a 7-braid.
pub fn t47_to_t310() -> Result<MoveScript> {
    let b = ScriptBuilder::new(word(7, &"abcdef".repeat(4)))
        .rotate_then_rewrite(&word(7, "fefabcdefabcdefabcdeabcd"))?
        .rewrite_to(&word(7, "abcdefabcdefabcdeabcdbab"))?
        .note("abcdefabcdefabcdeabcdbab")
        .step(MoveStep::DeleteGenerator(19))?
        .step(MoveStep::InsertGenerator(19, 5))?;
    assert_eq!(b.current(), &word(7, "abcdefabcdefabcdeabedbab"));
    let b = b
        .note("abcdefabcdefabcdeabedbab")
        .rewrite_to(&word(7, "aabcdefabcdeabcdeabedbab"))?
        .destabilize()?
        .rotate_then_rewrite(&word(6, "aabcdeabcdeabcdeabedbab"))?;
    let b = block_swap_to_full_twist(b, 3, "aabababba", "abbab")?;
    let b = b
        .note("aabababbaababababbab")
        .rotate_then_rewrite(&word(3, &"ab".repeat(10)))?;
    Ok(b.finish("t47-to-t310", "fig:47to310", Some([knot(4, 7), knot(3, 10)])))
}

/// Genus one cobordism from `T(4,5)` to `T(3,7)` through a 6-braid.
pub fn t45_to_t37() -> Result<MoveScript> {
    let b = ScriptBuilder::new(word(5, &"abcd".repeat(4)))
        .step(MoveStep::MarkovStabilize)?
        .rotate_then_rewrite(&word(6, "abcdeabcdabcdabcd"))?
        .note("abcdeabcdabcdabcd")
        .step(MoveStep::DeleteGenerator(15))?
        .step(MoveStep::InsertGenerator(13, 5))?;
    assert_eq!(b.current(), &word(6, "abcdeabcdabcdeabd"));
    let b = b.note("abcdeabcdabcdeabd");
    let b = block_swap_to_full_twist(b, 3, "abaaba", "ab")?;
    let b = b
        .note("abaabaabababab")
        .rotate_then_rewrite(&word(3, &"ab".repeat(7)))?;
    Ok(b.finish("t45-to-t37", "fig:45to37", Some([knot(4, 5), knot(3, 7)])))
}

/// Decomposable genus one cobordism from `Λ(2,11)` to `Λ(4,5)`: two
/// generators are deleted from `(a1a2a3)^5`, found by breadth-first search,
/// and the result is run backwards as two insertions.
pub fn lambda_t211_to_t45() -> Result<MoveScript> {
    use crate::braid::TripleDirection::Raise;
    let down = ScriptBuilder::new(word(4, &"abc".repeat(5)))
        .steps([
            MoveStep::CommuteRelation(2),
            MoveStep::TripleRelation(0, Raise),
            MoveStep::TripleRelation(2, Raise),
            MoveStep::CyclicPermute(13),
            MoveStep::TripleRelation(0, Raise),
            MoveStep::DeleteGenerator(1),
            MoveStep::DeleteGenerator(4),
        ])?
        .finish("t45-to-t211", "search", Some([knot(4, 5), knot(2, 11)]));
    assert_eq!(down.declared_end, word(4, "ccacccabcabca").letters());
    let mut up = down.reversed("lambda-t211-to-t45", "thm:genus1deccob")?;
    up.notes.push(
        "ccacccabcabca closes to a knot with the Alexander polynomial and genus of T(2,11); its tb 9 is the maximal tb of T(2,11)"
            .to_string(),
    );
    Ok(up)
}

pub type Builder = fn() -> Result<MoveScript>;

/// Builders for every shipped script, keyed by file stem.
pub fn builders() -> Vec<(&'static str, Builder)> {
    vec![
        ("t45-to-t37", t45_to_t37 as Builder),
        ("t47-to-t310", t47_to_t310),
        ("t57-to-t49", t57_to_t49),
        ("lambda-t211-to-t45", lambda_t211_to_t45),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::verify_script;

    #[test]
    fn lagrangian_script_is_decomposable() {
        let s = lambda_t211_to_t45().unwrap();
        assert_eq!(crate::braid::lagrangian_genus_from_script(&s).unwrap(), num_rational::Ratio::from_integer(1));
    }

    #[test]
    fn block_swap_words() {
        assert_eq!(word(6, "cdebcdabc").letters(), block_swap(3).as_slice());
        assert_eq!(word(8, "defgcdefbcdeabcd").letters(), block_swap(4).as_slice());
    }

    #[test]
    fn builders_certify() {
        for (name, build) in builders() {
            let script = build().unwrap();
            assert_eq!(script.name, name);
            let cert = verify_script(&script).unwrap();
            assert_eq!(cert.saddle_count, 2, "{name}");
            assert!(!cert.link_steps.is_empty(), "{name}");
        }
    }
}
