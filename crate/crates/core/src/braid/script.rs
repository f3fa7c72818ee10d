//! Move scripts: replayable certificates for cobordisms between braid
//! closures.

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::knot::TorusKnot;

use super::alexander::{alexander_of_closure, is_torus_closure_certificate};
use super::moves::{apply_move, MoveStep, TripleDirection};
use super::rewrite::relation_path;
use super::word::BraidWord;

#[derive(Serialize, Deserialize)]
struct RawStep {
    kind: String,
    #[serde(default)]
    args: Vec<i64>,
}

impl Serialize for MoveStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let args = match *self {
            MoveStep::CyclicPermute(k) => vec![k as i64],
            MoveStep::CommuteRelation(p) => vec![p as i64],
            MoveStep::TripleRelation(p, TripleDirection::Raise) => vec![p as i64, 1],
            MoveStep::TripleRelation(p, TripleDirection::Lower) => vec![p as i64, -1],
            MoveStep::MarkovStabilize | MoveStep::MarkovDestabilize => vec![],
            MoveStep::DeleteGenerator(p) => vec![p as i64],
            MoveStep::InsertGenerator(p, g) => vec![p as i64, g as i64],
        };
        RawStep { kind: self.kind().to_string(), args }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MoveStep {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawStep::deserialize(deserializer)?;
        let arg = |i: usize| -> std::result::Result<usize, D::Error> {
            let v = *raw
                .args
                .get(i)
                .ok_or_else(|| D::Error::custom(format!("{} needs argument {i}", raw.kind)))?;
            usize::try_from(v).map_err(|_| D::Error::custom(format!("negative argument {v}")))
        };
        let expect_args = |n: usize| -> std::result::Result<(), D::Error> {
            if raw.args.len() != n {
                return Err(D::Error::custom(format!("{} takes {n} arguments", raw.kind)));
            }
            Ok(())
        };
        let step = match raw.kind.as_str() {
            "CyclicPermute" => {
                expect_args(1)?;
                MoveStep::CyclicPermute(arg(0)?)
            }
            "CommuteRelation" => {
                expect_args(1)?;
                MoveStep::CommuteRelation(arg(0)?)
            }
            "TripleRelation" => {
                expect_args(2)?;
                let dir = match raw.args[1] {
                    1 => TripleDirection::Raise,
                    -1 => TripleDirection::Lower,
                    d => return Err(D::Error::custom(format!("triple direction must be 1 or -1, got {d}"))),
                };
                MoveStep::TripleRelation(arg(0)?, dir)
            }
            "MarkovStabilize" => {
                expect_args(0)?;
                MoveStep::MarkovStabilize
            }
            "MarkovDestabilize" => {
                expect_args(0)?;
                MoveStep::MarkovDestabilize
            }
            "DeleteGenerator" => {
                expect_args(1)?;
                MoveStep::DeleteGenerator(arg(0)?)
            }
            "InsertGenerator" => {
                expect_args(2)?;
                MoveStep::InsertGenerator(arg(0)?, arg(1)?)
            }
            other => return Err(D::Error::custom(format!("unknown move kind {other:?}"))),
        };
        Ok(step)
    }
}

/// A start word, a sequence of moves and the word they are claimed to reach.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MoveScript {
    pub name: String,
    pub paper_ref: String,
    /// Strand count of the start word.
    pub strands: usize,
    pub start_word: Vec<usize>,
    pub steps: Vec<MoveStep>,
    pub declared_end: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_endpoints: Option<[TorusKnot; 2]>,
    /// Free-form provenance, e.g. the intermediate words the script passes.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl MoveScript {
    pub fn start(&self) -> Result<BraidWord> {
        BraidWord::new(self.strands, self.start_word.clone())
    }

    /// Replays every step, returning all intermediate words (start included).
    pub fn replay(&self) -> Result<Vec<BraidWord>> {
        let mut words = vec![self.start()?];
        for (index, &step) in self.steps.iter().enumerate() {
            let next = apply_move(words.last().unwrap(), step)
                .map_err(|source| Error::IllegalStep { index, source })?;
            words.push(next);
        }
        Ok(words)
    }

    /// The script run backwards: from the declared end to the start.
    pub fn reversed(&self, name: &str, paper_ref: &str) -> Result<Self> {
        let words = self.replay()?;
        let steps = self.steps.iter().zip(&words).rev().map(|(s, before)| s.inverse(before)).collect();
        let end = words.last().unwrap();
        Ok(MoveScript {
            name: name.to_string(),
            paper_ref: paper_ref.to_string(),
            strands: end.strands(),
            start_word: end.letters().to_vec(),
            steps,
            declared_end: self.start_word.clone(),
            claimed_endpoints: self.claimed_endpoints.map(|[a, b]| [b, a]),
            notes: self.notes.clone(),
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// JSON with one step per line and word arrays inline.
    pub fn to_json(&self) -> Result<String> {
        use serde_json::to_string as compact;
        let lines = |items: Vec<String>| {
            if items.is_empty() {
                "[]".to_string()
            } else {
                format!("[\n    {}\n  ]", items.join(",\n    "))
            }
        };
        let mut fields = vec![
            ("name", compact(&self.name)?),
            ("paperRef", compact(&self.paper_ref)?),
            ("strands", compact(&self.strands)?),
            ("startWord", compact(&self.start_word)?),
            ("steps", lines(self.steps.iter().map(compact).collect::<serde_json::Result<_>>()?)),
            ("declaredEnd", compact(&self.declared_end)?),
        ];
        if let Some(ends) = &self.claimed_endpoints {
            fields.push(("claimedEndpoints", compact(ends)?));
        }
        if !self.notes.is_empty() {
            fields.push(("notes", lines(self.notes.iter().map(compact).collect::<serde_json::Result<_>>()?)));
        }
        let body: Vec<String> = fields.into_iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
        Ok(format!("{{\n{}\n}}", body.join(",\n")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CobordismCertificate {
    pub name: String,
    pub from_knot: Option<TorusKnot>,
    pub to_knot: Option<TorusKnot>,
    pub start: BraidWord,
    pub end: BraidWord,
    pub start_components: usize,
    pub end_components: usize,
    /// Deletions plus insertions; each is one 1-handle.
    pub saddle_count: usize,
    pub deletions: usize,
    pub insertions: usize,
    /// Euler characteristic of the cobordism surface, `-saddle_count`.
    pub euler_characteristic: i64,
    /// `saddle_count / 2` when both ends are knots, as "g" or "g/2".
    #[serde(serialize_with = "ser_genus")]
    pub genus: Option<Ratio<i64>>,
    /// No generator is deleted, so every step is an isotopy, a Markov move or
    /// a generator insertion.
    pub lagrangian_decomposable: bool,
    pub tb_start: i64,
    pub tb_end: i64,
    pub step_count: usize,
    /// Indices of steps after which the closure has more than one component.
    pub link_steps: Vec<usize>,
}

fn ser_genus<S: serde::Serializer>(g: &Option<Ratio<i64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match g {
        Some(g) => s.serialize_str(&g.to_string()),
        None => s.serialize_none(),
    }
}

/// Replays a script and certifies its endpoints.
pub fn verify_script(script: &MoveScript) -> Result<CobordismCertificate> {
    let words = script.replay()?;
    let start = words.first().unwrap().clone();
    let end = words.last().unwrap().clone();
    if end.letters() != script.declared_end.as_slice() {
        let declared = BraidWord::new(end.strands(), script.declared_end.clone())
            .map(|w| w.to_string())
            .unwrap_or_else(|_| format!("{:?}", script.declared_end));
        return Err(Error::DeclaredEndMismatch { actual: end.to_string(), declared });
    }
    let deletions = script.steps.iter().filter(|s| matches!(s, MoveStep::DeleteGenerator(_))).count();
    let insertions = script.steps.iter().filter(|s| matches!(s, MoveStep::InsertGenerator(..))).count();
    let saddle_count = deletions + insertions;
    let start_components = start.closure_component_count();
    let end_components = end.closure_component_count();
    let genus = (start_components == 1 && end_components == 1).then(|| Ratio::new(saddle_count as i64, 2));

    if let Some([from, to]) = script.claimed_endpoints {
        if !is_torus_closure_certificate(&start, from) {
            return Err(Error::EndpointMismatch { which: "start", claimed: from.to_string() });
        }
        if !is_torus_closure_certificate(&end, to) {
            return Err(Error::EndpointMismatch { which: "end", claimed: to.to_string() });
        }
    }
    let link_steps = words
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, w)| w.closure_component_count() > 1)
        .map(|(i, _)| i - 1)
        .collect();
    Ok(CobordismCertificate {
        name: script.name.clone(),
        from_knot: script.claimed_endpoints.map(|e| e[0]),
        to_knot: script.claimed_endpoints.map(|e| e[1]),
        tb_start: start.thurston_bennequin(),
        tb_end: end.thurston_bennequin(),
        start,
        end,
        start_components,
        end_components,
        saddle_count,
        deletions,
        insertions,
        euler_characteristic: -(saddle_count as i64),
        genus,
        lagrangian_decomposable: deletions == 0,
        step_count: script.steps.len(),
        link_steps,
    })
}

/// Genus of the decomposable Lagrangian cobordism realized by a script, from
/// `tb(end) - tb(start) = -χ(L)`. Cross-checked against the saddle count.
pub fn lagrangian_genus_from_script(script: &MoveScript) -> Result<Ratio<i64>> {
    let cert = verify_script(script)?;
    if !cert.lagrangian_decomposable {
        return Err(Error::NotDecomposable);
    }
    let Some(genus) = cert.genus else {
        return Err(Error::NotKnotToKnot);
    };
    let from_tb = Ratio::new(cert.tb_end - cert.tb_start, 2);
    debug_assert_eq!(from_tb, genus);
    if from_tb != genus {
        return Err(Error::InvalidScript(format!(
            "Thurston-Bennequin genus {from_tb} disagrees with saddle genus {genus}"
        )));
    }
    Ok(from_tb)
}

/// Finds the torus knot whose closure certificate `word` passes, among all
/// torus knots of the Bennequin genus of `word`.
pub fn identify_torus_closure(word: &BraidWord) -> Option<TorusKnot> {
    let genus = word.bennequin_genus()?;
    if genus == 0 {
        return Some(TorusKnot::unknot());
    }
    let alexander = alexander_of_closure(word).ok()?;
    let target = 2 * genus;
    (1..=target)
        .filter(|d| target % d == 0)
        .filter_map(|d| TorusKnot::new(d + 1, target / d + 1).ok())
        .filter(|k| k.p() <= k.q() && k.genus() == genus)
        .find(|&k| super::alexander::torus_alexander(k) == alexander)
}

/// Incremental construction of scripts; every step is applied and checked as
/// it is added.
#[derive(Clone, Debug)]
pub struct ScriptBuilder {
    start: BraidWord,
    current: BraidWord,
    steps: Vec<MoveStep>,
    notes: Vec<String>,
}

impl ScriptBuilder {
    pub fn new(start: BraidWord) -> Self {
        Self { current: start.clone(), start, steps: Vec::new(), notes: Vec::new() }
    }

    pub fn current(&self) -> &BraidWord {
        &self.current
    }

    pub fn step(mut self, step: MoveStep) -> Result<Self> {
        let index = self.steps.len();
        self.current = apply_move(&self.current, step).map_err(|source| Error::IllegalStep { index, source })?;
        self.steps.push(step);
        Ok(self)
    }

    pub fn steps(self, steps: impl IntoIterator<Item = MoveStep>) -> Result<Self> {
        steps.into_iter().try_fold(self, |b, s| b.step(s))
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Braid relations to reach `target`, which must be the same positive
    /// braid.
    pub fn rewrite_to(self, target: &BraidWord) -> Result<Self> {
        let path = relation_path(&self.current, target).ok_or_else(|| {
            Error::InvalidScript(format!("{} and {} are not equal positive braids", self.current, target))
        })?;
        self.steps(path)
    }

    /// Reaches `target` by one cyclic permutation and braid relations, either
    /// rotating first or rewriting first. Smallest rotation wins.
    pub fn rotate_then_rewrite(self, target: &BraidWord) -> Result<Self> {
        let len = self.current.len();
        for k in 0..len.max(1) {
            let rotated = self.current.rotated(k);
            if let Some(path) = relation_path(&rotated, target) {
                let b = if k == 0 { self } else { self.step(MoveStep::CyclicPermute(k))? };
                return b.steps(path);
            }
            let unrotated = target.rotated(len - k);
            if let Some(path) = relation_path(&self.current, &unrotated) {
                let b = self.steps(path)?;
                return if k == 0 { Ok(b) } else { b.step(MoveStep::CyclicPermute(k)) };
            }
        }
        Err(Error::InvalidScript(format!("{target} is not a conjugate of {} by rotation", self.current)))
    }

    /// Rotate so that the only occurrence of the top generator is last, then
    /// destabilize.
    pub fn destabilize(self) -> Result<Self> {
        let top = self.current.strands() - 1;
        let positions: Vec<usize> =
            self.current.letters().iter().enumerate().filter(|(_, &g)| g == top).map(|(i, _)| i).collect();
        if positions.len() != 1 {
            return Err(Error::InvalidScript(format!(
                "cannot destabilize {}: a{top} occurs {} times",
                self.current,
                positions.len()
            )));
        }
        let k = (positions[0] + 1) % self.current.len();
        let b = if k == 0 { self } else { self.step(MoveStep::CyclicPermute(k))? };
        b.step(MoveStep::MarkovDestabilize)
    }

    pub fn finish(self, name: &str, paper_ref: &str, claimed: Option<[TorusKnot; 2]>) -> MoveScript {
        MoveScript {
            name: name.to_string(),
            paper_ref: paper_ref.to_string(),
            strands: self.start.strands(),
            start_word: self.start.letters().to_vec(),
            steps: self.steps,
            declared_end: self.current.letters().to_vec(),
            claimed_endpoints: claimed,
            notes: self.notes,
        }
    }
}
