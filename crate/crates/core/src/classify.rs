//! Which pairs of torus knots are one step apart: by a genus one cobordism,
//! by a crossing change, or by a genus one decomposable Lagrangian
//! cobordism between their max-tb Legendrian representatives.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::braid::{verify_script, BraidWord, CobordismCertificate, MoveScript, MoveStep, ScriptBuilder};
use crate::corpus;
use crate::error::{Error, Result};
use crate::invariants::{four_ball_genus, nu_plus_report, report_from_tables};
use crate::knot::{KnotPair, TorusKnot};
use crate::semigroup::NumericalSemigroup;
use crate::signature::{half_signature_of_difference, signature_distance_bound, UnitCircleParam};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilyTag {
    pub family_id: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<u64>,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter {
            Some(n) => write!(f, "({}) n={n}", self.family_id),
            None => write!(f, "({})", self.family_id),
        }
    }
}

/// Pairs of family (6), each listed smaller genus first where genera differ.
pub const SPORADIC: [((u64, u64), (u64, u64)); 6] =
    [((2, 7), (3, 4)), ((2, 9), (3, 5)), ((2, 11), (4, 5)), ((3, 7), (4, 5)), ((3, 10), (4, 7)), ((4, 9), (5, 7))];

/// The one pair whose cobordism distance is unknown.
pub const OPEN_PAIR: ((u64, u64), (u64, u64)) = ((3, 14), (5, 8));

pub const FAMILY_FIVE_N: [u64; 4] = [4, 5, 7, 8];

/// `(a, b)` with each of `p, q, p', q'` equal to `a n + b`.
fn linear_forms(id: u8) -> [(i64, i64); 4] {
    match id {
        1 => [(0, 2), (2, 1), (0, 2), (2, 3)],
        2 => [(0, 3), (3, 1), (0, 3), (3, 2)],
        3 => [(3, 1), (9, 6), (3, 2), (9, 3)],
        4 => [(2, 1), (4, 6), (2, 3), (4, 2)],
        5 => [(0, 2), (2, -3), (0, 3), (1, 0)],
        _ => unreachable!("only families 1 to 5 are parameterized"),
    }
}

/// The pair of a parameterized family (1)–(5) at `n`, smaller genus first.
pub fn family_instance(id: u8, n: u64) -> Option<(TorusKnot, TorusKnot)> {
    if !(1..=5).contains(&id) || n == 0 || (id == 5 && !FAMILY_FIVE_N.contains(&n)) {
        return None;
    }
    let v = linear_forms(id).map(|(a, b)| a * n as i64 + b);
    let first = TorusKnot::new(v[0] as u64, v[1] as u64).ok()?;
    let second = TorusKnot::new(v[2] as u64, v[3] as u64).ok()?;
    Some((first, second))
}

fn knot(pq: (u64, u64)) -> TorusKnot {
    TorusKnot::new(pq.0, pq.1).expect("listed pairs are valid")
}

fn same_unordered(pair: &KnotPair, a: TorusKnot, b: TorusKnot) -> bool {
    (pair.first == a && pair.second == b) || (pair.first == b && pair.second == a)
}

/// The lowest-numbered family (1)–(7) containing the unordered pair.
pub fn family_membership(pair: &KnotPair) -> Option<FamilyTag> {
    if pair.is_diagonal() || pair.first.is_unknot() || pair.second.is_unknot() {
        return None;
    }
    let values = [pair.first.p(), pair.first.q(), pair.second.p(), pair.second.q()];
    for id in 1..=5u8 {
        let mut candidates: Vec<u64> = Vec::new();
        for (a, b) in linear_forms(id) {
            if a == 0 {
                continue;
            }
            for &x in &values {
                let d = x as i64 - b;
                if d > 0 && d % a == 0 {
                    candidates.push((d / a) as u64);
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        for n in candidates {
            if let Some((a, b)) = family_instance(id, n) {
                if same_unordered(pair, a, b) {
                    return Some(FamilyTag { family_id: id, parameter: Some(n) });
                }
            }
        }
    }
    if SPORADIC.iter().any(|&(a, b)| same_unordered(pair, knot(a), knot(b))) {
        return Some(FamilyTag { family_id: 6, parameter: None });
    }
    if same_unordered(pair, knot(OPEN_PAIR.0), knot(OPEN_PAIR.1)) {
        return Some(FamilyTag { family_id: 7, parameter: None });
    }
    None
}

/// `max(ν⁺(K # -J), ν⁺(J # -K)) <= 1`, from the semigroup formula alone.
pub fn nu_obstruction_leq_one(pair: &KnotPair) -> bool {
    nu_plus_report(pair).max() <= 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    DistanceOne,
    AtLeastTwo,
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Cobordism,
    Gordian,
    Lagrangian,
}

impl Relation {
    pub fn is_directed(&self) -> bool {
        matches!(self, Relation::Lagrangian)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Cobordism => "cobordism",
            Relation::Gordian => "gordian",
            Relation::Lagrangian => "lagrangian",
        })
    }
}

impl FromStr for Relation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cobordism" => Ok(Relation::Cobordism),
            "gordian" => Ok(Relation::Gordian),
            "lagrangian" => Ok(Relation::Lagrangian),
            other => Err(format!("unknown relation {other:?}, expected cobordism, gordian or lagrangian")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Evidence {
    /// Membership in a listed family; `note` explains overlaps.
    #[serde(rename_all = "camelCase")]
    Family { tag: FamilyTag, note: Option<String> },
    /// `ν⁺(first # -second)` and `ν⁺(second # -first)`.
    NuPlus { forward: u64, backward: u64 },
    /// Maximum of half the signature difference over regular parameters.
    SignatureBound { bound: u64 },
    FourBallGenus { first: u64, second: u64 },
    OpenQuestion { note: String },
    /// A crossing change moves `ν⁺` of the difference by at most one.
    #[serde(rename_all = "camelCase")]
    NuPlusAtLeastTwo { max_nu: u64 },
    /// `ν⁺ > 0` in both orders: each order needs a positive-to-negative
    /// crossing change, so one change cannot suffice.
    #[serde(rename_all = "camelCase")]
    NuPlusPositiveBothWays { forward: u64, backward: u64 },
    /// `ν⁺(small # -large) > 0` forces a positive-to-negative change;
    /// `-σ_t(large # -small)/2 = 1` at `t` forces a negative-to-positive one.
    #[serde(rename_all = "camelCase")]
    MixedSignature { nu_small_minus_large: u64, interval: (String, String), t: UnitCircleParam, half_signature: i64 },
    /// An exact Lagrangian cobordism of genus g has `tb(to) - tb(from) = 2g`.
    #[serde(rename_all = "camelCase")]
    ThurstonBennequin { tb_from: i64, tb_to: i64 },
    /// The underlying unordered pair has no genus one cobordism at all.
    #[serde(rename_all = "camelCase")]
    NoGenusOneCobordism { verdict: Verdict },
    /// A verified move script.
    #[serde(rename_all = "camelCase")]
    Script { name: String, saddle_count: usize, lagrangian_decomposable: bool },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairReport {
    pub relation: Relation,
    pub pair: KnotPair,
    pub verdict: Verdict,
    pub family_tag: Option<FamilyTag>,
    pub lower_bound: u64,
    /// `None` when no upper bound is meaningful (Lagrangian reports other
    /// than existence).
    pub upper_bound: Option<u64>,
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CobordismCertificate>,
}

fn check_distinct(pair: &KnotPair) -> Result<()> {
    if pair.is_diagonal() {
        return Err(Error::IdenticalKnots(pair.first.to_string()));
    }
    Ok(())
}

fn check_nontrivial(pair: &KnotPair) -> Result<()> {
    for k in [pair.first, pair.second] {
        if k.is_unknot() {
            return Err(Error::InvalidParams { p: k.p(), q: k.q(), reason: "the unknot is not allowed here" });
        }
    }
    Ok(())
}

fn genus_sum(pair: &KnotPair) -> u64 {
    four_ball_genus(pair.first) + four_ball_genus(pair.second)
}

/// The cobordism verdict from family membership alone.
pub fn cobordism_verdict(pair: &KnotPair) -> Verdict {
    match family_membership(pair) {
        Some(FamilyTag { family_id: 7, .. }) => Verdict::Open,
        Some(_) => Verdict::DistanceOne,
        None => Verdict::AtLeastTwo,
    }
}

fn overlap_note(tag: FamilyTag) -> Option<String> {
    (tag == FamilyTag { family_id: 5, parameter: Some(4) })
        .then(|| "lowest family id reported; verdicts of overlapping schemas agree".to_string())
}

/// A shipped script connecting the unordered pair, if any.
fn corpus_certificate(pair: &KnotPair, decomposable_only: bool) -> Option<CobordismCertificate> {
    corpus::builders()
        .into_iter()
        .filter_map(|(_, build)| build().ok())
        .filter_map(|s| verify_script(&s).ok())
        .filter(|c| !decomposable_only || c.lagrangian_decomposable)
        .find(|c| match (c.from_knot, c.to_knot) {
            (Some(a), Some(b)) if decomposable_only => pair.first == a && pair.second == b,
            (Some(a), Some(b)) => same_unordered(pair, a, b),
            _ => false,
        })
}

fn script_evidence(cert: &CobordismCertificate) -> Evidence {
    Evidence::Script {
        name: cert.name.clone(),
        saddle_count: cert.saddle_count,
        lagrangian_decomposable: cert.lagrangian_decomposable,
    }
}

pub fn cobordism_distance_one(pair: &KnotPair) -> Result<PairReport> {
    check_distinct(pair)?;
    check_nontrivial(pair)?;
    let nu = nu_plus_report(pair);
    let tag = family_membership(pair);
    let mut evidence = Vec::new();
    if let Some(tag) = tag {
        evidence.push(Evidence::Family { tag, note: overlap_note(tag) });
    }
    evidence.push(Evidence::NuPlus { forward: nu.nu_forward, backward: nu.nu_backward });
    let verdict = cobordism_verdict(pair);
    let (lower, upper, certificate) = match verdict {
        Verdict::DistanceOne => {
            let cert = corpus_certificate(pair, false);
            if let Some(c) = &cert {
                evidence.push(script_evidence(c));
            }
            (1, 1, cert)
        }
        Verdict::Open => {
            evidence.push(Evidence::OpenQuestion {
                note: "the cobordism distance is one or two; which is unknown".to_string(),
            });
            (1, 2, None)
        }
        Verdict::AtLeastTwo => {
            let sig = signature_distance_bound(pair);
            evidence.push(Evidence::SignatureBound { bound: sig });
            evidence.push(Evidence::FourBallGenus {
                first: four_ball_genus(pair.first),
                second: four_ball_genus(pair.second),
            });
            (2.max(nu.max()).max(sig), genus_sum(pair), None)
        }
    };
    Ok(PairReport {
        relation: Relation::Cobordism,
        pair: *pair,
        verdict,
        family_tag: tag,
        lower_bound: lower,
        upper_bound: Some(upper),
        evidence,
        certificate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub pair: KnotPair,
    pub max_nu: u64,
    pub family_tag: Option<FamilyTag>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EquivalenceReport {
    pub max_q: u64,
    pub knots: usize,
    pub pairs_checked: usize,
    /// Unordered pairs with `max ν⁺ <= 1`, each with its family.
    pub satisfied: Vec<(KnotPair, Option<FamilyTag>)>,
    pub family_pairs: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Over all unordered pairs of distinct non-trivial torus knots with
/// `q, q' <= max_q`, compares the `ν⁺` obstruction with family membership.
pub fn verify_theorem_equivalence(max_q: u64) -> EquivalenceReport {
    let knots = TorusKnot::enumerate(max_q, max_q);
    let tables: Vec<NumericalSemigroup> = knots.iter().map(|&k| NumericalSemigroup::minimal(k)).collect();
    let mut satisfied = Vec::new();
    let mut counterexamples = Vec::new();
    let mut pairs_checked = 0;
    let mut family_pairs = 0;
    for i in 0..knots.len() {
        for j in i + 1..knots.len() {
            let pair = KnotPair::new(knots[i], knots[j]);
            let nu = report_from_tables(&pair, &tables[i], &tables[j]);
            let tag = family_membership(&pair);
            pairs_checked += 1;
            family_pairs += tag.is_some() as usize;
            let obstruction = nu.max() <= 1;
            if obstruction {
                satisfied.push((pair, tag));
            }
            if obstruction != tag.is_some() {
                counterexamples.push(Counterexample { pair, max_nu: nu.max(), family_tag: tag });
            }
        }
    }
    EquivalenceReport { max_q, knots: knots.len(), pairs_checked, satisfied, family_pairs, counterexamples }
}

/// Pairs one crossing change apart, tagged with the cobordism family they
/// belong to (family (1) includes `n = 0`, the unknot and the trefoil).
pub fn gordian_family(pair: &KnotPair) -> Option<FamilyTag> {
    if pair.is_diagonal() {
        return None;
    }
    let u = TorusKnot::unknot();
    let t23 = knot((2, 3));
    if same_unordered(pair, u, t23) {
        return Some(FamilyTag { family_id: 1, parameter: Some(0) });
    }
    match family_membership(pair)? {
        tag @ FamilyTag { family_id: 1 | 2, .. } => Some(tag),
        tag @ FamilyTag { family_id: 5, parameter: Some(4 | 5) } => Some(tag),
        _ => None,
    }
}

pub fn gordian_verdict(pair: &KnotPair) -> Verdict {
    if gordian_family(pair).is_some() {
        Verdict::DistanceOne
    } else {
        Verdict::AtLeastTwo
    }
}

pub type ParamInterval = (UnitCircleParam, UnitCircleParam);

/// Intervals of parameters on which `-σ(large # -small)/2 = 1` for the two
/// pairs whose Gordian distance needs signatures.
pub fn mixed_signature_intervals(pair: &KnotPair) -> Option<(TorusKnot, TorusKnot, Vec<ParamInterval>)> {
    let r = |s: &str| s.parse::<UnitCircleParam>().expect("hard-coded rational");
    if same_unordered(pair, knot((2, 7)), knot((3, 4))) {
        return Some((knot((2, 7)), knot((3, 4)), vec![(r("2/12"), r("3/14"))]));
    }
    if same_unordered(pair, knot((2, 9)), knot((3, 5))) {
        return Some((knot((2, 9)), knot((3, 5)), vec![(r("2/15"), r("3/18")), (r("4/15"), r("5/18"))]));
    }
    None
}

pub fn gordian_distance_one(pair: &KnotPair) -> Result<PairReport> {
    check_distinct(pair)?;
    let nu = nu_plus_report(pair);
    let mut evidence = Vec::new();
    let tag = gordian_family(pair);
    let verdict = gordian_verdict(pair);
    if let Some(tag) = tag {
        evidence.push(Evidence::Family { tag, note: None });
    }
    evidence.push(Evidence::NuPlus { forward: nu.nu_forward, backward: nu.nu_backward });
    if verdict == Verdict::AtLeastTwo {
        if nu.max() >= 2 {
            evidence.push(Evidence::NuPlusAtLeastTwo { max_nu: nu.max() });
        } else if nu.min() >= 1 {
            evidence.push(Evidence::NuPlusPositiveBothWays { forward: nu.nu_forward, backward: nu.nu_backward });
        } else if let Some((small, large, intervals)) = mixed_signature_intervals(pair) {
            let nu_small = nu_plus_report(&KnotPair::new(small, large)).nu_forward;
            for (lo, hi) in intervals {
                let t = UnitCircleParam::new((lo.t() + hi.t()) / 2)?;
                evidence.push(Evidence::MixedSignature {
                    nu_small_minus_large: nu_small,
                    interval: (lo.to_string(), hi.to_string()),
                    t,
                    half_signature: half_signature_of_difference(&KnotPair::new(large, small), t)?,
                });
            }
        } else {
            return Err(Error::NoObstruction(pair.to_string()));
        }
    }
    let (lower, upper) = match verdict {
        Verdict::DistanceOne => (1, 1),
        _ => (2, genus_sum(pair)),
    };
    Ok(PairReport {
        relation: Relation::Gordian,
        pair: *pair,
        verdict,
        family_tag: tag,
        lower_bound: lower,
        upper_bound: Some(upper),
        evidence,
        certificate: None,
    })
}

/// The ordered Lagrangian families: (1)–(5) from smaller to larger genus,
/// (6) only as `(Λ(2,11), Λ(4,5))`, and the open `(Λ(3,14), Λ(5,8))` as (7).
/// Family (2) ends at `Λ(3,3n+2)`.
pub fn lagrangian_family(pair: &KnotPair) -> Option<FamilyTag> {
    let tag = family_membership(pair)?;
    let up = four_ball_genus(pair.second) == four_ball_genus(pair.first) + 1;
    match tag.family_id {
        1..=5 | 7 if up => Some(tag),
        6 if pair.first == knot((2, 11)) && pair.second == knot((4, 5)) => Some(tag),
        _ => None,
    }
}

pub fn lagrangian_verdict(pair: &KnotPair) -> Verdict {
    match lagrangian_family(pair) {
        Some(FamilyTag { family_id: 7, .. }) => Verdict::Open,
        Some(_) => Verdict::DistanceOne,
        None => Verdict::AtLeastTwo,
    }
}

/// `tb` of the max-tb Legendrian representative, `pq - p - q`.
pub fn max_tb(k: TorusKnot) -> i64 {
    2 * four_ball_genus(k) as i64 - 1
}

/// A decomposable script for the ordered pair when one is known.
pub fn lagrangian_script(pair: &KnotPair) -> Option<MoveScript> {
    let tag = lagrangian_family(pair)?;
    match (tag.family_id, tag.parameter) {
        (1, Some(n)) => {
            let b = ScriptBuilder::new(BraidWord::torus(pair.first)).steps([
                MoveStep::InsertGenerator(0, 1),
                MoveStep::InsertGenerator(0, 1),
            ]);
            Some(b.ok()?.finish(&format!("lambda-2-{}", 2 * n + 1), "lfam1", Some([pair.first, pair.second])))
        }
        (2, Some(n)) => {
            let b = ScriptBuilder::new(BraidWord::torus(pair.first));
            let len = b.current().len();
            let b = b.steps([MoveStep::InsertGenerator(len, 1), MoveStep::InsertGenerator(len + 1, 2)]);
            Some(b.ok()?.finish(&format!("lambda-3-{}", 3 * n + 1), "lfam2", Some([pair.first, pair.second])))
        }
        (6, None) => corpus::lambda_t211_to_t45().ok(),
        _ => None,
    }
}

pub fn lagrangian_genus_one(pair: &KnotPair) -> Result<PairReport> {
    check_distinct(pair)?;
    check_nontrivial(pair)?;
    let tag = lagrangian_family(pair);
    let verdict = lagrangian_verdict(pair);
    let tb = Evidence::ThurstonBennequin { tb_from: max_tb(pair.first), tb_to: max_tb(pair.second) };
    let mut evidence = Vec::new();
    if let Some(tag) = tag {
        evidence.push(Evidence::Family { tag, note: None });
    }
    evidence.push(tb);
    let mut certificate = None;
    let (lower, upper) = match verdict {
        Verdict::DistanceOne => {
            if let Some(script) = lagrangian_script(pair) {
                let cert = verify_script(&script)?;
                evidence.push(script_evidence(&cert));
                certificate = Some(cert);
            }
            (1, Some(1))
        }
        Verdict::Open => {
            evidence.push(Evidence::OpenQuestion {
                note: "a genus one exact Lagrangian cobordism exists iff the knots have cobordism distance one"
                    .to_string(),
            });
            (1, None)
        }
        Verdict::AtLeastTwo => {
            let cob = cobordism_verdict(pair);
            if cob == Verdict::AtLeastTwo {
                evidence.push(Evidence::NoGenusOneCobordism { verdict: cob });
            }
            (2, None)
        }
    };
    Ok(PairReport {
        relation: Relation::Lagrangian,
        pair: *pair,
        verdict,
        family_tag: tag,
        lower_bound: lower,
        upper_bound: upper,
        evidence,
        certificate,
    })
}

/// Whether an exact Lagrangian genus one cobordism is ruled out by
/// `tb(to) - tb(from) = 2`.
pub fn tb_obstructs_genus_one(pair: &KnotPair) -> bool {
    max_tb(pair.second) - max_tb(pair.first) != 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl FromStr for GraphFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            other => Err(format!("unknown format {other:?}, expected dot or json")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphEdge {
    pub source: TorusKnot,
    pub target: TorusKnot,
    /// `"solid"` or `"open"`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Graph {
    pub relation: Relation,
    pub directed: bool,
    pub max_p: u64,
    pub max_q: u64,
    pub vertices: Vec<TorusKnot>,
    pub edges: Vec<GraphEdge>,
}

/// Vertices are the torus knots with `p <= max_p`, `q <= max_q` (plus the
/// unknot for the Gordian graph when `with_unknot`), in `(p, q)` order;
/// edges are sorted by endpoints.
pub fn build_graph(relation: Relation, max_p: u64, max_q: u64, with_unknot: bool) -> Graph {
    let mut vertices = TorusKnot::enumerate(max_p, max_q);
    if with_unknot && relation == Relation::Gordian {
        vertices.insert(0, TorusKnot::unknot());
    }
    let mut edges = BTreeMap::new();
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate() {
            if i == j || (!relation.is_directed() && j < i) {
                continue;
            }
            let pair = KnotPair::new(a, b);
            let (verdict, family) = match relation {
                Relation::Cobordism => (cobordism_verdict(&pair), family_membership(&pair)),
                Relation::Gordian => (gordian_verdict(&pair), gordian_family(&pair)),
                Relation::Lagrangian => (lagrangian_verdict(&pair), lagrangian_family(&pair)),
            };
            let status = match verdict {
                Verdict::DistanceOne => "solid",
                Verdict::Open => "open",
                Verdict::AtLeastTwo => continue,
            };
            edges.insert((a, b), GraphEdge { source: a, target: b, status, family });
        }
    }
    Graph { relation, directed: relation.is_directed(), max_p, max_q, vertices, edges: edges.into_values().collect() }
}

impl Graph {
    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.directed { ("digraph", "->") } else { ("graph", "--") };
        let mut out = format!("{kind} {} {{\n  node [shape=plaintext];\n", self.relation);
        for v in &self.vertices {
            out += &format!("  \"{v}\";\n");
        }
        for e in &self.edges {
            let attrs = if e.status == "open" { " [style=dotted, label=\"open\"]" } else { "" };
            out += &format!("  \"{}\" {arrow} \"{}\"{attrs};\n", e.source, e.target);
        }
        out += "}\n";
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes") + "\n"
    }

    pub fn render(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Dot => self.to_dot(),
            GraphFormat::Json => self.to_json(),
        }
    }
}

pub fn emit_graph(relation: Relation, max_p: u64, max_q: u64, format: GraphFormat, with_unknot: bool) -> String {
    build_graph(relation, max_p, max_q, with_unknot).render(format)
}
