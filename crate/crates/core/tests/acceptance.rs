//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the PASS/FAIL lines are always printed; exits non-zero on any failure.
//!
//! Oracles here are written independently of the library: semigroups by
//! brute-force membership, signatures by counting lattice points, family
//! lists typed in by hand.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use torusgenus::braid::{
    apply_move, is_torus_closure_certificate, search_script, verify_script, BraidWord, MoveScript, SearchBounds,
};
use torusgenus::checks::{default_golden_dir, regeneration_bounds};
use torusgenus::classify::{
    build_graph, lagrangian_genus_one, verify_theorem_equivalence, Evidence, GraphFormat, Relation, Verdict,
};
use torusgenus::invariants::{cobordism_lower_bound_nu, nu_plus_diff, tau};
use torusgenus::signature::{
    half_signature_of_difference, hermitian_signature_with_tolerance, lattice_step_function,
    seifert_matrix_from_positive_braid, signature_distance_bound, UnitCircleParam, DEFAULT_TOLERANCE,
};
use torusgenus::{corpus, KnotPair, TorusKnot};

type Pq = (u64, u64);

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn within(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.check(took < limit, || format!("took {took:?}, limit {limit:?}"));
    }
}

fn k(pq: Pq) -> TorusKnot {
    TorusKnot::new(pq.0, pq.1).unwrap()
}

fn pair(a: Pq, b: Pq) -> KnotPair {
    KnotPair::new(k(a), k(b))
}

fn unordered(a: Pq, b: Pq) -> (Pq, Pq) {
    (a.min(b), a.max(b))
}

fn knots(max_p: u64, max_q: u64) -> Vec<Pq> {
    (3..=max_q).flat_map(|q| (2..q.min(max_p + 1)).filter(move |&p| p.gcd(&q) == 1).map(move |p| (p, q))).collect()
}

fn genus((p, q): Pq) -> i64 {
    ((p - 1) * (q - 1) / 2) as i64
}

// semigroup oracle

fn in_semigroup((p, q): Pq, x: u64) -> bool {
    (0..=x / q).any(|j| (x - j * q).is_multiple_of(p))
}

/// First `len` elements of the semigroup generated by p and q.
fn semigroup_prefix(k: Pq, len: usize) -> Vec<i64> {
    (0u64..).filter(|&x| in_semigroup(k, x)).take(len).map(|x| x as i64).collect()
}

/// Enough elements that both sequences have left their gaps behind.
fn prefix_len(a: Pq, b: Pq) -> usize {
    let f = |(p, q): Pq| (p * q) as usize;
    f(a).max(f(b)) + 2
}

/// `ν⁺(a # -b) = max(0, g(a) - g(b) + max_n (Γ_b(n) - Γ_a(n)))`.
fn nu_from_prefixes(ga: i64, gb: i64, sa: &[i64], sb: &[i64]) -> i64 {
    let m = sa.iter().zip(sb).map(|(x, y)| y - x).max().unwrap();
    (ga - gb + m).max(0)
}

fn nu(a: Pq, b: Pq) -> i64 {
    let len = prefix_len(a, b);
    nu_from_prefixes(genus(a), genus(b), &semigroup_prefix(a, len), &semigroup_prefix(b, len))
}

// family lists, typed in by hand

fn cobordism_families(max_n: u64) -> Vec<(u8, Option<u64>, Pq, Pq)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((1, Some(n), (2, 2 * n + 1), (2, 2 * n + 3)));
        out.push((2, Some(n), (3, 3 * n + 1), (3, 3 * n + 2)));
        out.push((3, Some(n), (3 * n + 1, 9 * n + 6), (3 * n + 2, 9 * n + 3)));
        out.push((4, Some(n), (2 * n + 1, 4 * n + 6), (2 * n + 3, 4 * n + 2)));
    }
    for n in [4, 5, 7, 8] {
        out.push((5, Some(n), (2, 2 * n - 3), (3, n)));
    }
    for (a, b) in [((2, 7), (3, 4)), ((2, 9), (3, 5)), ((2, 11), (4, 5)), ((3, 7), (4, 5)), ((3, 10), (4, 7)), ((4, 9), (5, 7))] {
        out.push((6, None, a, b));
    }
    out.push((7, None, (3, 14), (5, 8)));
    out
}

fn in_range(a: Pq, b: Pq, max_p: u64, max_q: u64) -> bool {
    a.0 <= max_p && b.0 <= max_p && a.1 <= max_q && b.1 <= max_q
}

// signature oracle: for x in (0,1), σ at e^{2πix} of T(p,q) is the number of
// i/p + j/q (0<i<p, 0<j<q) outside (x, x+1) minus the number inside.

fn sig_count((p, q): Pq, x: (i128, i128)) -> i64 {
    let (a, b) = x;
    let pq = (p * q) as i128;
    let mut s = 0;
    for i in 1..p as i128 {
        for j in 1..q as i128 {
            let n = i * q as i128 + j * p as i128;
            // n/pq vs a/b and (a+b)/b
            let lo = n * b - a * pq;
            let hi = n * b - (a + b) * pq;
            assert!(lo != 0 && hi != 0, "sample point sits on a jump");
            s += if lo > 0 && hi < 0 { -1 } else { 1 };
        }
    }
    s
}

/// All fractions in (0,1) where the signature of some listed knot may jump.
fn jump_points(ks: &[Pq]) -> Vec<(i128, i128)> {
    let mut pts = BTreeSet::new();
    for &(p, q) in ks {
        let pq = (p * q) as i128;
        for i in 1..p as i128 {
            for j in 1..q as i128 {
                let n = (i * q as i128 + j * p as i128) % pq;
                let g = n.gcd(&pq);
                pts.insert(num_rational::Ratio::new_raw(n / g, pq / g));
            }
        }
    }
    pts.insert(num_rational::Ratio::new_raw(0, 1));
    pts.insert(num_rational::Ratio::new_raw(1, 1));
    pts.into_iter().map(|r: num_rational::Ratio<i128>| (*r.numer(), *r.denom())).collect()
}

fn mids(pts: &[(i128, i128)]) -> Vec<(i128, i128)> {
    pts.windows(2).map(|w| ((w[0].0 * w[1].1 + w[1].0 * w[0].1), 2 * w[0].1 * w[1].1)).collect()
}

fn param(x: (i128, i128)) -> UnitCircleParam {
    let g = x.0.gcd(&x.1);
    UnitCircleParam::from_fraction((x.0 / g) as i64, (x.1 / g) as i64).unwrap()
}

// braid oracle

fn components(strands: usize, letters: &[usize]) -> usize {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &g in letters {
        perm.swap(g - 1, g);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for s in 0..strands {
        if !seen[s] {
            cycles += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                t = perm[t];
            }
        }
    }
    cycles
}

fn word_genus(strands: usize, letters: &[usize]) -> i64 {
    (letters.len() as i64 - strands as i64 + 1) / 2
}

fn replay(script: &MoveScript) -> Vec<BraidWord> {
    let mut w = BraidWord::new(script.strands, script.start_word.clone()).unwrap();
    let mut out = vec![w.clone()];
    for &s in &script.steps {
        w = apply_move(&w, s).unwrap();
        out.push(w.clone());
    }
    out
}

// criteria

fn criterion_1(o: &mut Outcome) -> String {
    let start = Instant::now();
    let report = verify_theorem_equivalence(40);
    o.check(report.counterexamples.is_empty(), || format!("library counterexamples: {:?}", report.counterexamples));
    let all = knots(40, 40);
    let len = 40 * 40 + 2;
    let seqs: HashMap<Pq, Vec<i64>> = all.iter().map(|&x| (x, semigroup_prefix(x, len))).collect();
    let mut obstructed = BTreeSet::new();
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            let f = nu_from_prefixes(genus(a), genus(b), &seqs[&a], &seqs[&b]);
            let r = nu_from_prefixes(genus(b), genus(a), &seqs[&b], &seqs[&a]);
            if f.max(r) <= 1 {
                obstructed.insert(unordered(a, b));
            }
        }
    }
    let listed: BTreeSet<_> = cobordism_families(40)
        .into_iter()
        .filter(|&(_, _, a, b)| in_range(a, b, 40, 40))
        .map(|(_, _, a, b)| unordered(a, b))
        .collect();
    let pairs = all.len() * (all.len() - 1) / 2;
    o.check(report.pairs_checked == pairs, || format!("library checked {} pairs, expected {pairs}", report.pairs_checked));
    o.check(obstructed == listed, || {
        format!("oracle mismatch: only nu {:?}, only families {:?}", obstructed.difference(&listed).collect::<Vec<_>>(), listed.difference(&obstructed).collect::<Vec<_>>())
    });
    o.within(start, Duration::from_secs(60));
    format!("nu+ <= 1 both ways iff listed family, {pairs} pairs with q <= 40, {} family pairs, {:.1?}", listed.len(), start.elapsed())
}

fn criterion_2(o: &mut Outcome) -> String {
    let start = Instant::now();
    let mut rows = 0;
    for (id, n, a, b) in cobordism_families(20) {
        let (f, r) = (nu(a, b), nu(b, a));
        let expect_min = match id {
            3 | 4 | 7 => 1,
            5 if matches!(n, Some(7 | 8)) => 1,
            6 if [(2, 11), (3, 7), (3, 10), (4, 9)].contains(&a) => 1,
            _ => 0,
        };
        o.check(f.max(r) == 1, || format!("family {id} {n:?}: max nu+ {}", f.max(r)));
        o.check(f.min(r) == expect_min, || format!("family {id} {n:?}: min nu+ {} expected {expect_min}", f.min(r)));
        let lib = (nu_plus_diff(&pair(a, b)) as i64, nu_plus_diff(&pair(b, a)) as i64);
        o.check(lib == (f, r), || format!("family {id} {n:?}: library {lib:?}, oracle {:?}", (f, r)));
        rows += 1;
    }
    o.within(start, Duration::from_secs(5));
    format!("{rows} family rows, max nu+ = 1 and min nu+ as tabulated, {:.1?}", start.elapsed())
}

fn criterion_3(o: &mut Outcome) -> String {
    for (a, b, want) in [((7, 12), (5, 17), 2), ((2, 5), (2, 3), 1), ((2, 3), (2, 5), 0)] {
        let lib = nu_plus_diff(&pair(a, b)) as i64;
        let oracle = nu(a, b);
        o.check(lib == want && oracle == want, || format!("nu+({a:?} # -{b:?}): library {lib}, oracle {oracle}, expected {want}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7061_6972);
    let mut sampled = Vec::new();
    while sampled.len() < 20 {
        let p = rng.gen_range(2..=15u64);
        let q = rng.gen_range(p + 1..=60u64);
        if p.gcd(&q) == 1 {
            sampled.push((p, q));
        }
    }
    for &(p, q) in &sampled {
        let w = BraidWord::torus(k((p, q)));
        let chi = w.strands() as i64 - w.len() as i64;
        let count = (w.len() as i64 - (p as i64 - 1) * q as i64, chi);
        let seifert_genus = (1 - chi) / 2;
        o.check(count.0 == 0 && w.bennequin_euler() == chi, || format!("T({p},{q}): bennequin euler {}", w.bennequin_euler()));
        let formula = ((p - 1) * (q - 1) / 2) as i64;
        let t = tau(k((p, q))) as i64;
        o.check(t == formula && t == seifert_genus, || format!("T({p},{q}): tau {t}, formula {formula}, seifert {seifert_genus}"));
    }
    format!("three nu+ values exact; tau = (p-1)(q-1)/2 = Seifert genus on 20 seeded pairs {sampled:?}")
}

fn criterion_4(o: &mut Outcome) -> String {
    let start = Instant::now();
    let (a, b) = ((5, 17), (7, 12));
    let lib_sig = signature_distance_bound(&pair(a, b));
    let lib_nu = cobordism_lower_bound_nu(&pair(a, b));
    let oracle_sig = mids(&jump_points(&[a, b]))
        .into_iter()
        .map(|x| (sig_count(a, x) - sig_count(b, x)).abs() / 2)
        .max()
        .unwrap();
    let oracle_nu = nu(a, b).max(nu(b, a));
    o.check(lib_sig == 1 && oracle_sig == 1, || format!("signature bound: library {lib_sig}, oracle {oracle_sig}"));
    o.check(lib_nu == 2 && oracle_nu == 2, || format!("nu+ bound: library {lib_nu}, oracle {oracle_nu}"));
    o.within(start, Duration::from_secs(10));
    format!("T(5,17), T(7,12): signature bound {lib_sig} < nu+ bound {lib_nu}")
}

fn criterion_5(o: &mut Outcome) -> String {
    let cases = [((3, 4), (2, 7), (2, 12), (3, 14)), ((3, 5), (2, 9), (2, 15), (3, 18)), ((3, 5), (2, 9), (4, 15), (5, 18))];
    let mut points = 0;
    for (a, b, lo, hi) in cases {
        let (lo, hi) = ((lo.0 as i128, lo.1 as i128), (hi.0 as i128, hi.1 as i128));
        for i in 1..=5i128 {
            // lo + i (hi - lo) / 6
            let x = (lo.0 * hi.1 * (6 - i) + hi.0 * lo.1 * i, 6 * lo.1 * hi.1);
            let lib = half_signature_of_difference(&pair(a, b), param(x));
            let oracle = -(sig_count(a, x) - sig_count(b, x)) / 2;
            o.check(matches!(lib, Ok(1)) && oracle == 1, || format!("{a:?}, {b:?} at {}: library {lib:?}, oracle {oracle}", param(x)));
            points += 1;
        }
    }
    format!("half signature of the difference is 1 at {points} sample points in the three intervals")
}

fn criterion_6(o: &mut Outcome) -> String {
    let start = Instant::now();
    let mut points = 0;
    for (p, q) in knots(10, 10) {
        let kn = k((p, q));
        let f = lattice_step_function(kn);
        let a = seifert_matrix_from_positive_braid(&BraidWord::torus(kn)).unwrap();
        let mut ends = vec![num_rational::Ratio::from_integer(0)];
        ends.extend(f.locations());
        ends.push(num_rational::Ratio::from_integer(1));
        for w in ends.windows(2) {
            let m = (w[0] + w[1]) / 2;
            let t = UnitCircleParam::new(m).unwrap();
            let lattice = f.value(t).unwrap();
            let numeric = hermitian_signature_with_tolerance(&a, t, DEFAULT_TOLERANCE);
            let count = sig_count((p, q), (*m.numer() as i128, *m.denom() as i128));
            o.check(numeric.as_ref().ok() == Some(&lattice) && count == lattice, || {
                format!("T({p},{q}) at {t}: lattice {lattice}, hermitian {numeric:?}, count {count}")
            });
            points += 1;
        }
    }
    o.within(start, Duration::from_secs(30));
    format!("lattice = Hermitian = lattice-point count at {points} midpoints, p < q <= 10, {:.1?}", start.elapsed())
}

fn criterion_7(o: &mut Outcome) -> String {
    let start = Instant::now();
    let dir = corpus::default_dir();
    let expected = [("t57-to-t49", (5, 7), (4, 9)), ("t47-to-t310", (4, 7), (3, 10)), ("t45-to-t37", (4, 5), (3, 7))];
    for (name, from, to) in expected {
        let script = match corpus::load_named(&dir, name) {
            Ok(s) => s,
            Err(e) => {
                o.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        let cert = verify_script(&script);
        o.check(cert.as_ref().is_ok_and(|c| c.saddle_count == 2 && c.genus == Some(1.into())), || format!("{name}: {cert:?}"));
        let words = replay(&script);
        let (first, last) = (&words[0], words.last().unwrap());
        let saddles = script.steps.iter().filter(|s| s.is_saddle()).count();
        o.check(saddles == 2 && last.letters() == script.declared_end.as_slice(), || format!("{name}: replay ends at {last}"));
        for (w, knot) in [(first, from), (last, to)] {
            o.check(is_torus_closure_certificate(w, k(knot)), || format!("{name}: {w} is not certified as {knot:?}"));
            o.check(components(w.strands(), w.letters()) == 1 && word_genus(w.strands(), w.letters()) == genus(knot), || {
                format!("{name}: {w} has the wrong component count or genus")
            });
        }
        if name == "t57-to-t49" {
            let abc9: Vec<usize> = (0..9).flat_map(|_| [1, 2, 3]).collect();
            o.check(last.strands() == 4 && last.letters() == abc9.as_slice(), || format!("{name}: final word {last}"));
        }
    }
    o.within(start, Duration::from_secs(5));
    format!("three corpus scripts replay with 2 saddles, genus 1, certified ends; T(5,7) script ends at (abc)^9, {:.1?}", start.elapsed())
}

fn criterion_8(o: &mut Outcome) -> String {
    let bounds: SearchBounds = regeneration_bounds();
    let mut notes = Vec::new();
    for (to, deletions, insertions) in [((2, 5), 2, 0), ((2, 7), 1, 1)] {
        let start = Instant::now();
        let found = search_script(&BraidWord::torus(k((3, 4))), k(to), 2, &bounds);
        let Ok(Some(script)) = found else {
            o.check(false, || format!("T(3,4) -> {to:?}: {found:?}"));
            continue;
        };
        let cert = verify_script(&script);
        o.check(
            cert.as_ref().is_ok_and(|c| {
                c.genus == Some(1.into()) && (c.deletions, c.insertions) == (deletions, insertions) && c.to_knot == Some(k(to))
            }),
            || format!("T(3,4) -> {to:?}: {cert:?}"),
        );
        let words = replay(&script);
        let last = words.last().unwrap();
        o.check(is_torus_closure_certificate(last, k(to)) && word_genus(last.strands(), last.letters()) == genus(to), || {
            format!("T(3,4) -> {to:?}: end {last} not certified")
        });
        if insertions == 1 {
            let first_saddle = script.steps.iter().position(|s| s.is_saddle()).unwrap();
            let mid = &words[first_saddle + 1];
            o.check(components(mid.strands(), mid.letters()) == 2, || format!("intermediate {mid} is not a 2-component link"));
        }
        o.within(start, Duration::from_secs(60));
        notes.push(format!("T(3,4)->T({},{}) in {} steps, {:.1?}", to.0, to.1, script.steps.len(), start.elapsed()));
    }
    format!("{} (bounds {})", notes.join("; "), serde_json::to_string(&bounds).unwrap())
}

type Edges = BTreeSet<(Pq, Pq)>;

fn graph_edges(v: &Value) -> (Edges, Edges) {
    let pq = |x: &Value| (x["p"].as_u64().unwrap(), x["q"].as_u64().unwrap());
    let (mut solid, mut open) = (BTreeSet::new(), BTreeSet::new());
    for e in v["edges"].as_array().unwrap() {
        let edge = (pq(&e["source"]), pq(&e["target"]));
        if e["status"] == "open" { open.insert(edge) } else { solid.insert(edge) };
    }
    (solid, open)
}

fn criterion_9(o: &mut Outcome) -> String {
    let (max_p, max_q) = (11, 24);
    let cob: BTreeSet<_> = cobordism_families(24)
        .into_iter()
        .filter(|&(id, _, a, b)| id <= 6 && in_range(a, b, max_p, max_q))
        .map(|(_, _, a, b)| unordered(a, b))
        .collect();
    let mut gordian = BTreeSet::new();
    let mut lagrangian = BTreeSet::new();
    for n in 1..=24 {
        gordian.insert(((2, 2 * n + 1), (2, 2 * n + 3)));
        gordian.insert(((3, 3 * n + 1), (3, 3 * n + 2)));
        lagrangian.insert(((2, 2 * n + 1), (2, 2 * n + 3)));
        // Λ(3,3n+2), the coprime reading of the second Lagrangian family
        lagrangian.insert(((3, 3 * n + 1), (3, 3 * n + 2)));
        lagrangian.insert(((3 * n + 1, 9 * n + 6), (3 * n + 2, 9 * n + 3)));
        lagrangian.insert(((2 * n + 1, 4 * n + 6), (2 * n + 3, 4 * n + 2)));
    }
    gordian.extend([((2, 5), (3, 4)), ((2, 7), (3, 5))]);
    for n in [4, 5, 7, 8] {
        lagrangian.insert(((2, 2 * n - 3), (3, n)));
    }
    lagrangian.insert(((2, 11), (4, 5)));
    let keep = |s: BTreeSet<(Pq, Pq)>| -> BTreeSet<_> { s.into_iter().filter(|&(a, b)| in_range(a, b, max_p, max_q)).collect() };
    let open = BTreeSet::from([((3, 14), (5, 8))]);
    let expected = [
        (Relation::Cobordism, cob, open.clone()),
        (Relation::Gordian, keep(gordian), BTreeSet::new()),
        (Relation::Lagrangian, keep(lagrangian), open),
    ];
    let mut counts = Vec::new();
    for (relation, solid, dotted) in expected {
        let graph = build_graph(relation, max_p, max_q, false);
        let json: Value = serde_json::from_str(&graph.render(GraphFormat::Json)).unwrap();
        let (got_solid, got_open) = graph_edges(&json);
        let norm = |s: BTreeSet<(Pq, Pq)>| -> BTreeSet<_> {
            if relation.is_directed() { s } else { s.into_iter().map(|(a, b)| unordered(a, b)).collect() }
        };
        let (got_solid, got_open) = (norm(got_solid), norm(got_open));
        o.check(got_solid == solid, || {
            format!("{relation}: extra {:?}, missing {:?}", got_solid.difference(&solid).collect::<Vec<_>>(), solid.difference(&got_solid).collect::<Vec<_>>())
        });
        o.check(got_open == dotted, || format!("{relation}: open edges {got_open:?}"));
        for format in [GraphFormat::Dot, GraphFormat::Json] {
            let name = format!("{relation}-p{max_p}-q{max_q}.{}", if format == GraphFormat::Dot { "dot" } else { "json" });
            let golden = std::fs::read_to_string(default_golden_dir().join(&name)).unwrap_or_default();
            let first = graph.render(format);
            let again = build_graph(relation, max_p, max_q, false).render(format);
            o.check(first == golden && first == again, || format!("{name} differs from golden or between runs"));
        }
        counts.push(format!("{relation} {}+{}", solid.len(), dotted.len()));
    }
    format!("edge sets equal the family schemas in p <= 11, q <= 24 ({}), byte-identical to goldens", counts.join(", "))
}

fn criterion_10(o: &mut Outcome) -> String {
    let sporadic = [((2, 7), (3, 4)), ((2, 9), (3, 5)), ((2, 11), (4, 5)), ((3, 7), (4, 5)), ((3, 10), (4, 7)), ((4, 9), (5, 7))];
    let equal: Vec<_> = sporadic.into_iter().filter(|&(a, b)| genus(a) == genus(b)).collect();
    o.check(equal.len() == 5, || format!("{} equal-genus sporadic pairs", equal.len()));
    let tb = |(p, q): Pq| (p * q) as i64 - p as i64 - q as i64;
    for (a, b) in equal {
        for (x, y) in [(a, b), (b, a)] {
            let r = lagrangian_genus_one(&pair(x, y));
            let has_tb = r.as_ref().is_ok_and(|r| {
                r.evidence.iter().any(|e| matches!(e, Evidence::ThurstonBennequin { tb_from, tb_to } if *tb_from == tb(x) && *tb_to == tb(y)))
            });
            o.check(tb(y) - tb(x) != 2, || format!("{x:?} -> {y:?}: tb difference allows genus one"));
            o.check(r.as_ref().is_ok_and(|r| r.verdict == Verdict::AtLeastTwo && r.certificate.is_none()) && has_tb, || {
                format!("{x:?} -> {y:?}: {r:?}")
            });
        }
    }
    let forward = lagrangian_genus_one(&pair((2, 11), (4, 5)));
    o.check(tb((4, 5)) - tb((2, 11)) == 2, || "tb difference of (2,11) -> (4,5) is not 2".into());
    o.check(
        forward.as_ref().is_ok_and(|r| {
            r.verdict == Verdict::DistanceOne
                && r.certificate.as_ref().is_some_and(|c| {
                    c.lagrangian_decomposable
                        && c.genus == Some(1.into())
                        && is_torus_closure_certificate(&c.start, k((2, 11)))
                        && is_torus_closure_certificate(&c.end, k((4, 5)))
                        && c.tb_end - c.tb_start == 2
                })
        }),
        || format!("(2,11) -> (4,5): {forward:?}"),
    );
    let backward = lagrangian_genus_one(&pair((4, 5), (2, 11)));
    o.check(backward.as_ref().is_ok_and(|r| r.verdict == Verdict::AtLeastTwo && r.certificate.is_none()), || {
        format!("(4,5) -> (2,11): {backward:?}")
    });
    "five equal-genus sporadic pairs obstructed both ways by tb; (2,11) -> (4,5) exists with a decomposable script, reverse does not".into()
}

type Criterion = fn(&mut Outcome) -> String;

fn main() {
    let criteria: [(u8, Criterion); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let mut o = Outcome::new();
        let summary = run(&mut o);
        if o.failures.is_empty() {
            println!("PASS criterion {n}: {summary}");
        } else {
            failed += 1;
            println!("FAIL criterion {n}: {summary}");
            for f in &o.failures {
                println!("    {f}");
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
