//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the page never has to catch exceptions.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

use torusgenus::classify::{build_graph, cobordism_distance_one, gordian_distance_one, lagrangian_genus_one, Relation};
use torusgenus::invariants::nu_plus_report;
use torusgenus::signature::{lattice_step_function, midpoints};
use torusgenus::{KnotPair, TorusKnot};

/// Largest range the page may request for a graph.
pub const MAX_GRAPH_Q: u64 = 40;

fn respond<T: Serialize>(r: Result<T, String>) -> String {
    match r.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string())) {
        Ok(text) => text,
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn knot(p: u32, q: u32) -> Result<TorusKnot, String> {
    TorusKnot::new(p.into(), q.into()).map_err(|e| e.to_string())
}

/// Report for the pair under `relation` ("cobordism", "gordian" or
/// "lagrangian"), plus both values of nu+.
#[wasm_bindgen]
pub fn classify_pair(p: u32, q: u32, p2: u32, q2: u32, relation: &str) -> String {
    respond((|| {
        let pair = KnotPair::new(knot(p, q)?, knot(p2, q2)?);
        let relation: Relation = relation.parse()?;
        let report = match relation {
            Relation::Cobordism => cobordism_distance_one(&pair),
            Relation::Gordian => gordian_distance_one(&pair),
            Relation::Lagrangian => lagrangian_genus_one(&pair),
        }
        .map_err(|e| e.to_string())?;
        Ok(json!({ "report": report, "nuPlus": nu_plus_report(&pair) }))
    })())
}

/// Signature step function of T(p,q): jumps, plus the value on each
/// interval between consecutive jumps (with 0 and 1 as outer ends).
#[wasm_bindgen]
pub fn signature_curve(p: u32, q: u32) -> String {
    respond((|| {
        let knot = knot(p, q)?;
        let f = lattice_step_function(knot);
        let mut ends = vec![0.into()];
        ends.extend(f.locations());
        ends.push(1.into());
        let mut pieces = Vec::new();
        for (w, pair) in midpoints(ends.iter().copied()).into_iter().zip(ends.windows(2)) {
            let value = f.value(w).map_err(|e| e.to_string())?;
            pieces.push(json!({ "from": pair[0].to_string(), "to": pair[1].to_string(), "value": value }));
        }
        Ok(json!({ "knot": knot, "jumps": f.jumps, "pieces": pieces }))
    })())
}

/// Edge list of the distance-one graph for knots with p <= max_p, q <= max_q.
#[wasm_bindgen]
pub fn graph(relation: &str, max_p: u32, max_q: u32) -> String {
    respond((|| {
        let relation: Relation = relation.parse()?;
        let (max_p, max_q) = (u64::from(max_p), u64::from(max_q).min(MAX_GRAPH_Q));
        if !(2..=max_q).contains(&max_p) {
            return Err(format!("need 2 <= maxP <= maxQ, got {max_p} and {max_q}"));
        }
        Ok(build_graph(relation, max_p, max_q, false))
    })())
}
