//! JSON forms of witnesses. Cycles are vertex sequences in the graph's own
//! 0-based labelling; colours are 1-based; edges are `[u, v]` pairs.

use serde_json::{json, Value};
use snarkcore::cdc::CycleDoubleCover;
use snarkcore::cycle::Cycle;
use snarkcore::factor::TwoRegularSubgraph;
use snarkcore::{Bits, CubicGraph};

pub fn cycle(c: &Cycle) -> Value {
    json!(c.vertex_sequence())
}

pub fn cycles(cs: &[Cycle]) -> Value {
    Value::Array(cs.iter().map(cycle).collect())
}

pub fn subgraph(d: &TwoRegularSubgraph) -> Value {
    cycles(d.components())
}

pub fn cdc(c: &CycleDoubleCover) -> Value {
    let mut v = json!({ "cycles": cycles(&c.cycles) });
    if let Some(col) = &c.coloring {
        v["colours"] = json!(col);
    }
    if let Some(o) = &c.orientation {
        v["forward"] = json!(o);
    }
    v
}

pub fn edges(g: &CubicGraph, set: Bits) -> Value {
    Value::Array(set.iter().map(|e| json!(g.edge(e))).collect())
}

pub fn edge_colours(g: &CubicGraph, colours: &[u8]) -> Value {
    Value::Array(g.edge_list().zip(colours).map(|((a, b), c)| json!([a, b, c])).collect())
}

/// Panics when a search returned a witness that fails its definition-level
/// check; such a result would be a bug in the search.
pub fn ensure(valid: bool, what: &str) {
    assert!(valid, "{what} witness failed re-validation");
}
