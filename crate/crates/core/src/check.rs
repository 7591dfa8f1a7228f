//! Definition-level validators for witnesses. They work from vertex
//! sequences and edge lists only and share no code with the searches that
//! produce the witnesses.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::cycle::Cycle;
use crate::graph::CubicGraph;

/// Whether `seq` lists distinct vertices, each adjacent to the next, closing
/// up, with at least three vertices.
pub fn is_cycle_sequence(g: &CubicGraph, seq: &[usize]) -> bool {
    let k = seq.len();
    if k < 3 {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in seq {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..k).all(|i| g.neighbors(seq[i]).contains(&seq[(i + 1) % k]))
}

fn edges_of(g: &CubicGraph, seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    (0..k).filter_map(|i| g.edge_index(seq[i], seq[(i + 1) % k])).collect()
}

/// Per-edge number of covering cycles, or `None` if some member is not a
/// cycle of `g`.
fn coverage(g: &CubicGraph, cycles: &[Cycle]) -> Option<Vec<usize>> {
    let mut cover = vec![0; g.size()];
    for c in cycles {
        let seq = c.vertex_sequence();
        if !is_cycle_sequence(g, &seq) {
            return None;
        }
        for e in edges_of(g, &seq) {
            cover[e] += 1;
        }
    }
    Some(cover)
}

pub fn is_proper_edge_coloring(g: &CubicGraph, colors: &[u8], palette: u8) -> bool {
    if colors.len() != g.size() || colors.iter().any(|&c| c == 0 || c > palette) {
        return false;
    }
    (0..g.order()).all(|v| {
        let [a, b, c] = g.incident(v).map(|e| colors[e]);
        a != b && a != c && b != c
    })
}

pub fn is_cdc(g: &CubicGraph, cycles: &[Cycle]) -> bool {
    coverage(g, cycles).is_some_and(|c| c.iter().all(|&k| k == 2))
}

/// A double cover whose cycles carry colours in `1..=k` with no two cycles
/// sharing an edge alike.
pub fn is_k_cdc(g: &CubicGraph, cycles: &[Cycle], colours: &[u8], k: u8) -> bool {
    if !is_cdc(g, cycles) || colours.len() != cycles.len() || colours.iter().any(|&c| c == 0 || c > k) {
        return false;
    }
    let mut seen: Vec<Vec<u8>> = vec![Vec::new(); g.size()];
    for (c, &col) in cycles.iter().zip(colours) {
        for e in edges_of(g, &c.vertex_sequence()) {
            if seen[e].contains(&col) {
                return false;
            }
            seen[e].push(col);
        }
    }
    true
}

/// A double cover in which, with cycle `i` traversed along its sequence
/// when `forward[i]`, every edge is traversed once in each direction.
pub fn is_oriented_cdc(g: &CubicGraph, cycles: &[Cycle], forward: &[bool]) -> bool {
    if !is_cdc(g, cycles) || forward.len() != cycles.len() {
        return false;
    }
    let mut ups = vec![0u8; g.size()];
    for (c, &fwd) in cycles.iter().zip(forward) {
        let mut seq = c.vertex_sequence();
        if !fwd {
            seq.reverse();
        }
        let k = seq.len();
        for i in 0..k {
            let (a, b) = (seq[i], seq[(i + 1) % k]);
            if a < b {
                ups[g.edge_index(a, b).unwrap()] += 1;
            }
        }
    }
    ups.iter().all(|&u| u == 1)
}

/// Cycles covering every edge at least once.
pub fn is_cycle_cover(g: &CubicGraph, cycles: &[Cycle]) -> bool {
    coverage(g, cycles).is_some_and(|c| c.iter().all(|&k| k >= 1))
}

/// Cycles covering edge `e` exactly `weights[e]` times.
pub fn is_weighted_cover(g: &CubicGraph, cycles: &[Cycle], weights: &[u8]) -> bool {
    coverage(g, cycles).is_some_and(|c| c.iter().zip(weights).all(|(&k, &w)| k == w as usize))
}

pub fn is_perfect_matching(g: &CubicGraph, edges: Bits) -> bool {
    let mut hit = vec![0u8; g.order()];
    for e in edges.iter() {
        if e >= g.size() {
            return false;
        }
        let (a, b) = g.edge(e);
        hit[a] += 1;
        hit[b] += 1;
    }
    hit.iter().all(|&h| h == 1)
}

/// `count` perfect matchings covering each edge between `min` and `max`
/// times.
pub fn is_matching_cover(g: &CubicGraph, matchings: &[Bits], count: usize, min: usize, max: usize) -> bool {
    if matchings.len() != count || !matchings.iter().all(|&m| is_perfect_matching(g, m)) {
        return false;
    }
    (0..g.size()).all(|e| {
        let k = matchings.iter().filter(|m| m.contains(e)).count();
        (min..=max).contains(&k)
    })
}

/// A cycle meeting every edge and containing the `required` edges.
pub fn is_dominating_cycle(g: &CubicGraph, c: &Cycle, required: &[usize]) -> bool {
    let seq = c.vertex_sequence();
    if !is_cycle_sequence(g, &seq) {
        return false;
    }
    let on: Vec<bool> = (0..g.order()).map(|v| seq.contains(&v)).collect();
    let edges = edges_of(g, &seq);
    g.edge_list().all(|(a, b)| on[a] || on[b]) && required.iter().all(|e| edges.contains(e))
}

/// A cycle through every vertex except `missing`.
pub fn is_cycle_missing(g: &CubicGraph, c: &Cycle, missing: Option<usize>) -> bool {
    let seq = c.vertex_sequence();
    let expect = g.order() - missing.is_some() as usize;
    is_cycle_sequence(g, &seq) && seq.len() == expect && missing.is_none_or(|v| !seq.contains(&v))
}

/// Vertex and edge colours in `1..=k` where adjacent or incident elements
/// differ.
pub fn is_total_coloring(g: &CubicGraph, vertex: &[u8], edge: &[u8], k: u8) -> bool {
    if vertex.len() != g.order() || edge.len() != g.size() {
        return false;
    }
    if vertex.iter().chain(edge).any(|&c| c == 0 || c > k) || !is_proper_edge_coloring(g, edge, k) {
        return false;
    }
    g.edge_list().enumerate().all(|(e, (a, b))| {
        vertex[a] != vertex[b] && edge[e] != vertex[a] && edge[e] != vertex[b]
    })
}

/// A proper 5-edge-colouring where each edge sees 3 (poor) or 5 (rich)
/// colours on itself and its four neighbouring edges; with `all_rich`
/// every edge must be rich.
pub fn is_normal_coloring(g: &CubicGraph, colors: &[u8], all_rich: bool) -> bool {
    if !is_proper_edge_coloring(g, colors, 5) {
        return false;
    }
    g.edge_list().all(|(a, b)| {
        let mut seen = [false; 6];
        for e in g.incident(a).into_iter().chain(g.incident(b)) {
            seen[colors[e] as usize] = true;
        }
        let k = seen.iter().filter(|&&s| s).count();
        k == 5 || (!all_rich && k == 3)
    })
}
