//! Perfect matchings, 2-factors and the statistics built on them.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::cycle::{self, Cycle};
use crate::graph::CubicGraph;

/// A 2-regular subgraph, kept both as an edge set and as its cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoRegularSubgraph {
    edges: Bits,
    components: Vec<Cycle>,
}

impl TwoRegularSubgraph {
    /// `None` unless every touched vertex has degree exactly 2.
    pub fn from_edges(g: &CubicGraph, edges: Bits) -> Option<TwoRegularSubgraph> {
        let components = cycle::decompose_two_regular(g, edges)?;
        Some(TwoRegularSubgraph { edges, components })
    }

    pub fn from_cycles(g: &CubicGraph, cycles: &[Cycle]) -> Option<TwoRegularSubgraph> {
        let mut edges = Bits::EMPTY;
        let mut verts = Bits::EMPTY;
        for c in cycles {
            if !verts.intersection(c.vertex_set()).is_empty() {
                return None;
            }
            verts = verts.union(c.vertex_set());
            edges = edges.union(c.edge_set());
        }
        TwoRegularSubgraph::from_edges(g, edges)
    }

    pub fn edge_set(&self) -> Bits {
        self.edges
    }

    pub fn components(&self) -> &[Cycle] {
        &self.components
    }

    pub fn vertex_set(&self) -> Bits {
        self.components.iter().fold(Bits::EMPTY, |acc, c| acc.union(c.vertex_set()))
    }

    pub fn is_spanning(&self, g: &CubicGraph) -> bool {
        self.components.iter().map(Cycle::len).sum::<usize>() == g.order()
    }

    pub fn odd_components(&self) -> usize {
        self.components.iter().filter(|c| c.len() % 2 == 1).count()
    }
}

/// Enumerates the perfect matchings of the subgraph induced by `alive`
/// that avoid `forbidden` edges, branching on the lowest uncovered vertex
/// and its incident edges in ascending order. `f` returns `false` to stop;
/// the return value is `false` when stopped early.
pub(crate) fn for_each_matching_on(
    g: &CubicGraph,
    alive: Bits,
    forbidden: Bits,
    mut f: impl FnMut(Bits) -> bool,
) -> bool {
    fn rec(
        g: &CubicGraph,
        open: Bits,
        forbidden: Bits,
        matching: Bits,
        f: &mut impl FnMut(Bits) -> bool,
    ) -> bool {
        let Some(v) = open.first() else {
            return f(matching);
        };
        let mut options = [usize::MAX; 3];
        let nb = g.neighbors(v);
        let inc = g.incident(v);
        for i in 0..3 {
            if open.contains(nb[i]) && !forbidden.contains(inc[i]) {
                options[i] = inc[i];
            }
        }
        options.sort_unstable();
        for &e in &options {
            if e == usize::MAX {
                break;
            }
            let w = g.other_end(e, v);
            let mut rest = open;
            rest.remove(v);
            rest.remove(w);
            // Every neighbour left behind must keep an available partner.
            let stranded = g.neighbors(v).iter().chain(g.neighbors(w).iter()).any(|&u| {
                rest.contains(u)
                    && !(0..3).any(|j| {
                        rest.contains(g.neighbors(u)[j]) && !forbidden.contains(g.incident(u)[j])
                    })
            });
            if stranded {
                continue;
            }
            let mut m = matching;
            m.insert(e);
            if !rec(g, rest, forbidden, m, f) {
                return false;
            }
        }
        true
    }
    if alive.len() % 2 == 1 {
        return true;
    }
    rec(g, alive, forbidden, Bits::EMPTY, &mut f)
}

pub fn for_each_perfect_matching(g: &CubicGraph, f: impl FnMut(Bits) -> bool) -> bool {
    for_each_matching_on(g, Bits::full(g.order()), Bits::EMPTY, f)
}

pub fn perfect_matchings(g: &CubicGraph) -> Vec<Bits> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, |m| {
        out.push(m);
        true
    });
    out
}

/// 2-factors as complements of perfect matchings, in matching order.
pub fn two_factors(g: &CubicGraph) -> Vec<TwoRegularSubgraph> {
    let all = Bits::full(g.size());
    perfect_matchings(g)
        .into_iter()
        .map(|m| TwoRegularSubgraph::from_edges(g, all.difference(m)).expect("2-factor"))
        .collect()
}

/// Lengths of the cycles of a 2-regular edge set.
pub(crate) fn cycle_lengths(g: &CubicGraph, edges: Bits, out: &mut Vec<usize>) {
    out.clear();
    let mut seen = Bits::EMPTY;
    for e in edges.iter() {
        let (start, _) = g.edge(e);
        if seen.contains(start) {
            continue;
        }
        let mut len = 0;
        let mut prev = usize::MAX;
        let mut v = start;
        loop {
            seen.insert(v);
            len += 1;
            let inc = g.incident(v);
            let next = (0..3)
                .map(|i| inc[i])
                .find(|&f| edges.contains(f) && g.other_end(f, v) != prev)
                .unwrap();
            prev = v;
            v = g.other_end(next, v);
            if v == start {
                break;
            }
        }
        out.push(len);
    }
}

/// Minimum number of odd cycles over all 2-factors, or `None` when the
/// graph has no perfect matching.
pub fn oddness(g: &CubicGraph) -> Option<usize> {
    let all = Bits::full(g.size());
    let mut best: Option<usize> = None;
    let mut lens = Vec::new();
    for_each_perfect_matching(g, |m| {
        cycle_lengths(g, all.difference(m), &mut lens);
        let odd = lens.iter().filter(|&&l| l % 2 == 1).count();
        if best.is_none_or(|b| odd < b) {
            best = Some(odd);
        }
        odd != 0
    });
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoFactorExtremes {
    pub max_odd_components: usize,
    pub max_components: usize,
    pub min_components: usize,
}

pub fn two_factor_extremes(g: &CubicGraph) -> Option<TwoFactorExtremes> {
    let all = Bits::full(g.size());
    let mut out: Option<TwoFactorExtremes> = None;
    let mut lens = Vec::new();
    for_each_perfect_matching(g, |m| {
        cycle_lengths(g, all.difference(m), &mut lens);
        let odd = lens.iter().filter(|&&l| l % 2 == 1).count();
        let k = lens.len();
        let x = out.get_or_insert(TwoFactorExtremes {
            max_odd_components: odd,
            max_components: k,
            min_components: k,
        });
        x.max_odd_components = x.max_odd_components.max(odd);
        x.max_components = x.max_components.max(k);
        x.min_components = x.min_components.min(k);
        true
    });
    out
}

/// Whether every 2-factor consists of odd cycles only. `false` when the
/// graph has no 2-factor.
pub fn all_two_factors_odd(g: &CubicGraph) -> bool {
    let all = Bits::full(g.size());
    let mut lens = Vec::new();
    let mut any = false;
    let complete = for_each_perfect_matching(g, |m| {
        any = true;
        cycle_lengths(g, all.difference(m), &mut lens);
        lens.iter().all(|&l| l % 2 == 1)
    });
    any && complete
}

/// 2-factors with exactly two components, both induced cycles.
pub fn permutation_structures(g: &CubicGraph) -> Vec<TwoRegularSubgraph> {
    let all = Bits::full(g.size());
    let mut out = Vec::new();
    let mut lens = Vec::new();
    for_each_perfect_matching(g, |m| {
        let f = all.difference(m);
        cycle_lengths(g, f, &mut lens);
        if lens.len() == 2 {
            let tf = TwoRegularSubgraph::from_edges(g, f).expect("2-factor");
            // A chord would be a matching edge with both ends on one cycle.
            let induced = tf.components.iter().all(|c| g.induced_edges(c.vertex_set()) == c.edge_set());
            if induced {
                out.push(tf);
            }
        }
        true
    });
    out
}

/// Cycles `C` for which deleting `E(C) ∩ E(F)` leaves a 2-connected graph.
/// Every cycle of the graph is examined.
pub fn removable_cycles(g: &CubicGraph, f: &TwoRegularSubgraph) -> Vec<Cycle> {
    let mut out = Vec::new();
    cycle::for_each_cycle(g, 3, g.order(), |c| {
        let cut = c.edge_set().intersection(f.edge_set());
        if is_biconnected_without(g, cut) {
            out.push(c.clone());
        }
        true
    });
    out
}

/// Vertex 2-connectivity of the graph with the edges in `removed` deleted.
pub(crate) fn is_biconnected_without(g: &CubicGraph, removed: Bits) -> bool {
    let n = g.order();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut time = 1;
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = time;
    low[0] = time;
    time += 1;
    let mut root_children = 0;
    while let Some(&mut (u, pe, ref mut i)) = stack.last_mut() {
        if *i < 3 {
            let e = g.incident(u)[*i];
            let w = g.neighbors(u)[*i];
            *i += 1;
            if removed.contains(e) || e == pe {
                continue;
            }
            if disc[w] == 0 {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if u == 0 {
                    root_children += 1;
                }
                stack.push((w, e, 0));
            } else if disc[w] < low[u] {
                low[u] = disc[w];
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                if low[u] < low[p] {
                    low[p] = low[u];
                }
                if p != 0 && low[u] >= disc[p] {
                    return false;
                }
            }
        }
    }
    disc.iter().all(|&d| d != 0) && root_children <= 1
}
