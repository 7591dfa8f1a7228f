//! Isomorph-free generation of cubic graphs by edge insertion.
//!
//! Cyclically 4-edge-connected graphs are produced by canonical
//! augmentation from `K4` and the cube: a child is kept only when its new
//! edge lies in the automorphism orbit of a canonically chosen reducible
//! edge, so every graph is produced exactly once and nothing is stored.
//! Weak snarks and snarks are found one level later by inserting edges
//! between disjoint edge pairs of every cyclically 4-edge-connected parent,
//! where colouring look-ahead discards pairs that must give colourable
//! children. 3-connected graphs are generated level by level with explicit
//! deduplication.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::canon::{canonical_form_adj, CanonicalCode};
use crate::color::{three_edge_coloring, three_edge_coloring_with, EdgeColoring};
use crate::graph::{girth_of, is_cyclically_4_connected, Adjacency, CubicGraph, MAX_ORDER};

/// Two edges of a graph, by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgePair {
    pub e1: usize,
    pub e2: usize,
}

impl EdgePair {
    pub fn new(e1: usize, e2: usize) -> EdgePair {
        if e1 <= e2 {
            EdgePair { e1, e2 }
        } else {
            EdgePair { e1: e2, e2: e1 }
        }
    }

    pub fn is_disjoint(self, g: &CubicGraph) -> bool {
        self.e1 != self.e2 && !g.edges_adjacent(self.e1, self.e2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    /// 3-connected cubic graphs.
    Cubic3c,
    /// Cyclically 4-edge-connected cubic graphs.
    Cyc4,
    /// Uncolourable, cyclically 4-edge-connected, girth at least 4.
    WeakSnark,
    /// Weak snarks with girth at least 5.
    Snark,
    /// Snarks that are cyclically 5-edge-connected.
    Snark5,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Cubic3c => "cubic3c",
            GraphClass::Cyc4 => "cyc4",
            GraphClass::WeakSnark => "weaksnark",
            GraphClass::Snark => "snark",
            GraphClass::Snark5 => "snark5",
        }
    }

    pub fn from_name(s: &str) -> Option<GraphClass> {
        Some(match s {
            "cubic3c" => GraphClass::Cubic3c,
            "cyc4" => GraphClass::Cyc4,
            "weaksnark" => GraphClass::WeakSnark,
            "snark" => GraphClass::Snark,
            "snark5" => GraphClass::Snark5,
            _ => return None,
        })
    }

    fn is_uncolourable(self) -> bool {
        matches!(self, GraphClass::WeakSnark | GraphClass::Snark | GraphClass::Snark5)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationSpec {
    pub order: usize,
    pub class: GraphClass,
    pub shard: Shard,
    /// Abort after expanding this many graphs.
    pub node_budget: Option<u64>,
}

impl GenerationSpec {
    pub fn new(order: usize, class: GraphClass) -> Self {
        GenerationSpec { order, class, shard: Shard::WHOLE, node_budget: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    OddOrder(usize),
    OrderTooSmall(usize),
    OrderTooLarge(usize),
    BadShard(Shard),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::OddOrder(n) => write!(f, "order {n} is odd"),
            SpecError::OrderTooSmall(n) => write!(f, "order {n} is below 4"),
            SpecError::OrderTooLarge(n) => write!(f, "order {n} is above {MAX_ORDER}"),
            SpecError::BadShard(s) => write!(f, "shard {} of {} is invalid", s.index, s.count),
        }
    }
}

impl core::error::Error for SpecError {}

/// Counters describing a run. Pair counts refer to the final level.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenerationStats {
    /// Graphs expanded, by order.
    pub expanded: BTreeMap<usize, u64>,
    pub pairs_considered: u64,
    pub pruned_same_cycle: u64,
    pub pruned_square: u64,
    pub pruned_girth: u64,
    pub colour_tests: u64,
    pub complete: bool,
}

impl GenerationStats {
    /// Fraction of final-level pairs discarded by the colouring look-ahead.
    pub fn lookahead_fraction(&self) -> f64 {
        if self.pairs_considered == 0 {
            return 0.0;
        }
        (self.pruned_same_cycle + self.pruned_square) as f64 / self.pairs_considered as f64
    }
}

/// Subdivides both edges and joins the two new vertices (numbered `n` and
/// `n + 1`).
pub fn insert_edge(g: &CubicGraph, pair: EdgePair) -> Option<CubicGraph> {
    if pair.e1 == pair.e2 || pair.e2 >= g.size() || g.order() + 2 > MAX_ORDER {
        return None;
    }
    let (a, b) = g.edge(pair.e1);
    let (c, d) = g.edge(pair.e2);
    Some(CubicGraph::from_adjacency(&insert_adj(g.adjacency(), [a as u8, b as u8], [c as u8, d as u8])))
}

fn insert_adj(adj: &Adjacency, [a, b]: [u8; 2], [c, d]: [u8; 2]) -> Vec<[u8; 3]> {
    let n = adj.len() as u8;
    let (x, y) = (n, n + 1);
    let mut out = Vec::with_capacity(adj.len() + 2);
    out.extend_from_slice(adj);
    let swap = |row: &mut [u8; 3], from: u8, to: u8| {
        let i = row.iter().position(|&w| w == from).unwrap();
        row[i] = to;
    };
    swap(&mut out[a as usize], b, x);
    swap(&mut out[b as usize], a, x);
    swap(&mut out[c as usize], d, y);
    swap(&mut out[d as usize], c, y);
    out.push([a, b, y]);
    out.push([c, d, x]);
    out
}

/// `G * e`: deletes `e` and suppresses both endpoints. `None` when the
/// result would not be a simple cubic graph on at least 4 vertices.
pub fn reduce_edge(g: &CubicGraph, e: usize) -> Option<CubicGraph> {
    let (u, v) = g.edge(e);
    reduce_adj(g.adjacency(), u, v).map(|adj| CubicGraph::from_adjacency(&adj))
}

fn reduce_adj(adj: &Adjacency, u: usize, v: usize) -> Option<Vec<[u8; 3]>> {
    let n = adj.len();
    if n < 6 {
        return None;
    }
    let others = |p: usize, q: usize| {
        let mut o = [0u8; 2];
        let mut k = 0;
        for &w in &adj[p] {
            if w as usize != q {
                o[k] = w;
                k += 1;
            }
        }
        o
    };
    let [a, b] = others(u, v);
    let [c, d] = others(v, u);
    let adjacent = |p: u8, q: u8| adj[p as usize].contains(&q);
    if adjacent(a, b) || adjacent(c, d) || (a.min(b), a.max(b)) == (c.min(d), c.max(d)) {
        return None;
    }
    let mut rows: Vec<[u8; 3]> = adj.to_vec();
    let swap = |row: &mut [u8; 3], from: u8, to: u8| {
        let i = row.iter().position(|&w| w == from).unwrap();
        row[i] = to;
    };
    swap(&mut rows[a as usize], u as u8, b);
    swap(&mut rows[b as usize], u as u8, a);
    swap(&mut rows[c as usize], v as u8, d);
    swap(&mut rows[d as usize], v as u8, c);
    let shift = |w: u8| w - (w as usize > u) as u8 - (w as usize > v) as u8;
    let mut out = Vec::with_capacity(n - 2);
    for (w, row) in rows.iter().enumerate() {
        if w != u && w != v {
            out.push([shift(row[0]), shift(row[1]), shift(row[2])]);
        }
    }
    Some(out)
}

/// Up to three proper 3-edge-colourings: a base colouring, the colouring
/// obtained by swapping the two colours along one cycle of a disconnected
/// induced 2-factor, and a colouring forced to differ on an edge away from
/// vertex 0. Empty exactly when the graph is uncolourable.
pub fn derive_colorings(g: &CubicGraph) -> Vec<EdgeColoring> {
    let Some(base) = three_edge_coloring(g) else {
        return Vec::new();
    };
    let mut out = vec![base.clone()];
    'swap: for c in 1..=3u8 {
        let factor = base.two_factor_without(c);
        let comps = crate::cycle::decompose_two_regular(g, factor).unwrap();
        if comps.len() >= 2 {
            let cyc = comps[0].edge_set();
            let (p, q) = match c {
                1 => (2, 3),
                2 => (1, 3),
                _ => (1, 2),
            };
            let colors: Vec<u8> = base
                .colors()
                .iter()
                .enumerate()
                .map(|(e, &x)| if cyc.contains(e) { if x == p { q } else { p } } else { x })
                .collect();
            out.push(EdgeColoring::new(g, 3, colors).expect("swapping a 2-coloured cycle stays proper"));
            break 'swap;
        }
    }
    let inc = g.incident(0);
    let fixed = [(inc[0], base.color(inc[0])), (inc[1], base.color(inc[1])), (inc[2], base.color(inc[2]))];
    'force: for e in 0..g.size() {
        if inc.contains(&e) {
            continue;
        }
        for c in 1..=3u8 {
            if c == base.color(e) {
                continue;
            }
            let mut pre = fixed.to_vec();
            pre.push((e, c));
            if let Some(col) = three_edge_coloring_with(g, &pre) {
                if !out.contains(&col) {
                    out.push(col);
                }
                break 'force;
            }
        }
    }
    out
}

/// Per-edge cycle labels in each 2-factor induced by a colour pair: two
/// edges with a common label lie on one cycle of one such 2-factor.
struct CycleLabels {
    labels: Vec<[u8; 9]>,
    slots: usize,
}

impl CycleLabels {
    fn new(g: &CubicGraph, colorings: &[EdgeColoring]) -> Self {
        let mut labels = vec![[u8::MAX; 9]; g.size()];
        let mut slots = 0;
        for col in colorings.iter().take(3) {
            for c in 1..=3u8 {
                let factor = col.two_factor_without(c);
                let comps = crate::cycle::decompose_two_regular(g, factor).unwrap();
                for (i, comp) in comps.iter().enumerate() {
                    for e in comp.edge_set().iter() {
                        labels[e][slots] = i as u8;
                    }
                }
                slots += 1;
            }
        }
        CycleLabels { labels, slots }
    }

    fn same_cycle(&self, e1: usize, e2: usize) -> bool {
        let (a, b) = (&self.labels[e1], &self.labels[e2]);
        (0..self.slots).any(|s| a[s] != u8::MAX && a[s] == b[s])
    }
}

/// Pairs of disjoint edges lying on a common cycle of a 2-factor induced by
/// two colours of one of `colorings`; inserting an edge between them always
/// gives a colourable graph.
pub fn lookahead_forbidden_pairs(g: &CubicGraph, colorings: &[EdgeColoring]) -> BTreeSet<EdgePair> {
    let labels = CycleLabels::new(g, colorings);
    let mut out = BTreeSet::new();
    for e1 in 0..g.size() {
        for e2 in e1 + 1..g.size() {
            if !g.edges_adjacent(e1, e2) && labels.same_cycle(e1, e2) {
                out.insert(EdgePair { e1, e2 });
            }
        }
    }
    out
}

/// Whether some edge other than the pair joins an endpoint of `e1` to an
/// endpoint of `e2`, which puts the new edge on a 4-cycle.
fn has_connecting_edge(g: &CubicGraph, pair: EdgePair) -> bool {
    let (a, b) = g.edge(pair.e1);
    let (c, d) = g.edge(pair.e2);
    [a, b].iter().any(|&p| {
        [c, d].iter().any(|&q| match g.edge_index(p, q) {
            Some(f) => f != pair.e1 && f != pair.e2,
            None => false,
        })
    })
}

/// A colourable graph with a connecting edge between the pair always gives
/// a colourable child.
pub fn square_pair_prunable(g: &CubicGraph, pair: EdgePair) -> bool {
    pair.is_disjoint(g) && has_connecting_edge(g, pair) && three_edge_coloring(g).is_some()
}

/// Edge list and per-slot edge ids of raw adjacency.
struct EdgeTable {
    edges: Vec<[u8; 2]>,
    id: Vec<[u8; 3]>,
}

impl EdgeTable {
    fn new(adj: &Adjacency) -> Self {
        let mut edges = Vec::with_capacity(adj.len() * 3 / 2);
        let mut id = vec![[0u8; 3]; adj.len()];
        for (v, row) in adj.iter().enumerate() {
            for (i, &w) in row.iter().enumerate() {
                if (v as u8) < w {
                    let e = edges.len() as u8;
                    edges.push([v as u8, w]);
                    id[v][i] = e;
                    let j = adj[w as usize].iter().position(|&x| x as usize == v).unwrap();
                    id[w as usize][j] = e;
                }
            }
        }
        EdgeTable { edges, id }
    }

    fn index(&self, adj: &Adjacency, u: usize, w: usize) -> usize {
        let i = adj[u].iter().position(|&x| x as usize == w).unwrap();
        self.id[u][i] as usize
    }
}

/// Numbers of 4-, 5- and 6-cycles through the edge `uv`, packed so that
/// more short cycles compare greater.
fn edge_score(adj: &Adjacency, u: u8, v: u8) -> u32 {
    let (mut c4, mut c5, mut c6) = (0u32, 0u32, 0u32);
    let joined = |p: u8, q: u8| adj[p as usize].contains(&q);
    for &a in &adj[u as usize] {
        if a == v {
            continue;
        }
        for &b in &adj[v as usize] {
            if b == u || b == a {
                continue;
            }
            c4 += joined(a, b) as u32;
            for &x in &adj[a as usize] {
                if x == u || x == v || x == b {
                    continue;
                }
                c5 += joined(x, b) as u32;
                for &y in &adj[x as usize] {
                    if y != a && y != u && y != v && y != b {
                        c6 += joined(y, b) as u32;
                    }
                }
            }
        }
    }
    c4.min(255) << 16 | c5.min(255) << 8 | c6.min(255)
}

fn edge_reducible(adj: &Adjacency, [u, v]: [u8; 2]) -> bool {
    match reduce_adj(adj, u as usize, v as usize) {
        Some(r) => is_cyclically_4_connected(&r),
        None => false,
    }
}

/// Canonical augmentation test: is the last inserted edge (between the two
/// highest vertices) equivalent to the canonical reducible edge? Edges are
/// ranked by their short-cycle counts, then by position in the canonical
/// labelling.
fn is_canonical_child(adj: &Adjacency) -> bool {
    let n = adj.len();
    let table = EdgeTable::new(adj);
    let new_edge = table.index(adj, n - 2, n - 1);
    let mine = edge_score(adj, (n - 2) as u8, (n - 1) as u8);
    let mut ties = Vec::new();
    for (e, &[a, b]) in table.edges.iter().enumerate() {
        if e == new_edge {
            continue;
        }
        let s = edge_score(adj, a, b);
        if s > mine && edge_reducible(adj, [a, b]) {
            return false;
        }
        if s == mine {
            ties.push(e);
        }
    }
    ties.retain(|&e| edge_reducible(adj, table.edges[e]));
    if ties.is_empty() {
        return true;
    }
    ties.push(new_edge);
    let canon = canonical_form_adj(adj);
    let key = |e: usize| {
        let [a, b] = table.edges[e];
        let (p, q) = (canon.labeling[a as usize], canon.labeling[b as usize]);
        (p.min(q), p.max(q))
    };
    let best = *ties.iter().min_by_key(|&&e| key(e)).unwrap();
    if best == new_edge {
        return true;
    }
    // Same orbit under the automorphism group?
    let m = table.edges.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gamma in &canon.generators {
        for (e, &[a, b]) in table.edges.iter().enumerate() {
            let f = table.index(adj, gamma[a as usize] as usize, gamma[b as usize] as usize);
            let (r1, r2) = (find(&mut parent, e), find(&mut parent, f));
            if r1 != r2 {
                parent[r1] = r2;
            }
        }
    }
    find(&mut parent, best) == find(&mut parent, new_edge)
}

/// Representatives of the orbits of disjoint edge pairs under the group
/// generated by `gens`.
fn disjoint_pair_orbits(adj: &Adjacency, table: &EdgeTable, gens: &[Vec<u8>]) -> Vec<(usize, usize)> {
    let m = table.edges.len();
    let disjoint = |e: usize, f: usize| {
        let [a, b] = table.edges[e];
        let [c, d] = table.edges[f];
        a != c && a != d && b != c && b != d
    };
    let mut parent: Vec<u32> = (0..(m * m) as u32).collect();
    fn find(p: &mut [u32], mut x: usize) -> usize {
        while p[x] as usize != x {
            p[x] = p[p[x] as usize];
            x = p[x] as usize;
        }
        x
    }
    let images: Vec<Vec<usize>> = gens
        .iter()
        .map(|gamma| {
            table
                .edges
                .iter()
                .map(|&[a, b]| table.index(adj, gamma[a as usize] as usize, gamma[b as usize] as usize))
                .collect()
        })
        .collect();
    for img in &images {
        for e in 0..m {
            for f in e + 1..m {
                if !disjoint(e, f) {
                    continue;
                }
                let (x, y) = (img[e].min(img[f]), img[e].max(img[f]));
                let (r1, r2) = (find(&mut parent, e * m + f), find(&mut parent, x * m + y));
                if r1 != r2 {
                    let (lo, hi) = (r1.min(r2), r1.max(r2));
                    parent[hi] = lo as u32;
                }
            }
        }
    }
    let mut out = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            if disjoint(e, f) && find(&mut parent, e * m + f) == e * m + f {
                out.push((e, f));
            }
        }
    }
    out
}

fn cube_adjacency() -> Vec<[u8; 3]> {
    (0..8u8).map(|v| [v ^ 1, v ^ 2, v ^ 4]).collect()
}

fn k4_adjacency() -> Vec<[u8; 3]> {
    vec![[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]]
}

/// Depth-first canonical augmentation over cyclically 4-edge-connected
/// graphs, with final-level snark search at the requested orders.
struct Engine<'s> {
    class: GraphClass,
    /// Orders at which the class members are produced.
    targets: BTreeSet<usize>,
    deepest: usize,
    shard: Shard,
    split_level: usize,
    split_counter: u64,
    budget: Option<u64>,
    stats: GenerationStats,
    found: BTreeMap<usize, BTreeSet<CanonicalCode>>,
    on_parent: Option<&'s mut dyn FnMut(&CubicGraph)>,
}

impl Engine<'_> {
    fn over_budget(&self) -> bool {
        match self.budget {
            Some(b) => self.stats.expanded.values().sum::<u64>() >= b,
            None => false,
        }
    }

    fn run(&mut self) {
        self.stats.complete = true;
        self.visit(&k4_adjacency(), self.split_level == 4 && self.shard.index == 0 || self.split_level > 4);
        if self.deepest >= 8 {
            let owned = self.shard.index == 0;
            self.visit(&cube_adjacency(), owned || self.split_level > 8);
        }
    }

    /// `owned` says whether outputs at this node belong to this shard.
    fn visit(&mut self, adj: &Adjacency, mut owned: bool) {
        let n = adj.len();
        if n == self.split_level {
            let idx = self.split_counter;
            self.split_counter += 1;
            if idx % self.shard.count as u64 != self.shard.index as u64 {
                return;
            }
            owned = true;
        } else if n < self.split_level {
            owned = self.shard.index == 0;
        }
        if self.over_budget() {
            self.stats.complete = false;
            return;
        }
        *self.stats.expanded.entry(n).or_default() += 1;
        if let Some(cb) = self.on_parent.as_mut() {
            cb(&CubicGraph::from_adjacency(adj));
        }
        if self.class == GraphClass::Cyc4 && self.targets.contains(&n) && owned {
            let code = canonical_form_adj(adj).code;
            self.found.entry(n).or_default().insert(code);
        }
        if self.class.is_uncolourable() && self.targets.contains(&(n + 2)) && owned {
            self.final_level(adj);
        }
        if n + 2 > self.deepest {
            return;
        }
        let canon = canonical_form_adj(adj);
        let table = EdgeTable::new(adj);
        for (e, f) in disjoint_pair_orbits(adj, &table, &canon.generators) {
            let child = insert_adj(adj, table.edges[e], table.edges[f]);
            if is_canonical_child(&child) && is_cyclically_4_connected(&child) {
                self.visit(&child, owned);
            }
        }
    }

    /// Inserts an edge between every disjoint pair of the parent that the
    /// look-ahead cannot rule out, keeping uncolourable, cyclically
    /// 4-edge-connected children whose canonical parent this is.
    fn final_level(&mut self, adj: &Adjacency) {
        let g = CubicGraph::from_adjacency(adj);
        let colorings = derive_colorings(&g);
        let colourable = !colorings.is_empty();
        let labels = CycleLabels::new(&g, &colorings);
        let need_girth5 = matches!(self.class, GraphClass::Snark | GraphClass::Snark5);
        let squares: Vec<Bits> = if need_girth5 {
            let mut out = Vec::new();
            crate::cycle::for_each_cycle(&g, 3, 4, |c| {
                out.push(c.edge_set());
                true
            });
            out
        } else {
            Vec::new()
        };
        let m = g.size();
        for e1 in 0..m {
            for e2 in e1 + 1..m {
                if g.edges_adjacent(e1, e2) {
                    continue;
                }
                self.stats.pairs_considered += 1;
                let pair = EdgePair { e1, e2 };
                if need_girth5 {
                    let hit = |s: &Bits| s.contains(e1) || s.contains(e2);
                    if !squares.iter().all(hit) || has_connecting_edge(&g, pair) {
                        self.stats.pruned_girth += 1;
                        continue;
                    }
                }
                if colourable {
                    if labels.same_cycle(e1, e2) {
                        self.stats.pruned_same_cycle += 1;
                        continue;
                    }
                    if has_connecting_edge(&g, pair) {
                        self.stats.pruned_square += 1;
                        continue;
                    }
                }
                let (a, b) = g.edge(e1);
                let (c, d) = g.edge(e2);
                let child = insert_adj(adj, [a as u8, b as u8], [c as u8, d as u8]);
                let cg = CubicGraph::from_adjacency(&child);
                self.stats.colour_tests += 1;
                if three_edge_coloring(&cg).is_some() {
                    continue;
                }
                if !is_cyclically_4_connected(&child) || !is_canonical_child(&child) {
                    continue;
                }
                if self.class == GraphClass::Snark5 && !cg.cyclic_edge_connectivity().at_least(5) {
                    continue;
                }
                if need_girth5 && girth_of(&child) < 5 {
                    continue;
                }
                let code = canonical_form_adj(&child).code;
                self.found.entry(adj.len() + 2).or_default().insert(code);
            }
        }
    }
}

fn check_order(n: usize) -> Result<(), SpecError> {
    if n % 2 == 1 {
        return Err(SpecError::OddOrder(n));
    }
    if n < 4 {
        return Err(SpecError::OrderTooSmall(n));
    }
    if n > MAX_ORDER {
        return Err(SpecError::OrderTooLarge(n));
    }
    Ok(())
}

/// The level whose graphs are dealt out to shards in depth-first order.
pub fn split_level(max_order: usize) -> usize {
    if max_order >= 10 {
        max_order - 6
    } else {
        4
    }
}

/// Generates the class at every order in `orders` in one pass and returns
/// the canonical codes found, ascending, per order.
pub fn generate_orders(
    orders: &[usize],
    class: GraphClass,
    shard: Shard,
    node_budget: Option<u64>,
) -> Result<(BTreeMap<usize, Vec<CanonicalCode>>, GenerationStats), SpecError> {
    generate_orders_observed(orders, class, shard, node_budget, None)
}

/// As [`generate_orders`], calling `on_parent` for every intermediate
/// cyclically 4-edge-connected graph expanded.
pub fn generate_orders_observed(
    orders: &[usize],
    class: GraphClass,
    shard: Shard,
    node_budget: Option<u64>,
    on_parent: Option<&mut dyn FnMut(&CubicGraph)>,
) -> Result<(BTreeMap<usize, Vec<CanonicalCode>>, GenerationStats), SpecError> {
    if shard.count == 0 || shard.index >= shard.count {
        return Err(SpecError::BadShard(shard));
    }
    for &n in orders {
        check_order(n)?;
    }
    let Some(&max) = orders.iter().max() else {
        return Ok((BTreeMap::new(), GenerationStats { complete: true, ..Default::default() }));
    };
    if class == GraphClass::Cubic3c {
        return Ok(generate_3connected(orders, shard, node_budget));
    }
    let deepest = if class == GraphClass::Cyc4 { max } else { max - 2 };
    let mut engine = Engine {
        class,
        targets: orders.iter().copied().collect(),
        deepest,
        shard,
        split_level: split_level(max).min(deepest.max(4)),
        split_counter: 0,
        budget: node_budget,
        stats: GenerationStats::default(),
        found: BTreeMap::new(),
        on_parent,
    };
    engine.run();
    let mut out = BTreeMap::new();
    for &n in orders {
        let codes = engine.found.remove(&n).unwrap_or_default();
        out.insert(n, codes.into_iter().collect());
    }
    Ok((out, engine.stats))
}

/// Generates one class at one order and streams the graphs, in canonical
/// labelling, by ascending canonical code.
pub fn generate_catalog(
    spec: &GenerationSpec,
    mut sink: impl FnMut(CubicGraph),
) -> Result<GenerationStats, SpecError> {
    let (mut by_order, stats) = generate_orders(&[spec.order], spec.class, spec.shard, spec.node_budget)?;
    for code in by_order.remove(&spec.order).unwrap_or_default() {
        sink(code.to_graph());
    }
    Ok(stats)
}

/// Level-by-level generation of 3-connected graphs from `K4`: every graph
/// of the previous level is expanded by all edge pairs, 3-connected
/// children are kept, and duplicates removed by canonical code.
fn generate_3connected(
    orders: &[usize],
    shard: Shard,
    node_budget: Option<u64>,
) -> (BTreeMap<usize, Vec<CanonicalCode>>, GenerationStats) {
    let max = *orders.iter().max().unwrap();
    let mut stats = GenerationStats { complete: true, ..Default::default() };
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(canonical_form_adj(&k4_adjacency()).code);
    let mut out = BTreeMap::new();
    let mut n = 4;
    let mut expanded = 0u64;
    loop {
        if orders.contains(&n) {
            let mine = level.iter().filter(|c| shard_of(c, shard.count) == shard.index).cloned().collect();
            out.insert(n, mine);
        }
        if n >= max {
            break;
        }
        let mut next = BTreeSet::new();
        for code in &level {
            if node_budget.is_some_and(|b| expanded >= b) {
                stats.complete = false;
                break;
            }
            expanded += 1;
            *stats.expanded.entry(n).or_default() += 1;
            let g = code.to_graph();
            let m = g.size();
            for e1 in 0..m {
                for e2 in e1 + 1..m {
                    let child = insert_edge(&g, EdgePair { e1, e2 }).unwrap();
                    if child.vertex_connectivity() == 3 {
                        next.insert(canonical_form_adj(child.adjacency()).code);
                    }
                }
            }
        }
        level = next;
        n += 2;
    }
    (out, stats)
}

fn shard_of(code: &CanonicalCode, count: usize) -> usize {
    // FNV-1a over the code bytes.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in code.as_bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    (h % count as u64) as usize
}
