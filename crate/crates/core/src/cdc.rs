//! Cycle double covers and their variants.
//!
//! In a cycle double cover of a cubic graph every vertex uses each of its
//! three transitions (pairs of incident edges) exactly once. Along an edge
//! `uv` the two transitions at `u` through the edge are joined to the two
//! at `v` in one of two ways, so a cover is a choice of one bit per edge
//! whose closed walks are all cycles. The search below sets these bits one
//! edge at a time and tracks the partial walks with a union-find, rejecting
//! a choice as soon as a walk would revisit a vertex. Distinct bit vectors
//! give distinct covers, so counting is exact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::color::{three_edge_coloring, EdgeColoring};
use crate::cycle::{decompose_two_regular, Cycle};
use crate::factor::TwoRegularSubgraph;
use crate::graph::CubicGraph;
use crate::Outcome;

/// A multiset of cycles covering every edge exactly twice, optionally with
/// a colour per cycle and a traversal direction per cycle (`true` follows
/// the stored vertex sequence).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDoubleCover {
    pub cycles: Vec<Cycle>,
    pub coloring: Option<Vec<u8>>,
    pub orientation: Option<Vec<bool>>,
}

impl CycleDoubleCover {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn contains(&self, c: &Cycle) -> bool {
        self.cycles.contains(c)
    }

    /// Total length of all cycles.
    pub fn total_length(&self) -> usize {
        self.cycles.iter().map(Cycle::len).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightError {
    Length,
    Value(usize),
    /// Weight-1 edges at this vertex do not number 0 or 2.
    NotEulerian(usize),
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::Length => f.write_str("one weight per edge is required"),
            WeightError::Value(e) => write!(f, "weight of edge {e} is not 1 or 2"),
            WeightError::NotEulerian(v) => write!(f, "odd weight at vertex {v}"),
        }
    }
}

impl core::error::Error for WeightError {}

/// Edge weights in {1, 2} with even weight on every cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianWeight(Vec<u8>);

impl EulerianWeight {
    /// Cut parity is the sum of vertex-star parities, so checking stars
    /// suffices.
    pub fn new(g: &CubicGraph, w: Vec<u8>) -> Result<Self, WeightError> {
        if w.len() != g.size() {
            return Err(WeightError::Length);
        }
        if let Some(e) = w.iter().position(|&x| x != 1 && x != 2) {
            return Err(WeightError::Value(e));
        }
        for v in 0..g.order() {
            let s: u32 = g.incident(v).iter().map(|&e| w[e] as u32).sum();
            if s % 2 == 1 {
                return Err(WeightError::NotEulerian(v));
            }
        }
        Ok(EulerianWeight(w))
    }

    /// Weight 1 on `d`, 2 elsewhere.
    pub fn from_subgraph(g: &CubicGraph, d: &TwoRegularSubgraph) -> Self {
        let w = (0..g.size()).map(|e| if d.edge_set().contains(e) { 1 } else { 2 }).collect();
        EulerianWeight(w)
    }

    pub fn weights(&self) -> &[u8] {
        &self.0
    }

    pub fn ones(&self) -> Bits {
        (0..self.0.len()).filter(|&e| self.0[e] == 1).collect()
    }
}

const NONE: u16 = u16::MAX;
const OPEN: u8 = 0;
const CLOSED: u8 = u8::MAX;

/// Transition `3v + i` at `v` joins the two edges of `v` other than
/// `incident(v)[i]`.
struct Layout {
    n: usize,
    /// For edge `e`: the two transitions at each end through `e`.
    ends: Vec<[[u16; 2]; 2]>,
    vertex_of: Vec<u8>,
    order: Vec<usize>,
}

impl Layout {
    fn new(g: &CubicGraph, first: Bits) -> Self {
        let n = g.order();
        let m = g.size();
        let mut ends = vec![[[0u16; 2]; 2]; m];
        for (e, slots) in ends.iter_mut().enumerate() {
            let (u, v) = g.edge(e);
            for (side, w) in [u, v].into_iter().enumerate() {
                let p = g.incident(w).iter().position(|&f| f == e).unwrap();
                slots[side] = [(3 * w + (p + 1) % 3) as u16, (3 * w + (p + 2) % 3) as u16];
            }
        }
        let vertex_of = (0..3 * n).map(|t| (t / 3) as u8).collect();
        // Preset edges first, then edges as their endpoints are reached
        // breadth-first, so walks close early.
        let mut order: Vec<usize> = first.iter().collect();
        let mut placed = first;
        let mut seen = Bits::single(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for (w, e) in g.neighbors(v).into_iter().zip(g.incident(v)) {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push(w);
                }
                if !placed.contains(e) {
                    placed.insert(e);
                    order.push(e);
                }
            }
        }
        Layout { n, ends, vertex_of, order }
    }

    /// The two joins made at edge `e` by `bit`.
    fn joins(&self, e: usize, bit: bool) -> [(u16, u16); 2] {
        let [[a0, a1], [b0, b1]] = self.ends[e];
        if bit {
            [(a0, b1), (a1, b0)]
        } else {
            [(a0, b0), (a1, b1)]
        }
    }

    /// The bit joining transitions `ta` and `tb` at edge `e`.
    fn bit_for(&self, e: usize, ta: u16, tb: u16) -> bool {
        self.joins(e, true).iter().any(|&(x, y)| (x, y) == (ta, tb) || (x, y) == (tb, ta))
    }
}

/// Search state; cloned per branch.
#[derive(Clone)]
struct Node {
    parent: Vec<u16>,
    vset: Vec<Bits>,
    length: Vec<u8>,
    /// Per root: OPEN, CLOSED, or a colour.
    state: Vec<u8>,
    /// Partner transition across each of the two edges of a transition.
    link: Vec<[u16; 2]>,
    /// Parity union-find over closed cycles, for orientability.
    oparent: Vec<u16>,
    oparity: Vec<u8>,
    max_colour: u8,
}

impl Node {
    fn new(n: usize) -> Self {
        let t = 3 * n;
        Node {
            parent: (0..t as u16).collect(),
            vset: (0..t).map(|x| Bits::single(x / 3)).collect(),
            length: vec![1; t],
            state: vec![OPEN; t],
            link: vec![[NONE; 2]; t],
            oparent: (0..t as u16).collect(),
            oparity: vec![0; t],
            max_colour: 0,
        }
    }

    fn find(&self, mut x: u16) -> u16 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn ofind(&self, mut x: u16) -> (u16, u8) {
        let mut p = 0;
        while self.oparent[x as usize] != x {
            p ^= self.oparity[x as usize];
            x = self.oparent[x as usize];
        }
        (x, p)
    }

    /// Adds `o_a xor o_b = want`; false on contradiction.
    fn orient_constraint(&mut self, a: u16, b: u16, want: u8) -> bool {
        let (ra, pa) = self.ofind(a);
        let (rb, pb) = self.ofind(b);
        if ra == rb {
            return pa ^ pb == want;
        }
        self.oparent[ra as usize] = rb;
        self.oparity[ra as usize] = pa ^ pb ^ want;
        true
    }
}

#[derive(Clone, Debug, Default)]
struct Rules {
    /// Colours available; `None` for an uncoloured cover.
    colours: Option<u8>,
    even: bool,
    orientable: bool,
    /// Cycles that must appear; all take colour 1 when coloured.
    fixed: Vec<Cycle>,
    /// Colour 1 is reserved for the fixed cycles.
    exact_class: bool,
}

/// Exhaustive cover search with optional constraints.
struct Search<'g> {
    g: &'g CubicGraph,
    layout: Layout,
    rules: Rules,
    preset: Vec<Option<bool>>,
    /// One transition of each fixed cycle.
    fixed_trans: Vec<u16>,
    budget: Option<u64>,
    nodes: u64,
    exhausted_budget: bool,
}

impl<'g> Search<'g> {
    fn new(g: &'g CubicGraph, rules: Rules, budget: Option<u64>) -> Option<Self> {
        let fixed_edges = rules.fixed.iter().fold(Bits::EMPTY, |acc, c| acc.union(c.edge_set()));
        let layout = Layout::new(g, fixed_edges);
        let mut preset = vec![None; g.size()];
        let mut fixed_trans = Vec::new();
        let mut used = Bits::EMPTY;
        for c in &rules.fixed {
            if !used.intersection(c.vertex_set()).is_empty() {
                return None;
            }
            used = used.union(c.vertex_set());
            let seq = c.vertex_sequence();
            let k = seq.len();
            // At each cycle vertex the transition avoiding the third edge.
            let trans = |i: usize| {
                let v = seq[i];
                let (prev, next) = (seq[(i + k - 1) % k], seq[(i + 1) % k]);
                let third = g.neighbors(v).iter().position(|&w| w != prev && w != next).unwrap();
                (3 * v + third) as u16
            };
            for i in 0..k {
                let e = g.edge_index(seq[i], seq[(i + 1) % k]).unwrap();
                preset[e] = Some(layout.bit_for(e, trans(i), trans((i + 1) % k)));
            }
            fixed_trans.push(trans(0));
        }
        Some(Search { g, layout, rules, preset, fixed_trans, budget, nodes: 0, exhausted_budget: false })
    }

    /// Joins `a` and `b`. Returns the root of a walk that closed, or an
    /// error when the join is illegal.
    fn join(&self, node: &mut Node, a: u16, b: u16) -> Result<Option<u16>, ()> {
        let slot = |node: &Node, t: u16| if node.link[t as usize][0] == NONE { 0 } else { 1 };
        let (sa, sb) = (slot(node, a), slot(node, b));
        node.link[a as usize][sa] = b;
        node.link[b as usize][sb] = a;
        let (ra, rb) = (node.find(a), node.find(b));
        if ra == rb {
            node.state[ra as usize] = CLOSED;
            if self.rules.even && node.length[ra as usize] % 2 == 1 {
                return Err(());
            }
            return Ok(Some(ra));
        }
        if !node.vset[ra as usize].intersection(node.vset[rb as usize]).is_empty() {
            return Err(());
        }
        let (big, small) = if node.length[ra as usize] >= node.length[rb as usize] { (ra, rb) } else { (rb, ra) };
        node.parent[small as usize] = big;
        node.vset[big as usize] = node.vset[big as usize].union(node.vset[small as usize]);
        node.length[big as usize] += node.length[small as usize];
        Ok(None)
    }

    /// Vertex sequence and per-edge direction of the closed walk through
    /// transition `t`.
    fn trace(&self, node: &Node, t: u16) -> Vec<u8> {
        let mut seq = Vec::new();
        let (mut prev, mut cur) = (NONE, t);
        loop {
            seq.push(self.layout.vertex_of[cur as usize]);
            let [x, y] = node.link[cur as usize];
            let next = if x != prev { x } else { y };
            // A 2-cycle cannot occur in a simple graph, so `x != y`.
            prev = cur;
            cur = next;
            if cur == t {
                return seq;
            }
        }
    }

    /// Orientation constraints between a freshly closed cycle and the
    /// already closed cycles sharing its edges.
    fn orient_closed(&self, node: &mut Node, root: u16) -> bool {
        let seq = self.trace(node, root);
        let k = seq.len();
        for i in 0..k {
            let (a, b) = (seq[i] as usize, seq[(i + 1) % k] as usize);
            let e = self.g.edge_index(a, b).unwrap();
            // The other walk through e at vertex a.
            let side = if self.g.edge(e).0 == a { 0 } else { 1 };
            let [t0, t1] = self.layout.ends[e][side];
            let other = if node.find(t0) == root { t1 } else { t0 };
            let r = node.find(other);
            if r == root || node.state[r as usize] == OPEN {
                continue;
            }
            // Directions are relative to the trace from the root.
            let oseq = self.trace(node, r);
            let forward = |s: &[u8]| {
                let p = s.iter().position(|&v| v as usize == a).unwrap();
                s[(p + 1) % s.len()] as usize == b
            };
            // Each cover walk through e passes a, so this is well defined.
            let same = forward(&seq) == forward(&oseq);
            if !node.orient_constraint(root, r, same as u8) {
                return false;
            }
        }
        true
    }

    /// Colours not used by closed cycles meeting the cycle at `root`.
    fn free_colours(&self, node: &Node, root: u16) -> u8 {
        let k = self.rules.colours.unwrap();
        let mut mask: u8 = if k >= 8 { u8::MAX } else { (1u8 << k) - 1 };
        for v in node.vset[root as usize].iter() {
            for t in 3 * v..3 * v + 3 {
                let r = node.find(t as u16);
                if r != root {
                    let c = node.state[r as usize];
                    if c != OPEN && c != CLOSED {
                        mask &= !(1 << (c - 1));
                    }
                }
            }
        }
        mask
    }

    fn is_fixed(&self, node: &Node, root: u16) -> bool {
        self.fixed_trans.iter().any(|&t| node.find(t) == root)
    }

    fn run(&mut self, visit: &mut dyn FnMut(&Node) -> bool) -> Outcome<()> {
        let root = Node::new(self.layout.n);
        let completed = self.dfs(root, 0, visit);
        if self.exhausted_budget {
            Outcome::ResourceLimit
        } else if completed {
            Outcome::Exhausted
        } else {
            Outcome::Found(())
        }
    }

    /// Returns false when `visit` asked to stop.
    fn dfs(&mut self, node: Node, depth: usize, visit: &mut dyn FnMut(&Node) -> bool) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted_budget = true;
            return false;
        }
        if depth == self.layout.order.len() {
            return visit(&node);
        }
        let e = self.layout.order[depth];
        let bits: &[bool] = match self.preset[e] {
            Some(true) => &[true],
            Some(false) => &[false],
            None => &[false, true],
        };
        for &bit in bits {
            let mut next = node.clone();
            let mut closed = [NONE; 2];
            let mut ok = true;
            for (i, (a, b)) in self.layout.joins(e, bit).into_iter().enumerate() {
                match self.join(&mut next, a, b) {
                    Ok(Some(r)) => closed[i] = r,
                    Ok(None) => {}
                    Err(()) => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            if self.rules.orientable && !closed.iter().all(|&r| r == NONE || self.orient_closed(&mut next, r)) {
                continue;
            }
            if !self.colour_and_descend(next, &closed, depth, visit) {
                return false;
            }
            if self.exhausted_budget {
                return false;
            }
        }
        true
    }

    fn colour_and_descend(
        &mut self,
        node: Node,
        closed: &[u16],
        depth: usize,
        visit: &mut dyn FnMut(&Node) -> bool,
    ) -> bool {
        let Some((&r, rest)) = closed.split_first() else {
            return self.dfs(node, depth + 1, visit);
        };
        if r == NONE || self.rules.colours.is_none() {
            return self.colour_and_descend(node, rest, depth, visit);
        }
        let free = self.free_colours(&node, r);
        if self.is_fixed(&node, r) {
            if free & 1 == 0 {
                return true;
            }
            let mut next = node;
            next.state[r as usize] = 1;
            next.max_colour = next.max_colour.max(1);
            return self.colour_and_descend(next, rest, depth, visit);
        }
        let k = self.rules.colours.unwrap();
        let (first, used) = if self.rules.exact_class { (2, node.max_colour.max(1)) } else { (1, node.max_colour) };
        let limit = k.min(used + 1);
        for c in first..=limit {
            if free & (1 << (c - 1)) == 0 {
                continue;
            }
            let mut next = node.clone();
            next.state[r as usize] = c;
            next.max_colour = next.max_colour.max(c);
            if !self.colour_and_descend(next, rest, depth, visit) {
                return false;
            }
        }
        true
    }

    fn cover_of(&self, node: &Node) -> CycleDoubleCover {
        let mut roots: Vec<u16> = (0..3 * self.layout.n as u16).filter(|&t| node.find(t) == t).collect();
        roots.sort_unstable();
        let mut pairs: Vec<(Cycle, u8)> = roots
            .iter()
            .map(|&r| {
                let seq = self.trace(node, r);
                (Cycle::from_sequence(self.g, &seq), node.state[r as usize])
            })
            .collect();
        pairs.sort();
        let coloring = self.rules.colours.map(|_| pairs.iter().map(|p| p.1).collect());
        let cycles: Vec<Cycle> = pairs.into_iter().map(|p| p.0).collect();
        let orientation = if self.rules.orientable { orient_cdc(self.g, &cycles) } else { None };
        CycleDoubleCover { cycles, coloring, orientation }
    }
}

/// Builder for constrained cover searches.
#[derive(Clone, Debug)]
pub struct CdcQuery<'g> {
    g: &'g CubicGraph,
    rules: Rules,
    budget: Option<u64>,
}

impl<'g> CdcQuery<'g> {
    pub fn new(g: &'g CubicGraph) -> Self {
        CdcQuery { g, rules: Rules::default(), budget: None }
    }

    /// Every cycle of `d` must be a member of the cover.
    pub fn containing(mut self, d: &[Cycle]) -> Self {
        self.rules.fixed = d.to_vec();
        self
    }

    /// Colour the cycles with `k` colours so that cycles sharing an edge
    /// differ. The cycles passed to [`containing`](Self::containing) share
    /// one colour class.
    pub fn colours(mut self, k: u8) -> Self {
        self.rules.colours = Some(k);
        self
    }

    /// The cycles passed to [`containing`](Self::containing) form a whole
    /// colour class rather than lying inside one.
    pub fn exact_class(mut self) -> Self {
        self.rules.exact_class = true;
        self
    }

    pub fn even(mut self) -> Self {
        self.rules.even = true;
        self
    }

    pub fn orientable(mut self) -> Self {
        self.rules.orientable = true;
        self
    }

    /// Stop after this many search nodes.
    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = Some(nodes);
        self
    }

    pub fn find(&self) -> Outcome<CycleDoubleCover> {
        if self.g.has_bridge() {
            return Outcome::Exhausted;
        }
        let Some(mut search) = Search::new(self.g, self.rules.clone(), self.budget) else {
            return Outcome::Exhausted;
        };
        let mut found = None;
        let outcome = search.run(&mut |node| {
            found = Some(node.clone());
            false
        });
        match (outcome, found) {
            (_, Some(node)) => Outcome::Found(search.cover_of(&node)),
            (Outcome::ResourceLimit, None) => Outcome::ResourceLimit,
            _ => Outcome::Exhausted,
        }
    }

    /// Calls `visit` on every distinct cover (colourings ignored) until it
    /// returns `false`, which yields `Found`; `Exhausted` means every cover
    /// was visited.
    pub fn for_each(&self, mut visit: impl FnMut(CycleDoubleCover) -> bool) -> Outcome<()> {
        if self.g.has_bridge() {
            return Outcome::Exhausted;
        }
        let mut rules = self.rules.clone();
        rules.colours = None;
        let (Some(mut search), Some(decoder)) =
            (Search::new(self.g, rules.clone(), self.budget), Search::new(self.g, rules, None))
        else {
            return Outcome::Exhausted;
        };
        search.run(&mut |node| visit(decoder.cover_of(node)))
    }

    /// Number of distinct covers (colourings ignored), counting up to
    /// `limit`.
    pub fn count(&self, limit: usize) -> Outcome<usize> {
        if self.g.has_bridge() {
            return Outcome::Found(0);
        }
        let mut rules = self.rules.clone();
        rules.colours = None;
        let Some(mut search) = Search::new(self.g, rules, self.budget) else {
            return Outcome::Found(0);
        };
        let mut count = 0;
        let outcome = search.run(&mut |_| {
            count += 1;
            count < limit
        });
        match outcome {
            Outcome::ResourceLimit if count < limit => Outcome::ResourceLimit,
            _ => Outcome::Found(count),
        }
    }
}

pub fn find_cdc(g: &CubicGraph) -> Option<CycleDoubleCover> {
    CdcQuery::new(g).find().found()
}

/// A cover having every component of `d` among its cycles.
pub fn extend_to_cdc(g: &CubicGraph, d: &TwoRegularSubgraph) -> Option<CycleDoubleCover> {
    CdcQuery::new(g).containing(d.components()).find().found()
}

/// A `k`-coloured cover; with `containing`, its cycles are members and lie
/// in one colour class.
pub fn find_k_cdc(g: &CubicGraph, k: u8, containing: Option<&TwoRegularSubgraph>) -> Option<CycleDoubleCover> {
    let mut q = CdcQuery::new(g).colours(k);
    if let Some(d) = containing {
        q = q.containing(d.components());
    }
    q.find().found()
}

pub fn find_orientable_5_cdc(g: &CubicGraph) -> Option<CycleDoubleCover> {
    CdcQuery::new(g).colours(5).orientable().find().found()
}

pub fn find_even_cdc(g: &CubicGraph) -> Option<CycleDoubleCover> {
    CdcQuery::new(g).even().find().found()
}

/// Directions making the two cycles through every edge traverse it
/// oppositely, or `None` when the cover is not orientable.
pub fn orient_cdc(g: &CubicGraph, cycles: &[Cycle]) -> Option<Vec<bool>> {
    let k = cycles.len();
    let mut cover: Vec<Vec<(usize, bool)>> = vec![Vec::new(); g.size()];
    for (i, c) in cycles.iter().enumerate() {
        let seq = c.vertex_sequence();
        for j in 0..seq.len() {
            let (a, b) = (seq[j], seq[(j + 1) % seq.len()]);
            let e = g.edge_index(a, b)?;
            cover[e].push((i, a < b));
        }
    }
    let mut parent: Vec<usize> = (0..k).collect();
    let mut parity = vec![false; k];
    fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
        let mut p = false;
        let mut r = x;
        while parent[r] != r {
            p ^= parity[r];
            r = parent[r];
        }
        // Compress.
        let (mut y, mut py) = (x, p);
        while parent[y] != y {
            let next = parent[y];
            let flip = parity[y];
            parent[y] = r;
            parity[y] = py;
            py ^= flip;
            y = next;
        }
        (r, p)
    }
    for uses in &cover {
        let [(a, da), (b, db)] = uses[..] else {
            return None;
        };
        // Flipping both or neither keeps the comparison; equal stored
        // directions need exactly one flip.
        let want = da == db;
        let (ra, pa) = find(&mut parent, &mut parity, a);
        let (rb, pb) = find(&mut parent, &mut parity, b);
        if ra == rb {
            if pa ^ pb != want {
                return None;
            }
        } else {
            parent[ra] = rb;
            parity[ra] = pa ^ pb ^ want;
        }
    }
    Some(
        (0..k)
            .map(|i| !find(&mut parent, &mut parity, i).1)
            .collect(),
    )
}

/// Number of cycles that lie in exactly one cover.
pub fn unique_cdc_cycles(g: &CubicGraph) -> usize {
    let mut unique = 0;
    crate::cycle::for_each_cycle(g, 3, g.order(), |c| {
        if CdcQuery::new(g).containing(core::slice::from_ref(c)).count(2) == Outcome::Found(1) {
            unique += 1;
        }
        true
    });
    unique
}

/// The 4-coloured cover `{D, D xor C1, D xor C2, D xor C3}` where `Ci` is
/// the 2-factor avoiding colour `i`.
pub fn four_cdc_from_coloring(g: &CubicGraph, coloring: &EdgeColoring, d: &TwoRegularSubgraph) -> CycleDoubleCover {
    let mut cycles = Vec::new();
    let mut colours = Vec::new();
    let mut classes = vec![d.edge_set()];
    for c in 1..=3 {
        classes.push(d.edge_set().sym_diff(coloring.two_factor_without(c)));
    }
    for (i, class) in classes.into_iter().enumerate() {
        for cyc in decompose_two_regular(g, class).expect("even subgraph of a cubic graph") {
            cycles.push(cyc);
            colours.push(i as u8 + 1);
        }
    }
    CycleDoubleCover { cycles, coloring: Some(colours), orientation: None }
}

/// Whether reducing any edge leaves an uncolourable graph. Reductions that
/// would create parallel edges count as colourable.
pub fn is_strong_snark(g: &CubicGraph) -> bool {
    (0..g.size()).all(|e| match crate::generate::reduce_edge(g, e) {
        Some(h) => three_edge_coloring(&h).is_none(),
        None => false,
    })
}

/// Cycles covering each edge exactly `w(e)` times. Weight-1 edges form a
/// 2-regular subgraph `D`, and such a cover together with `D` is a double
/// cover containing `D`.
pub fn compatible_cycle_cover(g: &CubicGraph, w: &EulerianWeight) -> Option<Vec<Cycle>> {
    compatible_cycle_cover_within(g, w, None).found()
}

pub fn compatible_cycle_cover_within(g: &CubicGraph, w: &EulerianWeight, budget: Option<u64>) -> Outcome<Vec<Cycle>> {
    let d = decompose_two_regular(g, w.ones()).expect("eulerian weights");
    let mut q = CdcQuery::new(g).containing(&d);
    if let Some(b) = budget {
        q = q.budget(b);
    }
    q.find().map(|cdc| {
        let mut rest = cdc.cycles;
        for c in &d {
            let i = rest.iter().position(|x| x == c).unwrap();
            rest.remove(i);
        }
        rest
    })
}

/// A shortest cycle cover and its length, or `None` for graphs with a
/// bridge. Every cover of a cubic graph has length at least `2n`.
pub fn shortest_cycle_cover(g: &CubicGraph) -> Option<(usize, Vec<Cycle>)> {
    shortest_cycle_cover_within(g, None).found()
}

pub fn shortest_cycle_cover_within(g: &CubicGraph, budget: Option<u64>) -> Outcome<(usize, Vec<Cycle>)> {
    if g.has_bridge() {
        return Outcome::Exhausted;
    }
    let n = g.order();
    let without = |cdc: CycleDoubleCover, d: &[Cycle]| {
        let mut rest = cdc.cycles;
        for c in d {
            let i = rest.iter().position(|x| x == c).unwrap();
            rest.remove(i);
        }
        rest
    };
    // Length exactly 2n forces every vertex to meet one doubly covered
    // edge, so the singly covered edges form a 2-factor completing the
    // cover to a double cover.
    let mut hit = None;
    let mut limited = false;
    crate::factor::for_each_perfect_matching(g, |m| {
        let f = Bits::full(g.size()).difference(m);
        let d = decompose_two_regular(g, f).unwrap();
        let mut q = CdcQuery::new(g).containing(&d);
        if let Some(b) = budget {
            q = q.budget(b);
        }
        match q.find() {
            Outcome::Found(cdc) => {
                hit = Some(without(cdc, &d));
                false
            }
            Outcome::ResourceLimit => {
                limited = true;
                true
            }
            Outcome::Exhausted => true,
        }
    });
    if let Some(cover) = hit {
        return Outcome::Found((2 * n, cover));
    }
    if limited {
        return Outcome::ResourceLimit;
    }
    // A double cover containing a cycle C gives a cover of length 2m - |C|.
    let mut found = None;
    crate::cycle::for_each_cycle(g, n - 1, n - 1, |c| {
        let mut q = CdcQuery::new(g).containing(core::slice::from_ref(c));
        if let Some(b) = budget {
            q = q.budget(b);
        }
        match q.find() {
            Outcome::Found(cdc) => {
                found = Some(without(cdc, core::slice::from_ref(c)));
                false
            }
            Outcome::ResourceLimit => {
                limited = true;
                true
            }
            Outcome::Exhausted => true,
        }
    });
    if let Some(cover) = found {
        return Outcome::Found((2 * n + 1, cover));
    }
    if limited {
        return Outcome::ResourceLimit;
    }
    branch_and_bound_cover(g, 2 * n + 1, budget)
}

/// Smallest cover of length at least `from`, by iterative deepening over
/// cycles through the lowest uncovered edge.
fn branch_and_bound_cover(g: &CubicGraph, from: usize, budget: Option<u64>) -> Outcome<(usize, Vec<Cycle>)> {
    let all = crate::cycle::cycles(g, 3, g.order(), None);
    let m = g.size();
    let max = 2 * m;
    let mut nodes = 0u64;
    fn rec(
        all: &[Cycle],
        uncovered: Bits,
        left: usize,
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
        budget: Option<u64>,
    ) -> Option<bool> {
        *nodes += 1;
        if budget.is_some_and(|b| *nodes > b) {
            return None;
        }
        let Some(e) = uncovered.first() else {
            return Some(true);
        };
        if uncovered.len() > left {
            return Some(false);
        }
        for (i, c) in all.iter().enumerate() {
            if c.len() > left || !c.edge_set().contains(e) {
                continue;
            }
            chosen.push(i);
            match rec(all, uncovered.difference(c.edge_set()), left - c.len(), chosen, nodes, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            chosen.pop();
        }
        Some(false)
    }
    for len in from..=max {
        let mut chosen = Vec::new();
        match rec(&all, Bits::full(m), len, &mut chosen, &mut nodes, budget) {
            Some(true) => {
                let cover: Vec<Cycle> = chosen.iter().map(|&i| all[i].clone()).collect();
                let total = cover.iter().map(Cycle::len).sum();
                return Outcome::Found((total, cover));
            }
            None => return Outcome::ResourceLimit,
            Some(false) => {}
        }
    }
    Outcome::Exhausted
}
