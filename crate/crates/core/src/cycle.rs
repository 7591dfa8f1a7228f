//! Cycles: enumeration, longest cycles, hamiltonicity, dominating and
//! stable cycles, and semiextensions.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::factor::{cycle_lengths, for_each_matching_on};
use crate::graph::CubicGraph;
use crate::Outcome;

/// A cycle stored as a normalised vertex sequence (smallest vertex first,
/// then its smaller cycle neighbour) together with its edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<u8>,
    edges: Bits,
}

impl Cycle {
    /// Validates a cyclic vertex sequence.
    pub fn new(g: &CubicGraph, seq: &[usize]) -> Option<Cycle> {
        if seq.len() < 3 {
            return None;
        }
        let mut seen = Bits::EMPTY;
        for &v in seq {
            if v >= g.order() || seen.contains(v) {
                return None;
            }
            seen.insert(v);
        }
        for i in 0..seq.len() {
            if !g.adjacent(seq[i], seq[(i + 1) % seq.len()]) {
                return None;
            }
        }
        let raw: Vec<u8> = seq.iter().map(|&v| v as u8).collect();
        Some(Cycle::from_sequence(g, &raw))
    }

    /// Builds from a sequence already known to be a cycle of `g`.
    pub(crate) fn from_sequence(g: &CubicGraph, seq: &[u8]) -> Cycle {
        let k = seq.len();
        let (i, _) = seq.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap();
        let fwd = seq[(i + 1) % k];
        let back = seq[(i + k - 1) % k];
        let vertices: Vec<u8> = if fwd < back {
            (0..k).map(|j| seq[(i + j) % k]).collect()
        } else {
            (0..k).map(|j| seq[(i + k - j) % k]).collect()
        };
        let mut edges = Bits::EMPTY;
        for j in 0..k {
            let e = g.edge_index(vertices[j] as usize, vertices[(j + 1) % k] as usize).unwrap();
            edges.insert(e);
        }
        Cycle { vertices, edges }
    }

    /// The cycle formed by a connected 2-regular edge set.
    pub fn from_edge_set(g: &CubicGraph, edges: Bits) -> Option<Cycle> {
        match decompose_two_regular(g, edges)?.as_slice() {
            [c] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().map(|&v| v as usize)
    }

    pub fn vertex_sequence(&self) -> Vec<usize> {
        self.vertices().collect()
    }

    pub fn vertex_set(&self) -> Bits {
        self.vertices().collect()
    }

    pub fn edge_set(&self) -> Bits {
        self.edges
    }

    /// +1 when the stored sequence traverses edge `(a, b)` from `a` to `b`
    /// with `a < b`, -1 for the opposite direction, 0 when not on the cycle.
    pub fn direction(&self, a: usize, b: usize) -> i8 {
        let k = self.vertices.len();
        for j in 0..k {
            let (x, y) = (self.vertices[j] as usize, self.vertices[(j + 1) % k] as usize);
            if (x, y) == (a, b) {
                return 1;
            }
            if (x, y) == (b, a) {
                return -1;
            }
        }
        0
    }
}

/// Splits a 2-regular edge set into its cycles; `None` if some touched
/// vertex does not have degree exactly 2.
pub fn decompose_two_regular(g: &CubicGraph, edges: Bits) -> Option<Vec<Cycle>> {
    let mut deg = vec![0u8; g.order()];
    for e in edges.iter() {
        if e >= g.size() {
            return None;
        }
        let (a, b) = g.edge(e);
        deg[a] += 1;
        deg[b] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return None;
    }
    let mut out = Vec::new();
    let mut seen = Bits::EMPTY;
    let mut seq = Vec::new();
    for e in edges.iter() {
        let (start, _) = g.edge(e);
        if seen.contains(start) {
            continue;
        }
        seq.clear();
        let mut prev = usize::MAX;
        let mut v = start;
        loop {
            seen.insert(v);
            seq.push(v as u8);
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
        out.push(Cycle::from_sequence(g, &seq));
    }
    out.sort();
    Some(out)
}

/// Calls `f` for every cycle with length in `min_len..=max_len`, each once.
/// Stops when `f` returns `false`; returns `false` in that case.
pub fn for_each_cycle(
    g: &CubicGraph,
    min_len: usize,
    max_len: usize,
    mut f: impl FnMut(&Cycle) -> bool,
) -> bool {
    let n = g.order();
    let mut path: Vec<u8> = Vec::with_capacity(n);
    fn extend(
        g: &CubicGraph,
        min_len: usize,
        max_len: usize,
        path: &mut Vec<u8>,
        on_path: &mut Bits,
        f: &mut impl FnMut(&Cycle) -> bool,
    ) -> bool {
        let s = path[0] as usize;
        let last = *path.last().unwrap() as usize;
        for w in g.neighbors(last) {
            if w == s {
                let k = path.len();
                if k >= 3 && k >= min_len && path[1] < path[k - 1] && !f(&Cycle::from_sequence(g, path)) {
                    return false;
                }
            } else if w > s && !on_path.contains(w) && path.len() < max_len {
                on_path.insert(w);
                path.push(w as u8);
                let go = extend(g, min_len, max_len, path, on_path, f);
                path.pop();
                on_path.remove(w);
                if !go {
                    return false;
                }
            }
        }
        true
    }
    for s in 0..n {
        path.clear();
        path.push(s as u8);
        let mut on_path = Bits::single(s);
        if !extend(g, min_len, max_len, &mut path, &mut on_path, &mut f) {
            return false;
        }
    }
    true
}

/// All cycles with length in range, optionally only those through every
/// vertex of `required`, sorted by length then vertex sequence.
pub fn cycles(g: &CubicGraph, min_len: usize, max_len: usize, required: Option<Bits>) -> Vec<Cycle> {
    let mut out = Vec::new();
    let req = required.unwrap_or(Bits::EMPTY);
    for_each_cycle(g, min_len, max_len, |c| {
        if req.is_subset(c.vertex_set()) {
            out.push(c.clone());
        }
        true
    });
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    out
}

/// A hamiltonian cycle, found as a perfect matching whose complementary
/// 2-factor is connected.
pub fn hamiltonian_cycle(g: &CubicGraph) -> Option<Cycle> {
    let all_edges = Bits::full(g.size());
    let mut lens = Vec::new();
    let mut found = None;
    for_each_matching_on(g, Bits::full(g.order()), Bits::EMPTY, |m| {
        let f = all_edges.difference(m);
        cycle_lengths(g, f, &mut lens);
        if lens.len() == 1 {
            found = Some(f);
            return false;
        }
        true
    });
    found.map(|f| Cycle::from_edge_set(g, f).unwrap())
}

/// A cycle through every vertex except `v`.
///
/// Such a cycle uses both remaining edges at each neighbour of `v`, so the
/// unused edges away from `v` form a perfect matching of the graph with
/// `v` and its neighbours removed.
pub fn cycle_missing(g: &CubicGraph, v: usize) -> Option<Cycle> {
    let mut alive = Bits::full(g.order());
    alive.remove(v);
    for w in g.neighbors(v) {
        alive.remove(w);
    }
    let star: Bits = g.incident(v).into_iter().collect();
    let base = Bits::full(g.size()).difference(star);
    let mut lens = Vec::new();
    let mut found = None;
    for_each_matching_on(g, alive, Bits::EMPTY, |m| {
        let f = base.difference(m);
        cycle_lengths(g, f, &mut lens);
        if lens.len() == 1 {
            found = Some(f);
            return false;
        }
        true
    });
    found.map(|f| Cycle::from_edge_set(g, f).unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hamiltonicity {
    Hamiltonian,
    Hypohamiltonian,
    Neither,
}

pub fn hamiltonicity(g: &CubicGraph) -> Hamiltonicity {
    if hamiltonian_cycle(g).is_some() {
        return Hamiltonicity::Hamiltonian;
    }
    if (0..g.order()).all(|v| cycle_missing(g, v).is_some()) {
        Hamiltonicity::Hypohamiltonian
    } else {
        Hamiltonicity::Neither
    }
}

/// Length of a longest cycle, with a witness.
pub fn circumference(g: &CubicGraph) -> (usize, Cycle) {
    let n = g.order();
    if let Some(c) = hamiltonian_cycle(g) {
        return (n, c);
    }
    for v in 0..n {
        if let Some(c) = cycle_missing(g, v) {
            return (n - 1, c);
        }
    }
    longest_cycle_search(g)
}

/// Branch and bound over cycles by their smallest vertex; a branch is cut
/// when the path plus everything still reachable cannot beat the best.
fn longest_cycle_search(g: &CubicGraph) -> (usize, Cycle) {
    let n = g.order();
    struct State<'a> {
        g: &'a CubicGraph,
        best: usize,
        witness: Vec<u8>,
        path: Vec<u8>,
        on_path: Bits,
    }
    fn reachable(g: &CubicGraph, from: usize, s: usize, on_path: Bits) -> usize {
        let mut seen = Bits::single(from);
        let mut stack = vec![from];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for w in g.neighbors(u) {
                if w > s && !on_path.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        count
    }
    fn rec(st: &mut State) {
        let s = st.path[0] as usize;
        let last = *st.path.last().unwrap() as usize;
        for w in st.g.neighbors(last) {
            if w == s {
                if st.path.len() >= 3 && st.path.len() > st.best {
                    st.best = st.path.len();
                    st.witness = st.path.clone();
                }
            } else if w > s && !st.on_path.contains(w) {
                if st.path.len() + reachable(st.g, w, s, st.on_path) <= st.best {
                    continue;
                }
                st.on_path.insert(w);
                st.path.push(w as u8);
                rec(st);
                st.path.pop();
                st.on_path.remove(w);
            }
        }
    }
    let mut st = State { g, best: 0, witness: Vec::new(), path: Vec::new(), on_path: Bits::EMPTY };
    for s in 0..n {
        if n - s <= st.best {
            break;
        }
        st.path = vec![s as u8];
        st.on_path = Bits::single(s);
        rec(&mut st);
    }
    let c = Cycle::from_sequence(g, &st.witness);
    (st.best, c)
}

/// A cycle through all `required` edges such that every edge has an
/// endpoint on it.
///
/// The vertices off a dominating cycle form an independent set `I`, and
/// the edges off it are the stars of `I` plus a perfect matching of the
/// remaining vertices. Both are enumerated together.
pub fn dominating_cycle(g: &CubicGraph, required: &[usize]) -> Option<Cycle> {
    let n = g.order();
    let req: Bits = required.iter().copied().collect();
    struct State<'a> {
        g: &'a CubicGraph,
        req: Bits,
        // 0 unset, 1 on the cycle, 2 off the cycle.
        status: Vec<u8>,
        off_edges: Bits,
        found: Option<Bits>,
        lens: Vec<usize>,
    }
    fn try_off(st: &mut State, u: usize) -> bool {
        let nb = st.g.neighbors(u);
        let inc = st.g.incident(u);
        if st.status[u] != 0 || nb.iter().any(|&w| st.status[w] != 0) || inc.iter().any(|&e| st.req.contains(e)) {
            return false;
        }
        st.status[u] = 2;
        for &w in &nb {
            st.status[w] = 1;
        }
        let saved = st.off_edges;
        for &e in &inc {
            st.off_edges.insert(e);
        }
        if rec(st) {
            return true;
        }
        st.off_edges = saved;
        st.status[u] = 0;
        for &w in &nb {
            st.status[w] = 0;
        }
        false
    }
    fn rec(st: &mut State) -> bool {
        let Some(v) = st.status.iter().position(|&s| s == 0) else {
            let on = Bits::full(st.g.size()).difference(st.off_edges);
            cycle_lengths(st.g, on, &mut st.lens);
            if st.lens.len() == 1 && st.req.is_subset(on) {
                st.found = Some(on);
                return true;
            }
            return false;
        };
        let nb = st.g.neighbors(v);
        let inc = st.g.incident(v);
        // Some vertex is off the cycle: v itself, or the far end of the
        // edge v loses.
        for u in core::iter::once(v).chain(nb) {
            if try_off(st, u) {
                return true;
            }
        }
        // v on the cycle, with one edge to a cycle vertex left out.
        for i in 0..3 {
            let (w, e) = (nb[i], inc[i]);
            if st.status[w] == 0 && !st.req.contains(e) {
                st.status[v] = 1;
                st.status[w] = 1;
                st.off_edges.insert(e);
                if rec(st) {
                    return true;
                }
                st.off_edges.remove(e);
                st.status[v] = 0;
                st.status[w] = 0;
            }
        }
        false
    }
    let mut st = State {
        g,
        req,
        status: vec![0; n],
        off_edges: Bits::EMPTY,
        found: None,
        lens: Vec::new(),
    };
    rec(&mut st);
    st.found.map(|e| Cycle::from_edge_set(g, e).unwrap())
}

/// Whether no other cycle contains all vertices of `c`.
pub fn is_stable(g: &CubicGraph, c: &Cycle) -> bool {
    !has_detour(g, c) && !has_covering_cycle(g, c)
}

/// Quick test: an edge `ab` of `c` whose outer neighbours are joined by a
/// path avoiding `c` can be replaced by that longer route.
fn has_detour(g: &CubicGraph, c: &Cycle) -> bool {
    let vs = c.vertex_set();
    let outside = Bits::full(g.order()).difference(vs);
    let third = |v: usize| g.neighbors(v).into_iter().find(|&w| !c.edge_set().contains(g.edge_index(v, w).unwrap()));
    let mut comp = vec![u8::MAX; g.order()];
    let mut next = 0u8;
    for s in outside.iter() {
        if comp[s] != u8::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = next;
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if outside.contains(w) && comp[w] == u8::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    let seq = c.vertex_sequence();
    let k = seq.len();
    (0..k).any(|i| {
        let (a, b) = (seq[i], seq[(i + 1) % k]);
        match (third(a), third(b)) {
            (Some(x), Some(y)) => outside.contains(x) && outside.contains(y) && comp[x] == comp[y],
            _ => false,
        }
    })
}

/// Depth-first search for a cycle other than `c` through all of `V(c)`.
fn has_covering_cycle(g: &CubicGraph, c: &Cycle) -> bool {
    let req = c.vertex_set();
    let s = c.vertices().next().unwrap();
    struct State<'a> {
        g: &'a CubicGraph,
        req: Bits,
        target: &'a Cycle,
        s: usize,
        path: Vec<u8>,
        on_path: Bits,
        edges: Bits,
    }
    fn feasible(st: &State, last: usize) -> bool {
        // Every required vertex not yet visited must be reachable from the
        // current end through unvisited vertices.
        let missing = st.req.difference(st.on_path);
        if missing.is_empty() {
            return true;
        }
        let mut seen = Bits::single(last);
        let mut stack = vec![last];
        while let Some(u) = stack.pop() {
            for w in st.g.neighbors(u) {
                if !st.on_path.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        missing.is_subset(seen)
    }
    fn rec(st: &mut State) -> bool {
        let last = *st.path.last().unwrap() as usize;
        for w in st.g.neighbors(last) {
            let e = st.g.edge_index(last, w).unwrap();
            if w == st.s {
                if st.path.len() >= 3 && st.req.is_subset(st.on_path) {
                    let mut closed = st.edges;
                    closed.insert(e);
                    if closed != st.target.edge_set() {
                        return true;
                    }
                }
                continue;
            }
            if st.on_path.contains(w) {
                continue;
            }
            st.on_path.insert(w);
            st.path.push(w as u8);
            st.edges.insert(e);
            if feasible(st, w) && rec(st) {
                return true;
            }
            st.edges.remove(e);
            st.path.pop();
            st.on_path.remove(w);
        }
        false
    }
    let mut st = State {
        g,
        req,
        target: c,
        s,
        path: vec![s as u8],
        on_path: Bits::single(s),
        edges: Bits::EMPTY,
    };
    rec(&mut st)
}

/// All stable cycles.
pub fn stable_cycles(g: &CubicGraph) -> Vec<Cycle> {
    let mut out = Vec::new();
    for_each_cycle(g, 3, g.order(), |c| {
        if is_stable(g, c) {
            out.push(c.clone());
        }
        true
    });
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    out
}

/// Whether `d` satisfies the semiextension path condition for `c`.
///
/// Paths consisting of a single edge are included. A path condition holds
/// when `x` and `y` lie on the same cycle of `C Δ D`.
pub fn is_semiextension(g: &CubicGraph, c: &Cycle, d: &Cycle, strong: bool) -> bool {
    if c.edge_set() == d.edge_set() {
        return false;
    }
    let n = g.order();
    let sd = c.edge_set().sym_diff(d.edge_set());
    // Components of C Δ D; u8::MAX marks vertices it does not touch.
    let mut sd_comp = vec![u8::MAX; n];
    let mut count = 0u8;
    for e in sd.iter() {
        let (start, _) = g.edge(e);
        if sd_comp[start] != u8::MAX {
            continue;
        }
        let mut stack = vec![start];
        sd_comp[start] = count;
        while let Some(u) = stack.pop() {
            for (w, f) in g.neighbors(u).into_iter().zip(g.incident(u)) {
                if sd.contains(f) && sd_comp[w] == u8::MAX {
                    sd_comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    if strong && count != 1 {
        return false;
    }
    let vc = c.vertex_set();
    let vd = d.vertex_set();
    let inside = vc.union(vd);
    let x_set = vc.difference(vd);
    if x_set.is_empty() {
        return true;
    }
    // For each component of the outside region: the single C Δ D component
    // label shared by all its attachments, or NONE / MIXED.
    const NONE: u16 = 0x100;
    const MIXED: u16 = 0x200;
    let mut region = vec![u8::MAX; n];
    let mut region_label: Vec<u16> = Vec::new();
    for s in 0..n {
        if inside.contains(s) || region[s] != u8::MAX {
            continue;
        }
        let id = region_label.len() as u8;
        let mut label = NONE;
        let mut stack = vec![s];
        region[s] = id;
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if inside.contains(w) {
                    let l = if sd_comp[w] == u8::MAX { MIXED } else { sd_comp[w] as u16 };
                    label = match label {
                        NONE => l,
                        x if x == l => x,
                        _ => MIXED,
                    };
                } else if region[w] == u8::MAX {
                    region[w] = id;
                    stack.push(w);
                }
            }
        }
        region_label.push(label);
    }
    for x in x_set.iter() {
        let cx = sd_comp[x];
        debug_assert!(cx != u8::MAX);
        for y in g.neighbors(x) {
            if inside.contains(y) {
                if sd_comp[y] != cx {
                    return false;
                }
            } else {
                // Every attachment other than x is reachable; x itself is
                // on component cx, so the shared label must be cx.
                let l = region_label[region[y] as usize];
                if l != cx as u16 {
                    return false;
                }
            }
        }
    }
    true
}

/// Cycles sorted by length and sequence, searched in that order for
/// semiextension witnesses.
pub struct SemiextensionIndex<'g> {
    g: &'g CubicGraph,
    cycles: Vec<Cycle>,
}

impl<'g> SemiextensionIndex<'g> {
    pub fn new(g: &'g CubicGraph) -> Self {
        SemiextensionIndex { g, cycles: cycles(g, 3, g.order(), None) }
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// First witness `D` in candidate order, examining at most `budget`
    /// candidates.
    pub fn find(&self, c: &Cycle, strong: bool, budget: usize) -> Outcome<Cycle> {
        for (i, d) in self.cycles.iter().enumerate() {
            if i >= budget {
                return Outcome::ResourceLimit;
            }
            if is_semiextension(self.g, c, d, strong) {
                return Outcome::Found(d.clone());
            }
        }
        Outcome::Exhausted
    }
}

pub fn semiextension(g: &CubicGraph, c: &Cycle, strong: bool) -> Outcome<Cycle> {
    SemiextensionIndex::new(g).find(c, strong, usize::MAX)
}
