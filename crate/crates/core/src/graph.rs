//! The cubic graph type and its connectivity and girth primitives.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bits::Bits;
use crate::rng::SplitMix;

/// Largest supported order. Edge sets of such graphs still fit in a [`Bits`].
pub const MAX_ORDER: usize = 84;

/// Raw adjacency of a cubic graph: three neighbours per vertex.
pub type Adjacency = [[u8; 3]];

/// Reasons a neighbour list does not describe a simple cubic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    OddOrder(usize),
    OrderTooSmall(usize),
    OrderTooLarge(usize),
    ListCount { expected: usize, found: usize },
    Degree { vertex: usize, degree: usize },
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    Loop { vertex: usize },
    Parallel { u: usize, v: usize },
    Asymmetric { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OddOrder(n) => write!(f, "order {n} is odd"),
            GraphError::OrderTooSmall(n) => write!(f, "order {n} is below 4"),
            GraphError::OrderTooLarge(n) => {
                write!(f, "order {n} exceeds the supported maximum {MAX_ORDER}")
            }
            GraphError::ListCount { expected, found } => {
                write!(f, "expected {expected} neighbour lists, found {found}")
            }
            GraphError::Degree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, expected 3")
            }
            GraphError::NeighborOutOfRange { vertex, neighbor } => {
                write!(f, "vertex {vertex} lists neighbour {neighbor} outside the vertex range")
            }
            GraphError::Loop { vertex } => write!(f, "vertex {vertex} has a loop"),
            GraphError::Parallel { u, v } => write!(f, "edge {u}-{v} is listed twice"),
            GraphError::Asymmetric { u, v } => {
                write!(f, "vertex {u} lists {v} but {v} does not list {u}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Cyclic edge connectivity. Graphs without two vertex-disjoint cycles have
/// no cycle-separating cut at all and report [`ConnectivityValue::Unbounded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectivityValue {
    Finite(u32),
    Unbounded,
}

impl ConnectivityValue {
    /// `true` when the graph is cyclically `k`-edge-connected.
    pub fn at_least(self, k: u32) -> bool {
        match self {
            ConnectivityValue::Finite(v) => v >= k,
            ConnectivityValue::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ConnectivityValue::Finite(v) => Some(v),
            ConnectivityValue::Unbounded => None,
        }
    }
}

impl PartialOrd for ConnectivityValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConnectivityValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ConnectivityValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Unbounded) => Ordering::Less,
            (Unbounded, Finite(_)) => Ordering::Greater,
            (Unbounded, Unbounded) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ConnectivityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectivityValue::Finite(k) => write!(f, "{k}"),
            ConnectivityValue::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// A simple cubic graph on vertices `0..n` with edges indexed `0..3n/2`.
///
/// Neighbour lists are sorted, and edge indices follow the lexicographic
/// order of the `(min, max)` endpoint pairs, so two graphs with the same
/// labelled edge set always agree on indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubicGraph {
    adj: Vec<[u8; 3]>,
    edges: Vec<[u8; 2]>,
    inc: Vec<[u8; 3]>,
}

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubicGraph")
            .field("order", &self.order())
            .field("adj", &self.adj)
            .finish()
    }
}

impl CubicGraph {
    /// Validates per-vertex neighbour lists (0-based) and builds the graph.
    pub fn from_neighbor_lists<L: AsRef<[usize]>>(
        order: usize,
        lists: &[L],
    ) -> Result<CubicGraph, GraphError> {
        if order % 2 == 1 {
            return Err(GraphError::OddOrder(order));
        }
        if order < 4 {
            return Err(GraphError::OrderTooSmall(order));
        }
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        if lists.len() != order {
            return Err(GraphError::ListCount { expected: order, found: lists.len() });
        }
        let mut adj = vec![[0u8; 3]; order];
        for (v, list) in lists.iter().enumerate() {
            let list = list.as_ref();
            if list.len() != 3 {
                return Err(GraphError::Degree { vertex: v, degree: list.len() });
            }
            for (i, &w) in list.iter().enumerate() {
                if w >= order {
                    return Err(GraphError::NeighborOutOfRange { vertex: v, neighbor: w });
                }
                if w == v {
                    return Err(GraphError::Loop { vertex: v });
                }
                adj[v][i] = w as u8;
            }
            adj[v].sort_unstable();
            if adj[v][0] == adj[v][1] || adj[v][1] == adj[v][2] {
                let dup = if adj[v][0] == adj[v][1] { adj[v][0] } else { adj[v][1] };
                return Err(GraphError::Parallel { u: v, v: dup as usize });
            }
        }
        for v in 0..order {
            for &w in &adj[v] {
                if !adj[w as usize].contains(&(v as u8)) {
                    return Err(GraphError::Asymmetric { u: v, v: w as usize });
                }
            }
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Builds a graph from an undirected edge list.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<CubicGraph, GraphError> {
        let mut lists: Vec<Vec<usize>> = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order {
                return Err(GraphError::NeighborOutOfRange { vertex: v, neighbor: u });
            }
            if v >= order {
                return Err(GraphError::NeighborOutOfRange { vertex: u, neighbor: v });
            }
            lists[u].push(v);
            if u != v {
                lists[v].push(u);
            }
        }
        CubicGraph::from_neighbor_lists(order, &lists)
    }

    /// Builds from raw adjacency that is already known to be simple and
    /// symmetric (used by the generator and by reductions).
    pub fn from_adjacency(adj: &Adjacency) -> CubicGraph {
        let mut a = adj.to_vec();
        for row in a.iter_mut() {
            row.sort_unstable();
        }
        debug_assert!(is_valid_adjacency(&a));
        Self::from_sorted_adjacency(a)
    }

    fn from_sorted_adjacency(adj: Vec<[u8; 3]>) -> CubicGraph {
        let n = adj.len();
        let mut edges = Vec::with_capacity(3 * n / 2);
        for (v, row) in adj.iter().enumerate() {
            for &w in row {
                if (v as u8) < w {
                    edges.push([v as u8, w]);
                }
            }
        }
        // Rows are sorted and v ascends, so `edges` is already lexicographic.
        let mut inc = vec![[0u8; 3]; n];
        for (e, &[a, b]) in edges.iter().enumerate() {
            let (a, b) = (a as usize, b as usize);
            let ia = adj[a].iter().position(|&x| x == b as u8).unwrap();
            let ib = adj[b].iter().position(|&x| x == a as u8).unwrap();
            inc[a][ia] = e as u8;
            inc[b][ib] = e as u8;
        }
        CubicGraph { adj, edges, inc }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, always `3n/2`.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        let r = self.adj[v];
        [r[0] as usize, r[1] as usize, r[2] as usize]
    }

    /// Edge indices of the edges at `v`, aligned with [`Self::neighbors`].
    #[inline]
    pub fn incident(&self, v: usize) -> [usize; 3] {
        let r = self.inc[v];
        [r[0] as usize, r[1] as usize, r[2] as usize]
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e];
        (a as usize, b as usize)
    }

    pub fn edge_list(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&[a, b]| (a as usize, b as usize))
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let i = self.adj[u].iter().position(|&w| w as usize == v)?;
        Some(self.inc[u][i] as usize)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&(v as u8))
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edge(e);
        if a == v {
            b
        } else {
            a
        }
    }

    #[inline]
    pub fn adjacency(&self) -> &Adjacency {
        &self.adj
    }

    /// Edges sharing an endpoint with `e`, excluding `e`.
    pub fn edges_adjacent(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edge(e);
        let (c, d) = self.edge(f);
        e != f && (a == c || a == d || b == c || b == d)
    }

    /// Relabels by `perm`, mapping old vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> CubicGraph {
        let n = self.order();
        let mut adj = vec![[0u8; 3]; n];
        for v in 0..n {
            for i in 0..3 {
                adj[perm[v]][i] = perm[self.adj[v][i] as usize] as u8;
            }
        }
        CubicGraph::from_adjacency(&adj)
    }

    /// The edge set of the vertex set `s` (edges with both ends in `s`).
    pub fn induced_edges(&self, s: Bits) -> Bits {
        let mut out = Bits::EMPTY;
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if s.contains(a as usize) && s.contains(b as usize) {
                out.insert(e);
            }
        }
        out
    }

    pub fn has_bridge(&self) -> bool {
        (0..self.size()).any(|e| components_without(self, Bits::single(e)).1 > 1)
    }

    pub fn is_connected(&self) -> bool {
        components_without(self, Bits::EMPTY).1 == 1
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> usize {
        girth_of(&self.adj)
    }

    /// Minimum number of vertices whose removal disconnects the graph
    /// (`n - 1` for `K4`).
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.order();
        if n == 4 {
            return 3;
        }
        if !self.is_connected() {
            return 0;
        }
        if has_cut_vertex(&self.adj, Bits::EMPTY) {
            return 1;
        }
        for v in 0..n {
            if has_cut_vertex(&self.adj, Bits::single(v)) {
                return 2;
            }
        }
        3
    }

    /// Largest `k` such that deleting fewer than `k` edges never leaves two
    /// components that both contain a cycle.
    pub fn cyclic_edge_connectivity(&self) -> ConnectivityValue {
        cyclic_edge_connectivity(self)
    }
}

/// Checks symmetry, simplicity and degree of raw adjacency.
pub fn is_valid_adjacency(adj: &Adjacency) -> bool {
    let n = adj.len();
    for v in 0..n {
        let r = adj[v];
        for i in 0..3 {
            let w = r[i] as usize;
            if w >= n || w == v {
                return false;
            }
            for j in 0..i {
                if r[j] == r[i] {
                    return false;
                }
            }
            if !adj[w].contains(&(v as u8)) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn girth_of(adj: &Adjacency) -> usize {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![u8::MAX; n];
    let mut parent = vec![u8::MAX; n];
    let mut queue = vec![0u8; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = u8::MAX);
        dist[s] = 0;
        parent[s] = u8::MAX;
        let (mut head, mut tail) = (0, 0);
        queue[tail] = s as u8;
        tail += 1;
        'bfs: while head < tail {
            let u = queue[head] as usize;
            head += 1;
            if 2 * dist[u] as usize + 1 >= best {
                break;
            }
            for &w in &adj[u] {
                let w = w as usize;
                if dist[w] == u8::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u as u8;
                    queue[tail] = w as u8;
                    tail += 1;
                } else if parent[u] as usize != w {
                    let len = dist[u] as usize + dist[w] as usize + 1;
                    if len < best {
                        best = len;
                    }
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    best
}

/// Connected components after deleting the edges in `removed`. Returns a
/// component id per vertex and the component count.
pub(crate) fn components_without(g: &CubicGraph, removed: Bits) -> (Vec<u8>, usize) {
    let n = g.order();
    let mut comp = vec![u8::MAX; n];
    let mut count = 0;
    let mut stack = Vec::with_capacity(n);
    for s in 0..n {
        if comp[s] != u8::MAX {
            continue;
        }
        comp[s] = count as u8;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for i in 0..3 {
                if removed.contains(g.inc[u][i] as usize) {
                    continue;
                }
                let w = g.adj[u][i] as usize;
                if comp[w] == u8::MAX {
                    comp[w] = count as u8;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

/// Whether the graph minus the vertex set `gone` has a cut vertex
/// (or is disconnected).
fn has_cut_vertex(adj: &Adjacency, gone: Bits) -> bool {
    let n = adj.len();
    let alive: Vec<usize> = (0..n).filter(|&v| !gone.contains(v)).collect();
    if alive.len() <= 2 {
        return false;
    }
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut time = 1u32;
    let root = alive[0];
    // Iterative DFS computing low-links.
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut root_children = 0;
    let mut found = false;
    while let Some(&mut (u, p, ref mut i)) = stack.last_mut() {
        if *i < 3 {
            let w = adj[u][*i] as usize;
            *i += 1;
            if gone.contains(w) || w == p {
                continue;
            }
            if disc[w] == 0 {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if u == root {
                    root_children += 1;
                }
                stack.push((w, u, 0));
            } else if disc[w] < low[u] {
                low[u] = disc[w];
            }
        } else {
            stack.pop();
            if let Some(&(pu, _, _)) = stack.last() {
                if low[u] < low[pu] {
                    low[pu] = low[u];
                }
                if pu != root && low[u] >= disc[pu] {
                    found = true;
                }
            }
        }
    }
    if alive.iter().any(|&v| disc[v] == 0) {
        return true;
    }
    found || root_children > 1
}

/// Random cut-space labels: an edge set is an edge cut exactly when the XOR
/// of its labels is zero (up to hash collisions, which callers re-check).
pub(crate) fn cut_labels(adj: &Adjacency, edges: &[[u8; 2]], seed: u64) -> Option<Vec<u64>> {
    let n = adj.len();
    let mut rng = SplitMix::new(seed);
    let mut parent = vec![u8::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in &adj[u] {
            let w = w as usize;
            if !seen[w] {
                seen[w] = true;
                parent[w] = u as u8;
                stack.push(w);
            }
        }
    }
    if order.len() != n {
        return None;
    }
    let mut acc = vec![0u64; n];
    let mut labels = vec![0u64; edges.len()];
    let mut tree_edge_of = vec![usize::MAX; n];
    for (e, &[a, b]) in edges.iter().enumerate() {
        let (a, b) = (a as usize, b as usize);
        if parent[b] as usize == a && tree_edge_of[b] == usize::MAX {
            tree_edge_of[b] = e;
        } else if parent[a] as usize == b && tree_edge_of[a] == usize::MAX {
            tree_edge_of[a] = e;
        } else {
            let r = rng.next_u64() | 1;
            labels[e] = r;
            acc[a] ^= r;
            acc[b] ^= r;
        }
    }
    for &v in order.iter().rev() {
        if parent[v] != u8::MAX {
            let p = parent[v] as usize;
            labels[tree_edge_of[v]] = acc[v];
            acc[p] ^= acc[v];
        }
    }
    Some(labels)
}

fn edge_pairs(adj: &Adjacency) -> Vec<[u8; 2]> {
    let mut edges = Vec::with_capacity(adj.len() * 3 / 2);
    for (v, row) in adj.iter().enumerate() {
        for &w in row {
            if (v as u8) < w {
                edges.push([v as u8, w]);
            }
        }
    }
    edges
}

fn has_triangle(adj: &Adjacency) -> bool {
    adj.iter().any(|r| {
        adj[r[0] as usize].contains(&r[1])
            || adj[r[0] as usize].contains(&r[2])
            || adj[r[1] as usize].contains(&r[2])
    })
}

/// Whether deleting `cut` disconnects the graph given by `adj`/`edges`.
fn disconnects(adj: &Adjacency, edges: &[[u8; 2]], cut: &[usize]) -> bool {
    let n = adj.len();
    let blocked = |u: usize, w: usize| {
        cut.iter().any(|&e| {
            let [a, b] = edges[e];
            (a as usize == u && b as usize == w) || (a as usize == w && b as usize == u)
        })
    };
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            let w = w as usize;
            if !seen[w] && !blocked(u, w) {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count < n
}

/// Fast test for cyclic 4-edge-connectivity on raw adjacency.
///
/// Triangle-free connected cubic graphs are cyclically 4-edge-connected
/// exactly when they have no bridge, no 2-edge cut and no 3-edge cut other
/// than a vertex star; any such cut leaves a cycle on both sides.
pub fn is_cyclically_4_connected(adj: &Adjacency) -> bool {
    let n = adj.len();
    if n == 4 {
        return true;
    }
    if has_triangle(adj) {
        return false;
    }
    let edges = edge_pairs(adj);
    let labels = match cut_labels(adj, &edges, 0x5eed_cafe_u64 ^ n as u64) {
        Some(l) => l,
        None => return false,
    };
    let m = edges.len();
    for (e, &label) in labels.iter().enumerate() {
        if label == 0 && disconnects(adj, &edges, &[e]) {
            return false;
        }
    }
    let mut sorted: Vec<(u64, u8)> = labels.iter().enumerate().map(|(e, &l)| (l, e as u8)).collect();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 && disconnects(adj, &edges, &[w[0].1 as usize, w[1].1 as usize]) {
            return false;
        }
    }
    for i in 0..m {
        let [a, b] = edges[i];
        for j in i + 1..m {
            let [c, d] = edges[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let x = labels[i] ^ labels[j];
            if let Ok(p) = sorted.binary_search_by(|probe| probe.0.cmp(&x)) {
                // Equal labels were ruled out above, so the hit is unique.
                let k = sorted[p].1 as usize;
                if k != i && k != j && disconnects(adj, &edges, &[i, j, k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether deleting the edge set `cut` leaves at least two components that
/// contain a cycle.
pub(crate) fn is_cyclic_cut(g: &CubicGraph, cut: Bits) -> bool {
    let (comp, count) = components_without(g, cut);
    if count < 2 {
        return false;
    }
    let mut verts = vec![0usize; count];
    let mut edges = vec![0usize; count];
    for &c in &comp {
        verts[c as usize] += 1;
    }
    for e in 0..g.size() {
        if cut.contains(e) {
            continue;
        }
        let (a, _) = g.edge(e);
        edges[comp[a] as usize] += 1;
    }
    (0..count).filter(|&c| edges[c] >= verts[c]).count() >= 2
}

fn has_two_disjoint_cycles(g: &CubicGraph) -> bool {
    let n = g.order();
    if n >= 2 * g.girth() {
        return true;
    }
    let mut found = false;
    crate::cycle::for_each_cycle(g, 3, n, |c| {
        let rest = Bits::full(n).difference(c.vertex_set());
        let sub = g.induced_edges(rest);
        // A forest on k vertices has at most k-1 edges.
        if sub.len() >= rest.len() && rest.len() >= 3 && has_cycle_in(g, rest, sub) {
            found = true;
            return false;
        }
        true
    });
    found
}

fn has_cycle_in(g: &CubicGraph, verts: Bits, edges: Bits) -> bool {
    // Union-find over the induced subgraph.
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in edges.iter() {
        let (a, b) = g.edge(e);
        debug_assert!(verts.contains(a) && verts.contains(b));
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return true;
        }
        parent[ra] = rb;
    }
    false
}

/// Calls `f` with every `k`-subset of edges whose labels XOR to zero (each
/// possibly several times). Stops early when `f` returns `true`.
fn zero_xor_subsets(labels: &[u64], k: usize, mut f: impl FnMut(Bits) -> bool) -> bool {
    let m = labels.len();
    if k == 1 {
        return (0..m).any(|e| labels[e] == 0 && f(Bits::single(e)));
    }
    let a = k / 2;
    let b = k - a;
    let mut left: Vec<(u64, Bits)> = Vec::new();
    subsets(m, a, &mut |s| {
        let x = s.iter().fold(0u64, |acc, e| acc ^ labels[e]);
        left.push((x, s));
    });
    left.sort_unstable();
    let mut stop = false;
    subsets(m, b, &mut |s| {
        if stop {
            return;
        }
        let x = s.iter().fold(0u64, |acc, e| acc ^ labels[e]);
        let start = left.partition_point(|p| p.0 < x);
        for &(y, t) in &left[start..] {
            if y != x {
                break;
            }
            if t.intersection(s).is_empty() && f(t.union(s)) {
                stop = true;
                return;
            }
        }
    });
    stop
}

fn subsets(m: usize, k: usize, f: &mut impl FnMut(Bits)) {
    fn rec(start: usize, m: usize, k: usize, cur: Bits, f: &mut impl FnMut(Bits)) {
        if k == 0 {
            f(cur);
            return;
        }
        for e in start..=m - k {
            let mut next = cur;
            next.insert(e);
            rec(e + 1, m, k - 1, next, f);
        }
    }
    if k <= m {
        rec(0, m, k, Bits::EMPTY, f);
    }
}

fn cyclic_edge_connectivity(g: &CubicGraph) -> ConnectivityValue {
    if !g.is_connected() {
        return ConnectivityValue::Finite(0);
    }
    if !has_two_disjoint_cycles(g) {
        return ConnectivityValue::Unbounded;
    }
    let labels = cut_labels(&g.adj, &g.edges, 0x0c1c_11c0_u64).expect("connected");
    for k in 1..=g.size() {
        if zero_xor_subsets(&labels, k, |s| is_cyclic_cut(g, s)) {
            return ConnectivityValue::Finite(k as u32);
        }
    }
    ConnectivityValue::Unbounded
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests_support::*;

    #[test]
    fn build_rejects_malformed_lists() {
        let lists = [vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1]];
        assert_eq!(
            CubicGraph::from_neighbor_lists(4, &lists),
            Err(GraphError::Degree { vertex: 3, degree: 2 })
        );
        let lists = [vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 1]];
        assert!(matches!(
            CubicGraph::from_neighbor_lists(4, &lists),
            Err(GraphError::Parallel { .. })
        ));
        let lists = [vec![0, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert_eq!(CubicGraph::from_neighbor_lists(4, &lists), Err(GraphError::Loop { vertex: 0 }));
        let lists = [vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2], vec![0, 1, 2]];
        assert_eq!(CubicGraph::from_neighbor_lists(5, &lists), Err(GraphError::OddOrder(5)));
        let lists = [
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 4],
            vec![0, 1, 5],
            vec![2, 3, 5],
            vec![1, 3, 4],
        ];
        assert!(matches!(
            CubicGraph::from_neighbor_lists(6, &lists),
            Err(GraphError::Asymmetric { .. })
        ));
    }

    #[test]
    fn edge_counts_and_indices() {
        let k4 = k4();
        assert_eq!(k4.size(), 6);
        assert_eq!(petersen().size(), 15);
        assert_eq!(k4.edge(0), (0, 1));
        assert_eq!(k4.edge(5), (2, 3));
        for v in 0..4 {
            for (i, &w) in k4.neighbors(v).iter().enumerate() {
                assert_eq!(k4.edge_index(v, w), Some(k4.incident(v)[i]));
            }
        }
    }

    #[test]
    fn girth_values() {
        assert_eq!(k4().girth(), 3);
        assert_eq!(k33().girth(), 4);
        assert_eq!(petersen().girth(), 5);
        assert_eq!(prism().girth(), 3);
        assert_eq!(cube().girth(), 4);
    }

    #[test]
    fn vertex_connectivity_values() {
        assert_eq!(k4().vertex_connectivity(), 3);
        assert_eq!(petersen().vertex_connectivity(), 3);
        assert_eq!(bridged_pair().vertex_connectivity(), 1);
    }

    #[test]
    fn cyclic_connectivity_values() {
        assert_eq!(petersen().cyclic_edge_connectivity(), ConnectivityValue::Finite(5));
        assert_eq!(prism().cyclic_edge_connectivity(), ConnectivityValue::Finite(3));
        assert_eq!(k4().cyclic_edge_connectivity(), ConnectivityValue::Unbounded);
        assert_eq!(k33().cyclic_edge_connectivity(), ConnectivityValue::Unbounded);
        assert_eq!(cube().cyclic_edge_connectivity(), ConnectivityValue::Finite(4));
        assert_eq!(bridged_pair().cyclic_edge_connectivity(), ConnectivityValue::Finite(1));
        assert!(is_cyclically_4_connected(petersen().adjacency()));
        assert!(!is_cyclically_4_connected(prism().adjacency()));
        assert!(is_cyclically_4_connected(k33().adjacency()));
        assert!(!is_cyclically_4_connected(bridged_pair().adjacency()));
    }

    #[test]
    fn connectivity_ordering() {
        assert!(ConnectivityValue::Finite(7) < ConnectivityValue::Unbounded);
        assert!(ConnectivityValue::Unbounded.at_least(100));
        assert!(!ConnectivityValue::Finite(3).at_least(4));
    }
}

/// Small named graphs shared by unit tests across modules.
#[cfg(test)]
pub(crate) mod tests_support {
    use super::CubicGraph;
    use alloc::vec::Vec;

    pub fn from_edges(n: usize, e: &[(usize, usize)]) -> CubicGraph {
        CubicGraph::from_edges(n, e).unwrap()
    }

    pub fn k4() -> CubicGraph {
        from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    pub fn k33() -> CubicGraph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        from_edges(6, &e)
    }

    pub fn prism() -> CubicGraph {
        from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    }

    pub fn cube() -> CubicGraph {
        let mut e = Vec::new();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                let w = v ^ bit;
                if v < w {
                    e.push((v, w));
                }
            }
        }
        from_edges(8, &e)
    }

    pub fn petersen() -> CubicGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        from_edges(10, &e)
    }

    /// Two copies of K4 minus an edge joined by a bridge.
    pub fn bridged_pair() -> CubicGraph {
        from_edges(
            10,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (3, 4),
                (4, 5),
                (5, 6),
                (5, 9),
                (6, 7),
                (6, 8),
                (7, 8),
                (7, 9),
                (8, 9),
            ],
        )
    }
}
