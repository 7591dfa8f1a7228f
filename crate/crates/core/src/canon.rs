//! Canonical labelling, automorphism groups and isomorphism tests.
//!
//! The search is individualisation-refinement: equitable partitions are
//! refined from an ordered partition seeded by short-cycle counts, the first
//! non-singleton cell is split by individualising each of its vertices, and
//! the lexicographically smallest leaf code is the canonical form. Leaves
//! equal to the first or the best leaf yield automorphisms, which prune
//! sibling branches and give the group order through the stabiliser chain
//! of the first path.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Adjacency, CubicGraph};

/// Relabel-invariant encoding of a cubic graph: the order followed by the
/// sorted neighbour positions of each vertex in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> CubicGraph {
        let n = self.order();
        let adj: Vec<[u8; 3]> =
            (0..n).map(|v| [self.0[1 + 3 * v], self.0[2 + 3 * v], self.0[3 + 3 * v]]).collect();
        CubicGraph::from_adjacency(&adj)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Everything the labelling search learns about a graph.
#[derive(Clone, Debug)]
pub struct Canon {
    /// Canonical position of each vertex.
    pub labeling: Vec<u8>,
    pub code: CanonicalCode,
    /// Automorphisms found during the search, as vertex maps. They generate
    /// the full automorphism group.
    pub generators: Vec<Vec<u8>>,
    pub group_size: u128,
    /// Smallest vertex in the orbit of each vertex.
    pub orbits: Vec<u8>,
}

impl Canon {
    pub fn orbit_count(&self) -> usize {
        self.orbits.iter().enumerate().filter(|&(v, &r)| v == r as usize).count()
    }
}

pub fn canonical_form(g: &CubicGraph) -> Canon {
    canonical_form_adj(g.adjacency())
}

pub fn canonical_code(g: &CubicGraph) -> CanonicalCode {
    canonical_form(g).code
}

pub fn are_isomorphic(g: &CubicGraph, h: &CubicGraph) -> bool {
    g.order() == h.order() && canonical_code(g) == canonical_code(h)
}

pub fn automorphism_count(g: &CubicGraph) -> u128 {
    canonical_form(g).group_size
}

pub fn is_vertex_transitive(g: &CubicGraph) -> bool {
    canonical_form(g).orbit_count() == 1
}

/// Calls `f` once for every cycle of length at most `max_len`, with its
/// vertex sequence starting at the smallest vertex.
pub(crate) fn short_cycles(adj: &Adjacency, max_len: usize, mut f: impl FnMut(&[u8])) {
    let n = adj.len();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n];
    fn extend(
        adj: &Adjacency,
        max_len: usize,
        path: &mut Vec<u8>,
        on_path: &mut [bool],
        f: &mut impl FnMut(&[u8]),
    ) {
        let s = path[0];
        let last = *path.last().unwrap() as usize;
        for &w in &adj[last] {
            if w == s {
                if path.len() >= 3 && path[1] < path[path.len() - 1] {
                    f(path);
                }
            } else if w > s && !on_path[w as usize] && path.len() < max_len {
                on_path[w as usize] = true;
                path.push(w);
                extend(adj, max_len, path, on_path, f);
                path.pop();
                on_path[w as usize] = false;
            }
        }
    }
    for s in 0..n {
        path.clear();
        path.push(s as u8);
        on_path[s] = true;
        extend(adj, max_len, &mut path, &mut on_path, &mut f);
        on_path[s] = false;
    }
}

/// Per-vertex counts of the 3-, 4-, 5- and 6-cycles through it, packed.
pub(crate) fn vertex_cycle_profile(adj: &Adjacency) -> Vec<u32> {
    let mut counts = vec![[0u8; 4]; adj.len()];
    short_cycles(adj, 6, |c| {
        for &v in c {
            let slot = &mut counts[v as usize][c.len() - 3];
            *slot = slot.saturating_add(1);
        }
    });
    counts.iter().map(|c| u32::from_be_bytes(*c)).collect()
}

struct UnionFind(Vec<u8>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u8).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let p = self.0[x] as usize;
            self.0[x] = self.0[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo as u8;
        }
    }
}

fn orbits_of(n: usize, gens: &[Vec<u8>]) -> UnionFind {
    let mut uf = UnionFind::new(n);
    for gamma in gens {
        for (v, &w) in gamma.iter().enumerate() {
            uf.union(v, w as usize);
        }
    }
    uf
}

/// Orbit partition of the vertices under the group generated by `gens`.
pub(crate) fn orbit_representatives(n: usize, gens: &[Vec<u8>]) -> Vec<u8> {
    let mut uf = orbits_of(n, gens);
    (0..n).map(|v| uf.find(v) as u8).collect()
}

/// Refines `ranks` (each vertex's cell start) to the coarsest equitable
/// partition finer than it. Cells split in an order that depends only on
/// the structure, never on labels.
fn refine(adj: &Adjacency, ranks: &mut [u32], scratch: &mut Vec<(u32, [u32; 3], u8)>) {
    let n = adj.len();
    let mut cells = count_cells(ranks);
    loop {
        if cells == n {
            return;
        }
        scratch.clear();
        for v in 0..n {
            let mut nb = [
                ranks[adj[v][0] as usize],
                ranks[adj[v][1] as usize],
                ranks[adj[v][2] as usize],
            ];
            nb.sort_unstable();
            scratch.push((ranks[v], nb, v as u8));
        }
        scratch.sort_unstable_by_key(|&(rank, nb, _)| (rank, nb));
        let mut start = 0u32;
        for i in 0..n {
            if i > 0 && (scratch[i].0, scratch[i].1) != (scratch[i - 1].0, scratch[i - 1].1) {
                start = i as u32;
            }
            ranks[scratch[i].2 as usize] = start;
        }
        let now = count_cells(ranks);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn count_cells(ranks: &[u32]) -> usize {
    let mut seen = 0u128;
    for &r in ranks {
        seen |= 1u128 << r;
    }
    seen.count_ones() as usize
}

struct Leaf {
    code: Vec<u8>,
    pos: Vec<u8>,
}

struct Search<'a> {
    adj: &'a Adjacency,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<u8>,
    generators: Vec<Vec<u8>>,
    group_size: u128,
    scratch: Vec<(u32, [u32; 3], u8)>,
}

impl<'a> Search<'a> {
    fn leaf(&self, ranks: &[u32]) -> Leaf {
        let n = self.adj.len();
        let pos: Vec<u8> = ranks.iter().map(|&r| r as u8).collect();
        let mut inv = vec![0u8; n];
        for (v, &p) in pos.iter().enumerate() {
            inv[p as usize] = v as u8;
        }
        let mut code = Vec::with_capacity(3 * n);
        for &v in &inv {
            let r = self.adj[v as usize];
            let mut nb = [pos[r[0] as usize], pos[r[1] as usize], pos[r[2] as usize]];
            nb.sort_unstable();
            code.extend_from_slice(&nb);
        }
        Leaf { code, pos }
    }

    /// The automorphism sending `from`'s vertex at each position to `to`'s.
    fn automorphism(from: &Leaf, to: &Leaf) -> Vec<u8> {
        let n = from.pos.len();
        let mut inv_to = vec![0u8; n];
        for (v, &p) in to.pos.iter().enumerate() {
            inv_to[p as usize] = v as u8;
        }
        (0..n).map(|v| inv_to[from.pos[v] as usize]).collect()
    }

    /// Explores the node reached by `path`. Returns a depth to unwind to
    /// when an automorphism shows the rest of the subtree is redundant.
    fn visit(&mut self, ranks: &[u32], path: &mut Vec<u8>) -> Option<usize> {
        let n = self.adj.len();
        let depth = path.len();
        if count_cells(ranks) == n {
            let leaf = self.leaf(ranks);
            let Some(first) = &self.first else {
                self.first_path = path.clone();
                self.best = Some(Leaf { code: leaf.code.clone(), pos: leaf.pos.clone() });
                self.first = Some(leaf);
                return None;
            };
            if leaf.code == first.code {
                self.generators.push(Self::automorphism(first, &leaf));
                let lcp = path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
                return Some(lcp);
            }
            let best = self.best.as_ref().unwrap();
            match leaf.code.cmp(&best.code) {
                core::cmp::Ordering::Less => self.best = Some(leaf),
                core::cmp::Ordering::Equal => {
                    let gamma = Self::automorphism(best, &leaf);
                    self.generators.push(gamma);
                }
                core::cmp::Ordering::Greater => {}
            }
            return None;
        }

        // Target cell: the non-singleton cell with the smallest start.
        let mut sizes = vec![0u8; n];
        for &r in ranks {
            sizes[r as usize] += 1;
        }
        let target = (0..n).find(|&r| sizes[r] > 1).unwrap() as u32;
        let cell: Vec<u8> =
            (0..n).filter(|&v| ranks[v] == target).map(|v| v as u8).collect();

        let mut explored: Vec<u8> = Vec::new();
        let mut child = vec![0u32; n];
        for &w in &cell {
            if !explored.is_empty() {
                let mut uf = self.stabiliser_orbits(path);
                if explored.iter().any(|&u| uf.find(u as usize) == uf.find(w as usize)) {
                    continue;
                }
            }
            explored.push(w);
            child.copy_from_slice(ranks);
            for v in 0..n {
                if ranks[v] == target && v != w as usize {
                    child[v] = target + 1;
                }
            }
            refine(self.adj, &mut child, &mut self.scratch);
            path.push(w);
            let unwind = self.visit(&child.clone(), path);
            path.pop();
            if let Some(d) = unwind {
                if d < depth {
                    return Some(d);
                }
            }
        }

        if self.first_path.len() > depth && path[..] == self.first_path[..depth] {
            let v = self.first_path[depth] as usize;
            let mut uf = self.stabiliser_orbits(path);
            let root = uf.find(v);
            let size = (0..n).filter(|&u| uf.find(u) == root).count();
            self.group_size *= size as u128;
        }
        None
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex of `path`.
    fn stabiliser_orbits(&self, path: &[u8]) -> UnionFind {
        let n = self.adj.len();
        let mut uf = UnionFind::new(n);
        for gamma in &self.generators {
            if path.iter().all(|&p| gamma[p as usize] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    uf.union(v, w as usize);
                }
            }
        }
        uf
    }
}

/// Canonical form of raw adjacency (rows need not be sorted).
pub fn canonical_form_adj(adj: &Adjacency) -> Canon {
    let n = adj.len();
    let profile = vertex_cycle_profile(adj);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| profile[v]);
    let mut ranks = vec![0u32; n];
    let mut start = 0u32;
    for i in 0..n {
        if i > 0 && profile[order[i]] != profile[order[i - 1]] {
            start = i as u32;
        }
        ranks[order[i]] = start;
    }
    let mut search = Search {
        adj,
        first: None,
        best: None,
        first_path: Vec::new(),
        generators: Vec::new(),
        group_size: 1,
        scratch: Vec::with_capacity(n),
    };
    refine(adj, &mut ranks, &mut search.scratch);
    let mut path = Vec::new();
    search.visit(&ranks, &mut path);
    let best = search.best.take().unwrap();
    let mut code = Vec::with_capacity(1 + 3 * n);
    code.push(n as u8);
    code.extend_from_slice(&best.code);
    let orbits = orbit_representatives(n, &search.generators);
    Canon {
        labeling: best.pos,
        code: CanonicalCode(code),
        generators: search.generators,
        group_size: search.group_size,
        orbits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests_support::*;
    use crate::rng::SplitMix;

    fn shuffled(g: &CubicGraph, seed: u64) -> CubicGraph {
        let n = g.order();
        let mut rng = SplitMix::new(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        g.relabel(&perm)
    }

    /// Counts automorphisms by trying every bijection extending from
    /// vertex 0 along a BFS order (oracle for small graphs).
    fn brute_automorphisms(g: &CubicGraph) -> u128 {
        let n = g.order();
        let mut order = vec![0usize];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            for w in g.neighbors(order[i]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
        fn rec(g: &CubicGraph, order: &[usize], map: &mut Vec<usize>, used: &mut Vec<bool>, k: usize) -> u128 {
            if k == order.len() {
                return 1;
            }
            let v = order[k];
            let mut total = 0;
            for img in 0..g.order() {
                if used[img] {
                    continue;
                }
                let ok = g.neighbors(v).iter().all(|&u| {
                    map[u] == usize::MAX || g.adjacent(map[u], img)
                });
                if ok {
                    map[v] = img;
                    used[img] = true;
                    total += rec(g, order, map, used, k + 1);
                    used[img] = false;
                    map[v] = usize::MAX;
                }
            }
            total
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        rec(g, &order, &mut map, &mut used, 0)
    }

    #[test]
    fn group_orders_of_small_graphs() {
        assert_eq!(automorphism_count(&k4()), 24);
        assert_eq!(automorphism_count(&k33()), 72);
        assert_eq!(automorphism_count(&prism()), 12);
        assert_eq!(automorphism_count(&cube()), 48);
        assert_eq!(automorphism_count(&petersen()), 120);
        for g in [k4(), k33(), prism(), cube(), petersen(), bridged_pair()] {
            assert_eq!(automorphism_count(&g), brute_automorphisms(&g));
        }
    }

    #[test]
    fn codes_survive_relabelling() {
        for g in [k4(), k33(), prism(), cube(), petersen(), bridged_pair()] {
            let c = canonical_code(&g);
            for seed in 0..20 {
                let h = shuffled(&g, seed);
                assert_eq!(canonical_code(&h), c);
                assert_eq!(automorphism_count(&h), automorphism_count(&g));
            }
            assert!(are_isomorphic(&c.to_graph(), &g));
        }
        assert!(!are_isomorphic(&k33(), &prism()));
    }

    #[test]
    fn vertex_transitivity() {
        assert!(is_vertex_transitive(&petersen()));
        assert!(is_vertex_transitive(&prism()));
        assert!(!is_vertex_transitive(&bridged_pair()));
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = petersen();
        let c = canonical_form(&g);
        for gamma in &c.generators {
            for (a, b) in g.edge_list() {
                assert!(g.adjacent(gamma[a] as usize, gamma[b] as usize));
            }
        }
    }

    #[test]
    fn short_cycle_counts() {
        let mut lens = [0usize; 7];
        short_cycles(petersen().adjacency(), 6, |c| lens[c.len()] += 1);
        assert_eq!(lens, [0, 0, 0, 0, 0, 12, 10]);
        let mut total = 0;
        short_cycles(k4().adjacency(), 6, |_| total += 1);
        assert_eq!(total, 7);
    }
}
