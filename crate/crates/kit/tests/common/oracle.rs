//! Brute-force enumeration of connected cubic graphs, sharing no code with
//! the generator or the canonical labelling.

use std::collections::{BTreeMap, VecDeque};

use snarkcore::CubicGraph;

/// Connected after deleting any two vertices.
pub fn three_connected(g: &CubicGraph) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let start = (0..n).find(|&v| v != a && v != b).unwrap();
            let mut seen = vec![false; n];
            seen[a] = true;
            seen[b] = true;
            seen[start] = true;
            let mut stack = vec![start];
            let mut reached = 1;
            while let Some(v) = stack.pop() {
                for w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
            reached == n - 2
        })
    })
}

/// Sorted distance profile of every vertex.
fn invariant(g: &CubicGraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in g.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            let mut profile = vec![0; n];
            for d in dist {
                profile[d] += 1;
            }
            profile
        })
        .collect();
    out.sort();
    out
}

/// Backtracking isomorphism test, extending a partial map along edges.
pub fn isomorphic(g: &CubicGraph, h: &CubicGraph) -> bool {
    fn extend(g: &CubicGraph, h: &CubicGraph, map: &mut Vec<usize>, used: &mut Vec<bool>, order: &[usize], i: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..h.order() {
            if used[w] {
                continue;
            }
            let fits = g.neighbors(v).iter().all(|&u| map[u] == usize::MAX || h.adjacent(map[u], w));
            if fits {
                map[v] = w;
                used[w] = true;
                if extend(g, h, map, used, order, i + 1) {
                    return true;
                }
                map[v] = usize::MAX;
                used[w] = false;
            }
        }
        false
    }
    let n = g.order();
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut k = 0;
    while k < order.len() {
        for w in g.neighbors(order[k]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        k += 1;
    }
    extend(g, h, &mut vec![usize::MAX; n], &mut vec![false; n], &order, 0)
}

/// Every connected cubic graph on `n` vertices, up to isomorphism, by direct
/// search: vertices are labelled in breadth-first order from vertex 0, and
/// each vertex in turn is joined to later labelled vertices and to fresh ones.
pub fn all_connected_cubic(n: usize) -> Vec<CubicGraph> {
    struct Search {
        n: usize,
        adj: Vec<Vec<usize>>,
        buckets: BTreeMap<Vec<Vec<usize>>, Vec<CubicGraph>>,
    }

    impl Search {
        fn vertex(&mut self, v: usize, labelled: usize) {
            if v == self.n {
                let edges: Vec<(usize, usize)> =
                    (0..self.n).flat_map(|a| self.adj[a].iter().filter(move |&&b| b > a).map(move |&b| (a, b))).collect();
                let g = CubicGraph::from_edges(self.n, &edges).unwrap();
                let bucket = self.buckets.entry(invariant(&g)).or_default();
                if !bucket.iter().any(|h| isomorphic(&g, h)) {
                    bucket.push(g);
                }
                return;
            }
            if v >= labelled {
                return;
            }
            let need = 3 - self.adj[v].len();
            let open: Vec<usize> = (v + 1..labelled).filter(|&w| self.adj[w].len() < 3 && !self.adj[v].contains(&w)).collect();
            self.choose(v, labelled, &open, 0, need);
        }

        /// Joins `v` to `need` more vertices: some of `open[from..]`, then
        /// fresh ones.
        fn choose(&mut self, v: usize, labelled: usize, open: &[usize], from: usize, need: usize) {
            if labelled + need <= self.n {
                let fresh: Vec<usize> = (labelled..labelled + need).collect();
                self.join(v, &fresh);
                self.vertex(v + 1, labelled + need);
                self.split(v, &fresh);
            }
            if need == 0 {
                return;
            }
            for i in from..open.len() {
                self.join(v, &open[i..=i]);
                self.choose(v, labelled, open, i + 1, need - 1);
                self.split(v, &open[i..=i]);
            }
        }

        fn join(&mut self, v: usize, ws: &[usize]) {
            for &w in ws {
                self.adj[v].push(w);
                self.adj[w].push(v);
            }
        }

        fn split(&mut self, v: usize, ws: &[usize]) {
            for &w in ws.iter().rev() {
                self.adj[v].pop();
                self.adj[w].pop();
            }
        }
    }

    let mut search = Search { n, adj: vec![Vec::new(); n], buckets: BTreeMap::new() };
    search.vertex(0, 1);
    search.buckets.into_values().flatten().collect()
}
