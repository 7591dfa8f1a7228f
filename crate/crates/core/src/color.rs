//! Edge colourings: chromatic index, classification, total colourings,
//! normal 5-edge-colourings and perfect matching covers.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::Bits;
use crate::factor::perfect_matchings;
use crate::graph::CubicGraph;

/// A proper edge colouring with colours `1..=palette`, indexed by edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    palette: u8,
    colors: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringError {
    WrongLength { expected: usize, found: usize },
    OutOfPalette { edge: usize, color: u8 },
    Conflict { vertex: usize },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::WrongLength { expected, found } => {
                write!(f, "expected {expected} edge colours, found {found}")
            }
            ColoringError::OutOfPalette { edge, color } => {
                write!(f, "edge {edge} has colour {color} outside the palette")
            }
            ColoringError::Conflict { vertex } => {
                write!(f, "two edges at vertex {vertex} share a colour")
            }
        }
    }
}

impl core::error::Error for ColoringError {}

impl EdgeColoring {
    pub fn new(g: &CubicGraph, palette: u8, colors: Vec<u8>) -> Result<EdgeColoring, ColoringError> {
        if colors.len() != g.size() {
            return Err(ColoringError::WrongLength { expected: g.size(), found: colors.len() });
        }
        for (e, &c) in colors.iter().enumerate() {
            if c == 0 || c > palette {
                return Err(ColoringError::OutOfPalette { edge: e, color: c });
            }
        }
        for v in 0..g.order() {
            let [a, b, c] = g.incident(v).map(|e| colors[e]);
            if a == b || b == c || a == c {
                return Err(ColoringError::Conflict { vertex: v });
            }
        }
        Ok(EdgeColoring { palette, colors })
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn color(&self, e: usize) -> u8 {
        self.colors[e]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn class(&self, c: u8) -> Bits {
        self.colors.iter().enumerate().filter(|&(_, &x)| x == c).map(|(e, _)| e).collect()
    }

    /// The 2-factor formed by the two colour classes other than `c`
    /// (for 3-colourings).
    pub fn two_factor_without(&self, c: u8) -> Bits {
        self.colors.iter().enumerate().filter(|&(_, &x)| x != c).map(|(e, _)| e).collect()
    }
}

/// Edge order for colouring searches: breadth-first from vertex 0, so that
/// vertices are completed early and forced colours propagate.
fn bfs_edge_order(g: &CubicGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.size());
    let mut taken = Bits::EMPTY;
    let mut seen = Bits::single(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for (w, e) in g.neighbors(v).into_iter().zip(g.incident(v)) {
            if !taken.contains(e) {
                taken.insert(e);
                order.push(e);
            }
            if !seen.contains(w) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    for e in 0..g.size() {
        if !taken.contains(e) {
            order.push(e);
        }
    }
    order
}

/// Backtracking 3-edge-colouring with forced-colour propagation: once two
/// edges at a vertex are coloured, the third edge's colour is determined.
struct ThreeColorer<'g> {
    g: &'g CubicGraph,
    order: Vec<usize>,
    color: Vec<u8>,
    mask: Vec<u8>,
    trail: Vec<usize>,
    queue: Vec<(usize, u8)>,
}

impl<'g> ThreeColorer<'g> {
    fn new(g: &'g CubicGraph) -> Self {
        ThreeColorer {
            g,
            order: bfs_edge_order(g),
            color: vec![0; g.size()],
            mask: vec![0; g.order()],
            trail: Vec::with_capacity(g.size()),
            queue: Vec::new(),
        }
    }

    /// Colours `e` with bit `c` and everything it forces.
    fn assign(&mut self, e: usize, c: u8) -> bool {
        self.queue.clear();
        self.queue.push((e, c));
        while let Some((e, c)) = self.queue.pop() {
            if self.color[e] != 0 {
                if self.color[e] != c {
                    return false;
                }
                continue;
            }
            let (a, b) = self.g.edge(e);
            if self.mask[a] & c != 0 || self.mask[b] & c != 0 {
                return false;
            }
            self.color[e] = c;
            self.mask[a] |= c;
            self.mask[b] |= c;
            self.trail.push(e);
            for x in [a, b] {
                if self.mask[x].count_ones() == 2 {
                    let rest = 7 ^ self.mask[x];
                    let f = self.g.incident(x).into_iter().find(|&f| self.color[f] == 0).unwrap();
                    self.queue.push((f, rest));
                }
            }
        }
        true
    }

    fn undo(&mut self, to: usize) {
        while self.trail.len() > to {
            let e = self.trail.pop().unwrap();
            let (a, b) = self.g.edge(e);
            let c = self.color[e];
            self.mask[a] &= !c;
            self.mask[b] &= !c;
            self.color[e] = 0;
        }
    }

    fn search(&mut self, mut pos: usize) -> bool {
        while pos < self.order.len() && self.color[self.order[pos]] != 0 {
            pos += 1;
        }
        if pos == self.order.len() {
            return true;
        }
        let e = self.order[pos];
        let (a, b) = self.g.edge(e);
        let free = 7 & !(self.mask[a] | self.mask[b]);
        for c in [1u8, 2, 4] {
            if free & c == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(e, c) && self.search(pos + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn run(mut self, pre: &[(usize, u8)]) -> Option<Vec<u8>> {
        for &(e, c) in pre {
            if !self.assign(e, 1 << (c - 1)) {
                return None;
            }
        }
        if !self.search(0) {
            return None;
        }
        Some(self.color.iter().map(|&c| c.trailing_zeros() as u8 + 1).collect())
    }
}

/// A proper 3-edge-colouring extending the given `(edge, colour)` choices.
pub fn three_edge_coloring_with(g: &CubicGraph, pre: &[(usize, u8)]) -> Option<EdgeColoring> {
    let colors = ThreeColorer::new(g).run(pre)?;
    Some(EdgeColoring { palette: 3, colors })
}

/// A proper 3-edge-colouring. Vertex 0's edges get colours 1, 2, 3, which
/// loses nothing up to renaming colours.
pub fn three_edge_coloring(g: &CubicGraph) -> Option<EdgeColoring> {
    let inc = g.incident(0);
    three_edge_coloring_with(g, &[(inc[0], 1), (inc[1], 2), (inc[2], 3)])
}

pub fn is_colourable(g: &CubicGraph) -> bool {
    three_edge_coloring(g).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticIndex {
    Three(EdgeColoring),
    Four,
}

impl ChromaticIndex {
    pub fn value(&self) -> u8 {
        match self {
            ChromaticIndex::Three(_) => 3,
            ChromaticIndex::Four => 4,
        }
    }
}

pub fn chromatic_index(g: &CubicGraph) -> ChromaticIndex {
    match three_edge_coloring(g) {
        Some(c) => ChromaticIndex::Three(c),
        None => ChromaticIndex::Four,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Colourable,
    UncolourableTrivial,
    WeakSnark,
    Snark,
}

impl Class {
    pub fn name(self) -> &'static str {
        match self {
            Class::Colourable => "colourable",
            Class::UncolourableTrivial => "uncolourable_trivial",
            Class::WeakSnark => "weak_snark",
            Class::Snark => "snark",
        }
    }
}

pub fn classify(g: &CubicGraph) -> Class {
    if is_colourable(g) {
        return Class::Colourable;
    }
    if !g.cyclic_edge_connectivity().at_least(4) {
        return Class::UncolourableTrivial;
    }
    match g.girth() {
        0..=3 => Class::UncolourableTrivial,
        4 => Class::WeakSnark,
        _ => Class::Snark,
    }
}

/// A total colouring with 4 colours: `(vertex colours, edge colours)`.
pub fn total_four_coloring(g: &CubicGraph) -> Option<(Vec<u8>, Vec<u8>)> {
    let n = g.order();
    // Elements 0..n are vertices, n.. are edges. Each vertex's closed star
    // uses all four colours, tracked in `star`.
    struct State<'g> {
        g: &'g CubicGraph,
        order: Vec<usize>,
        color: Vec<u8>,
        star: Vec<u8>,
    }
    impl State<'_> {
        fn allowed(&self, x: usize) -> u8 {
            let n = self.g.order();
            if x < n {
                let mut used = self.star[x];
                for w in self.g.neighbors(x) {
                    used |= self.color[w];
                }
                15 & !used
            } else {
                let (a, b) = self.g.edge(x - n);
                15 & !(self.star[a] | self.star[b])
            }
        }

        fn set(&mut self, x: usize, c: u8) {
            let n = self.g.order();
            self.color[x] = c;
            if x < n {
                self.star[x] ^= c;
            } else {
                let (a, b) = self.g.edge(x - n);
                self.star[a] ^= c;
                self.star[b] ^= c;
            }
        }

        fn search(&mut self, pos: usize) -> bool {
            if pos == self.order.len() {
                return true;
            }
            let x = self.order[pos];
            if self.color[x] != 0 {
                return self.search(pos + 1);
            }
            let free = self.allowed(x);
            for c in [1u8, 2, 4, 8] {
                if free & c != 0 {
                    self.set(x, c);
                    if self.search(pos + 1) {
                        return true;
                    }
                    self.set(x, c);
                    self.color[x] = 0;
                }
            }
            false
        }
    }
    let mut order = Vec::with_capacity(n + g.size());
    let mut placed = vec![false; n + g.size()];
    let mut queue = VecDeque::from([0usize]);
    let mut seen = Bits::single(0);
    while let Some(v) = queue.pop_front() {
        for x in core::iter::once(v).chain(g.incident(v).into_iter().map(|e| n + e)) {
            if !placed[x] {
                placed[x] = true;
                order.push(x);
            }
        }
        for w in g.neighbors(v) {
            if !seen.contains(w) {
                seen.insert(w);
                queue.push_back(w);
            }
        }
    }
    let mut st = State { g, order, color: vec![0; n + g.size()], star: vec![0; n] };
    // Vertex 0 and its edges take the four colours in a fixed order.
    st.set(0, 1);
    for (i, e) in g.incident(0).into_iter().enumerate() {
        st.set(n + e, 2 << i);
    }
    if !st.search(0) {
        return None;
    }
    let decode = |c: u8| c.trailing_zeros() as u8 + 1;
    let vc = st.color[..n].iter().map(|&c| decode(c)).collect();
    let ec = st.color[n..].iter().map(|&c| decode(c)).collect();
    Some((vc, ec))
}

/// 4 when a total 4-colouring exists, otherwise 5 (a cubic graph always
/// has a total 5-colouring).
pub fn total_chromatic_number(g: &CubicGraph) -> u8 {
    if total_four_coloring(g).is_some() {
        4
    } else {
        5
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Poor,
    Rich,
    Neither,
}

/// Classifies `e` by the number of colours on the edges at its endpoints.
pub fn edge_kind(g: &CubicGraph, coloring: &EdgeColoring, e: usize) -> EdgeKind {
    kind_of(g, coloring.colors(), e)
}

fn kind_of(g: &CubicGraph, colors: &[u8], e: usize) -> EdgeKind {
    let (a, b) = g.edge(e);
    let mut mask = 0u32;
    for f in g.incident(a).into_iter().chain(g.incident(b)) {
        mask |= 1 << colors[f];
    }
    match mask.count_ones() {
        3 => EdgeKind::Poor,
        5 => EdgeKind::Rich,
        _ => EdgeKind::Neither,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalMode {
    Any,
    AllRich,
}

/// A normal 5-edge-colouring (every edge poor or rich), or one where every
/// edge is rich.
pub fn normal_5_coloring(g: &CubicGraph, mode: NormalMode) -> Option<EdgeColoring> {
    struct State<'g> {
        g: &'g CubicGraph,
        mode: NormalMode,
        order: Vec<usize>,
        colors: Vec<u8>,
        mask: Vec<u8>,
        /// Number of coloured edges among each edge's closed neighbourhood.
        done: Vec<u8>,
    }
    impl State<'_> {
        fn neighbourhood(&self, e: usize) -> [usize; 5] {
            let (a, b) = self.g.edge(e);
            let mut out = [e; 5];
            let mut k = 1;
            for f in self.g.incident(a).into_iter().chain(self.g.incident(b)) {
                if f != e {
                    out[k] = f;
                    k += 1;
                }
            }
            out
        }

        fn legal(&self, f: usize) -> bool {
            for e in self.neighbourhood(f) {
                if self.done[e] == 5 {
                    match (kind_of(self.g, &self.colors, e), self.mode) {
                        (EdgeKind::Rich, _) => {}
                        (EdgeKind::Poor, NormalMode::Any) => {}
                        _ => return false,
                    }
                }
            }
            true
        }

        fn set(&mut self, f: usize, c: u8) {
            let (a, b) = self.g.edge(f);
            self.colors[f] = c;
            self.mask[a] |= 1 << c;
            self.mask[b] |= 1 << c;
            for e in self.neighbourhood(f) {
                self.done[e] += 1;
            }
        }

        fn clear(&mut self, f: usize) {
            let (a, b) = self.g.edge(f);
            let c = self.colors[f];
            self.colors[f] = 0;
            self.mask[a] &= !(1 << c);
            self.mask[b] &= !(1 << c);
            for e in self.neighbourhood(f) {
                self.done[e] -= 1;
            }
        }

        fn search(&mut self, pos: usize, max_used: u8) -> bool {
            if pos == self.order.len() {
                return true;
            }
            let f = self.order[pos];
            let (a, b) = self.g.edge(f);
            let top = (max_used + 1).min(5);
            for c in 1..=top {
                if (self.mask[a] | self.mask[b]) & (1 << c) != 0 {
                    continue;
                }
                self.set(f, c);
                if self.legal(f) && self.search(pos + 1, max_used.max(c)) {
                    return true;
                }
                self.clear(f);
            }
            false
        }
    }
    let m = g.size();
    let mut st = State {
        g,
        mode,
        order: bfs_edge_order(g),
        colors: vec![0; m],
        mask: vec![0; g.order()],
        done: vec![0; m],
    };
    if !st.search(0, 0) {
        return None;
    }
    Some(EdgeColoring { palette: 5, colors: st.colors })
}

/// A list of perfect matchings with a per-edge multiplicity contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCover {
    pub matchings: Vec<Bits>,
}

impl MatchingCover {
    pub fn multiplicity(&self, e: usize) -> usize {
        self.matchings.iter().filter(|m| m.contains(e)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    Bridge,
}

/// Six perfect matchings covering every edge exactly twice.
pub fn fulkerson_cover(g: &CubicGraph) -> Result<Option<MatchingCover>, CoverError> {
    if g.has_bridge() {
        return Err(CoverError::Bridge);
    }
    if let Some(c) = three_edge_coloring(g) {
        let classes: Vec<Bits> = (1..=3).map(|k| c.class(k)).collect();
        let matchings = classes.iter().chain(classes.iter()).copied().collect();
        return Ok(Some(MatchingCover { matchings }));
    }
    let all = perfect_matchings(g);
    let mut cover = vec![0u8; g.size()];
    let mut chosen = Vec::new();
    fn rec(all: &[Bits], cover: &mut [u8], chosen: &mut Vec<Bits>) -> bool {
        let Some(e) = (0..cover.len()).find(|&e| cover[e] < 2) else {
            return chosen.len() == 6;
        };
        if chosen.len() == 6 {
            return false;
        }
        for &m in all {
            if !m.contains(e) || m.iter().any(|f| cover[f] == 2) {
                continue;
            }
            for f in m.iter() {
                cover[f] += 1;
            }
            chosen.push(m);
            if rec(all, cover, chosen) {
                return true;
            }
            chosen.pop();
            for f in m.iter() {
                cover[f] -= 1;
            }
        }
        false
    }
    if rec(&all, &mut cover, &mut chosen) {
        Ok(Some(MatchingCover { matchings: chosen }))
    } else {
        Ok(None)
    }
}

/// Five perfect matchings covering every edge at least once.
pub fn berge_cover(g: &CubicGraph) -> Result<Option<MatchingCover>, CoverError> {
    if g.has_bridge() {
        return Err(CoverError::Bridge);
    }
    if let Some(c) = three_edge_coloring(g) {
        let mut matchings: Vec<Bits> = (1..=3).map(|k| c.class(k)).collect();
        matchings.push(matchings[0]);
        matchings.push(matchings[1]);
        return Ok(Some(MatchingCover { matchings }));
    }
    let all = perfect_matchings(g);
    fn rec(all: &[Bits], covered: Bits, m: usize, chosen: &mut Vec<Bits>) -> bool {
        let Some(e) = (0..m).find(|&e| !covered.contains(e)) else {
            while chosen.len() < 5 {
                chosen.push(chosen[0]);
            }
            return true;
        };
        if chosen.len() == 5 {
            return false;
        }
        for &p in all {
            if p.contains(e) {
                chosen.push(p);
                if rec(all, covered.union(p), m, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    if rec(&all, Bits::EMPTY, g.size(), &mut chosen) {
        Ok(Some(MatchingCover { matchings: chosen }))
    } else {
        Ok(None)
    }
}
