//! Conjectures as per-graph predicates. A graph either satisfies the
//! statement (possibly with a positive witness), refutes it with a witness
//! that has been re-validated by the definition-level checks, hits a search
//! budget, or lies outside the statement's hypotheses.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use snarkcore::cdc::{compatible_cycle_cover_within, CdcQuery, EulerianWeight};
use snarkcore::color::{self, NormalMode};
use snarkcore::cycle::{self, Cycle, SemiextensionIndex};
use snarkcore::factor::{self, TwoRegularSubgraph};
use snarkcore::generate::GraphClass;
use snarkcore::{are_isomorphic, check, CubicGraph, Outcome};

use crate::props::{budgeted, matchings, Tier};
use crate::witness::{self, ensure};

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Holds(Option<Value>),
    Counterexample(Value),
    ResourceLimit,
    /// The graph does not meet the hypotheses.
    NotApplicable,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Holds(_) => "holds",
            Verdict::Counterexample(_) => "counterexample",
            Verdict::ResourceLimit => "resource_limit",
            Verdict::NotApplicable => "not_applicable",
        }
    }

    pub fn witness(&self) -> Option<&Value> {
        match self {
            Verdict::Holds(w) => w.as_ref(),
            Verdict::Counterexample(w) => Some(w),
            _ => None,
        }
    }
}

macro_rules! conjectures {
    ($($variant:ident => $name:literal, $class:ident, $doc:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ConjectureId { $(#[doc = $doc] $variant,)* }

        impl ConjectureId {
            pub const ALL: &'static [ConjectureId] = &[$(ConjectureId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(ConjectureId::$variant => $name,)* }
            }

            /// Class generated for an order-bounded scope.
            pub fn scope_class(self) -> GraphClass {
                match self { $(ConjectureId::$variant => GraphClass::$class,)* }
            }

            /// The statement checked, in brief.
            pub fn statement(self) -> &'static str {
                match self { $(ConjectureId::$variant => $doc,)* }
            }
        }
    };
}

conjectures! {
    Cdcc => "cdcc", Snark,
        "Every bridgeless graph has a cycle double cover.";
    ScdccStable => "scdcc-stable", Snark,
        "Every cycle lies in some cycle double cover; only stable cycles need checking.";
    Semiext => "semiext", Snark,
        "No 2-connected cubic graph has a cycle without a semiextension.";
    StrongSemiext => "strong-semiext", Snark,
        "Every cycle of a 3-edge-connected graph has a semiextension D with C xor D connected.";
    EvenCdc => "even-cdc", Cyc4,
        "Apart from the Petersen graph, every cyclically 4-edge-connected cubic graph has a cover by even cycles.";
    O5cdc => "o5cdc", Snark,
        "Every bridgeless graph has an orientable 5-coloured cycle double cover.";
    Cycle5cdc => "cycle-5cdc", Snark,
        "Every cycle of a bridgeless cubic graph belongs to some 5-coloured cycle double cover.";
    Dominating => "dominating", WeakSnark,
        "Every cyclically 4-edge-connected cubic graph, in particular every weak snark, has a dominating cycle.";
    Dominating2Edges => "dominating-2edges", WeakSnark,
        "In a cyclically 4-edge-connected cubic graph any two edges lie on a common dominating cycle.";
    ZhangPerm => "zhang-perm", Snark5,
        "In a cyclically 5-edge-connected permutation graph other than the Petersen graph, some double cover contains both cycles of every defining 2-factor.";
    Jackson2Factor => "jackson-2factor", Snark5,
        "In a cyclically 5-edge-connected cubic graph other than the Petersen graph, every set of disjoint cycles extends to a double cover; checked for 2-factors.";
    Fgj3 => "fgj3", Snark5,
        "If every cyclic cut has weight above 4, an eulerian (1,2)-weight has a compatible cycle cover unless the graph is the Petersen graph; checked for weights equal to 1 exactly on a 2-factor of a cyclically 5-edge-connected graph.";
    AlsOdd2Factors => "als-odd-2factors", Snark,
        "The only snarks whose 2-factors all consist of odd cycles are the Petersen graph, the second Blanusa snark and the flower snarks.";
    PcolNormal => "pcol-normal", Snark,
        "Every bridgeless cubic graph has a normal 5-edge-colouring.";
    Fulkerson => "fulkerson", Snark,
        "Every bridgeless cubic graph has six perfect matchings covering each edge exactly twice.";
    Berge => "berge", Snark,
        "Every 2-connected cubic graph has five perfect matchings covering every edge.";
    AlonTarsi => "alon-tarsi", Snark,
        "A bridgeless graph with m edges has a cycle cover of total length at most 7m/5.";
    TotalChromatic => "total-chromatic", Snark,
        "Every snark and weak snark has total chromatic number 4.";
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConjectureId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown conjecture {s:?}"))
    }
}

pub fn petersen() -> CubicGraph {
    crate::codec::load_fixture(crate::codec::FixtureId::Petersen).remove(0)
}

pub fn is_petersen(g: &CubicGraph) -> bool {
    g.order() == 10 && are_isomorphic(g, &petersen())
}

/// The flower snark `J_k` on `4k` vertices (`k` odd, at least 5): stars
/// `a_i; b_i, c_i, d_i`, the `b_i` on a `k`-cycle and the `c_i, d_i` on one
/// `2k`-cycle `c_0 .. c_{k-1} d_0 .. d_{k-1}`.
pub fn flower_snark(k: usize) -> CubicGraph {
    let (a, b, c, d) = (|i: usize| 4 * i, |i: usize| 4 * i + 1, |i: usize| 4 * i + 2, |i: usize| 4 * i + 3);
    let mut edges = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        edges.extend([(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(j))]);
        if j == 0 {
            edges.extend([(c(i), d(0)), (d(i), c(0))]);
        } else {
            edges.extend([(c(i), c(j)), (d(i), d(j))]);
        }
    }
    CubicGraph::from_edges(4 * k, &edges).expect("flower snark")
}

/// Membership in the exceptional family of the odd 2-factor statement for a
/// snark `g`. The two snarks on 18 vertices are the Blanusa snarks, and of
/// those only the second has no even 2-factor, so order 18 suffices.
fn is_odd_exception(g: &CubicGraph) -> bool {
    let n = g.order();
    is_petersen(g)
        || n == 18
        || (n >= 20 && n % 8 == 4 && are_isomorphic(g, &flower_snark(n / 4)))
}

/// Every component is an induced cycle, the components are disjoint, and
/// together they span the graph.
fn validate_two_factor(g: &CubicGraph, d: &TwoRegularSubgraph, induced: bool) -> bool {
    let seqs: Vec<Vec<usize>> = d.components().iter().map(|c| c.vertex_sequence()).collect();
    let mut seen = vec![0; g.order()];
    for s in &seqs {
        if !check::is_cycle_sequence(g, s) {
            return false;
        }
        for &v in s {
            seen[v] += 1;
        }
        if induced {
            let chord = g.edge_list().any(|(a, b)| {
                s.contains(&a) && s.contains(&b) && !(0..s.len()).any(|i| {
                    let (x, y) = (s[i], s[(i + 1) % s.len()]);
                    (x, y) == (a, b) || (y, x) == (a, b)
                })
            });
            if chord {
                return false;
            }
        }
    }
    seen.iter().all(|&k| k == 1)
}

fn cyclically(g: &CubicGraph, k: u32) -> bool {
    !g.has_bridge() && g.cyclic_edge_connectivity().at_least(k)
}

fn uncolourable(g: &CubicGraph) -> bool {
    color::three_edge_coloring(g).is_none()
}

/// Runs one cover search per item; the first exhausted search refutes.
fn every_extends<'a, T>(
    items: impl IntoIterator<Item = T>,
    query: impl Fn(&T) -> CdcQuery<'a>,
    refutation: impl Fn(&T) -> Value,
) -> Verdict {
    let mut checked = 0usize;
    let mut limited = false;
    for item in items {
        match query(&item).find() {
            Outcome::Found(_) => checked += 1,
            Outcome::Exhausted => return Verdict::Counterexample(refutation(&item)),
            Outcome::ResourceLimit => limited = true,
        }
    }
    if limited {
        Verdict::ResourceLimit
    } else {
        Verdict::Holds(Some(json!({ "checked": checked })))
    }
}

fn single(c: &Cycle) -> [Cycle; 1] {
    [c.clone()]
}

pub fn check_graph(id: ConjectureId, g: &CubicGraph, tier: Tier) -> Verdict {
    use ConjectureId as C;
    match id {
        C::Cdcc => {
            if g.has_bridge() {
                return Verdict::NotApplicable;
            }
            match budgeted(CdcQuery::new(g), tier).find() {
                Outcome::Found(c) => {
                    ensure(check::is_cdc(g, &c.cycles), "cycle double cover");
                    Verdict::Holds(Some(witness::cdc(&c)))
                }
                Outcome::Exhausted => Verdict::Counterexample(json!({ "cover": null })),
                Outcome::ResourceLimit => Verdict::ResourceLimit,
            }
        }
        C::ScdccStable => {
            if g.has_bridge() {
                return Verdict::NotApplicable;
            }
            every_extends(
                cycle::stable_cycles(g),
                |c| budgeted(CdcQuery::new(g).containing(&single(c)), tier),
                |c| {
                    ensure(check::is_cycle_sequence(g, &c.vertex_sequence()), "stable cycle");
                    json!({ "cycle": witness::cycle(c) })
                },
            )
        }
        C::Semiext | C::StrongSemiext => {
            if g.has_bridge() {
                return Verdict::NotApplicable;
            }
            let strong = id == C::StrongSemiext;
            let index = SemiextensionIndex::new(g);
            let mut limited = false;
            for c in index.cycles() {
                match index.find(c, strong, tier.budget().map_or(usize::MAX, |_| 200_000)) {
                    Outcome::Found(d) => ensure(d != *c && check::is_cycle_sequence(g, &d.vertex_sequence()), "semiextension"),
                    Outcome::Exhausted => return Verdict::Counterexample(json!({ "cycle": witness::cycle(c) })),
                    Outcome::ResourceLimit => limited = true,
                }
            }
            if limited {
                Verdict::ResourceLimit
            } else {
                Verdict::Holds(Some(json!({ "checked": index.cycles().len() })))
            }
        }
        C::EvenCdc => {
            if !cyclically(g, 4) {
                return Verdict::NotApplicable;
            }
            match budgeted(CdcQuery::new(g).even(), tier).find() {
                Outcome::Found(c) => {
                    ensure(check::is_cdc(g, &c.cycles) && c.cycles.iter().all(|x| x.len() % 2 == 0), "even cover");
                    Verdict::Holds(Some(witness::cdc(&c)))
                }
                Outcome::Exhausted if is_petersen(g) => Verdict::Holds(Some(json!({ "exception": "petersen" }))),
                Outcome::Exhausted => Verdict::Counterexample(json!({ "even_cover": null })),
                Outcome::ResourceLimit => Verdict::ResourceLimit,
            }
        }
        C::O5cdc => {
            if g.has_bridge() {
                return Verdict::NotApplicable;
            }
            match budgeted(CdcQuery::new(g).colours(5).orientable(), tier).find() {
                Outcome::Found(c) => {
                    let ok = match (&c.coloring, &c.orientation) {
                        (Some(col), Some(o)) => check::is_k_cdc(g, &c.cycles, col, 5) && check::is_oriented_cdc(g, &c.cycles, o),
                        _ => false,
                    };
                    ensure(ok, "orientable 5-coloured cover");
                    Verdict::Holds(Some(witness::cdc(&c)))
                }
                Outcome::Exhausted => Verdict::Counterexample(json!({ "cover": null })),
                Outcome::ResourceLimit => Verdict::ResourceLimit,
            }
        }
        C::Cycle5cdc => {
            if g.has_bridge() {
                return Verdict::NotApplicable;
            }
            every_extends(
                cycle::cycles(g, 3, g.order(), None),
                |c| budgeted(CdcQuery::new(g).containing(&single(c)).colours(5), tier),
                |c| {
                    ensure(check::is_cycle_sequence(g, &c.vertex_sequence()), "cycle");
                    json!({ "cycle": witness::cycle(c) })
                },
            )
        }
        C::Dominating => {
            if !cyclically(g, 4) {
                return Verdict::NotApplicable;
            }
            match cycle::dominating_cycle(g, &[]) {
                Some(c) => {
                    ensure(check::is_dominating_cycle(g, &c, &[]), "dominating cycle");
                    Verdict::Holds(Some(witness::cycle(&c)))
                }
                None => Verdict::Counterexample(json!({ "dominating_cycle": null })),
            }
        }
        C::Dominating2Edges => {
            if !cyclically(g, 4) {
                return Verdict::NotApplicable;
            }
            let m = g.size();
            for e in 0..m {
                for f in e + 1..m {
                    match cycle::dominating_cycle(g, &[e, f]) {
                        Some(c) => ensure(check::is_dominating_cycle(g, &c, &[e, f]), "dominating cycle"),
                        None => return Verdict::Counterexample(json!({ "edges": [g.edge(e), g.edge(f)] })),
                    }
                }
            }
            Verdict::Holds(Some(json!({ "pairs": m * (m - 1) / 2 })))
        }
        C::ZhangPerm | C::Jackson2Factor | C::Fgj3 => {
            if !cyclically(g, 5) {
                return Verdict::NotApplicable;
            }
            if is_petersen(g) {
                return Verdict::Holds(Some(json!({ "exception": "petersen" })));
            }
            let induced = id == C::ZhangPerm;
            let factors = if induced { factor::permutation_structures(g) } else { factor::two_factors(g) };
            if id == C::Fgj3 {
                return compatible_covers(g, factors, tier);
            }
            every_extends(
                factors,
                |d| budgeted(CdcQuery::new(g).containing(d.components()), tier),
                |d| {
                    ensure(validate_two_factor(g, d, induced), "2-factor");
                    json!({ "two_factor": witness::subgraph(d) })
                },
            )
        }
        C::AlsOdd2Factors => {
            if !cyclically(g, 4) || g.girth() < 5 || !uncolourable(g) {
                return Verdict::NotApplicable;
            }
            if !factor::all_two_factors_odd(g) {
                let even = factor::two_factors(g).into_iter().find(|f| f.components().iter().any(|c| c.len() % 2 == 0));
                return Verdict::Holds(even.map(|f| {
                    ensure(validate_two_factor(g, &f, false), "2-factor");
                    json!({ "two_factor": witness::subgraph(&f) })
                }));
            }
            if is_odd_exception(g) {
                return Verdict::Holds(Some(json!({ "exception": true })));
            }
            let all = factor::two_factors(g);
            ensure(
                all.iter().all(|f| validate_two_factor(g, f, false) && f.components().iter().all(|c| c.len() % 2 == 1)),
                "odd 2-factors",
            );
            Verdict::Counterexample(json!({ "two_factors": all.len() }))
        }
        C::PcolNormal => {
            if g.has_bridge() {
                return Verdict::NotApplicable;
            }
            match color::normal_5_coloring(g, NormalMode::Any) {
                Some(c) => {
                    ensure(check::is_normal_coloring(g, c.colors(), false), "normal colouring");
                    Verdict::Holds(Some(witness::edge_colours(g, c.colors())))
                }
                None => Verdict::Counterexample(json!({ "colouring": null })),
            }
        }
        C::Fulkerson | C::Berge => {
            let found = if id == C::Fulkerson { color::fulkerson_cover(g) } else { color::berge_cover(g) };
            let (count, lo, hi) = if id == C::Fulkerson { (6, 2, 2) } else { (5, 1, 5) };
            match found {
                Err(_) => Verdict::NotApplicable,
                Ok(Some(m)) => {
                    ensure(check::is_matching_cover(g, &m.matchings, count, lo, hi), "matching cover");
                    Verdict::Holds(Some(matchings(g, &m)))
                }
                Ok(None) => Verdict::Counterexample(json!({ "matchings": null })),
            }
        }
        C::AlonTarsi => {
            if g.has_bridge() {
                return Verdict::NotApplicable;
            }
            match snarkcore::cdc::shortest_cycle_cover_within(g, tier.budget()) {
                Outcome::Found((len, cover)) => {
                    let total: usize = cover.iter().map(Cycle::len).sum();
                    ensure(check::is_cycle_cover(g, &cover) && total == len, "cycle cover");
                    let w = json!({ "length": len, "cover": witness::cycles(&cover) });
                    if 5 * len <= 7 * g.size() {
                        Verdict::Holds(Some(w))
                    } else {
                        Verdict::Counterexample(w)
                    }
                }
                Outcome::Exhausted => Verdict::Counterexample(json!({ "cover": null })),
                Outcome::ResourceLimit => Verdict::ResourceLimit,
            }
        }
        C::TotalChromatic => {
            if !cyclically(g, 4) || g.girth() < 4 || !uncolourable(g) {
                return Verdict::NotApplicable;
            }
            match color::total_four_coloring(g) {
                Some((v, e)) => {
                    ensure(check::is_total_coloring(g, &v, &e, 4), "total colouring");
                    Verdict::Holds(Some(json!({ "vertices": v, "edges": witness::edge_colours(g, &e) })))
                }
                None => Verdict::Counterexample(json!({ "total_chromatic_number": 5 })),
            }
        }
    }
}

/// Weights equal to 1 exactly on each 2-factor; every cyclic cut of a
/// cyclically 5-edge-connected graph then weighs at least 5.
fn compatible_covers(g: &CubicGraph, factors: Vec<TwoRegularSubgraph>, tier: Tier) -> Verdict {
    let mut limited = false;
    for d in &factors {
        let w = EulerianWeight::from_subgraph(g, d);
        match compatible_cycle_cover_within(g, &w, tier.budget()) {
            Outcome::Found(cover) => ensure(check::is_weighted_cover(g, &cover, w.weights()), "compatible cover"),
            Outcome::Exhausted => {
                ensure(validate_two_factor(g, d, false), "2-factor");
                return Verdict::Counterexample(json!({ "weights": w.weights(), "two_factor": witness::subgraph(d) }));
            }
            Outcome::ResourceLimit => limited = true,
        }
    }
    if limited {
        Verdict::ResourceLimit
    } else {
        Verdict::Holds(Some(json!({ "checked": factors.len() })))
    }
}
