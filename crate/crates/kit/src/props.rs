//! Per-graph properties for `analyze`. Every witness a property reports is
//! re-checked with `snarkcore::check` before it is returned.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use snarkcore::cdc::{self, CdcQuery};
use snarkcore::color::{self, NormalMode};
use snarkcore::cycle::{self, Hamiltonicity};
use snarkcore::factor;
use snarkcore::{check, automorphism_count, CubicGraph, Outcome};

use crate::witness::{self, ensure};

/// How much work a single search may do.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Tier {
    /// Per-search node budgets; searches that hit them report a resource
    /// limit.
    #[default]
    Short,
    /// No budgets.
    Long,
}

impl Tier {
    pub fn budget(self) -> Option<u64> {
        match self {
            Tier::Short => Some(50_000_000),
            Tier::Long => None,
        }
    }
}

/// Applies an optional node budget to a cover query.
pub fn budgeted(q: CdcQuery<'_>, tier: Tier) -> CdcQuery<'_> {
    match tier.budget() {
        Some(b) => q.budget(b),
        None => q,
    }
}

macro_rules! properties {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Property { $($variant,)* }

        impl Property {
            pub const ALL: &'static [Property] = &[$(Property::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(Property::$variant => $name,)* }
            }
        }
    };
}

properties! {
    Order => "order",
    Girth => "girth",
    CyclicConnectivity => "cyclic-connectivity",
    ChromaticIndex => "chromatic-index",
    Class => "class",
    Oddness => "oddness",
    Automorphisms => "automorphisms",
    VertexTransitive => "vertex-transitive",
    Hamiltonicity => "hamiltonicity",
    Circumference => "circumference",
    Permutation => "permutation",
    RemovableCycles => "removable-cycles",
    PerfectMatchings => "perfect-matchings",
    MaxOddComponents => "max-odd-components",
    MaxComponents => "max-components",
    AllOdd2Factors => "all-odd-2factors",
    StableCycles => "stable-cycles",
    UniqueCdcCycles => "unique-cdc-cycles",
    Strong => "strong",
    TotalChromatic => "total-chromatic",
    ShortestCycleCover => "shortest-cycle-cover",
    Cdc => "cdc",
    EvenCdc => "even-cdc",
    Orientable5Cdc => "orientable-5cdc",
    DominatingCycle => "dominating-cycle",
    NormalColouring => "normal-colouring",
    Fulkerson => "fulkerson",
    Berge => "berge",
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property {s:?}"))
    }
}

/// Value and optional witness of one property.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Value,
    pub witness: Option<Value>,
}

impl Evaluation {
    fn plain(value: Value) -> Self {
        Evaluation { value, witness: None }
    }

    fn with(value: Value, witness: Value) -> Self {
        Evaluation { value, witness: Some(witness) }
    }

    fn limit() -> Self {
        Evaluation::plain(json!("resource_limit"))
    }
}

/// Existence of a cover under `q`: `true` with the cover, `false`, or a
/// resource limit.
fn cover_exists(g: &CubicGraph, q: CdcQuery<'_>, validate: impl Fn(&cdc::CycleDoubleCover) -> bool) -> Evaluation {
    match q.find() {
        Outcome::Found(c) => {
            ensure(check::is_cdc(g, &c.cycles) && validate(&c), "cycle double cover");
            Evaluation::with(json!(true), witness::cdc(&c))
        }
        Outcome::Exhausted => Evaluation::plain(json!(false)),
        Outcome::ResourceLimit => Evaluation::limit(),
    }
}

pub fn evaluate(g: &CubicGraph, p: Property, tier: Tier) -> Evaluation {
    match p {
        Property::Order => Evaluation::plain(json!(g.order())),
        Property::Girth => Evaluation::plain(json!(g.girth())),
        Property::CyclicConnectivity => match g.cyclic_edge_connectivity().finite() {
            Some(k) => Evaluation::plain(json!(k)),
            None => Evaluation::plain(json!("unbounded")),
        },
        Property::ChromaticIndex => match color::three_edge_coloring(g) {
            Some(c) => {
                ensure(check::is_proper_edge_coloring(g, c.colors(), 3), "edge colouring");
                Evaluation::with(json!(3), witness::edge_colours(g, c.colors()))
            }
            None => Evaluation::plain(json!(4)),
        },
        Property::Class => Evaluation::plain(json!(color::classify(g).name())),
        Property::Oddness => match factor::oddness(g) {
            Some(k) => Evaluation::plain(json!(k)),
            None => Evaluation::plain(Value::Null),
        },
        Property::Automorphisms => Evaluation::plain(json!(automorphism_count(g) as u64)),
        Property::VertexTransitive => Evaluation::plain(json!(snarkcore::is_vertex_transitive(g))),
        Property::Hamiltonicity => {
            let h = cycle::hamiltonicity(g);
            let name = match h {
                Hamiltonicity::Hamiltonian => "hamiltonian",
                Hamiltonicity::Hypohamiltonian => "hypohamiltonian",
                Hamiltonicity::Neither => "neither",
            };
            match cycle::hamiltonian_cycle(g) {
                Some(c) => {
                    ensure(check::is_cycle_missing(g, &c, None), "hamiltonian cycle");
                    Evaluation::with(json!(name), witness::cycle(&c))
                }
                None => Evaluation::plain(json!(name)),
            }
        }
        Property::Circumference => {
            let (len, c) = cycle::circumference(g);
            ensure(check::is_cycle_sequence(g, &c.vertex_sequence()) && c.len() == len, "longest cycle");
            Evaluation::with(json!(len), witness::cycle(&c))
        }
        Property::Permutation => match factor::permutation_structures(g).first() {
            Some(f) => Evaluation::with(json!(true), witness::subgraph(f)),
            None => Evaluation::plain(json!(false)),
        },
        Property::RemovableCycles => {
            let counts: Vec<usize> = factor::permutation_structures(g)
                .iter()
                .map(|f| factor::removable_cycles(g, f).len())
                .collect();
            Evaluation::plain(json!(counts.iter().min()))
        }
        Property::PerfectMatchings => Evaluation::plain(json!(factor::perfect_matchings(g).len())),
        Property::MaxOddComponents => {
            Evaluation::plain(json!(factor::two_factor_extremes(g).map(|x| x.max_odd_components)))
        }
        Property::MaxComponents => Evaluation::plain(json!(factor::two_factor_extremes(g).map(|x| x.max_components))),
        Property::AllOdd2Factors => Evaluation::plain(json!(factor::all_two_factors_odd(g))),
        Property::StableCycles => {
            let stable = cycle::stable_cycles(g);
            let shortest = stable.iter().map(|c| c.len()).min();
            Evaluation::with(json!({ "count": stable.len(), "shortest": shortest }), witness::cycles(&stable))
        }
        Property::UniqueCdcCycles => Evaluation::plain(json!(cdc::unique_cdc_cycles(g))),
        Property::Strong => Evaluation::plain(json!(color::classify(g) == color::Class::Snark && cdc::is_strong_snark(g))),
        Property::TotalChromatic => match color::total_four_coloring(g) {
            Some((v, e)) => {
                ensure(check::is_total_coloring(g, &v, &e, 4), "total colouring");
                Evaluation::with(json!(4), json!({ "vertices": v, "edges": witness::edge_colours(g, &e) }))
            }
            None => Evaluation::plain(json!(5)),
        },
        Property::ShortestCycleCover => match cdc::shortest_cycle_cover_within(g, tier.budget()) {
            Outcome::Found((len, cover)) => {
                let total: usize = cover.iter().map(|c| c.len()).sum();
                ensure(check::is_cycle_cover(g, &cover) && total == len, "cycle cover");
                Evaluation::with(json!(len), witness::cycles(&cover))
            }
            Outcome::Exhausted => Evaluation::plain(Value::Null),
            Outcome::ResourceLimit => Evaluation::limit(),
        },
        Property::Cdc => cover_exists(g, budgeted(CdcQuery::new(g), tier), |_| true),
        Property::EvenCdc => cover_exists(g, budgeted(CdcQuery::new(g).even(), tier), |c| {
            c.cycles.iter().all(|x| x.len() % 2 == 0)
        }),
        Property::Orientable5Cdc => cover_exists(g, budgeted(CdcQuery::new(g).colours(5).orientable(), tier), |c| {
            let (Some(col), Some(o)) = (&c.coloring, &c.orientation) else { return false };
            check::is_k_cdc(g, &c.cycles, col, 5) && check::is_oriented_cdc(g, &c.cycles, o)
        }),
        Property::DominatingCycle => match cycle::dominating_cycle(g, &[]) {
            Some(c) => {
                ensure(check::is_dominating_cycle(g, &c, &[]), "dominating cycle");
                Evaluation::with(json!(true), witness::cycle(&c))
            }
            None => Evaluation::plain(json!(false)),
        },
        Property::NormalColouring => match color::normal_5_coloring(g, NormalMode::Any) {
            Some(c) => {
                ensure(check::is_normal_coloring(g, c.colors(), false), "normal colouring");
                Evaluation::with(json!(true), witness::edge_colours(g, c.colors()))
            }
            None => Evaluation::plain(json!(false)),
        },
        Property::Fulkerson => match color::fulkerson_cover(g) {
            Ok(Some(m)) => {
                ensure(check::is_matching_cover(g, &m.matchings, 6, 2, 2), "Fulkerson cover");
                Evaluation::with(json!(true), matchings(g, &m))
            }
            Ok(None) | Err(_) => Evaluation::plain(json!(false)),
        },
        Property::Berge => match color::berge_cover(g) {
            Ok(Some(m)) => {
                ensure(check::is_matching_cover(g, &m.matchings, 5, 1, 5), "Berge cover");
                Evaluation::with(json!(true), matchings(g, &m))
            }
            Ok(None) | Err(_) => Evaluation::plain(json!(false)),
        },
    }
}

pub(crate) fn matchings(g: &CubicGraph, m: &color::MatchingCover) -> Value {
    Value::Array(m.matchings.iter().map(|&x| witness::edges(g, x)).collect())
}

/// Parses a comma-separated property list.
pub fn parse_list(csv: &str) -> Result<Vec<Property>, String> {
    csv.split(',').map(str::trim).filter(|s| !s.is_empty()).map(Property::from_str).collect()
}
