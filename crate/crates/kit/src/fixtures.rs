//! Re-checks of the properties each fixture set is published with.

use std::collections::BTreeSet;

use serde::Serialize;
use snarkcore::cdc::CdcQuery;
use snarkcore::color::{self, Class};
use snarkcore::factor::{self, TwoRegularSubgraph};
use snarkcore::cycle::{self, Cycle};
use snarkcore::{CubicGraph, Outcome};

use crate::codec::{load_fixture, FixtureId};
use crate::pool::{run_ordered, worker_count};
use crate::props::{budgeted, Tier};
use crate::registry::{check_graph, is_petersen, ConjectureId, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Limit,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureCheck {
    pub fixture: String,
    pub check: String,
    pub passed: usize,
    pub failed: usize,
    pub limited: usize,
    pub total: usize,
}

impl FixtureCheck {
    pub fn status(&self) -> Status {
        if self.failed > 0 {
            Status::Fail
        } else if self.limited > 0 {
            Status::Limit
        } else {
            Status::Pass
        }
    }
}

type Test = fn(&CubicGraph, Tier) -> Outcome<()>;
type Checks = Vec<(&'static str, Test)>;

fn truth(b: bool) -> Outcome<()> {
    if b {
        Outcome::Found(())
    } else {
        Outcome::Exhausted
    }
}

fn is_snark(g: &CubicGraph, _: Tier) -> Outcome<()> {
    truth(color::classify(g) == Class::Snark)
}

fn cyclically_5(g: &CubicGraph, _: Tier) -> Outcome<()> {
    truth(g.cyclic_edge_connectivity().finite() == Some(5))
}

fn permutation(g: &CubicGraph, _: Tier) -> Outcome<()> {
    truth(!factor::permutation_structures(g).is_empty())
}

fn strong(g: &CubicGraph, _: Tier) -> Outcome<()> {
    truth(snarkcore::cdc::is_strong_snark(g))
}

fn stable(g: &CubicGraph, _: Tier) -> Outcome<()> {
    truth(!cycle::stable_cycles(g).is_empty())
}

fn all_odd(g: &CubicGraph, _: Tier) -> Outcome<()> {
    truth(factor::all_two_factors_odd(g))
}

/// A counterexample to the odd 2-factor statement: outside the exceptional
/// family.
fn refutes_odd_statement(g: &CubicGraph, tier: Tier) -> Outcome<()> {
    truth(matches!(check_graph(ConjectureId::AlsOdd2Factors, g, tier), Verdict::Counterexample(_)))
}

/// Whether the search over `items` finds one that `pred` accepts, treating
/// resource limits as inconclusive.
fn some_of(items: Vec<TwoRegularSubgraph>, pred: impl Fn(&TwoRegularSubgraph) -> Outcome<()>) -> Outcome<()> {
    let mut limited = false;
    for d in &items {
        match pred(d) {
            Outcome::Found(()) => return Outcome::Found(()),
            Outcome::ResourceLimit => limited = true,
            Outcome::Exhausted => {}
        }
    }
    if limited {
        Outcome::ResourceLimit
    } else {
        Outcome::Exhausted
    }
}

fn not_extendable(g: &CubicGraph, d: &TwoRegularSubgraph, tier: Tier) -> Outcome<()> {
    match budgeted(CdcQuery::new(g).containing(d.components()), tier).find() {
        Outcome::Found(_) => Outcome::Exhausted,
        Outcome::Exhausted => Outcome::Found(()),
        Outcome::ResourceLimit => Outcome::ResourceLimit,
    }
}

/// Some defining 2-factor (two induced cycles) lies in no double cover.
fn defining_factor_blocks_cdc(g: &CubicGraph, tier: Tier) -> Outcome<()> {
    some_of(factor::permutation_structures(g), |d| not_extendable(g, d, tier))
}

/// No 2-factor lies in a double cover.
fn no_factor_extends(g: &CubicGraph, tier: Tier) -> Outcome<()> {
    match some_of(factor::two_factors(g), |d| match not_extendable(g, d, tier) {
        Outcome::Found(()) => Outcome::Exhausted,
        Outcome::Exhausted => Outcome::Found(()),
        Outcome::ResourceLimit => Outcome::ResourceLimit,
    }) {
        Outcome::Found(()) => Outcome::Exhausted,
        Outcome::Exhausted => Outcome::Found(()),
        Outcome::ResourceLimit => Outcome::ResourceLimit,
    }
}

/// 2-factors first, then unions of some of their components, then single
/// cycles, without repeats.
pub fn two_regular_candidates(g: &CubicGraph) -> Vec<TwoRegularSubgraph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |d: TwoRegularSubgraph| {
        if seen.insert(d.edge_set()) {
            out.push(d);
        }
    };
    let factors = factor::two_factors(g);
    for f in &factors {
        push(f.clone());
    }
    for f in &factors {
        let k = f.components().len();
        for mask in 1..(1u32 << k) - 1 {
            let part: Vec<Cycle> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f.components()[i].clone()).collect();
            push(TwoRegularSubgraph::from_cycles(g, &part).expect("disjoint cycles"));
        }
    }
    for c in cycle::cycles(g, 3, g.order(), None) {
        push(TwoRegularSubgraph::from_cycles(g, &[c]).expect("a cycle"));
    }
    out
}

/// Some 2-regular subgraph lies in a double cover but inside no colour class
/// of a 5-coloured one. The candidates do not cover every 2-regular subgraph,
/// so finding no witness among them is inconclusive.
fn subgraph_without_5cdc(g: &CubicGraph, tier: Tier) -> Outcome<()> {
    let found = some_of(two_regular_candidates(g), |d| {
        let plain = budgeted(CdcQuery::new(g).containing(d.components()), tier).find();
        if !plain.is_found() {
            return plain.map(|_| ());
        }
        match budgeted(CdcQuery::new(g).containing(d.components()).colours(5), tier).find() {
            Outcome::Found(_) => Outcome::Exhausted,
            Outcome::Exhausted => Outcome::Found(()),
            Outcome::ResourceLimit => Outcome::ResourceLimit,
        }
    });
    match found {
        Outcome::Found(()) => Outcome::Found(()),
        _ => Outcome::ResourceLimit,
    }
}

fn not_petersen(g: &CubicGraph, _: Tier) -> Outcome<()> {
    truth(!is_petersen(g))
}

/// Named checks for a fixture; the second list runs only in the long tier.
fn checks(id: FixtureId) -> (Checks, Checks) {
    let mut short: Checks = vec![("snark", is_snark)];
    let mut long: Checks = Vec::new();
    match id {
        FixtureId::Petersen => {
            short.extend([("cyclically-5-edge-connected", cyclically_5 as Test), ("permutation", permutation)]);
            short.push(("no-2-factor-in-a-cdc", no_factor_extends));
        }
        FixtureId::Als => short.extend([("all-2-factors-odd", all_odd as Test), ("outside-exceptional-family", refutes_odd_statement)]),
        FixtureId::Stable32 => short.extend([("cyclically-5-edge-connected", cyclically_5 as Test), ("stable", stable)]),
        FixtureId::Strong34 | FixtureId::Strong36 => short.push(("strong", strong)),
        FixtureId::No5Cdc30 => long.push(("2-regular-subgraph-in-a-cdc-but-no-5-cdc", subgraph_without_5cdc)),
        FixtureId::No5Cdc36 => {
            short.push(("cyclically-5-edge-connected", cyclically_5));
            long.push(("2-regular-subgraph-in-a-cdc-but-no-5-cdc", subgraph_without_5cdc));
        }
        FixtureId::Perm34 => {
            short.extend([("cyclically-5-edge-connected", cyclically_5 as Test), ("permutation", permutation), ("not-petersen", not_petersen)]);
            short.push(("defining-2-factor-in-no-cdc", defining_factor_blocks_cdc));
        }
    }
    (short, long)
}

pub fn verify_fixture(id: FixtureId, tier: Tier) -> Vec<FixtureCheck> {
    let graphs = load_fixture(id);
    let (order, count) = id.shape();
    let shape_ok = graphs.len() == count && graphs.iter().all(|g| g.order() == order);
    let mut out = vec![FixtureCheck {
        fixture: id.name().to_string(),
        check: format!("{count} graph{} of order {order}", if count == 1 { "" } else { "s" }),
        passed: if shape_ok { graphs.len() } else { 0 },
        failed: if shape_ok { 0 } else { graphs.len().max(1) },
        limited: 0,
        total: count,
    }];
    let (short, long) = checks(id);
    let selected = short.into_iter().chain(if tier == Tier::Long { long } else { Vec::new() });
    for (name, test) in selected {
        let mut c = FixtureCheck { fixture: id.name().to_string(), check: name.to_string(), passed: 0, failed: 0, limited: 0, total: graphs.len() };
        run_ordered(&graphs, worker_count(), |g| test(g, tier), |_, r| match r {
            Outcome::Found(()) => c.passed += 1,
            Outcome::Exhausted => c.failed += 1,
            Outcome::ResourceLimit => c.limited += 1,
        });
        out.push(c);
    }
    out
}
