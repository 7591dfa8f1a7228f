//! Acceptance run: one PASS/FAIL line per criterion. `SNARKKIT_TIER=long`
//! adds the expensive orders and fixture checks.

mod common;

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::oracle::{all_connected_cubic, three_connected};
use common::{random_cubic, random_permutation, Rng};
use snarkcore::cdc::{self, four_cdc_from_coloring, CdcQuery, CycleDoubleCover};
use snarkcore::color::{self, classify, Class};
use snarkcore::cycle::{self, Cycle, Hamiltonicity};
use snarkcore::factor::{self, TwoRegularSubgraph};
use snarkcore::generate::{
    derive_colorings, generate_orders, insert_edge, lookahead_forbidden_pairs, square_pair_prunable, EdgePair,
    GraphClass, Shard,
};
use snarkcore::{automorphism_count, canonical_code, check, CubicGraph};
use snarkkit::props::{evaluate, Property, Tier};
use snarkkit::registry::{check_graph, is_petersen, petersen, ConjectureId, Verdict};
use snarkkit::{decode_graph6, emit_upper_adjacency, encode_graph6, load_fixture, parse_upper_adjacency, FixtureId};

type Catalogue = BTreeMap<usize, Vec<CubicGraph>>;
type Outcome = Result<String, String>;

fn generate(orders: &[usize], class: GraphClass) -> Catalogue {
    let (found, stats) = generate_orders(orders, class, Shard::WHOLE, None).expect("valid orders");
    assert!(stats.complete);
    found.into_iter().map(|(n, codes)| (n, codes.iter().map(|c| c.to_graph()).collect())).collect()
}

fn expect<T: PartialEq + Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn histogram(values: impl IntoIterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

fn counts(cat: &Catalogue, keep: impl Fn(&CubicGraph) -> bool) -> BTreeMap<usize, usize> {
    cat.iter().map(|(&n, gs)| (n, gs.iter().filter(|g| keep(g)).count())).collect()
}

fn pick(map: &BTreeMap<usize, usize>, keys: &[usize]) -> Vec<(usize, usize)> {
    keys.iter().map(|k| (*k, map.get(k).copied().unwrap_or(0))).collect()
}

fn cyclically_5(g: &CubicGraph) -> bool {
    g.cyclic_edge_connectivity().at_least(5)
}

struct Run {
    long: bool,
    failures: usize,
}

impl Run {
    fn criterion(&mut self, id: &str, title: &str, body: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {id} {title}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL {id} {title}: {detail} ({secs:.1}s)");
            }
        }
    }
}

fn main() -> ExitCode {
    let long = std::env::var("SNARKKIT_TIER").is_ok_and(|t| t == "long");
    let mut run = Run { long, failures: 0 };
    println!("acceptance, {} tier", if long { "long" } else { "default" });

    let weak: OnceCell<Catalogue> = OnceCell::new();
    let weak = || weak.get_or_init(|| generate(&[10, 12, 14, 16, 18, 20, 22, 24], GraphClass::WeakSnark));
    let snarks: OnceCell<Catalogue> = OnceCell::new();
    let snarks = || {
        snarks.get_or_init(|| {
            weak().iter().map(|(&n, gs)| (n, gs.iter().filter(|g| g.girth() >= 5).cloned().collect())).collect()
        })
    };
    let cyc4: OnceCell<Catalogue> = OnceCell::new();
    let cyc4 = || cyc4.get_or_init(|| generate(&[8, 10, 12, 14, 16], GraphClass::Cyc4));
    let connected: OnceCell<Catalogue> = OnceCell::new();
    let connected = || connected.get_or_init(|| (2..=7).map(|h| (2 * h, all_connected_cubic(2 * h))).collect());

    run.criterion("1", "snark counts", || {
        let weak = weak();
        let snarks = snarks();
        expect("weak snarks", pick(&counts(weak, |_| true), &[22, 24]), vec![(22, 31), (24, 155)])?;
        let by_order = counts(snarks, |_| true);
        expect("snarks", pick(&by_order, &[10, 18, 20, 22, 24]), vec![(10, 1), (18, 2), (20, 6), (22, 20), (24, 38)])?;
        expect("snarks at 12, 14, 16", pick(&by_order, &[12, 14, 16]), vec![(12, 0), (14, 0), (16, 0)])?;
        let five = counts(snarks, cyclically_5);
        expect("cyclically 5-connected snarks", pick(&five, &[20, 22, 24]), vec![(20, 1), (22, 2), (24, 2)])?;
        Ok(format!("weak {:?}, snark {:?}, cyclically 5-connected {:?}", counts(weak, |_| true), by_order, five))
    });
    if run.long {
        run.criterion("1L", "snark counts at 26", || {
            let weak = generate(&[26], GraphClass::WeakSnark).remove(&26).unwrap();
            let snarks: Vec<_> = weak.iter().filter(|g| g.girth() >= 5).collect();
            let five = snarks.iter().filter(|g| cyclically_5(g)).count();
            expect("weak, snark, cyclically 5-connected", (weak.len(), snarks.len(), five), (1297, 280, 10))?;
            Ok(format!("weak {}, snark {}, cyclically 5-connected {five}", weak.len(), snarks.len()))
        });
    }

    run.criterion("2", "cyclically 4-connected counts and total colouring", || {
        let cat = cyc4();
        let total = counts(cat, |_| true);
        expect("counts", pick(&total, &[8, 10, 12, 14, 16]), vec![(8, 2), (10, 5), (12, 18), (14, 84), (16, 607)])?;
        let five: BTreeMap<usize, usize> = [8, 10, 12, 14]
            .iter()
            .map(|n| (*n, cat[n].iter().filter(|g| color::total_chromatic_number(g) == 5).count()))
            .collect();
        expect("total chromatic number 5", pick(&five, &[8, 10, 12, 14]), vec![(8, 1), (10, 3), (12, 5), (14, 2)])?;
        Ok(format!("{total:?}; total chromatic 5 {five:?}"))
    });

    run.criterion("3", "3-connected graphs against brute force", || {
        let generated = generate(&[4, 6, 8, 10, 12, 14], GraphClass::Cubic3c);
        let mut sizes = Vec::new();
        for (&n, all) in connected() {
            let mut oracle: Vec<_> = all.iter().filter(|g| three_connected(g)).map(canonical_code).collect();
            oracle.sort();
            let ours: Vec<_> = generated[&n].iter().map(canonical_code).collect();
            expect(&format!("order {n}"), &ours, &oracle)?;
            sizes.push((n, ours.len()));
        }
        expect("counts", sizes.clone(), vec![(4, 1), (6, 2), (8, 4), (10, 14), (12, 57), (14, 341)])?;
        Ok(format!("{sizes:?}"))
    });

    run.criterion("4", "snark property tables", || {
        let snarks = snarks();
        let hypo = counts(snarks, |g| cycle::hamiltonicity(g) == Hamiltonicity::Hypohamiltonian);
        expect("hypohamiltonian", pick(&hypo, &[10, 18, 20, 22, 24]), vec![(10, 1), (18, 2), (20, 1), (22, 2), (24, 0)])?;
        let perm = counts(snarks, |g| !factor::permutation_structures(g).is_empty());
        expect("permutation", pick(&perm, &[10, 18]), vec![(10, 1), (18, 2)])?;
        for (n, gs) in snarks {
            for g in gs {
                expect(&format!("oddness at {n}"), factor::oddness(g), Some(2))?;
                expect(&format!("circumference at {n}"), cycle::circumference(g).0, n - 1)?;
                expect(&format!("total chromatic number at {n}"), color::total_chromatic_number(g), 4)?;
            }
        }
        let extremes: Vec<_> = snarks[&24].iter().map(|g| factor::two_factor_extremes(g).unwrap()).collect();
        let odd = histogram(extremes.iter().map(|x| x.max_odd_components));
        let comps = histogram(extremes.iter().map(|x| x.max_components));
        expect("most odd components at 24", odd, BTreeMap::from([(2, 34), (4, 4)]))?;
        expect("most components at 24", comps, BTreeMap::from([(3, 26), (4, 12)]))?;
        let rows = [
            (10, vec![(120, 1)]),
            (18, vec![(4, 1), (8, 1)]),
            (20, vec![(1, 2), (2, 1), (4, 2), (20, 1)]),
            (22, vec![(1, 4), (2, 11), (4, 1), (8, 1), (12, 2), (16, 1)]),
            (24, vec![(1, 21), (2, 9), (4, 8)]),
        ];
        for (n, row) in rows {
            let h = histogram(snarks[&n].iter().map(|g| automorphism_count(g) as usize));
            expect(&format!("automorphisms at {n}"), h, row.into_iter().collect())?;
        }
        let mut stable = Vec::new();
        for n in [22, 24] {
            let per_graph: Vec<Vec<Cycle>> = snarks[&n].iter().map(cycle::stable_cycles).collect();
            let with = per_graph.iter().filter(|s| !s.is_empty()).count();
            let shortest = per_graph.iter().flatten().map(Cycle::len).min();
            let most = per_graph.iter().map(Vec::len).max();
            stable.push((n, with, shortest, most));
        }
        expect("stable cycles", stable.clone(), vec![(22, 2, Some(20), Some(1)), (24, 1, Some(22), Some(2))])?;
        let unique = counts(snarks, |g| cdc::unique_cdc_cycles(g) > 0);
        expect("graphs with uniquely extendable cycles", pick(&unique, &[10, 18, 20, 22, 24]), vec![(10, 1), (18, 1), (20, 2), (22, 6), (24, 9)])?;
        Ok(format!("hypohamiltonian {hypo:?}; permutation {perm:?}; stable {stable:?}; unique-cover cycles {unique:?}"))
    });

    run.criterion("5", "cycle double covers", || {
        let snarks = snarks();
        let ids = [ConjectureId::Cdcc, ConjectureId::O5cdc, ConjectureId::Cycle5cdc, ConjectureId::Semiext, ConjectureId::StrongSemiext];
        let mut checked = 0;
        for n in [10, 18, 20, 22] {
            for g in &snarks[&n] {
                for id in ids {
                    let v = check_graph(id, g, Tier::Long);
                    expect(&format!("{id} at {n}"), v.name(), "holds")?;
                }
                checked += 1;
            }
        }
        let no_even: Vec<_> = cyc4().values().flatten().filter(|g| cdc::find_even_cdc(g).is_none()).collect();
        expect("cyclically 4-connected graphs without an even cover", no_even.len(), 1)?;
        expect("the exception is Petersen", is_petersen(no_even[0]), true)?;
        let smallest = connected()
            .iter()
            .find(|(_, gs)| gs.iter().any(|g| three_connected(g) && !is_petersen(g) && cdc::find_even_cdc(g).is_none()))
            .map(|(&n, _)| n);
        expect("smallest 3-connected non-Petersen graph without an even cover", smallest, Some(12))?;
        for g in &snarks[&18] {
            let blocked = factor::two_factors(g).iter().any(|d| cdc::extend_to_cdc(g, d).is_none());
            expect("18-vertex snark with a non-extendable 2-factor", blocked, true)?;
        }
        let p = petersen();
        expect("Petersen 2-factors that extend", factor::two_factors(&p).iter().filter(|d| cdc::extend_to_cdc(&p, d).is_some()).count(), 0)?;
        Ok(format!("{checked} snarks up to 22 vertices; even covers fail only on Petersen"))
    });

    run.criterion("6", "shortest cycle covers", || {
        let mut lengths = BTreeMap::new();
        for (&n, gs) in snarks().range(..=22) {
            for g in gs {
                let (len, cover) = cdc::shortest_cycle_cover(g).ok_or("no cover")?;
                expect("valid cover", check::is_cycle_cover(g, &cover), true)?;
                let m = g.size();
                expect("at most 7m/5", 5 * len <= 7 * m, true)?;
                let want = if is_petersen(g) { 21 } else { 2 * n };
                expect(&format!("shortest cover at {n}"), len, want)?;
                *lengths.entry((n, len)).or_insert(0) += 1;
            }
        }
        Ok(format!("(order, length) -> graphs {lengths:?}"))
    });

    run.criterion("7", "fixtures", || {
        for id in FixtureId::ALL {
            let graphs = load_fixture(id);
            let (order, count) = id.shape();
            expect(id.name(), (graphs.len(), graphs.iter().all(|g| g.order() == order)), (count, true))?;
        }
        let als = load_fixture(FixtureId::Als).remove(0);
        expect("ALS graph", (als.order(), classify(&als), factor::all_two_factors_odd(&als)), (26, Class::Snark, true))?;
        expect("ALS refutes the odd 2-factor statement", check_graph(ConjectureId::AlsOdd2Factors, &als, Tier::Long).name(), "counterexample")?;
        expect("strong34", load_fixture(FixtureId::Strong34).iter().all(cdc::is_strong_snark), true)?;
        let mut blocked = 0;
        for g in load_fixture(FixtureId::Perm34) {
            expect("perm34 is a snark", classify(&g), Class::Snark)?;
            expect("perm34 cyclic connectivity", g.cyclic_edge_connectivity().finite(), Some(5))?;
            let defining = factor::permutation_structures(&g);
            expect("perm34 is a permutation graph", defining.is_empty(), false)?;
            expect("perm34 defining 2-factors in no cover", defining.iter().all(|d| cdc::extend_to_cdc(&g, d).is_none()), true)?;
            for id in [ConjectureId::ZhangPerm, ConjectureId::Jackson2Factor] {
                expect(&format!("perm34 refutes {id}"), check_graph(id, &g, Tier::Long).name(), "counterexample")?;
            }
            expect("perm34 refutes fgj3", matches!(check_graph(ConjectureId::Fgj3, &g, Tier::Long), Verdict::Counterexample(_)), true)?;
            blocked += defining.len();
        }
        let blocker = no5cdc30_blocking_factor()?;
        let mut detail = format!("cardinalities ok; perm34: {blocked} defining 2-factors in no cover; {blocker}");
        if long {
            for g in load_fixture(FixtureId::Stable32) {
                expect("stable32 cyclic connectivity", g.cyclic_edge_connectivity().finite(), Some(5))?;
                expect("stable32 has a stable cycle", cycle::stable_cycles(&g).is_empty(), false)?;
            }
            detail.push_str("; stable32 stable with cyclic connectivity 5");
        }
        Ok(detail)
    });

    run.criterion("8", "property checks", || {
        let mut rng = Rng::new(8);
        for _ in 0..1000 {
            let g = random_cubic(2 * (2 + rng.below(41)), &mut rng);
            expect("graph6 round trip", decode_graph6(&encode_graph6(&g)).as_ref(), Ok(&g))?;
            expect("adjacency round trip", parse_upper_adjacency(&emit_upper_adjacency(&g)).as_ref(), Ok(&g))?;
            let h = g.relabel(&random_permutation(g.order(), &mut rng));
            expect("canonical code after relabelling", canonical_code(&h), canonical_code(&g))?;
        }
        for (&n, gs) in connected() {
            for g in gs {
                let colourable = color::is_colourable(g);
                expect(&format!("colourable iff oddness 0 at {n}"), colourable, factor::oddness(g) == Some(0))?;
                if n > 12 || !colourable {
                    continue;
                }
                let forbidden = lookahead_forbidden_pairs(g, &derive_colorings(g));
                for e1 in 0..g.size() {
                    for e2 in e1 + 1..g.size() {
                        let pair = EdgePair::new(e1, e2);
                        if forbidden.contains(&pair) || square_pair_prunable(g, pair) {
                            expect("pruned child colourable", color::is_colourable(&insert_edge(g, pair).unwrap()), true)?;
                        }
                    }
                }
            }
        }
        let mut built = 0;
        while built < 200 {
            let g = random_cubic(2 * (4 + rng.below(20)), &mut rng);
            let Some(col) = color::three_edge_coloring(&g) else { continue };
            let comps = cycle::decompose_two_regular(&g, col.two_factor_without(1 + rng.below(3) as u8)).unwrap();
            let d = TwoRegularSubgraph::from_cycles(&g, &comps[..1 + rng.below(comps.len())]).unwrap();
            let cover = four_cdc_from_coloring(&g, &col, &d);
            expect("4-coloured cover", check::is_k_cdc(&g, &cover.cycles, cover.coloring.as_ref().unwrap(), 4), true)?;
            built += 1;
        }
        let mut sample = vec![petersen()];
        sample.extend(snarks()[&18].iter().cloned());
        sample.extend(cyc4()[&12].iter().take(4).cloned());
        let mut evaluated = 0;
        for g in &sample {
            for &p in Property::ALL {
                evaluate(g, p, Tier::Long);
                evaluated += 1;
            }
        }
        Ok(format!("1000 round trips and relabellings, connected graphs to 14, 200 covers, {evaluated} re-checked evaluations"))
    });

    println!("{} failed", run.failures);
    if run.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// Whether the cycles of `cover` can be properly coloured with `k` colours,
/// with `pinned` all in colour 1.
fn colourable(cover: &CycleDoubleCover, pinned: &[Cycle], k: u8) -> bool {
    fn assign(i: usize, colours: &mut Vec<u8>, fixed: &[bool], k: u8, clash: &dyn Fn(usize, usize) -> bool) -> bool {
        if i == colours.len() {
            return true;
        }
        let options = if fixed[i] { 1..=1 } else { 1..=k };
        for c in options {
            if (0..i).any(|j| colours[j] == c && clash(i, j)) {
                continue;
            }
            colours[i] = c;
            if assign(i + 1, colours, fixed, k, clash) {
                return true;
            }
        }
        colours[i] = 0;
        false
    }
    let cycles = &cover.cycles;
    let clash = |i: usize, j: usize| !cycles[i].edge_set().intersection(cycles[j].edge_set()).is_empty();
    let fixed: Vec<bool> = cycles.iter().map(|c| pinned.contains(c)).collect();
    assign(0, &mut vec![0; cycles.len()], &fixed, k, &clash)
}

/// A known 2-factor of graph 43 of the order-30 set: it lies in a double
/// cover, and no double cover containing it admits a proper 5-colouring of
/// its cycles, whether or not the 2-factor must share a colour.
fn no5cdc30_blocking_factor() -> Outcome {
    let g = &load_fixture(FixtureId::No5Cdc30)[43];
    let short = [1, 4, 9, 5, 2];
    let long = [3, 8, 14, 22, 23, 15, 24, 30, 25, 17, 18, 12, 6, 11, 13, 20, 21, 27, 19, 28, 29, 26, 16, 10, 7];
    let to_cycle = |seq: &[usize]| Cycle::new(g, &seq.iter().map(|v| v - 1).collect::<Vec<_>>()).ok_or("listed cycle is not a cycle");
    let d = [to_cycle(&short)?, to_cycle(&long)?];
    let factor = TwoRegularSubgraph::from_cycles(g, &d).ok_or("listed cycles overlap")?;
    expect("listed 2-factor spans", factor.is_spanning(g), true)?;
    expect("in a cover", cdc::extend_to_cdc(g, &factor).is_some(), true)?;
    expect("in a 5-coloured cover", cdc::find_k_cdc(g, 5, Some(&factor)).is_some(), false)?;
    let (mut covers, mut shared, mut free) = (0, 0, 0);
    let outcome = CdcQuery::new(g).containing(&d).for_each(|c| {
        covers += 1;
        shared += colourable(&c, &d, 5) as usize;
        free += colourable(&c, &[], 5) as usize;
        true
    });
    expect("all covers visited", outcome, snarkcore::Outcome::Exhausted)?;
    expect("5-colourable covers containing it", (shared, free), (0, 0))?;
    Ok(format!("no5cdc30 graph 43: {covers} covers contain the listed 2-factor, none 5-colourable"))
}
