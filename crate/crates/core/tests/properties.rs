mod common;

use common::{random_cubic, random_permutation, Rng};
use proptest::prelude::*;
use snarkcore::cdc::{four_cdc_from_coloring, CdcQuery};
use snarkcore::check::{is_cdc, is_k_cdc, is_oriented_cdc, is_proper_edge_coloring};
use snarkcore::color::three_edge_coloring;
use snarkcore::cycle::decompose_two_regular;
use snarkcore::factor::{two_factors, TwoRegularSubgraph};
use snarkcore::{are_isomorphic, automorphism_count, canonical_code, Bits, CubicGraph};

fn graph(seed: u64, n: usize) -> CubicGraph {
    random_cubic(n, &mut Rng::new(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_code_ignores_labelling(seed in any::<u64>(), half in 2usize..=30) {
        let mut rng = Rng::new(seed);
        let g = random_cubic(2 * half, &mut rng);
        let h = g.relabel(&random_permutation(g.order(), &mut rng));
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        prop_assert_eq!(canonical_code(&g).to_graph(), canonical_code(&h).to_graph());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn codes_round_trip(seed in any::<u64>(), half in 2usize..=40) {
        let g = graph(seed, 2 * half);
        let canon = canonical_code(&g).to_graph();
        prop_assert!(are_isomorphic(&g, &canon));
        prop_assert_eq!(automorphism_count(&g), automorphism_count(&canon));
    }

    #[test]
    fn colourings_give_four_coloured_covers(seed in any::<u64>(), half in 4usize..=20, mask in any::<u64>()) {
        let g = graph(seed, 2 * half);
        let Some(col) = three_edge_coloring(&g) else { return Ok(()) };
        prop_assert!(is_proper_edge_coloring(&g, col.colors(), 3));
        let c = 1 + (mask % 3) as u8;
        let comps = decompose_two_regular(&g, col.two_factor_without(c)).unwrap();
        let picked: Vec<_> = comps.iter().enumerate().filter(|(i, _)| mask >> (8 + i % 48) & 1 == 1).map(|(_, x)| x.clone()).collect();
        let d = TwoRegularSubgraph::from_cycles(&g, if picked.is_empty() { &comps } else { &picked }).unwrap();
        let cover = four_cdc_from_coloring(&g, &col, &d);
        prop_assert!(is_cdc(&g, &cover.cycles));
        prop_assert!(is_k_cdc(&g, &cover.cycles, cover.coloring.as_ref().unwrap(), 4));
        prop_assert!(d.components().iter().all(|x| cover.contains(x)));
    }

    #[test]
    fn found_covers_validate(seed in any::<u64>(), half in 2usize..=9) {
        let g = graph(seed, 2 * half);
        if g.has_bridge() {
            prop_assert!(!CdcQuery::new(&g).find().is_found());
            return Ok(());
        }
        let cover = CdcQuery::new(&g).find().found().expect("bridgeless graphs in range have covers");
        prop_assert!(is_cdc(&g, &cover.cycles));
        if let Some(c) = CdcQuery::new(&g).colours(5).orientable().find().found() {
            prop_assert!(is_k_cdc(&g, &c.cycles, c.coloring.as_ref().unwrap(), 5));
            prop_assert!(is_oriented_cdc(&g, &c.cycles, c.orientation.as_ref().unwrap()));
        }
    }

    /// A cover in which the fixed cycles are a whole colour class is also one
    /// in which they lie inside a class.
    #[test]
    fn exact_class_covers_are_class_covers(seed in any::<u64>(), half in 3usize..=8, pick in any::<prop::sample::Index>()) {
        let g = graph(seed, 2 * half);
        let factors = two_factors(&g);
        if g.has_bridge() || factors.is_empty() {
            return Ok(());
        }
        let d = pick.get(&factors);
        let exact = CdcQuery::new(&g).containing(d.components()).colours(5).exact_class().find().found();
        let loose = CdcQuery::new(&g).containing(d.components()).colours(5).find().is_found();
        if let Some(c) = exact {
            prop_assert!(loose);
            let colours = c.coloring.as_ref().unwrap();
            let class: Bits = c.cycles.iter().zip(colours).filter(|(_, &k)| k == 1).fold(Bits::default(), |a, (x, _)| a.union(x.edge_set()));
            prop_assert_eq!(class, d.edge_set());
        }
    }
}
