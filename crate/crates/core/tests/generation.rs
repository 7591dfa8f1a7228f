use std::collections::BTreeMap;

use snarkcore::generate::{generate_orders, GraphClass, Shard};
use snarkcore::CubicGraph;

fn catalogue(orders: &[usize], class: GraphClass) -> BTreeMap<usize, Vec<CubicGraph>> {
    let (found, stats) = generate_orders(orders, class, Shard::WHOLE, None).unwrap();
    assert!(stats.complete);
    found.into_iter().map(|(n, codes)| (n, codes.iter().map(|c| c.to_graph()).collect())).collect()
}

#[test]
fn cyc4_is_the_cyclically_4_connected_part_of_cubic3c() {
    let orders = [6, 8, 10, 12, 14];
    let all = catalogue(&orders, GraphClass::Cubic3c);
    let cyc4 = catalogue(&orders, GraphClass::Cyc4);
    for n in orders {
        let filtered: Vec<_> = all[&n].iter().filter(|g| g.cyclic_edge_connectivity().at_least(4)).cloned().collect();
        assert_eq!(filtered, cyc4[&n], "order {n}");
    }
    assert_eq!(cyc4[&14].len(), 84);
}

#[test]
fn snark_classes_are_nested() {
    let orders = [10, 12, 14, 16, 18, 20];
    let weak = catalogue(&orders, GraphClass::WeakSnark);
    let snark = catalogue(&orders, GraphClass::Snark);
    let snark5 = catalogue(&orders, GraphClass::Snark5);
    for n in orders {
        let girth5: Vec<_> = weak[&n].iter().filter(|g| g.girth() >= 5).cloned().collect();
        assert_eq!(girth5, snark[&n]);
        let cyc5: Vec<_> = snark[&n].iter().filter(|g| g.cyclic_edge_connectivity().at_least(5)).cloned().collect();
        assert_eq!(cyc5, snark5[&n]);
    }
    let counts: Vec<usize> = orders.iter().map(|n| snark[n].len()).collect();
    assert_eq!(counts, [1, 0, 0, 0, 2, 6]);
}

/// Smallest edge set, of at most six edges, whose removal leaves two
/// components that each contain a cycle.
fn brute_cyclic_connectivity(g: &CubicGraph) -> Option<u32> {
    fn cyclic_parts(g: &CubicGraph, removed: &[usize]) -> usize {
        let n = g.order();
        let mut comp = vec![usize::MAX; n];
        let mut parts = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let (mut vertices, mut degree) = (0, 0);
            let mut stack = vec![s];
            comp[s] = s;
            while let Some(v) = stack.pop() {
                vertices += 1;
                for (e, w) in g.incident(v).into_iter().zip(g.neighbors(v)) {
                    if removed.contains(&e) {
                        continue;
                    }
                    degree += 1;
                    if comp[w] == usize::MAX {
                        comp[w] = s;
                        stack.push(w);
                    }
                }
            }
            parts += (degree / 2 >= vertices) as usize;
        }
        parts
    }
    fn subsets(g: &CubicGraph, k: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return cyclic_parts(g, chosen) >= 2;
        }
        (from..g.size()).any(|e| {
            chosen.push(e);
            let hit = subsets(g, k, e + 1, chosen);
            chosen.pop();
            hit
        })
    }
    (1..=6).find(|&k| subsets(g, k, 0, &mut Vec::new())).map(|k| k as u32)
}

#[test]
fn cyclic_connectivity_matches_brute_force() {
    let mut graphs: Vec<CubicGraph> = catalogue(&[4, 6, 8, 10, 12], GraphClass::Cubic3c).into_values().flatten().collect();
    graphs.extend(catalogue(&[14], GraphClass::Cyc4).remove(&14).unwrap());
    for g in &graphs {
        let brute = brute_cyclic_connectivity(g);
        let fast = g.cyclic_edge_connectivity().finite().filter(|&k| k <= 6);
        assert_eq!(fast, brute, "{g:?}");
    }
}
