mod common;

use common::{random_cubic, Rng};
use proptest::prelude::*;
use snarkcore::{canonical_code, color};
use snarkkit::*;

#[test]
fn fixture_cardinalities() {
    for id in FixtureId::ALL {
        let graphs = load_fixture(id);
        let (order, count) = id.shape();
        assert_eq!(graphs.len(), count, "{id}");
        assert!(graphs.iter().all(|g| g.order() == order), "{id}");
        assert_eq!(id.name().parse::<FixtureId>().unwrap(), id);
    }
    assert!(matches!("appendix-x".parse::<FixtureId>(), Err(CodecError::UnknownFixture(_))));
}

#[test]
fn fixtures_are_snarks() {
    for id in FixtureId::ALL {
        for g in load_fixture(id) {
            assert_eq!(color::classify(&g), color::Class::Snark, "{id}");
        }
    }
}

#[test]
fn fixtures_round_trip() {
    for id in FixtureId::ALL {
        for g in load_fixture(id) {
            assert_eq!(parse_upper_adjacency(&emit_upper_adjacency(&g)).unwrap(), g);
            assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn first_als_string_has_26_vertices() {
    let text = "{2, 3, 4, 5, 6, 7, 8, 9, 10, 7, 9, 8, 10, 11, 12, 13, 14, 15, 16, 15, 17, 18, 19, 18, 20, 18, 21, \
                22, 21, 23, 23, 24, 22, 24, 25, 26, 26, 25, 26}";
    let g = parse_upper_adjacency(text).unwrap();
    assert_eq!(g.order(), 26);
    assert_eq!(g, load_fixture(FixtureId::Als)[0]);
}

#[test]
fn petersen_emits_and_reparses() {
    let p = load_fixture(FixtureId::Petersen).remove(0);
    let q = parse_upper_adjacency(&emit_upper_adjacency(&p)).unwrap();
    assert_eq!(canonical_code(&p), canonical_code(&q));
}

#[test]
fn random_graphs_round_trip() {
    let mut rng = Rng::new(11);
    for i in 0..1000 {
        let n = 4 + 2 * (i % 40);
        let g = random_cubic(n, &mut rng);
        let line = encode_graph6(&g);
        assert_eq!(decode_graph6(&line).unwrap(), g);
        assert_eq!(encode_graph6(&decode_graph6(&line).unwrap()), line);
        assert_eq!(parse_upper_adjacency(&emit_upper_adjacency(&g)).unwrap(), g);
    }
}

/// Bit layout against a direct reading of the format: bit `k` of the
/// upper triangle, in column order, is bit `5 - k % 6` of byte `k / 6`.
#[test]
fn graph6_bit_layout() {
    let mut rng = Rng::new(3);
    for _ in 0..50 {
        let g = random_cubic(12, &mut rng);
        let bytes = encode_graph6(&g).into_bytes();
        assert_eq!(bytes[0], 12 + 63);
        let mut k = 0;
        for j in 1..12 {
            for i in 0..j {
                let bit = (bytes[1 + k / 6] - 63) >> (5 - k % 6) & 1;
                assert_eq!(bit == 1, g.adjacent(i, j));
                k += 1;
            }
        }
    }
}

proptest! {
    #[test]
    fn round_trips_any_seed(seed in any::<u64>(), half in 2usize..42) {
        let g = random_cubic(2 * half, &mut Rng::new(seed));
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_upper_adjacency(&emit_upper_adjacency(&g)).unwrap(), g);
    }
}
