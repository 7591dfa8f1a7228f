//! File formats, catalogue generation, per-graph analysis and the conjecture
//! registry for cubic graphs, on top of `snarkcore`.

pub mod catalog;
pub mod cli;
pub mod codec;
pub mod fixtures;
pub mod pool;
pub mod props;
pub mod record;
pub mod registry;
pub mod witness;

pub use codec::{
    decode_graph6, decode_graph6_edges, emit_upper_adjacency, encode_graph6, load_fixture, parse_upper_adjacency,
    CodecError, FixtureId,
};
