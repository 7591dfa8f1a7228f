//! graph6 and the upper-adjacency text format, plus the built-in fixture
//! sets.

use std::fmt;
use std::str::FromStr;

use snarkcore::{CubicGraph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("graph6: empty line")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteRange { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("token {0:?} is not a vertex number")]
    Token(String),
    #[error("vertex {vertex} lists neighbour {neighbor}, which is not higher")]
    NotHigher { vertex: usize, neighbor: usize },
    #[error("edge {0}-{1} appears twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} ends with degree {degree}")]
    Degree { vertex: usize, degree: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes the upper triangle column by column, six bits per byte.
pub fn encode_graph6(g: &CubicGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let (mut acc, mut k) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                (acc, k) = (0, 0);
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Decodes a graph6 line into its order and edge list, without any degree
/// requirement.
pub fn decode_graph6_edges(line: &str) -> Result<(usize, Vec<(usize, usize)>), CodecError> {
    let bytes = line.trim_end().strip_prefix(">>graph6<<").unwrap_or(line.trim_end()).as_bytes();
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(CodecError::ByteRange { offset, byte: bytes[offset] });
    }
    let (n, data) = match bytes {
        [] => return Err(CodecError::Empty),
        [126, 126, ..] => {
            let n = bytes[2..8.min(bytes.len())].iter().fold(0usize, |a, b| a << 6 | (b - 63) as usize);
            (n, bytes.get(8..).unwrap_or(&[]))
        }
        [126, ..] => {
            let n = bytes[1..4.min(bytes.len())].iter().fold(0usize, |a, b| a << 6 | (b - 63) as usize);
            (n, bytes.get(4..).unwrap_or(&[]))
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let expected = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if data.len() != expected {
        return Err(CodecError::Length { expected, found: data.len() });
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[bit / 6] - 63) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok((n, edges))
}

/// Decodes a graph6 line that must describe a simple cubic graph.
pub fn decode_graph6(line: &str) -> Result<CubicGraph, CodecError> {
    let (n, edges) = decode_graph6_edges(line)?;
    Ok(CubicGraph::from_edges(n, &edges)?)
}

/// Parses brace-delimited, comma-separated higher neighbour lists with
/// 1-based vertices. Vertex `v` consumes exactly as many entries as it still
/// lacks after its lower neighbours are counted.
pub fn parse_upper_adjacency(text: &str) -> Result<CubicGraph, CodecError> {
    let tokens = text
        .split(|c: char| c == ',' || c == '{' || c == '}' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| CodecError::Token(t.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); 2];
    let mut rest = tokens.as_slice();
    let mut v = 1;
    while !rest.is_empty() || v < lists.len() {
        if lists.len() <= v {
            lists.resize(v + 1, Vec::new());
        }
        let need = 3usize.saturating_sub(lists[v].len());
        for _ in 0..need {
            let Some((&w, tail)) = rest.split_first() else { break };
            rest = tail;
            if w <= v {
                return Err(CodecError::NotHigher { vertex: v, neighbor: w });
            }
            if lists.len() <= w {
                lists.resize(w + 1, Vec::new());
            }
            if lists[v].contains(&w) {
                return Err(CodecError::DuplicateEdge(v, w));
            }
            lists[v].push(w);
            lists[w].push(v);
        }
        v += 1;
    }
    let n = lists.len() - 1;
    if let Some(v) = (1..=n).find(|&v| lists[v].len() != 3) {
        return Err(CodecError::Degree { vertex: v, degree: lists[v].len() });
    }
    let zero_based: Vec<Vec<usize>> = lists[1..].iter().map(|l| l.iter().map(|w| w - 1).collect()).collect();
    Ok(CubicGraph::from_neighbor_lists(n, &zero_based)?)
}

/// Inverse of [`parse_upper_adjacency`] for the same labelling.
pub fn emit_upper_adjacency(g: &CubicGraph) -> String {
    let items: Vec<String> = (0..g.order())
        .flat_map(|v| g.neighbors(v).into_iter().filter(move |&w| w > v))
        .map(|w| (w + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(", "))
}

/// The built-in graph sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixtureId {
    Petersen,
    Als,
    Stable32,
    Strong34,
    Strong36,
    No5Cdc30,
    No5Cdc36,
    Perm34,
}

impl FixtureId {
    pub const ALL: [FixtureId; 8] = [
        FixtureId::Petersen,
        FixtureId::Als,
        FixtureId::Stable32,
        FixtureId::Strong34,
        FixtureId::Strong36,
        FixtureId::No5Cdc30,
        FixtureId::No5Cdc36,
        FixtureId::Perm34,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Petersen => "petersen",
            FixtureId::Als => "appendix-ALS",
            FixtureId::Stable32 => "appendix-stable32",
            FixtureId::Strong34 => "appendix-strong34",
            FixtureId::Strong36 => "appendix-strong36",
            FixtureId::No5Cdc30 => "appendix-no5cdc30",
            FixtureId::No5Cdc36 => "appendix-no5cdc36",
            FixtureId::Perm34 => "appendix-perm34",
        }
    }

    /// `(order, number of graphs)`.
    pub fn shape(self) -> (usize, usize) {
        match self {
            FixtureId::Petersen => (10, 1),
            FixtureId::Als => (26, 1),
            FixtureId::Stable32 => (32, 4),
            FixtureId::Strong34 => (34, 7),
            FixtureId::Strong36 => (36, 25),
            FixtureId::No5Cdc30 => (30, 68),
            FixtureId::No5Cdc36 => (36, 44),
            FixtureId::Perm34 => (34, 12),
        }
    }

    fn text(self) -> &'static str {
        match self {
            FixtureId::Petersen => PETERSEN,
            FixtureId::Als => include_str!("../fixtures/als26.txt"),
            FixtureId::Stable32 => include_str!("../fixtures/stable32.txt"),
            FixtureId::Strong34 => include_str!("../fixtures/strong34.txt"),
            FixtureId::Strong36 => include_str!("../fixtures/strong36.txt"),
            FixtureId::No5Cdc30 => include_str!("../fixtures/no5cdc30.txt"),
            FixtureId::No5Cdc36 => include_str!("../fixtures/no5cdc36.txt"),
            FixtureId::Perm34 => include_str!("../fixtures/perm34.txt"),
        }
    }
}

/// Outer 5-cycle 1..5, spokes to 6..10, inner pentagram.
const PETERSEN: &str = "{2, 5, 6, 3, 7, 4, 8, 5, 9, 10, 8, 9, 9, 10, 10}";

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureId {
    type Err = CodecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| CodecError::UnknownFixture(s.to_string()))
    }
}

/// Splits LaTeX-escaped fixture text into one `{...}` block per graph.
fn fixture_blocks(text: &str) -> Vec<String> {
    let plain = text.replace('\\', "");
    plain
        .split_inclusive('}')
        .map(str::trim)
        .filter(|b| b.contains('{'))
        .map(str::to_string)
        .collect()
}

/// The graphs of a fixture set in printed order.
pub fn load_fixture(id: FixtureId) -> Vec<CubicGraph> {
    fixture_blocks(id.text())
        .iter()
        .map(|b| parse_upper_adjacency(b).unwrap_or_else(|e| panic!("fixture {id}: {e}")))
        .collect()
}
