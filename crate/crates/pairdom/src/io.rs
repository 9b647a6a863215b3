//! Text formats: graph6 and a whitespace edge list.
//!
//! graph6 follows the standard layout: a size header (one byte `n + 63` for
//! `n <= 62`, otherwise `~` followed by three bytes carrying 18 bits), then
//! the upper triangle of the adjacency matrix in column-major order packed
//! into 6-bit groups, each offset by 63. Decoding is strict: every byte must
//! lie in `63..=126`, the body must have exactly the expected length, and
//! padding bits must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_MAX_LONG: usize = 258_047;

fn g6_body_len(n: usize) -> usize {
    (n * (n.saturating_sub(1)) / 2).div_ceil(6)
}

/// Decodes a graph6 string (a trailing newline is tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedInput("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedInput(format!(
            "graph6 byte {b} outside the printable range 63..=126"
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::MalformedInput(
                "graph6 8-byte size header is not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::MalformedInput("truncated graph6 size header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if body.len() != g6_body_len(n) {
        return Err(Error::MalformedInput(format!(
            "graph6 body has {} bytes, expected {} for n={n}",
            body.len(),
            g6_body_len(n)
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[bit / 6] as usize - 63;
            if group >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // remaining bits of the final group are padding and must be zero
    while !bit.is_multiple_of(6) {
        let group = body[bit / 6] as usize - 63;
        if group >> (5 - bit % 6) & 1 == 1 {
            return Err(Error::MalformedInput(
                "nonzero padding bits in graph6 body".into(),
            ));
        }
        bit += 1;
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as a graph6 string (no trailing newline).
///
/// Panics if `n` exceeds the 18-bit size header (258047); inputs that large
/// are outside this crate's scope.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(
        n <= G6_MAX_LONG,
        "graph too large for the supported graph6 headers"
    );
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: `#` starts a comment, the first significant
/// line is `n <count>`, every following line is one `u v` edge. Duplicate
/// edges collapse; self-loops and out-of-range endpoints are errors.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter_map(|line| {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        let line = line.trim();
        (!line.is_empty()).then_some(line)
    });
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedInput("edge list has no header line".into()))?;
    let mut tokens = header.split_whitespace();
    let n = match (tokens.next(), tokens.next(), tokens.next()) {
        (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| {
            Error::MalformedInput(format!("invalid vertex count {count:?} in header"))
        })?,
        _ => {
            return Err(Error::MalformedInput(format!(
                "expected header `n <count>`, found {header:?}"
            )))
        }
    };
    let mut edges = Vec::new();
    for line in lines {
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::MalformedInput(format!(
                    "expected edge line `u v`, found {line:?}"
                )))
            }
        };
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::MalformedInput(format!("invalid vertex id {t:?}")))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edges(n, edges)
}

/// Emits the edge-list format with edges in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
