//! graph6 encoding and decoding, bit-exact to the published format:
//! header-less 6-bit bytes, upper triangle of the adjacency matrix in
//! column-major order. The long size form (`~` prefix, up to 258047
//! vertices) is supported; sparse6 is not.

use crate::multipole::{Graph, GraphError};
use thiserror::Error;

const MAX_LONG_FORM: usize = 258047; // 2^18 - 1

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("sparse6 input (':' prefix) is not supported")]
    Sparse6,
    #[error("digraph6 input ('&' prefix) is not supported")]
    Digraph6,
    #[error("invalid byte {byte:#04x} at position {pos}")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("size header truncated")]
    TruncatedHeader,
    #[error("graph on {0} vertices does not fit the supported encodings")]
    TooLarge(usize),
    #[error("bit vector truncated: expected {expected} bytes after the header, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after the bit vector")]
    TrailingData,
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("graphs with loops or parallel edges cannot be encoded")]
    NotSimple,
    #[error("decoded graph is not cubic: {0}")]
    NotCubic(GraphError),
}

/// Encodes a simple cubic graph; vertex order is preserved.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::NotSimple);
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_LONG_FORM {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.links() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adj[i * n + j]);
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 line into a cubic graph. An optional `>>graph6<<`
/// header and trailing line ends are tolerated.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\r', '\n']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b':' || bytes[0] == b';' {
        return Err(Graph6Error::Sparse6);
    }
    if bytes[0] == b'&' {
        return Err(Graph6Error::Digraph6);
    }
    let (n, body) = decode_size(bytes)?;
    let header_len = bytes.len() - body.len();
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData);
    }
    let mut links = Vec::new();
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    pos: header_len + bit / 6,
                    byte,
                });
            }
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                links.push((i, j));
            }
            bit += 1;
            if bit == bit_count {
                break 'outer;
            }
        }
    }
    if bit_count % 6 != 0 {
        let last = body[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::InvalidByte {
                pos: header_len + expected - 1,
                byte: last,
            });
        }
        let pad = 6 - bit_count % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Graph::new(n, links).map_err(Graph6Error::NotCubic)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let b0 = bytes[0];
    if b0 == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form for n >= 2^18; out of scope here
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let mut n = 0usize;
        for (pos, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::InvalidByte { pos: pos + 1, byte: b });
            }
            n = (n << 6) | (b - 63) as usize;
        }
        Ok((n, &bytes[4..]))
    } else if (63..126).contains(&b0) {
        Ok(((b0 - 63) as usize, &bytes[1..]))
    } else {
        Err(Graph6Error::InvalidByte { pos: 0, byte: b0 })
    }
}

/// Parses a graph6 file, one graph per line. Blank lines are skipped;
/// each entry carries its 1-based line number.
pub fn decode_graph6_lines(text: &str) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| (i + 1, decode_graph6(line)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{k4, petersen};
    use crate::structure::are_isomorphic;

    #[test]
    fn k4_encodes_to_the_hand_computed_string() {
        // n = 4 -> 'C'; the six upper-triangle bits are all 1 -> 63 -> '~'
        assert_eq!(encode_graph6(&k4()).unwrap(), "C~");
    }

    #[test]
    fn k4_decodes_back() {
        let g = decode_graph6("C~").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(are_isomorphic(&g, &k4()));
    }

    #[test]
    fn petersen_round_trip_preserves_vertex_order() {
        let p = petersen();
        let encoded = encode_graph6(&p).unwrap();
        let back = decode_graph6(&encoded).unwrap();
        assert_eq!(back.links(), p.links());
        assert!(are_isomorphic(&back, &p));
    }

    #[test]
    fn sparse6_is_rejected() {
        assert!(matches!(decode_graph6(":Fa@x^"), Err(Graph6Error::Sparse6)));
    }

    #[test]
    fn round_trip_across_the_small_cubic_census() {
        use crate::generators::small_cubic_graphs;
        for n in [4, 6, 8, 10] {
            for g in small_cubic_graphs(n) {
                let back = decode_graph6(&encode_graph6(&g).unwrap()).unwrap();
                assert_eq!(back.links(), g.links());
            }
        }
    }

    #[test]
    fn long_form_covers_graphs_past_62_vertices() {
        use crate::generators::{build_family, FamilyKind, FamilySpec};
        // 6 Petersen poles and one K4 pole: 64 vertices
        let spec = FamilySpec::new(FamilyKind::Cc2, 6, 1).unwrap();
        let g = build_family(&spec).unwrap();
        assert_eq!(g.vertex_count(), 64);
        let encoded = encode_graph6(&g).unwrap();
        assert_eq!(encoded.as_bytes()[0], 126, "long size header");
        let back = decode_graph6(&encoded).unwrap();
        assert_eq!(back.vertex_count(), 64);
        assert_eq!(back.links(), g.links());
    }

    #[test]
    fn truncation_is_detected() {
        let p = encode_graph6(&petersen()).unwrap();
        let cut = &p[..p.len() - 1];
        assert!(matches!(
            decode_graph6(cut),
            Err(Graph6Error::Truncated { .. })
        ));
    }

    #[test]
    fn non_cubic_input_is_rejected() {
        // 5-vertex graph with degrees below 3
        assert!(matches!(
            decode_graph6("DQc"),
            Err(Graph6Error::NotCubic(_))
        ));
    }

    #[test]
    fn line_decoding_reports_per_line() {
        let text = "C~\n\nnot-a-graph\n";
        let rows = decode_graph6_lines(text);
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].0, 1);
        assert!(rows[0].1.is_ok());
        assert_eq!(rows[1].0, 3);
        assert!(rows[1].1.is_err());
    }
}
