//! graph6 encoding (the nauty text format for simple undirected graphs).

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("malformed order header")]
    BadHeader,
    #[error("order {0} out of range")]
    OrderOutOfRange(u64),
    #[error("bit vector truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the bit vector")]
    TrailingBytes(usize),
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
}

fn sixes(bytes: &[u8], offset: usize) -> Result<Vec<u8>, Graph6Error> {
    bytes
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Graph6Error::BadByte {
                    offset: offset + i,
                    byte: b,
                })
            }
        })
        .collect()
}

fn bits_to_order(groups: &[u8]) -> u64 {
    groups.iter().fold(0u64, |acc, &g| (acc << 6) | g as u64)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let data = sixes(bytes, 0)?;
    let (order, body) = if data[0] != 63 {
        (data[0] as u64, &data[1..])
    } else if data.len() >= 2 && data[1] != 63 {
        if data.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bits_to_order(&data[1..4]);
        if n < 63 {
            return Err(Graph6Error::OrderOutOfRange(n));
        }
        (n, &data[4..])
    } else {
        if data.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bits_to_order(&data[2..8]);
        if n <= 258_047 || n as usize > MAX_ORDER {
            return Err(Graph6Error::OrderOutOfRange(n));
        }
        (n, &data[8..])
    };
    let n = order as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes(body.len() - expected));
    }
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 bits describe a simple graph"))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses newline-separated graph6 strings, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| Graph6Error::AtLine {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::*;

    #[test]
    fn k5_by_hand() {
        // n=5 -> 'D'; ten 1-bits padded to 111111 111100 -> '~' '{'
        assert_eq!(parse_graph6("D~{").unwrap(), complete(5));
        assert_eq!(emit_graph6(&complete(5)), "D~{");
    }

    #[test]
    fn known_encodings() {
        // path 0-2, 0-4, 1-3, 3-4 from the petgraph test corpus
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(emit_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn single_vertex_and_empty() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn large_order_header() {
        let g = cycle(70);
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6("D~"), Err(Graph6Error::Truncated { expected: 2, found: 1 })));
        assert!(matches!(parse_graph6("D~{?"), Err(Graph6Error::TrailingBytes(1))));
        assert!(matches!(parse_graph6("D~ "), Err(Graph6Error::BadByte { offset: 2, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Graph6Error::BadHeader)));
        // 3-byte header encoding an order below 63
        assert!(matches!(parse_graph6("~??@"), Err(Graph6Error::OrderOutOfRange(1))));
        assert_eq!(parse_graph6("D~~"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn multi_line() {
        let gs = parse_graph6_lines("D~{\n\nBw\n").unwrap();
        assert_eq!(gs, vec![complete(5), complete(3)]);
        let err = parse_graph6_lines("D~{\nD~\n").unwrap_err();
        assert!(matches!(err, Graph6Error::AtLine { line: 2, .. }));
    }
}
