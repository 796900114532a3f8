//! graph6 encoding: size field, then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per printable byte.

use super::SimpleGraph;
use crate::error::{GraphError, Graph6Error};

const HEADER: &[u8] = b">>graph6<<";

pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let take = |k: usize, from: usize| -> Result<usize, Graph6Error> {
        let field = bytes.get(from..from + k).ok_or(Graph6Error::MalformedSize)?;
        Ok(field.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63)))
    };
    match bytes {
        [] => Err(Graph6Error::Empty),
        [126, 126, ..] => {
            let n = take(6, 2)?;
            if n <= 258_047 {
                return Err(Graph6Error::MalformedSize);
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let n = take(3, 1)?;
            if n <= 62 {
                return Err(Graph6Error::MalformedSize);
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((usize::from(b - 63), 1)),
    }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<SimpleGraph, GraphError> {
    let mut bytes = text.strip_prefix(HEADER).unwrap_or(text);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::ByteRange { byte, offset }.into());
    }
    let (n, start) = decode_size(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        }
        .into());
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing(body.len() - expected).into());
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::Padding.into());
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    Ok(SimpleGraph::from_adjacency_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn k2_is_a_underscore() {
        let k2 = complete(2);
        assert_eq!(to_graph6(&k2), "A_");
        let parsed = parse_graph6(b"A_").unwrap();
        assert_eq!(parsed.degree_sequence(), vec![1, 1]);
    }

    #[test]
    fn known_strings() {
        // C5 and K4 as printed by nauty's geng/showg.
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(to_graph6(&SimpleGraph::empty(0)), "?");
        assert_eq!(to_graph6(&SimpleGraph::empty(1)), "@");
    }

    #[test]
    fn header_and_newline() {
        let g = parse_graph6(b">>graph6<<C~\n").unwrap();
        assert_eq!(g, complete(4));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty.into()));
        assert!(matches!(
            parse_graph6(b"C "),
            Err(GraphError::Graph6(Graph6Error::ByteRange { byte: b' ', offset: 1 }))
        ));
        assert!(matches!(
            parse_graph6(b"D"),
            Err(GraphError::Graph6(Graph6Error::Truncated { expected: 2, found: 0 }))
        ));
        assert!(matches!(
            parse_graph6(b"A_?"),
            Err(GraphError::Graph6(Graph6Error::Trailing(1)))
        ));
        assert!(matches!(
            parse_graph6(b"A`"),
            Err(GraphError::Graph6(Graph6Error::Padding))
        ));
        assert!(matches!(
            parse_graph6(b"~?"),
            Err(GraphError::Graph6(Graph6Error::MalformedSize))
        ));
    }

    #[test]
    fn large_size_field() {
        let g = cycle(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }
}
