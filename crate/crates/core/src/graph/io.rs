//! graph6 and plain edge-list text formats.

use thiserror::Error;

use super::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: unexpected byte {byte:#04x} at offset {offset}")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6: input ends at offset {offset}, expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("graph6: trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("graph6: nonzero padding bits in the last byte (offset {offset})")]
    Padding { offset: usize },
    #[error("graph6: only the single-byte order form (n <= 62) is supported")]
    LongForm,
    #[error("edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses one graph6 record (no header, no trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.as_bytes();
    let first = *bytes.first().ok_or(ParseError::Truncated { offset: 0, expected: 1 })?;
    if first == 126 {
        return Err(ParseError::LongForm);
    }
    if !(63..=125).contains(&first) {
        return Err(ParseError::BadByte { offset: 0, byte: first });
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = bits.div_ceil(6);
    if bytes.len() < 1 + body {
        return Err(ParseError::Truncated { offset: bytes.len(), expected: 1 + body });
    }
    if bytes.len() > 1 + body {
        return Err(ParseError::Trailing { offset: 1 + body });
    }
    let mut sextets = Vec::with_capacity(body);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::BadByte { offset: i + 1, byte: b });
        }
        sextets.push(b - 63);
    }
    let bit = |k: usize| sextets[k / 6] >> (5 - k % 6) & 1 == 1;
    if let Some(&last) = sextets.last() {
        let pad = body * 6 - bits;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(ParseError::Padding { offset: body });
        }
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
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: String| ParseError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let pair = |line: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let mut it = l.split_whitespace();
        let mut num = || -> Result<usize, ParseError> {
            it.next()
                .ok_or_else(|| err(line, "expected two integers".into()))?
                .parse()
                .map_err(|e| err(line, format!("{e}")))
        };
        let a = num()?;
        let b = num()?;
        if it.next().is_some() {
            return Err(err(line, "expected exactly two integers".into()));
        }
        Ok((a, b))
    };
    let (line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header".into()))?;
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = line;
    for (line, l) in lines.by_ref().take(m) {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
        last = line;
    }
    if edges.len() < m {
        return Err(err(last + 1, format!("expected {m} edges, found {}", edges.len())));
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "more edges than the header declares".into()));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Serialized as its graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn known_encodings() {
        assert_eq!(parse_graph6("@").unwrap(), named("K1").unwrap());
        assert_eq!(parse_graph6("A_").unwrap(), named("K2").unwrap());
        assert_eq!(to_graph6(&named("K2").unwrap()), "A_");
        assert_eq!(to_graph6(&named("E1").unwrap()), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        // a-c, a-e, b-d, d-e
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6("A_x"), Err(ParseError::Trailing { offset: 2 }));
        assert_eq!(parse_graph6("B"), Err(ParseError::Truncated { offset: 1, expected: 2 }));
        assert_eq!(parse_graph6("A "), Err(ParseError::BadByte { offset: 1, byte: b' ' }));
        assert_eq!(parse_graph6("A`"), Err(ParseError::Padding { offset: 1 }));
        assert!(matches!(parse_graph6(""), Err(ParseError::Truncated { .. })));
        assert_eq!(parse_graph6("~?@A"), Err(ParseError::LongForm));
    }

    #[test]
    fn edge_lists() {
        let text = "# comment\n3 2\n0 1\n1 2 # trailing\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, named("P3").unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(ParseError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(ParseError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(ParseError::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(ParseError::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("x\n"), Err(ParseError::EdgeList { line: 1, .. })));
    }
}
