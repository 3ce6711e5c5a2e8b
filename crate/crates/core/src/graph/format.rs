//! graph6 and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(format_err("empty graph6 record"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(format_err(format!("byte {b:#04x} outside graph6 range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
        if n < 63 {
            return Err(format_err("non-canonical graph6 size header"));
        }
        (n, &bytes[4..])
    } else {
        return Err(format_err("unsupported graph6 size header"));
    };
    if n == 0 {
        return Err(format_err("graph order must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            cap: MAX_VERTICES,
            what: "graph order",
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(format_err(format!(
            "expected {expected} data bytes for n={n}, got {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph { n, adj })
}

/// Encodes a graph in graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list text format: a header line `n m` followed by `m`
/// lines `u v`. Blank lines and `#` comments are ignored.
pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut numbers = Vec::new();
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| format_err("missing `n m` header"))?;
    let parse_pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [a, b] => Ok((
                a.parse()
                    .map_err(|_| format_err(format!("line {}: bad integer {a:?}", lineno + 1)))?,
                b.parse()
                    .map_err(|_| format_err(format!("line {}: bad integer {b:?}", lineno + 1)))?,
            )),
            _ => Err(format_err(format!(
                "line {}: expected two fields",
                lineno + 1
            ))),
        }
    };
    let (n, m) = parse_pair(0, header)?;
    for (lineno, line) in lines {
        numbers.push(parse_pair(lineno, line)?);
    }
    if numbers.len() != m {
        return Err(format_err(format!(
            "header declares {m} edges, found {}",
            numbers.len()
        )));
    }
    if n == 0 {
        return Err(format_err("graph order must be at least 1"));
    }
    Graph::from_edge_list(n, &numbers)
}

pub fn to_edge_list_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use proptest::prelude::*;

    // Expected values produced by networkx's graph6 reader/writer.
    #[test]
    fn decode_reference_vectors() {
        assert_eq!(
            from_graph6("A_").unwrap(),
            Family::Complete(2).build().unwrap()
        );
        assert_eq!(from_graph6("A?").unwrap(), Graph::empty(2));
        assert_eq!(
            from_graph6("Bw").unwrap(),
            Family::Complete(3).build().unwrap()
        );
        assert_eq!(
            from_graph6("DQc").unwrap().edges(),
            vec![(0, 2), (0, 4), (1, 3), (3, 4)]
        );
        assert_eq!(
            from_graph6("C~\n").unwrap(),
            Family::Complete(4).build().unwrap()
        );
        assert_eq!(from_graph6(">>graph6<<A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn encode_reference_vectors() {
        assert_eq!(to_graph6(&Family::Cycle(10).build().unwrap()), "IhCGGC@_G");
        let p63 = to_graph6(&Family::Path(63).build().unwrap());
        assert!(p63.starts_with("~??~hCGGC@?G"));
        let k64 = to_graph6(&Family::Complete(64).build().unwrap());
        assert!(k64.starts_with("~?@?~~"));
        assert_eq!(k64.len(), 340);
        assert_eq!(from_graph6(&k64).unwrap().edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn malformed_graph6() {
        for bad in ["", "?", "A", "A__", "B", "\u{1}", "~~????"] {
            assert!(matches!(from_graph6(bad), Err(Error::Format(_))), "{bad:?}");
        }
        // 65 vertices: valid header, over the cap.
        let k65_header = "~?@A";
        assert!(matches!(
            from_graph6(k65_header),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn edge_list_text() {
        let text = "# a path\n4 3\n0 1\n1 2 # middle\n\n2 3\n";
        let g = from_edge_list_text(text).unwrap();
        assert_eq!(g, Family::Path(4).build().unwrap());
        assert_eq!(from_edge_list_text(&to_edge_list_text(&g)).unwrap(), g);
        assert!(from_edge_list_text("3 2\n0 1\n").is_err());
        assert!(from_edge_list_text("3 1\n0 x\n").is_err());
        assert!(matches!(
            from_edge_list_text("3 1\n1 1\n"),
            Err(Error::SelfLoop(1))
        ));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edge_list(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph(20)) {
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn graph6_round_trip_all_labeled_up_to_5() {
        for n in 1..=5 {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..1 << pairs {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if mask >> k & 1 == 1 {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                let g = Graph::from_edge_list(n, &edges).unwrap();
                assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
            }
        }
    }
}
