//! Edge-list and graph6 text formats.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with `u < v`, 0-based,
//! sorted lexicographically, each line terminated by `\n`.

use super::{SimpleGraph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn to_edge_list(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format. Edge order and orientation are not
/// enforced on input; loops, duplicates, out-of-range vertices and a wrong
/// edge count are rejected.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = parse_pair(header)?;
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "vertex count",
            value: n,
            limit: MAX_VERTICES,
        });
    }
    let mut g = SimpleGraph::empty(n)?;
    let mut count = 0;
    for line in lines {
        let (u, v) = parse_pair(line)?;
        if u >= n || v >= n {
            return Err(Error::Parse(format!("edge {u} {v} out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::Parse(format!("loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse(format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!("expected two integers, got {line:?}")));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("not a nonnegative integer: {s:?}")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

/// Standard graph6 encoding (upper triangle, column-wise, 6 bits per byte).
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 contains characters outside 63..126".into()));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] < 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(Error::Parse("unsupported graph6 size prefix".into()));
    };
    if n > MAX_VERTICES {
        return Err(Error::ResourceLimit {
            what: "vertex count",
            value: n,
            limit: MAX_VERTICES,
        });
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {needed}",
            body.len()
        )));
    }
    let mut g = SimpleGraph::empty(n)?;
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - 63;
            if byte & (1 << (5 - idx % 6)) != 0 {
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Reads either format: edge lists start with a digit, graph6 never does.
pub fn parse_graph_auto(text: &str) -> Result<SimpleGraph> {
    match text.trim_start().chars().next() {
        Some(c) if c.is_ascii_digit() => parse_edge_list(text),
        Some(_) => parse_graph6(text),
        None => Err(Error::Parse("empty graph input".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_is_bit_exact() {
        let g = SimpleGraph::cycle(4).unwrap();
        assert_eq!(to_edge_list(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(to_edge_list(&SimpleGraph::empty(0).unwrap()), "0 0\n");
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 -1\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings as produced by common graph tools.
        assert_eq!(to_graph6(&SimpleGraph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&SimpleGraph::path(3).unwrap()), "Bg");
        assert_eq!(to_graph6(&SimpleGraph::cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&SimpleGraph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("Dhc").unwrap(), SimpleGraph::cycle(5).unwrap());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_graph_auto("C~\n").unwrap(), SimpleGraph::complete(4).unwrap());
        assert_eq!(parse_graph_auto("2 1\n0 1\n").unwrap(), SimpleGraph::complete(2).unwrap());
    }

    proptest! {
        #[test]
        fn formats_round_trip(n in 0usize..64, seed in any::<u64>()) {
            let mut g = SimpleGraph::empty(n).unwrap();
            let mut x = seed | 1;
            for u in 0..n {
                for v in (u + 1)..n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 3 == 0 { g.add_edge(u, v); }
                }
            }
            prop_assert_eq!(&parse_graph6(&to_graph6(&g)).unwrap(), &g);
            prop_assert_eq!(&parse_edge_list(&to_edge_list(&g)).unwrap(), &g);
        }
    }
}
