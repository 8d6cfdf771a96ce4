//! graph6 encoding (nauty format) for graphs of order at most 64.
//!
//! Orders up to 62 use the one-byte header; 63 and 64 use the `~` plus
//! three byte form. The eight-byte `~~` form is rejected.

use crate::graph::{Graph, GraphError, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(err(skip, "empty input"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(skip + i, format!("byte {b:#04x} outside the graph6 range")));
        }
    }
    let (n, start) = if body[0] != b'~' {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.len() >= 2 && body[1] == b'~' {
            return Err(err(skip + 1, "eight-byte order header is not supported"));
        }
        if body.len() < 4 {
            return Err(err(skip + body.len(), "truncated order header"));
        }
        let n = body[1..4].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        if n > MAX_ORDER {
            return Err(err(skip, format!("order {n} exceeds 64")));
        }
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        return Err(err(
            skip + start + data.len().min(expected),
            format!("expected {expected} data bytes for order {n}, found {}", data.len()),
        ));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(skip + start + expected - 1, "non-zero padding bits"));
        }
    }
    Graph::from_rows(adj)
}
