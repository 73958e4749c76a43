//! graph6 text encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn is_data_byte(b: u8) -> bool {
    (BIAS..=126).contains(&b)
}

/// Parses one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` marker are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, rest) = parse_size(bytes)?;

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if rest.len() < expected {
        return Err(GraphError::TruncatedPayload {
            expected,
            found: rest.len(),
        });
    }
    if rest.len() > expected {
        return Err(GraphError::MalformedHeader(format!(
            "{} bytes of trailing data after the payload",
            rest.len() - expected
        )));
    }
    if let Some(&b) = rest.iter().find(|&&b| !is_data_byte(b)) {
        return Err(GraphError::MalformedHeader(format!(
            "byte {b:#04x} is not a graph6 data character"
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let first = *bytes
        .first()
        .ok_or_else(|| GraphError::MalformedHeader("empty line".into()))?;
    if !is_data_byte(first) {
        return Err(GraphError::MalformedHeader(format!(
            "size byte {first:#04x} out of range"
        )));
    }
    if first < 126 {
        return Ok(((first - BIAS) as usize, &bytes[1..]));
    }
    let (width, start) = if bytes.get(1) == Some(&126) { (6, 2) } else { (3, 1) };
    let digits = bytes.get(start..start + width).ok_or_else(|| {
        GraphError::MalformedHeader("long size header is incomplete".into())
    })?;
    let mut n = 0usize;
    for &d in digits {
        if !is_data_byte(d) {
            return Err(GraphError::MalformedHeader(format!(
                "size byte {d:#04x} out of range"
            )));
        }
        n = n << 6 | (d - BIAS) as usize;
    }
    Ok((n, &bytes[start + width..]))
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + BIAS));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses every graph in a graph6 file, skipping blank lines.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != HEADER)
        .map(parse_graph6)
        .collect()
}
