//! The graph6 interchange format: a size header followed by the
//! upper-triangle adjacency bits in column order, packed six to a byte,
//! each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Parses a single graph6 line. An optional `>>graph6<<` prefix and a
/// trailing newline are accepted. Parse errors carry the byte offset into
/// the input as given.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte {b} outside 63..=126")));
        }
    }

    let (n, mut pos) = parse_order(bytes, base)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() - pos < byte_count {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "truncated adjacency payload: expected {byte_count} bytes, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() - pos > byte_count {
        return Err(Error::parse(
            base + pos + byte_count,
            "trailing bytes after adjacency payload",
        ));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit_index / 6] - 63;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'outer;
            }
        }
    }
    pos += byte_count;
    let _ = pos;
    Graph::new(n, &edges)
}

fn parse_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::parse(base, "truncated 18-bit order"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(Error::parse(base, "truncated 36-bit order"));
    }
    let n = bytes[2..8]
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    Ok((n, 8))
}

/// Writes the canonical graph6 line for a labeled graph (no header, no
/// newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    }

    let mut current = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            current <<= 1;
            if g.has_edge(row, col) {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        current <<= 6 - filled;
        out.push(current + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    /// Minimal reference decoder built differently from the parser: expands
    /// every payload byte to its six bits up front, then reads the column
    /// order off the flat list.
    fn reference_decode(text: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes = text.as_bytes();
        let n = (bytes[0] - 63) as usize;
        let mut flat_bits = Vec::new();
        for &b in &bytes[1..] {
            let v = b - 63;
            for k in (0..6).rev() {
                flat_bits.push(v >> k & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut it = flat_bits.into_iter();
        for col in 1..n {
            for row in 0..col {
                if it.next().unwrap_or(false) {
                    edges.push((row, col));
                }
            }
        }
        (n, edges)
    }

    #[test]
    fn fixture_star_on_five_vertices() {
        let g = parse_graph6("D?{").unwrap();
        let (n, edges) = reference_decode("D?{");
        assert_eq!(g.order(), n);
        assert_eq!(g.edges(), edges.as_slice());
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g), "D?{");
    }

    #[test]
    fn fixture_single_vertex() {
        let k1 = generate(&FamilySpec::Path { n: 1 }).unwrap();
        assert_eq!(write_graph6(&k1), "@");
        assert_eq!(parse_graph6("@").unwrap(), k1);
    }

    #[test]
    fn fixture_p3_round_trip() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        let text = write_graph6(&p3);
        assert_eq!(text, "Bg");
        assert_eq!(parse_graph6(&text).unwrap(), p3);
    }

    #[test]
    fn header_and_newline_are_accepted() {
        let g = parse_graph6(">>graph6<<D?{\n").unwrap();
        assert_eq!(g.order(), 5);
    }

    #[test]
    fn malformed_byte_reports_offset() {
        match parse_graph6("D?\u{1}") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_graph6(">>graph6<<D \u{7f}") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 11),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn truncated_payload_is_rejected() {
        assert!(matches!(parse_graph6("D"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?{?"), Err(Error::Parse { .. })));
    }

    #[test]
    fn large_order_header_round_trips() {
        let g = Graph::new(63, &[(0, 62), (10, 20)]).unwrap();
        let text = write_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);

        // beyond one adjacency word
        let g = Graph::new(70, &[(0, 69), (63, 64), (5, 68)]).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }
}
