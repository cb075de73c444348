//! graph6 reader/writer (short form, undirected simple graphs).
//!
//! Size header: one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! 18 bits (or `~~` followed by 36 bits) packed six per byte. The body lists
//! the upper triangle column by column, `x(0,1) x(0,2) x(1,2) x(0,3) ...`,
//! six bits per byte, big-endian within the byte, zero padded.

use thiserror::Error;

use super::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed size header at byte {offset}")]
    BadHeader { offset: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("edge data truncated: expected {expected} bytes after the header, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage starting at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("non-zero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    Ok(u64::from(byte - 63))
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] != 126 {
        return Ok((sixbits(bytes, 0)? as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + width {
        return Err(Graph6Error::BadHeader { offset: bytes.len() });
    }
    let mut n = 0u64;
    for offset in start..start + width {
        n = (n << 6) | sixbits(bytes, offset)?;
    }
    Ok((n as usize, start + width))
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are ignored; byte offsets in errors count from the
/// first byte after the header.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (n, body_start) = read_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let found = bytes.len() - body_start;
    if found < body_len {
        // report a bad byte before reporting the truncation
        for offset in body_start..bytes.len() {
            sixbits(bytes, offset)?;
        }
        return Err(Graph6Error::Truncated { expected: body_len, found });
    }
    if found > body_len {
        return Err(Graph6Error::TrailingGarbage { offset: body_start + body_len });
    }

    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    for (k, offset) in (body_start..bytes.len()).enumerate() {
        let chunk = sixbits(bytes, offset)?;
        for b in 0..6 {
            let bit_index = k * 6 + b;
            let set = (chunk >> (5 - b)) & 1 == 1;
            if bit_index >= bits {
                if set {
                    return Err(Graph6Error::NonZeroPadding { offset });
                }
                continue;
            }
            if set {
                g.insert_edge(i, j);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}

/// Parses a multi-line graph6 stream, skipping blank lines and an optional
/// header. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != GRAPH6_HEADER)
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}

/// Encodes `g` in canonical short-form graph6, without a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
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
            out.push(((n as u64 >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
