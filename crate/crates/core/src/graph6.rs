//! graph6 encoding (McKay's format).
//!
//! Size header: one byte `63 + n` for `n <= 62`, `~` plus three 6-bit
//! bytes for `n <= 258047`, `~~` plus six 6-bit bytes above that. The body
//! is the upper triangle read column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`), packed big-endian six bits per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: u64 = 68_719_476_735;
const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn push_size(out: &mut String, n: u64) {
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n as u64 <= MAX_ORDER, "graph6 cannot encode order {n}");
    let mut out = String::new();
    push_size(&mut out, n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    out
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(parse_err(at, format!("byte 0x{b:02x} outside 63..=126"))),
        None => Err(parse_err(at, "unexpected end of input")),
    }
}

/// Decode a single graph6 string. Surrounding whitespace is ignored.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let body = trimmed.strip_prefix(HEADER).unwrap_or(trimmed);
    let skip = trimmed.len() - body.len();
    decode_bytes(body.as_bytes()).map_err(|e| match e {
        Error::Parse { offset, message } => parse_err(offset + skip, message),
        other => other,
    })
}

fn decode_bytes(bytes: &[u8]) -> Result<Graph> {
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] != b'~' {
        (sextet(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        if n <= 62 {
            return Err(parse_err(1, format!("non-minimal size header for n = {n}")));
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        if n <= 258_047 {
            return Err(parse_err(2, format!("non-minimal size header for n = {n}")));
        }
        (n, 8)
    };
    let pairs = n as u128 * n.saturating_sub(1) as u128 / 2;
    let need = pairs.div_ceil(6);
    let have = (bytes.len() - pos) as u128;
    if have != need {
        let at = if have < need {
            bytes.len()
        } else {
            pos + need as usize
        };
        return Err(parse_err(
            at,
            format!("expected {need} data bytes for n = {n}, found {have}"),
        ));
    }
    let n = n as usize;
    let mut edges = Vec::new();
    let mut bit = 6;
    let mut cur = 0;
    for j in 1..n {
        for i in 0..j {
            if bit == 6 {
                cur = sextet(bytes, pos)?;
                pos += 1;
                bit = 0;
            }
            if (cur >> (5 - bit)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Decode a newline-separated stream. Blank lines are skipped; errors carry
/// the 1-based line number.
pub fn decode_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode_graph6(l.trim()).map_err(|e| Error::AtLine {
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}
