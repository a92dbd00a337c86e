//! graph6 text encoding for simple graphs: one graph per line, a 6-bit size
//! header followed by the strictly-upper adjacency triangle in column order,
//! packed big-endian six bits per printable byte (offset 63).

use crate::error::{Error, Result};

use super::simple::{SimpleGraph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. A leading `>>graph6<<` header is tolerated;
/// trailing whitespace is trimmed. Errors carry the byte offset within the
/// (header-stripped) line.
pub fn parse_graph6(line: &str) -> Result<SimpleGraph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Format {
            msg: "empty graph6 line".into(),
            offset: 0,
        });
    }
    let check = |i: usize| -> Result<u64> {
        let b = bytes[i];
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Format {
                msg: format!("byte 0x{b:02x} outside graph6 range 63..=126"),
                offset: i,
            });
        }
        Ok((b - OFFSET) as u64)
    };

    // Size field: 1 byte for n <= 62, "~" + 3 bytes for n <= 258047,
    // "~~" + 6 bytes beyond that.
    let (n, mut pos) = if bytes[0] != 126 {
        (check(0)?, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Format {
                msg: "truncated 3-byte size field".into(),
                offset: bytes.len(),
            });
        }
        let n = (check(1)? << 12) | (check(2)? << 6) | check(3)?;
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::Format {
                msg: "truncated 6-byte size field".into(),
                offset: bytes.len(),
            });
        }
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | check(i)?;
        }
        (n, 8)
    };

    if n as usize > MAX_VERTICES {
        return Err(Error::Format {
            msg: format!("graph on {n} vertices exceeds the supported maximum of {MAX_VERTICES}"),
            offset: 0,
        });
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(Error::Format {
            msg: format!(
                "expected {} edge byte(s) for n={n}, found {}",
                nbytes,
                bytes.len() - pos
            ),
            offset: bytes.len().min(pos + nbytes),
        });
    }

    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let word = check(pos + bit / 6)?;
            if word >> (5 - bit % 6) & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    // Padding bits after the triangle must be zero.
    while bit < nbytes * 6 {
        let word = check(pos + bit / 6)?;
        if word >> (5 - bit % 6) & 1 == 1 {
            return Err(Error::Format {
                msg: "nonzero padding bit".into(),
                offset: pos + bit / 6,
            });
        }
        bit += 1;
    }
    pos += nbytes;
    let _ = pos;
    Ok(SimpleGraph::from_rows(n, adj))
}

/// Writes the standard graph6 encoding of `g` (no trailing newline).
pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        // MAX_VERTICES keeps us inside the 3-byte size form.
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + OFFSET);
        out.push(((n >> 6) & 63) as u8 + OFFSET);
        out.push((n & 63) as u8 + OFFSET);
    }
    let mut word = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            word <<= 1;
            if g.has_edge(u, v) {
                word |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(word + OFFSET);
                word = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((word << (6 - used)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
