//! Bit-exact graph6 encoding and decoding.
//!
//! graph6 packs the upper adjacency triangle column-major (for each column
//! `j = 1..n`, bits `(0,j)..(j-1,j)`), zero-padded to a multiple of six, each
//! six-bit chunk stored as a printable byte `value + 63`. Orders up to 62 use
//! a single header byte `n + 63`; orders 63..=258047 use `'~'` followed by
//! three bytes carrying 18 bits of `n`.

use crate::error::{Graph6Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_MARK: u8 = 126;
const MAX_LONG_ORDER: usize = 258_047;

fn body_len(n: usize) -> usize {
    let pairs = n * (n.saturating_sub(1)) / 2;
    pairs.div_ceil(6)
}

/// Encodes a labeled graph as its unique graph6 byte string.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_LONG_ORDER,
        "graph6 long form supports at most {MAX_LONG_ORDER} vertices"
    );
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_MARK);
        out.push(((n >> 12) & 63) as u8 + OFFSET);
        out.push(((n >> 6) & 63) as u8 + OFFSET);
        out.push((n & 63) as u8 + OFFSET);
    }

    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(chunk + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 byte string. The input must be exactly one encoding:
/// anything shorter errors as truncated, anything longer as trailing garbage.
pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let (n, body) = parse_header(bytes)?;
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: body.len(),
        }
        .into());
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            expected,
            got: body.len(),
        }
        .into());
    }

    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut bit_index = 0usize;
    let pairs = n * n.saturating_sub(1) / 2;
    for &b in body {
        let v = check_byte(b)?;
        for k in (0..6).rev() {
            let set = (v >> k) & 1 == 1;
            if bit_index >= pairs {
                if set {
                    return Err(Graph6Error::PaddingBit.into());
                }
            } else if set {
                let (i, j) = pair_at(bit_index);
                edges.push((i as u32, j as u32));
            }
            bit_index += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Decodes a string slice; convenience wrapper over [`decode`].
pub fn decode_str(s: &str) -> Result<Graph> {
    decode(s.trim_end_matches(['\r', '\n']).as_bytes())
}

fn parse_header(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let (&first, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if first != LONG_MARK {
        let v = check_byte(first)?;
        return Ok((v as usize, rest));
    }
    // Long form. The 8-byte (>= 258048) form starts with "~~" and is out of
    // scope here; reject it as too large rather than misparse.
    if rest.first() == Some(&LONG_MARK) {
        return Err(Graph6Error::TooLarge(MAX_LONG_ORDER + 1).into());
    }
    if rest.len() < 3 {
        return Err(Graph6Error::MalformedHeader.into());
    }
    let mut n = 0usize;
    for &b in &rest[..3] {
        n = (n << 6) | check_byte(b)? as usize;
    }
    if n <= 62 {
        // Long headers for small n never appear in valid encodings.
        return Err(Graph6Error::MalformedHeader.into());
    }
    Ok((n, &rest[3..]))
}

fn check_byte(b: u8) -> Result<u8> {
    if !(OFFSET..=LONG_MARK).contains(&b) {
        return Err(Graph6Error::InvalidByte(b).into());
    }
    Ok(b - OFFSET)
}

/// Maps a column-major upper-triangle bit index back to its vertex pair.
fn pair_at(mut idx: usize) -> (usize, usize) {
    let mut j = 1usize;
    while idx >= j {
        idx -= j;
        j += 1;
    }
    (idx, j)
}
