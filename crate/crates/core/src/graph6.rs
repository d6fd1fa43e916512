//! The graph6 text encoding, restricted to the single-byte size form.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAXN};

const BIAS: u8 = 63;

/// Decodes one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&first, body) = bytes.split_first().ok_or(Graph6Error::MalformedHeader)?;
    if first == b'>' || first == b'&' || first == b':' {
        // ">>graph6<<" headers, digraph6 and sparse6 are not accepted.
        return Err(Graph6Error::MalformedHeader);
    }
    if !(BIAS..=126).contains(&first) {
        return Err(Graph6Error::BadCharacter {
            position: 0,
            found: first as char,
        });
    }
    if first == 126 {
        // Multi-byte size forms only describe graphs with n >= 63.
        return Err(Graph6Error::TooLarge(63));
    }
    let n = (first - BIAS) as usize;
    if n > MAXN {
        return Err(Graph6Error::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: body.len(),
        });
    }
    let mut rows = [0u16; MAXN];
    let mut k = 0;
    for (pos, &c) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&c) {
            return Err(Graph6Error::BadCharacter {
                position: pos + 1,
                found: c as char,
            });
        }
        let x = c - BIAS;
        for shift in (0..6).rev() {
            let bit = (x >> shift) & 1 == 1;
            if k < nbits {
                if bit {
                    let (i, j) = pair_of(k);
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            } else if bit {
                return Err(Graph6Error::NonZeroPadding);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(n, &rows))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = String::with_capacity(1 + n * n / 12 + 1);
    out.push((n as u8 + BIAS) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    Ok(out)
}

/// Maps a position in column-major upper-triangle order to `(i, j)`, `i < j`.
fn pair_of(k: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}
