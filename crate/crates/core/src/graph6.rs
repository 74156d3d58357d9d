//! graph6 encoding: printable bytes offset by 63, upper triangle packed
//! column by column, six bits per byte, most significant bit first.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Optional header line written by some tools in front of graph6 files.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

/// Parses one graph6 line (header and surrounding whitespace tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_with_cap(text, MAX_VERTICES)
}

/// Like [`parse_graph6`] but refuses graphs with more than `cap` vertices.
/// `cap` is clamped to [`MAX_VERTICES`].
pub fn parse_graph6_with_cap(text: &str, cap: usize) -> Result<Graph> {
    let cap = cap.min(MAX_VERTICES);
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let err = |i: usize, message: String| Error::Graph6 { offset: skip + i, message };

    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(i, format!("byte {b:#04x} outside the printable range 63..=126")));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input".into()));
    };

    let (n, mut pos) = if first != 126 {
        ((first - BIAS) as usize, 1)
    } else if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(err(bytes.len(), "truncated 8-byte vertex count".into()));
        }
        (sextets(&bytes[2..8]), 8)
    } else {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated 4-byte vertex count".into()));
        }
        (sextets(&bytes[1..4]), 4)
    };
    if n > cap {
        return Err(err(0, format!("graph has {n} vertices, more than the cap of {cap}")));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < needed {
        return Err(err(
            bytes.len(),
            format!("expected {needed} adjacency bytes for n = {n}, found {}", data.len()),
        ));
    }
    if data.len() > needed {
        return Err(err(pos + needed, "trailing bytes after adjacency data".into()));
    }

    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = data[needed - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(pos + needed - 1, "non-zero padding bits".into()));
        }
    }
    pos += needed;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

fn sextets(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize)
}

/// Encodes `g` as graph6 (no header, no newline). Every [`Graph`] is within
/// the single-byte size range, so this cannot fail.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(BIAS + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(BIAS + (acc << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
