//! graph6 encoding of simple graphs.
//!
//! Bit-exact with the format used by nauty: a size prefix `N(n)` followed by
//! the upper triangle of the adjacency matrix, column by column, packed six
//! bits per printable byte.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Optional header some tools put in front of a graph6 file.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const MAX_N: usize = 68_719_476_735;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

/// Encodes a simple graph. Multigraphs have no graph6 form.
pub fn encode(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::InvalidInput(
            "graph6 cannot encode parallel edges".into(),
        ));
    }
    let n = g.order();
    if n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adjacent(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                byte |= 1;
            }
        }
        out.push(byte + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn value(b: u8) -> std::result::Result<usize, String> {
    if (63..=126).contains(&b) {
        Ok((b - BIAS) as usize)
    } else {
        Err(format!("byte {b:#04x} outside the graph6 range"))
    }
}

fn decode_inner(s: &str) -> std::result::Result<Graph, String> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err("empty record".into());
    }
    let (n, body) = if bytes[0] != 126 {
        (value(bytes[0])?, &bytes[1..])
    } else if bytes.get(1) != Some(&126) {
        if bytes.len() < 4 {
            return Err("truncated size".into());
        }
        let n = bytes[1..4]
            .iter()
            .try_fold(0, |acc, &b| Ok::<_, String>((acc << 6) | value(b)?))?;
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err("truncated size".into());
        }
        let n = bytes[2..8]
            .iter()
            .try_fold(0, |acc, &b| Ok::<_, String>((acc << 6) | value(b)?))?;
        (n, &bytes[8..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(format!(
            "expected {need} data bytes for n = {n}, found {}",
            body.len()
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = value(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = value(body[need - 1])? & ((1 << (6 - nbits % 6)) - 1);
        if pad != 0 {
            return Err("nonzero padding bits".into());
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges).map_err(|e| e.to_string())
}

/// Decodes one graph6 record (without the trailing newline).
pub fn decode(s: &str) -> Result<Graph> {
    decode_inner(s.trim_end()).map_err(|reason| Error::MalformedRecord { line: 1, reason })
}

/// Iterates over the records of a graph6 stream, one per non-empty line.
/// Errors carry the 1-based line number.
pub fn read_graph6_stream<R: BufRead>(source: R) -> impl Iterator<Item = Result<Graph>> {
    source.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Error::Io(e))),
        };
        let t = line.trim();
        let t = if i == 0 {
            t.strip_prefix(HEADER).unwrap_or(t)
        } else {
            t
        };
        if t.is_empty() {
            return None;
        }
        Some(decode_inner(t).map_err(|reason| Error::MalformedRecord {
            line: i + 1,
            reason,
        }))
    })
}
