//! Plain edge-list text format, the only on-disk form for multigraphs.
//!
//! A record is a line `n m` followed by `m` lines `u v`. Records follow one
//! another in a stream; blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("writing to a String");
    }
    s
}

/// Single-line form `n m: u-v u-v …` used to name multigraphs in reports.
pub fn encode_inline(g: &Graph) -> String {
    let mut s = format!("{} {}:", g.order(), g.size());
    for &(u, v) in g.edges() {
        write!(s, " {u}-{v}").expect("writing to a String");
    }
    s
}

fn numbers(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::MalformedRecord {
            line: lineno,
            reason: format!("expected two non-negative integers, got {line:?}"),
        }),
    }
}

/// Reads every record of an edge-list stream.
pub fn read_edgelist_stream<R: BufRead>(source: R) -> impl Iterator<Item = Result<Graph>> {
    let mut lines = source
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            l.as_ref()
                .map(|s| !s.trim().is_empty() && !s.trim_start().starts_with('#'))
                .unwrap_or(true)
        });
    std::iter::from_fn(move || {
        let (lineno, header) = lines.next()?;
        let record = (|| {
            let (n, m) = numbers(&header?, lineno)?;
            let mut edges = Vec::with_capacity(m);
            for _ in 0..m {
                let Some((ln, line)) = lines.next() else {
                    return Err(Error::MalformedRecord {
                        line: lineno,
                        reason: format!("record announces {m} edges but the stream ended"),
                    });
                };
                edges.push(numbers(&line?, ln)?);
            }
            Graph::new(n, edges).map_err(|e| Error::MalformedRecord {
                line: lineno,
                reason: e.to_string(),
            })
        })();
        Some(record)
    })
}
