//! Graph corpora: file formats, generators, enumeration, filters and the
//! `F_k` failure hunter.

pub mod edgelist;
pub mod enumerate;
pub mod generators;
pub mod graph6;
mod hunt;

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::ops::RangeInclusive;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::decomposition::{block_chain_kind, is_dt_graph, is_two_connected, ChainKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use hunt::{fk_representatives, hunt_fk_failures, HuntEntry, HuntReport};

/// On-disk graph formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    /// `.g6` / `.graph6` are graph6, `.el` / `.edges` / `.txt` edge lists.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "g6" | "graph6" => Some(Format::Graph6),
            "el" | "edges" | "txt" => Some(Format::EdgeList),
            _ => None,
        }
    }

    /// Guess from the first meaningful line: an edge-list header is two
    /// integers, anything else is taken as graph6.
    pub fn sniff(first_line: &str) -> Format {
        let t = first_line.trim();
        let numeric = t.split_whitespace().count() == 2
            && t.split_whitespace().all(|w| w.parse::<usize>().is_ok());
        if numeric {
            Format::EdgeList
        } else {
            Format::Graph6
        }
    }
}

/// Reads every graph of a stream in the given format.
pub fn read_stream<R: BufRead>(source: R, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::Graph6 => graph6::read_graph6_stream(source).collect(),
        Format::EdgeList => edgelist::read_edgelist_stream(source).collect(),
    }
}

/// Reads a whole file, picking the format from the extension or the content.
pub fn read_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    let format = Format::from_path(path).unwrap_or_else(|| {
        let first = text
            .lines()
            .find(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        Format::sniff(first)
    });
    read_stream(BufReader::new(text.as_bytes()), format)
}

/// Opens `path` for streaming in the format its extension names.
pub fn open(path: &Path) -> Result<(BufReader<File>, Option<Format>)> {
    Ok((BufReader::new(File::open(path)?), Format::from_path(path)))
}

/// Short name for a graph in reports: graph6 if simple, inline edge list
/// otherwise.
pub fn graph_name(g: &Graph) -> String {
    graph6::encode(g).unwrap_or_else(|_| edgelist::encode_inline(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Connected,
    TwoConnected,
    Dt,
    /// Connected and `bc(G)` a path (trivial chains included).
    BlockChain,
    Tree,
}

impl Predicate {
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Predicate::Connected => g.is_connected(),
            Predicate::TwoConnected => is_two_connected(g),
            Predicate::Dt => is_dt_graph(g),
            Predicate::BlockChain => {
                matches!(
                    block_chain_kind(g),
                    Ok(ChainKind::Trivial | ChainKind::NonTrivial)
                )
            }
            Predicate::Tree => g.order() > 0 && g.is_connected() && g.size() + 1 == g.order(),
        }
    }
}

/// Conjunction of predicates plus an order range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusFilter {
    predicates: Vec<Predicate>,
    n_range: RangeInclusive<usize>,
}

impl CorpusFilter {
    pub fn new(predicates: Vec<Predicate>, n_range: RangeInclusive<usize>) -> Result<Self> {
        if n_range.is_empty() {
            return Err(Error::InvalidInput("empty order range".into()));
        }
        Ok(CorpusFilter {
            predicates,
            n_range,
        })
    }

    /// Order range check first, then the predicates in the order given.
    pub fn accepts(&self, g: &Graph) -> bool {
        self.n_range.contains(&g.order()) && self.predicates.iter().all(|p| p.holds(g))
    }
}

pub fn filter<'f, I>(stream: I, f: &'f CorpusFilter) -> impl Iterator<Item = Graph> + 'f
where
    I: IntoIterator<Item = Graph>,
    I::IntoIter: 'f,
{
    stream.into_iter().filter(move |g| f.accepts(g))
}

/// Removing all leaves leaves a path (possibly empty).
pub fn is_caterpillar(t: &Graph) -> Result<bool> {
    if !Predicate::Tree.holds(t) {
        return Err(Error::NotATree);
    }
    let deg: Vec<usize> = t.vertices().map(|v| t.incident(v).len()).collect();
    let spine = |v: usize| deg[v] > 1;
    Ok(t.vertices()
        .filter(|&v| spine(v))
        .all(|v| t.neighbors(v).into_iter().filter(|&w| spine(w)).count() <= 2))
}

#[cfg(test)]
mod tests {
    use super::generators::{complete, cycle, path, spider, star};
    use super::*;

    #[test]
    fn caterpillars() {
        for n in 1..7 {
            assert!(is_caterpillar(&path(n)).unwrap());
        }
        assert!(is_caterpillar(&star(3)).unwrap());
        assert!(!is_caterpillar(&spider()).unwrap());
        assert!(matches!(is_caterpillar(&cycle(4)), Err(Error::NotATree)));
    }

    #[test]
    fn filters() {
        let f = CorpusFilter::new(vec![Predicate::TwoConnected, Predicate::Dt], 6..=6).unwrap();
        let kept: Vec<_> = filter(vec![cycle(6), complete(6), cycle(5), path(6)], &f).collect();
        assert_eq!(kept, vec![cycle(6)]);
        let trees = CorpusFilter::new(vec![Predicate::Tree], 0..=10).unwrap();
        assert_eq!(
            filter(vec![cycle(4), star(4), Graph::empty(2)], &trees).count(),
            1
        );
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 5..=4;
        assert!(CorpusFilter::new(vec![], empty).is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(Format::from_path(Path::new("a.g6")), Some(Format::Graph6));
        assert_eq!(Format::from_path(Path::new("a.el")), Some(Format::EdgeList));
        assert_eq!(Format::from_path(Path::new("a")), None);
        assert_eq!(Format::sniff("4 3"), Format::EdgeList);
        assert_eq!(Format::sniff("D?{"), Format::Graph6);
    }
}
