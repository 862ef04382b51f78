//! Exhaustive scans of `SW_k` over all connected graphs up to isomorphism.
//!
//! A connected graph on `n` vertices has `SW_k >= (k - 1) C(n, k)`, so for a
//! value limit `V` only the vertex counts with `(k - 1) C(n, k) <= V` can
//! produce values in `1..=V`. Once all of those are enumerated, every
//! value missing from the scan is a certified exception.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, graph_from_code, MAX_CANON_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, MAX_VERTICES};
use crate::index::{check_k, steiner_wiener};

pub use crate::index::min_sw_lower_bound;

/// Largest vertex count the built-in enumerator produces.
pub const BUILTIN_MAX_VERTICES: usize = 8;

/// Connected graphs on `n` unlabeled vertices, `n = 0..=10`.
pub const KNOWN_CONNECTED_COUNTS: [u64; 11] =
    [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

pub fn known_connected_count(n: usize) -> Option<u64> {
    KNOWN_CONNECTED_COUNTS.get(n).copied()
}

/// Connected classes on `n + 1` vertices from all connected classes on `n`.
///
/// Every connected graph has a vertex whose removal leaves it connected,
/// so joining a new vertex to every non-empty neighbor set of every class
/// reaches every class; duplicates are removed by canonical code. Output
/// is in canonical form, sorted by code.
pub fn extend_connected(classes: &[Graph]) -> Result<Vec<Graph>> {
    let Some(first) = classes.first() else {
        return Ok(Vec::new());
    };
    let n = first.n();
    if classes.iter().any(|g| g.n() != n) {
        return Err(Error::BadSpec("classes must share a vertex count".into()));
    }
    let codes: HashSet<u128> = classes
        .par_iter()
        .map(|g| {
            let mut local = HashSet::new();
            for nbrs in 1..=full_mask(n) {
                local.insert(canonical_code(&g.with_new_vertex(nbrs)?)?);
            }
            Ok::<_, Error>(local)
        })
        .try_reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return Ok(b.into_iter().chain(a).collect());
            }
            a.extend(b);
            Ok(a)
        })?;
    let mut codes: Vec<u128> = codes.into_iter().collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| graph_from_code(n + 1, c)).collect())
}

/// Connected graphs on `1..=n` vertices, one canonical representative per
/// class; entry `i` holds the graphs on `i + 1` vertices.
pub fn enumerate_connected_levels(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n == 0 || n > BUILTIN_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "built-in enumeration covers 1..={BUILTIN_MAX_VERTICES} vertices; use a graph6 corpus"
        )));
    }
    let mut levels = vec![vec![Graph::empty(1)?]];
    while levels.len() < n {
        let next = extend_connected(levels.last().unwrap())?;
        levels.push(next);
    }
    Ok(levels)
}

pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_levels(n)?.pop().unwrap())
}

/// Graphs read from a graph6 stream, grouped by vertex count.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    by_n: BTreeMap<usize, Vec<Graph>>,
    seen_codes: HashSet<(usize, u128)>,
    seen_large: HashSet<Graph>,
    pub lines: usize,
    pub disconnected: usize,
    pub duplicates: usize,
}

impl Corpus {
    /// One graph6 string per line; blank lines and `>>graph6<<` headers are skipped.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut corpus = Corpus::default();
        for line in reader.lines() {
            let line = line?;
            let line = line.trim().trim_start_matches(">>graph6<<");
            if line.is_empty() {
                continue;
            }
            corpus.push(Graph::parse_graph6(line)?)?;
        }
        Ok(corpus)
    }

    pub fn from_graphs<I: IntoIterator<Item = Graph>>(graphs: I) -> Result<Self> {
        let mut corpus = Corpus::default();
        for g in graphs {
            corpus.push(g)?;
        }
        Ok(corpus)
    }

    /// Adds a graph unless it is disconnected or isomorphic to one already held.
    pub fn push(&mut self, g: Graph) -> Result<()> {
        self.lines += 1;
        if !g.is_connected() {
            self.disconnected += 1;
            return Ok(());
        }
        let fresh = if g.n() <= MAX_CANON_VERTICES {
            self.seen_codes.insert((g.n(), canonical_code(&g)?))
        } else {
            self.seen_large.insert(g.clone())
        };
        if fresh {
            self.by_n.entry(g.n()).or_default().push(g);
        } else {
            self.duplicates += 1;
        }
        Ok(())
    }

    pub fn graphs(&self, n: usize) -> &[Graph] {
        self.by_n.get(&n).map_or(&[], Vec::as_slice)
    }

    /// A vertex count is covered when the corpus holds one graph from every
    /// isomorphism class of connected graphs.
    pub fn covers(&self, n: usize) -> bool {
        known_connected_count(n).is_some_and(|c| self.graphs(n).len() as u64 == c)
    }

    pub fn vertex_counts(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_n.keys().copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanSource {
    Builtin,
    Graph6Corpus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub k: usize,
    pub limit: u128,
    /// Largest `n` such that every required vertex count up to `n` was fully enumerated.
    pub n_max_covered: usize,
    pub source: ScanSource,
    /// Attained values in `1..=limit`, each with the graph6 of its first witness.
    pub attainable: BTreeMap<u128, String>,
    /// Values in `1..=limit` not attained by any scanned graph.
    pub exceptions: BTreeSet<u128>,
    /// Graphs scanned per vertex count.
    pub graph_counts: BTreeMap<usize, usize>,
    /// Vertex counts that must be scanned for the limit.
    pub required: Vec<usize>,
    /// Required vertex counts without full coverage.
    pub missing: Vec<usize>,
}

impl ScanReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }

    /// The exception set, provided every required vertex count was covered.
    pub fn certified_exceptions(&self) -> Result<&BTreeSet<u128>> {
        if self.is_complete() {
            Ok(&self.exceptions)
        } else {
            Err(Error::IncompleteCoverage(self.missing.clone()))
        }
    }

    /// `value,graph6` lines for every attained value.
    pub fn witness_csv(&self) -> String {
        let mut out = String::from("value,graph6\n");
        for (v, g6) in &self.attainable {
            let _ = writeln!(out, "{v},{g6}");
        }
        out
    }
}

/// Vertex counts whose connected graphs can have `SW_k` in `1..=limit`.
pub fn required_vertex_counts(k: usize, limit: u128) -> Result<Vec<usize>> {
    check_k(k)?;
    let mut out = Vec::new();
    for n in k..=MAX_VERTICES {
        if min_sw_lower_bound(n, k)?.value > limit {
            break;
        }
        out.push(n);
    }
    Ok(out)
}

/// Scans every connected graph that can reach a value in `1..=limit`.
///
/// Vertex counts up to [`BUILTIN_MAX_VERTICES`] are enumerated internally;
/// larger ones come from `corpus`. Values are always sound (each carries a
/// witness), exceptions only once [`ScanReport::is_complete`] holds.
pub fn scan(k: usize, limit: u128, corpus: Option<&Corpus>) -> Result<ScanReport> {
    let required = required_vertex_counts(k, limit)?;
    let builtin_top = required.iter().copied().filter(|&n| n <= BUILTIN_MAX_VERTICES).max();
    let levels = match builtin_top {
        Some(n) => enumerate_connected_levels(n)?,
        None => Vec::new(),
    };

    let mut attainable = BTreeMap::new();
    let mut graph_counts = BTreeMap::new();
    let mut missing = Vec::new();
    let mut n_max_covered = 0;
    let mut used_corpus = false;
    for &n in &required {
        let (graphs, covered): (&[Graph], bool) = if n <= BUILTIN_MAX_VERTICES {
            (&levels[n - 1], true)
        } else if let Some(c) = corpus {
            used_corpus = true;
            (c.graphs(n), c.covers(n))
        } else {
            (&[], false)
        };
        let values: Vec<u128> = graphs
            .par_iter()
            .map(|g| steiner_wiener(g, k).map(|v| v.value))
            .collect::<Result<_>>()?;
        for (g, v) in graphs.iter().zip(values) {
            if (1..=limit).contains(&v) {
                attainable.entry(v).or_insert_with(|| g.to_graph6());
            }
        }
        graph_counts.insert(n, graphs.len());
        if covered && missing.is_empty() {
            n_max_covered = n;
        }
        if !covered {
            missing.push(n);
        }
    }
    let exceptions = (1..=limit).filter(|v| !attainable.contains_key(v)).collect();
    Ok(ScanReport {
        k,
        limit,
        n_max_covered,
        source: if used_corpus { ScanSource::Graph6Corpus } else { ScanSource::Builtin },
        attainable,
        exceptions,
        graph_counts,
        required,
        missing,
    })
}
