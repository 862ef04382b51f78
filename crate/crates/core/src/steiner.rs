//! Exact Steiner distances on unweighted graphs.
//!
//! [`SteinerSolver`] precomputes hop distances once per graph and then
//! answers terminal-set queries with the Dreyfus–Wagner dynamic program
//! over (terminal subset, attachment vertex) states. The brute-force
//! [`steiner_distance_oracle`] shares no code with it beyond graph
//! connectivity and exists to cross-check it.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

const UNREACHED: u32 = u32::MAX;

/// Largest terminal set the dynamic program accepts.
pub const MAX_TERMINALS: usize = 16;

/// Largest graph accepted by the subset oracle.
pub const ORACLE_MAX_VERTICES: usize = 20;

/// A non-empty set of terminal vertices of a particular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TerminalSet(u64);

impl TerminalSet {
    pub fn new<I: IntoIterator<Item = usize>>(g: &Graph, vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= g.n() {
                return Err(Error::IndexOutOfRange { vertex: v, n: g.n() });
            }
            mask |= 1 << v;
        }
        TerminalSet::from_mask(g, mask)
    }

    pub fn from_mask(g: &Graph, mask: u64) -> Result<Self> {
        if mask == 0 {
            return Err(Error::EmptyTerminals);
        }
        if mask & !g.vertex_mask() != 0 {
            let v = (mask & !g.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::IndexOutOfRange { vertex: v, n: g.n() });
        }
        Ok(TerminalSet(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }
}

/// Hop-count distance matrix of a connected graph, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut dist = vec![UNREACHED; n * n];
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        let mut seen = 1u64 << src;
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                row[v] = level;
                next |= g.neighbors(v);
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            level += 1;
        }
    }
    Ok(DistanceMatrix { n, dist })
}

/// Reusable Dreyfus–Wagner solver for one graph.
#[derive(Clone, Debug)]
pub struct SteinerSolver {
    dist: DistanceMatrix,
}

impl SteinerSolver {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(SteinerSolver { dist: all_pairs_distances(g)? })
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    /// Steiner distance of the terminal mask; the caller guarantees the
    /// mask is non-empty and within range.
    pub fn distance_of_mask(&self, mask: u64) -> u32 {
        let k = mask.count_ones() as usize;
        let mut terms = bits(mask);
        let first = terms.next().expect("non-empty terminal set");
        match k {
            1 => 0,
            2 => self.dist.get(first, terms.next().unwrap()),
            _ => {
                let rest: Vec<usize> = terms.collect();
                self.dreyfus_wagner(first, &rest)
            }
        }
    }

    /// `table[sub * n + v]` is the cheapest tree spanning the terminals in
    /// `sub` together with `v`. The root terminal is kept out of the subsets
    /// and read off at the end.
    fn dreyfus_wagner(&self, root: usize, terms: &[usize]) -> u32 {
        let n = self.dist.n();
        let t = terms.len();
        let full = (1usize << t) - 1;
        let mut table = vec![UNREACHED; (full + 1) * n];
        for (i, &term) in terms.iter().enumerate() {
            table[(1 << i) * n..((1 << i) + 1) * n].copy_from_slice(self.dist.row(term));
        }
        let mut merged = vec![UNREACHED; n];
        for sub in 1..=full {
            if sub.count_ones() < 2 {
                continue;
            }
            // merge at each vertex: split off parts containing the lowest terminal
            let low = sub & sub.wrapping_neg();
            let rest = sub ^ low;
            merged.fill(UNREACHED);
            let mut part = rest;
            loop {
                let left = part | low;
                let right = sub ^ left;
                if right != 0 {
                    let (a, b) = (&table[left * n..(left + 1) * n], &table[right * n..(right + 1) * n]);
                    for v in 0..n {
                        let c = a[v] + b[v];
                        if c < merged[v] {
                            merged[v] = c;
                        }
                    }
                }
                if part == 0 {
                    break;
                }
                part = (part - 1) & rest;
            }
            let out = &mut table[sub * n..(sub + 1) * n];
            if sub == full {
                out[root] = (0..n).map(|u| merged[u] + self.dist.get(u, root)).min().unwrap();
                continue;
            }
            for v in 0..n {
                let row = self.dist.row(v);
                out[v] = (0..n).map(|u| merged[u] + row[u]).min().unwrap();
            }
        }
        table[full * n + root]
    }
}

/// Minimum edge count of a connected subgraph containing every terminal.
pub fn steiner_distance(g: &Graph, s: TerminalSet) -> Result<u32> {
    check_terminals(g, s)?;
    if s.len() > MAX_TERMINALS {
        return Err(Error::TooLarge(format!("{} terminals", s.len())));
    }
    Ok(SteinerSolver::new(g)?.distance_of_mask(s.mask()))
}

/// Smallest `|U| - 1` over vertex sets `U ⊇ S` inducing a connected subgraph.
pub fn steiner_distance_oracle(g: &Graph, s: TerminalSet) -> Result<u32> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge(format!("oracle limited to {ORACLE_MAX_VERTICES} vertices")));
    }
    check_terminals(g, s)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let free = g.vertex_mask() & !s.mask();
    let mut best = g.n() as u32 - 1;
    // iterate subsets of the free vertices
    let mut extra = free;
    loop {
        let u = s.mask() | extra;
        let size = u.count_ones() - 1;
        if size < best && g.induces_connected(u) {
            best = size;
        }
        if extra == 0 {
            break;
        }
        extra = (extra - 1) & free;
    }
    Ok(best)
}

fn check_terminals(g: &Graph, s: TerminalSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    if s.mask() & !g.vertex_mask() != 0 {
        let v = (s.mask() & !g.vertex_mask()).trailing_zeros() as usize;
        return Err(Error::IndexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}
