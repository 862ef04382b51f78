//! Simple undirected graphs on at most 62 vertices, stored as neighbor bitsets.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 62;

/// A simple undirected graph on the vertices `0..n`.
///
/// Row `v` of the adjacency holds bit `u` iff `{u, v}` is an edge. The
/// constructors keep the rows symmetric and loop-free, so a `Graph` is
/// always a valid simple graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        Graph::empty(n)?;
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(Error::IndexOutOfRange { vertex: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopEdge(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::MalformedEdgeList(format!(
                        "adjacency not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let mask = full_mask(n);
        for v in 0..n {
            g.adj[v] = mask & !(1 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The star `S_n` with its center at vertex `n - 1`.
    pub fn star(n: usize) -> Result<Self> {
        Graph::from_edge_list(n, (0..n.saturating_sub(1)).map(|v| (v, n - 1)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Vertices reachable from `start` through vertices of `within`.
    pub fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `set` is connected (the empty set is not).
    pub fn induces_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        self.component_of(set.trailing_zeros() as usize, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertex_mask())
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Adds a new vertex `n` adjacent to `nbrs`.
    pub fn with_new_vertex(&self, nbrs: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!("vertex count {n}")));
        }
        let mut adj = self.adj.clone();
        for u in bits(nbrs) {
            if u >= self.n {
                return Err(Error::IndexOutOfRange { vertex: u, n: self.n });
            }
            adj[u] |= 1 << self.n;
        }
        adj.push(nbrs);
        Ok(Graph { n, adj })
    }

    /// Parses the edge-list text format: a header line `n m` then `m` lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedEdgeList("missing header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::MalformedEdgeList(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        if lines.next().is_some() {
            return Err(Error::MalformedEdgeList("trailing lines after edges".into()));
        }
        Graph::from_edge_list(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Short-form graph6: size byte `63 + n`, then the upper triangle
    /// column by column, six bits per byte.
    pub fn to_graph6(&self) -> String {
        let mut out = String::with_capacity(1 + graph6_body_len(self.n));
        out.push((63 + self.n as u8) as char);
        let mut chunk = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                chunk = chunk << 1 | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((63 + chunk) as char);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((63 + (chunk << (6 - filled))) as char);
        }
        out
    }

    pub fn parse_graph6(line: &str) -> Result<Graph> {
        let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
        let bad = |msg: String| Error::MalformedGraph6(msg);
        let (&head, body) = bytes.split_first().ok_or_else(|| bad("empty string".into()))?;
        if let Some(&c) = bytes.iter().find(|&&c| !(63..=126).contains(&c)) {
            return Err(bad(format!("byte {c} outside 63..=126")));
        }
        if head == 126 {
            return Err(bad("long-form size header is not supported".into()));
        }
        let n = (head - 63) as usize;
        if n == 0 {
            return Err(bad("zero vertices".into()));
        }
        if body.len() != graph6_body_len(n) {
            return Err(bad(format!(
                "expected {} data bytes for n = {n}, found {}",
                graph6_body_len(n),
                body.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[idx / 6] - 63;
                if byte >> (5 - idx % 6) & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
                idx += 1;
            }
        }
        let pad = (6 - idx % 6) % 6;
        if pad > 0 && (body[body.len() - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits".into()));
        }
        Ok(g)
    }
}

fn graph6_body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::MalformedEdgeList(format!("expected two integers: {line:?}"))),
    }
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bit positions of `x`, lowest first.
#[inline]
pub fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}
