//! Nested stars: vertex `n - 1` sees everything, and each hub `a` also sees
//! every vertex below it.

use serde::Serialize;

use crate::arith::binom;
use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, MAX_VERTICES};
use crate::index::check_k;

/// Star size plus a strictly increasing hub list `1 <= a_1 < ... < a_r <= n - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NestedStarSpec {
    n: usize,
    hubs: Vec<usize>,
}

impl NestedStarSpec {
    pub fn new(n: usize, hubs: Vec<usize>) -> Result<Self> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::BadSpec(format!("n = {n} outside 2..={MAX_VERTICES}")));
        }
        if hubs.first().is_some_and(|&a| a == 0) {
            return Err(Error::BadSpec("hubs must be positive".into()));
        }
        if hubs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadSpec(format!("hubs {hubs:?} not strictly increasing")));
        }
        if hubs.last().is_some_and(|&a| a + 1 >= n) {
            return Err(Error::BadSpec(format!("hubs must stay below n - 1 = {}", n - 1)));
        }
        Ok(NestedStarSpec { n, hubs })
    }

    /// Parses a comma-separated hub list such as `3,8` (empty for none).
    pub fn parse(n: usize, hubs: &str) -> Result<Self> {
        let hubs = hubs
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::BadSpec(format!("bad hub value {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        NestedStarSpec::new(n, hubs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hubs(&self) -> &[usize] {
        &self.hubs
    }

    /// For `i < j`, the edge `{i, j}` is present iff `j` is a hub or `j = n - 1`.
    pub fn build(&self) -> Graph {
        let mut rows = vec![0u64; self.n];
        let centers = self.hubs.iter().copied().chain(std::iter::once(self.n - 1));
        for j in centers {
            let below = full_mask(j);
            rows[j] |= below;
            for row in &mut rows[..j] {
                *row |= 1 << j;
            }
        }
        Graph::from_adjacency(rows).expect("nested star rows are symmetric")
    }

    /// Inverse of [`build`](Self::build): returns the spec if `g` is exactly a nested star.
    pub fn recognize(g: &Graph) -> Option<Self> {
        let n = g.n();
        if n < 2 {
            return None;
        }
        let hubs: Vec<usize> = (1..n - 1)
            .filter(|&j| g.neighbors(j) & full_mask(j) == full_mask(j))
            .collect();
        let spec = NestedStarSpec::new(n, hubs).ok()?;
        (spec.build() == *g).then_some(spec)
    }

    pub fn edge_count(&self) -> usize {
        self.n - 1 + self.hubs.iter().sum::<usize>()
    }
}

/// `C(a, k - 1)`: the `k`-subsets avoiding the center whose maximum is hub `a`.
pub fn hub_deficit_count(a: usize, k: usize) -> Result<u128> {
    check_k(k)?;
    binom(a as u64, k as u64 - 1)
        .ok_or_else(|| Error::InfeasibleWidth(format!("C({a}, {}) exceeds 128 bits", k - 1)))
}
