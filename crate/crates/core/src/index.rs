//! The Steiner–Wiener index and its closed forms for stars and nested stars.

use serde::Serialize;

use crate::arith::binom;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::nested_star::NestedStarSpec;
use crate::steiner::SteinerSolver;

/// `SW_k` of some graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SwValue {
    pub k: usize,
    pub value: u128,
}

impl std::fmt::Display for SwValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SW_{} = {}", self.k, self.value)
    }
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::BadK(k))
    } else {
        Ok(())
    }
}

fn overflow(what: &str) -> Error {
    Error::InfeasibleWidth(format!("{what} exceeds 128 bits"))
}

/// Sum of Steiner distances over all `k`-subsets of the vertices.
///
/// Always takes the generic path; see [`steiner_wiener_fast`] for the
/// nested-star shortcut.
pub fn steiner_wiener(g: &Graph, k: usize) -> Result<SwValue> {
    check_k(k)?;
    let solver = SteinerSolver::new(g)?;
    let n = g.n();
    if k > n {
        return Ok(SwValue { k, value: 0 });
    }
    let mut total: u128 = 0;
    for mask in k_subsets(n, k) {
        total += u128::from(solver.distance_of_mask(mask));
    }
    Ok(SwValue { k, value: total })
}

/// Like [`steiner_wiener`], but answers in closed form when `g` is exactly
/// a nested star.
pub fn steiner_wiener_fast(g: &Graph, k: usize) -> Result<SwValue> {
    check_k(k)?;
    match NestedStarSpec::recognize(g) {
        Some(spec) => nested_star_closed_form(&spec, k),
        None => steiner_wiener(g, k),
    }
}

/// `(n - 1) * C(n - 1, k - 1)`, cross-checked against `k * C(n, k) - C(n - 1, k - 1)`.
pub fn star_closed_form(n: usize, k: usize) -> Result<SwValue> {
    check_k(k)?;
    if n < 2 {
        return Err(Error::BadSpec(format!("star needs at least 2 vertices, got {n}")));
    }
    let (n64, k64) = (n as u64, k as u64);
    let c = binom(n64 - 1, k64 - 1).ok_or_else(|| overflow("C(n-1, k-1)"))?;
    let value = c
        .checked_mul(u128::from(n64 - 1))
        .ok_or_else(|| overflow("star index"))?;
    let alt = binom(n64, k64)
        .and_then(|b| b.checked_mul(u128::from(k64)))
        .map(|v| v - c);
    if let Some(alt) = alt {
        assert_eq!(alt, value, "star closed forms disagree for n = {n}, k = {k}");
    }
    Ok(SwValue { k, value })
}

pub fn nested_star_closed_form(spec: &NestedStarSpec, k: usize) -> Result<SwValue> {
    let star = star_closed_form(spec.n(), k)?;
    let mut deficit: u128 = 0;
    for &a in spec.hubs() {
        deficit = deficit
            .checked_add(crate::nested_star::hub_deficit_count(a, k)?)
            .ok_or_else(|| overflow("hub deficit"))?;
    }
    Ok(SwValue { k, value: star.value - deficit })
}

/// Every `SW_k` summand is at least `k - 1`, so `SW_k >= (k - 1) * C(n, k)`.
pub fn min_sw_lower_bound(n: usize, k: usize) -> Result<SwValue> {
    check_k(k)?;
    let c = binom(n as u64, k as u64).ok_or_else(|| overflow("C(n, k)"))?;
    let value = c.checked_mul(k as u128 - 1).ok_or_else(|| overflow("lower bound"))?;
    Ok(SwValue { k, value })
}

/// All `k`-element subsets of `0..n` as bitmasks, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut next = if k == 0 || k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        // Gosper's hack
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        next = if r == 0 || r >= limit {
            None
        } else {
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < limit).then_some(succ)
        };
        Some(cur)
    })
}
