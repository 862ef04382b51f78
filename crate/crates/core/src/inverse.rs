//! Realizing a prescribed `SW_k` value with a nested star.
//!
//! For a star size `n`, the index of the plain star minus the target is a
//! deficit that must be written as a sum of distinct `C(a, k - 1)` with
//! `0 < a < n - 1`; the hubs `a` then define the graph. Every certificate is
//! checked by recomputing the index of the built graph from scratch.

use rayon::prelude::*;
use serde::Serialize;

use crate::binomial_rep::represent;
use crate::error::Result;
use crate::graph::{Graph, MAX_VERTICES};
use crate::index::{check_k, nested_star_closed_form, star_closed_form, steiner_wiener, SwValue};
use crate::nested_star::NestedStarSpec;

/// The interval `[star - n^(k-1), star - m0]` of values a star on `n`
/// vertices covers once every deficit up to `n^(k-1)` is representable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibleInterval {
    pub lo: i128,
    pub hi: i128,
}

impl FeasibleInterval {
    /// True when no positive index value lies in the interval.
    pub fn is_empty(&self) -> bool {
        self.hi < self.lo.max(1)
    }

    pub fn contains(&self, v: i128) -> bool {
        self.lo <= v && v <= self.hi
    }
}

pub fn feasible_interval(n: usize, k: usize, m0: u128) -> Result<FeasibleInterval> {
    let star = star_closed_form(n, k)?.value as i128;
    let reach = (n as i128).pow(k as u32 - 1);
    Ok(FeasibleInterval { lo: star - reach, hi: star - m0 as i128 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseCertificate {
    pub k: usize,
    pub target: u128,
    pub n: usize,
    pub spec: NestedStarSpec,
    pub predicted: SwValue,
    pub verified: SwValue,
}

impl InverseCertificate {
    pub fn graph(&self) -> Graph {
        self.spec.build()
    }
}

/// Searches star sizes upward from the smallest `n` whose star reaches
/// `target`; `None` means no nested star with `n <= n_max` works, which
/// does not rule out other graphs.
pub fn invert(k: usize, target: u128, n_max: usize) -> Result<Option<InverseCertificate>> {
    check_k(k)?;
    let n_max = n_max.min(MAX_VERTICES);
    for n in 2..=n_max {
        let star = star_closed_form(n, k)?.value;
        if star < target {
            continue;
        }
        let deficit = star - target;
        let Some(rep) = represent(deficit, k as u32 - 1, n as u64 - 1) else {
            continue;
        };
        let hubs = rep.terms.iter().map(|&a| a as usize).collect();
        let spec = NestedStarSpec::new(n, hubs)?;
        let predicted = nested_star_closed_form(&spec, k)?;
        let verified = steiner_wiener(&spec.build(), k)?;
        if predicted.value == target && verified.value == target {
            return Ok(Some(InverseCertificate { k, target, n, spec, predicted, verified }));
        }
    }
    Ok(None)
}

/// [`invert`] over many targets in parallel; results follow input order.
pub fn invert_many(k: usize, targets: &[u128], n_max: usize) -> Result<Vec<Option<InverseCertificate>>> {
    targets.par_iter().map(|&t| invert(k, t, n_max)).collect()
}

pub fn verify(g: &Graph, k: usize, claimed: u128) -> Result<bool> {
    Ok(steiner_wiener(g, k)?.value == claimed)
}
