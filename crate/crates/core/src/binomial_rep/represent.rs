use std::collections::HashSet;

use serde::Serialize;

use crate::arith::binom;

/// `target = C(x_1, d) + ... + C(x_r, d)` with `1 <= x_1 < ... < x_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Representation {
    pub d: u32,
    pub terms: Vec<u64>,
    #[serde(rename = "m")]
    pub target: u128,
}

impl Representation {
    /// Re-sums the terms and checks ordering and positivity.
    pub fn is_valid(&self) -> bool {
        let ascending = self.terms.windows(2).all(|w| w[0] < w[1]);
        let positive = self.terms.first().is_none_or(|&x| x >= 1);
        let sum = self
            .terms
            .iter()
            .try_fold(0u128, |acc, &x| acc.checked_add(binom(x, u64::from(self.d))?));
        ascending && positive && sum == Some(self.target)
    }
}

fn value(x: u64, d: u32) -> Option<u128> {
    binom(x, u64::from(d))
}

/// Largest `y` in `lo..=x` with `C(y, d) <= rem`.
fn largest_fitting(lo: u64, x: u64, d: u32, rem: u128) -> Option<u64> {
    if x < lo || value(lo, d)? > rem {
        return None;
    }
    let (mut good, mut bad) = (lo, x + 1);
    while bad - good > 1 {
        let mid = good + (bad - good) / 2;
        match value(mid, d) {
            Some(v) if v <= rem => good = mid,
            _ => bad = mid,
        }
    }
    Some(good)
}

enum Step {
    Enter(u64, u128),
    AfterInclude(u64, u128),
    AfterExclude(u64, u128),
}

/// Finds distinct terms below `max_x` whose `C(x, d)` sum to `m`.
///
/// Depth-first, largest term first, include before exclude. Failed
/// `(largest allowed term, remainder)` states are memoized, so the search
/// is complete: `None` means no representation exists.
pub fn represent(m: u128, d: u32, max_x: u64) -> Option<Representation> {
    let lo = u64::from(d).max(1);
    let done = |terms: Vec<u64>| {
        let mut terms = terms;
        terms.reverse();
        Some(Representation { d, terms, target: m })
    };
    if m == 0 {
        return done(Vec::new());
    }
    if max_x <= lo {
        return None;
    }
    let below_lo = binom(lo, u64::from(d) + 1).unwrap_or(0);
    // sum of C(y, d) over lo..=x
    let capacity = |x: u64| binom(x + 1, u64::from(d) + 1).map_or(u128::MAX, |c| c - below_lo);

    let mut chosen: Vec<u64> = Vec::new();
    let mut failed: HashSet<(u64, u128)> = HashSet::new();
    let mut stack = vec![Step::Enter(max_x - 1, m)];
    let mut found = false;
    while let Some(step) = stack.pop() {
        match step {
            Step::Enter(x, rem) => {
                if rem == 0 {
                    found = true;
                    continue;
                }
                found = false;
                let Some(y) = largest_fitting(lo, x, d, rem) else { continue };
                if capacity(y) < rem || failed.contains(&(y, rem)) {
                    continue;
                }
                let v = value(y, d).expect("fits below rem");
                chosen.push(y);
                stack.push(Step::AfterInclude(y, rem));
                stack.push(Step::Enter(y - 1, rem - v));
            }
            Step::AfterInclude(y, rem) => {
                if found {
                    continue;
                }
                chosen.pop();
                stack.push(Step::AfterExclude(y, rem));
                stack.push(Step::Enter(y - 1, rem));
            }
            Step::AfterExclude(y, rem) => {
                if !found {
                    failed.insert((y, rem));
                }
            }
        }
    }
    if found {
        done(chosen)
    } else {
        None
    }
}
