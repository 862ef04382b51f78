use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{binom, ceil_root, floor_root};
use crate::error::{Error, Result};

/// Largest target the dense sum table accepts.
pub const MAX_TABLE_TARGET: u64 = 1 << 23;

/// Largest `s` accepted when counting tuples with distinct coordinates.
pub const MAX_DISTINCT_VARIABLES: usize = 12;

/// How the variable bound `B` is chosen from `m` and `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRule {
    /// `ceil(m^(1/d) / 100)`, at least 1.
    Default,
    /// `floor(m^(1/d))`, at least 1.
    FloorRoot,
    Explicit(u64),
}

impl BoundRule {
    pub fn bound(self, m: u64, d: u32) -> u64 {
        let b = match self {
            BoundRule::Default => {
                // smallest B with (100 B)^d >= m
                let r = ceil_root(u128::from(m), d.max(1));
                r.div_ceil(100) as u64
            }
            BoundRule::FloorRoot => floor_root(u128::from(m), d.max(1)) as u64,
            BoundRule::Explicit(b) => b,
        };
        b.max(1)
    }
}

/// Parameters of the tuple count `#{x : sum_i lambda_i C(x_i, d) = m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountSpec {
    pub d: u32,
    pub lambdas: Vec<u64>,
    pub m: u64,
    pub bound: BoundRule,
    /// Require pairwise distinct coordinates.
    pub distinct: bool,
    /// Let variables range over `0..=B` instead of `1..=B`.
    pub include_zero: bool,
}

impl CountSpec {
    /// All-ones coefficients, default bound, positive variables.
    pub fn new(d: u32, s: usize, m: u64) -> Self {
        CountSpec {
            d,
            lambdas: vec![1; s],
            m,
            bound: BoundRule::Default,
            distinct: false,
            include_zero: false,
        }
    }

    pub fn s(&self) -> usize {
        self.lambdas.len()
    }

    pub fn effective_bound(&self) -> u64 {
        self.bound.bound(self.m, self.d)
    }

    fn validate(&self) -> Result<()> {
        if self.lambdas.is_empty() || self.lambdas.contains(&0) {
            return Err(Error::BadSpec("need at least one positive coefficient".into()));
        }
        if self.d == 0 {
            return Err(Error::BadSpec("d must be at least 1".into()));
        }
        if self.m > MAX_TABLE_TARGET {
            return Err(Error::InfeasibleWidth(format!(
                "target {} above the sum-table limit {MAX_TABLE_TARGET}",
                self.m
            )));
        }
        if self.distinct && self.s() > MAX_DISTINCT_VARIABLES {
            return Err(Error::TooLarge(format!(
                "distinct counting supports at most {MAX_DISTINCT_VARIABLES} variables"
            )));
        }
        let domain = self.effective_bound() as u128 + u128::from(self.include_zero);
        let fits = (0..self.s()).try_fold(1u128, |acc, _| acc.checked_mul(domain)).is_some();
        if !fits {
            return Err(Error::InfeasibleWidth(format!(
                "{domain}^{} tuples exceed 128-bit counters",
                self.s()
            )));
        }
        Ok(())
    }

    /// Distinct values of `C(x, d)` over the variable domain that are at
    /// most `m`, with multiplicities.
    fn value_histogram(&self) -> Vec<(u64, u128)> {
        let lo = u64::from(!self.include_zero);
        let mut hist: Vec<(u64, u128)> = Vec::new();
        for x in lo..=self.effective_bound() {
            let v = match binom(x, u64::from(self.d)) {
                Some(v) if v <= u128::from(self.m) => v as u64,
                _ => break,
            };
            match hist.last_mut() {
                Some((last, mult)) if *last == v => *mult += 1,
                _ => hist.push((v, 1)),
            }
        }
        hist
    }
}

/// Exact count of ordered tuples `x` with every `x_i` in the domain and
/// `sum_i lambda_i C(x_i, d) = m`.
///
/// The plain count is a dynamic program over partial sums `0..=m`. The
/// distinct-coordinate count is obtained by Möbius inversion over set
/// partitions of the variables: merging a block of variables into one
/// variable whose coefficient is the block's coefficient sum.
pub fn count_representations(spec: &CountSpec) -> Result<u128> {
    spec.validate()?;
    let hist = spec.value_histogram();
    if !spec.distinct {
        return Ok(count_tuples(&spec.lambdas, &hist, spec.m));
    }
    let mut total: i128 = 0;
    for (coeffs, weight) in partition_weights(&spec.lambdas) {
        let n = count_tuples(&coeffs, &hist, spec.m);
        let n = i128::try_from(n)
            .map_err(|_| Error::InfeasibleWidth("partial count exceeds i128".into()))?;
        total = weight
            .checked_mul(n)
            .and_then(|t| total.checked_add(t))
            .ok_or_else(|| Error::InfeasibleWidth("inclusion-exclusion overflow".into()))?;
    }
    u128::try_from(total).map_err(|_| Error::InfeasibleWidth("negative distinct count".into()))
}

fn count_tuples(coeffs: &[u64], hist: &[(u64, u128)], m: u64) -> u128 {
    let m = m as usize;
    let (last, init) = coeffs.split_last().expect("at least one coefficient");
    let mut table = vec![0u128; m + 1];
    table[0] = 1;
    let mut next = vec![0u128; m + 1];
    for &c in init {
        next.fill(0);
        for &(v, mult) in hist {
            let step = match (v as u128).checked_mul(u128::from(c)) {
                Some(s) if s <= m as u128 => s as usize,
                _ => break,
            };
            for (dst, &src) in next[step..].iter_mut().zip(&table[..=m - step]) {
                *dst += mult * src;
            }
        }
        std::mem::swap(&mut table, &mut next);
    }
    let mut total = 0u128;
    for &(v, mult) in hist {
        match (v as u128).checked_mul(u128::from(*last)) {
            Some(s) if s <= m as u128 => total += mult * table[m - s as usize],
            _ => break,
        }
    }
    total
}

/// Möbius weights `prod_b (-1)^(|b|-1) (|b|-1)!` of all set partitions,
/// grouped by the sorted list of merged coefficients.
fn partition_weights(lambdas: &[u64]) -> BTreeMap<Vec<u64>, i128> {
    let s = lambdas.len();
    let mut out = BTreeMap::new();
    // restricted growth strings
    let mut block = vec![0usize; s];
    loop {
        let blocks = block.iter().max().map_or(0, |&b| b + 1);
        let mut sums = vec![0u64; blocks];
        let mut sizes = vec![0u32; blocks];
        for (i, &b) in block.iter().enumerate() {
            sums[b] += lambdas[i];
            sizes[b] += 1;
        }
        let weight: i128 = sizes
            .iter()
            .map(|&k| {
                let f: i128 = (1..k as i128).product();
                if k % 2 == 0 { -f } else { f }
            })
            .product();
        sums.sort_unstable();
        *out.entry(sums).or_insert(0) += weight;

        // advance to the next restricted growth string
        let mut i = s;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let prefix_max = block[..i].iter().copied().max().unwrap_or(0);
            if block[i] <= prefix_max {
                block[i] += 1;
                for b in &mut block[i + 1..] {
                    *b = 0;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeRow {
    pub m: u64,
    pub bound: u64,
    #[serde(rename = "N")]
    pub n: u128,
    #[serde(rename = "Nstar")]
    pub n_star: u128,
    /// `N(m) * m^(1 - s/d)`.
    pub scaled: f64,
    /// `(N(m) - N*(m)) / N(m)`, or 0 when `N(m) = 0`.
    pub collision_ratio: f64,
}

/// Tabulates `N(m)` and `N*(m)` along a list of targets.
pub fn asymptotic_probe(d: u32, lambdas: &[u64], m_values: &[u64], rule: BoundRule) -> Result<Vec<ProbeRow>> {
    let s = lambdas.len() as f64;
    m_values
        .iter()
        .map(|&m| {
            let mut spec = CountSpec {
                d,
                lambdas: lambdas.to_vec(),
                m,
                bound: rule,
                distinct: false,
                include_zero: false,
            };
            let n = count_representations(&spec)?;
            spec.distinct = true;
            let n_star = count_representations(&spec)?;
            let collision_ratio = if n == 0 { 0.0 } else { (n - n_star) as f64 / n as f64 };
            Ok(ProbeRow {
                m,
                bound: spec.effective_bound(),
                n,
                n_star,
                scaled: n as f64 * (m as f64).powf(1.0 - s / f64::from(d)),
                collision_ratio,
            })
        })
        .collect()
}
