use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::{binom, binom_big, factorial_valuation, is_prime};
use crate::error::{Error, Result};

/// Largest residue modulus `p^(k + t)` for the variables.
pub const MAX_LOCAL_MODULUS: u64 = 10_000;

/// Congruence `sum_i lambda_i C(x_i, d) = m (mod p^k)` with each `x_i`
/// ranging over residues modulo `p^(k + t)`, where `t = v_p(d!)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCountSpec {
    pub p: u64,
    pub k_exp: u32,
    pub d: u32,
    pub lambdas: Vec<u64>,
    pub m: u64,
}

impl LocalCountSpec {
    pub fn new(p: u64, k_exp: u32, d: u32, s: usize, m: u64) -> Self {
        LocalCountSpec { p, k_exp, d, lambdas: vec![1; s], m }
    }

    pub fn t(&self) -> u32 {
        factorial_valuation(u64::from(self.d), self.p)
    }

    /// `p^k`, the modulus of the congruence.
    pub fn target_modulus(&self) -> Option<u64> {
        self.p.checked_pow(self.k_exp)
    }

    /// `p^(k + t)`, the modulus the variables range over.
    pub fn variable_modulus(&self) -> Option<u64> {
        self.p.checked_pow(self.k_exp + self.t())
    }
}

/// `C(x, d) mod modulus` for the representatives `x = 0..count`.
pub fn binomial_residues(d: u32, count: u64, modulus: u64) -> Vec<u64> {
    (0..count)
        .map(|x| match binom(x, u64::from(d)) {
            Some(v) => (v % u128::from(modulus)) as u64,
            None => {
                let r = binom_big(x, u64::from(d)) % modulus;
                r.try_into().expect("residue below modulus")
            }
        })
        .collect()
}

/// Number of residue tuples solving the congruence, by a dynamic program
/// over partial sums modulo `p^k`.
pub fn count_local(spec: &LocalCountSpec) -> Result<BigUint> {
    if !is_prime(spec.p) {
        return Err(Error::NotPrime(spec.p));
    }
    if spec.k_exp == 0 || spec.lambdas.is_empty() {
        return Err(Error::BadSpec("need k >= 1 and at least one variable".into()));
    }
    let too_large = || Error::TooLargeModulus(spec.p.saturating_pow(spec.k_exp + spec.t()));
    let var_mod = spec.variable_modulus().ok_or_else(too_large)?;
    if var_mod > MAX_LOCAL_MODULUS {
        return Err(too_large());
    }
    let modulus = spec.target_modulus().expect("below variable modulus");
    let residues = binomial_residues(spec.d, var_mod, modulus);
    let size = modulus as usize;

    let mut table = vec![BigUint::from(0u8); size];
    table[0] = BigUint::from(1u8);
    for &lambda in &spec.lambdas {
        let mut hist = vec![0u64; size];
        for &r in &residues {
            hist[((u128::from(lambda % modulus) * u128::from(r)) % u128::from(modulus)) as usize] += 1;
        }
        let mut next = vec![BigUint::from(0u8); size];
        for (a, count) in table.iter().enumerate() {
            if *count == BigUint::from(0u8) {
                continue;
            }
            for (b, &h) in hist.iter().enumerate() {
                if h != 0 {
                    next[(a + b) % size] += count * h;
                }
            }
        }
        table = next;
    }
    Ok(table.swap_remove((spec.m % modulus) as usize))
}
