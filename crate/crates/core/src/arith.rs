//! Exact integer helpers shared by the index, representation and counting code.

use num_bigint::BigUint;

/// `C(n, k)` in 128-bit arithmetic; `None` on overflow.
pub fn binom(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        let num = u128::from(n - i);
        let den = u128::from(i + 1);
        let g = gcd(acc, den);
        let (a, d) = (acc / g, den / g);
        acc = a.checked_mul(num / d)?;
    }
    Some(acc)
}

/// `C(n, k)` without a width limit.
pub fn binom_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u8);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exponent of the prime `p` in `n!` (Legendre's formula).
pub fn factorial_valuation(n: u64, p: u64) -> u32 {
    let mut v = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        v += q as u32;
    }
    v
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Smallest `r` with `r^d >= m`.
pub fn ceil_root(m: u128, d: u32) -> u128 {
    if d == 0 || m <= 1 {
        return m.min(1);
    }
    let approx = (m as f64).powf(1.0 / f64::from(d)).round() as u128;
    let mut r = approx.saturating_sub(2);
    while !pow_at_least(r, d, m) {
        r += 1;
    }
    while r > 0 && pow_at_least(r - 1, d, m) {
        r -= 1;
    }
    r
}

/// Largest `r` with `r^d <= m`.
pub fn floor_root(m: u128, d: u32) -> u128 {
    let c = ceil_root(m, d);
    if c.checked_pow(d) == Some(m) {
        c
    } else {
        c - 1
    }
}

/// `r^d >= m`, saturating on overflow.
fn pow_at_least(r: u128, d: u32, m: u128) -> bool {
    match r.checked_pow(d) {
        Some(v) => v >= m,
        None => true,
    }
}
