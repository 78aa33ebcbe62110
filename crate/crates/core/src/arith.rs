//! Integer helpers: modular powers, orders and factorization.

use num_prime::nt_funcs::{factorize64, is_prime64};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    is_prime64(n)
}

/// Prime factorization as `(prime, exponent)` pairs in ascending order.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    if n <= 1 {
        return Vec::new();
    }
    factorize64(n)
        .into_iter()
        .map(|(p, k)| (p, k as u32))
        .collect()
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = base % m;
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// `p^e`, or `None` on overflow.
pub fn checked_pow(p: u64, e: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce_signed(s: i64, m: u64) -> u64 {
    (s as i128).rem_euclid(m as i128) as u64
}

/// Multiplicative order of `a` modulo `m`; `None` when `a` is not a unit.
pub fn mult_order_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    let a = a % m;
    if gcd(a, m) != 1 {
        return None;
    }
    let phi = totient(m);
    let mut order = phi;
    for (l, _) in factorize(phi) {
        while order % l == 0 && pow_mod(a, order / l, m) == 1 {
            order /= l;
        }
    }
    Some(order)
}

pub fn totient(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(u64::MAX as u128) as u64
}

/// Largest `b` with `2^b | n`, together with the odd part.
pub fn split_two_power(n: u64) -> (u32, u64) {
    let b = n.trailing_zeros();
    (b, n >> b)
}
