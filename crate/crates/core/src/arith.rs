//! Small exact integer helpers shared by every module.
//!
//! All residues are `u64`; moduli in this crate stay far below `2^32`, so a
//! product of two reduced residues never overflows.

use crate::error::Error;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Least common multiple of a sequence; the empty sequence gives 1.
pub fn lcm_all<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(1, lcm)
}

/// Reduces a signed integer into `[0, modulus)`.
pub fn rem(value: i64, modulus: u64) -> u64 {
    value.rem_euclid(modulus as i64) as u64
}

pub fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

pub fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1 % modulus;
    let mut base = base % modulus;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    result
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Inverse of `a` modulo `modulus`, if it exists.
pub fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd((a % modulus) as i64, modulus as i64);
    (g == 1).then(|| rem(x, modulus))
}

/// Multiplicative order of `k` modulo `n`: the least `t >= 1` with `k^t = 1 (mod n)`.
pub fn mult_order(k: u64, n: u64) -> Result<u64, Error> {
    if n == 0 || gcd(k % n, n) != 1 {
        return Err(Error::NotAUnit { k, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let k = k % n;
    let mut acc = k;
    let mut t = 1;
    while acc != 1 {
        acc = mul_mod(acc, k, n);
        t += 1;
    }
    Ok(t)
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Units of `Z_n` in ascending order.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}
