//! Small integer helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime factorisation as (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn totient(n: u64) -> u64 {
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, q| acc / q * (q - 1))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Splits `n` as `p^a * m` with `p` not dividing `m`; returns `(p^a, m)`.
pub fn split_p_part(mut n: u64, p: u64) -> (u64, u64) {
    let mut pa = 1;
    while n % p == 0 {
        n /= p;
        pa *= p;
    }
    (pa, n)
}

/// p-adic valuation of a non-zero big integer.
pub fn nu_p(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// p-part of a non-zero big integer.
pub fn p_part(n: &BigInt, p: u64) -> BigInt {
    num_traits::pow(BigInt::from(p), nu_p(n, p) as usize)
}

/// Modular inverse of `a` modulo `m` when it exists.
pub fn inv_mod(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m))
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Big integer to u64 when it fits.
pub fn to_u64(n: &BigInt) -> Option<u64> {
    u64::try_from(n).ok()
}

pub fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_number_theory() {
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(factorize(72), vec![(2, 3), (3, 2)]);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(36), 12);
        assert_eq!(split_p_part(72, 3), (9, 8));
        assert_eq!(nu_p(&BigInt::from(443520), 3), 2);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(pow_mod(3, 5, 7), 5);
        assert!(is_prime(97) && !is_prime(91));
    }
}
