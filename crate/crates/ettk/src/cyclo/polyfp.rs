//! Dense polynomials over the prime field F_p, constant term first.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(v)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let v = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(v)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + x * y) % p;
        }
    }
    trim(v)
}

/// Quotient and remainder of `a` by non-zero `b`.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), r);
    }
    let li = inv(b[db], p);
    let mut q = vec![0u64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db] * li % p;
        q[i] = c;
        if c != 0 {
            for j in 0..=db {
                r[i + j] = (r[i + j] + p - c * b[j] % p) % p;
            }
        }
    }
    (trim(q), trim(r))
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    divrem(a, b, p).1
}

pub fn monic(a: &[u64], p: u64) -> Poly {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&l) => {
            let li = inv(l, p);
            a.iter().map(|&c| c * li % p).collect()
        }
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), f, p)
}

pub fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Poly {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

/// Reduction of an integer polynomial mod p.
pub fn from_integers(c: &[i64], p: u64) -> Poly {
    trim(c.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
}

/// Factors a squarefree polynomial into monic irreducibles: distinct-degree
/// splitting followed by Cantor–Zassenhaus. Output is sorted by coefficient
/// sequence.
pub fn factor_squarefree(f: &[u64], p: u64, seed: u64) -> Vec<Poly> {
    let mut f = monic(f, p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    while let Some(df) = degree(&f) {
        if df < 2 * d {
            if df > 0 {
                out.push(f.clone());
            }
            break;
        }
        h = powmod(&h, p, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if degree(&g).unwrap_or(0) > 0 {
            equal_degree(&g, d, p, &mut rng, &mut out);
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
        d += 1;
    }
    out.sort();
    out
}

fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = degree(g).unwrap_or(0);
    if n == d {
        out.push(g.to_vec());
        return;
    }
    loop {
        let a: Poly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
            let mut t = a.clone();
            let mut s = a.clone();
            for _ in 1..d {
                t = mulmod(&t, &t, g, p);
                s = add(&s, &t, p);
            }
            s
        } else {
            // a^((p^d - 1)/2) = (a·a^p·…·a^(p^(d-1)))^((p-1)/2).
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = powmod(&t, p, g, p);
                norm = mulmod(&norm, &t, g, p);
            }
            sub(&powmod(&norm, (p - 1) / 2, g, p), &[1], p)
        };
        let c = gcd(&b, g, p);
        let dc = degree(&c).unwrap_or(0);
        if dc > 0 && dc < n {
            let q = divrem(g, &c, p).0;
            equal_degree(&c, d, p, rng, out);
            equal_degree(&monic(&q, p), d, p, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(fs: &[Poly], p: u64) -> Poly {
        fs.iter().fold(vec![1], |acc, f| mul(&acc, f, p))
    }

    #[test]
    fn divrem_roundtrip() {
        let a = vec![1, 2, 0, 4, 1];
        let b = vec![3, 0, 1];
        let (q, r) = divrem(&a, &b, 5);
        assert_eq!(add(&mul(&q, &b, 5), &r, 5), a);
    }

    #[test]
    fn factors_x4_plus_1() {
        // x^4+1 over F_3 splits into two quadratics.
        let f = vec![1, 0, 0, 0, 1];
        let fs = factor_squarefree(&f, 3, 0);
        assert_eq!(fs, vec![vec![2, 1, 1], vec![2, 2, 1]]);
        assert_eq!(product(&fs, 3), f);
    }

    #[test]
    fn factors_over_f2() {
        // Φ_7 = (x^3+x+1)(x^3+x^2+1) over F_2.
        let f = vec![1, 1, 1, 1, 1, 1, 1];
        let fs = factor_squarefree(&f, 2, 9);
        assert_eq!(fs, vec![vec![1, 0, 1, 1], vec![1, 1, 0, 1]]);
    }
}
