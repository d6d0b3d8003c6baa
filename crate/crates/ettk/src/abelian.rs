//! Finite abelian groups described by invariant factors d₁ | d₂ | … | d_r.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::factorize;

/// A finite abelian group in invariant-factor form. The trivial group has no
/// factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianGroup(Vec<u64>);

impl AbelianGroup {
    /// Normalises an arbitrary list of cyclic orders, e.g. `[6, 4]` becomes
    /// `[2, 12]`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut primary: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &d in orders {
            for (q, e) in factorize(d) {
                primary.entry(q).or_default().push(q.pow(e));
            }
        }
        let rank = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        for powers in primary.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, pw) in powers.iter().enumerate() {
                factors[rank - 1 - i] *= pw;
            }
        }
        AbelianGroup(factors)
    }

    pub fn trivial() -> Self {
        AbelianGroup(Vec::new())
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(&[n])
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.0.last().copied().unwrap_or(1)
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Self {
        let all: Vec<u64> = self.0.iter().chain(&other.0).copied().collect();
        Self::from_cyclic_orders(&all)
    }

    /// Number of elements whose order divides `d`.
    pub fn count_dividing(&self, d: u64) -> u64 {
        self.0.iter().map(|&f| num_integer::gcd(f, d)).product()
    }

    pub fn has_element_of_order(&self, d: u64) -> bool {
        self.exponent() % d == 0
    }

    /// Whether `self` is isomorphic to a subgroup of `other`: for every prime
    /// q and every k, `self` has at most as many elements of order dividing
    /// q^k as `other`.
    pub fn embeds_in(&self, other: &Self) -> bool {
        if other.order() % self.order() != 0 {
            return false;
        }
        for (q, e) in factorize(self.order()) {
            let mut qk = 1;
            for _ in 0..e {
                qk *= q;
                if self.count_dividing(qk) > other.count_dividing(qk) {
                    return false;
                }
            }
        }
        true
    }

    /// All abelian groups of order `n`, in a fixed order.
    pub fn all_of_order(n: u64) -> Vec<Self> {
        let mut acc: Vec<Vec<u64>> = vec![Vec::new()];
        for (q, e) in factorize(n) {
            let mut next = Vec::new();
            for part in partitions(e) {
                for base in &acc {
                    let mut v = base.clone();
                    v.extend(part.iter().map(|&k| q.pow(k)));
                    next.push(v);
                }
            }
            acc = next;
        }
        let mut out: Vec<Self> = acc.iter().map(|v| Self::from_cyclic_orders(v)).collect();
        out.sort();
        out
    }
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors of a finite abelian group given by its multiplication
/// on element indices `0..n` with identity `e`.
///
/// Repeatedly picks an element of maximal order modulo the subgroup generated
/// so far; the orders found are the invariant factors, largest first.
pub fn invariant_factors_of(n: usize, e: usize, mul: impl Fn(usize, usize) -> usize) -> AbelianGroup {
    let mut inside = vec![false; n];
    inside[e] = true;
    let mut size = 1;
    let mut factors = Vec::new();
    while size < n {
        let mut best = (0, e);
        for x in 0..n {
            let mut k = 1;
            let mut y = x;
            while !inside[y] {
                y = mul(y, x);
                k += 1;
            }
            if k > best.0 {
                best = (k, x);
            }
        }
        let (k, x) = best;
        factors.push(k as u64);
        let old: Vec<usize> = (0..n).filter(|&i| inside[i]).collect();
        let mut pw = x;
        for _ in 1..k {
            for &h in &old {
                inside[mul(h, pw)] = true;
            }
            pw = mul(pw, x);
        }
        size = inside.iter().filter(|&&b| b).count();
    }
    factors.reverse();
    AbelianGroup(factors)
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|d| format!("Z/{d}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        assert_eq!(AbelianGroup::from_cyclic_orders(&[6, 4]).invariant_factors(), &[2, 12]);
        assert_eq!(AbelianGroup::from_cyclic_orders(&[1, 1]).invariant_factors(), &[] as &[u64]);
        assert_eq!(AbelianGroup::cyclic(5).sum(&AbelianGroup::cyclic(2)), AbelianGroup::cyclic(10));
    }

    #[test]
    fn groups_of_order_8() {
        let all = AbelianGroup::all_of_order(8);
        assert_eq!(all.len(), 3);
        assert_eq!(AbelianGroup::all_of_order(72).len(), 6);
    }

    #[test]
    fn embedding() {
        let v4 = AbelianGroup::from_cyclic_orders(&[2, 2]);
        assert!(!v4.embeds_in(&AbelianGroup::cyclic(8)));
        assert!(v4.embeds_in(&AbelianGroup::from_cyclic_orders(&[2, 4])));
        assert!(AbelianGroup::cyclic(4).embeds_in(&AbelianGroup::from_cyclic_orders(&[2, 4])));
    }

    #[test]
    fn factors_from_multiplication() {
        // Z/2 x Z/4 as pairs (a, b) encoded 4a + b.
        let mul = |x: usize, y: usize| 4 * ((x / 4 + y / 4) % 2) + (x % 4 + y % 4) % 4;
        assert_eq!(invariant_factors_of(8, 0, mul).invariant_factors(), &[2, 4]);
        let z12 = |x: usize, y: usize| (x + y) % 12;
        assert_eq!(invariant_factors_of(12, 0, z12).invariant_factors(), &[12]);
    }
}
