use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CycloError;
use crate::arith::{gcd, lcm, prime_divisors, totient};

/// An exact element of the cyclotomic field Q(ζ_n).
///
/// Stored in the power basis of the smallest field containing the value, so
/// two values are equal exactly when their conductors and coefficient vectors
/// agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u32,
    coeffs: Vec<BigRational>,
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Φ_n, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    if let Some(f) = phi_cache().lock().unwrap().get(&n) {
        return f.clone();
    }
    // (x^n - 1) divided by Φ_d for each proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &div);
    }
    let f = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, f.clone());
    f
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i64; num.len() - dn];
    for i in (0..q.len()).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Folds a dense vector of exponent coefficients into the power basis of Q(ζ_n).
fn reduce_dense(n: u32, dense: Vec<BigRational>) -> Vec<BigRational> {
    let n = n as usize;
    let mut v = if dense.len() > n {
        let mut v = vec![BigRational::zero(); n];
        for (k, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                v[k % n] += c;
            }
        }
        v
    } else {
        let mut dense = dense;
        dense.resize(n, BigRational::zero());
        dense
    };
    let f = cyclotomic_polynomial(n as u32);
    let deg = f.len() - 1;
    for i in (deg..n).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[i]);
        for (j, &fj) in f.iter().enumerate().take(deg) {
            if fj != 0 {
                v[i - deg + j] -= &c * BigRational::from_integer(BigInt::from(fj));
            }
        }
    }
    v.truncate(deg);
    v
}

/// Change-of-field data for rewriting an element of Q(ζ_n) in Q(ζ_m), m | n.
struct Descent {
    /// Column j is ζ_m^j written in the power basis of Q(ζ_n).
    embed: Vec<Vec<i64>>,
    rows: Vec<usize>,
    inverse: Vec<Vec<BigRational>>,
}

fn descent_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<Descent>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn descent(n: u32, m: u32) -> Arc<Descent> {
    if let Some(d) = descent_cache().lock().unwrap().get(&(n, m)) {
        return d.clone();
    }
    let step = (n / m) as usize;
    let phi_m = totient(m as u64) as usize;
    let embed: Vec<Vec<i64>> = (0..phi_m)
        .map(|j| {
            let mut dense = vec![BigRational::zero(); n as usize];
            dense[(j * step) % n as usize] = BigRational::one();
            reduce_dense(n, dense)
                .into_iter()
                .map(|c| i64::try_from(c.to_integer()).expect("small embedding"))
                .collect()
        })
        .collect();
    let phi_n = embed.first().map_or(1, |c| c.len());
    // Pick phi_m independent rows by elimination on the row space.
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut rows = Vec::new();
    for r in 0..phi_n {
        let mut v: Vec<BigRational> = (0..phi_m)
            .map(|j| BigRational::from_integer(BigInt::from(embed[j][r])))
            .collect();
        for (piv, b) in &basis {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone() / &b[*piv];
                for k in 0..phi_m {
                    v[k] -= &c * &b[k];
                }
            }
        }
        if let Some(piv) = v.iter().position(|x| !x.is_zero()) {
            basis.push((piv, v));
            rows.push(r);
            if rows.len() == phi_m {
                break;
            }
        }
    }
    let square: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|&r| {
            (0..phi_m)
                .map(|j| BigRational::from_integer(BigInt::from(embed[j][r])))
                .collect()
        })
        .collect();
    let inverse = invert(square);
    let d = Arc::new(Descent {
        embed,
        rows,
        inverse,
    });
    descent_cache().lock().unwrap().insert((n, m), d.clone());
    d
}

fn invert(mut a: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let k = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let s = a[col][col].recip();
        for j in 0..k {
            a[col][j] = &a[col][j] * &s;
            inv[col][j] = &inv[col][j] * &s;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for j in 0..k {
                    let t = &c * &a[col][j];
                    a[r][j] -= t;
                    let t = &c * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

fn try_descend(n: u32, m: u32, coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
    let d = descent(n, m);
    let b: Vec<BigRational> = d
        .inverse
        .iter()
        .map(|row| {
            row.iter()
                .zip(&d.rows)
                .fold(BigRational::zero(), |acc, (x, &r)| acc + x * &coeffs[r])
        })
        .collect();
    for (r, target) in coeffs.iter().enumerate() {
        let mut s = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            let e = d.embed[j][r];
            if e != 0 && !bj.is_zero() {
                s += bj * BigRational::from_integer(BigInt::from(e));
            }
        }
        if &s != target {
            return None;
        }
    }
    Some(b)
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(k))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            n: 1,
            coeffs: vec![q],
        }
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::from_terms(n, &[(k, BigRational::one())])
    }

    /// Canonical form of Σ c·ζ_n^e over the given `(e, c)` terms.
    pub fn from_terms(n: u32, terms: &[(i64, BigRational)]) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let mut dense = vec![BigRational::zero(); n as usize];
        for (e, c) in terms {
            dense[e.rem_euclid(n as i64) as usize] += c;
        }
        Self::from_dense(n, dense)
    }

    /// Canonical form of Σ dense[k]·ζ_n^k; `dense` may have any length.
    pub fn from_dense(n: u32, dense: Vec<BigRational>) -> Self {
        let coeffs = reduce_dense(n, dense);
        Self::minimize(n, coeffs)
    }

    fn minimize(mut n: u32, mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            let q = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
            return Self::from_rational(q);
        }
        'outer: loop {
            for q in prime_divisors(n as u64) {
                let m = n / q as u32;
                if let Some(b) = try_descend(n, m, &coeffs) {
                    n = m;
                    coeffs = b;
                    if coeffs.iter().skip(1).all(Zero::is_zero) {
                        return Self::from_rational(coeffs.swap_remove(0));
                    }
                    continue 'outer;
                }
            }
            return Cyclotomic { n, coeffs };
        }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Power-basis coordinates, length φ(conductor).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.n == 1).then(|| &self.coeffs[0])
    }

    pub fn as_rational_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// True when every power-basis coordinate is an integer, i.e. the value
    /// lies in Z[ζ_n].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Dense coefficient vector of length `m` for a multiple `m` of the conductor.
    fn lift(&self, m: u32) -> Vec<BigRational> {
        debug_assert_eq!(m % self.n, 0);
        let step = (m / self.n) as usize;
        let mut dense = vec![BigRational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[k * step] = c.clone();
            }
        }
        dense
    }

    /// Image under ζ_n ↦ ζ_n^j.
    pub fn galois(&self, j: i64) -> Result<Self, CycloError> {
        let n = self.n as i64;
        if gcd(j.unsigned_abs(), n as u64) != 1 {
            return Err(CycloError::NonCoprimeExponent { j, n: self.n });
        }
        if self.n == 1 {
            return Ok(self.clone());
        }
        let mut dense = vec![BigRational::zero(); self.n as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[(k as i64 * j).rem_euclid(n) as usize] += c;
            }
        }
        Ok(Self::from_dense(self.n, dense))
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    /// Exact test of |a|² = 1 via a·conj(a).
    pub fn abs_is_one(&self) -> bool {
        (self * &self.conj()).is_one()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order if the value is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let n = self.n;
        let period = if n % 2 == 1 { 2 * n } else { n };
        let mut acc = self.clone();
        for k in 1..=period {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    fn add_sub(&self, other: &Self, sign: bool) -> Self {
        if self.n == 1 && other.n == 1 {
            let q = if sign {
                &self.coeffs[0] + &other.coeffs[0]
            } else {
                &self.coeffs[0] - &other.coeffs[0]
            };
            return Self::from_rational(q);
        }
        let m = lcm(self.n as u64, other.n as u64) as u32;
        let mut dense = self.lift(m);
        let step = (m / other.n) as usize;
        for (k, c) in other.coeffs.iter().enumerate() {
            if sign {
                dense[k * step] += c;
            } else {
                dense[k * step] -= c;
            }
        }
        Self::from_dense(m, dense)
    }

    fn product(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        let m = lcm(self.n as u64, other.n as u64) as u32;
        let (sa, sb) = ((m / self.n) as usize, (m / other.n) as usize);
        let mut dense = vec![BigRational::zero(); m as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                dense[(i * sa + j * sb) % m as usize] += a * b;
            }
        }
        Self::from_dense(m, dense)
    }

    /// Non-zero `(exponent, coefficient)` pairs of the canonical form.
    pub fn terms(&self) -> Vec<(usize, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl From<BigInt> for Cyclotomic {
    fn from(k: BigInt) -> Self {
        Self::from_bigint(k)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_sub(rhs, true)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_sub(rhs, false)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.product(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + b)
    }
}

/// GAP-style rendering in the power basis, e.g. `1+2*E(3)`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let root = match k {
                0 => None,
                1 => Some(format!("E({})", self.n)),
                _ => Some(format!("E({})^{}", self.n, k)),
            };
            match root {
                None => write!(f, "{a}")?,
                Some(r) if a.is_one() => f.write_str(&r)?,
                Some(r) => write!(f, "{a}*{r}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn phi_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len(), 49);
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn basic_identities() {
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(-1));
        let i = z(4, 1);
        let one = Cyclotomic::one();
        assert_eq!(&(&one + &i) * &(&one - &i), Cyclotomic::from_int(2));
        assert_eq!(&z(5, 1) * &z(5, 4), one);
    }

    #[test]
    fn conductor_drops() {
        let m1 = z(4, 2);
        assert_eq!(m1, Cyclotomic::from_int(-1));
        assert_eq!(m1.conductor(), 1);
        let z6 = z(6, 1);
        assert_eq!(z6.conductor(), 3);
        assert_eq!(z6, -z(3, 2));
        assert_eq!(z6, &Cyclotomic::one() + &z(3, 1));
        // sqrt(-3) = ζ3 - ζ3² lives at conductor 3, even when built from ζ12
        let s = &z(12, 4) - &z(12, 8);
        assert_eq!(s.conductor(), 3);
    }

    #[test]
    fn galois_and_conjugation() {
        assert_eq!(z(5, 1).conj(), z(5, 4));
        let r2 = &z(8, 1) + &z(8, -1);
        assert_eq!(r2.galois(3).unwrap(), -&r2);
        assert!(z(8, 1).galois(2).is_err());
        assert!(z(8, 1).abs_is_one());
        assert!((&Cyclotomic::one() + &z(3, 1)).abs_is_one());
        assert!(!Cyclotomic::from_int(2).abs_is_one());
    }

    #[test]
    fn rational_integers() {
        assert_eq!(Cyclotomic::from_int(-1).as_rational_integer(), Some(BigInt::from(-1)));
        assert_eq!(z(3, 1).as_rational_integer(), None);
        let half = Cyclotomic::from_rational(BigRational::new(3.into(), 2.into()));
        assert_eq!(half.as_rational_integer(), None);
    }

    #[test]
    fn display() {
        assert_eq!(z(3, 1).to_string(), "E(3)");
        assert_eq!((-z(5, 2)).to_string(), "-E(5)^2");
        assert_eq!((&Cyclotomic::from_int(2) + &z(7, 3)).to_string(), "2+E(7)^3");
    }

    #[test]
    fn root_order() {
        assert_eq!(z(12, 5).root_of_unity_order(), Some(12));
        assert_eq!(z(6, 1).root_of_unity_order(), Some(6));
        assert_eq!(Cyclotomic::from_int(-1).root_of_unity_order(), Some(2));
        assert_eq!(Cyclotomic::from_int(2).root_of_unity_order(), None);
    }
}
