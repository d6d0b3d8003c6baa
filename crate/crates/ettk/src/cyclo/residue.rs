use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::polyfp::{self, Poly};
use super::{cyclotomic_polynomial, CycloError, Cyclotomic};
use crate::arith::{inv_mod, is_prime, split_p_part};

/// F_p[x]/(f) for a monic irreducible f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    pub p: u64,
    pub modulus: Poly,
}

impl ResidueField {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// Element of a residue field, coordinates in the basis 1, x, …, x^(d-1).
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteFieldElement {
    field: Arc<ResidueField>,
    coords: Vec<u64>,
}

impl FiniteFieldElement {
    fn new(field: Arc<ResidueField>, poly: Poly) -> Self {
        let mut coords = polyfp::rem(&poly, &field.modulus, field.p);
        coords.resize(field.degree(), 0);
        FiniteFieldElement { field, coords }
    }

    pub fn p(&self) -> u64 {
        self.field.p
    }

    pub fn modulus(&self) -> &[u64] {
        &self.field.modulus
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.field.clone(),
            polyfp::add(&self.coords, &other.coords, self.field.p),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.field.clone(),
            polyfp::mul(&self.coords, &other.coords, self.field.p),
        )
    }
}

impl fmt::Debug for FiniteFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod ({:?}, {})", self.coords, self.field.modulus, self.field.p)
    }
}

fn factor_cache() -> &'static Mutex<HashMap<(u64, u64), Arc<Vec<Poly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<Vec<Poly>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monic irreducible factors of Φ_m over F_p (p not dividing m), sorted by
/// coefficient sequence.
pub fn cyclotomic_factors_mod_p(m: u64, p: u64) -> Arc<Vec<Poly>> {
    if let Some(f) = factor_cache().lock().unwrap().get(&(m, p)) {
        return f.clone();
    }
    let phi = polyfp::from_integers(&cyclotomic_polynomial(m as u32), p);
    let fs = Arc::new(polyfp::factor_squarefree(&phi, p, m * 1_000_003 + p));
    factor_cache().lock().unwrap().insert((m, p), fs.clone());
    fs
}

/// Ring homomorphism Z[ζ_n] → F_p[x]/(f) killing the p-part of ζ_n and
/// sending its p′-part to the root x of the chosen factor f of Φ_m.
#[derive(Clone, Debug)]
pub struct ResidueMap {
    n: u64,
    field: Arc<ResidueField>,
    /// Image of ζ_n^k for k in 0..n.
    images: Vec<Poly>,
}

impl ResidueMap {
    pub fn new(p: u64, n: u64, ideal_choice: usize) -> Result<Self, CycloError> {
        if !is_prime(p) {
            return Err(CycloError::NotPrime(p));
        }
        let (pa, m) = split_p_part(n, p);
        let factors = cyclotomic_factors_mod_p(m, p);
        let f = factors
            .get(ideal_choice)
            .ok_or(CycloError::IdealChoiceOutOfRange {
                choice: ideal_choice,
                count: factors.len(),
            })?
            .clone();
        let field = Arc::new(ResidueField { p, modulus: f });
        // ζ_n ↦ x^u with u·p^a ≡ 1 (mod m): the p-part goes to 1, ζ_m to x.
        let u = inv_mod(pa as i64, m as i64).expect("coprime") as u64;
        let mut xpow: Vec<Poly> = Vec::with_capacity(m as usize);
        let mut cur = polyfp::rem(&[1], &field.modulus, p);
        for _ in 0..m {
            xpow.push(cur.clone());
            cur = polyfp::mulmod(&cur, &[0, 1], &field.modulus, p);
        }
        let images = (0..n).map(|k| xpow[((k * u) % m) as usize].clone()).collect();
        Ok(ResidueMap { n, field, images })
    }

    /// Number of admissible ideal choices for (p, n).
    pub fn choices(p: u64, n: u64) -> usize {
        let (_, m) = split_p_part(n, p);
        cyclotomic_factors_mod_p(m, p).len()
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn reduce(&self, a: &Cyclotomic) -> Result<FiniteFieldElement, CycloError> {
        let c = a.conductor() as u64;
        if self.n % c != 0 {
            return Err(CycloError::ConductorMismatch {
                conductor: a.conductor(),
                modulus: self.n,
            });
        }
        let p = self.field.p;
        let step = self.n / c;
        let mut acc: Poly = Vec::new();
        for (k, q) in a.terms() {
            if !q.is_integer() {
                return Err(CycloError::NotAlgebraicInteger);
            }
            let r = reduce_int(&q.to_integer(), p);
            if r == 0 {
                continue;
            }
            let img = &self.images[(k as u64 * step) as usize];
            let scaled: Poly = img.iter().map(|&x| x * r % p).collect();
            acc = polyfp::add(&acc, &scaled, p);
        }
        Ok(FiniteFieldElement::new(self.field.clone(), acc))
    }
}

fn reduce_int(k: &BigInt, p: u64) -> u64 {
    let r = k % BigInt::from(p);
    let r = r.to_i64().expect("small residue");
    r.rem_euclid(p as i64) as u64
}

/// Reduction of `a` at the prime of Z[ζ_c] (c = conductor of `a`) given by
/// the `ideal_choice`-th factor of Φ_m mod p, m the p′-part of c.
pub fn residue_reduce(
    a: &Cyclotomic,
    p: u64,
    ideal_choice: usize,
) -> Result<FiniteFieldElement, CycloError> {
    ResidueMap::new(p, a.conductor() as u64, ideal_choice)?.reduce(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_and_p_power_roots() {
        let seven = residue_reduce(&Cyclotomic::from_int(7), 3, 0).unwrap();
        assert_eq!(seven.coords(), &[1]);
        let z9 = residue_reduce(&Cyclotomic::root_of_unity(9, 1), 3, 0).unwrap();
        assert_eq!(z9.coords(), &[1]);
    }

    #[test]
    fn i_mod_three() {
        let r = residue_reduce(&Cyclotomic::root_of_unity(4, 1), 3, 0).unwrap();
        assert_eq!(r.modulus(), &[1, 0, 1]);
        assert_eq!(r.coords(), &[0, 1]);
    }

    #[test]
    fn non_integral_rejected() {
        let half = Cyclotomic::from_rational(num_rational::BigRational::new(1.into(), 2.into()));
        assert!(matches!(
            residue_reduce(&half, 3, 0),
            Err(CycloError::NotAlgebraicInteger)
        ));
        assert!(matches!(
            residue_reduce(&Cyclotomic::root_of_unity(4, 1), 3, 1),
            Err(CycloError::IdealChoiceOutOfRange { .. })
        ));
    }
}
