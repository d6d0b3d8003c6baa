use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::table::same_table;
use super::{CharacterTable, ChartabError, ClassFunction, FusionMap};
use crate::cyclo::Cyclotomic;

/// (1/|G|) Σ_C |C| a(C) conj(b(C)).
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic, ChartabError> {
    a.check_same(b)?;
    let t = &a.table;
    let mut acc = Cyclotomic::zero();
    for (c, info) in t.classes.iter().enumerate() {
        if a.values[c].is_zero() || b.values[c].is_zero() {
            continue;
        }
        acc = &acc + &(&a.values[c] * &b.values[c].conj()).scale_int(&info.size);
    }
    Ok(acc.scale(&BigRational::new(BigInt::from(1), t.order.clone())))
}

pub fn induce(lambda: &ClassFunction, f: &FusionMap) -> Result<ClassFunction, ChartabError> {
    if !same_table(&lambda.table, &f.sub) {
        return Err(ChartabError::TableMismatch {
            left: lambda.table.name.clone(),
            right: f.sub.name.clone(),
        });
    }
    let g = &f.big;
    let h = &f.sub;
    let mut values = vec![Cyclotomic::zero(); g.class_count()];
    for (d, &c) in f.map.iter().enumerate() {
        if lambda.values[d].is_zero() {
            continue;
        }
        let ratio = BigRational::new(g.centralizer_order(c), h.centralizer_order(d));
        values[c] = &values[c] + &lambda.values[d].scale(&ratio);
    }
    Ok(ClassFunction {
        table: g.clone(),
        values,
    })
}

pub fn restrict(chi: &ClassFunction, f: &FusionMap) -> Result<ClassFunction, ChartabError> {
    if !same_table(&chi.table, &f.big) {
        return Err(ChartabError::TableMismatch {
            left: chi.table.name.clone(),
            right: f.big.name.clone(),
        });
    }
    Ok(ClassFunction {
        table: f.sub.clone(),
        values: f.map.iter().map(|&c| chi.values[c].clone()).collect(),
    })
}

pub fn tensor(a: &ClassFunction, b: &ClassFunction) -> Result<ClassFunction, ChartabError> {
    a.check_same(b)?;
    Ok(ClassFunction {
        table: a.table.clone(),
        values: a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect(),
    })
}

/// ⟨φ, χ_i⟩ for every irreducible χ_i.
pub fn inner_products(phi: &ClassFunction) -> Vec<Cyclotomic> {
    let t = &phi.table;
    let weighted: Vec<Cyclotomic> = phi
        .values
        .iter()
        .zip(&t.classes)
        .map(|(v, c)| v.scale_int(&c.size))
        .collect();
    let inv = BigRational::new(BigInt::from(1), t.order.clone());
    t.irreducibles
        .iter()
        .map(|chi| {
            let s: Cyclotomic = weighted
                .iter()
                .zip(&chi.values)
                .filter(|(w, _)| !w.is_zero())
                .map(|(w, x)| w * &x.conj())
                .sum();
            s.scale(&inv)
        })
        .collect()
}

/// Multiplicities of irreducible constituents of a character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub table: Arc<CharacterTable>,
    pub multiplicities: Vec<BigInt>,
}

/// Returned when some ⟨φ, χ⟩ is not a non-negative integer.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("not a character: <phi, {id}> = {value}")]
pub struct NotACharacter {
    pub id: String,
    pub value: Cyclotomic,
    pub products: Vec<Cyclotomic>,
}

pub fn decompose(phi: &ClassFunction) -> Result<Decomposition, NotACharacter> {
    let products = inner_products(phi);
    let mut mult = Vec::with_capacity(products.len());
    for (i, v) in products.iter().enumerate() {
        match v.as_rational_integer() {
            Some(m) if !m.is_negative() => mult.push(m),
            _ => {
                return Err(NotACharacter {
                    id: phi.table.irreducibles[i].id.clone(),
                    value: v.clone(),
                    products,
                })
            }
        }
    }
    Ok(Decomposition {
        table: phi.table.clone(),
        multiplicities: mult,
    })
}

impl Decomposition {
    /// Non-zero `(index, multiplicity)` pairs in table order.
    pub fn constituents(&self) -> Vec<(usize, BigInt)> {
        self.multiplicities
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| (i, m.clone()))
            .collect()
    }

    pub fn to_class_function(&self) -> ClassFunction {
        ClassFunction::from_multiplicities(&self.table, &self.multiplicities)
    }

    pub fn degree(&self) -> BigInt {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, m)| m * self.table.degree(i))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.iter().all(Zero::is_zero)
    }

    /// Multiplicity-wise difference; entries may go negative.
    pub fn sub(&self, other: &Self) -> Self {
        Decomposition {
            table: self.table.clone(),
            multiplicities: self
                .multiplicities
                .iter()
                .zip(&other.multiplicities)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Keeps only the constituents with indices in `keep`.
    pub fn restrict_to(&self, keep: &[usize]) -> Self {
        let multiplicities = self
            .multiplicities
            .iter()
            .enumerate()
            .map(|(i, m)| if keep.contains(&i) { m.clone() } else { BigInt::zero() })
            .collect();
        Decomposition {
            table: self.table.clone(),
            multiplicities,
        }
    }
}

/// Renders as `chi_12+chi_13+2*chi_21`; the empty sum is `0`.
impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .constituents()
            .into_iter()
            .map(|(i, m)| {
                let id = &self.table.irreducibles[i].id;
                if m == BigInt::from(1) {
                    id.clone()
                } else {
                    format!("{m}*{id}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}
