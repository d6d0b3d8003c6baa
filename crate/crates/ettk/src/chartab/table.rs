use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::ChartabError;
use crate::cyclo::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub size: BigInt,
    pub element_order: u32,
    /// prime q ↦ index of the class of g^q.
    pub power_maps: BTreeMap<u32, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducible {
    pub id: String,
    pub values: Vec<Cyclotomic>,
}

/// An ordinary character table. Immutable once built; share it as
/// `Arc<CharacterTable>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: BigInt,
    pub classes: Vec<ClassInfo>,
    pub irreducibles: Vec<Irreducible>,
    /// Class indices forming a designated central subgroup, if any.
    pub center: Option<Vec<usize>>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn centralizer_order(&self, class: usize) -> BigInt {
        &self.order / &self.classes[class].size
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn irreducible_index(&self, id: &str) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.id == id)
    }

    /// Resolves `chi_7`, `7` (1-based) or an exact id to an index.
    pub fn resolve_irreducible(&self, key: &str) -> Result<usize, ChartabError> {
        if let Some(i) = self.irreducible_index(key) {
            return Ok(i);
        }
        if let Ok(k) = key.parse::<usize>() {
            if k >= 1 && k <= self.irreducibles.len() {
                return Ok(k - 1);
            }
        }
        Err(ChartabError::UnknownCharacter {
            table: self.name.clone(),
            id: key.to_string(),
        })
    }

    /// Degree χ(1) of the i-th irreducible.
    pub fn degree(&self, i: usize) -> BigInt {
        self.irreducibles[i].values[0]
            .as_rational_integer()
            .unwrap_or_else(BigInt::zero)
    }

    /// The i-th irreducible as a class function.
    pub fn character(self: &Arc<Self>, i: usize) -> ClassFunction {
        ClassFunction {
            table: self.clone(),
            values: self.irreducibles[i].values.clone(),
        }
    }

    pub fn trivial(self: &Arc<Self>) -> ClassFunction {
        ClassFunction {
            table: self.clone(),
            values: vec![Cyclotomic::one(); self.class_count()],
        }
    }

    /// Σ χ(1)·χ.
    pub fn regular(self: &Arc<Self>) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(); self.class_count()];
        values[0] = Cyclotomic::from_bigint(self.order.clone());
        ClassFunction {
            table: self.clone(),
            values,
        }
    }

    /// Class of g^k for g in `class`, composed from the stored prime power
    /// maps; `None` if a needed map is missing.
    pub fn power_class(&self, class: usize, k: u64) -> Option<usize> {
        let o = self.classes[class].element_order as u64;
        let k = k % o.max(1);
        if k == 0 {
            return Some(0);
        }
        let mut c = class;
        for (q, e) in crate::arith::factorize(k) {
            for _ in 0..e {
                c = *self.classes[c].power_maps.get(&(q as u32))?;
            }
        }
        Some(c)
    }

    /// p-element classes: element order a power of p, identity included.
    pub fn p_element_classes(&self, p: u64) -> Vec<usize> {
        (0..self.class_count())
            .filter(|&c| crate::arith::split_p_part(self.classes[c].element_order as u64, p).1 == 1)
            .collect()
    }

    /// Classes of element order divisible by p.
    pub fn p_singular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.class_count())
            .filter(|&c| self.classes[c].element_order as u64 % p == 0)
            .collect()
    }

    pub fn p_regular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.class_count())
            .filter(|&c| self.classes[c].element_order as u64 % p != 0)
            .collect()
    }

    /// Exponent of the group: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .fold(1u64, |a, c| a.lcm(&(c.element_order as u64)))
    }

    pub fn is_perfect(&self) -> bool {
        self.irreducibles
            .iter()
            .filter(|x| x.values[0].is_one())
            .count()
            == 1
    }
}

/// A class function on a fixed table.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub table: Arc<CharacterTable>,
    pub values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

pub(crate) fn same_table(a: &Arc<CharacterTable>, b: &Arc<CharacterTable>) -> bool {
    Arc::ptr_eq(a, b) || (a.name == b.name && a.class_count() == b.class_count() && a.order == b.order)
}

impl ClassFunction {
    pub fn new(table: Arc<CharacterTable>, values: Vec<Cyclotomic>) -> Result<Self, ChartabError> {
        if values.len() != table.class_count() {
            return Err(ChartabError::LengthMismatch {
                expected: table.class_count(),
                got: values.len(),
            });
        }
        Ok(ClassFunction { table, values })
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn check_same(&self, other: &Self) -> Result<(), ChartabError> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(ChartabError::TableMismatch {
                left: self.table.name.clone(),
                right: other.table.name.clone(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ChartabError> {
        self.check_same(other)?;
        Ok(ClassFunction {
            table: self.table.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        ClassFunction {
            table: self.table.clone(),
            values: self.values.iter().map(|v| v.scale_int(k)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        ClassFunction {
            table: self.table.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// Zero class function on `table`.
    pub fn zero(table: Arc<CharacterTable>) -> Self {
        let values = vec![Cyclotomic::zero(); table.class_count()];
        ClassFunction { table, values }
    }

    /// Σ m_i χ_i from a multiplicity vector.
    pub fn from_multiplicities(table: &Arc<CharacterTable>, mult: &[BigInt]) -> Self {
        let mut values = vec![Cyclotomic::zero(); table.class_count()];
        for (i, m) in mult.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (v, x) in values.iter_mut().zip(&table.irreducibles[i].values) {
                *v = &*v + &x.scale_int(m);
            }
        }
        ClassFunction {
            table: table.clone(),
            values,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }
}
