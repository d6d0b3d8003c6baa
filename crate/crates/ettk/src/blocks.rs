//! p-blocks of ordinary characters from central-character congruences.
//!
//! Two irreducibles lie in the same p-block when their central characters
//! ω_χ(C) = |C|χ(g_C)/χ(1) agree modulo a prime above p at every class. Each
//! class is reduced at a prime of Z[ζ_o] with o its element order, using the
//! same prime for every class of that order.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::nu_p;
use crate::chartab::{decompose, CharacterTable, ClassFunction, Decomposition};
use crate::cyclo::{CycloError, Cyclotomic, ResidueMap};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("central character of {id} is not integral at class {class}")]
    NonIntegralOmega { id: String, class: String },
    #[error("{p} does not divide the order of {table}")]
    PrimeNotDividing { p: u64, table: String },
    #[error("no block {0}")]
    UnknownBlock(String),
    #[error("class function is not a character: {0}")]
    DecompositionFailure(String),
    #[error("table {0} has no designated centre")]
    NoCenter(String),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Block {
    pub id: String,
    /// Irreducible indices in table order.
    pub members: Vec<usize>,
    pub defect: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockPartition {
    pub p: u64,
    #[serde(skip)]
    pub table: Option<Arc<CharacterTable>>,
    pub blocks: Vec<Block>,
    pub principal: String,
}

impl BlockPartition {
    pub fn block(&self, id: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.id == id)
    }

    pub fn block_of(&self, irreducible: usize) -> &Block {
        self.blocks
            .iter()
            .find(|b| b.members.contains(&irreducible))
            .expect("blocks partition the irreducibles")
    }

    pub fn principal_block(&self) -> &Block {
        self.block(&self.principal).expect("principal block present")
    }

    /// Member lists only, for comparing partitions.
    pub fn member_sets(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.members.clone()).collect()
    }
}

/// ω_χ(C) = |C|·χ(g_C)/χ(1) for each class, checked to be integral.
pub fn central_character(t: &CharacterTable, i: usize) -> Result<Vec<Cyclotomic>, BlockError> {
    let x = &t.irreducibles[i];
    let deg = t.degree(i);
    let mut out = Vec::with_capacity(t.class_count());
    for (c, info) in t.classes.iter().enumerate() {
        let w = x.values[c].scale(&BigRational::new(info.size.clone(), deg.clone()));
        if !w.is_integral() {
            return Err(BlockError::NonIntegralOmega {
                id: x.id.clone(),
                class: info.name.clone(),
            });
        }
        out.push(w);
    }
    Ok(out)
}

/// Blocks using the lexicographically first prime for every element order.
pub fn block_partition(t: &Arc<CharacterTable>, p: u64) -> Result<BlockPartition, BlockError> {
    block_partition_with_choice(t, p, 0)
}

/// Blocks using prime number `choice` (taken modulo the number of primes)
/// above p for every element order. The result does not depend on `choice`.
pub fn block_partition_with_choice(
    t: &Arc<CharacterTable>,
    p: u64,
    choice: usize,
) -> Result<BlockPartition, BlockError> {
    if !(&t.order % BigInt::from(p)).is_zero() {
        return Err(BlockError::PrimeNotDividing {
            p,
            table: t.name.clone(),
        });
    }
    let mut maps: HashMap<u32, ResidueMap> = HashMap::new();
    for c in &t.classes {
        let o = c.element_order;
        if let std::collections::hash_map::Entry::Vacant(e) = maps.entry(o) {
            let k = ResidueMap::choices(p, o as u64);
            e.insert(ResidueMap::new(p, o as u64, choice % k)?);
        }
    }
    let mut key_to_block: HashMap<Vec<Vec<u64>>, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..t.irreducibles.len() {
        let omega = central_character(t, i)?;
        let mut key = Vec::with_capacity(omega.len());
        for (c, w) in omega.iter().enumerate() {
            let r = maps[&t.classes[c].element_order].reduce(w)?;
            key.push(r.coords().to_vec());
        }
        let b = *key_to_block.entry(key).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[b].push(i);
    }
    let full = nu_p(&t.order, p);
    let blocks: Vec<Block> = members
        .into_iter()
        .enumerate()
        .map(|(k, m)| {
            let min = m.iter().map(|&i| nu_p(&t.degree(i), p)).min().unwrap_or(0);
            Block {
                id: format!("B{k}"),
                members: m,
                defect: full - min,
            }
        })
        .collect();
    let principal = blocks
        .iter()
        .find(|b| {
            b.members
                .iter()
                .any(|&i| t.irreducibles[i].values.iter().all(Cyclotomic::is_one))
        })
        .map(|b| b.id.clone())
        .unwrap_or_else(|| "B0".to_string());
    Ok(BlockPartition {
        p,
        table: Some(t.clone()),
        blocks,
        principal,
    })
}

/// e_B·φ: the constituents of φ lying in block `block_id`.
pub fn block_filter(
    phi: &ClassFunction,
    bp: &BlockPartition,
    block_id: &str,
) -> Result<Decomposition, BlockError> {
    let d = decompose(phi).map_err(|e| BlockError::DecompositionFailure(e.to_string()))?;
    filter_decomposition(&d, bp, block_id)
}

pub fn filter_decomposition(
    d: &Decomposition,
    bp: &BlockPartition,
    block_id: &str,
) -> Result<Decomposition, BlockError> {
    let b = bp
        .block(block_id)
        .ok_or_else(|| BlockError::UnknownBlock(block_id.to_string()))?;
    Ok(d.restrict_to(&b.members))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ObstructionWitness {
    pub class: usize,
    pub class_name: String,
    /// Every faithful irreducible takes a value in mZ at the class.
    pub modulus: u64,
}

/// Irreducibles not containing the designated central subgroup of order
/// dividing `center_order` in their kernel.
pub fn faithful_irreducibles(t: &CharacterTable, center_order: u32) -> Result<Vec<usize>, BlockError> {
    let center = t
        .center
        .as_ref()
        .ok_or_else(|| BlockError::NoCenter(t.name.clone()))?;
    let z: Vec<usize> = center
        .iter()
        .copied()
        .filter(|&c| center_order % t.classes[c].element_order == 0)
        .collect();
    Ok((0..t.irreducibles.len())
        .filter(|&i| {
            let x = &t.irreducibles[i].values;
            z.iter().any(|&c| x[c] != x[0])
        })
        .collect())
}

/// All p-singular classes C with an m ∉ {±1} such that every faithful
/// irreducible has a rational-integer value in mZ at C.
pub fn faithful_et_obstructions(
    t: &CharacterTable,
    p: u64,
    center_order: u32,
) -> Result<Vec<ObstructionWitness>, BlockError> {
    let faithful = faithful_irreducibles(t, center_order)?;
    let mut out = Vec::new();
    'class: for c in t.p_singular_classes(p) {
        let mut g = BigInt::zero();
        for &i in &faithful {
            match t.irreducibles[i].values[c].as_rational_integer() {
                Some(v) => g = g.gcd(&v),
                None => continue 'class,
            }
        }
        let g = g.abs();
        if g != BigInt::from(1) && !faithful.is_empty() {
            out.push(ObstructionWitness {
                class: c,
                class_name: t.classes[c].name.clone(),
                modulus: u64::try_from(&g).expect("small modulus"),
            });
        }
    }
    Ok(out)
}

/// First witness in class order, if any.
pub fn faithful_et_obstruction(
    t: &CharacterTable,
    p: u64,
    center_order: u32,
) -> Result<Option<ObstructionWitness>, BlockError> {
    Ok(faithful_et_obstructions(t, p, center_order)?.into_iter().next())
}
