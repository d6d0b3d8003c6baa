use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::CharacterTable;
use crate::abelian::{invariant_factors_of, AbelianGroup};
use crate::cyclo::Cyclotomic;

/// The group X(G) of linear characters of p′-order.
#[derive(Clone, Debug, Serialize)]
pub struct LinearCharacterGroup {
    /// Irreducible indices, trivial character first.
    pub elements: Vec<usize>,
    pub invariant_factors: AbelianGroup,
    /// Order of each element, parallel to `elements`.
    pub orders: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Order of a linear character as a homomorphism; `None` when some value is
/// not a root of unity.
pub fn linear_order(values: &[Cyclotomic]) -> Option<u32> {
    values.iter().try_fold(1u32, |acc, v| {
        v.root_of_unity_order()
            .map(|o| num_integer::lcm(acc, o))
    })
}

pub fn linear_p_prime_group(t: &CharacterTable, p: u64) -> LinearCharacterGroup {
    let divides = (&t.order % BigInt::from(p)).is_zero();
    let note = (!divides)
        .then(|| format!("{p} does not divide |{}|; all linear characters returned", t.name));
    let mut elements = Vec::new();
    let mut orders = Vec::new();
    for (i, x) in t.irreducibles.iter().enumerate() {
        if !x.values[0].is_one() {
            continue;
        }
        if let Some(o) = linear_order(&x.values) {
            if o as u64 % p != 0 || note.is_some() {
                elements.push(i);
                orders.push(o);
            }
        }
    }
    if let Some(pos) = elements.iter().position(|&i| t.irreducibles[i].values.iter().all(Cyclotomic::is_one)) {
        elements.swap(0, pos);
        orders.swap(0, pos);
    }
    let lookup: HashMap<&[Cyclotomic], usize> = elements
        .iter()
        .enumerate()
        .map(|(k, &i)| (t.irreducibles[i].values.as_slice(), k))
        .collect();
    let n = elements.len();
    let mut table = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            let prod: Vec<Cyclotomic> = t.irreducibles[elements[a]]
                .values
                .iter()
                .zip(&t.irreducibles[elements[b]].values)
                .map(|(x, y)| x * y)
                .collect();
            table[a][b] = *lookup
                .get(prod.as_slice())
                .expect("linear characters of p'-order are closed under products");
        }
    }
    let invariant_factors = if n == 0 {
        AbelianGroup::trivial()
    } else {
        invariant_factors_of(n, 0, |a, b| table[a][b])
    };
    LinearCharacterGroup {
        elements,
        invariant_factors,
        orders,
        note,
    }
}
