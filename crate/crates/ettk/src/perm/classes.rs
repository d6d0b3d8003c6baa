use std::collections::BTreeMap;

use serde::Serialize;

use super::group::{compose, inverse, order_of};
use super::PermGroup;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    /// Element index of the lexicographically smallest member.
    pub representative: usize,
    pub size: usize,
    pub element_order: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyData {
    pub classes: Vec<ConjugacyClass>,
    /// prime q ↦ class of g^q for each class.
    pub power_maps: BTreeMap<u32, Vec<usize>>,
    pub centralizer_orders: Vec<usize>,
    /// Class index of every element.
    #[serde(skip)]
    pub class_of: Vec<usize>,
}

impl ConjugacyData {
    /// Class of the k-th power of the representative of `class`.
    pub fn power_class(&self, g: &PermGroup, class: usize, k: u64) -> usize {
        let rep = &g.elements[self.classes[class].representative];
        let mut acc: Vec<u32> = (0..g.degree as u32).collect();
        for _ in 0..k % self.classes[class].element_order as u64 {
            acc = compose(&acc, rep);
        }
        self.class_of[g.index_of(&acc).expect("power lies in the group")]
    }

    pub fn inverse_class(&self, g: &PermGroup, class: usize) -> usize {
        let rep = &g.elements[self.classes[class].representative];
        self.class_of[g.index_of(&inverse(rep)).expect("inverse lies in the group")]
    }
}

/// Classes sorted by (element order, size, smallest member), named 1a, 2a, 2b, …
pub fn conjugacy_data(g: &PermGroup) -> ConjugacyData {
    let n = g.order();
    let gen_inv: Vec<Vec<u32>> = g.generators.iter().map(|x| inverse(x)).collect();
    let mut raw_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if raw_of[start] != usize::MAX {
            continue;
        }
        let id = raw.len();
        let mut members = vec![start];
        raw_of[start] = id;
        let mut k = 0;
        while k < members.len() {
            let x = &g.elements[members[k]];
            for (a, ai) in g.generators.iter().zip(&gen_inv) {
                let y = compose(&compose(ai, x), a);
                let j = g.index_of(&y).expect("conjugate lies in the group");
                if raw_of[j] == usize::MAX {
                    raw_of[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        raw.push(members);
    }
    let mut keyed: Vec<(u32, usize, usize)> = raw
        .iter()
        .map(|m| {
            let rep = *m
                .iter()
                .min_by(|&&a, &&b| g.elements[a].cmp(&g.elements[b]))
                .expect("non-empty class");
            (order_of(&g.elements[rep]), m.len(), rep)
        })
        .collect();
    keyed.sort_by(|a, b| {
        (a.0, a.1)
            .cmp(&(b.0, b.1))
            .then_with(|| g.elements[a.2].cmp(&g.elements[b.2]))
    });
    let mut new_of_raw = vec![0; raw.len()];
    for (new, key) in keyed.iter().enumerate() {
        new_of_raw[raw_of[key.2]] = new;
    }
    let class_of: Vec<usize> = raw_of.iter().map(|&r| new_of_raw[r]).collect();
    let mut letters: BTreeMap<u32, u8> = BTreeMap::new();
    let classes: Vec<ConjugacyClass> = keyed
        .iter()
        .map(|&(o, size, rep)| {
            let l = letters.entry(o).or_insert(0);
            let name = format!("{o}{}", class_letter(*l));
            *l += 1;
            ConjugacyClass {
                name,
                representative: rep,
                size,
                element_order: o,
            }
        })
        .collect();
    let centralizer_orders = classes.iter().map(|c| n / c.size).collect();
    let mut data = ConjugacyData {
        classes,
        power_maps: BTreeMap::new(),
        centralizer_orders,
        class_of,
    };
    for q in crate::arith::prime_divisors(g.exponent()) {
        let map = (0..data.classes.len())
            .map(|c| data.power_class(g, c, q))
            .collect();
        data.power_maps.insert(q as u32, map);
    }
    data
}

/// a, b, …, z, then aa, ab, …
fn class_letter(k: u8) -> String {
    let k = k as usize;
    if k < 26 {
        ((b'a' + k as u8) as char).to_string()
    } else {
        format!("{}{}", class_letter((k / 26 - 1) as u8), class_letter((k % 26) as u8))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_group;

    #[test]
    fn s4_classes() {
        let g = enumerate_group(4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
        let d = conjugacy_data(&g);
        let sizes: Vec<usize> = d.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, [1, 3, 6, 8, 6]);
        let names: Vec<&str> = d.classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["1a", "2a", "2b", "3a", "4a"]);
        assert_eq!(d.power_maps[&2], [0, 0, 0, 3, 1]);
        assert_eq!(d.power_maps[&3], [0, 1, 2, 0, 4]);
        for (c, z) in d.classes.iter().zip(&d.centralizer_orders) {
            assert_eq!(c.size * z, 24);
        }
    }
}
