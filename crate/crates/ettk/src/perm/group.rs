use std::collections::{HashMap, VecDeque};

use super::PermError;

pub const DEFAULT_CAP: usize = 200_000;

/// Images of 0..degree.
pub type Perm = Vec<u32>;

/// Product acting on the right: apply `a`, then `b`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

/// Order as the lcm of cycle lengths.
pub fn order_of(a: &[u32]) -> u32 {
    let mut seen = vec![false; a.len()];
    let mut order = 1u32;
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = a[i] as usize;
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Perm>,
    /// Breadth-first from the identity, generators in input order.
    pub elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elements[a], &self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&inverse(&self.elements[a])]
    }

    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |e, p| num_integer::lcm(e, order_of(p) as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .all(|a| g.iter().all(|b| compose(a, b) == compose(b, a)))
    }
}

pub fn enumerate_group(degree: usize, generators: Vec<Perm>) -> Result<PermGroup, PermError> {
    enumerate_group_with_cap(degree, generators, DEFAULT_CAP)
}

pub fn enumerate_group_with_cap(
    degree: usize,
    generators: Vec<Perm>,
    cap: usize,
) -> Result<PermGroup, PermError> {
    for (index, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        let ok = g.len() == degree
            && g.iter().all(|&i| {
                let fresh = (i as usize) < degree && !seen[i as usize];
                if fresh {
                    seen[i as usize] = true;
                }
                fresh
            });
        if !ok {
            return Err(PermError::InvalidGenerator { index, degree });
        }
    }
    let id: Perm = (0..degree as u32).collect();
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for g in &generators {
            let h = compose(&elements[e], g);
            if !index.contains_key(&h) {
                if elements.len() >= cap {
                    return Err(PermError::CapExceeded { cap });
                }
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
            }
        }
    }
    Ok(PermGroup {
        degree,
        generators,
        elements,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_closures() {
        let s3 = enumerate_group(3, vec![vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        let c3 = enumerate_group(3, vec![vec![1, 2, 0]]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.exponent(), 3);
        assert!(c3.is_abelian() && !s3.is_abelian());
    }

    #[test]
    fn cap_and_bad_generators() {
        let s4 = vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]];
        assert_eq!(
            enumerate_group_with_cap(4, s4, 10).unwrap_err(),
            PermError::CapExceeded { cap: 10 }
        );
        assert!(matches!(
            enumerate_group(3, vec![vec![0, 0, 1]]),
            Err(PermError::InvalidGenerator { index: 0, .. })
        ));
    }

    #[test]
    fn inverse_and_order() {
        let a = vec![1, 2, 0, 4, 3];
        assert_eq!(compose(&a, &inverse(&a)), vec![0, 1, 2, 3, 4]);
        assert_eq!(order_of(&a), 6);
    }
}
