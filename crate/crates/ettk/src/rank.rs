//! Torsion-free rank: orbits of a subgroup of GL₂(p) on the projective line
//! and the rank rules for elementary abelian sections.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RankError {
    #[error("generator {0} is singular mod {1}")]
    SingularGenerator(String, u64),
    #[error("cannot parse matrix {0:?}: expected \"a,b;c,d\"")]
    MatrixSyntax(String),
    #[error("cannot parse merge {0:?}: expected \"i~j\"")]
    MergeSyntax(String),
    #[error("point {point} is not on the projective line over F_{p}")]
    PointOutOfRange { point: usize, p: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p-rank {0} is below 2")]
    RankTooSmall(u32),
}

/// A 2×2 matrix over F_p, rows `[a, b]` and `[c, d]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub p: u64,
    pub entries: [u64; 4],
}

impl Mat2 {
    pub fn new(p: u64, entries: [i64; 4]) -> Result<Self, RankError> {
        let m = Mat2 {
            p,
            entries: entries.map(|x| x.rem_euclid(p as i64) as u64),
        };
        if m.det() == 0 {
            return Err(RankError::SingularGenerator(m.to_string(), p));
        }
        Ok(m)
    }

    pub fn parse(p: u64, s: &str) -> Result<Self, RankError> {
        let bad = || RankError::MatrixSyntax(s.to_string());
        let nums: Vec<i64> = s
            .split(';')
            .flat_map(|row| row.split(','))
            .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let rows = s.split(';').count();
        if rows != 2 || nums.len() != 4 {
            return Err(bad());
        }
        Mat2::new(p, [nums[0], nums[1], nums[2], nums[3]])
    }

    pub fn identity(p: u64) -> Self {
        Mat2 { p, entries: [1, 0, 0, 1] }
    }

    pub fn det(&self) -> u64 {
        let [a, b, c, d] = self.entries;
        (a * d % self.p + self.p - b * c % self.p) % self.p
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let p = self.p;
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = o.entries;
        Mat2 {
            p,
            entries: [
                (a * e + b * g) % p,
                (a * f + b * h) % p,
                (c * e + d * g) % p,
                (c * f + d * h) % p,
            ],
        }
    }

    pub fn order(&self) -> u32 {
        let id = Mat2::identity(self.p);
        let mut x = *self;
        let mut k = 1;
        while x != id {
            x = x.mul(self);
            k += 1;
        }
        k
    }

    /// Image of point `i` under v ↦ M·v.
    pub fn act(&self, i: usize) -> usize {
        let (a, b) = coords(self.p, i);
        let [m00, m01, m10, m11] = self.entries;
        let p = self.p;
        point(p, (m00 * a + m01 * b) % p, (m10 * a + m11 * b) % p)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "{a},{b};{c},{d}")
    }
}

/// Point k < p is [1:k]; point p is [0:1].
fn coords(p: u64, i: usize) -> (u64, u64) {
    if (i as u64) < p {
        (1, i as u64)
    } else {
        (0, 1)
    }
}

fn point(p: u64, a: u64, b: u64) -> usize {
    if a == 0 {
        p as usize
    } else {
        let inv = crate::arith::pow_mod(a, p - 2, p);
        (b * inv % p) as usize
    }
}

/// Label such as `[1:2]` or `[0:1]`.
pub fn point_label(p: u64, i: usize) -> String {
    let (a, b) = coords(p, i);
    format!("[{a}:{b}]")
}

/// A pair of points to identify, written `i~j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Merge(pub usize, pub usize);

impl FromStr for Merge {
    type Err = RankError;
    fn from_str(s: &str) -> Result<Self, RankError> {
        let bad = || RankError::MergeSyntax(s.to_string());
        let (a, b) = s.split_once('~').ok_or_else(bad)?;
        Ok(Merge(
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ProjOrbitReport {
    pub p: u64,
    /// Point indices, each orbit sorted, orbits ordered by first point.
    pub orbits: Vec<Vec<usize>>,
    pub labels: Vec<Vec<String>>,
    pub merges_applied: Vec<Merge>,
    pub orbit_count: usize,
}

pub fn proj_line_orbits(p: u64, gens: &[Mat2], merges: &[Merge]) -> Result<ProjOrbitReport, RankError> {
    if !crate::arith::is_prime(p) {
        return Err(RankError::NotPrime(p));
    }
    let n = p as usize + 1;
    for g in gens {
        if g.det() == 0 {
            return Err(RankError::SingularGenerator(g.to_string(), p));
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    for g in gens {
        for i in 0..n {
            union(&mut parent, i, g.act(i));
        }
    }
    for m in merges {
        for &x in [m.0, m.1].iter() {
            if x >= n {
                return Err(RankError::PointOutOfRange { point: x, p });
            }
        }
        union(&mut parent, m.0, m.1);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let orbits: Vec<Vec<usize>> = groups.into_values().collect();
    let labels = orbits
        .iter()
        .map(|o| o.iter().map(|&i| point_label(p, i)).collect())
        .collect();
    Ok(ProjOrbitReport {
        p,
        orbit_count: orbits.len(),
        orbits,
        labels,
        merges_applied: merges.to_vec(),
    })
}

/// Order and element-order profile of the subgroup of GL₂(p) generated by `gens`.
pub fn matrix_group_profile(p: u64, gens: &[Mat2]) -> (usize, BTreeMap<u32, usize>) {
    let id = Mat2::identity(p);
    let mut seen: HashSet<Mat2> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let mut profile = BTreeMap::new();
    for x in &seen {
        *profile.entry(x.order()).or_insert(0) += 1;
    }
    (seen.len(), profile)
}

/// Rank of TF(G) from the number of classes of maximal elementary abelian
/// p-subgroups of rank 2.
pub fn torsion_free_rank(p_rank: u32, max_rank2_classes: u32) -> Result<u32, RankError> {
    match p_rank {
        0 | 1 => Err(RankError::RankTooSmall(p_rank)),
        2 => Ok(max_rank2_classes),
        _ => Ok(max_rank2_classes + 1),
    }
}

/// `Some(1)` when the p-rank alone forces TF(G) ≅ Z.
pub fn high_rank_rule(p: u64, p_rank: u32) -> Option<u32> {
    let forced = if p == 2 { p_rank > 4 } else { u64::from(p_rank) > p };
    forced.then_some(1)
}

/// Generators of a subgroup of GL₂(p) with the data needed to verify them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Gl2Fixture {
    pub name: String,
    pub p: u64,
    pub structure: String,
    pub order: usize,
    pub order_profile: BTreeMap<u32, usize>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub merges: Vec<String>,
    #[serde(default)]
    pub provenance: Option<String>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum Gl2FixtureError {
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error("{name}: generated group has order {actual}, expected {expected}")]
    Order { name: String, expected: usize, actual: usize },
    #[error("{name}: element order profile {actual:?} differs from {expected:?}")]
    Profile {
        name: String,
        expected: BTreeMap<u32, usize>,
        actual: BTreeMap<u32, usize>,
    },
    #[error("{0}")]
    Io(String),
}

impl Gl2Fixture {
    pub fn from_json_str(s: &str) -> Result<Self, Gl2FixtureError> {
        serde_json::from_str(s).map_err(|e| Gl2FixtureError::Io(e.to_string()))
    }

    pub fn load(path: &std::path::Path) -> Result<Self, Gl2FixtureError> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Gl2FixtureError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&s)
    }

    pub fn matrices(&self) -> Result<Vec<Mat2>, RankError> {
        self.generators.iter().map(|g| Mat2::parse(self.p, g)).collect()
    }

    pub fn merge_pairs(&self) -> Result<Vec<Merge>, RankError> {
        self.merges.iter().map(|m| m.parse()).collect()
    }

    /// Checks the group order and element-order profile by enumeration.
    pub fn verify(&self) -> Result<(), Gl2FixtureError> {
        let (order, profile) = matrix_group_profile(self.p, &self.matrices()?);
        if order != self.order {
            return Err(Gl2FixtureError::Order {
                name: self.name.clone(),
                expected: self.order,
                actual: order,
            });
        }
        if profile != self.order_profile {
            return Err(Gl2FixtureError::Profile {
                name: self.name.clone(),
                expected: self.order_profile.clone(),
                actual: profile,
            });
        }
        Ok(())
    }

    pub fn orbits(&self) -> Result<ProjOrbitReport, RankError> {
        proj_line_orbits(self.p, &self.matrices()?, &self.merge_pairs()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_act() {
        let m = Mat2::parse(3, "1,1;2,1").unwrap();
        assert_eq!(m.to_string(), "1,1;2,1");
        assert_eq!(m.act(0), 2);
        assert_eq!(m.act(3), 1);
        assert!(matches!(Mat2::parse(3, "1,2;2,1"), Err(RankError::SingularGenerator(..))));
        assert!(matches!(Mat2::parse(3, "1,2,3"), Err(RankError::MatrixSyntax(_))));
        assert_eq!("0~3".parse::<Merge>().unwrap(), Merge(0, 3));
    }

    #[test]
    fn diagonal_signs_p3() {
        let gens = [
            Mat2::new(3, [1, 0, 0, -1]).unwrap(),
            Mat2::new(3, [-1, 0, 0, 1]).unwrap(),
        ];
        let r = proj_line_orbits(3, &gens, &[]).unwrap();
        assert_eq!(r.orbit_count, 3);
        assert_eq!(r.labels, vec![vec!["[1:0]"], vec!["[1:1]", "[1:2]"], vec!["[0:1]"]]);
    }

    #[test]
    fn rank_rules() {
        assert_eq!(torsion_free_rank(2, 3), Ok(3));
        assert_eq!(torsion_free_rank(3, 0), Ok(1));
        assert_eq!(torsion_free_rank(2, 1), Ok(1));
        assert_eq!(torsion_free_rank(1, 0), Err(RankError::RankTooSmall(1)));
        assert_eq!(high_rank_rule(3, 4), Some(1));
        assert_eq!(high_rank_rule(5, 3), None);
        assert_eq!(high_rank_rule(2, 5), Some(1));
        assert_eq!(high_rank_rule(2, 4), None);
    }
}
