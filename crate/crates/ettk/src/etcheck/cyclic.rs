use serde::{Serialize, Serializer};

use crate::abelian::AbelianGroup;

/// Which rule settled a cyclic-Sylow computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicRule {
    /// e odd: the sequence splits.
    OddInertialIndex,
    /// |X(H)| = e: T(G) is generated by Ω.
    OmegaGenerates,
    /// Enumeration of extensions compatible with X(H) and ⟨Ω⟩.
    Enumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaOrder {
    Finite(u64),
    Infinite,
}

impl Serialize for OmegaOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            OmegaOrder::Finite(n) => s.serialize_u64(*n),
            OmegaOrder::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TGroupReport {
    pub torsion_free_rank: u32,
    /// All torsion groups consistent with the data; one entry when determined.
    pub tt_candidates: Vec<AbelianGroup>,
    pub omega_order: OmegaOrder,
    pub determined: bool,
    pub rule: CyclicRule,
}

impl TGroupReport {
    pub fn group(&self) -> Option<&AbelianGroup> {
        self.determined.then(|| &self.tt_candidates[0])
    }
}

/// T(G) for a cyclic Sylow p-subgroup, from X(H) with H = N_G(P) and the
/// inertial index e.
pub fn cyclic_tg(x: &AbelianGroup, e: u64) -> TGroupReport {
    assert!(e >= 1, "inertial index must be positive");
    let (rule, tt_candidates) = if e % 2 == 1 {
        (CyclicRule::OddInertialIndex, vec![x.sum(&AbelianGroup::cyclic(2))])
    } else if x.order() == e {
        (CyclicRule::OmegaGenerates, vec![AbelianGroup::cyclic(2 * e)])
    } else {
        let found = AbelianGroup::all_of_order(2 * x.order())
            .into_iter()
            .filter(|t| x.embeds_in(t) && t.has_element_of_order(2 * e))
            .collect();
        (CyclicRule::Enumeration, found)
    };
    TGroupReport {
        torsion_free_rank: 0,
        determined: tt_candidates.len() == 1,
        tt_candidates,
        omega_order: OmegaOrder::Finite(2 * e),
        rule,
    }
}

/// Facts about G and a Sylow p-subgroup supplied by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TtFlags {
    pub normal_p_subgroup: bool,
    pub perfect: bool,
    pub self_normalizing_sylow: bool,
    pub torsion_free_sylow_t: bool,
}

/// `Some(())` when the flags force TT(G) to be trivial.
pub fn high_rank_tt_rules(f: TtFlags) -> Option<()> {
    let normal = f.normal_p_subgroup && f.perfect && f.torsion_free_sylow_t;
    let self_norm = f.self_normalizing_sylow && f.torsion_free_sylow_t;
    (normal || self_norm).then_some(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[u64]) -> AbelianGroup {
        AbelianGroup::from_cyclic_orders(v)
    }

    #[test]
    fn rules_in_order() {
        let r = cyclic_tg(&g(&[4]), 4);
        assert_eq!(r.rule, CyclicRule::OmegaGenerates);
        assert_eq!(r.group(), Some(&g(&[8])));
        let r = cyclic_tg(&g(&[5]), 5);
        assert_eq!(r.rule, CyclicRule::OddInertialIndex);
        assert_eq!(r.group(), Some(&g(&[10])));
        let r = cyclic_tg(&g(&[2, 2]), 2);
        assert_eq!(r.rule, CyclicRule::Enumeration);
        assert_eq!(r.tt_candidates, vec![g(&[2, 4])]);
    }

    #[test]
    fn tt_flags() {
        let none = TtFlags::default();
        assert_eq!(high_rank_tt_rules(none), None);
        let normal = TtFlags {
            normal_p_subgroup: true,
            perfect: true,
            torsion_free_sylow_t: true,
            ..none
        };
        assert_eq!(high_rank_tt_rules(normal), Some(()));
        let sn = TtFlags {
            self_normalizing_sylow: true,
            torsion_free_sylow_t: true,
            ..none
        };
        assert_eq!(high_rank_tt_rules(sn), Some(()));
        assert_eq!(high_rank_tt_rules(TtFlags { perfect: true, ..none }), None);
    }
}
