use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::criteria::{cyclic_permutation_test, dim_congruence, et_verdict, trivial_source_test, EtVerdict};
use super::EtError;
use crate::blocks::{block_partition, filter_decomposition};
use crate::arith::{inv_mod, split_p_part};
use crate::chartab::{
    decompose, induce, linear_order, CharacterTable, ClassFunction, Decomposition, FusionMap,
};
use crate::cyclo::Cyclotomic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockScope {
    Principal,
    All,
}

#[derive(Clone, Debug)]
pub struct CandidateOptions {
    pub block: BlockScope,
    pub require_dim: bool,
    /// Maximum number of distinct constituents to enumerate over.
    pub cap: usize,
}

impl Default for CandidateOptions {
    fn default() -> Self {
        CandidateOptions {
            block: BlockScope::Principal,
            require_dim: true,
            cap: 20,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    /// Rendered as e.g. `chi_8+chi_10`.
    pub character: String,
    pub multiplicities: Vec<(usize, u64)>,
    pub degree: String,
    pub verdict: EtVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateSet {
    pub lambda: String,
    pub p: u64,
    pub block: BlockScope,
    /// Full decomposition of Ind(λ).
    pub induced: String,
    /// Part searched over (block-filtered).
    pub filtered: String,
    pub candidates: Vec<Candidate>,
}

impl CandidateSet {
    pub fn characters(&self) -> Vec<&str> {
        self.candidates.iter().map(|c| c.character.as_str()).collect()
    }
}

/// Sub-characters of e·Ind_N^G(λ) that can afford a trivial source module
/// with full vertex, i.e. possible characters of the Green correspondent.
pub fn green_candidates(
    fusion: &FusionMap,
    lambda: usize,
    p: u64,
    options: &CandidateOptions,
) -> Result<CandidateSet, EtError> {
    let tn = &fusion.sub;
    let tg = &fusion.big;
    let lam = tn.character(lambda);
    let id = tn.irreducibles[lambda].id.clone();
    if !lam.values[0].is_one() {
        return Err(EtError::NotLinear(id));
    }
    let order = linear_order(&lam.values).ok_or_else(|| EtError::NotLinear(id.clone()))?;
    if order as u64 % p == 0 {
        return Err(EtError::NotPPrimeOrder { id, order });
    }
    let ind = induce(&lam, fusion)?;
    let full = decompose(&ind).map_err(|e| EtError::Decomposition(e.to_string()))?;
    let filtered = match options.block {
        BlockScope::All => full.clone(),
        BlockScope::Principal => {
            let bp = block_partition(tg, p)?;
            filter_decomposition(&full, &bp, &bp.principal)?
        }
    };
    let parts = filtered.constituents();
    if parts.len() > options.cap {
        return Err(EtError::CapExceeded {
            distinct: parts.len(),
            cap: options.cap,
        });
    }
    let bounds: Vec<u64> = parts
        .iter()
        .map(|(_, m)| m.to_u64().expect("small multiplicity"))
        .collect();
    let degrees: Vec<BigInt> = parts.iter().map(|(i, _)| tg.degree(*i)).collect();
    let pclasses = tg.p_element_classes(p);
    // When λ is fixed by the Frobenius twist, so is its Green correspondent.
    let frob = frobenius_exponent(num_integer::lcm(tg.exponent(), tn.exponent()), p);
    let twisted = lam.values.iter().all(|v| v.galois(frob).as_ref() == Ok(v));
    let orbit = if twisted { Some(galois_permutation(tg, frob)) } else { None };
    let mut found = Vec::new();
    let mut counts = vec![0u64; parts.len()];
    'outer: loop {
        // Odometer over 0..=bound for each constituent.
        let mut k = 0;
        loop {
            if k == counts.len() {
                break 'outer;
            }
            if counts[k] < bounds[k] {
                counts[k] += 1;
                break;
            }
            counts[k] = 0;
            k += 1;
        }
        let degree: BigInt = counts
            .iter()
            .zip(&degrees)
            .map(|(&c, d)| d * BigInt::from(c))
            .sum();
        if options.require_dim && !dim_congruence(&degree, tg, p, true) {
            continue;
        }
        let mut mult = vec![BigInt::zero(); tg.irreducibles.len()];
        for ((i, _), &c) in parts.iter().zip(&counts) {
            mult[*i] = BigInt::from(c);
        }
        let sub = Decomposition {
            table: tg.clone(),
            multiplicities: mult,
        };
        if let Some(perm) = &orbit {
            if (0..perm.len()).any(|i| sub.multiplicities[i] != sub.multiplicities[perm[i]]) {
                continue;
            }
        }
        let phi = partial_values(&sub, &pclasses);
        if !trivial_source_test(&phi, p, true).passed || !cyclic_permutation_test(&phi, p).passed {
            continue;
        }
        // The complement in e·Ind(λ) is a trivial source character as well.
        let rest = filtered.sub(&sub);
        let psi = partial_values(&rest, &pclasses);
        if !trivial_source_test(&psi, p, false).passed || !cyclic_permutation_test(&psi, p).passed {
            continue;
        }
        let full_phi = sub.to_class_function();
        let verdict = et_verdict(&full_phi, p, true);
        // Value 1 at p-elements makes the module endotrivial, which forces the lift condition.
        if verdict.values_ok && !verdict.lift_ok {
            continue;
        }
        found.push((degree, counts.clone(), sub, verdict));
    }
    found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    let candidates = found
        .into_iter()
        .map(|(degree, counts, sub, verdict)| Candidate {
            character: sub.to_string(),
            multiplicities: parts
                .iter()
                .zip(&counts)
                .filter(|(_, &c)| c > 0)
                .map(|((i, _), &c)| (*i, c))
                .collect(),
            degree: degree.to_string(),
            verdict,
        })
        .collect();
    Ok(CandidateSet {
        lambda: tn.irreducibles[lambda].id.clone(),
        p,
        block: options.block,
        induced: full.to_string(),
        filtered: filtered.to_string(),
        candidates,
    })
}

/// Values of Σ m_i χ_i at the given classes only; other entries are zero.
fn partial_values(d: &Decomposition, classes: &[usize]) -> ClassFunction {
    let t = &d.table;
    let mut f = ClassFunction::zero(t.clone());
    for &c in classes {
        f.values[c] = d
            .constituents()
            .iter()
            .map(|(i, m)| t.irreducibles[*i].values[c].scale_int(m))
            .sum();
    }
    f
}

/// j with j ≡ p on p′-roots of unity and j ≡ 1 on p-power roots, modulo `exp`.
fn frobenius_exponent(exp: u64, p: u64) -> i64 {
    let (pa, m) = split_p_part(exp, p);
    if m == 1 {
        return 1;
    }
    let inv = inv_mod((pa % m) as i64, m as i64).expect("coprime parts");
    let t = ((p as i64 - 1) * inv).rem_euclid(m as i64);
    1 + pa as i64 * t
}

/// Row permutation induced by the Galois automorphism ζ ↦ ζ^j.
fn galois_permutation(t: &CharacterTable, j: i64) -> Vec<usize> {
    let rows: Vec<&[Cyclotomic]> = t.irreducibles.iter().map(|x| x.values.as_slice()).collect();
    rows.iter()
        .map(|r| {
            let img: Vec<Cyclotomic> = r.iter().map(|v| v.galois(j).expect("j is a unit")).collect();
            rows.iter().position(|s| *s == img.as_slice()).expect("Galois conjugate is irreducible")
        })
        .collect()
}
