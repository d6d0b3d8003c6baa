//! Randomised property checks shared by the property tests and the
//! acceptance report. Each returns `Err` with the first counterexample.

#![allow(dead_code)]

use std::sync::Arc;

use ettk::arith::{gcd, is_prime, prime_divisors};
use ettk::blocks::{block_filter, block_partition, block_partition_with_choice};
use ettk::chartab::{
    decompose, induce, inner_product, restrict, validate_table, CharacterTable, ClassFunction, FusionMap,
};
use ettk::cyclo::Cyclotomic;
use ettk::perm::{dixon_table, enumerate_group};
use ettk::rank::{proj_line_orbits, Mat2, Merge};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use crate::common;

pub const CASES: u32 = 100;

fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn check<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner().run(&strategy, test).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 9, 12, 15, 20, 21, 24])
        .prop_flat_map(|n| {
            prop::collection::vec((0..n as i64, -6i64..=6, 1i64..=3), 0..5)
                .prop_map(move |terms| {
                    let terms: Vec<(i64, BigRational)> = terms
                        .into_iter()
                        .map(|(e, a, b)| (e, BigRational::new(a.into(), b.into())))
                        .collect();
                    Cyclotomic::from_terms(n, &terms)
                })
        })
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Commutative ring axioms and ζ ↦ ζ^j being a ring homomorphism.
#[allow(clippy::eq_op)]
pub fn cyclotomic_ring() -> Result<(), String> {
    check((cyclotomic(), cyclotomic(), cyclotomic(), 1i64..200), |(a, b, c, j)| {
        let zero = Cyclotomic::zero();
        let one = Cyclotomic::one();
        ensure(&(&a + &b) + &c == &a + &(&b + &c), || "addition not associative".into())?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || "multiplication not associative".into())?;
        ensure(&a + &b == &b + &a && &a * &b == &b * &a, || "not commutative".into())?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "not distributive".into())?;
        ensure(&a + &zero == a && &a * &one == a, || "identities".into())?;
        ensure((&a - &a).is_zero() && &a + &(-&a) == zero, || "negation".into())?;
        let l = [&a, &b, &c].iter().fold(1u64, |l, x| lcm(l, x.conductor() as u64));
        let j = (0..l as i64).map(|k| j + k).find(|&k| gcd(k as u64, l) == 1).expect("unit exists");
        let g = |x: &Cyclotomic| x.galois(j).expect("unit");
        ensure(g(&(&a * &b)) == &g(&a) * &g(&b), || format!("galois {j} not multiplicative"))?;
        ensure(g(&(&a + &b)) == &g(&a) + &g(&b), || format!("galois {j} not additive"))?;
        ensure(g(&one) == one, || "galois moves 1".into())
    })
}

fn random_group() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (3usize..=5).prop_flat_map(|n| {
        let perm = Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle();
        (Just(n), prop::collection::vec(perm, 1..=2))
    })
}

/// Every fixture table validates, and so does the Dixon table of a random
/// subgroup of a small symmetric group.
pub fn orthogonality() -> Result<(), String> {
    for name in common::table_names() {
        let rep = validate_table(&common::table(&name));
        if !rep.is_valid() {
            return Err(format!("{name}: {:?}", rep.violations));
        }
    }
    check(random_group(), |(n, gens)| {
        let g = enumerate_group(n, gens.clone()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let t = dixon_table(&g, "G").map_err(|e| TestCaseError::fail(e.to_string()))?;
        let rep = validate_table(&t);
        ensure(rep.is_valid(), || format!("{gens:?}: {:?}", rep.violations))?;
        ensure(t.order == BigInt::from(g.order()), || "order".into())
    })
}

fn combination(t: &Arc<CharacterTable>, coeffs: &[i64]) -> ClassFunction {
    let mult: Vec<BigInt> = (0..t.irreducibles.len())
        .map(|i| BigInt::from(coeffs.get(i).copied().unwrap_or(0)))
        .collect();
    ClassFunction::from_multiplicities(t, &mult)
}

fn reciprocity(f: &FusionMap, psi: &ClassFunction, chi: usize) -> Result<(), String> {
    let x = f.big.character(chi);
    let lhs = inner_product(&induce(psi, f).map_err(|e| e.to_string())?, &x).map_err(|e| e.to_string())?;
    let rhs = inner_product(psi, &restrict(&x, f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}→{} chi {chi}: {lhs} vs {rhs}", f.sub.name, f.big.name))
    }
}

const SMALL_FUSIONS: [(&str, &str); 3] = [("M11N3", "M11"), ("J2N3", "J2"), ("HSN5", "HS")];

/// ⟨Ind λ, χ⟩ = ⟨λ, Res χ⟩ for every irreducible pair of every fixture
/// fusion, then for random virtual characters.
pub fn frobenius_reciprocity() -> Result<(), String> {
    for (sub, big) in common::fusion_pairs() {
        let f = common::fusion(&sub, &big);
        for lam in 0..f.sub.irreducibles.len() {
            let l = f.sub.character(lam);
            let ind = induce(&l, &f).map_err(|e| e.to_string())?;
            let d = decompose(&ind).map_err(|e| e.to_string())?;
            for chi in 0..f.big.irreducibles.len() {
                let res = restrict(&f.big.character(chi), &f).map_err(|e| e.to_string())?;
                let rhs = inner_product(&l, &res).map_err(|e| e.to_string())?;
                if Cyclotomic::from_bigint(d.multiplicities[chi].clone()) != rhs {
                    return Err(format!("{sub}→{big}: λ {lam}, χ {chi}"));
                }
            }
        }
    }
    let fusions: Vec<FusionMap> = SMALL_FUSIONS.iter().map(|(s, b)| common::fusion(s, b)).collect();
    check(
        (0..fusions.len(), prop::collection::vec(-3i64..=3, 1..12), 0usize..64),
        |(k, coeffs, chi)| {
            let f = &fusions[k];
            let psi = combination(&f.sub, &coeffs);
            reciprocity(f, &psi, chi % f.big.irreducibles.len()).map_err(TestCaseError::fail)
        },
    )
}

struct TablePrime {
    table: Arc<CharacterTable>,
    p: u64,
}

fn table_primes() -> Vec<TablePrime> {
    let mut out = Vec::new();
    for name in common::table_names() {
        let t = common::table(&name);
        let order = ettk::arith::to_u64(&t.order);
        let primes = match order {
            Some(n) => prime_divisors(n),
            None => [2u64, 3, 5, 7, 11, 13]
                .into_iter()
                .filter(|&p| (&t.order % BigInt::from(p)).is_zero())
                .collect(),
        };
        for p in primes.into_iter().filter(|&p| p <= 13) {
            out.push(TablePrime { table: t.clone(), p });
        }
    }
    out
}

/// The block partition does not depend on which prime above p is used.
pub fn block_invariance() -> Result<(), String> {
    let cases = table_primes();
    let base: Vec<Vec<Vec<usize>>> = cases
        .iter()
        .map(|c| block_partition(&c.table, c.p).map(|b| b.member_sets()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    check((0..cases.len(), 1usize..48), |(k, choice)| {
        let c = &cases[k];
        let bp = block_partition_with_choice(&c.table, c.p, choice).map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(bp.member_sets() == base[k], || {
            format!("{} p={} choice {choice}", c.table.name, c.p)
        })
    })
}

/// Filtering a character through every block and summing recovers it.
pub fn block_reassembly() -> Result<(), String> {
    let cases = table_primes();
    let partitions: Vec<_> = cases
        .iter()
        .map(|c| block_partition(&c.table, c.p).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    check(
        (0..cases.len(), prop::collection::vec(0i64..=3, 1..30)),
        |(k, coeffs)| {
            let c = &cases[k];
            let phi = combination(&c.table, &coeffs);
            let whole = decompose(&phi).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let mut total = vec![BigInt::zero(); c.table.irreducibles.len()];
            for b in &partitions[k].blocks {
                let part = block_filter(&phi, &partitions[k], &b.id).map_err(|e| TestCaseError::fail(e.to_string()))?;
                for (i, m) in part.multiplicities.iter().enumerate() {
                    ensure(m.is_zero() || b.members.contains(&i), || format!("{} leaks {i}", b.id))?;
                    total[i] += m;
                }
            }
            ensure(total == whole.multiplicities, || format!("{} p={}", c.table.name, c.p))
        },
    )
}

fn invertible(p: u64) -> impl Strategy<Value = Mat2> {
    prop::array::uniform4(0..p as i64)
        .prop_filter_map("singular", move |e| Mat2::new(p, e).ok())
}

/// Adding a generator or a merge never increases the orbit count.
pub fn orbit_monotonicity() -> Result<(), String> {
    let primes: Vec<u64> = (2..=13).filter(|&p| is_prime(p)).collect();
    let strategy = prop::sample::select(primes).prop_flat_map(|p| {
        (
            Just(p),
            prop::collection::vec(invertible(p), 0..3),
            invertible(p),
            (0..=p as usize, 0..=p as usize),
        )
    });
    check(strategy, |(p, gens, extra, (i, j))| {
        let base = proj_line_orbits(p, &gens, &[]).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let mut more = gens.clone();
        more.push(extra);
        let bigger = proj_line_orbits(p, &more, &[]).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let merged = proj_line_orbits(p, &gens, &[Merge(i, j)]).map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(bigger.orbit_count <= base.orbit_count, || format!("generator {extra} raised the count"))?;
        ensure(merged.orbit_count <= base.orbit_count, || format!("merge {i}~{j} raised the count"))?;
        ensure(base.orbit_count <= p as usize + 1, || "more orbits than points".into())?;
        let sizes: usize = base.orbits.iter().map(Vec::len).sum();
        ensure(sizes == p as usize + 1, || "orbits do not partition the line".into())
    })
}

pub fn all() -> Vec<(&'static str, fn() -> Result<(), String>)> {
    vec![
        ("cyclotomic ring axioms and Galois homomorphism", cyclotomic_ring),
        ("row and column orthogonality", orthogonality),
        ("Frobenius reciprocity", frobenius_reciprocity),
        ("block partition independent of ideal choice", block_invariance),
        ("block filter reassembly", block_reassembly),
        ("orbit count monotone under generators and merges", orbit_monotonicity),
    ]
}
