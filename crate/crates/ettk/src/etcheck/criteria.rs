use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::p_part;
use crate::chartab::{CharacterTable, ClassFunction};
use crate::cyclo::Cyclotomic;

/// Degree condition for endotrivial modules.
///
/// Odd p: dim ≡ ±1 mod |G|_p, or ≡ 1 for a trivial source module. p = 2:
/// dim ≡ ±1 mod |G|_2/2, or ≡ 1 mod |G|_2 for a trivial source module.
pub fn dim_congruence(dim: &BigInt, t: &CharacterTable, p: u64, trivial_source: bool) -> bool {
    let gp = p_part(&t.order, p);
    if trivial_source {
        return dim.mod_floor(&gp).is_one() || gp.is_one();
    }
    let m = if p == 2 { gp / 2 } else { gp };
    if m.is_one() {
        return true;
    }
    let r = dim.mod_floor(&m);
    r.is_one() || r == &m - 1
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassFailure {
    pub class: usize,
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ValueTest {
    pub passed: bool,
    pub failures: Vec<ClassFailure>,
}

fn run(phi: &ClassFunction, classes: Vec<usize>, ok: impl Fn(&Cyclotomic) -> bool) -> ValueTest {
    run_classes(phi, classes, |c| ok(&phi.values[c]))
}

fn run_classes(phi: &ClassFunction, classes: Vec<usize>, ok: impl Fn(usize) -> bool) -> ValueTest {
    let t = &phi.table;
    let failures: Vec<ClassFailure> = classes
        .into_iter()
        .filter(|&c| !ok(c))
        .map(|c| ClassFailure {
            class: c,
            name: t.classes[c].name.clone(),
            value: phi.values[c].to_string(),
        })
        .collect();
    ValueTest {
        passed: failures.is_empty(),
        failures,
    }
}

/// φ(x) = 1 at every non-trivial p-element.
pub fn et_value_test(phi: &ClassFunction, p: u64) -> ValueTest {
    let classes = phi
        .table
        .p_element_classes(p)
        .into_iter()
        .filter(|&c| c != 0)
        .collect();
    run(phi, classes, Cyclotomic::is_one)
}

/// |φ(g)| = 1 at every p-singular element.
pub fn lift_value_test(phi: &ClassFunction, p: u64) -> ValueTest {
    run(phi, phi.table.p_singular_classes(p), Cyclotomic::abs_is_one)
}

/// Non-negative integer values at p-elements, and at least 1 when the vertex
/// is a full Sylow subgroup.
pub fn trivial_source_test(phi: &ClassFunction, p: u64, full_vertex: bool) -> ValueTest {
    let min = if full_vertex { BigInt::one() } else { BigInt::from(0) };
    run(phi, phi.table.p_element_classes(p), |v| {
        v.as_rational_integer().is_some_and(|k| !k.is_negative() && k >= min)
    })
}

/// Restriction to every cyclic p-subgroup ⟨x⟩ is a permutation character:
/// φ(x^(p^i)) − φ(x^(p^(i−1))) is a non-negative multiple of p^i.
pub fn cyclic_permutation_test(phi: &ClassFunction, p: u64) -> ValueTest {
    let t = &phi.table;
    let classes = t.p_element_classes(p).into_iter().filter(|&c| c != 0).collect();
    run_classes(phi, classes, |c| {
        let mut prev = match phi.values[c].as_rational_integer() {
            Some(v) if !v.is_negative() => v,
            _ => return false,
        };
        let mut class = c;
        let mut q = BigInt::one();
        while class != 0 {
            class = match t.power_class(class, p) {
                Some(k) => k,
                None => return false,
            };
            q *= p;
            let Some(v) = phi.values[class].as_rational_integer() else {
                return false;
            };
            let d = &v - &prev;
            if d.is_negative() || !d.mod_floor(&q).is_zero() {
                return false;
            }
            prev = v;
        }
        true
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EtVerdict {
    pub dim_ok: bool,
    pub values_ok: bool,
    pub lift_ok: bool,
    pub trivial_source_ok: bool,
    pub detail: Vec<String>,
}

impl EtVerdict {
    /// Endotrivial by the value criterion.
    pub fn endotrivial(&self) -> bool {
        self.values_ok
    }
}

/// All criteria at once. `trivial_source` selects the degree congruence and
/// the full-vertex form of the trivial source test.
pub fn et_verdict(phi: &ClassFunction, p: u64, trivial_source: bool) -> EtVerdict {
    let mut detail = Vec::new();
    let dim_ok = match phi.values[0].as_rational_integer() {
        Some(d) => dim_congruence(&d, &phi.table, p, trivial_source),
        None => false,
    };
    if !dim_ok {
        detail.push(format!("degree {} fails the congruence", phi.values[0]));
    }
    let v = et_value_test(phi, p);
    let l = lift_value_test(phi, p);
    let ts = trivial_source_test(phi, p, trivial_source);
    for (label, test) in [("value", &v), ("lift", &l), ("trivial source", &ts)] {
        for f in &test.failures {
            detail.push(format!("{label}: {} at {}", f.value, f.name));
        }
    }
    EtVerdict {
        dim_ok,
        values_ok: v.passed,
        lift_ok: l.passed,
        trivial_source_ok: ts.passed,
        detail,
    }
}
