use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::CharacterTable;
use crate::cyclo::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    IdentityClass,
    ClassSizeSum { sum: String, order: String },
    ClassCount { classes: usize, irreducibles: usize },
    Degree { id: String },
    DegreeSum { sum: String, order: String },
    RowOrthogonality { left: String, right: String, value: String },
    ColumnOrthogonality { left: String, right: String, value: String },
    PowerMap { class: String, prime: u32, detail: String },
    ValueField { id: String, class: String, conductor: u32 },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub table: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the structural invariants of a character table.
pub fn validate_table(t: &CharacterTable) -> ValidationReport {
    let mut v = Vec::new();
    let k = t.class_count();
    if k == 0 || t.classes[0].element_order != 1 || !t.classes[0].size.is_one() {
        v.push(Violation::IdentityClass);
        return ValidationReport {
            table: t.name.clone(),
            violations: v,
        };
    }
    let sum: BigInt = t.classes.iter().map(|c| &c.size).sum();
    if sum != t.order {
        v.push(Violation::ClassSizeSum {
            sum: sum.to_string(),
            order: t.order.to_string(),
        });
    }
    if t.irreducibles.len() != k {
        v.push(Violation::ClassCount {
            classes: k,
            irreducibles: t.irreducibles.len(),
        });
    }
    let mut deg_sum = BigInt::zero();
    for x in &t.irreducibles {
        match x.values[0].as_rational_integer() {
            Some(d) if d.is_positive() => deg_sum += &d * &d,
            _ => v.push(Violation::Degree { id: x.id.clone() }),
        }
        for (c, val) in x.values.iter().enumerate() {
            if t.classes[c].element_order % val.conductor() != 0 {
                v.push(Violation::ValueField {
                    id: x.id.clone(),
                    class: t.classes[c].name.clone(),
                    conductor: val.conductor(),
                });
            }
        }
    }
    if deg_sum != t.order {
        v.push(Violation::DegreeSum {
            sum: deg_sum.to_string(),
            order: t.order.to_string(),
        });
    }
    let conj: Vec<Vec<Cyclotomic>> = t
        .irreducibles
        .iter()
        .map(|x| x.values.iter().map(Cyclotomic::conj).collect())
        .collect();
    // Rows: Σ_C |C| χ(C) conj ψ(C) = |G| δ.
    for i in 0..t.irreducibles.len() {
        let weighted: Vec<Cyclotomic> = t.irreducibles[i]
            .values
            .iter()
            .zip(&t.classes)
            .map(|(x, c)| x.scale_int(&c.size))
            .collect();
        for j in i..t.irreducibles.len() {
            let s: Cyclotomic = weighted.iter().zip(&conj[j]).map(|(a, b)| a * b).sum();
            let want = if i == j { t.order.clone() } else { BigInt::zero() };
            if s != Cyclotomic::from_bigint(want) {
                v.push(Violation::RowOrthogonality {
                    left: t.irreducibles[i].id.clone(),
                    right: t.irreducibles[j].id.clone(),
                    value: s.to_string(),
                });
            }
        }
    }
    // Columns: Σ_χ χ(a) conj χ(b) = |C_G(a)| δ.
    if t.irreducibles.len() == k {
        for a in 0..k {
            for b in a..k {
                let s: Cyclotomic = (0..k)
                    .map(|i| &t.irreducibles[i].values[a] * &conj[i][b])
                    .sum();
                let want = if a == b {
                    t.centralizer_order(a)
                } else {
                    BigInt::zero()
                };
                if s != Cyclotomic::from_bigint(want) {
                    v.push(Violation::ColumnOrthogonality {
                        left: t.classes[a].name.clone(),
                        right: t.classes[b].name.clone(),
                        value: s.to_string(),
                    });
                }
            }
        }
    }
    // Power maps: orders divide correctly; for q prime to the order the
    // values are Galois conjugates.
    for (c, info) in t.classes.iter().enumerate() {
        for (&q, &target) in &info.power_maps {
            let o = info.element_order;
            let want = o / num_integer::gcd(o, q);
            if t.classes[target].element_order != want {
                v.push(Violation::PowerMap {
                    class: info.name.clone(),
                    prime: q,
                    detail: format!(
                        "image {} has order {}, expected {want}",
                        t.classes[target].name, t.classes[target].element_order
                    ),
                });
                continue;
            }
            if o % q != 0 {
                for x in &t.irreducibles {
                    let g = x.values[c].galois(q as i64);
                    if g.as_ref() != Ok(&x.values[target]) {
                        v.push(Violation::PowerMap {
                            class: info.name.clone(),
                            prime: q,
                            detail: format!("{} not Galois compatible", x.id),
                        });
                        break;
                    }
                }
            }
        }
    }
    ValidationReport {
        table: t.name.clone(),
        violations: v,
    }
}
