use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modp::Fq;
use super::{conjugacy_data, ConjugacyData, PermError, PermGroup};
use crate::arith::is_prime;
use crate::chartab::{CharacterTable, ClassInfo, Irreducible};
use crate::cyclo::Cyclotomic;

const SEED: u64 = 0x00d1_c0de;

/// Smallest prime q ≡ 1 (mod exponent) with q > 2·√|G|.
pub fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let mut q = exponent + 1;
    while !(is_prime(q) && q * q > 4 * order) {
        q += exponent;
    }
    q
}

/// Full character table of `g`, with classes in [`conjugacy_data`] order and
/// irreducibles sorted by degree (trivial character first).
pub fn dixon_table(g: &PermGroup, name: &str) -> Result<CharacterTable, PermError> {
    let cd = conjugacy_data(g);
    let n = g.order() as u64;
    let k = cd.classes.len();
    let exponent = g.exponent();
    let f = Fq(dixon_prime(n, exponent));

    let coeffs = class_coefficients(g, &cd, f);
    let omegas = split_eigenspaces(&coeffs, k, f)?;

    let inv_class: Vec<usize> = (0..k).map(|c| cd.inverse_class(g, c)).collect();
    let w = f.pow(f.primitive_root(), (f.0 - 1) / exponent);
    let mut powers: Vec<Vec<usize>> = Vec::with_capacity(k);
    for c in 0..k {
        let o = cd.classes[c].element_order as u64;
        powers.push((0..o).map(|l| cd.power_class(g, c, l)).collect());
    }

    let mut rows = Vec::with_capacity(k);
    for omega in &omegas {
        let s = (0..k).fold(0, |acc, c| {
            let t = f.mul(omega[c], omega[inv_class[c]]);
            f.add(acc, f.mul(t, f.inv(cd.classes[c].size as u64 % f.0)))
        });
        let d2 = f.mul(n % f.0, f.inv(s));
        let degree = (1..)
            .take_while(|d: &u64| d * d <= n)
            .find(|d| f.mul(*d, *d) == d2)
            .ok_or_else(|| PermError::LiftFailure("no degree matches".into()))?;
        let values_mod: Vec<u64> = (0..k)
            .map(|c| f.mul(f.mul(omega[c], degree), f.inv(cd.classes[c].size as u64 % f.0)))
            .collect();
        let mut values = Vec::with_capacity(k);
        for c in 0..k {
            values.push(lift(&values_mod, &powers[c], exponent, w, degree, f)?);
        }
        rows.push((degree, values));
    }
    rows.sort_by_cached_key(|(d, v)| {
        let trivial = v.iter().all(Cyclotomic::is_one);
        (*d, !trivial, v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    });

    let classes = cd
        .classes
        .iter()
        .enumerate()
        .map(|(c, cl)| ClassInfo {
            name: cl.name.clone(),
            size: BigInt::from(cl.size),
            element_order: cl.element_order,
            power_maps: cd
                .power_maps
                .iter()
                .map(|(&q, m)| (q, m[c]))
                .collect::<BTreeMap<_, _>>(),
        })
        .collect();
    let irreducibles = rows
        .into_iter()
        .enumerate()
        .map(|(i, (_, values))| Irreducible {
            id: format!("chi_{}", i + 1),
            values,
        })
        .collect();
    let center: Vec<usize> = (0..k).filter(|&c| cd.classes[c].size == 1).collect();
    Ok(CharacterTable {
        name: name.to_string(),
        order: BigInt::from(n),
        classes,
        irreducibles,
        center: Some(center),
    })
}

/// a[j][i][l] = #{x ∈ C_j : x⁻¹·g_l ∈ C_i}, reduced mod q.
fn class_coefficients(g: &PermGroup, cd: &ConjugacyData, f: Fq) -> Vec<Vec<Vec<u64>>> {
    let k = cd.classes.len();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    let inv: Vec<usize> = (0..g.order()).map(|x| g.inv(x)).collect();
    for l in 0..k {
        let gl = cd.classes[l].representative;
        for x in 0..g.order() {
            let y = g.mul(inv[x], gl);
            let (j, i) = (cd.class_of[x], cd.class_of[y]);
            a[j][i][l] += 1;
        }
    }
    for m in a.iter_mut().flatten().flatten() {
        *m %= f.0;
    }
    a
}

/// Common eigenvectors of the class matrices, normalised to 1 at the identity.
fn split_eigenspaces(a: &[Vec<Vec<u64>>], k: usize, f: Fq) -> Result<Vec<Vec<u64>>, PermError> {
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut round = 0;
    while spaces.iter().any(|s| s.len() > 1) {
        // First each class matrix on its own, then random combinations.
        let mix: Vec<u64> = if round + 1 < k {
            (0..k).map(|j| u64::from(j == round + 1)).collect()
        } else {
            (0..k).map(|_| rng.gen_range(0..f.0)).collect()
        };
        round += 1;
        if round > k + 200 {
            return Err(PermError::LiftFailure("eigenspaces did not split".into()));
        }
        let b: Vec<Vec<u64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|l| (0..k).fold(0, |s, j| f.add(s, f.mul(mix[j], a[j][i][l]))))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(&b, s, f));
            }
        }
        spaces = next;
    }
    let mut out = Vec::with_capacity(k);
    for s in spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(PermError::LiftFailure("eigenvector vanishes at the identity".into()));
        }
        let t = f.inv(v[0]);
        out.push(v.iter().map(|&x| f.mul(x, t)).collect());
    }
    Ok(out)
}

/// Splits the B-invariant subspace spanned by `basis` into eigenspaces of B.
fn split(b: &[Vec<u64>], basis: Vec<Vec<u64>>, f: Fq) -> Vec<Vec<Vec<u64>>> {
    let d = basis.len();
    let n = basis[0].len();
    // Columns of V are the basis vectors; pick d rows where V is invertible.
    let v: Vec<Vec<u64>> = (0..n).map(|r| basis.iter().map(|x| x[r]).collect()).collect();
    let rows = independent_rows(&v, d, f);
    let bv = f.matmul(b, &v);
    let vp: Vec<Vec<u64>> = rows.iter().map(|&r| v[r].clone()).collect();
    let bvp: Vec<Vec<u64>> = rows.iter().map(|&r| bv[r].clone()).collect();
    let r = f.matmul(&f.invert(&vp), &bvp);
    let cp = f.charpoly(&r);
    let mut out = Vec::new();
    for lambda in 0..f.0 {
        if f.eval(&cp, lambda) != 0 {
            continue;
        }
        let shifted: Vec<Vec<u64>> = r
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let ns = f.nullspace(&shifted, d);
        if ns.len() == d {
            return vec![basis];
        }
        out.push(
            ns.iter()
                .map(|u| {
                    (0..n)
                        .map(|row| (0..d).fold(0, |s, c| f.add(s, f.mul(v[row][c], u[c]))))
                        .collect()
                })
                .collect(),
        );
    }
    out
}

fn independent_rows(v: &[Vec<u64>], d: usize, f: Fq) -> Vec<usize> {
    let mut chosen: Vec<Vec<u64>> = Vec::new();
    let mut idx = Vec::new();
    for (r, row) in v.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.push(row.clone());
        if f.nullspace(&transpose(&trial, d), trial.len()).is_empty() {
            chosen = trial;
            idx.push(r);
            if idx.len() == d {
                break;
            }
        }
    }
    idx
}

fn transpose(m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
    (0..cols).map(|c| m.iter().map(|r| r[c]).collect()).collect()
}

/// χ(g) from χ(g^l) mod q via eigenvalue multiplicities of g.
fn lift(
    values: &[u64],
    powers: &[usize],
    exponent: u64,
    w: u64,
    degree: u64,
    f: Fq,
) -> Result<Cyclotomic, PermError> {
    let o = powers.len() as u64;
    let z = f.pow(w, exponent / o);
    let inv_o = f.inv(o % f.0);
    let mut terms = Vec::new();
    let mut total = 0;
    for e in 0..o {
        let zi = f.inv(f.pow(z, e));
        let m = (0..o).fold(0, |s, l| {
            f.add(s, f.mul(values[powers[l as usize]], f.pow(zi, l)))
        });
        let m = f.mul(m, inv_o);
        if m > degree {
            return Err(PermError::LiftFailure(format!("multiplicity {m} exceeds degree {degree}")));
        }
        total += m;
        if m > 0 {
            terms.push((e as i64, BigRational::from_integer(BigInt::from(m))));
        }
    }
    if total != degree {
        return Err(PermError::LiftFailure("multiplicities do not sum to the degree".into()));
    }
    Ok(Cyclotomic::from_terms(o as u32, &terms))
}
