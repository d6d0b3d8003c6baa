mod common;

use std::collections::BTreeSet;

use ettk::chartab::{linear_p_prime_group, validate_table, CharacterTable};
use ettk::cyclo::Cyclotomic;
use ettk::perm::{compose, conjugacy_data, dixon_table, GeneratorFile, PermGroup};

fn load(name: &str) -> (GeneratorFile, PermGroup) {
    let path = common::fixtures().join("generators/perm").join(format!("{name}.json"));
    let f = GeneratorFile::load(&path).unwrap();
    let g = f.group().unwrap();
    (f, g)
}

fn table(name: &str) -> CharacterTable {
    let (_, g) = load(name);
    let t = dixon_table(&g, name).unwrap();
    let report = validate_table(&t);
    assert!(report.is_valid(), "{name}: {:?}", report.violations);
    t
}

fn int_rows(t: &CharacterTable) -> BTreeSet<Vec<i64>> {
    t.irreducibles
        .iter()
        .map(|x| {
            x.values
                .iter()
                .map(|v| i64::try_from(v.as_rational_integer().unwrap()).unwrap())
                .collect()
        })
        .collect()
}

fn set(rows: &[&[i64]]) -> BTreeSet<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn s3_by_hand() {
    let t = table("S3");
    let sizes: Vec<u32> = t.classes.iter().map(|c| u32::try_from(&c.size).unwrap()).collect();
    assert_eq!(sizes, [1, 3, 2]);
    assert_eq!(int_rows(&t), set(&[&[1, 1, 1], &[1, -1, 1], &[2, 0, -1]]));
    assert!(t.irreducibles[0].values.iter().all(Cyclotomic::is_one));
}

#[test]
fn s4_by_hand() {
    let t = table("S4");
    let mut sizes: Vec<u32> = t.classes.iter().map(|c| u32::try_from(&c.size).unwrap()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 3, 6, 6, 8]);
    // Classes: 1a, 2a (double transpositions), 2b (transpositions), 3a, 4a.
    let expected = set(&[
        &[1, 1, 1, 1, 1],
        &[1, 1, -1, 1, -1],
        &[2, 2, 0, -1, 0],
        &[3, -1, 1, 0, -1],
        &[3, -1, -1, 0, 1],
    ]);
    assert_eq!(int_rows(&t), expected);
}

#[test]
fn q8_by_hand() {
    let t = table("Q8");
    assert_eq!(t.class_count(), 5);
    let singletons = t.classes.iter().filter(|c| c.size == 1.into()).count();
    assert_eq!(singletons, 2);
    let expected = set(&[
        &[1, 1, 1, 1, 1],
        &[1, 1, 1, -1, -1],
        &[1, 1, -1, 1, -1],
        &[1, 1, -1, -1, 1],
        &[2, -2, 0, 0, 0],
    ]);
    assert_eq!(int_rows(&t), expected);
}

#[test]
fn cyclic_groups_by_hand() {
    let (_, g) = load("C6");
    let t = dixon_table(&g, "C6").unwrap();
    assert!(validate_table(&t).is_valid());
    assert_eq!(t.irreducibles.len(), 6);
    let cd = conjugacy_data(&g);
    // Every row is a homomorphism G → C^×.
    for x in &t.irreducibles {
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.index_of(&compose(&g.elements[a], &g.elements[b])).unwrap();
                let lhs = &x.values[cd.class_of[a]] * &x.values[cd.class_of[b]];
                assert_eq!(lhs, x.values[cd.class_of[ab]]);
            }
        }
    }
    // C3: rows are [1, ζ^j, ζ^2j], whichever generator labels class 3a.
    let t3 = table("C3");
    let z = |k: i64| Cyclotomic::root_of_unity(3, k);
    let rows: BTreeSet<Vec<String>> = t3
        .irreducibles
        .iter()
        .map(|x| x.values.iter().map(|v| v.to_string()).collect())
        .collect();
    let expected: BTreeSet<Vec<String>> = (0..3)
        .map(|j| vec![z(0).to_string(), z(j).to_string(), z(2 * j).to_string()])
        .collect();
    assert_eq!(rows, expected);
}

#[test]
fn sylow_normaliser_of_m11() {
    let (_, g) = load("M11N3");
    assert_eq!(g.order(), 144);
    let t = table("M11N3");
    let x = linear_p_prime_group(&t, 3);
    assert_eq!(x.elements.len(), 4);
    assert_eq!(x.invariant_factors.invariant_factors(), [2, 2]);

    // Same class and degree data as the exported fixture.
    let gap = common::table("M11N3");
    let profile = |t: &CharacterTable| {
        let mut c: Vec<(u32, String)> = t
            .classes
            .iter()
            .map(|c| (c.element_order, c.size.to_string()))
            .collect();
        c.sort();
        let mut d: Vec<String> = (0..t.irreducibles.len()).map(|i| t.degree(i).to_string()).collect();
        d.sort();
        (c, d)
    };
    assert_eq!(profile(&t), profile(&gap));
}

#[test]
fn generator_order_does_not_matter() {
    let (f, _) = load("M11N3");
    let mut gens = f.generators.clone();
    gens.reverse();
    let g2 = ettk::perm::enumerate_group(f.degree, gens).unwrap();
    let a = table("M11N3");
    let b = dixon_table(&g2, "M11N3").unwrap();
    assert_eq!(a, b);
}
