use super::*;
use crate::numtheory::{divisors, totient};

fn profile(g: &FiniteGroup) -> Vec<(u32, usize)> {
    g.order_profile().into_iter().collect()
}

#[test]
fn cyclic_six_orders() {
    let g = GroupSpec::Cyclic(6).build().unwrap();
    assert_eq!(g.order(), 6);
    let mut orders = g.element_orders().to_vec();
    orders.sort();
    assert_eq!(orders, vec![1, 2, 3, 3, 6, 6]);
}

#[test]
fn quaternion_eight_has_one_involution() {
    let g = GroupSpec::Quaternion(2).build().unwrap();
    assert_eq!(g.order(), 8);
    assert_eq!(g.order_profile()[&2], 1);
    assert!(!g.is_abelian());
}

#[test]
fn alternating_five_profile() {
    let g = GroupSpec::Alternating(5).build().unwrap();
    assert_eq!(profile(&g), vec![(1, 1), (2, 15), (3, 20), (5, 24)]);
}

#[test]
fn symmetric_orders() {
    for (m, order) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
        assert_eq!(GroupSpec::Symmetric(m).build().unwrap().order(), order);
    }
    assert_eq!(GroupSpec::Alternating(6).build().unwrap().order(), 360);
    assert_eq!(GroupSpec::Alternating(2).build().unwrap().order(), 1);
}

#[test]
fn products_match_order_profiles() {
    let z = GroupSpec::Cyclic;
    let z3z2 = GroupSpec::product(z(3), z(2)).build().unwrap();
    assert_eq!(profile(&z3z2), profile(&z(6).build().unwrap()));

    let klein = GroupSpec::product(z(2), z(2)).build().unwrap();
    assert!((1..4).all(|x| klein.element_order(x) == 2));

    // Orders of (a, b) in Z4 x Z2 counted directly from the component arithmetic.
    let mut expected: Vec<u32> = Vec::new();
    for a in 0..4u32 {
        for b in 0..2u32 {
            expected.push((1..=8).find(|k| k * a % 4 == 0 && k * b % 2 == 0).unwrap());
        }
    }
    expected.sort();
    let g = GroupSpec::product(z(4), z(2)).build().unwrap();
    let mut got = g.element_orders().to_vec();
    got.sort();
    assert_eq!(got, expected);
    assert_eq!(got, vec![1, 2, 2, 2, 4, 4, 4, 4]);
}

#[test]
fn direct_product_function() {
    let a = GroupSpec::Cyclic(3).build().unwrap();
    let b = GroupSpec::Symmetric(3).build().unwrap();
    let p = direct_product(&a, &b).unwrap();
    assert_eq!(p.order(), 18);
    p.check_axioms(64, 0).unwrap();
    let big = GroupSpec::Cyclic(200).build().unwrap();
    assert!(matches!(direct_product(&big, &big), Err(Error::UnsupportedOrder { .. })));
}

#[test]
fn spectra() {
    let a4 = spectrum(&GroupSpec::Alternating(4).build().unwrap());
    assert_eq!(a4.omega, BTreeSet::from([1, 2, 3]));
    assert_eq!(a4.mu, BTreeSet::from([2, 3]));
    let z12 = spectrum(&GroupSpec::Cyclic(12).build().unwrap());
    assert_eq!(z12.omega, BTreeSet::from([1, 2, 3, 4, 6, 12]));
    assert_eq!(z12.mu, BTreeSet::from([12]));
    let a5 = spectrum(&GroupSpec::Alternating(5).build().unwrap());
    assert_eq!(a5.omega, BTreeSet::from([1, 2, 3, 5]));
}

#[test]
fn cyclic_subgroup_counts() {
    let a5 = GroupSpec::Alternating(5).build().unwrap();
    let c5 = count_cyclic_subgroups(&a5, 5).unwrap();
    assert_eq!(c5, 6);
    assert_eq!(c5, a5.order_profile()[&5] / totient(5) as usize);
    let z9 = GroupSpec::Cyclic(9).build().unwrap();
    assert_eq!(count_cyclic_subgroups(&z9, 3).unwrap(), 1);
    let a4 = GroupSpec::Alternating(4).build().unwrap();
    assert_eq!(count_cyclic_subgroups(&a4, 3).unwrap(), 4);
    assert_eq!(count_cyclic_subgroups(&a4, 5).unwrap(), 0);
    assert_eq!(count_cyclic_subgroups(&a4, 4), Err(Error::NotPrime(4)));
}

#[test]
fn catalog_axioms_hold() {
    for e in catalog(64) {
        let g = e.spec.build().unwrap();
        assert_eq!(g.order() as u64, e.order, "{}", e.name);
        g.check_axioms(64, 0).unwrap_or_else(|m| panic!("{}: {m}", e.name));
    }
    let a6 = GroupSpec::Alternating(6).build().unwrap();
    a6.check_axioms(64, 20_000).unwrap();
}

#[test]
fn oracle_groups_above_table_limit() {
    let g = GroupSpec::Dihedral(1500).build().unwrap();
    assert!(!g.has_table());
    g.check_axioms(64, 5_000).unwrap();
    assert_eq!(g.order_profile()[&2], 1501);
}

#[test]
fn cyclic_element_counts_are_totients() {
    for n in 1..=60u64 {
        let g = GroupSpec::Cyclic(n).build().unwrap();
        let prof = g.order_profile();
        for d in divisors(n) {
            assert_eq!(prof[&(d as u32)] as u64, totient(d), "n={n} d={d}");
        }
    }
}

#[test]
fn dihedral_reflections_are_involutions() {
    for n in 1..=20u64 {
        let g = GroupSpec::Dihedral(n).build().unwrap();
        assert_eq!(g.order() as u64, 2 * n);
        for x in n as usize..2 * n as usize {
            assert_eq!(g.element_order(x), 2);
        }
    }
}

#[test]
fn quaternion_unique_involution_in_every_cyclic_subgroup() {
    for n in [1u64, 2, 4, 8, 16] {
        let g = GroupSpec::Quaternion(n).build().unwrap();
        assert_eq!(g.order() as u64, 4 * n);
        let central = n as usize; // x^n
        assert_eq!(g.element_order(central), 2);
        for x in 1..g.order() {
            assert!(g.in_closure(x, central), "Q{} element {x}", 4 * n);
        }
    }
    // For n not a power of two there are other involutions' subgroups.
    let q12 = GroupSpec::Quaternion(3).build().unwrap();
    assert!((1..12).any(|x| !q12.in_closure(x, 3)));
}

#[test]
fn semidirect_seven_three() {
    let g = GroupSpec::SemidirectPQ { p: 7, q: 3 }.build().unwrap();
    assert_eq!(profile(&g), vec![(1, 1), (3, 14), (7, 6)]);
    assert!(!g.is_abelian());
    let s3 = GroupSpec::SemidirectPQ { p: 3, q: 2 }.build().unwrap();
    assert_eq!(profile(&s3), profile(&GroupSpec::Symmetric(3).build().unwrap()));
}

#[test]
fn invalid_specs() {
    assert!(matches!(GroupSpec::SemidirectPQ { p: 7, q: 5 }.build(), Err(Error::InvalidSpec(_))));
    assert!(matches!(GroupSpec::SemidirectPQ { p: 9, q: 2 }.build(), Err(Error::InvalidSpec(_))));
    assert!(matches!(GroupSpec::ElementaryAbelian { p: 4, k: 2 }.build(), Err(Error::InvalidSpec(_))));
    assert!(matches!(GroupSpec::Cyclic(0).build(), Err(Error::InvalidSpec(_))));
    assert!(matches!(GroupSpec::Symmetric(9).build(), Err(Error::InvalidSpec(_))));
    assert!(matches!(GroupSpec::Cyclic(20_000).build(), Err(Error::UnsupportedOrder { .. })));
    assert!(matches!(GroupSpec::Symmetric(8).build(), Err(Error::UnsupportedOrder { .. })));
    let gen = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
    let bad = GroupSpec::Permutation { degree: 4, generators: vec![gen] };
    assert!(matches!(bad.build(), Err(Error::InvalidSpec(_))));
}

#[test]
fn permutation_generators_close_to_a5() {
    let gens = vec![
        Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap(),
        Permutation::from_cycles(5, &[vec![1, 2, 3]]).unwrap(),
    ];
    let g = GroupSpec::Permutation { degree: 5, generators: gens }.build().unwrap();
    assert_eq!(g.order(), 60);
    assert_eq!(profile(&g), profile(&GroupSpec::Alternating(5).build().unwrap()));
    let capped = GroupSpec::Symmetric(6).build_with_cap(100);
    assert!(matches!(capped, Err(Error::UnsupportedOrder { .. })));
}

#[test]
fn generalized_dihedral_of_order_eighteen() {
    let g = generalized_dihedral_z3z3().build().unwrap();
    assert_eq!(profile(&g), vec![(1, 1), (2, 9), (3, 8)]);
}

#[test]
fn display_grammar() {
    let s = GroupSpec::product(GroupSpec::Cyclic(3), GroupSpec::ElementaryAbelian { p: 2, k: 3 });
    assert_eq!(s.to_string(), "product:(cyclic:3)x(elemabelian:2^3)");
    assert_eq!(s.canonical_name(), "Z3xZ2^3");
    assert_eq!(GroupSpec::Dihedral(4).canonical_name(), "D8");
}
