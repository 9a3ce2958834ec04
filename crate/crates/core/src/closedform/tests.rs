use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;
use crate::factor::Factorization;
use crate::groups::GroupSpec;
use crate::powergraph::{power_graph, reduced_power_graph};
use crate::treecount::temperley_kappa;

fn f(s: &str) -> BigUint {
    s.parse::<Factorization>().unwrap().value()
}

fn matrix_tree(spec: GroupSpec, reduced: bool) -> BigUint {
    let g = spec.build().unwrap();
    let pg = if reduced { reduced_power_graph(&g).unwrap() } else { power_graph(&g) };
    temperley_kappa(&pg).unwrap().value().clone()
}

#[test]
fn profile_of_12() {
    let p = divisor_profile(12).unwrap();
    assert_eq!(p.divisors, vec![12, 6, 4, 3, 2, 1]);
    let ms: Vec<u64> = (0..p.k()).map(|i| p.m(i)).collect();
    assert_eq!(ms, vec![12, 10, 8, 9, 10, 12]);
    // Degrees agree with the graph itself.
    let z12 = GroupSpec::Cyclic(12).build().unwrap();
    let pg = power_graph(&z12);
    for (i, &d) in p.divisors.iter().enumerate() {
        let x = (0..12).find(|&x| z12.element_order(x) as u64 == d).unwrap();
        assert_eq!(pg.degree(x) as u64, p.degrees[i]);
    }
}

#[test]
fn profile_invariants() {
    for n in 1..=120 {
        let p = divisor_profile(n).unwrap();
        assert_eq!(p.totients.iter().sum::<u64>(), n);
        if n > 1 {
            assert_eq!(p.degrees[0], n - 1);
            assert_eq!(*p.degrees.last().unwrap(), n - 1);
        }
        for l in p.lambdas() {
            assert!(l > BigRational::one());
        }
    }
    let p6 = divisor_profile(6).unwrap();
    assert_eq!(p6.divisors, vec![6, 3, 2, 1]);
    assert_eq!(p6.totients, vec![2, 2, 1, 1]);
    let p7 = divisor_profile(7).unwrap();
    assert_eq!(p7.k(), 2);
    assert_eq!(p7.phi(), BigRational::one());
}

#[test]
fn cyclic_values() {
    assert_eq!(kappa_cyclic(6).unwrap().value(), &BigUint::from(540u32));
    assert_eq!(kappa_cyclic(6).unwrap().factored(), "2^2*3^3*5");
    assert_eq!(kappa_cyclic(12).unwrap().factored(), "2^14*3^6*5*131");
    assert_eq!(kappa_cyclic(12).unwrap(), kappa_cyclic_expansion(12).unwrap());
    for n in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49] {
        assert_eq!(kappa_cyclic(n).unwrap().value(), &crate::treecount::cayley(n), "n={n}");
        assert_eq!(kappa_cyclic_expansion(n).unwrap().value(), &crate::treecount::cayley(n));
    }
    assert_eq!(kappa_cyclic(1).unwrap().value(), &BigUint::from(1u32));
}

#[test]
fn cyclic_pq_expansion_shape() {
    // With two middle divisors the complement is K_2 and the sum is Φ - 1.
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 5), (3, 7), (5, 7)] {
        let n = p * q;
        let prof = divisor_profile(n).unwrap();
        let phi = prof.phi();
        let prefix = (0..prof.k()).fold(BigRational::one(), |acc, i| {
            acc * BigRational::from_integer(num_traits::pow(BigInt::from(prof.m(i)), prof.totients[i] as usize))
        });
        let expect = prefix * (phi.clone() - BigRational::one()) / (phi * BigRational::from_integer(BigInt::from(n * n)));
        assert_eq!(BigRational::from_integer(BigInt::from(kappa_cyclic_expansion(n).unwrap().value().clone())), expect);
        assert_eq!(kappa_pq(p, q).unwrap(), kappa_cyclic(n).unwrap());
        assert_eq!(kappa_pq_reduced(p, q).unwrap(), kappa_cyclic_reduced(n).unwrap());
    }
    assert_eq!(kappa_pq(2, 3).unwrap().value(), &BigUint::from(540u32));
    assert_eq!(kappa_pq(2, 5).unwrap().factored(), "2^4*3^6*5^5");
    assert_eq!(kappa_pq(3, 5).unwrap().factored(), "3^10*5^8*11*13^3");
    assert_eq!(kappa_pq(3, 3), Err(Error::EqualPrimes(3)));
}

#[test]
fn reduced_values() {
    assert_eq!(kappa_cyclic_reduced(6).unwrap().value(), &BigUint::from(40u32));
    assert_eq!(kappa_cyclic_reduced(9).unwrap().factored(), "2^18");
    assert_eq!(kappa_cyclic_reduced(12).unwrap().factored(), "2^4*3^2*7*11^3*173");
    assert_eq!(kappa_cyclic_reduced(1), Err(Error::TrivialGroup));
    for p in [3u64, 5, 7, 11, 13] {
        // ½(2p-1)^{p-2}(2p-2)^{p-1}
        let two_p = BigUint::from(2 * p);
        let expect = (&two_p - 1u32).pow((p - 2) as u32) * (&two_p - 2u32).pow((p - 1) as u32) / 2u32;
        assert_eq!(kappa_cyclic_reduced(2 * p).unwrap().value(), &expect, "2p, p={p}");
    }
}

#[test]
fn cyclic_sweep_against_matrix_tree() {
    for n in 1..=60u64 {
        let full = matrix_tree(GroupSpec::Cyclic(n), false);
        assert_eq!(kappa_cyclic(n).unwrap().value(), &full, "n={n}");
        assert_eq!(kappa_cyclic_expansion(n).unwrap().value(), &full, "n={n}");
        if n >= 2 {
            let red = matrix_tree(GroupSpec::Cyclic(n), true);
            assert_eq!(kappa_cyclic_reduced(n).unwrap().value(), &red, "n={n}");
            assert_eq!(kappa_cyclic_reduced_expansion(n).unwrap().value(), &red, "n={n}");
        }
    }
}

#[test]
fn divisibility() {
    for n in 3..=200u64 {
        let k = kappa_cyclic(n).unwrap();
        assert!((k.value() % n).is_zero(), "n={n}");
    }
}

#[test]
fn dihedral_and_quaternion() {
    assert_eq!(kappa_dihedral(4).unwrap().factored(), "2^4");
    assert_eq!(kappa_dihedral(5).unwrap().factored(), "5^3");
    assert_eq!(kappa_dihedral(7).unwrap().factored(), "7^5");
    for n in 1..=12u64 {
        assert_eq!(kappa_dihedral(n).unwrap().value(), &matrix_tree(GroupSpec::Dihedral(n), false), "n={n}");
        assert_eq!(
            kappa_quaternion_reduced(n).unwrap().value(),
            &matrix_tree(GroupSpec::Quaternion(n), true),
            "n={n}"
        );
    }
    assert_eq!(kappa_quaternion_reduced(2).unwrap().factored(), "3^3");
    assert_eq!(kappa_quaternion_reduced(3).unwrap().factored(), "2^3*3^3*5");
    assert_eq!(kappa_quaternion_reduced(4).unwrap().factored(), "3^4*7^5");
    for n in [1u64, 2, 4, 8] {
        assert_eq!(kappa_quaternion_reduced_pow2(n).unwrap(), kappa_quaternion_reduced(n).unwrap());
        assert_eq!(kappa_quaternion_pow2(n).unwrap().value(), &matrix_tree(GroupSpec::Quaternion(n), false));
    }
    assert_eq!(kappa_quaternion_pow2(1).unwrap().factored(), "2^4");
    assert_eq!(kappa_quaternion_pow2(2).unwrap().factored(), "2^11");
    assert_eq!(kappa_quaternion_pow2(4).unwrap().factored(), "2^31");
    assert_eq!(kappa_quaternion_pow2(3), Err(Error::NotPowerOfTwo(3)));
}

#[test]
fn epo_family() {
    let f21 = GroupSpec::SemidirectPQ { p: 7, q: 3 }.build().unwrap();
    assert_eq!(kappa_epo(&f21).unwrap().factored(), "3^7*7^5");
    assert_eq!(kappa_epo(&f21).unwrap().value(), &matrix_tree(GroupSpec::SemidirectPQ { p: 7, q: 3 }, false));
    let a5 = GroupSpec::Alternating(5).build().unwrap();
    assert_eq!(kappa_epo(&a5).unwrap().value(), &f("3^10*5^18"));
    let z4 = GroupSpec::Cyclic(4).build().unwrap();
    assert_eq!(kappa_epo(&z4), Err(Error::NotEpo(4)));
    for (p, k) in [(2u64, 3u32), (3, 2), (3, 3), (5, 2), (7, 2)] {
        let spec = GroupSpec::ElementaryAbelian { p, k };
        let g = spec.build().unwrap();
        assert_eq!(kappa_elementary_abelian(p, k).unwrap(), kappa_epo(&g).unwrap());
        if g.order() <= 125 {
            assert_eq!(kappa_elementary_abelian(p, k).unwrap().value(), &matrix_tree(spec, false));
        }
    }
}

#[test]
fn semidirect_family() {
    assert_eq!(kappa_semidirect_pq(7, 3).unwrap().factored(), "3^7*7^5");
    assert_eq!(kappa_semidirect_pq(3, 2).unwrap().value(), &BigUint::from(3u32));
    assert_eq!(kappa_semidirect_pq(5, 2).unwrap().factored(), "5^3");
    assert_eq!(kappa_semidirect_pq(5, 3), Err(Error::InvalidPair { p: 5, q: 3 }));
    for (p, q) in [(3u64, 2u64), (5, 2), (7, 2), (7, 3), (11, 5), (13, 3)] {
        let spec = GroupSpec::SemidirectPQ { p, q };
        assert_eq!(kappa_semidirect_pq(p, q).unwrap().value(), &matrix_tree(spec, false), "({p},{q})");
    }
}

#[test]
fn divisor_graphs() {
    let c30 = DivisorGraph::middle(30, true);
    assert_eq!(c30.vertices, vec![15, 10, 6, 5, 3, 2]);
    assert_eq!(c30.edges.len(), 9);
    let c12 = DivisorGraph::middle(12, true);
    let pairs: Vec<(u64, u64)> = c12.edges.iter().map(|&(i, j)| (c12.vertices[i], c12.vertices[j])).collect();
    assert_eq!(pairs, vec![(6, 4), (4, 3), (3, 2)]);
    assert!(DivisorGraph::middle(13, true).vertices.is_empty());
    let full = DivisorGraph::full(12);
    assert_eq!(full.vertices.len(), 6);
    // Comparability and its complement partition the pairs.
    let d = DivisorGraph::middle(60, false);
    let c = DivisorGraph::middle(60, true);
    let t = d.vertices.len();
    assert_eq!(d.edges.len() + c.edges.len(), t * (t - 1) / 2);
}

#[test]
fn rational_det_matches_integer_det() {
    let m = [[2i64, 1, 0], [1, 3, 1], [0, 1, 4]];
    let r: Vec<Vec<BigRational>> =
        m.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let i: Vec<Vec<BigInt>> = m.iter().map(|row| row.iter().map(|&x| x.into()).collect()).collect();
    assert_eq!(rational_determinant(&r).to_integer(), exact_integer_determinant(&i));
}

proptest! {
    #[test]
    fn expansion_equals_determinant(n in 1u64..=400) {
        let middle = divisor_profile(n).unwrap().middle().len();
        match kappa_cyclic_expansion(n) {
            Ok(k) => prop_assert_eq!(k, kappa_cyclic(n).unwrap()),
            Err(e) => {
                prop_assert!(middle > EXPANSION_DIVISOR_LIMIT);
                prop_assert_eq!(e, Error::TooManyDivisors { count: middle, limit: EXPANSION_DIVISOR_LIMIT });
            }
        }
    }

    #[test]
    fn symbolic_factorization_multiplies_back(n in 2u64..=300) {
        for k in [kappa_cyclic(n).unwrap(), kappa_cyclic_reduced(n).unwrap()] {
            let f = k.factorization().unwrap();
            prop_assert_eq!(&f.value(), k.value());
        }
    }
}
