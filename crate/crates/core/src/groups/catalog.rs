use super::{GroupSpec, Permutation};
use crate::numtheory::is_prime;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub order: u64,
}

/// `(Z3 × Z3) ⋊ Z2`, the inversion action, as permutations of 6 points.
pub fn generalized_dihedral_z3z3() -> GroupSpec {
    let cyc = |c: &[&[usize]]| {
        Permutation::from_cycles(6, &c.iter().map(|v| v.to_vec()).collect::<Vec<_>>())
            .expect("fixed cycles are valid")
    };
    GroupSpec::Permutation {
        degree: 6,
        generators: vec![cyc(&[&[1, 2, 3]]), cyc(&[&[4, 5, 6]]), cyc(&[&[2, 3], &[5, 6]])],
    }
}

fn entry(spec: GroupSpec) -> CatalogEntry {
    let order = spec.order().expect("family specs know their order") as u64;
    CatalogEntry { name: spec.canonical_name(), spec, order }
}

/// The groups exercised by the bound and classification checks, every
/// member of order at most `max_order`, sorted by order.
pub fn catalog(max_order: u64) -> Vec<CatalogEntry> {
    use GroupSpec::*;
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(entry(Cyclic(n)));
    }
    for n in 2..=max_order / 2 {
        out.push(entry(Dihedral(n)));
    }
    for n in 2..=max_order / 4 {
        out.push(entry(Quaternion(n)));
    }
    for p in [2u64, 3, 5, 7] {
        for k in 2..=6 {
            if (p as u128).pow(k) <= max_order as u128 {
                out.push(entry(ElementaryAbelian { p, k }));
            }
        }
    }
    for m in 3..=5 {
        out.push(entry(Symmetric(m)));
        out.push(entry(Alternating(m)));
    }
    for p in (3..=max_order).filter(|&p| is_prime(p)) {
        for q in (2..p).filter(|&q| is_prime(q) && (p - 1) % q == 0) {
            out.push(entry(SemidirectPQ { p, q }));
        }
    }
    let z = |n| Cyclic(n);
    for (a, b) in [(4, 2), (6, 2), (4, 4), (8, 2), (6, 3), (12, 2), (10, 2), (9, 3), (6, 6)] {
        out.push(entry(GroupSpec::product(z(a), z(b))));
    }
    out.push(entry(GroupSpec::product(Symmetric(3), z(2))));
    out.push(entry(GroupSpec::product(Symmetric(3), z(3))));
    out.push(entry(GroupSpec::product(Alternating(4), z(2))));
    out.push(entry(GroupSpec::product(Dihedral(4), z(2))));
    out.push(entry(GroupSpec::product(Quaternion(2), z(2))));
    out.push(entry(GroupSpec::product(SemidirectPQ { p: 7, q: 3 }, z(2))));
    out.push(CatalogEntry { name: "(Z3xZ3):Z2".into(), spec: generalized_dihedral_z3z3(), order: 18 });
    out.retain(|e| e.order <= max_order);
    out.sort_by_key(|e| e.order);
    out
}
