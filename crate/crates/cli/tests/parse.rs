use kappa_cli::parse_group_spec;
use kappa_core::groups::{GroupSpec, Permutation};
use proptest::prelude::*;

#[test]
fn grammar_examples() {
    assert_eq!(parse_group_spec("cyclic:12").unwrap(), GroupSpec::Cyclic(12));
    assert_eq!(
        parse_group_spec("product:(cyclic:3)x(cyclic:2)").unwrap(),
        GroupSpec::product(GroupSpec::Cyclic(3), GroupSpec::Cyclic(2))
    );
    assert_eq!(parse_group_spec("elemabelian:2^3").unwrap(), GroupSpec::ElementaryAbelian { p: 2, k: 3 });
    assert_eq!(parse_group_spec("semidirect:7:3").unwrap(), GroupSpec::SemidirectPQ { p: 7, q: 3 });
    assert_eq!(parse_group_spec(" sym : 4 ").unwrap(), GroupSpec::Symmetric(4));
    let a5 = parse_group_spec("perm:5:(1 2 3 4 5);(1 2 3)").unwrap();
    assert_eq!(a5.build().unwrap().order(), 60);
    let spaced = parse_group_spec("perm:5:( 1 2 3 4 5 ) ; ( 1  2 3 )").unwrap();
    assert_eq!(spaced, a5);
}

#[test]
fn products_nest_to_the_right() {
    let s = parse_group_spec("product:(cyclic:2)x(cyclic:3)x(cyclic:5)").unwrap();
    let expect = GroupSpec::product(
        GroupSpec::Cyclic(2),
        GroupSpec::product(GroupSpec::Cyclic(3), GroupSpec::Cyclic(5)),
    );
    assert_eq!(s, expect);
    assert_eq!(s.build().unwrap().order(), 30);
}

#[test]
fn errors_carry_position() {
    let e = parse_group_spec("cyclic:").unwrap_err();
    assert_eq!(e.position, 7);
    assert!(e.expected.contains("number"));
    let e = parse_group_spec("circle:3").unwrap_err();
    assert_eq!(e.position, 0);
    let e = parse_group_spec("product:(cyclic:3)").unwrap_err();
    assert!(e.expected.contains("'x'"));
    let e = parse_group_spec("cyclic:3 junk").unwrap_err();
    assert_eq!(e.position, 9);
    assert!(parse_group_spec("perm:3:(1 4)").is_err());
    assert!(parse_group_spec("perm:3:(1 2)(2 3)").is_err());
    assert!(parse_group_spec("cyclic:99999999999999999999").is_err());
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u16).collect::<Vec<u16>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1u64..1000).prop_map(GroupSpec::Cyclic),
        (1u64..1000).prop_map(GroupSpec::Dihedral),
        (1u64..1000).prop_map(GroupSpec::Quaternion),
        (2u64..100, 1u32..6).prop_map(|(p, k)| GroupSpec::ElementaryAbelian { p, k }),
        (1u32..9).prop_map(GroupSpec::Symmetric),
        (1u32..9).prop_map(GroupSpec::Alternating),
        (2u64..100, 2u64..100).prop_map(|(p, q)| GroupSpec::SemidirectPQ { p, q }),
        (1usize..8).prop_flat_map(|d| {
            proptest::collection::vec(permutation(d), 0..4)
                .prop_map(move |generators| GroupSpec::Permutation { degree: d as u32, generators })
        }),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| GroupSpec::product(a, b))
    })
}

proptest! {
    #[test]
    fn render_then_parse_round_trips(s in spec()) {
        let text = s.to_string();
        prop_assert_eq!(parse_group_spec(&text).unwrap(), s);
    }
}
