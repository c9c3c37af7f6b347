use proptest::prelude::*;
use twochar_groups::{build_group, validate_action, AbelianGroup, FiniteGroup, GroupSpec};

/// Z_n^× acting on Z_n by multiplication, restricted along a cyclic subgroup
/// generated by the unit u; the acting group is Z_m where m is the order of u.
fn unit_action(n: u32, u: u32) -> (FiniteGroup, AbelianGroup, Vec<Vec<usize>>) {
    let mut m = 1;
    let mut p = u % n;
    while p != 1 % n {
        p = p * u % n;
        m += 1;
    }
    let g = FiniteGroup::cyclic(m).unwrap();
    let a = AbelianGroup::cyclic(n).unwrap();
    let table = (0..m)
        .map(|k| {
            let f = (0..k).fold(1u64, |acc, _| acc * u as u64 % n as u64);
            (0..n as u64).map(|x| (x * f % n as u64) as usize).collect()
        })
        .collect();
    (g, a, table)
}

fn coprime_pair() -> impl Strategy<Value = (u32, u32)> {
    (2u32..=16).prop_flat_map(|n| {
        let units: Vec<u32> = (1..n).filter(|&u| num_integer::gcd(u, n) == 1).collect();
        (Just(n), prop::sample::select(units))
    })
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=8).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        Just(FiniteGroup::symmetric3()),
        (1usize..=4, 1usize..=4).prop_map(|(a, b)| build_group(&GroupSpec::Product {
            factors: vec![GroupSpec::Cyclic { n: a }, GroupSpec::Cyclic { n: b }]
        })
        .unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn validated_actions_compose((n, u) in coprime_pair()) {
        let (g, a, table) = unit_action(n, u);
        let act = validate_action(&g, &a, table).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                for p in a.elements() {
                    prop_assert_eq!(act.apply(g.mul(x, y), p), act.apply(x, act.apply(y, p)));
                }
            }
        }
    }

    #[test]
    fn dual_separates_points(factors in prop::collection::vec(1u32..=5, 0..=3)) {
        let a = AbelianGroup::new(factors).unwrap();
        for x in a.elements().skip(1) {
            prop_assert!(a.elements().any(|rho| !a.char_value(rho, x).is_one()));
        }
    }

    #[test]
    #[test]
    fn dual_characters_are_homomorphisms(factors in prop::collection::vec(1u32..=4, 1..=2)) {
        let a = AbelianGroup::new(factors).unwrap();
        let dual = a.dual_group();
        prop_assert_eq!(dual.len(), a.order());
        for (r, rho) in dual.iter().enumerate() {
            prop_assert!(rho.value(&a, 0).is_one());
            for x in a.elements() {
                for y in a.elements() {
                    prop_assert_eq!(rho.value(&a, a.add(x, y)), &rho.value(&a, x) * &rho.value(&a, y));
                }
            }
            for s in a.elements() {
                let prod = a.char_mul(r, s);
                for x in a.elements() {
                    let e = a.exponent();
                    prop_assert_eq!(a.char_exponent(prod, x), (a.char_exponent(r, x) + a.char_exponent(s, x)) % e);
                }
            }
        }
    }

    #[test]
    fn classes_partition_and_match_brute_force(g in small_group()) {
        let classes = g.conjugacy_classes();
        let mut all: Vec<usize> = classes.iter().flat_map(|c| c.elements.clone()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, g.elements().collect::<Vec<_>>());
        for c in &classes {
            prop_assert_eq!(c.representative, *c.elements.iter().min().unwrap());
            for &x in &c.elements {
                for &y in &c.elements {
                    prop_assert!(g.elements().any(|k| g.conj(k, x) == y));
                }
            }
        }
        // Burnside: #classes = average number of commuting pairs per element
        let commuting = g.elements().flat_map(|x| g.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| g.commute(x, y)).count();
        prop_assert_eq!(classes.len() * g.order(), commuting);
    }

    #[test]
    fn spec_json_roundtrip(g in small_group()) {
        let spec = g.to_spec();
        let text = serde_json::to_string(&spec).unwrap();
        let back: GroupSpec = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(build_group(&back).unwrap(), g);
    }
}

#[test]
fn spec_schema_examples() {
    let s: GroupSpec = serde_json::from_str(r#"{"kind":"cyclic","n":2}"#).unwrap();
    assert_eq!(build_group(&s).unwrap().order(), 2);
    let p: GroupSpec =
        serde_json::from_str(r#"{"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":2}]}"#).unwrap();
    let v4 = build_group(&p).unwrap();
    assert!(v4.elements().all(|x| v4.inv(x) == x));
    let s3 = build_group(&FiniteGroup::symmetric3().to_spec()).unwrap();
    assert_eq!(s3.conjugacy_classes().len(), 3);
}
