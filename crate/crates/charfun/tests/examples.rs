mod common;

use common::*;
use twochar_charfun::*;
use twochar_scalars::Cyclotomic;

#[test]
fn first_example_characters() {
    let g = group("G1");
    let one = chi(&irrep("G1", "𝟙"));
    assert_eq!((one.value(0).multiset(), one.value(1).multiset()), (vec![0], vec![0]));
    let cat = chi(&irrep("G1", "𝟙_c"));
    assert_eq!((cat.value(0).multiset(), cat.dim(1)), (vec![0, 0], 0));
    let s = chi(&irrep("G1", "S"));
    assert_eq!((s.value(0).multiset(), s.dim(1)), (vec![1, 2], 0));
    // character 1 sends the generator to ω
    assert_eq!(g.pi2().char_value(1, 1), Cyclotomic::zeta(3, 1));
}

#[test]
fn second_example_characters() {
    let t = chi(&irrep("G2", "T"));
    assert_eq!((t.value(0).multiset(), t.dim(1)), (vec![1, 1], 0));
    assert_eq!(t.eigenvalue(0, 0, 1), Cyclotomic::from_integer(-1));
}

#[test]
fn catalogue_characters_validate() {
    for r in all_reps() {
        let f = chi(&r);
        let report = validate_class_functor(&f);
        assert!(report.is_valid(), "{:?}", report.violations);
        assert_eq!(f.dim(f.group().identity()), r.n());
    }
}

#[test]
fn corrupted_psi_is_caught_at_the_square() {
    let s = chi(&irrep("G1", "S"));
    let v = s.psi(1, 0).get(1, 0).clone();
    let bad = s.with_psi_entry(1, 0, 1, 0, &v * &Cyclotomic::from_integer(2));
    let report = validate_class_functor(&bad);
    assert_eq!(report.find("composition").unwrap().witness, vec![1, 1, 0]);
}

#[test]
fn day_convolution_examples() {
    let z2 = group("grp(Z2)");
    let one = chi(&irreps(&z2)[0].1);
    let d = day_convolution(&one, &one).unwrap();
    assert_eq!(d.functor.dim(0), 2);
    let s = chi(&irrep("G1", "S"));
    let d = day_convolution(&s, &s).unwrap();
    assert_eq!(d.functor.dim(0), 2);
    assert!(d.basis[0].iter().all(|x| x.k == 0));
    assert!(validate_class_functor(&d.functor).is_valid());
}

#[test]
fn unit_law() {
    for r in all_reps() {
        let f = chi(&r);
        let u = unit_functor(f.group());
        assert!(validate_class_functor(&u).is_valid());
        for prod in [day_convolution(&f, &u).unwrap(), day_convolution(&u, &f).unwrap()] {
            assert_eq!(dimensions(&prod.functor), dimensions(&f));
            assert_eq!(fingerprint(&prod.functor, true), fingerprint(&f, true));
        }
    }
}

#[test]
fn braiding_example() {
    let z2 = group("grp(Z2)");
    let one = chi(&irreps(&z2)[0].1);
    let b = braiding(&one, &one, 0).unwrap();
    // summands k = 0, 1 are exchanged with k⁻¹ = k: identity for Z2
    assert!(b.is_identity());
    let z3 = group("grp(Z3)");
    let one = chi(&irreps(&z3)[0].1);
    let b = braiding(&one, &one, 0).unwrap();
    let perm: Vec<usize> = (0..3).map(|c| b.column_entries(c)[0].0).collect();
    assert_eq!(perm, vec![0, 2, 1]);
    assert!((0..3).all(|c| b.column_entries(c)[0].1.is_one()));
}

#[test]
fn inner_product_matrices() {
    for (name, expected) in [
        ("G1", vec![vec![2, 1, 0], vec![1, 2, 0], vec![0, 0, 1]]),
        ("G2", vec![vec![2, 1, 0], vec![1, 2, 0], vec![0, 0, 2]]),
    ] {
        let chars: Vec<_> = irreps(&group(name)).iter().map(|(_, r)| chi(r)).collect();
        let m: Vec<Vec<usize>> =
            chars.iter().map(|a| chars.iter().map(|b| inner_product(a, b).unwrap().dim).collect()).collect();
        assert_eq!(m, expected, "{name}");
    }
}

#[test]
fn trivial_self_pairing_counts_classes() {
    for (name, classes) in [("grp(Z2)", 2), ("grp(Z3)", 3), ("grp(S3)", 3)] {
        let one = chi(&irreps(&group(name))[0].1);
        assert_eq!(inner_product(&one, &one).unwrap().dim, classes);
    }
}

#[test]
fn joint_examples() {
    let g1 = group("G1");
    let one = irrep("G1", "𝟙");
    for (g, h) in g1.commuting_pairs() {
        assert!(joint_character(&one, JointInput::new(&g1, g, h, 0).unwrap()).unwrap().is_one());
    }
    let cat = irrep("G1", "𝟙_c");
    assert!(joint_character(&cat, JointInput { g: 1, h: 0, a: 0 }).unwrap().is_zero());
    let ba = group("BA(Z3)");
    for (rho, (_, r)) in irreps(&ba).into_iter().enumerate() {
        for a in 0..3 {
            assert_eq!(joint_character(&r, JointInput { g: 0, h: 0, a }).unwrap(), ba.pi2().char_value(rho, a));
        }
    }
    let s3 = group("grp(S3)");
    assert!(JointInput::new(&s3, 1, 3, 0).is_err());
}

#[test]
fn modular_move_examples() {
    let g1 = group("G1");
    let j = modular_s(&g1, JointInput { g: 1, h: 0, a: 0 });
    assert_eq!((j.g, j.h, j.a), (0, 1, 0));
    let cat = irrep("G1", "𝟙_c");
    assert!(joint_character(&cat, j).unwrap().is_zero());
    let t = modular_t(&g1, JointInput { g: 0, h: 1, a: 0 });
    assert_eq!(t, JointInput { g: 0, h: 1, a: 0 });
}

#[test]
fn fingerprint_examples() {
    let f = |rep: &str| fingerprint(&chi(&irrep("G1", rep)), false);
    let ints = |v: &[i64]| v.iter().map(|&x| Cyclotomic::from_integer(x)).collect::<Vec<_>>();
    // (e, ρ0), (e, ρ1), (e, ρ2), (x, ρ0), (x, ρ1), (x, ρ2)
    assert_eq!(f("𝟙"), ints(&[1, 0, 0, 1, 0, 0]));
    assert_eq!(f("S"), ints(&[0, 1, 1, 0, 0, 0]));
    assert_eq!(f("𝟙_c"), ints(&[2, 0, 0, 0, 0, 0]));
}

#[test]
fn decomposition_examples() {
    let basis = |name: &str| irreps(&group(name)).iter().map(|(_, r)| chi(r)).collect::<Vec<_>>();
    let s = irrep("G1", "S");
    assert_eq!(decompose(&chi(&s.deligne_tensor(&s).unwrap()), &basis("G1"), false).unwrap(), vec![0, 1, 1]);
    let t = irrep("G2", "T");
    assert_eq!(decompose(&chi(&t.deligne_tensor(&t).unwrap()), &basis("G2"), false).unwrap(), vec![0, 2, 0]);
    assert_eq!(decompose(&chi(&irrep("G1", "𝟙")), &basis("G1"), false).unwrap(), vec![1, 0, 0]);
    // the unit functor is not a 2-character of a catalogue sum
    let g1 = group("G1");
    assert!(matches!(decompose(&unit_functor(&g1), &basis("G1"), false), Err(CharError::NotInSpan(_))));
    assert!(matches!(
        decompose(&chi(&irrep("G1", "𝟙")), &basis("grp(S3)"), false),
        Err(CharError::AmbientMismatch)
    ));
    assert!(matches!(decompose(&basis("grp(S3)")[0], &basis("grp(S3)"), false), Err(CharError::DegenerateBasis { .. })));
}

#[test]
fn fusion_tables() {
    let g1 = fusion_table(&group("G1"), false).unwrap().lines();
    for line in ["𝟙_c ⊠ 𝟙_c = 2·𝟙_c", "S ⊠ S = 𝟙_c + S", "𝟙_c ⊠ S = 2·S", "S ⊠ 𝟙_c = 2·S"] {
        assert!(g1.contains(&line.to_string()), "{line}");
    }
    let g2 = fusion_table(&group("G2"), true).unwrap().lines();
    for line in ["𝟙_c ⊠ 𝟙_c = 2·𝟙_c", "T ⊠ T = 2·𝟙_c", "𝟙_c ⊠ T = 2·T", "T ⊠ 𝟙_c = 2·T"] {
        assert!(g2.contains(&line.to_string()), "{line}");
    }
    // characters of BA(Z2) multiply like Ẑ2
    let ba = fusion_table(&group("BA(Z2)"), false).unwrap();
    assert_eq!(ba.cells[1][1], vec![1, 0]);
    assert_eq!(ba.cells[0][1], vec![0, 1]);
}

/// Orbit decomposition of `G/H × G/K` by brute force: each orbit contributes
/// the catalogue entry whose subgroup is conjugate to a point stabilizer.
fn burnside_product(g: &twochar_groups::FiniteGroup, subs: &[Vec<usize>], h: usize, k: usize) -> Vec<u64> {
    let cosets = |s: &[usize]| {
        let mut cs: Vec<Vec<usize>> = g
            .elements()
            .map(|x| {
                let mut c: Vec<usize> = s.iter().map(|&y| g.mul(x, y)).collect();
                c.sort_unstable();
                c
            })
            .collect();
        cs.sort();
        cs.dedup();
        cs
    };
    let (ch, ck) = (cosets(&subs[h]), cosets(&subs[k]));
    let act = |x: usize, c: &Vec<usize>| {
        let mut m: Vec<usize> = c.iter().map(|&y| g.mul(x, y)).collect();
        m.sort_unstable();
        m
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = vec![0; subs.len()];
    for a in &ch {
        for b in &ck {
            if seen.contains(&(a.clone(), b.clone())) {
                continue;
            }
            for x in g.elements() {
                seen.insert((act(x, a), act(x, b)));
            }
            let mut stab: Vec<usize> = g.elements().filter(|&x| &act(x, a) == a && &act(x, b) == b).collect();
            stab.sort_unstable();
            let idx = subs
                .iter()
                .position(|s| {
                    g.elements().any(|x| {
                        let mut c: Vec<usize> = s.iter().map(|&y| g.conj(x, y)).collect();
                        c.sort_unstable();
                        c == stab
                    })
                })
                .unwrap();
            out[idx] += 1;
        }
    }
    out
}

#[test]
fn classical_fusion_matches_orbit_counts() {
    for name in ["grp(Z2)", "grp(Z3)", "grp(S3)"] {
        let g = group(name);
        let mut subs = g.pi1().subgroup_class_representatives();
        subs.reverse();
        let table = fusion_table(&g, true).unwrap();
        for h in 0..subs.len() {
            for k in 0..subs.len() {
                assert_eq!(table.cells[h][k], burnside_product(g.pi1(), &subs, h, k), "{name} {h} {k}");
            }
        }
    }
    // fingerprints of grp(S3) are dependent, so the bounded search is used
    assert!(fusion_table(&group("grp(S3)"), false).unwrap().extended);
}
