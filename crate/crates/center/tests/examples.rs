mod common;

use common::*;
use twochar_center::*;
use twochar_charfun::inner_product;
use twochar_scalars::{Cyclotomic, Matrix};
use twochar_twrep::induced_rep;

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_integer(v)
}

#[test]
fn fourier_transform_of_classical_characters() {
    let trivial = psi_transform(&chi(&irrep("grp(Z2)", "𝟙")));
    assert_eq!(trivial.dims(), vec![1, 1]);
    let coset = psi_transform(&chi(&irrep("grp(Z2)", "k[G/H1]")));
    assert_eq!(coset.dims(), vec![2, 0]);
    for r in all_reps() {
        let f = chi(&r);
        assert_eq!(phi_transform(&psi_transform(&f)), f);
        let x = psi_transform(&f);
        assert_eq!(psi_transform(&phi_transform(&x)), x);
    }
}

#[test]
fn group_algebra_and_twisted_group_algebra() {
    let a = character_algebra(&irrep("grp(Z2)", "𝟙")).unwrap();
    for h in 0..2 {
        for k in 0..2 {
            assert_eq!(a.product(h, 0, k, 0), vec![int(1)]);
        }
    }
    let g = group("grp(Z2)");
    let beta = |x: usize, y: usize| if x == 1 && y == 1 { int(-1) } else { int(1) };
    let twisted = character_algebra(&induced_rep(&g, &[0, 1], &beta).unwrap()).unwrap();
    assert_eq!(twisted.product(1, 0, 1, 0), vec![int(-1)]);
    assert_eq!(twisted.product(0, 0, 1, 0), vec![int(1)]);
    assert!(check_lagrangian(&twisted).all_pass());
}

#[test]
fn function_algebra_of_the_cyclic_rep() {
    let a = character_algebra(&irrep("G1", "𝟙_c")).unwrap();
    assert_eq!(a.object().dims(), vec![2, 0]);
    assert_eq!(a.unit(), &[int(1), int(1)]);
    for x in 0..2 {
        for y in 0..2 {
            let expected = if x == y { vec![int((x == 0) as i64), int((x == 1) as i64)] } else { vec![int(0), int(0)] };
            assert_eq!(a.product(0, x, 0, y), expected);
        }
    }
}

#[test]
fn full_center_examples() {
    let cyc = irrep("G1", "𝟙_c");
    let z = full_center_oracle(&cyc).unwrap();
    assert_eq!(z.object().dims(), vec![2, 0]);
    assert_eq!(z.object(), &psi_transform(&chi(&cyc.opposite())));

    let s = irrep("G1", "S");
    let z = full_center_oracle(&s).unwrap();
    let pi2 = s.group().pi2();
    assert_eq!(z.object().dim(0), 2);
    let mut conj: Vec<usize> = chi(&s).value(0).chars.iter().map(|&c| pi2.char_inv(c)).collect();
    conj.sort_unstable();
    assert_eq!(z.object().grade(0).multiset(), conj);

    // the first catalogue entry is the trivial rep on one simple
    for name in twochar_twogroup::builtin_names() {
        let (_, trivial) = irreps(&group(name)).remove(0);
        assert_eq!(trivial.n(), 1);
        let z = full_center_oracle(&trivial).unwrap();
        assert_eq!(z.object().dim(0), 1);
        assert_eq!(unit_hom_dim(z.object()), 1);
    }
}

#[test]
fn center_pairings() {
    let full = |g: &str, r: &str| full_center_oracle(&irrep(g, r)).unwrap().object().clone();
    let t = center_tensor(&full_center_oracle(&irrep("G1", "𝟙_c").opposite()).unwrap().object().clone(), &{
        full_center_oracle(&irrep("G1", "𝟙").opposite()).unwrap().object().clone()
    })
    .unwrap();
    assert_eq!(unit_hom_dim(&t), 1);
    let z = full("grp(Z2)", "𝟙");
    assert_eq!(unit_hom_dim(&center_tensor(&z, &z).unwrap()), 2);
    assert_eq!(unit_hom_dim(&center_tensor(&full("G1", "𝟙"), &full("G1", "S")).unwrap()), 0);
    let other = psi_transform(&chi(&irrep("G2", "𝟙")));
    assert_eq!(center_tensor(&z, &other), Err(CenterError::AmbientMismatch));
}

#[test]
fn pairings_match_inner_products() {
    for name in ["G1", "G2", "BA(Z3)", "grp(S3)"] {
        let reps = irreps(&group(name));
        for (_, a) in &reps {
            for (_, b) in &reps {
                let t = center_tensor(&psi_transform(&chi(a)), &psi_transform(&chi(b))).unwrap();
                assert!(validate_center(&t).is_valid());
                assert_eq!(unit_hom_dim(&t), inner_product(&chi(a), &chi(b)).unwrap().dim);
            }
        }
    }
}

#[test]
fn lagrangian_examples() {
    let unit = character_algebra(&irrep("G1", "𝟙")).unwrap();
    assert!(check_lagrangian(&unit).all_pass());
    let t = character_algebra(&irrep("G2", "T")).unwrap();
    let report = check_lagrangian(&t);
    assert!(report.all_pass(), "{:?}", report.report.violations);
    assert_eq!(t.object().dims(), vec![2, 0]);
    let two = unit.direct_sum(&unit).unwrap();
    let report = check_lagrangian(&two);
    assert!(!report.connectedness);
    assert_eq!(report.connected_dim, 2);
    assert_eq!(report.report.find("connectedness").unwrap().witness, vec![2]);
    assert!(report.unit && report.associativity && report.commutativity && report.separability);
}

/// Replaces one structure constant and expects the named law to fail.
fn corrupt(a: &AlgebraStructure, h: usize, k: usize, r: usize, c: usize, v: Cyclotomic) -> AlgebraStructure {
    let n = a.group().order();
    let mult: Vec<Matrix> = (0..n * n)
        .map(|i| {
            let mut m = a.mult(i / n, i % n).clone();
            if (i / n, i % n) == (h, k) {
                m.set(r, c, v.clone());
            }
            m
        })
        .collect();
    AlgebraStructure::new(a.object().clone(), a.unit().to_vec(), mult).unwrap()
}

#[test]
fn corrupted_algebras_are_rejected() {
    let s = character_algebra(&irrep("grp(Z3)", "𝟙")).unwrap();
    let bad = corrupt(&s, 1, 2, 0, 0, Cyclotomic::zeta(3, 1));
    let report = check_lagrangian(&bad);
    assert!(!report.associativity && !report.commutativity);
    assert!(report.report.find("commutativity").is_some());

    let cyc = character_algebra(&irrep("G1", "𝟙_c")).unwrap();
    let bad = corrupt(&cyc, 0, 0, 0, 0, int(2));
    let report = check_lagrangian(&bad);
    assert!(!report.unit);
    assert_eq!(report.report.find("unit").unwrap().witness, vec![0, 0]);
}

#[test]
fn invalid_reps_are_rejected() {
    let s = irrep("G1", "S");
    let bad = s.with_cochain_entry(1, 1, 0, Cyclotomic::zeta(3, 1));
    assert!(matches!(full_center_oracle(&bad), Err(CenterError::InvalidRep(_))));
    assert!(character_algebra(&bad).is_err());
}
