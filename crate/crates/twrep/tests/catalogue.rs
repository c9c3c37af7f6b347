use std::sync::Arc;

use twochar_scalars::Cyclotomic;
use twochar_twogroup::{builtin_names, builtin_two_group};
use twochar_twrep::{builtin_irreps, induced_rep, validate_rep, MonomialTwoRep, RepSpec};

fn group(name: &str) -> Arc<twochar_twogroup::FiniteTwoGroup> {
    Arc::new(builtin_two_group(name).unwrap())
}

fn irrep(name: &str, rep: &str) -> MonomialTwoRep {
    builtin_irreps(&group(name)).unwrap().into_iter().find(|r| r.name == rep).unwrap().rep
}

#[test]
fn every_catalogue_irrep_validates() {
    for name in builtin_names() {
        for r in builtin_irreps(&group(name)).unwrap() {
            let report = validate_rep(&r.rep);
            assert!(report.is_valid(), "{name} {}: {:?}", r.name, report.violations);
        }
    }
}

#[test]
fn first_example_sizes() {
    let irreps = builtin_irreps(&group("G1")).unwrap();
    let names: Vec<&str> = irreps.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["𝟙", "𝟙_c", "S"]);
    assert_eq!(irreps.iter().map(|r| r.rep.n()).collect::<Vec<_>>(), [1, 2, 2]);
}

#[test]
fn s_eigenvalues_and_its_invalid_twin() {
    let s = irrep("G1", "S");
    assert_eq!(s.eigenvalue(1, 0), &Cyclotomic::zeta(3, 1));
    assert_eq!(s.eigenvalue(1, 1), &Cyclotomic::zeta(3, 2));
    // equal eigenvalues on both simples are incompatible with the swap
    let g = group("G1");
    let w = Cyclotomic::zeta(3, 1);
    let lambda = vec![vec![Cyclotomic::one(); 2], vec![w.clone(), w.clone()], vec![&w * &w, &w * &w]];
    let bad = MonomialTwoRep::with_trivial_cochain(g, vec![vec![0, 1], vec![1, 0]], &lambda).unwrap();
    let report = validate_rep(&bad);
    assert!(report.find("interchange").is_some());
}

#[test]
fn t_acts_by_minus_one_and_has_nontrivial_cochain() {
    let t = irrep("G2", "T");
    let minus = Cyclotomic::from_integer(-1);
    assert_eq!(t.eigenvalue(1, 0), &minus);
    assert_eq!(t.eigenvalue(1, 1), &minus);
    // a trivial cochain cannot absorb the nontrivial associator
    let flat = t.with_cochain_entry(1, 1, 0, Cyclotomic::one()).with_cochain_entry(1, 1, 1, Cyclotomic::one());
    assert!(validate_rep(&flat).find("cocycle").is_some());
}

#[test]
fn delooping_irreps() {
    let reps = builtin_irreps(&group("BA(Z3)")).unwrap();
    assert_eq!(reps.len(), 3);
    for (rho, r) in reps.iter().enumerate() {
        assert_eq!(r.rep.n(), 1);
        for a in 0..3 {
            assert_eq!(r.rep.tau(0, a, 0), &Cyclotomic::zeta(3, (rho * a) as i64));
        }
    }
}

#[test]
fn induced_examples() {
    let g = group("grp(S3)");
    assert_eq!(induced_rep(&g, &[0, 1, 2, 3, 4, 5], &|_, _| Cyclotomic::one()).unwrap().n(), 1);
    let regular = induced_rep(&g, &[0], &|_, _| Cyclotomic::one()).unwrap();
    assert_eq!(regular.n(), 6);
    // 3 and 4 are the 3-cycles, 1 a transposition
    let z3 = induced_rep(&g, &[0, 3, 4], &|_, _| Cyclotomic::one()).unwrap();
    assert_eq!(z3.n(), 2);
    assert_eq!(z3.perm()[1], vec![1, 0]);
    assert!(induced_rep(&g, &[0, 1, 3], &|_, _| Cyclotomic::one()).is_err());
    assert_eq!(builtin_irreps(&g).unwrap().len(), 4);
}

#[test]
fn twisted_group_algebra_cochain() {
    // β((a1,a2),(b1,b2)) = ω^{a1 b2} on Z3 × Z3, induced from the whole group
    let g = Arc::new(
        twochar_twogroup::FiniteTwoGroup::from_group(twochar_groups::FiniteGroup::builtin("Z3xZ3").unwrap(), Some(3))
            .unwrap(),
    );
    let beta = |x: usize, y: usize| Cyclotomic::zeta(3, ((x / 3) * (y % 3)) as i64);
    let r = induced_rep(&g, &(0..9).collect::<Vec<_>>(), &beta).unwrap();
    assert!(validate_rep(&r).is_valid());
    assert_eq!(r.c(3, 1, 0), &Cyclotomic::zeta(3, 2));
    let bad = |x: usize, y: usize| if x == 1 && y == 1 { Cyclotomic::from_integer(-1) } else { Cyclotomic::one() };
    assert!(induced_rep(&g, &(0..9).collect::<Vec<_>>(), &bad).is_err());
}

#[test]
fn structural_examples() {
    let one = irrep("G1", "𝟙");
    let sum = one.direct_sum(&one).unwrap();
    assert_eq!(sum.n(), 2);
    assert_eq!(sum.perm()[1], vec![0, 1]);
    let s = irrep("G1", "S");
    let ss = s.deligne_tensor(&s).unwrap();
    assert_eq!(ss.n(), 4);
    let w = Cyclotomic::zeta(3, 1);
    let expected = [&w * &w, Cyclotomic::one(), Cyclotomic::one(), w.clone()];
    for (i, v) in expected.iter().enumerate() {
        assert_eq!(ss.eigenvalue(1, i), v);
    }
    let op = s.opposite();
    assert_eq!(op.eigenvalue(1, 0), &(&w * &w));
    assert_eq!(op.eigenvalue(1, 1), &w);
    assert!(s.direct_sum(&irrep("G2", "𝟙")).is_err());
}

#[test]
fn json_roundtrip_is_normalized() {
    for name in builtin_names() {
        let g = group(name);
        for r in builtin_irreps(&g).unwrap() {
            let text = serde_json::to_string(&r.rep.to_spec()).unwrap();
            let back: RepSpec = serde_json::from_str(&text).unwrap();
            let rebuilt = back.build(&g).unwrap();
            assert_eq!(rebuilt, r.rep);
            assert_eq!(serde_json::to_string(&rebuilt.to_spec()).unwrap(), text);
        }
    }
}
