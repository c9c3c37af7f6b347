#![allow(dead_code)]

use std::sync::Arc;

use twochar_charfun::{two_character, ClassFunctor};
use twochar_scalars::Cyclotomic;
use twochar_twogroup::{builtin_two_group, FiniteTwoGroup};
use twochar_twrep::{builtin_irreps, induced_rep, MonomialTwoRep};

pub fn group(name: &str) -> Arc<FiniteTwoGroup> {
    Arc::new(builtin_two_group(name).unwrap())
}

pub fn irreps(g: &Arc<FiniteTwoGroup>) -> Vec<(String, MonomialTwoRep)> {
    builtin_irreps(g).unwrap().into_iter().map(|r| (r.name, r.rep)).collect()
}

pub fn irrep(name: &str, rep: &str) -> MonomialTwoRep {
    irreps(&group(name)).into_iter().find(|(n, _)| n == rep).unwrap().1
}

pub fn chi(r: &MonomialTwoRep) -> ClassFunctor {
    two_character(r).unwrap()
}

/// grp(Z3 × Z3) with the twisted rep of the cocycle ω^{a1·b2}.
pub fn twisted_z3z3() -> MonomialTwoRep {
    let g = Arc::new(
        FiniteTwoGroup::from_group(twochar_groups::FiniteGroup::builtin("Z3xZ3").unwrap(), Some(3)).unwrap(),
    );
    let beta = |x: usize, y: usize| Cyclotomic::zeta(3, ((x / 3) * (y % 3)) as i64);
    induced_rep(&g, &(0..9).collect::<Vec<_>>(), &beta).unwrap()
}

/// Every catalogue irrep plus the twisted stress case.
pub fn all_reps() -> Vec<MonomialTwoRep> {
    let mut out: Vec<MonomialTwoRep> = twochar_twogroup::builtin_names()
        .into_iter()
        .flat_map(|n| irreps(&group(n)).into_iter().map(|(_, r)| r))
        .collect();
    out.push(twisted_z3z3());
    out
}
