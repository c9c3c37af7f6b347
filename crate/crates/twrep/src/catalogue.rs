use std::sync::Arc;

use twochar_scalars::Cyclotomic;
use twochar_twogroup::{builtin_two_group, FiniteTwoGroup};

use crate::{validate_rep, MonomialTwoRep, RepError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRep {
    pub name: String,
    pub rep: MonomialTwoRep,
}

fn named(name: impl Into<String>, rep: MonomialTwoRep) -> NamedRep {
    NamedRep { name: name.into(), rep }
}

/// Irreducibles of a catalogue 2-group, recognized from its data: the two
/// worked examples `G1` and `G2`, any 2-group with trivial π₁ (one
/// `Vect^ρ` per character ρ), and any 2-group with trivial π₂ and α (one
/// induced rep with trivial twist per conjugacy class of subgroups,
/// largest subgroup first).
pub fn builtin_irreps(group: &Arc<FiniteTwoGroup>) -> Result<Vec<NamedRep>, RepError> {
    let swap = || vec![vec![0, 1], vec![1, 0]];
    let pi2 = group.pi2();
    let is = |name: &str| builtin_two_group(name).is_ok_and(|g| g == **group);
    let trivial = named("𝟙", MonomialTwoRep::trivial(group.clone()));
    let ones = |n: usize| vec![vec![Cyclotomic::one(); n]; pi2.order()];
    if is("G1") {
        let cat = MonomialTwoRep::with_trivial_cochain(group.clone(), swap(), &ones(2))?;
        let lambda: Vec<Vec<Cyclotomic>> =
            pi2.elements().map(|a| vec![Cyclotomic::zeta(3, a as i64), Cyclotomic::zeta(3, 2 * a as i64)]).collect();
        let s = MonomialTwoRep::with_trivial_cochain(group.clone(), swap(), &lambda)?;
        return Ok(vec![trivial, named("𝟙_c", cat), named("S", s)]);
    }
    if is("G2") {
        let cat = MonomialTwoRep::with_trivial_cochain(group.clone(), swap(), &ones(2))?;
        let lambda: Vec<Vec<Cyclotomic>> = pi2.elements().map(|a| vec![Cyclotomic::zeta(2, a as i64); 2]).collect();
        let t = search_cochain(group, swap(), &lambda)?;
        return Ok(vec![trivial, named("𝟙_c", cat), named("T", t)]);
    }
    if group.order() == 1 {
        return pi2
            .elements()
            .map(|rho| {
                let lambda: Vec<Vec<Cyclotomic>> = pi2.elements().map(|a| vec![pi2.char_value(rho, a)]).collect();
                let label = match pi2.tuple(rho).as_slice() {
                    [k] => k.to_string(),
                    t => format!("({})", t.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
                };
                Ok(named(format!("Vect^ρ{label}"), MonomialTwoRep::with_trivial_cochain(group.clone(), vec![vec![0]], &lambda)?))
            })
            .collect();
    }
    if pi2.order() == 1 && group.cocycle().is_zero() {
        let mut subgroups = group.pi1().subgroup_class_representatives();
        subgroups.reverse();
        let mut out = Vec::new();
        for h in &subgroups {
            let rep = induced_rep(group, h, &|_, _| Cyclotomic::one())?;
            let name = if h.len() == group.order() {
                "𝟙".to_string()
            } else {
                let same = subgroups.iter().filter(|k| k.len() == h.len()).count();
                let pos = subgroups.iter().filter(|k| k.len() == h.len()).position(|k| k == h).unwrap();
                if same == 1 {
                    format!("k[G/H{}]", h.len())
                } else {
                    format!("k[G/H{}.{}]", h.len(), pos + 1)
                }
            };
            out.push(named(name, rep));
        }
        return Ok(out);
    }
    Err(RepError::Unknown)
}

/// Induction from a subgroup `h` with a twist β: the permutation action on
/// left cosets, indexed by their least elements in increasing order, with
/// cochain `c(g,k,i) = β(t(g,σ_k i), t(k,i))⁻¹` where
/// `t(g,i) = r_{σ_g i}⁻¹ g r_i ∈ H`.
pub fn induced_rep(
    group: &Arc<FiniteTwoGroup>,
    h: &[usize],
    beta: &dyn Fn(usize, usize) -> Cyclotomic,
) -> Result<MonomialTwoRep, RepError> {
    if group.pi2().order() != 1 || !group.cocycle().is_zero() {
        return Err(RepError::NotOrdinary);
    }
    let g = group.pi1();
    if !g.is_subgroup(h) {
        return Err(RepError::NotSubgroup(h.to_vec()));
    }
    let e = g.identity();
    for &x in h {
        if !beta(e, x).is_one() || !beta(x, e).is_one() {
            return Err(RepError::NotCocycle(vec![e, x]));
        }
        for &y in h {
            if beta(x, y).is_zero() {
                return Err(RepError::NotCocycle(vec![x, y]));
            }
            for &z in h {
                let lhs = &beta(x, y) * &beta(g.mul(x, y), z);
                let rhs = &beta(x, g.mul(y, z)) * &beta(y, z);
                if lhs != rhs {
                    return Err(RepError::NotCocycle(vec![x, y, z]));
                }
            }
        }
    }
    let mut reps: Vec<usize> = g.elements().map(|x| h.iter().map(|&y| g.mul(x, y)).min().unwrap()).collect();
    reps.sort_unstable();
    reps.dedup();
    let n = reps.len();
    let coset_of = |x: usize| {
        let r = h.iter().map(|&y| g.mul(x, y)).min().unwrap();
        reps.binary_search(&r).unwrap()
    };
    let perm: Vec<Vec<usize>> = g.elements().map(|x| (0..n).map(|i| coset_of(g.mul(x, reps[i]))).collect()).collect();
    let t = |x: usize, i: usize| g.mul(g.inv(reps[perm[x][i]]), g.mul(x, reps[i]));
    let ng = g.order();
    let mut c = Vec::with_capacity(ng * ng * n);
    for x in 0..ng {
        for k in 0..ng {
            for i in 0..n {
                let value = beta(t(x, perm[k][i]), t(k, i));
                c.push(value.inv().map_err(|_| RepError::NotCocycle(vec![x, k]))?);
            }
        }
    }
    MonomialTwoRep::from_eigenvalues(group.clone(), perm, c, &[vec![Cyclotomic::one(); n]])
}

/// First cochain, in lexicographic order of root exponents, that makes the
/// given permutation and unit-object eigenvalues a valid representation.
/// Entries with an identity argument are fixed to 1; the others range over
/// the N-th roots of unity, N the 2-group's scalar order.
pub fn search_cochain(
    group: &Arc<FiniteTwoGroup>,
    perm: Vec<Vec<usize>>,
    lambda: &[Vec<Cyclotomic>],
) -> Result<MonomialTwoRep, RepError> {
    let n = perm.first().map_or(0, Vec::len);
    let ng = group.order();
    let e = group.identity();
    let order = group.scalar_order();
    let free: Vec<usize> = (0..ng * ng * n)
        .filter(|&idx| {
            let (x, y) = (idx / (ng * n), (idx / n) % ng);
            x != e && y != e
        })
        .collect();
    let total = (order as u64).checked_pow(free.len() as u32).filter(|&t| t <= 1 << 20).ok_or(RepError::NoCochain)?;
    let roots: Vec<Cyclotomic> = (0..order).map(|k| Cyclotomic::zeta(order, k as i64)).collect();
    for code in 0..total {
        let mut c = vec![Cyclotomic::one(); ng * ng * n];
        let mut rest = code;
        for &idx in free.iter().rev() {
            c[idx] = roots[(rest % order as u64) as usize].clone();
            rest /= order as u64;
        }
        let rep = MonomialTwoRep::from_eigenvalues(group.clone(), perm.clone(), c, lambda)?;
        if validate_rep(&rep).is_valid() {
            return Ok(rep);
        }
    }
    Err(RepError::NoCochain)
}
