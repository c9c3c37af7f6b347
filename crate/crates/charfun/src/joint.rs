use twochar_scalars::Cyclotomic;
use twochar_twogroup::FiniteTwoGroup;
use twochar_twrep::MonomialTwoRep;

use crate::{two_character, CharError, ClassFunctor};

/// A morphism `g ⊗ h → h ⊗ g` for commuting g, h, identified with `a ∈ π₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JointInput {
    pub g: usize,
    pub h: usize,
    pub a: usize,
}

impl JointInput {
    pub fn new(group: &FiniteTwoGroup, g: usize, h: usize, a: usize) -> Result<Self, CharError> {
        if !group.pi1().commute(g, h) {
            return Err(CharError::NotCommuting { g, h });
        }
        Ok(JointInput { g, h, a })
    }
}

/// Every input, lexicographic in (g, h, a).
pub fn all_joint_inputs(group: &FiniteTwoGroup) -> Vec<JointInput> {
    group
        .commuting_pairs()
        .into_iter()
        .flat_map(|(g, h)| group.pi2().elements().map(move |a| JointInput { g, h, a }))
        .collect()
}

/// Inputs whose first object is a least-index class representative.
pub fn canonical_joint_inputs(group: &FiniteTwoGroup) -> Vec<JointInput> {
    let reps: Vec<usize> = group.pi1().conjugacy_classes().iter().map(|c| c.representative).collect();
    all_joint_inputs(group).into_iter().filter(|j| reps.contains(&j.g)).collect()
}

/// Trace on `F(h)` of `ψ(g, h)` followed by the action of `a + κ(g, h)`,
/// where κ is the canonical iso `(hg)g⁻¹ → h`.
pub fn joint_character_of(f: &ClassFunctor, j: JointInput) -> Result<Cyclotomic, CharError> {
    let g2 = f.group();
    if !g2.pi1().commute(j.g, j.h) {
        return Err(CharError::NotCommuting { g: j.g, h: j.h });
    }
    let shift = g2.pi2().add(j.a, g2.cancel_right(j.g, j.h));
    Ok(f.act_on_rows(j.h, shift, f.psi(j.g, j.h)).trace())
}

/// The joint 2-character of a rep, through its class functor.
pub fn joint_character(r: &MonomialTwoRep, j: JointInput) -> Result<Cyclotomic, CharError> {
    joint_character_of(&two_character(r)?, j)
}

/// `(g, h, a) ↦ (h⁻¹, g, a − Δ(h, g))` with Δ the
/// [`modular_defect`](FiniteTwoGroup::modular_defect).
pub fn modular_s(group: &FiniteTwoGroup, j: JointInput) -> JointInput {
    let a = group.pi2().sub(j.a, group.modular_defect(j.h, j.g));
    JointInput { g: group.inv(j.h), h: j.g, a }
}

/// `(g, h, a) ↦ (g, gh, a + α(g, h, g))`.
pub fn modular_t(group: &FiniteTwoGroup, j: JointInput) -> JointInput {
    JointInput { g: j.g, h: group.mul(j.g, j.h), a: group.pi2().add(j.a, group.alpha(j.g, j.h, j.g)) }
}

/// `(g, h, a) ↦ (g⁻¹, h⁻¹, a − Δ(g, h⁻¹) − Δ(h, g))`, the input reached by
/// two S moves.
pub fn left_dual(group: &FiniteTwoGroup, j: JointInput) -> JointInput {
    let p = group.pi2();
    let a = p.sub(p.sub(j.a, group.modular_defect(j.g, group.inv(j.h))), group.modular_defect(j.h, j.g));
    JointInput { g: group.inv(j.g), h: group.inv(j.h), a }
}

/// Transport of `(g, h, a)` along conjugation by k.
pub fn conjugate_joint(group: &FiniteTwoGroup, k: usize, j: JointInput) -> JointInput {
    let p = group.pi2();
    let (g2, h2) = (group.conjugate_object(k, j.g), group.conjugate_object(k, j.h));
    let moved = group.act(k, p.add(j.a, group.cancel_right(j.g, j.h)));
    let a = p.sum([moved, group.gamma(g2, k, j.h), p.neg(group.gamma(k, j.g, j.h)), p.neg(group.cancel_right(g2, h2))]);
    JointInput { g: g2, h: h2, a }
}
