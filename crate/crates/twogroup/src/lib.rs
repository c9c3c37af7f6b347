//! Skeletal finite 2-groups.
//!
//! A finite 2-group is stored by its classification data: a finite group
//! `pi1` of object classes, an abelian group `pi2` of unit automorphisms, an
//! action of `pi1` on `pi2`, and a normalized 3-cocycle `alpha`. Objects are
//! `pi1` elements; every endomorphism set is identified with `pi2` (identity
//! morphism ↔ 0), and there are no morphisms between distinct objects.
//!
//! All sign and orientation conventions for the coherence data live in
//! [`coherence`].

mod catalogue;
pub mod coherence;
mod report;
mod spec;

use twochar_groups::{validate_action, AbelianGroup, ActionError, FiniteGroup, GroupAction, GroupError};

pub use catalogue::{builtin_names, builtin_two_group, normalize_name};
pub use coherence::Tree;
pub use report::{Report, Violation};
pub use spec::{AlphaSpec, Pi2Spec, TwoGroupSpec};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum TwoGroupError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("pi2 factor orders must be positive")]
    BadPi2,
    #[error("alpha entry {0:?} is out of range")]
    AlphaRange([usize; 4]),
    #[error("alpha is not normalized at ({g}, {h}, {k})")]
    NotNormalized { g: usize, h: usize, k: usize },
    #[error("cocycle identity fails at ({g}, {h}, {k}, {l})")]
    CocycleViolation { g: usize, h: usize, k: usize, l: usize },
    #[error("scalar order {order} is not a multiple of the pi2 exponent {exponent}")]
    ScalarOrder { order: u32, exponent: u32 },
    #[error("no duality data solves the zig-zag equations at {0}")]
    NoDuality(usize),
    #[error("unknown 2-group {0:?}")]
    Unknown(String),
}

/// α: π₁³ → π₂, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeCocycle {
    n: usize,
    table: Vec<usize>,
}

impl ThreeCocycle {
    pub fn zero(n: usize) -> Self {
        ThreeCocycle { n, table: vec![0; n * n * n] }
    }

    /// Sparse entries (g, h, k, a); everything else is 0.
    pub fn from_entries(n: usize, m: usize, entries: &[[usize; 4]]) -> Result<Self, TwoGroupError> {
        let mut out = Self::zero(n);
        for e in entries {
            if e[..3].iter().any(|&x| x >= n) || e[3] >= m {
                return Err(TwoGroupError::AlphaRange(*e));
            }
            out.table[(e[0] * n + e[1]) * n + e[2]] = e[3];
        }
        Ok(out)
    }

    pub fn get(&self, g: usize, h: usize, k: usize) -> usize {
        self.table[(g * self.n + h) * self.n + k]
    }

    /// Nonzero entries in lexicographic order.
    pub fn entries(&self) -> Vec<[usize; 4]> {
        let n = self.n;
        (0..self.table.len())
            .filter(|&i| self.table[i] != 0)
            .map(|i| [i / (n * n), (i / n) % n, i % n, self.table[i]])
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&a| a == 0)
    }
}

/// Evaluation and coevaluation scalars presenting g⁻¹ as the dual of g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityData {
    pub ev: Vec<usize>,
    pub coev: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTwoGroup {
    pi1: FiniteGroup,
    pi2: AbelianGroup,
    action: GroupAction,
    alpha: ThreeCocycle,
    scalar_order: u32,
    duality: DualityData,
}

/// Every cocycle-identity failure of `alpha`, plus normalization failures.
pub fn check_cocycle(pi1: &FiniteGroup, pi2: &AbelianGroup, action: &GroupAction, alpha: &ThreeCocycle) -> Report {
    let mut report = Report::default();
    let n = pi1.order();
    let e = pi1.identity();
    for g in 0..n {
        for h in 0..n {
            report.checked += 3;
            for (w, v) in [([e, g, h], alpha.get(e, g, h)), ([g, e, h], alpha.get(g, e, h)), ([g, h, e], alpha.get(g, h, e))] {
                if v != 0 {
                    report.push("normalization", w.to_vec(), format!("alpha = {v}"));
                }
            }
        }
    }
    for g in 0..n {
        for h in 0..n {
            let gh = pi1.mul(g, h);
            for k in 0..n {
                let hk = pi1.mul(h, k);
                for l in 0..n {
                    report.checked += 1;
                    let kl = pi1.mul(k, l);
                    let lhs = pi2.sum([
                        action.apply(g, alpha.get(h, k, l)),
                        pi2.neg(alpha.get(gh, k, l)),
                        alpha.get(g, hk, l),
                        pi2.neg(alpha.get(g, h, kl)),
                        alpha.get(g, h, k),
                    ]);
                    if lhs != 0 {
                        report.push("cocycle", vec![g, h, k, l], format!("coboundary = {lhs}"));
                    }
                }
            }
        }
    }
    report
}

impl FiniteTwoGroup {
    /// Validates the data exhaustively and solves the duality scalars.
    /// `scalar_order` defaults to the exponent of `pi2`.
    pub fn new(
        pi1: FiniteGroup,
        pi2: AbelianGroup,
        action_table: Vec<Vec<usize>>,
        alpha: ThreeCocycle,
        scalar_order: Option<u32>,
    ) -> Result<Self, TwoGroupError> {
        let action = validate_action(&pi1, &pi2, action_table)?;
        let report = check_cocycle(&pi1, &pi2, &action, &alpha);
        if let Some(v) = report.violations.first() {
            let w = &v.witness;
            return Err(if v.law == "normalization" {
                TwoGroupError::NotNormalized { g: w[0], h: w[1], k: w[2] }
            } else {
                TwoGroupError::CocycleViolation { g: w[0], h: w[1], k: w[2], l: w[3] }
            });
        }
        let exponent = pi2.exponent();
        let order = scalar_order.unwrap_or(exponent);
        if order == 0 || order % exponent != 0 {
            return Err(TwoGroupError::ScalarOrder { order, exponent });
        }
        let mut out = FiniteTwoGroup {
            pi1,
            pi2,
            action,
            alpha,
            scalar_order: order,
            duality: DualityData { ev: Vec::new(), coev: Vec::new() },
        };
        out.duality = out.solve_duality()?;
        Ok(out)
    }

    /// The ordinary-group case: trivial π₂ and α.
    pub fn from_group(pi1: FiniteGroup, scalar_order: Option<u32>) -> Result<Self, TwoGroupError> {
        let n = pi1.order();
        let pi2 = AbelianGroup::trivial();
        Self::new(pi1, pi2, vec![vec![0]; n], ThreeCocycle::zero(n), scalar_order)
    }

    /// π₁ trivial, π₂ = A.
    pub fn delooping(a: AbelianGroup) -> Result<Self, TwoGroupError> {
        let table = vec![a.elements().collect()];
        Self::new(FiniteGroup::cyclic(1)?, a, table, ThreeCocycle::zero(1), None)
    }

    fn solve_duality(&self) -> Result<DualityData, TwoGroupError> {
        let (mut ev, mut coev) = (Vec::new(), Vec::new());
        for g in self.pi1.elements() {
            let (e, c) = self
                .pi2
                .elements()
                .flat_map(|e| self.pi2.elements().map(move |c| (e, c)))
                .find(|&(e, c)| self.zigzag_defects(g, e, c) == (0, 0))
                .ok_or(TwoGroupError::NoDuality(g))?;
            ev.push(e);
            coev.push(c);
        }
        Ok(DualityData { ev, coev })
    }

    /// The two zig-zag composites minus the identity, as elements of π₂.
    /// Both vanish exactly when (ev, coev) present g⁻¹ as a dual of g.
    pub fn zigzag_defects(&self, g: usize, ev: usize, coev: usize) -> (usize, usize) {
        let gi = self.inv(g);
        let a = &self.pi2;
        let first = a.sum([coev, a.neg(self.alpha(g, gi, g)), self.act(g, ev)]);
        let second = a.sum([self.act(gi, coev), self.alpha(gi, g, gi), ev]);
        (first, second)
    }

    pub fn check_duality(&self) -> Report {
        let mut report = Report::default();
        for g in self.pi1.elements() {
            report.checked += 1;
            let d = self.zigzag_defects(g, self.ev(g), self.coev(g));
            if d != (0, 0) {
                report.push("zig-zag", vec![g], format!("defects {d:?}"));
            }
        }
        report
    }

    pub fn pi1(&self) -> &FiniteGroup {
        &self.pi1
    }

    pub fn pi2(&self) -> &AbelianGroup {
        &self.pi2
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn cocycle(&self) -> &ThreeCocycle {
        &self.alpha
    }

    pub fn duality(&self) -> &DualityData {
        &self.duality
    }

    pub fn scalar_order(&self) -> u32 {
        self.scalar_order
    }

    pub fn alpha(&self, g: usize, h: usize, k: usize) -> usize {
        self.alpha.get(g, h, k)
    }

    pub fn ev(&self, g: usize) -> usize {
        self.duality.ev[g]
    }

    pub fn coev(&self, g: usize) -> usize {
        self.duality.coev[g]
    }

    /// g▷a
    pub fn act(&self, g: usize, a: usize) -> usize {
        self.action.apply(g, a)
    }

    /// Alias of [`FiniteTwoGroup::act`], the conjugation g ⊗ a ⊗ g*.
    pub fn conjugate_morphism(&self, g: usize, a: usize) -> usize {
        self.act(g, a)
    }

    /// g x g⁻¹
    pub fn conjugate_object(&self, g: usize, x: usize) -> usize {
        self.pi1.conj(g, x)
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.pi1.mul(g, h)
    }

    pub fn inv(&self, g: usize) -> usize {
        self.pi1.inv(g)
    }

    pub fn identity(&self) -> usize {
        self.pi1.identity()
    }

    pub fn order(&self) -> usize {
        self.pi1.order()
    }

    /// Product of a word of π₁ elements.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity(), |acc, &x| self.mul(acc, x))
    }

    /// Commuting pairs (g, h), lexicographic.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).filter(|&(g, h)| self.pi1.commute(g, h)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duality_scalars_of_g2() {
        let g2 = builtin_two_group("G2").unwrap();
        assert_eq!(g2.duality().ev, vec![0, 0]);
        assert_eq!(g2.duality().coev, vec![0, 1]);
        assert!(g2.check_duality().is_valid());
    }

    #[test]
    fn rejects_non_normalized() {
        let pi1 = FiniteGroup::cyclic(2).unwrap();
        let pi2 = AbelianGroup::cyclic(2).unwrap();
        let alpha = ThreeCocycle::from_entries(2, 2, &[[0, 1, 1, 1]]).unwrap();
        let err = FiniteTwoGroup::new(pi1, pi2, vec![vec![0, 1], vec![0, 1]], alpha, None).unwrap_err();
        assert!(matches!(err, TwoGroupError::NotNormalized { .. }));
    }

    #[test]
    fn rejects_cocycle_violation_with_witness() {
        // a single nonzero entry off the G2 pattern on Z2 × Z2 is not closed
        let pi1 = FiniteGroup::builtin("Z2xZ2").unwrap();
        let pi2 = AbelianGroup::cyclic(2).unwrap();
        let alpha = ThreeCocycle::from_entries(4, 2, &[[1, 2, 3, 1]]).unwrap();
        let act = vec![vec![0, 1]; 4];
        let err = FiniteTwoGroup::new(pi1, pi2, act, alpha, None).unwrap_err();
        assert!(matches!(err, TwoGroupError::CocycleViolation { .. }));
    }

    #[test]
    fn scalar_order_must_cover_pi2() {
        let err = FiniteTwoGroup::delooping(AbelianGroup::cyclic(3).unwrap())
            .and_then(|g| FiniteTwoGroup::new(g.pi1.clone(), g.pi2.clone(), g.action.table().to_vec(), g.alpha.clone(), Some(2)))
            .unwrap_err();
        assert_eq!(err, TwoGroupError::ScalarOrder { order: 2, exponent: 3 });
    }
}
