use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use twochar_scalars::Cyclotomic;
use twochar_twogroup::FiniteTwoGroup;

use crate::{MonomialTwoRep, RepError};

/// JSON form of a monomial rep. Missing permutations are the identity and
/// missing scalar entries are 1.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct RepSpec {
    pub n: usize,
    #[serde(default)]
    pub perm: BTreeMap<usize, Vec<usize>>,
    #[serde(default)]
    pub c: Vec<(usize, usize, usize, Cyclotomic)>,
    #[serde(default)]
    pub tau: Vec<(usize, usize, usize, Cyclotomic)>,
}

impl RepSpec {
    pub fn build(&self, group: &Arc<FiniteTwoGroup>) -> Result<MonomialTwoRep, RepError> {
        let (ng, m, n) = (group.order(), group.pi2().order(), self.n);
        if let Some(&g) = self.perm.keys().find(|&&g| g >= ng) {
            return Err(RepError::Shape(format!("perm given for unknown element {g}")));
        }
        let perm = (0..ng).map(|g| self.perm.get(&g).cloned().unwrap_or_else(|| (0..n).collect())).collect();
        let mut c = vec![Cyclotomic::one(); ng * ng * n];
        for (g, h, i, v) in &self.c {
            if *g >= ng || *h >= ng || *i >= n {
                return Err(RepError::Shape(format!("c entry ({g}, {h}, {i}) out of range")));
            }
            c[(g * ng + h) * n + i] = v.clone();
        }
        let mut tau = vec![Cyclotomic::one(); ng * m * n];
        for (g, a, i, v) in &self.tau {
            if *g >= ng || *a >= m || *i >= n {
                return Err(RepError::Shape(format!("tau entry ({g}, {a}, {i}) out of range")));
            }
            tau[(g * m + a) * n + i] = v.clone();
        }
        MonomialTwoRep::new(group.clone(), n, perm, c, tau)
    }
}

impl MonomialTwoRep {
    /// Normalized form: every permutation, non-unit scalars only, lexicographic.
    pub fn to_spec(&self) -> RepSpec {
        let g2 = self.group();
        let (ng, m, n) = (g2.order(), g2.pi2().order(), self.n());
        let perm = (0..ng).map(|g| (g, self.perm()[g].clone())).collect();
        let mut c = Vec::new();
        let mut tau = Vec::new();
        for g in 0..ng {
            for h in 0..ng {
                for i in 0..n {
                    if !self.c(g, h, i).is_one() {
                        c.push((g, h, i, self.c(g, h, i).clone()));
                    }
                }
            }
            for a in 0..m {
                for i in 0..n {
                    if !self.tau(g, a, i).is_one() {
                        tau.push((g, a, i, self.tau(g, a, i).clone()));
                    }
                }
            }
        }
        RepSpec { n, perm, c, tau }
    }
}
