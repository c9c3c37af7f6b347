use serde::{Deserialize, Serialize};
use twochar_groups::{build_group, AbelianGroup, GroupSpec};

use crate::{FiniteTwoGroup, ThreeCocycle, TwoGroupError};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Pi2Spec {
    pub factors: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
pub struct AlphaSpec {
    #[serde(default)]
    pub entries: Vec<[usize; 4]>,
}

/// JSON form of a 2-group. A missing action is trivial; missing alpha
/// entries are 0.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TwoGroupSpec {
    pub pi1: GroupSpec,
    pub pi2: Pi2Spec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub alpha: AlphaSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar_order: Option<u32>,
}

impl TwoGroupSpec {
    pub fn build(&self) -> Result<FiniteTwoGroup, TwoGroupError> {
        let pi1 = build_group(&self.pi1)?;
        let pi2 = AbelianGroup::new(self.pi2.factors.clone()).ok_or(TwoGroupError::BadPi2)?;
        let action = self.action.clone().unwrap_or_else(|| vec![pi2.elements().collect(); pi1.order()]);
        let alpha = ThreeCocycle::from_entries(pi1.order(), pi2.order(), &self.alpha.entries)?;
        FiniteTwoGroup::new(pi1, pi2, action, alpha, self.scalar_order)
    }
}

impl FiniteTwoGroup {
    /// Normalized form: explicit table, full action, sorted nonzero alpha entries.
    pub fn to_spec(&self) -> TwoGroupSpec {
        TwoGroupSpec {
            pi1: self.pi1().to_spec(),
            pi2: Pi2Spec { factors: self.pi2().factors().to_vec() },
            action: Some(self.action().table().to_vec()),
            alpha: AlphaSpec { entries: self.cocycle().entries() },
            scalar_order: Some(self.scalar_order()),
        }
    }
}
