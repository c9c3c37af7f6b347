use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use twochar_twogroup::{builtin_two_group, FiniteTwoGroup, TwoGroupSpec};
use twochar_twrep::{builtin_irreps, NamedRep, RepSpec};

use crate::CliError;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct NamedRepSpec {
    pub name: String,
    pub rep: RepSpec,
}

/// A 2-group with an optional list of named representations.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Bundle {
    pub two_group: TwoGroupSpec,
    #[serde(default)]
    pub reps: Vec<NamedRepSpec>,
}

/// Everything a command operates on.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub group: Arc<FiniteTwoGroup>,
    /// Supplied reps, or the catalogue irreducibles when none are given.
    pub reps: Vec<NamedRep>,
    /// Whether `reps` came from the built-in catalogue.
    pub catalogue: bool,
}

impl Workspace {
    pub fn builtin(name: &str) -> Result<Self, CliError> {
        let group = Arc::new(builtin_two_group(name).map_err(|e| CliError::Usage(format!("--builtin {name}: {e}")))?);
        Self::with_catalogue(group)
    }

    fn with_catalogue(group: Arc<FiniteTwoGroup>) -> Result<Self, CliError> {
        let reps = builtin_irreps(&group).unwrap_or_default();
        let catalogue = !reps.is_empty();
        Ok(Workspace { group, reps, catalogue })
    }

    /// Parses either a bare 2-group or a bundle with reps.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let bundle = if value.get("two_group").is_some() {
            serde_json::from_value::<Bundle>(value).map_err(|e| CliError::Parse(format!("bundle: {e}")))?
        } else {
            let two_group =
                serde_json::from_value(value).map_err(|e| CliError::Parse(format!("two-group: {e}")))?;
            Bundle { two_group, reps: Vec::new() }
        };
        let group = Arc::new(
            bundle.two_group.build().map_err(|e| CliError::Invalid(format!("two_group: {e}")))?,
        );
        if bundle.reps.is_empty() {
            return Self::with_catalogue(group);
        }
        let reps = bundle
            .reps
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.rep
                    .build(&group)
                    .map(|rep| NamedRep { name: r.name.clone(), rep })
                    .map_err(|e| CliError::Invalid(format!("reps[{i}] ({}): {e}", r.name)))
            })
            .collect::<Result<_, _>>()?;
        Ok(Workspace { group, reps, catalogue: false })
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Normalized bundle form, which re-ingests to the same workspace.
    pub fn to_bundle(&self) -> Bundle {
        Bundle {
            two_group: self.group.to_spec(),
            reps: self.reps.iter().map(|r| NamedRepSpec { name: r.name.clone(), rep: r.rep.to_spec() }).collect(),
        }
    }

    pub fn rep(&self, name: &str) -> Result<&NamedRep, CliError> {
        self.reps.iter().find(|r| r.name == name).ok_or_else(|| {
            let names: Vec<&str> = self.reps.iter().map(|r| r.name.as_str()).collect();
            CliError::Usage(format!("no representation named {name:?}; known: {}", names.join(", ")))
        })
    }

    pub fn require_reps(&self) -> Result<(), CliError> {
        if self.reps.is_empty() {
            Err(CliError::Usage("no representations: the 2-group is not in the catalogue and the input lists none".into()))
        } else {
            Ok(())
        }
    }
}
