use serde::Serialize;

/// One failed equation: which law, at which tuple of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// Outcome of an exhaustive check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &str, witness: Vec<usize>, detail: String) {
        self.violations.push(Violation { law: law.to_string(), witness, detail });
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }

    /// First violation of the given law.
    pub fn find(&self, law: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}
