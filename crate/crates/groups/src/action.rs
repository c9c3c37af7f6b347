use crate::{AbelianGroup, FiniteGroup};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("action table has {rows} rows, expected {expected}")]
    Rows { rows: usize, expected: usize },
    #[error("row {g} has {len} entries, expected {expected}")]
    RowLength { g: usize, len: usize, expected: usize },
    #[error("{g} acts on {a} with out-of-range value {value}")]
    OutOfRange { g: usize, a: usize, value: usize },
    #[error("{g} is not injective: {a} and {b} have the same image")]
    NotInjective { g: usize, a: usize, b: usize },
    #[error("{g} is not additive at ({a}, {b})")]
    NotAdditive { g: usize, a: usize, b: usize },
    #[error("identity moves {a}")]
    IdentityMoves { a: usize },
    #[error("not a homomorphism: ({g}{h}) and {g}({h}) differ on {a}")]
    NotHomomorphism { g: usize, h: usize, a: usize },
}

/// A validated action of a finite group on an abelian group by automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    perms: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn trivial(g: &FiniteGroup, a: &AbelianGroup) -> Self {
        GroupAction { perms: vec![a.elements().collect(); g.order()] }
    }

    /// g▷a
    pub fn apply(&self, g: usize, a: usize) -> usize {
        self.perms[g][a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &x)| i == x))
    }
}

pub fn validate_action(g: &FiniteGroup, a: &AbelianGroup, table: Vec<Vec<usize>>) -> Result<GroupAction, ActionError> {
    let (n, m) = (g.order(), a.order());
    if table.len() != n {
        return Err(ActionError::Rows { rows: table.len(), expected: n });
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != m {
            return Err(ActionError::RowLength { g: x, len: row.len(), expected: m });
        }
        for (p, &v) in row.iter().enumerate() {
            if v >= m {
                return Err(ActionError::OutOfRange { g: x, a: p, value: v });
            }
        }
        let mut first = vec![None; m];
        for (p, &v) in row.iter().enumerate() {
            if let Some(q) = first[v] {
                return Err(ActionError::NotInjective { g: x, a: q, b: p });
            }
            first[v] = Some(p);
        }
        for p in 0..m {
            for q in 0..m {
                if row[a.add(p, q)] != a.add(row[p], row[q]) {
                    return Err(ActionError::NotAdditive { g: x, a: p, b: q });
                }
            }
        }
    }
    if let Some(p) = (0..m).find(|&p| table[g.identity()][p] != p) {
        return Err(ActionError::IdentityMoves { a: p });
    }
    for x in 0..n {
        for y in 0..n {
            for p in 0..m {
                if table[g.mul(x, y)][p] != table[x][table[y][p]] {
                    return Err(ActionError::NotHomomorphism { g: x, h: y, a: p });
                }
            }
        }
    }
    Ok(GroupAction { perms: table })
}
