use twochar_groups::{AbelianGroup, FiniteGroup};

use crate::{FiniteTwoGroup, ThreeCocycle, TwoGroupError};

/// The named entries, in catalogue order.
pub fn builtin_names() -> Vec<&'static str> {
    vec!["G1", "G2", "BA(Z2)", "BA(Z3)", "grp(Z2)", "grp(Z3)", "grp(S3)"]
}

/// ASCII form of a catalogue name: subscript digits become digits and `×`
/// becomes `x`.
pub fn normalize_name(name: &str) -> String {
    name.trim()
        .chars()
        .map(|c| match c {
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
            '×' => 'x',
            _ => c,
        })
        .collect()
}

/// `G1`, `G2`, `BA(<A>)` for A a product of cyclic groups like `Z2xZ3`, and
/// `grp(<G>)` for any group known to [`FiniteGroup::builtin`].
pub fn builtin_two_group(name: &str) -> Result<FiniteTwoGroup, TwoGroupError> {
    let name = normalize_name(name);
    let unknown = || TwoGroupError::Unknown(name.clone());
    match name.as_str() {
        "G1" => {
            let pi1 = FiniteGroup::cyclic(2)?;
            let pi2 = AbelianGroup::cyclic(3).ok_or_else(unknown)?;
            FiniteTwoGroup::new(pi1, pi2, vec![vec![0, 1, 2], vec![0, 2, 1]], ThreeCocycle::zero(2), None)
        }
        "G2" => {
            let pi1 = FiniteGroup::cyclic(2)?;
            let pi2 = AbelianGroup::cyclic(2).ok_or_else(unknown)?;
            let alpha = ThreeCocycle::from_entries(2, 2, &[[1, 1, 1, 1]])?;
            FiniteTwoGroup::new(pi1, pi2, vec![vec![0, 1], vec![0, 1]], alpha, None)
        }
        _ => {
            if let Some(inner) = name.strip_prefix("BA(").and_then(|s| s.strip_suffix(')')) {
                let factors = inner
                    .split('x')
                    .map(|p| p.strip_prefix('Z').and_then(|n| n.parse::<u32>().ok()))
                    .collect::<Option<Vec<u32>>>()
                    .ok_or_else(unknown)?;
                FiniteTwoGroup::delooping(AbelianGroup::new(factors).ok_or_else(unknown)?)
            } else if let Some(inner) = name.strip_prefix("grp(").and_then(|s| s.strip_suffix(')')) {
                let g = FiniteGroup::builtin(inner).map_err(|_| unknown())?;
                FiniteTwoGroup::from_group(g, None)
            } else {
                Err(unknown())
            }
        }
    }
}
