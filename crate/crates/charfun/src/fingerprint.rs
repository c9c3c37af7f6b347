use std::sync::Arc;

use num_traits::Signed;
use rayon::prelude::*;
use twochar_scalars::{Cyclotomic, Matrix};
use twochar_twogroup::FiniteTwoGroup;
use twochar_twrep::{builtin_irreps, NamedRep};

use crate::{canonical_joint_inputs, joint_character_of, two_character, CharError, ClassFunctor};

/// Multiplicity of each (class representative, character) pair, ordered by
/// representative then character index; the extended form appends the
/// joint character at every canonical joint input.
pub fn fingerprint(f: &ClassFunctor, extended: bool) -> Vec<Cyclotomic> {
    let g2 = f.group();
    let dual = g2.pi2().order();
    let mut out = Vec::new();
    for class in g2.pi1().conjugacy_classes() {
        let counts = f.value(class.representative).multiplicities(dual);
        out.extend(counts.into_iter().map(|c| Cyclotomic::from_integer(c as i64)));
    }
    if extended {
        for j in canonical_joint_inputs(g2) {
            out.push(joint_character_of(f, j).expect("canonical inputs commute"));
        }
    }
    out
}

/// Nonnegative integer multiplicities of `f` in terms of `basis`, solved
/// exactly from fingerprints.
pub fn decompose(f: &ClassFunctor, basis: &[ClassFunctor], extended: bool) -> Result<Vec<u64>, CharError> {
    for b in basis {
        f.same_ambient(b)?;
    }
    let target = fingerprint(f, extended);
    let columns: Vec<Vec<Cyclotomic>> = basis.iter().map(|b| fingerprint(b, extended)).collect();
    let rows: Vec<Vec<Cyclotomic>> =
        (0..target.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    solve_nonnegative(rows, basis.len(), &target, extended)
}

fn solve_nonnegative(rows: Vec<Vec<Cyclotomic>>, unknowns: usize, rhs: &[Cyclotomic], extended: bool) -> Result<Vec<u64>, CharError> {
    let m = if unknowns == 0 { Matrix::zeros(rhs.len(), 0) } else { Matrix::from_rows(rows)? };
    if m.rank() < unknowns {
        return Err(CharError::DegenerateBasis { extended });
    }
    let x = m.solve(rhs).ok_or_else(|| CharError::NotInSpan("no solution".into()))?;
    x.iter().map(nonnegative_integer).collect()
}

fn nonnegative_integer(v: &Cyclotomic) -> Result<u64, CharError> {
    match v.as_rational() {
        Some(q) if q.is_integer() && !q.is_negative() => Ok(q.to_integer().try_into().unwrap_or(u64::MAX)),
        _ => Err(CharError::NotInSpan(format!("coefficient {v} is not a nonnegative integer"))),
    }
}

/// Like [`decompose`], but when the basis fingerprints are dependent it
/// enumerates the free multiplicities (each bounded by the dimension at the
/// identity) and accepts the result only if exactly one nonnegative integer
/// solution exists.
pub fn decompose_bounded(f: &ClassFunctor, basis: &[ClassFunctor], extended: bool) -> Result<Vec<u64>, CharError> {
    match decompose(f, basis, extended) {
        Err(CharError::DegenerateBasis { .. }) => {}
        other => return other,
    }
    let e = f.group().identity();
    let target = fingerprint(f, extended);
    let columns: Vec<Vec<Cyclotomic>> = basis.iter().map(|b| fingerprint(b, extended)).collect();
    let k = basis.len();
    let augmented: Vec<Vec<Cyclotomic>> = (0..target.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).chain(std::iter::once(target[r].clone())).collect())
        .collect();
    let (reduced, pivots) = Matrix::from_rows(augmented)?.rref();
    if pivots.contains(&k) {
        return Err(CharError::NotInSpan("fingerprint equations are inconsistent".into()));
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    let bounds: Vec<u64> = free.iter().map(|&c| (f.dim(e) / basis[c].dim(e).max(1)) as u64).collect();
    let mut solutions = Vec::new();
    let mut t = vec![0u64; free.len()];
    'outer: loop {
        let mut m = vec![0u64; k];
        for (&c, &v) in free.iter().zip(&t) {
            m[c] = v;
        }
        let mut ok = true;
        for (row, &p) in pivots.iter().enumerate() {
            let mut v = reduced.get(row, k).clone();
            for (&c, &tv) in free.iter().zip(&t) {
                v -= &(reduced.get(row, c) * &Cyclotomic::from_integer(tv as i64));
            }
            match nonnegative_integer(&v) {
                Ok(x) => m[p] = x,
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            solutions.push(m);
        }
        for i in 0..t.len() {
            if t[i] < bounds[i] {
                t[i] += 1;
                continue 'outer;
            }
            t[i] = 0;
        }
        break;
    }
    match solutions.len() {
        0 => Err(CharError::NotInSpan("no nonnegative integer solution".into())),
        1 => Ok(solutions.pop().expect("one solution")),
        n => Err(CharError::Ambiguous(n)),
    }
}

/// Fusion rules of the catalogue irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    pub names: Vec<String>,
    /// `cells[i][j]` = multiplicities of each irrep in `irrep_i ⊠ irrep_j`.
    pub cells: Vec<Vec<Vec<u64>>>,
    /// Whether joint characters were needed to separate the basis.
    pub extended: bool,
}

/// Decomposes every ordered Deligne product of catalogue irreducibles by
/// basic fingerprints, or extended ones when the basic ones are dependent.
pub fn fusion_table(group: &Arc<FiniteTwoGroup>, parallel: bool) -> Result<FusionTable, CharError> {
    let irreps: Vec<NamedRep> = builtin_irreps(group)?;
    let basis: Vec<ClassFunctor> = irreps.iter().map(|r| two_character(&r.rep)).collect::<Result<_, _>>()?;
    let extended = match decompose(&basis[0], &basis, false) {
        Err(CharError::DegenerateBasis { .. }) => true,
        other => {
            other?;
            false
        }
    };
    let n = irreps.len();
    let cell = |idx: usize| -> Result<Vec<u64>, CharError> {
        let (i, j) = (idx / n, idx % n);
        let product = two_character(&irreps[i].rep.deligne_tensor(&irreps[j].rep)?)?;
        decompose_bounded(&product, &basis, extended)
    };
    let flat: Vec<Vec<u64>> = if parallel {
        (0..n * n).into_par_iter().map(cell).collect::<Result<_, _>>()?
    } else {
        (0..n * n).map(cell).collect::<Result<_, _>>()?
    };
    let cells = flat.chunks(n).map(<[Vec<u64>]>::to_vec).collect();
    Ok(FusionTable { names: irreps.into_iter().map(|r| r.name).collect(), cells, extended })
}

impl FusionTable {
    /// Lines like `S ⊠ S = 𝟙_c + S` or `𝟙_c ⊠ S = 2·S`.
    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let terms: Vec<String> = cell
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(k, &m)| if m == 1 { self.names[k].clone() } else { format!("{m}·{}", self.names[k]) })
                    .collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                out.push(format!("{} ⊠ {} = {}", self.names[i], self.names[j], rhs));
            }
        }
        out
    }
}
