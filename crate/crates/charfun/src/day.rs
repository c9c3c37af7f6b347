use twochar_scalars::{Cyclotomic, Matrix};

use crate::{CharError, ClassFunctor, Pi2Rep};

/// Basis vector `e_p ⊗ e_q` of `F(g k⁻¹) ⊗ G(k)` inside `(F ⊛ G)(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Summand {
    pub k: usize,
    pub p: usize,
    pub q: usize,
}

/// A Day convolution together with the basis labels of each grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DayProduct {
    pub functor: ClassFunctor,
    pub basis: Vec<Vec<Summand>>,
}

impl DayProduct {
    pub fn position(&self, g: usize, s: &Summand) -> Option<usize> {
        self.basis[g].binary_search(s).ok()
    }
}

/// Basis of each grade: pairs whose π₂-actions agree through the
/// identification `u ⊗ k → g`, i.e. `ρ_p(u▷m) = ρ_q(m)` for all m, where
/// `u = g k⁻¹`. Ordered by (k, p, q).
pub(crate) fn day_basis(f: &ClassFunctor, h: &ClassFunctor) -> Vec<Vec<Summand>> {
    let g2 = f.group();
    let n = g2.order();
    let pi2 = g2.pi2();
    (0..n)
        .map(|g| {
            let mut out = Vec::new();
            for k in 0..n {
                let u = g2.mul(g, g2.inv(k));
                for (p, &rp) in f.value(u).chars.iter().enumerate() {
                    let moved = pi2.char_precompose(rp, |m| g2.act(u, m));
                    for (q, &rq) in h.value(k).chars.iter().enumerate() {
                        if moved == rq {
                            out.push(Summand { k, p, q });
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// `(F ⊛ G)(g) = ⊕_k F(g k⁻¹) ⊗ G(k)` restricted to the balanced pairs.
/// The π₂-action is that of the first factor. Conjugation by l acts by
/// `ψ^F(l, u) ⊗ ψ^G(l, k)` twisted by the action of
/// [`day_twist`](twochar_twogroup::FiniteTwoGroup::day_twist)`(l, u, k)`.
pub fn day_convolution(f: &ClassFunctor, h: &ClassFunctor) -> Result<DayProduct, CharError> {
    f.same_ambient(h)?;
    let g2 = f.group().clone();
    let n = g2.order();
    let basis = day_basis(f, h);
    let values: Vec<Pi2Rep> = (0..n)
        .map(|g| Pi2Rep {
            chars: basis[g].iter().map(|s| f.value(g2.mul(g, g2.inv(s.k))).chars[s.p]).collect(),
        })
        .collect();
    let mut psi = Vec::with_capacity(n * n);
    for l in 0..n {
        for g in 0..n {
            let target = g2.conjugate_object(l, g);
            let mut m = Matrix::zeros(basis[target].len(), basis[g].len());
            for (col, s) in basis[g].iter().enumerate() {
                let u = g2.mul(g, g2.inv(s.k));
                let (u2, k2) = (g2.conjugate_object(l, u), g2.conjugate_object(l, s.k));
                let twist = g2.day_twist(l, u, s.k);
                let pf = f.psi(l, u);
                let ph = h.psi(l, s.k);
                for (p2, a) in pf.column_entries(s.p) {
                    let scale = a * &f.eigenvalue(u2, p2, twist);
                    for (q2, b) in ph.column_entries(s.q) {
                        let t = Summand { k: k2, p: p2, q: q2 };
                        let row = basis[target].binary_search(&t).map_err(|_| {
                            CharError::Inconsistent(format!("conjugation by {l} leaves the balanced basis at grade {g}"))
                        })?;
                        m.set(row, col, &scale * b);
                    }
                }
            }
            psi.push(m);
        }
    }
    Ok(DayProduct { functor: ClassFunctor::new(g2, values, psi)?, basis })
}

/// The braiding `(F ⊛ G)(g) → (G ⊛ F)(g)`: the summand `(k, p, q)` with
/// `u = g k⁻¹` goes to the summand of `G(g u⁻¹) ⊗ F(u)` at `ψ^G(u, k) e_q ⊗ e_p`,
/// twisted by [`braid_twist`](twochar_twogroup::FiniteTwoGroup::braid_twist)`(u, k)`.
pub fn braiding(f: &ClassFunctor, h: &ClassFunctor, g: usize) -> Result<Matrix, CharError> {
    let fh = day_convolution(f, h)?;
    let hf = day_convolution(h, f)?;
    braiding_between(&fh, &hf, f, h, g)
}

pub(crate) fn braiding_between(
    fh: &DayProduct,
    hf: &DayProduct,
    f: &ClassFunctor,
    h: &ClassFunctor,
    g: usize,
) -> Result<Matrix, CharError> {
    let g2 = f.group();
    let mut m = Matrix::zeros(hf.basis[g].len(), fh.basis[g].len());
    for (col, s) in fh.basis[g].iter().enumerate() {
        let u = g2.mul(g, g2.inv(s.k));
        let twist = g2.braid_twist(u, s.k);
        let conj = g2.conjugate_object(u, s.k);
        for (q2, b) in h.psi(u, s.k).column_entries(s.q) {
            let t = Summand { k: u, p: q2, q: s.p };
            let row = hf.position(g, &t).ok_or_else(|| CharError::Inconsistent(format!("braiding leaves the basis at {g}")))?;
            let v: Cyclotomic = b * &h.eigenvalue(conj, q2, twist);
            m.set(row, col, v);
        }
    }
    Ok(m)
}
