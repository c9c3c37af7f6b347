use twochar_scalars::{Cyclotomic, Matrix};

use crate::{day_convolution, CharError, ClassFunctor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProduct {
    pub dim: usize,
    /// Basis of the invariant subspace, as vectors in `(F ⊛ G)(e)`.
    pub basis: Vec<Vec<Cyclotomic>>,
}

/// Vectors of `X(e)` fixed by `ψ(l, e)` for every l.
pub fn invariants_at_unit(x: &ClassFunctor) -> Vec<Vec<Cyclotomic>> {
    let g2 = x.group();
    let e = g2.identity();
    let d = x.dim(e);
    if d == 0 {
        return Vec::new();
    }
    let id = Matrix::identity(d);
    let blocks: Vec<Matrix> =
        (0..g2.order()).map(|l| x.psi(l, e).sub(&id).expect("psi(l, e) is square")).collect();
    Matrix::vstack(&blocks).expect("equal widths").nullspace()
}

/// `⟨F, G⟩ = (F ⊛ G)(e)^{π₁}`.
pub fn inner_product(f: &ClassFunctor, h: &ClassFunctor) -> Result<InnerProduct, CharError> {
    let day = day_convolution(f, h)?;
    let basis = invariants_at_unit(&day.functor);
    Ok(InnerProduct { dim: basis.len(), basis })
}
