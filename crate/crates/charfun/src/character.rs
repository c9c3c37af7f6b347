use std::sync::Arc;

use twochar_scalars::Matrix;
use twochar_twogroup::FiniteTwoGroup;
use twochar_twrep::{validate_rep, MonomialTwoRep};

use crate::{CharError, ClassFunctor, Pi2Rep};

/// The 2-character of a monomial rep.
///
/// `F(g)` has one basis vector per fixed point of σ_g, in increasing
/// order, carrying the eigencharacter of that simple. `ψ(k, g)` sends the
/// vector at `i` to the vector at `j = σ_k i` with scalar
/// `λ(coev(k), j)·c(k,g,i)·c(kg,k⁻¹,j) / c(k,k⁻¹,j)`.
pub fn two_character(r: &MonomialTwoRep) -> Result<ClassFunctor, CharError> {
    let report = validate_rep(r);
    if !report.is_valid() {
        return Err(CharError::InvalidRep(report.violations));
    }
    let g2 = r.group().clone();
    let n = g2.order();
    let chars: Vec<usize> = (0..r.n())
        .map(|i| r.eigencharacter(i).ok_or_else(|| CharError::Shape(format!("simple {i} has no eigencharacter"))))
        .collect::<Result<_, _>>()?;
    let fixed: Vec<Vec<usize>> = (0..n).map(|g| r.fixed_points(g)).collect();
    let values = fixed.iter().map(|fs| Pi2Rep { chars: fs.iter().map(|&i| chars[i]).collect() }).collect();
    let mut psi = Vec::with_capacity(n * n);
    for k in 0..n {
        let ki = g2.inv(k);
        for g in 0..n {
            let target = g2.conjugate_object(k, g);
            let kg = g2.mul(k, g);
            let mut m = Matrix::zeros(fixed[target].len(), fixed[g].len());
            for (col, &i) in fixed[g].iter().enumerate() {
                let j = r.sigma(k, i);
                let row = fixed[target].binary_search(&j).expect("sigma_k maps fixed points to fixed points");
                let s = &(&(r.eigenvalue(g2.coev(k), j) * r.c(k, g, i)) * r.c(kg, ki, j)) * &r.c(k, ki, j).inv()?;
                m.set(row, col, s);
            }
            psi.push(m);
        }
    }
    ClassFunctor::new(g2, values, psi)
}

/// The monoidal unit for Day convolution: the regular representation of
/// π₂ at the identity object (one basis vector per character, in dual
/// order) and zero elsewhere. Conjugation by k sends the vector of ρ to
/// that of `ρ' = ρ∘(k⁻¹▷)` with scalar `ρ'(coev(k))`.
pub fn unit_functor(group: &Arc<FiniteTwoGroup>) -> ClassFunctor {
    let n = group.order();
    let pi2 = group.pi2();
    let e = group.identity();
    let m = pi2.order();
    let values: Vec<Pi2Rep> =
        (0..n).map(|g| if g == e { Pi2Rep { chars: (0..m).collect() } } else { Pi2Rep::default() }).collect();
    let mut psi = Vec::with_capacity(n * n);
    for k in 0..n {
        let ki = group.inv(k);
        for g in 0..n {
            if g != e {
                psi.push(Matrix::zeros(0, 0));
                continue;
            }
            let mut mat = Matrix::zeros(m, m);
            for rho in 0..m {
                let moved = pi2.char_precompose(rho, |a| group.act(ki, a));
                mat.set(moved, rho, pi2.char_value(moved, group.coev(k)));
            }
            psi.push(mat);
        }
    }
    ClassFunctor::new(group.clone(), values, psi).expect("unit functor shapes")
}

/// `dim F(g)` for every g.
pub fn dimensions(f: &ClassFunctor) -> Vec<usize> {
    f.values().iter().map(Pi2Rep::dim).collect()
}
