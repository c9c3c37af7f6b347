use std::sync::Arc;

use twochar_scalars::{Cyclotomic, Matrix};
use twochar_twogroup::{FiniteTwoGroup, Report};

use crate::CharError;

/// A π₂-representation with diagonalized action: one character of π₂
/// (an index into the dual group) per basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Pi2Rep {
    pub chars: Vec<usize>,
}

impl Pi2Rep {
    pub fn dim(&self) -> usize {
        self.chars.len()
    }

    /// Multiplicity of each character, indexed like the dual group.
    pub fn multiplicities(&self, dual_order: usize) -> Vec<usize> {
        let mut out = vec![0; dual_order];
        for &c in &self.chars {
            out[c] += 1;
        }
        out
    }

    /// Sorted eigencharacter list.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v = self.chars.clone();
        v.sort_unstable();
        v
    }
}

/// An object of the equivariantization of functors on the 2-group: a
/// π₂-representation per object g and conjugation isomorphisms
/// `psi(k, g): F(g) → F(kgk⁻¹)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunctor {
    group: Arc<FiniteTwoGroup>,
    values: Vec<Pi2Rep>,
    psi: Vec<Matrix>,
}

impl ClassFunctor {
    /// `psi[k * |π₁| + g]` must be a `dim F(kgk⁻¹) × dim F(g)` matrix.
    pub fn new(group: Arc<FiniteTwoGroup>, values: Vec<Pi2Rep>, psi: Vec<Matrix>) -> Result<Self, CharError> {
        let n = group.order();
        if values.len() != n || psi.len() != n * n {
            return Err(CharError::Shape(format!("expected {n} values and {} psi matrices", n * n)));
        }
        let dual = group.pi2().order();
        if values.iter().any(|v| v.chars.iter().any(|&c| c >= dual)) {
            return Err(CharError::Shape("eigencharacter index out of range".into()));
        }
        for k in 0..n {
            for g in 0..n {
                let m = &psi[k * n + g];
                let target = group.conjugate_object(k, g);
                if m.rows() != values[target].dim() || m.cols() != values[g].dim() {
                    return Err(CharError::Shape(format!("psi({k}, {g}) has shape {}x{}", m.rows(), m.cols())));
                }
            }
        }
        Ok(ClassFunctor { group, values, psi })
    }

    pub fn group(&self) -> &Arc<FiniteTwoGroup> {
        &self.group
    }

    pub fn value(&self, g: usize) -> &Pi2Rep {
        &self.values[g]
    }

    pub fn values(&self) -> &[Pi2Rep] {
        &self.values
    }

    pub fn dim(&self, g: usize) -> usize {
        self.values[g].dim()
    }

    pub fn psi(&self, k: usize, g: usize) -> &Matrix {
        &self.psi[k * self.group.order() + g]
    }

    pub(crate) fn same_ambient(&self, other: &ClassFunctor) -> Result<(), CharError> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(CharError::AmbientMismatch)
        }
    }

    /// Value of the eigencharacter of basis vector `p` of `F(g)` at `a`.
    pub fn eigenvalue(&self, g: usize, p: usize, a: usize) -> Cyclotomic {
        self.group.pi2().char_value(self.values[g].chars[p], a)
    }

    /// The matrix by which `a ∈ π₂` acts on `F(g)`.
    pub fn action_matrix(&self, g: usize, a: usize) -> Matrix {
        let d = self.dim(g);
        let mut m = Matrix::zeros(d, d);
        for p in 0..d {
            m.set(p, p, self.eigenvalue(g, p, a));
        }
        m
    }

    /// Rows of `m` (a map into `F(g)`) scaled by the action of `a` on `F(g)`.
    pub(crate) fn act_on_rows(&self, g: usize, a: usize, m: &Matrix) -> Matrix {
        let mut out = m.clone();
        for r in 0..m.rows() {
            let s = self.eigenvalue(g, r, a);
            if s.is_one() {
                continue;
            }
            for c in 0..m.cols() {
                if !m.get(r, c).is_zero() {
                    out.set(r, c, m.get(r, c) * &s);
                }
            }
        }
        out
    }

    /// Block sum of two class functors.
    pub fn direct_sum(&self, other: &ClassFunctor) -> Result<ClassFunctor, CharError> {
        self.same_ambient(other)?;
        let n = self.group.order();
        let values: Vec<Pi2Rep> = (0..n)
            .map(|g| Pi2Rep { chars: self.values[g].chars.iter().chain(&other.values[g].chars).copied().collect() })
            .collect();
        let mut psi = Vec::with_capacity(n * n);
        for k in 0..n {
            for g in 0..n {
                let (a, b) = (self.psi(k, g), other.psi(k, g));
                let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c).clone());
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
                    }
                }
                psi.push(m);
            }
        }
        ClassFunctor::new(self.group.clone(), values, psi)
    }

    /// Same data with one ψ entry replaced; for fault injection.
    pub fn with_psi_entry(&self, k: usize, g: usize, row: usize, col: usize, value: Cyclotomic) -> ClassFunctor {
        let mut out = self.clone();
        let n = self.group.order();
        out.psi[k * n + g].set(row, col, value);
        out
    }
}

/// Exhaustive check of the class-functor laws: ψ(e, g) is the identity,
/// every ψ is invertible, naturality `ψ(k,g)·F(a) = F(k▷a)·ψ(k,g)` and the
/// composition law `ψ(kl, g) = F(γ(k,l,g))·ψ(k, lgl⁻¹)·ψ(l, g)`, with γ
/// from [`FiniteTwoGroup::gamma`].
pub fn validate_class_functor(f: &ClassFunctor) -> Report {
    let g2 = f.group().clone();
    let n = g2.order();
    let mut rep = Report::default();
    for g in 0..n {
        rep.checked += 1;
        if !f.psi(g2.identity(), g).is_identity() {
            rep.push("unit", vec![g], format!("{:?}", f.psi(g2.identity(), g)));
        }
    }
    for k in 0..n {
        for g in 0..n {
            rep.checked += 1;
            let m = f.psi(k, g);
            if m.rank() != m.cols() || m.rows() != m.cols() {
                rep.push("invertible", vec![k, g], "psi is singular".into());
            }
            let target = g2.conjugate_object(k, g);
            for a in g2.pi2().elements() {
                rep.checked += 1;
                let lhs = m.mul(&f.action_matrix(g, a)).expect("shapes checked at construction");
                let rhs = f.act_on_rows(target, g2.act(k, a), m);
                if lhs != rhs {
                    rep.push("naturality", vec![k, g, a], String::new());
                }
            }
        }
    }
    for k in 0..n {
        for l in 0..n {
            let kl = g2.mul(k, l);
            for g in 0..n {
                rep.checked += 1;
                let lgl = g2.conjugate_object(l, g);
                let target = g2.conjugate_object(kl, g);
                let composite = f.psi(k, lgl).mul(f.psi(l, g)).expect("shapes checked at construction");
                let rhs = f.act_on_rows(target, g2.gamma(k, l, g), &composite);
                if *f.psi(kl, g) != rhs {
                    rep.push("composition", vec![k, l, g], String::new());
                }
            }
        }
    }
    rep
}
