use std::sync::Arc;

use twochar_charfun::{validate_class_functor, ClassFunctor, Pi2Rep};
use twochar_scalars::{Cyclotomic, Matrix};
use twochar_twogroup::{FiniteTwoGroup, Report};

use crate::CenterError;

/// An object of the Drinfeld center of the 2-group algebra, in the
/// equivariantization model: a π₁-graded space whose grades carry a
/// diagonal π₂-action, with equivariant structure `u(k, g)` from grade g
/// to grade `kgk⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterObject {
    group: Arc<FiniteTwoGroup>,
    grades: Vec<Pi2Rep>,
    u: Vec<Matrix>,
}

impl CenterObject {
    /// `u[k * |π₁| + g]` is a `dim(kgk⁻¹) × dim(g)` matrix.
    pub fn new(group: Arc<FiniteTwoGroup>, grades: Vec<Pi2Rep>, u: Vec<Matrix>) -> Result<Self, CenterError> {
        let n = group.order();
        if grades.len() != n || u.len() != n * n {
            return Err(CenterError::Shape(format!("expected {n} grades and {} structure maps", n * n)));
        }
        for k in 0..n {
            for g in 0..n {
                let m = &u[k * n + g];
                if m.rows() != grades[group.conjugate_object(k, g)].dim() || m.cols() != grades[g].dim() {
                    return Err(CenterError::Shape(format!("u({k}, {g}) has shape {}x{}", m.rows(), m.cols())));
                }
            }
        }
        Ok(CenterObject { group, grades, u })
    }

    pub fn group(&self) -> &Arc<FiniteTwoGroup> {
        &self.group
    }

    pub fn grade(&self, g: usize) -> &Pi2Rep {
        &self.grades[g]
    }

    pub fn grades(&self) -> &[Pi2Rep] {
        &self.grades
    }

    pub fn dim(&self, g: usize) -> usize {
        self.grades[g].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.grades.iter().map(Pi2Rep::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.grades.iter().map(Pi2Rep::dim).sum()
    }

    pub fn u(&self, k: usize, g: usize) -> &Matrix {
        &self.u[k * self.group.order() + g]
    }

    pub fn eigenvalue(&self, g: usize, p: usize, a: usize) -> Cyclotomic {
        self.group.pi2().char_value(self.grades[g].chars[p], a)
    }

    /// Block sum, grade by grade.
    pub fn direct_sum(&self, other: &CenterObject) -> Result<CenterObject, CenterError> {
        self.same_ambient(other)?;
        let n = self.group.order();
        let grades = (0..n)
            .map(|g| Pi2Rep { chars: [self.grades[g].chars.clone(), other.grades[g].chars.clone()].concat() })
            .collect();
        let u = (0..n * n).map(|i| block_sum(&self.u[i], &other.u[i])).collect();
        CenterObject::new(self.group.clone(), grades, u)
    }

    pub(crate) fn same_ambient(&self, other: &CenterObject) -> Result<(), CenterError> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(CenterError::AmbientMismatch)
        }
    }

    pub(crate) fn with_grades_and_maps(&self, u: Vec<Matrix>) -> CenterObject {
        CenterObject { group: self.group.clone(), grades: self.grades.clone(), u }
    }
}

pub(crate) fn block_sum(a: &Matrix, b: &Matrix) -> Matrix {
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
    m
}

/// Fourier 2-transform from the center to class functors. In the skeletal
/// model both sides store the same data, so this is a relabeling.
pub fn phi_transform(x: &CenterObject) -> ClassFunctor {
    ClassFunctor::new(x.group.clone(), x.grades.clone(), x.u.clone()).expect("center objects have class functor shapes")
}

/// Inverse of [`phi_transform`].
pub fn psi_transform(f: &ClassFunctor) -> CenterObject {
    let n = f.group().order();
    let u = (0..n).flat_map(|k| (0..n).map(move |g| (k, g))).map(|(k, g)| f.psi(k, g).clone()).collect();
    CenterObject { group: f.group().clone(), grades: f.values().to_vec(), u }
}

/// Naturality and composition laws of the equivariant structure.
pub fn validate_center(x: &CenterObject) -> Report {
    validate_class_functor(&phi_transform(x))
}

/// The π₂ element of the canonical iso `l(pq)l⁻¹ → (lpl⁻¹)(lql⁻¹)`,
/// walked step by step through associators and the evaluation of l.
pub fn conjugation_splitting(group: &FiniteTwoGroup, l: usize, p: usize, q: usize) -> usize {
    let a = group.pi2();
    let li = group.inv(l);
    let lp = group.mul(l, p);
    let lq = group.mul(l, q);
    let lqli = group.mul(lq, li);
    let steps = [
        // (l(pq))l⁻¹ → ((lp)q)l⁻¹
        group.alpha(l, p, q),
        // → (lp)(ql⁻¹)
        a.neg(group.alpha(lp, q, li)),
        // (ql⁻¹) → (l⁻¹l)(ql⁻¹)
        a.neg(group.act(lp, group.ev(l))),
        // (l⁻¹l)(ql⁻¹) → l⁻¹(l(ql⁻¹))
        a.neg(group.act(lp, group.alpha(li, l, group.mul(q, li)))),
        // l(ql⁻¹) → (lq)l⁻¹
        group.act(group.mul(lp, li), group.alpha(l, q, li)),
        // (lp)(l⁻¹(lql⁻¹)) → ((lp)l⁻¹)(lql⁻¹)
        group.alpha(lp, li, lqli),
    ];
    a.sum(steps)
}

/// Tensor product in the center: grade g is the balanced part of
/// `⊕_{pq = g} X_p ⊗ Y_q`, with π₂ acting through X. The equivariant
/// structure is `u_X ⊗ u_Y` corrected by [`conjugation_splitting`].
pub fn center_tensor(x: &CenterObject, y: &CenterObject) -> Result<CenterObject, CenterError> {
    x.same_ambient(y)?;
    let g2 = x.group.clone();
    let n = g2.order();
    let pi2 = g2.pi2();
    let mut labels: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for p in 0..n {
        for q in 0..n {
            for (i, &ri) in x.grades[p].chars.iter().enumerate() {
                for (j, &rj) in y.grades[q].chars.iter().enumerate() {
                    if pi2.elements().all(|m| pi2.char_exponent(ri, g2.act(p, m)) == pi2.char_exponent(rj, m)) {
                        labels[g2.mul(p, q)].push((p, i, j));
                    }
                }
            }
        }
    }
    for l in &mut labels {
        l.sort_unstable();
    }
    let grades: Vec<Pi2Rep> =
        labels.iter().map(|ls| Pi2Rep { chars: ls.iter().map(|&(p, i, _)| x.grades[p].chars[i]).collect() }).collect();
    let mut u = Vec::with_capacity(n * n);
    for l in 0..n {
        for g in 0..n {
            let t = g2.conjugate_object(l, g);
            let mut m = Matrix::zeros(labels[t].len(), labels[g].len());
            for (col, &(p, i, j)) in labels[g].iter().enumerate() {
                let q = g2.mul(g2.inv(p), g);
                let p2 = g2.conjugate_object(l, p);
                let shift = conjugation_splitting(&g2, l, p, q);
                for (i2, a) in x.u(l, p).column_entries(i) {
                    let s = a * &x.eigenvalue(p2, i2, shift);
                    for (j2, b) in y.u(l, q).column_entries(j) {
                        let row = labels[t].binary_search(&(p2, i2, j2)).map_err(|_| {
                            CenterError::Inconsistent(format!("conjugation by {l} leaves the balanced part of grade {g}"))
                        })?;
                        m.set(row, col, &s * b);
                    }
                }
            }
            u.push(m);
        }
    }
    CenterObject::new(g2, grades, u)
}

/// Dimension of the morphisms from the unit: vectors of grade e fixed by
/// every `u(l, e)`.
pub fn unit_hom_dim(x: &CenterObject) -> usize {
    let e = x.group.identity();
    let d = x.dim(e);
    if d == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for l in 0..x.group.order() {
        let m = x.u(l, e);
        for r in 0..d {
            rows.push((0..d).map(|c| if r == c { m.get(r, c) - &Cyclotomic::one() } else { m.get(r, c).clone() }).collect());
        }
    }
    d - Matrix::from_rows(rows).expect("square blocks").rank()
}
