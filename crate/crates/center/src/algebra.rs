use std::sync::Arc;

use twochar_charfun::{two_character, Pi2Rep};
use twochar_scalars::{Cyclotomic, Matrix};
use twochar_twogroup::FiniteTwoGroup;
use twochar_twrep::{validate_rep, MonomialTwoRep};

use crate::{psi_transform, CenterError, CenterObject};

/// An algebra on a center object, by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraStructure {
    object: CenterObject,
    unit: Vec<Cyclotomic>,
    mult: Vec<Matrix>,
}

impl AlgebraStructure {
    /// `mult[h * |π₁| + k]` maps `A_h ⊗ A_k` (column `a * dim A_k + b`) to
    /// `A_{hk}`; `unit` is a vector of `A_e`.
    pub fn new(object: CenterObject, unit: Vec<Cyclotomic>, mult: Vec<Matrix>) -> Result<Self, CenterError> {
        let g2 = object.group().clone();
        let n = g2.order();
        if unit.len() != object.dim(g2.identity()) || mult.len() != n * n {
            return Err(CenterError::Shape("unit or multiplication table has the wrong size".into()));
        }
        for h in 0..n {
            for k in 0..n {
                let m = &mult[h * n + k];
                if m.rows() != object.dim(g2.mul(h, k)) || m.cols() != object.dim(h) * object.dim(k) {
                    return Err(CenterError::Shape(format!("multiplication at ({h}, {k}) has the wrong shape")));
                }
            }
        }
        Ok(AlgebraStructure { object, unit, mult })
    }

    pub fn object(&self) -> &CenterObject {
        &self.object
    }

    pub fn group(&self) -> &Arc<FiniteTwoGroup> {
        self.object.group()
    }

    pub fn unit(&self) -> &[Cyclotomic] {
        &self.unit
    }

    pub fn mult(&self, h: usize, k: usize) -> &Matrix {
        &self.mult[h * self.group().order() + k]
    }

    /// Product of basis vector `a` of grade h with basis vector `b` of grade k.
    pub fn product(&self, h: usize, a: usize, k: usize, b: usize) -> Vec<Cyclotomic> {
        self.mult(h, k).column(a * self.object.dim(k) + b)
    }

    /// Product of arbitrary vectors of grades h and k.
    pub fn multiply(&self, h: usize, x: &[Cyclotomic], k: usize, y: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let dk = self.object.dim(k);
        let mut v = vec![Cyclotomic::zero(); x.len() * dk];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                v[a * dk + b] = xa * yb;
            }
        }
        self.mult(h, k).apply(&v).expect("shapes checked on construction")
    }

    /// Product algebra on the direct sum of the underlying objects.
    pub fn direct_sum(&self, other: &AlgebraStructure) -> Result<AlgebraStructure, CenterError> {
        let object = self.object.direct_sum(&other.object)?;
        let g2 = self.group().clone();
        let n = g2.order();
        let mut mult = Vec::with_capacity(n * n);
        for h in 0..n {
            for k in 0..n {
                let (d1, d2) = (self.object.dim(k), other.object.dim(k));
                let (m1, m2) = (self.mult(h, k), other.mult(h, k));
                let mut m = Matrix::zeros(object.dim(g2.mul(h, k)), object.dim(h) * object.dim(k));
                let off = self.object.dim(g2.mul(h, k));
                for a in 0..self.object.dim(h) {
                    for b in 0..d1 {
                        for (r, v) in m1.column_entries(a * d1 + b) {
                            m.set(r, a * (d1 + d2) + b, v.clone());
                        }
                    }
                }
                for a in 0..other.object.dim(h) {
                    for b in 0..d2 {
                        let col = (self.object.dim(h) + a) * (d1 + d2) + d1 + b;
                        for (r, v) in m2.column_entries(a * d2 + b) {
                            m.set(off + r, col, v.clone());
                        }
                    }
                }
                mult.push(m);
            }
        }
        let unit = [self.unit.clone(), other.unit.clone()].concat();
        AlgebraStructure::new(object, unit, mult)
    }

    /// Rescales the basis of every grade g with `g < g⁻¹` so that, for each
    /// basis vector x, the first nonzero coefficient of `x·y` over the
    /// basis y of grade g⁻¹ becomes 1. Grades that are their own inverse
    /// are left alone.
    pub fn normalized(&self) -> AlgebraStructure {
        let g2 = self.group().clone();
        let n = g2.order();
        let mut t: Vec<Vec<Cyclotomic>> = (0..n).map(|g| vec![Cyclotomic::one(); self.object.dim(g)]).collect();
        for g in 0..n {
            let gi = g2.inv(g);
            if g >= gi {
                continue;
            }
            for x in 0..self.object.dim(g) {
                let first = (0..self.object.dim(gi))
                    .flat_map(|y| self.product(g, x, gi, y))
                    .find(|v| !v.is_zero());
                if let Some(s) = first {
                    t[g][x] = s.inv().expect("nonzero");
                }
            }
        }
        self.rescaled(&t)
    }

    /// The same algebra in the basis `t[g][i]·x_i` of each grade g. The
    /// scales at grade e must be 1 so the unit keeps its coordinates.
    pub fn rescaled(&self, t: &[Vec<Cyclotomic>]) -> AlgebraStructure {
        let g2 = self.group().clone();
        let n = g2.order();
        let rescale = |m: &Matrix, rows: &[Cyclotomic], cols: &dyn Fn(usize) -> Cyclotomic| {
            let mut out = m.clone();
            for c in 0..m.cols() {
                let tc = cols(c);
                for (r, v) in m.column_entries(c) {
                    out.set(r, c, &(v * &tc) * &rows[r].inv().expect("nonzero scale"));
                }
            }
            out
        };
        let mut u = Vec::with_capacity(n * n);
        for k in 0..n {
            for g in 0..n {
                let target = g2.conjugate_object(k, g);
                u.push(rescale(self.object.u(k, g), &t[target], &|c| t[g][c].clone()));
            }
        }
        let mut mult = Vec::with_capacity(n * n);
        for h in 0..n {
            for k in 0..n {
                let dk = self.object.dim(k);
                mult.push(rescale(self.mult(h, k), &t[g2.mul(h, k)], &|c| &t[h][c / dk] * &t[k][c % dk]));
            }
        }
        AlgebraStructure { object: self.object.with_grades_and_maps(u), unit: self.unit.clone(), mult }
    }
}

/// The algebra carried by the center object of a 2-character: the basis
/// vector at a common fixed point j of grades h and k multiply to
/// `c(h, k, j)` times the basis vector at j of grade hk. The unit is the
/// sum of the basis of grade e.
pub fn character_algebra(r: &MonomialTwoRep) -> Result<AlgebraStructure, CenterError> {
    let object = psi_transform(&two_character(r)?);
    let g2 = r.group().clone();
    let fixed: Vec<Vec<usize>> = (0..g2.order()).map(|g| r.fixed_points(g)).collect();
    monomial_algebra(object, &fixed, |h, k, j| r.c(h, k, j).clone())
}

fn monomial_algebra(
    object: CenterObject,
    fixed: &[Vec<usize>],
    constant: impl Fn(usize, usize, usize) -> Cyclotomic,
) -> Result<AlgebraStructure, CenterError> {
    let g2 = object.group().clone();
    let n = g2.order();
    let mut mult = Vec::with_capacity(n * n);
    for h in 0..n {
        for k in 0..n {
            let hk = g2.mul(h, k);
            let mut m = Matrix::zeros(fixed[hk].len(), fixed[h].len() * fixed[k].len());
            for (a, &i) in fixed[h].iter().enumerate() {
                if let Ok(b) = fixed[k].binary_search(&i) {
                    let row = fixed[hk].binary_search(&i).expect("common fixed points are fixed by the product");
                    m.set(row, a * fixed[k].len() + b, constant(h, k, i));
                }
            }
            mult.push(m);
        }
    }
    let unit = vec![Cyclotomic::one(); fixed[g2.identity()].len()];
    AlgebraStructure::new(object, unit, mult)
}

/// Full center of the module category of a monomial rep, computed from the
/// end over simples: grade g is spanned by the internal endomorphisms of
/// the simples fixed by g, on which `a ∈ π₂` acts by the inverse of its
/// component, multiplication is composition of internal homs and the
/// half-braiding comes from the mate of the action constraint.
pub fn full_center_oracle(r: &MonomialTwoRep) -> Result<AlgebraStructure, CenterError> {
    let report = validate_rep(r);
    if !report.is_valid() {
        return Err(CenterError::InvalidRep(report.violations));
    }
    let g2 = r.group().clone();
    let n = g2.order();
    let pi2 = g2.pi2();
    let e = pi2.exponent();
    let fixed: Vec<Vec<usize>> =
        (0..n).map(|g| (0..r.n()).filter(|&i| r.sigma(g, i) == i).collect()).collect();
    let log = |z: &Cyclotomic| -> u32 {
        (0..e).find(|&k| &Cyclotomic::zeta(e, k as i64) == z).expect("π₂ components are roots of unity")
    };
    let inverse_char = |i: usize| -> Result<usize, CenterError> {
        pi2.char_from_exponents(|a| log(&r.tau(g2.identity(), a, i).inv().expect("nonzero")))
            .ok_or_else(|| CenterError::Inconsistent(format!("π₂ does not act by a character on simple {i}")))
    };
    let grades: Vec<Pi2Rep> = fixed
        .iter()
        .map(|fs| fs.iter().map(|&i| inverse_char(i)).collect::<Result<Vec<_>, _>>().map(|chars| Pi2Rep { chars }))
        .collect::<Result<_, _>>()?;
    let mut u = Vec::with_capacity(n * n);
    for g in 0..n {
        let gi = g2.inv(g);
        for y in 0..n {
            let t = g2.conjugate_object(g, y);
            let gy = g2.mul(g, y);
            let mut m = Matrix::zeros(fixed[t].len(), fixed[y].len());
            for (col, &i) in fixed[y].iter().enumerate() {
                let j = r.sigma(g, i);
                let row = fixed[t].binary_search(&j).expect("conjugation permutes fixed points");
                let den = r.c(g, y, i) * r.c(gy, gi, j);
                m.set(row, col, r.c(gi, g, i) * &den.inv()?);
            }
            u.push(m);
        }
    }
    let object = CenterObject::new(g2, grades, u)?;
    monomial_algebra(object, &fixed, |h, k, j| r.c(h, k, j).inv().expect("nonzero"))
}
