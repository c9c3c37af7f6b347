use std::collections::BTreeMap;

use serde::Serialize;
use twochar_scalars::{Cyclotomic, Matrix};
use twochar_twogroup::Report;

use crate::{unit_hom_dim, AlgebraStructure};

/// Outcome of [`check_lagrangian`]; each flag is a finished exact check and
/// `report` holds a witness for every failure.
#[derive(Clone, Debug, Serialize)]
pub struct LagrangianReport {
    pub unit: bool,
    pub associativity: bool,
    pub commutativity: bool,
    pub connectedness: bool,
    pub separability: bool,
    /// Dimension of the morphisms from the unit object.
    pub connected_dim: usize,
    /// `δ(1)` of the splitting found, indexed like [`splitting_basis`].
    pub splitting: Option<Vec<Cyclotomic>>,
    pub report: Report,
}

impl LagrangianReport {
    pub fn all_pass(&self) -> bool {
        self.unit && self.associativity && self.commutativity && self.connectedness && self.separability
    }
}

fn basis_vector(d: usize, i: usize) -> Vec<Cyclotomic> {
    (0..d).map(|j| if i == j { Cyclotomic::one() } else { Cyclotomic::zero() }).collect()
}

/// Scales coordinate r of a vector of grade g by the action of `a ∈ π₂`.
fn act(alg: &AlgebraStructure, g: usize, a: usize, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    v.iter().enumerate().map(|(r, x)| if x.is_zero() { x.clone() } else { x * &alg.object().eigenvalue(g, r, a) }).collect()
}

fn check_unit(alg: &AlgebraStructure, report: &mut Report) {
    let g2 = alg.group();
    let e = g2.identity();
    for k in 0..g2.order() {
        for b in 0..alg.object().dim(k) {
            let v = basis_vector(alg.object().dim(k), b);
            report.checked += 2;
            if alg.multiply(e, alg.unit(), k, &v) != v {
                report.push("unit", vec![k, b], "left unit law fails".into());
            }
            if alg.multiply(k, &v, e, alg.unit()) != v {
                report.push("unit", vec![k, b], "right unit law fails".into());
            }
        }
    }
}

/// `(xy)z = α(u,v,w)·x(yz)` with the associator acting on the result.
fn check_associativity(alg: &AlgebraStructure, report: &mut Report) {
    let g2 = alg.group();
    let n = g2.order();
    let x = alg.object();
    for u in 0..n {
        for v in 0..n {
            let uv = g2.mul(u, v);
            for w in 0..n {
                let (vw, uvw) = (g2.mul(v, w), g2.mul(uv, w));
                let assoc = g2.alpha(u, v, w);
                for a in 0..x.dim(u) {
                    for b in 0..x.dim(v) {
                        let ab = alg.product(u, a, v, b);
                        for c in 0..x.dim(w) {
                            let ec = basis_vector(x.dim(w), c);
                            let lhs = alg.multiply(uv, &ab, w, &ec);
                            let bc = alg.product(v, b, w, c);
                            let rhs = act(alg, uvw, assoc, &alg.multiply(u, &basis_vector(x.dim(u), a), vw, &bc));
                            report.checked += 1;
                            if lhs != rhs {
                                report.push("associativity", vec![u, v, w, a, b, c], "structure constants disagree".into());
                            }
                        }
                    }
                }
            }
        }
    }
}

/// `μ∘β = μ`, with the braiding `x ⊗ y ↦ u(g, h)y ⊗ x` twisted by the
/// canonical iso `((gh)g⁻¹)g → gh`.
fn check_commutativity(alg: &AlgebraStructure, report: &mut Report) {
    let g2 = alg.group();
    let n = g2.order();
    let x = alg.object();
    for g in 0..n {
        for h in 0..n {
            let t = g2.conjugate_object(g, h);
            let twist = g2.braid_twist(g, h);
            for a in 0..x.dim(g) {
                let ea = basis_vector(x.dim(g), a);
                for b in 0..x.dim(h) {
                    let lhs = alg.product(g, a, h, b);
                    let mut rhs = vec![Cyclotomic::zero(); lhs.len()];
                    for (b2, s) in x.u(g, h).column_entries(b) {
                        let s = s * &x.eigenvalue(t, b2, twist);
                        let term = alg.multiply(t, &basis_vector(x.dim(t), b2), g, &ea);
                        for (r, v) in term.iter().enumerate() {
                            rhs[r] += &(&s * v);
                        }
                    }
                    report.checked += 1;
                    if lhs != rhs {
                        report.push("commutativity", vec![g, h, a, b], "product changes under the braiding".into());
                    }
                }
            }
        }
    }
}

/// Unknown coordinates of `δ(1)`: pairs `(p, a, b)` with a in grade p and
/// b in grade p⁻¹ whose π₂-actions balance.
pub fn splitting_basis(alg: &AlgebraStructure) -> Vec<(usize, usize, usize)> {
    let g2 = alg.group();
    let pi2 = g2.pi2();
    let x = alg.object();
    let mut out = Vec::new();
    for p in 0..g2.order() {
        let q = g2.inv(p);
        for (a, &ra) in x.grade(p).chars.iter().enumerate() {
            for (b, &rb) in x.grade(q).chars.iter().enumerate() {
                if pi2.elements().all(|m| pi2.char_exponent(ra, g2.act(p, m)) == pi2.char_exponent(rb, m)) {
                    out.push((p, a, b));
                }
            }
        }
    }
    out
}

/// Looks for a bimodule splitting of the multiplication. Bimodule maps
/// `A → A ⊗ A` are determined by `z = δ(1)`, which must commute with every
/// basis vector and satisfy `μ(z) = 1`.
fn find_splitting(alg: &AlgebraStructure) -> Option<Vec<Cyclotomic>> {
    let g2 = alg.group();
    let n = g2.order();
    let x = alg.object();
    let e = g2.identity();
    let unknowns = splitting_basis(alg);
    if unknowns.is_empty() {
        return None;
    }
    // (basis vector (w, xi), first grade, first index, second index) -> coefficients
    let mut rows: BTreeMap<(usize, usize, usize, usize, usize), Vec<(usize, Cyclotomic)>> = BTreeMap::new();
    for w in 0..n {
        for xi in 0..x.dim(w) {
            let ex = basis_vector(x.dim(w), xi);
            for (col, &(p, a, b)) in unknowns.iter().enumerate() {
                let q = g2.inv(p);
                // x·(y_a ⊗ y_b)
                let wp = g2.mul(w, p);
                let left = act(alg, wp, g2.pi2().neg(g2.alpha(w, p, q)), &alg.product(w, xi, p, a).to_vec());
                for (r, v) in left.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    rows.entry((w, xi, wp, r, b)).or_default().push((col, v.clone()));
                }
                // (y_a ⊗ y_b)·x
                let s = x.eigenvalue(p, a, g2.alpha(p, q, w));
                let right = alg.multiply(q, &basis_vector(x.dim(q), b), w, &ex);
                for (r, v) in right.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    rows.entry((w, xi, p, a, r)).or_default().push((col, -(&s * v)));
                }
            }
        }
    }
    let mut matrix: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut rhs = Vec::new();
    for entries in rows.values() {
        let mut row = vec![Cyclotomic::zero(); unknowns.len()];
        for (c, v) in entries {
            row[*c] += v;
        }
        matrix.push(row);
        rhs.push(Cyclotomic::zero());
    }
    for r in 0..x.dim(e) {
        let row = unknowns
            .iter()
            .map(|&(p, a, b)| alg.product(p, a, g2.inv(p), b)[r].clone())
            .collect();
        matrix.push(row);
        rhs.push(alg.unit()[r].clone());
    }
    Matrix::from_rows(matrix).ok()?.solve(&rhs)
}

/// Exact verification of the algebra axioms, connectedness (the unit
/// object occurs once) and separability.
pub fn check_lagrangian(alg: &AlgebraStructure) -> LagrangianReport {
    let mut report = Report::default();
    let section = |f: &dyn Fn(&AlgebraStructure, &mut Report), report: &mut Report| {
        let before = report.violations.len();
        f(alg, report);
        report.violations.len() == before
    };
    let unit = section(&check_unit, &mut report);
    let associativity = section(&check_associativity, &mut report);
    let commutativity = section(&check_commutativity, &mut report);
    let connected_dim = unit_hom_dim(alg.object());
    report.checked += 1;
    let connectedness = connected_dim == 1;
    if !connectedness {
        report.push("connectedness", vec![connected_dim], format!("the unit occurs {connected_dim} times"));
    }
    let splitting = find_splitting(alg);
    report.checked += 1;
    let separability = splitting.is_some();
    if !separability {
        report.push("separability", vec![], "no bimodule splitting of the multiplication".into());
    }
    LagrangianReport { unit, associativity, commutativity, connectedness, separability, connected_dim, splitting, report }
}
