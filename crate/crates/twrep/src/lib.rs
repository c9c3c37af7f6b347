//! Monomial 2-representations of skeletal finite 2-groups.
//!
//! A monomial 2-representation acts on `Vect^n` by permuting the simple
//! objects, with scalar coherence data. The equations it must satisfy are
//! the ones documented in [`twochar_twogroup::coherence`].

mod catalogue;
mod spec;
mod validate;

use std::sync::Arc;

use twochar_scalars::Cyclotomic;
use twochar_twogroup::FiniteTwoGroup;

pub use catalogue::{builtin_irreps, induced_rep, search_cochain, NamedRep};
pub use spec::RepSpec;
pub use validate::validate_rep;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("representations live over different 2-groups")]
    AmbientMismatch,
    #[error("malformed representation data: {0}")]
    Shape(String),
    #[error("induction needs trivial pi2 and trivial associator")]
    NotOrdinary,
    #[error("{0:?} is not a subgroup")]
    NotSubgroup(Vec<usize>),
    #[error("beta is not a normalized 2-cocycle at {0:?}")]
    NotCocycle(Vec<usize>),
    #[error("no catalogue irreducibles for this 2-group")]
    Unknown,
    #[error("no cochain of the requested form satisfies the coherence laws")]
    NoCochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTwoRep {
    group: Arc<FiniteTwoGroup>,
    n: usize,
    perm: Vec<Vec<usize>>,
    c: Vec<Cyclotomic>,
    tau: Vec<Cyclotomic>,
}

impl MonomialTwoRep {
    /// `perm[g][i] = σ_g(i)`, `c` indexed by `(g, h, i)` and `tau` by
    /// `(g, a, i)`, both row-major. Only shapes are checked here; see
    /// [`validate_rep`] for the coherence laws.
    pub fn new(
        group: Arc<FiniteTwoGroup>,
        n: usize,
        perm: Vec<Vec<usize>>,
        c: Vec<Cyclotomic>,
        tau: Vec<Cyclotomic>,
    ) -> Result<Self, RepError> {
        let (g, m) = (group.order(), group.pi2().order());
        if perm.len() != g || perm.iter().any(|p| p.len() != n || p.iter().any(|&x| x >= n)) {
            return Err(RepError::Shape(format!("perm must be {g} rows of {n} indices below {n}")));
        }
        if c.len() != g * g * n {
            return Err(RepError::Shape(format!("c has {} entries, expected {}", c.len(), g * g * n)));
        }
        if tau.len() != g * m * n {
            return Err(RepError::Shape(format!("tau has {} entries, expected {}", tau.len(), g * m * n)));
        }
        Ok(MonomialTwoRep { group, n, perm, c, tau })
    }

    /// Builds tau from the unit-object eigenvalues `lambda[a][j]` via
    /// `tau(g,a,i) = lambda[a][σ_g i]`, as interchange forces.
    pub fn from_eigenvalues(
        group: Arc<FiniteTwoGroup>,
        perm: Vec<Vec<usize>>,
        c: Vec<Cyclotomic>,
        lambda: &[Vec<Cyclotomic>],
    ) -> Result<Self, RepError> {
        let n = perm.first().map_or(0, Vec::len);
        let m = group.pi2().order();
        if lambda.len() != m || lambda.iter().any(|row| row.len() != n) {
            return Err(RepError::Shape("eigenvalue table must be |pi2| rows of n scalars".into()));
        }
        let mut tau = Vec::with_capacity(perm.len() * m * n);
        for p in &perm {
            for row in lambda {
                for i in 0..n {
                    tau.push(row.get(*p.get(i).unwrap_or(&0)).cloned().unwrap_or_else(Cyclotomic::one));
                }
            }
        }
        Self::new(group, n, perm, c, tau)
    }

    /// Trivial cochain, tau from eigenvalues.
    pub fn with_trivial_cochain(
        group: Arc<FiniteTwoGroup>,
        perm: Vec<Vec<usize>>,
        lambda: &[Vec<Cyclotomic>],
    ) -> Result<Self, RepError> {
        let n = perm.first().map_or(0, Vec::len);
        let g = group.order();
        Self::from_eigenvalues(group, perm, vec![Cyclotomic::one(); g * g * n], lambda)
    }

    pub fn group(&self) -> &Arc<FiniteTwoGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self, g: usize, i: usize) -> usize {
        self.perm[g][i]
    }

    pub fn perm(&self) -> &[Vec<usize>] {
        &self.perm
    }

    pub fn c(&self, g: usize, h: usize, i: usize) -> &Cyclotomic {
        &self.c[(g * self.group.order() + h) * self.n + i]
    }

    pub fn tau(&self, g: usize, a: usize, i: usize) -> &Cyclotomic {
        &self.tau[(g * self.group.pi2().order() + a) * self.n + i]
    }

    /// Eigenvalue of `a ∈ π₂` on the unit-object component at `i`.
    pub fn eigenvalue(&self, a: usize, i: usize) -> &Cyclotomic {
        self.tau(self.group.identity(), a, i)
    }

    /// Index of `a ↦ eigenvalue(a, i)` in the dual of π₂, if it is a
    /// character with values of order dividing the exponent.
    pub fn eigencharacter(&self, i: usize) -> Option<usize> {
        let pi2 = self.group.pi2();
        let e = pi2.exponent();
        let roots: Vec<Cyclotomic> = (0..e).map(|k| Cyclotomic::zeta(e, k as i64)).collect();
        let exps: Vec<Option<u32>> = pi2
            .elements()
            .map(|a| roots.iter().position(|r| r == self.eigenvalue(a, i)).map(|k| k as u32))
            .collect();
        if exps.iter().any(Option::is_none) {
            return None;
        }
        pi2.char_from_exponents(|a| exps[a].unwrap())
    }

    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.n).filter(|&i| self.perm[g][i] == i).collect()
    }

    fn same_ambient(&self, other: &Self) -> Result<(), RepError> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(RepError::AmbientMismatch)
        }
    }

    /// The rep with one simple object on which everything acts trivially.
    pub fn trivial(group: Arc<FiniteTwoGroup>) -> Self {
        let (g, m) = (group.order(), group.pi2().order());
        MonomialTwoRep {
            n: 1,
            perm: vec![vec![0]; g],
            c: vec![Cyclotomic::one(); g * g],
            tau: vec![Cyclotomic::one(); g * m],
            group,
        }
    }

    /// Concatenates index sets.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        self.same_ambient(other)?;
        let (g, m) = (self.group.order(), self.group.pi2().order());
        let n = self.n + other.n;
        let perm = self
            .perm
            .iter()
            .zip(&other.perm)
            .map(|(p, q)| p.iter().copied().chain(q.iter().map(|&j| j + self.n)).collect())
            .collect();
        let interleave = |a: &[Cyclotomic], b: &[Cyclotomic], blocks: usize| {
            let mut out = Vec::with_capacity(blocks * n);
            for k in 0..blocks {
                out.extend_from_slice(&a[k * self.n..(k + 1) * self.n]);
                out.extend_from_slice(&b[k * other.n..(k + 1) * other.n]);
            }
            out
        };
        let c = interleave(&self.c, &other.c, g * g);
        let tau = interleave(&self.tau, &other.tau, g * m);
        Self::new(self.group.clone(), n, perm, c, tau)
    }

    /// Product indices `(i, j) ↦ i·n_other + j` with componentwise data.
    pub fn deligne_tensor(&self, other: &Self) -> Result<Self, RepError> {
        self.same_ambient(other)?;
        let (g, m) = (self.group.order(), self.group.pi2().order());
        let (p, q) = (self.n, other.n);
        let n = p * q;
        let perm = self
            .perm
            .iter()
            .zip(&other.perm)
            .map(|(s, t)| (0..n).map(|x| s[x / q] * q + t[x % q]).collect())
            .collect();
        let combine = |a: &[Cyclotomic], b: &[Cyclotomic], blocks: usize| {
            let mut out = Vec::with_capacity(blocks * n);
            for k in 0..blocks {
                for x in 0..n {
                    out.push(&a[k * p + x / q] * &b[k * q + x % q]);
                }
            }
            out
        };
        let c = combine(&self.c, &other.c, g * g);
        let tau = combine(&self.tau, &other.tau, g * m);
        Self::new(self.group.clone(), n, perm, c, tau)
    }

    /// Same permutations, inverted scalars.
    pub fn opposite(&self) -> Self {
        let inv = |v: &[Cyclotomic]| v.iter().map(|x| x.inv().expect("coherence scalars are invertible")).collect();
        MonomialTwoRep { group: self.group.clone(), n: self.n, perm: self.perm.clone(), c: inv(&self.c), tau: inv(&self.tau) }
    }

    /// Same data with one cochain entry replaced; for fault injection.
    pub fn with_cochain_entry(&self, g: usize, h: usize, i: usize, value: Cyclotomic) -> Self {
        let mut out = self.clone();
        let idx = (g * self.group.order() + h) * self.n + i;
        out.c[idx] = value;
        out
    }

    /// Same data with one tau entry replaced; for fault injection.
    pub fn with_tau_entry(&self, g: usize, a: usize, i: usize, value: Cyclotomic) -> Self {
        let mut out = self.clone();
        let idx = (g * self.group.pi2().order() + a) * self.n + i;
        out.tau[idx] = value;
        out
    }
}
