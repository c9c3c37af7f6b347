use num_integer::Integer;
use serde::{Deserialize, Serialize};
use twochar_scalars::Cyclotomic;

/// Product of cyclic groups Z_{n1} × … × Z_{nk}. Elements are dense indices
/// in mixed radix with the first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AbelianRepr", into = "AbelianRepr")]
pub struct AbelianGroup {
    factors: Vec<u32>,
    order: usize,
    exponent: u32,
}

#[derive(Serialize, Deserialize)]
struct AbelianRepr {
    factors: Vec<u32>,
}

impl TryFrom<AbelianRepr> for AbelianGroup {
    type Error = String;
    fn try_from(r: AbelianRepr) -> Result<Self, String> {
        AbelianGroup::new(r.factors).ok_or_else(|| "cyclic factor orders must be positive".to_string())
    }
}

impl From<AbelianGroup> for AbelianRepr {
    fn from(a: AbelianGroup) -> Self {
        AbelianRepr { factors: a.factors }
    }
}

/// A homomorphism A → roots of unity, a ↦ Π ζ_{n_i}^{exps_i · a_i}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualCharacter {
    pub exps: Vec<u32>,
}

impl AbelianGroup {
    /// `None` if some factor is zero. An empty factor list is the trivial group.
    pub fn new(factors: Vec<u32>) -> Option<Self> {
        if factors.contains(&0) {
            return None;
        }
        let order = factors.iter().map(|&n| n as usize).product();
        let exponent = factors.iter().fold(1u32, |acc, &n| acc.lcm(&n));
        Some(AbelianGroup { factors, order, exponent })
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new()).unwrap()
    }

    pub fn cyclic(n: u32) -> Option<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn tuple(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &n) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % n as usize) as u32;
            idx /= n as usize;
        }
        out
    }

    /// Index of an exponent tuple; entries are reduced modulo their factor.
    pub fn index(&self, tuple: &[u32]) -> usize {
        self.factors.iter().zip(tuple).fold(0, |acc, (&n, &t)| acc * n as usize + (t % n) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.tuple(a), self.tuple(b));
        let s: Vec<u32> = x.iter().zip(&y).zip(&self.factors).map(|((p, q), n)| (p + q) % n).collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let s: Vec<u32> = self.tuple(a).iter().zip(&self.factors).map(|(p, n)| (n - p) % n).collect();
        self.index(&s)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k·a` for any integer k.
    pub fn times(&self, k: i64, a: usize) -> usize {
        let s: Vec<u32> = self
            .tuple(a)
            .iter()
            .zip(&self.factors)
            .map(|(&p, &n)| (k * p as i64).rem_euclid(n as i64) as u32)
            .collect();
        self.index(&s)
    }

    pub fn sum(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    /// Unit vectors of the cyclic factors.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.factors.len())
            .map(|i| {
                let mut t = vec![0; self.factors.len()];
                t[i] = 1;
                self.index(&t)
            })
            .collect()
    }

    /// All characters, listed so that the character with exponent tuple t
    /// sits at position `index(t)`; characters share the element indexing.
    pub fn dual_group(&self) -> Vec<DualCharacter> {
        self.elements().map(|i| DualCharacter { exps: self.tuple(i) }).collect()
    }

    /// ρ(a) as an exponent k with ρ(a) = ζ_exp^k.
    pub fn char_exponent(&self, rho: usize, a: usize) -> u32 {
        let e = self.exponent as u64;
        let (r, x) = (self.tuple(rho), self.tuple(a));
        let k: u64 = r
            .iter()
            .zip(&x)
            .zip(&self.factors)
            .map(|((&ri, &xi), &n)| ri as u64 * xi as u64 * (e / n as u64))
            .sum();
        (k % e) as u32
    }

    pub fn char_value(&self, rho: usize, a: usize) -> Cyclotomic {
        Cyclotomic::zeta(self.exponent, self.char_exponent(rho, a) as i64)
    }

    pub fn trivial_character(&self) -> usize {
        0
    }

    /// Pointwise product of characters (addition of exponent tuples).
    pub fn char_mul(&self, r: usize, s: usize) -> usize {
        self.add(r, s)
    }

    /// Pointwise inverse, equal to the complex conjugate.
    pub fn char_inv(&self, r: usize) -> usize {
        self.neg(r)
    }

    /// The character a ↦ ρ(f(a)) for an endomorphism f given as an element map.
    pub fn char_precompose(&self, rho: usize, f: impl Fn(usize) -> usize) -> usize {
        let e = self.exponent;
        let exps: Vec<u32> = self
            .generators()
            .iter()
            .zip(&self.factors)
            .map(|(&g, &n)| self.char_exponent(rho, f(g)) / (e / n))
            .collect();
        self.index(&exps)
    }

    /// Recognizes a character from its values, given as exponents modulo the
    /// group exponent. `None` when the values are not a homomorphism.
    pub fn char_from_exponents(&self, value: impl Fn(usize) -> u32) -> Option<usize> {
        let e = self.exponent;
        let mut exps = Vec::with_capacity(self.factors.len());
        for (&g, &n) in self.generators().iter().zip(&self.factors) {
            let k = value(g) % e;
            if k % (e / n) != 0 {
                return None;
            }
            exps.push(k / (e / n));
        }
        let rho = self.index(&exps);
        self.elements().all(|a| self.char_exponent(rho, a) == value(a) % e).then_some(rho)
    }
}

impl DualCharacter {
    pub fn value(&self, group: &AbelianGroup, a: usize) -> Cyclotomic {
        group.char_value(group.index(&self.exps), a)
    }
}
