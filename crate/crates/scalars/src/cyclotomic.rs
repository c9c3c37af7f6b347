use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{cyclotomic_polynomial, euler_phi};
use crate::ScalarError;

/// An element of Q(ζ_N).
///
/// `coeffs` always has length φ(N). Values whose non-constant coefficients
/// vanish are stored at order 1, so rational arithmetic stays cheap.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![q] }
    }

    /// ζ_n^k, or an error when `n == 0`.
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroOrder);
        }
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Ok(Self::from_poly(n, poly))
    }

    /// Like [`Cyclotomic::root_of_unity`] for an order known to be positive.
    pub fn zeta(n: u32, k: i64) -> Self {
        Self::root_of_unity(n, k).expect("positive root of unity order")
    }

    /// Builds Σ poly[k] ζ_n^k and reduces it.
    pub fn from_poly(n: u32, poly: Vec<BigRational>) -> Self {
        assert!(n > 0);
        let coeffs = reduce(n, poly);
        Cyclotomic { order: n, coeffs }.collapse()
    }

    /// Validated constructor from raw coefficients (length must be φ(n)).
    pub fn from_coefficients(n: u32, coeffs: Vec<BigRational>) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroOrder);
        }
        if coeffs.len() != euler_phi(n) as usize {
            return Err(ScalarError::Malformed(format!(
                "order {n} needs {} coefficients, got {}",
                euler_phi(n),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { order: n, coeffs }.collapse())
    }

    fn collapse(mut self) -> Self {
        if self.order > 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.order = 1;
        }
        self
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// The same value written over Q(ζ_m); `m` must be a multiple of the order.
    pub fn embed(&self, m: u32) -> Result<Self, ScalarError> {
        if m == 0 || m % self.order != 0 {
            return Err(ScalarError::BadEmbedding { from: self.order, to: m });
        }
        Ok(Cyclotomic { order: m, coeffs: self.embed_coeffs(m) })
    }

    fn embed_coeffs(&self, m: u32) -> Vec<BigRational> {
        if m == self.order {
            return self.coeffs.clone();
        }
        let step = (m / self.order) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        reduce(m, poly)
    }

    fn common(a: &Self, b: &Self) -> (u32, Vec<BigRational>, Vec<BigRational>) {
        let m = a.order.lcm(&b.order);
        (m, a.embed_coeffs(m), b.embed_coeffs(m))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // Solve (multiplication by self) · b = 1 in the power basis.
        let d = self.coeffs.len();
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let mut poly = vec![BigRational::zero(); j];
            poly.extend(self.coeffs.iter().cloned());
            cols.push(reduce(self.order, poly));
        }
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        let sol = solve_rational(&cols, rhs).ok_or(ScalarError::DivisionByZero)?;
        Ok(Cyclotomic { order: self.order, coeffs: sol }.collapse())
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut poly = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(n - k) % n] += c;
        }
        Self::from_poly(self.order, poly)
    }

    /// Numerical embedding ζ_N ↦ exp(2πi/N). Display only.
    pub fn approximate_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }

    pub fn to_repr(&self) -> ScalarRepr {
        ScalarRepr {
            order: self.order,
            coefficients: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_repr(repr: &ScalarRepr) -> Result<Self, ScalarError> {
        let coeffs = repr
            .coefficients
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_coefficients(repr.order, coeffs)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let bad = || ScalarError::Malformed(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

// Fold exponents modulo n, then reduce modulo Φ_n.
fn reduce(n: u32, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let n = n as usize;
    if poly.len() > n {
        let tail = poly.split_off(n);
        for (k, c) in tail.into_iter().enumerate() {
            poly[k % n] += c;
        }
    }
    let phi_poly = cyclotomic_polynomial(n as u32);
    let deg = phi_poly.len() - 1;
    if poly.len() < deg {
        poly.resize(deg, BigRational::zero());
    }
    for d in (deg..poly.len()).rev() {
        if poly[d].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[d], BigRational::zero());
        for (j, &pj) in phi_poly[..deg].iter().enumerate() {
            if pj != 0 {
                poly[d - deg + j] -= &c * BigInt::from(pj);
            }
        }
    }
    poly.truncate(deg);
    poly
}

// Solve a square system given by columns; None when singular.
fn solve_rational(cols: &[Vec<BigRational>], rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let d = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=d {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = Self::common(self, other);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == 1 && rhs.order == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        let (m, mut a, b) = Cyclotomic::common(self, rhs);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Cyclotomic { order: m, coeffs: a }.collapse()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == 1 && rhs.order == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        if self.order == 1 || rhs.order == 1 {
            let (q, v) = if self.order == 1 { (&self.coeffs[0], rhs) } else { (&rhs.coeffs[0], self) };
            if q.is_zero() {
                return Cyclotomic::zero();
            }
            let coeffs = v.coeffs.iter().map(|c| c * q).collect();
            return Cyclotomic { order: v.order, coeffs };
        }
        let (m, a, b) = Cyclotomic::common(self, rhs);
        let mut poly = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_poly(m, poly)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident $atr:ident $am:ident),*) => {$(
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic { (&self).$m(rhs) }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { self.$m(&rhs) }
        }
        impl<'a> $atr<&'a Cyclotomic> for Cyclotomic {
            fn $am(&mut self, rhs: &Cyclotomic) { *self = (&*self).$m(rhs); }
        }
        impl $atr<Cyclotomic> for Cyclotomic {
            fn $am(&mut self, rhs: Cyclotomic) { *self = (&*self).$m(&rhs); }
        }
    )*};
}

owned_ops!(Add add AddAssign add_assign, Sub sub SubAssign sub_assign, Mul mul MulAssign mul_assign);

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let zeta = match k {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, k),
            };
            if zeta.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{zeta}")?;
            } else {
                write!(f, "{mag}*{zeta}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// JSON form of a scalar: `{"order": N, "coefficients": ["1", "-1/2", ...]}`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ScalarRepr {
    pub order: u32,
    pub coefficients: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        Cyclotomic::from_repr(&repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn roots_of_unity() {
        assert!(Cyclotomic::zeta(1, 0).is_one());
        let w = Cyclotomic::zeta(3, 1);
        let w2 = Cyclotomic::zeta(3, 2);
        assert!((&(&w + &w2) + &Cyclotomic::one()).is_zero());
        let m1 = Cyclotomic::zeta(2, 1);
        assert_eq!(m1, Cyclotomic::from_integer(-1));
        assert!((&m1 * &m1).is_one());
        assert_eq!(Cyclotomic::root_of_unity(0, 1), Err(ScalarError::ZeroOrder));
    }

    #[test]
    fn reduction_mod_phi3() {
        let s = &Cyclotomic::zeta(3, 1) + &Cyclotomic::zeta(3, 2);
        assert_eq!(s, Cyclotomic::from_integer(-1));
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn inverse_of_zeta6() {
        let z = Cyclotomic::zeta(6, 1);
        assert_eq!(z.inv().unwrap(), Cyclotomic::zeta(6, 5));
        assert_eq!(Cyclotomic::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn general_inverse() {
        let x = &Cyclotomic::from_rational(q(2, 3)) + &Cyclotomic::zeta(12, 5);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn mixed_orders_embed() {
        let i = Cyclotomic::zeta(4, 1);
        let w = Cyclotomic::zeta(3, 1);
        let p = &i * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(p, Cyclotomic::zeta(12, 7));
        assert_eq!(Cyclotomic::zeta(6, 2), w);
    }

    #[test]
    fn approximations() {
        let (re, im) = Cyclotomic::zeta(4, 1).approximate_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = Cyclotomic::zeta(3, 1).approximate_complex();
        assert!((re + 0.5).abs() < 1e-12 && (im - 0.8660254037844386).abs() < 1e-12);
    }

    #[test]
    fn conj_and_pow() {
        let z = Cyclotomic::zeta(5, 2);
        assert_eq!(z.conj(), Cyclotomic::zeta(5, 3));
        assert_eq!(z.pow(3).unwrap(), Cyclotomic::zeta(5, 1));
        assert_eq!(z.pow(-1).unwrap(), Cyclotomic::zeta(5, 3));
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::zeta(3, 2).to_string(), "-1 - z3");
        assert_eq!(Cyclotomic::from_rational(q(-1, 2)).to_string(), "-1/2");
    }
}
