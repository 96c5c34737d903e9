//! Elements of cyclotomic fields `Q(ζ_n)` in the power basis
//! `1, ζ_n, …, ζ_n^{φ(n)-1}`, reduced modulo `Φ_n`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::nt::{euler_phi, lcm};
use super::poly::cyclotomic_polynomial_i64;

/// An exact element of `Q(ζ_n)`.
///
/// Elements whose non-constant coordinates vanish are always stored with
/// conductor 1, so rational values never carry a larger field around.
/// Operands of different conductors are lifted to the field of the least
/// common multiple; no other descent is attempted.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigRational::zero(); n as usize];
        poly[e] = BigRational::one();
        Self::from_poly(n, poly)
    }

    /// `Σ c_k ζ_n^k` for the given `(k, c_k)` terms.
    pub fn from_terms(n: u64, terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let mut poly = vec![BigRational::zero(); n as usize];
        for (k, c) in terms {
            poly[k.rem_euclid(n as i64) as usize] += c;
        }
        Self::from_poly(n, poly)
    }

    /// Builds an element from power-basis coordinates. `coeffs` must have
    /// exactly `φ(n)` entries.
    pub fn from_coefficients(n: u64, coeffs: Vec<BigRational>) -> Option<Self> {
        if n == 0 || coeffs.len() as u64 != euler_phi(n) {
            return None;
        }
        Some(Self { conductor: n, coeffs }.normalized())
    }

    /// Reduces an arbitrary polynomial in `ζ_n` into canonical form.
    fn from_poly(n: u64, poly: Vec<BigRational>) -> Self {
        Self { conductor: n, coeffs: reduce(n, poly) }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.conductor != 1 && self.coeffs.iter().skip(1).all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
        self
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates, `φ(conductor)` of them.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    /// The rational value of `self`, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        (self.conductor == 1).then(|| self.coeffs[0].clone())
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// The value of `self` as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().and_then(|r| r.is_integer().then(|| r.to_integer()))
    }

    /// Re-expresses `self` in `Q(ζ_m)`; `m` must be a multiple of the
    /// conductor.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.conductor == 0, "cannot lift conductor {} to {m}", self.conductor);
        if m == self.conductor {
            return self.clone();
        }
        Self { conductor: m, coeffs: self.lifted_coeffs(m) }
    }

    // coordinates in Q(ζ_m) without the rational normalization
    fn lifted_coeffs(&self, m: u64) -> Vec<BigRational> {
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        reduce(m, poly)
    }

    /// Complex conjugation, `ζ_n ↦ ζ_n^{-1}`.
    pub fn conj(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor as usize;
        let mut poly = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[(n - k) % n] = c.clone();
        }
        Self::from_poly(self.conductor, poly)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact sum of many elements. Terms are bucketed by conductor first;
    /// buckets whose partial sums are rational never get lifted, which is
    /// the common case for sums over Galois-stable sets of classes.
    pub fn sum<I: IntoIterator<Item = Cyclotomic>>(terms: I) -> Self {
        let mut buckets: BTreeMap<u64, Cyclotomic> = BTreeMap::new();
        for t in terms {
            match buckets.get_mut(&t.conductor) {
                Some(acc) => acc.add_same(&t),
                None => {
                    buckets.insert(t.conductor, t);
                }
            }
        }
        let mut rational = BigRational::zero();
        let mut rest: Vec<Cyclotomic> = Vec::new();
        for (_, b) in buckets {
            let b = b.normalized();
            match b.to_rational() {
                Some(r) => rational += r,
                None => rest.push(b),
            }
        }
        let mut total = Self::from_rational(rational);
        for b in rest {
            total += &b;
        }
        total
    }

    // in-place addition for operands of equal conductor, without normalizing
    fn add_same(&mut self, other: &Cyclotomic) {
        debug_assert_eq!(self.conductor, other.conductor);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    fn unify(a: &Self, b: &Self) -> (u64, Vec<BigRational>, Vec<BigRational>) {
        let m = lcm(a.conductor, b.conductor);
        (m, a.lifted_coeffs(m), b.lifted_coeffs(m))
    }

    /// Floating-point value `(re, im)` given `cos`/`sin` of `2π/n`-multiples.
    /// Only meant for advisory cross-checks; the exact path is authoritative.
    pub fn approximate(&self, cos_sin: impl Fn(u64, u64) -> (f64, f64)) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let (cr, sr) = cos_sin(k as u64, self.conductor);
            let v = rational_to_f64(c);
            re += v * cr;
            im += v * sr;
        }
        (re, im)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Reduces a polynomial in `x = ζ_n` (any length) to the `φ(n)` power-basis
/// coordinates: fold exponents modulo `n`, then divide by `Φ_n`.
fn reduce(n: u64, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let n_us = n as usize;
    if poly.len() > n_us {
        let tail = poly.split_off(n_us);
        for (i, c) in tail.into_iter().enumerate() {
            poly[i % n_us] += c;
        }
    }
    let phi = cyclotomic_polynomial_i64(n);
    let deg = phi.len() - 1;
    if poly.len() < deg {
        poly.resize(deg, BigRational::zero());
        return poly;
    }
    for top in (deg..poly.len()).rev() {
        if poly[top].is_zero() {
            continue;
        }
        let c = core::mem::replace(&mut poly[top], BigRational::zero());
        let base = top - deg;
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                poly[base + j] -= &c * BigInt::from(pj);
            }
        }
    }
    poly.truncate(deg);
    poly
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        // a rational can never equal an irrational element
        if self.conductor == 1 || other.conductor == 1 {
            return false;
        }
        let (_, a, b) = Self::unify(self, other);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "z{}^{k}", self.conductor)?,
                _ => write!(f, "({c})*z{}^{k}", self.conductor)?,
            }
        }
        Ok(())
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            let mut out = self.clone();
            out.add_same(rhs);
            return out.normalized();
        }
        let (m, a, b) = Cyclotomic::unify(self, rhs);
        let coeffs = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        Cyclotomic { conductor: m, coeffs }.normalized()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (m, a, b) = Cyclotomic::unify(self, rhs);
        let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyclotomic::from_poly(m, prod)
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            self.add_same(rhs);
            let taken = core::mem::replace(self, Cyclotomic::zero());
            *self = taken.normalized();
        } else {
            *self = &*self + rhs;
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn cs(k: u64, n: u64) -> (f64, f64) {
        let t = 2.0 * core::f64::consts::PI * k as f64 / n as f64;
        (t.cos(), t.sin())
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let s = Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2);
        assert_eq!(s, Cyclotomic::from_integer(-1));
        assert_eq!(s.to_rational(), Some(int(-1)));
    }

    #[test]
    fn conjugate_of_zeta5() {
        let c = Cyclotomic::zeta(5, 1).conj();
        // ζ^4 = -1 - ζ - ζ^2 - ζ^3
        assert_eq!(c.conductor(), 5);
        assert_eq!(c.coefficients(), &[int(-1), int(-1), int(-1), int(-1)]);
        assert_eq!(c, Cyclotomic::zeta(5, 4));
    }

    #[test]
    fn zeta8_squared_is_zeta4() {
        let z = Cyclotomic::zeta(8, 1);
        let sq = &z * &z;
        assert_eq!(sq.conductor(), 8);
        assert_eq!(sq, Cyclotomic::zeta(4, 1));
        assert_eq!(Cyclotomic::zeta(4, 1), sq);
        assert_eq!(Cyclotomic::zeta(4, 1).lift(8), sq);
    }

    #[test]
    fn mixed_conductors() {
        // ζ_3 + ζ_4 lives in Q(ζ_12); its float value must match
        let a = Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(4, 1);
        assert_eq!(a.conductor(), 12);
        let (re, im) = a.approximate(cs);
        assert!((re - (-0.5)).abs() < 1e-12);
        assert!((im - (0.75f64.sqrt() + 1.0)).abs() < 1e-12);
        let b = &a - &Cyclotomic::zeta(4, 1);
        assert_eq!(b, Cyclotomic::zeta(3, 1));
        assert_eq!(b.conductor(), 12);
    }

    #[test]
    fn zeta_is_root_of_its_cyclotomic_polynomial() {
        for n in 1..=60u64 {
            let phi = cyclotomic_polynomial_i64(n);
            let z = Cyclotomic::zeta(n, 1);
            let mut acc = Cyclotomic::zero();
            let mut pw = Cyclotomic::one();
            for &c in &phi {
                acc = &acc + &pw.scale(&int(c));
                pw = &pw * &z;
            }
            assert!(acc.is_zero(), "Φ_{n}(ζ_{n}) != 0");
        }
    }

    #[test]
    fn sum_buckets_match_pairwise_addition() {
        let terms = [
            Cyclotomic::zeta(7, 1),
            Cyclotomic::zeta(7, 6),
            Cyclotomic::zeta(9, 2).scale(&rat(1, 3)),
            Cyclotomic::from_integer(5),
            Cyclotomic::zeta(7, 2),
        ];
        let mut pairwise = Cyclotomic::zero();
        for t in &terms {
            pairwise = &pairwise + t;
        }
        assert_eq!(Cyclotomic::sum(terms.iter().cloned()), pairwise);
    }

    #[test]
    fn sums_of_roots_of_unity_vanish() {
        for n in 2..=30u64 {
            let s = Cyclotomic::sum((0..n as i64).map(|k| Cyclotomic::zeta(n, k)));
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let a = Cyclotomic::zeta(12, 5) + Cyclotomic::from_integer(2);
        let mut r = Cyclotomic::one();
        for _ in 0..7 {
            r = &r * &a;
        }
        assert_eq!(a.pow(7), r);
        assert_eq!(Cyclotomic::zeta(12, 1).pow(12), Cyclotomic::one());
    }
}
