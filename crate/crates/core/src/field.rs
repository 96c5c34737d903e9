//! Finite fields `F_q` with table-driven multiplication, and the quadratic
//! extension `F_{q^2}` used to describe non-split tori.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::nt::{factor, prime_power};
use crate::{Error, Result};

/// `F_q` for `q = p^m`. Elements are encoded as integers `0..q` holding the
/// base-`p` digits of their coordinates in the basis `1, x, …, x^{m-1}`,
/// where `x` is a root of a primitive polynomial; `0` is zero and `1` is one.
#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    m: u32,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.exp == other.exp
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::InvalidPrimePower(q))?;
        if q > (1 << 20) {
            return Err(Error::InvalidInput(alloc::format!("field of order {q} is too large")));
        }
        let (p, q) = (p as u32, q as u32);
        for modulus in monic_polys(p, m) {
            if let Some(exp) = powers_of_x(p, m, q, &modulus) {
                let mut log = vec![0u32; q as usize];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                return Ok(Self { p, m, q, exp, log });
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// The fixed generator of `F_q^×`.
    pub fn primitive(&self) -> u32 {
        self.exp[1 % (self.q as usize - 1)]
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.m == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.q);
        let n = self.q - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// `γ^k` for the fixed generator `γ`.
    pub fn gen_pow(&self, k: i64) -> u32 {
        let n = (self.q - 1) as i64;
        self.exp[k.rem_euclid(n) as usize]
    }

    /// Discrete logarithm to the base of the fixed generator.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Image of the integer `n` in the prime field.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize] % 2 == 0
    }

    /// The additive basis `1, x, …, x^{m-1}`.
    pub fn additive_basis(&self) -> Vec<u32> {
        (0..self.m).map(|i| self.p.pow(i)).collect()
    }
}

fn monic_polys(p: u32, m: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(m);
    (0..count).map(move |mut code| {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        for _ in 0..m {
            coeffs.push((code % p as u64) as u32);
            code /= p as u64;
        }
        coeffs.push(1);
        coeffs
    })
}

// successive powers of x modulo `modulus`, if x generates the unit group
fn powers_of_x(p: u32, m: u32, q: u32, modulus: &[u32]) -> Option<Vec<u32>> {
    let m = m as usize;
    if modulus[0] == 0 {
        return None;
    }
    let mut cur = vec![0u32; m];
    cur[0] = 1;
    let mut out = Vec::with_capacity(q as usize - 1);
    let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &d| acc * p + d);
    for k in 0..q - 1 {
        let code = encode(&cur);
        if k > 0 && code == 1 {
            return None;
        }
        out.push(code);
        // multiply by x
        let top = cur[m - 1];
        for i in (1..m).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..m {
            cur[i] = (cur[i] + (p - modulus[i] % p) * top) % p;
        }
    }
    (encode(&cur) == 1).then_some(out)
}

/// `F_{q^2} = F_q[θ]/(θ^2 - c1 θ - c0)`, elements `(a, b) = a + bθ`.
#[derive(Debug, Clone)]
pub struct QuadraticExtension {
    base: GaloisField,
    c1: u32,
    c0: u32,
    generator: (u32, u32),
}

impl QuadraticExtension {
    pub fn new(base: GaloisField) -> Self {
        let q = base.order();
        let (c1, c0) = (0..q)
            .flat_map(|c1| (1..q).map(move |c0| (c1, c0)))
            .find(|&(c1, c0)| {
                (0..q).all(|t| {
                    let v = base.sub(base.sub(base.mul(t, t), base.mul(c1, t)), c0);
                    v != 0
                })
            })
            .expect("an irreducible quadratic exists");
        let mut ext = Self { base, c1, c0, generator: (0, 1) };
        let n = (q as u64) * (q as u64) - 1;
        let primes: Vec<u64> = factor(n).into_iter().map(|(l, _)| l).collect();
        let gen = (0..q)
            .flat_map(|b| (0..q).map(move |a| (a, b)))
            .filter(|&(a, b)| (a, b) != (0, 0))
            .find(|&g| primes.iter().all(|&l| ext.pow(g, n / l) != (1, 0)))
            .expect("F_{q^2}^× is cyclic");
        ext.generator = gen;
        ext
    }

    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    /// A fixed generator `Γ` of `F_{q^2}^×`.
    pub fn generator(&self) -> (u32, u32) {
        self.generator
    }

    pub fn mul(&self, x: (u32, u32), y: (u32, u32)) -> (u32, u32) {
        let f = &self.base;
        let (a, b) = x;
        let (c, d) = y;
        let bd = f.mul(b, d);
        let re = f.add(f.mul(a, c), f.mul(bd, self.c0));
        let im = f.add(f.add(f.mul(a, d), f.mul(b, c)), f.mul(bd, self.c1));
        (re, im)
    }

    pub fn pow(&self, x: (u32, u32), mut e: u64) -> (u32, u32) {
        let mut acc = (1, 0);
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of multiplication by `x` on the `F_q`-basis `(1, θ)`, row-major,
    /// acting on column vectors.
    pub fn multiplication_matrix(&self, x: (u32, u32)) -> [u32; 4] {
        let one = self.mul(x, (1, 0));
        let th = self.mul(x, (0, 1));
        [one.0, th.0, one.1, th.1]
    }

    /// Roots of `t^2 - tr·t + det` in `F_{q^2}`, found by search.
    pub fn quadratic_roots(&self, tr: u32, det: u32) -> Vec<(u32, u32)> {
        let f = &self.base;
        let q = f.order();
        let mut out = Vec::new();
        for b in 0..q {
            for a in 0..q {
                let t = (a, b);
                let t2 = self.mul(t, t);
                let lin = self.mul((tr, 0), t);
                let v = (f.add(f.sub(t2.0, lin.0), det), f.sub(t2.1, lin.1));
                if v == (0, 0) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Discrete log base `Γ`, by search.
    pub fn log(&self, x: (u32, u32)) -> Option<u64> {
        let q = self.base.order() as u64;
        let mut cur = (1, 0);
        for k in 0..q * q - 1 {
            if cur == x {
                return Some(k);
            }
            cur = self.mul(cur, self.generator);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 25, 27] {
            let f = GaloisField::new(q).unwrap();
            let q = q as u32;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
            // characteristic
            let mut s = 0;
            for _ in 0..f.characteristic() {
                s = f.add(s, 1);
            }
            assert_eq!(s, 0);
        }
        assert!(GaloisField::new(6).is_err());
    }

    #[test]
    fn quadratic_extension_generator() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let ext = QuadraticExtension::new(GaloisField::new(q).unwrap());
            let n = q * q - 1;
            assert_eq!(ext.pow(ext.generator(), n), (1, 0));
            // the norm Γ^{q+1} lies in F_q and generates F_q^×
            let norm = ext.pow(ext.generator(), q + 1);
            assert_eq!(norm.1, 0);
        }
    }
}
