//! The four-variable rational identity behind the trilinear count:
//!
//! ```text
//! (q+x1)(q+x2)(q+x3)/((q-1)q(q+1)) + x1x2x3/q
//!   - (1+x1)(1+x2)(1+x3)/(2(q-1)) + (1-x1)(1-x2)(1-x3)/(2(q+1)) = 1
//! ```

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Sparse polynomial in `q, x1, x2, x3`, keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly4(BTreeMap<[u32; 4], BigInt>);

impl Poly4 {
    pub fn constant(c: i64) -> Self {
        let mut p = Self::default();
        p.add_term([0; 4], BigInt::from(c));
        p
    }

    /// The `i`-th variable (`0` is `q`).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        let mut p = Self::default();
        p.add_term(e, BigInt::from(1));
        p
    }

    fn add_term(&mut self, e: [u32; 4], c: BigInt) {
        let slot = self.0.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.0 {
            out.add_term(*e, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 4], BigInt> {
        &self.0
    }
}

/// Left and right sides multiplied by `D = 2(q-1)q(q+1)`.
pub fn cleared_identity() -> (Poly4, Poly4) {
    let q = Poly4::var(0);
    let one = Poly4::constant(1);
    let x = [Poly4::var(1), Poly4::var(2), Poly4::var(3)];
    let prod3 = |f: &dyn Fn(&Poly4) -> Poly4| f(&x[0]).mul(&f(&x[1])).mul(&f(&x[2]));
    let qm = q.sub(&one);
    let qp = q.add(&one);
    let t1 = prod3(&|xi| q.add(xi)).scale(2);
    let t2 = prod3(&|xi| xi.clone()).mul(&qm).mul(&qp).scale(2);
    let t3 = prod3(&|xi| one.add(xi)).mul(&q).mul(&qp);
    let t4 = prod3(&|xi| one.sub(xi)).mul(&q).mul(&qm);
    let lhs = t1.add(&t2).sub(&t3).add(&t4);
    let rhs = qm.mul(&q).mul(&qp).scale(2);
    (lhs, rhs)
}

/// Whether the identity holds as polynomials after clearing denominators.
pub fn verify_identity_polynomial() -> bool {
    let (lhs, rhs) = cleared_identity();
    lhs == rhs
}

/// The left side evaluated exactly; `q ∉ {-1, 0, 1}`.
pub fn identity_lhs(q: &BigRational, x: [&BigRational; 3]) -> Result<BigRational> {
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let qm = q - &one;
    let qp = q + &one;
    if q.is_zero() || qm.is_zero() || qp.is_zero() {
        return Err(Error::InvalidInput("q must avoid -1, 0, 1".into()));
    }
    let p = |f: &dyn Fn(&BigRational) -> BigRational| f(x[0]) * f(x[1]) * f(x[2]);
    let a = p(&|xi| q + xi) / (&qm * q * &qp);
    let b = p(&|xi| xi.clone()) / q;
    let c = p(&|xi| &one + xi) / (&two * &qm);
    let d = p(&|xi| &one - xi) / (&two * &qp);
    Ok(a + b - c + d)
}
