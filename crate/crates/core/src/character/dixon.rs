//! Character tables by Dixon's method: diagonalize the class-sum matrices
//! over `F_p`, then lift values through the power maps.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CharacterTable, ClassFunction};
use crate::arith::modp::{charpoly, inv_mod, is_prime, mul_mod, nullspace, pow_mod, primitive_root, roots, rref};
use crate::arith::nt::isqrt;
use crate::group::FiniteGroup;
use crate::{Cyclotomic, Error, Result};

/// Largest group handled.
pub const DIXON_CAP: usize = 100_000;

const PRIME_BOUND: u64 = 1 << 31;

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2⌊√|G|⌋`.
pub fn dixon_prime(exponent: u64, group_order: u64) -> Result<u64> {
    let lower = 2 * isqrt(group_order);
    let mut p = exponent + 1;
    while p <= PRIME_BOUND {
        if p > lower && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::PrimeSearchFailed { exponent, lower, bound: PRIME_BOUND })
}

/// Structure constants `c[j][l][k] = #{x ∈ C_j : x⁻¹ z_k ∈ C_l}` for fixed
/// representatives `z_k`, so that `K_j K_l = Σ_k c[j][l][k] K_k`.
pub fn class_multiplication_coefficients(group: &FiniteGroup) -> Vec<Vec<Vec<u64>>> {
    let r = group.classes().len();
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    let inverses: Vec<usize> = (0..group.order()).map(|x| group.inv(x)).collect();
    for (k, cls) in group.classes().iter().enumerate() {
        let z = cls.rep_index;
        for x in 0..group.order() {
            let j = group.class_of(x);
            let l = group.class_of(group.mul(inverses[x], z));
            c[j][l][k] += 1;
        }
    }
    c
}

// Basis rows of a subspace in reduced echelon form, with pivot columns.
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(mut rows: Vec<Vec<u64>>, p: u64) -> Self {
        let pivots = rref(&mut rows, p);
        rows.truncate(pivots.len());
        Self { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    // Matrix of `v ↦ A v` on this (A-invariant) subspace in its own basis:
    // coordinates of a vector in the span are its entries at the pivots.
    fn restrict(&self, a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
        let d = self.dim();
        let mut m = vec![vec![0u64; d]; d];
        for (c, b) in self.rows.iter().enumerate() {
            for (i, &piv) in self.pivots.iter().enumerate() {
                let mut acc = 0;
                for (k, &bk) in b.iter().enumerate() {
                    if bk != 0 {
                        acc = (acc + mul_mod(a[piv][k], bk, p)) % p;
                    }
                }
                m[i][c] = acc;
            }
        }
        m
    }
}

/// The full character table of `group`.
pub fn dixon_character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    if group.order() > DIXON_CAP {
        return Err(Error::TableUnavailable(alloc::format!("|G| = {} exceeds {DIXON_CAP}", group.order())));
    }
    let s = group.structure().clone();
    let r = s.len();
    let order = s.group_order;
    let exponent = s.exponent();
    let p = dixon_prime(exponent, order)?;
    let coeffs = class_multiplication_coefficients(group);
    // A_j[l][k] = c[j][l][k]; the vector (ω(K_l))_l is a right eigenvector
    let mats: Vec<Vec<Vec<u64>>> = coeffs
        .iter()
        .map(|cj| cj.iter().map(|row| row.iter().map(|&v| v % p).collect()).collect())
        .collect();

    let identity_rows: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let mut pending = vec![Subspace::new(identity_rows, p)];
    let mut done: Vec<Vec<u64>> = Vec::new();
    while let Some(space) = pending.pop() {
        if space.dim() == 1 {
            done.push(space.rows.into_iter().next().expect("dim 1"));
            continue;
        }
        let mut split = None;
        for a in mats.iter().skip(1) {
            let m = space.restrict(a, p);
            let eig = roots(&charpoly(&m, p), p);
            if eig.len() > 1 {
                split = Some((m, eig));
                break;
            }
        }
        let Some((m, eig)) = split else {
            return Err(Error::TableInconsistent("class algebra has a non-split eigenspace".into()));
        };
        let d = space.dim();
        let mut found = 0;
        for lambda in eig {
            let shifted: Vec<Vec<u64>> = (0..d)
                .map(|i| (0..d).map(|j| if i == j { (m[i][j] + p - lambda) % p } else { m[i][j] }).collect())
                .collect();
            let kernel = nullspace(&shifted, d, p);
            found += kernel.len();
            let vectors: Vec<Vec<u64>> = kernel
                .iter()
                .map(|coords| {
                    (0..r)
                        .map(|x| {
                            coords
                                .iter()
                                .zip(&space.rows)
                                .fold(0, |acc, (&c, b)| (acc + mul_mod(c, b[x], p)) % p)
                        })
                        .collect()
                })
                .collect();
            pending.push(Subspace::new(vectors, p));
        }
        if found != d {
            return Err(Error::TableInconsistent("class-sum matrix is not diagonalizable mod p".into()));
        }
    }
    if done.len() != r {
        return Err(Error::TableInconsistent(alloc::format!("found {} central characters for {r} classes", done.len())));
    }

    let z = primitive_root(p);
    let sizes_inv: Vec<u64> = (0..r).map(|c| inv_mod(s.size(c) % p, p)).collect();
    let mut characters = Vec::with_capacity(r);
    for v in done {
        let w0 = v[0];
        if w0 == 0 {
            return Err(Error::TableInconsistent("central character vanishes at the identity".into()));
        }
        let w0inv = inv_mod(w0, p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, w0inv, p)).collect();
        let mut sum = 0;
        for l in 0..r {
            let t = mul_mod(mul_mod(omega[l], omega[s.inverse(l)], p), sizes_inv[l], p);
            sum = (sum + t) % p;
        }
        if sum == 0 {
            return Err(Error::TableInconsistent("degree equation is singular".into()));
        }
        let d2 = mul_mod(order % p, inv_mod(sum, p), p);
        let degree = (1..=isqrt(order))
            .find(|&d| order % d == 0 && mul_mod(d, d, p) == d2)
            .ok_or_else(|| Error::TableInconsistent("no degree solves the degree equation".into()))?;
        let modp_values: Vec<u64> = (0..r).map(|l| mul_mod(mul_mod(omega[l], degree % p, p), sizes_inv[l], p)).collect();
        let values = (0..r)
            .map(|l| lift_value(&s, l, &modp_values, degree, z, p))
            .collect::<Result<Vec<_>>>()?;
        characters.push(ClassFunction::new(s.clone(), values)?);
    }
    characters.sort_by_key(|c| {
        let d = c.degree().to_integer().expect("integral");
        let nontrivial = c.values().iter().any(|v| *v != Cyclotomic::one());
        (d, nontrivial)
    });
    CharacterTable::new(s, characters, None)
}

// χ(g_l) = Σ_k m_k ζ_n^k where m_k = (1/n) Σ_j χ(g^j) ζ_n^{-jk} computed mod p.
fn lift_value(
    s: &crate::group::ClassStructure,
    l: usize,
    modp_values: &[u64],
    degree: u64,
    z: u64,
    p: u64,
) -> Result<Cyclotomic> {
    let n = s.order(l);
    if n == 1 {
        return Ok(Cyclotomic::from_integer(degree as i64));
    }
    let zeta = pow_mod(z, (p - 1) / n, p);
    let zeta_inv = inv_mod(zeta, p);
    let ninv = inv_mod(n % p, p);
    let mut terms = Vec::new();
    for k in 0..n {
        let step = pow_mod(zeta_inv, k, p);
        let mut acc = 0;
        let mut w = 1;
        for j in 0..n {
            acc = (acc + mul_mod(modp_values[s.power(l, j as i64)], w, p)) % p;
            w = mul_mod(w, step, p);
        }
        let m = mul_mod(acc, ninv, p);
        if m > degree {
            return Err(Error::TableInconsistent(alloc::format!("eigenvalue multiplicity {m} exceeds degree {degree}")));
        }
        if m != 0 {
            terms.push((k as i64, BigRational::from_integer(BigInt::from(m))));
        }
    }
    Ok(Cyclotomic::from_terms(n, terms))
}
