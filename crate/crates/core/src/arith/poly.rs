//! Integer polynomials needed for cyclotomic fields. Coefficient vectors
//! are stored lowest degree first.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::nt::{divisors, mobius};

/// The `n`-th cyclotomic polynomial `Φ_n`, obtained by dividing `x^n - 1`
/// by `Φ_d` for every proper divisor `d` of `n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let mut memo = BTreeMap::new();
    phi_by_division(n, &mut memo)
}

fn phi_by_division(n: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = phi_by_division(d, memo);
        num = exact_div_monic(&num, &den);
    }
    memo.insert(n, num.clone());
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quo
}

/// `Φ_n` with machine-word coefficients, built as the Möbius product
/// `∏_{d | n} (x^d - 1)^{μ(n/d)}`. Used on the hot path of cyclotomic
/// arithmetic; agrees with [`cyclotomic_polynomial`].
pub fn cyclotomic_polynomial_i64(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let divs = divisors(n);
    let mut poly = vec![1i64];
    for &d in &divs {
        if mobius(n / d) == 1 {
            poly = mul_binomial(&poly, d as usize);
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            poly = div_binomial(&poly, d as usize);
        }
    }
    poly
}

// f * (x^d - 1)
fn mul_binomial(f: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; f.len() + d];
    for (i, &c) in f.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

// f / (x^d - 1), exact
fn div_binomial(f: &[i64], d: usize) -> Vec<i64> {
    let deg = f.len() - 1;
    let mut q = vec![0i64; deg + 1 - d];
    for j in (d..=deg).rev() {
        let above = if j <= deg - d { q[j] } else { 0 };
        q[j - d] = f[j] + above;
    }
    debug_assert_eq!(-q[0], f[0]);
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        // x^9 - 1 = (x - 1)(x^2 + x + 1)(x^6 + x^3 + 1)
        assert_eq!(cyclotomic_polynomial(9), ints(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn two_constructions_agree() {
        for n in 1..=120 {
            let slow = cyclotomic_polynomial(n);
            let fast = cyclotomic_polynomial_i64(n);
            assert_eq!(slow, ints(&fast), "n = {n}");
            assert_eq!(fast.len() as u64 - 1, super::super::nt::euler_phi(n));
        }
        // first coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial_i64(105).contains(&-2));
    }
}
