//! Arithmetic modulo a word-sized prime: primality, primitive roots,
//! dense linear algebra and root finding for the Dixon engine.

use alloc::vec;
use alloc::vec::Vec;

use super::nt::factor;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero");
    pow_mod(a, p - 2, p)
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let primes: Vec<u64> = factor(p - 1).into_iter().map(|(q, _)| q).collect();
    (2..p)
        .find(|&g| primes.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Symmetric lift of a residue into `(-p/2, p/2]`.
pub fn symmetric_lift(a: u64, p: u64) -> i64 {
    if a > p / 2 {
        a as i64 - p as i64
    } else {
        a as i64
    }
}

pub fn reduce_i64(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// Row-reduces `m` in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let t = mul_mod(f, m[r][j], p);
                    m[i][j] = sub_mod(m[i][j], t, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel of `m` (`cols`-dimensional vectors).
pub fn nullspace(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = sub_mod(0, a[r][f], p);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial (monic, lowest degree first) via reduction to
/// Hessenberg form.
pub fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h = m.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for k in j + 2..n {
            if h[k][j] == 0 {
                continue;
            }
            let u = mul_mod(h[k][j], inv, p);
            for c in 0..n {
                let t = mul_mod(u, h[j + 1][c], p);
                h[k][c] = sub_mod(h[k][c], t, p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[k], p);
                row[j + 1] = add_mod(row[j + 1], t, p);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for mm in 1..=n {
        let prev = &polys[mm - 1];
        let mut cur = vec![0u64; mm + 1];
        for (d, &c) in prev.iter().enumerate() {
            cur[d + 1] = add_mod(cur[d + 1], c, p);
            cur[d] = sub_mod(cur[d], mul_mod(c, h[mm - 1][mm - 1], p), p);
        }
        let mut t = 1u64;
        for i in (1..mm).rev() {
            t = mul_mod(t, h[i][i - 1], p);
            let coef = mul_mod(t, h[i - 1][mm - 1], p);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                cur[d] = sub_mod(cur[d], mul_mod(coef, c, p), p);
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

fn trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn degree(f: &[u64]) -> usize {
    f.len() - 1
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = degree(b);
    let inv = inv_mod(*b.last().unwrap(), p);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let shift = r.len() - 1 - db;
        let c = mul_mod(*r.last().unwrap(), inv, p);
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = sub_mod(r[shift + j], mul_mod(c, bj, p), p);
        }
        r.pop();
        trim(&mut r);
    }
    if r.is_empty() {
        r.push(0);
    }
    r
}

fn poly_quo(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = degree(b);
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; a.len().saturating_sub(db).max(1)];
    while r.len() > db && r.len() > 1 {
        let shift = r.len() - 1 - db;
        let c = mul_mod(*r.last().unwrap(), inv, p);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = sub_mod(r[shift + j], mul_mod(c, bj, p), p);
        }
        r.pop();
    }
    trim(&mut q);
    q
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Distinct roots in `F_p` of `f` (odd prime `p`), in increasing order.
pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if degree(&f) == 0 {
        return Vec::new();
    }
    // g = gcd(f, x^p - x) collects the linear factors
    let xp = poly_powmod(&[0, 1], p, &f, p);
    let mut xp_minus_x = xp;
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = sub_mod(xp_minus_x[1], 1, p);
    trim(&mut xp_minus_x);
    let g = if xp_minus_x.len() == 1 && xp_minus_x[0] == 0 {
        f.clone()
    } else {
        poly_gcd(&f, &xp_minus_x, p)
    };
    let mut out = Vec::new();
    split_linear(&g, p, &mut out);
    out.sort_unstable();
    out
}

// g is monic and squarefree with all roots in F_p
fn split_linear(g: &[u64], p: u64, out: &mut Vec<u64>) {
    match degree(g) {
        0 => {}
        1 => out.push(sub_mod(0, g[0], p)),
        _ => {
            if g[0] == 0 {
                out.push(0);
                split_linear(&poly_quo(g, &[0, 1], p), p, out);
                return;
            }
            for a in 0..p {
                let mut h = poly_powmod(&[a, 1], (p - 1) / 2, g, p);
                h[0] = sub_mod(h[0], 1, p);
                trim(&mut h);
                if h.len() == 1 && h[0] == 0 {
                    continue;
                }
                let d = poly_gcd(g, &h, p);
                if degree(&d) > 0 && degree(&d) < degree(g) {
                    let rest = poly_quo(g, &d, p);
                    split_linear(&d, p, out);
                    split_linear(&rest, p, out);
                    return;
                }
            }
            unreachable!("equal-degree splitting failed on a split polynomial");
        }
    }
}
