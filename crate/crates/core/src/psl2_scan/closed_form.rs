//! The Hurwitz character of `PSL_2(F_q)` from torus data.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::nt::{gcd, prime_power};
use crate::character::ClassFunction;
use crate::group::{LinearClasses, LinearFamily, TorusClass};
use crate::hurwitz::{genus_from_signature, RamificationType};
use crate::{Cyclotomic, Error, Result};

/// Whether `PSL_2(F_q)` is the automorphism group of some Hurwitz curve
/// (Macbeath): `q = 7`, or `q = p ≡ ±1 (7)`, or `q = p^3` with
/// `p ≡ ±2, ±3 (7)`.
pub fn macbeath_admissible(q: u64) -> Result<bool> {
    let (p, m) = prime_power(q).ok_or(Error::InvalidPrimePower(q))?;
    Ok(match m {
        _ if q == 7 => true,
        1 => matches!(p % 7, 1 | 6),
        3 => matches!(p % 7, 2 | 3 | 4 | 5),
        _ => false,
    })
}

/// The first class of each signature order, or `None` when some order does
/// not occur in the group.
pub fn standard_ramification(classes: &LinearClasses, signature: &[u64]) -> Result<Option<RamificationType>> {
    let s = classes.structure();
    let mut picked = Vec::with_capacity(signature.len());
    for &e in signature {
        match (1..s.len()).find(|&c| s.order(c) == e) {
            Some(c) => picked.push(c),
            None => return Ok(None),
        }
    }
    RamificationType::new(s.clone(), picked).map(Some)
}

fn integral(r: BigRational) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::NonIntegralResult(alloc::format!("{r}")));
    }
    i64::try_from(r.to_integer()).map_err(|_| Error::NonIntegralResult("value out of range".into()))
}

/// Number of fixed points of a unipotent element of class `c` on the points
/// over branch points with `e_i = p`, by direct induction: each such branch
/// point contributes `|C_G(u)| · |cl(u) ∩ G_i| / p`.
fn unipotent_fixed_points(ram: &RamificationType, c: usize, p: u64) -> u64 {
    let s = ram.structure();
    ram.classes()
        .iter()
        .filter(|&&ci| s.order(ci) == p)
        .map(|&ci| {
            let hits = s.class(ci).power_map.iter().filter(|&&d| d as usize == c).count() as u64;
            s.centralizer_order(c) * hits / p
        })
        .sum()
}

/// The unipotent term read with `n = m` for `q = p^m`:
/// `(m, 2)/2 · q (1 - 1/p) · #{i : e_i = p}`.
fn naive_unipotent_fixed_points(q: u64, p: u64, m: u32, signature: &[u64]) -> BigRational {
    let count = signature.iter().filter(|&&e| e == p).count() as i64;
    BigRational::new(BigInt::from(gcd(m as u64, 2)), BigInt::from(2))
        * BigRational::new(BigInt::from(q * (p - 1)), BigInt::from(p))
        * BigRational::from_integer(BigInt::from(count))
}

/// Closed-form values together with whether the literal unipotent term
/// (read with `n = m`) agrees with direct induction, when that term is used.
pub fn closed_form_with_check(classes: &LinearClasses, ram: &RamificationType) -> Result<(ClassFunction, Option<bool>)> {
    let q = classes.q();
    if classes.family() != LinearFamily::Psl2 || q % 2 == 0 {
        return Err(Error::InvalidInput(alloc::format!("closed form needs PSL2(q) with q odd, got q = {q}")));
    }
    let (p, m) = prime_power(q).ok_or(Error::InvalidPrimePower(q))?;
    let s = classes.structure();
    if ram.structure() != s {
        return Err(Error::GroupMismatch);
    }
    let signature = ram.signature();
    let genus = genus_from_signature(s.group_order, &signature)?;
    let torus_term = |d: u64, n: u64| -> BigRational {
        signature
            .iter()
            .filter(|&&e| e % d == 0)
            .map(|&e| BigRational::new(BigInt::from(n), BigInt::from(e)))
            .sum()
    };
    let mut naive_agrees = None;
    let mut values = Vec::with_capacity(s.len());
    for c in 0..s.len() {
        let d = s.order(c);
        let v = match classes.kind(c) {
            TorusClass::Identity => 2 * genus as i64,
            TorusClass::Split(_) => 2 - integral(torus_term(d, q - 1))?,
            TorusClass::Nonsplit(_) => 2 - integral(torus_term(d, q + 1))?,
            TorusClass::Unipotent(_) => {
                let direct = unipotent_fixed_points(ram, c, p);
                if signature.contains(&p) {
                    let naive = naive_unipotent_fixed_points(q, p, m, &signature);
                    let ok = naive == BigRational::from_integer(BigInt::from(direct));
                    naive_agrees = Some(naive_agrees.unwrap_or(true) && ok);
                }
                2 - direct as i64
            }
        };
        values.push(Cyclotomic::from_integer(v));
    }
    Ok((ClassFunction::new(s.clone(), values)?, naive_agrees))
}

/// The Hurwitz character of `PSL_2(F_q)`, `q` odd, for the standard
/// ramification type of `signature`.
pub fn closed_form_hurwitz_character(q: u64, signature: &[u64]) -> Result<ClassFunction> {
    let classes = LinearClasses::new(LinearFamily::Psl2, q)?;
    let ram = standard_ramification(&classes, signature)?.ok_or_else(|| {
        Error::InvalidInput(alloc::format!("PSL2({q}) has no elements of some order in {signature:?}"))
    })?;
    closed_form_with_check(&classes, &ram).map(|(f, _)| f)
}
