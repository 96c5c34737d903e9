//! Permutation characters `Ind_H^G(1)`.

use alloc::vec;

use num_bigint::BigInt;

use super::ClassFunction;
use crate::group::{ClassStructure, FiniteGroup};
use crate::{Cyclotomic, Error, Result};

/// `Ind_H^G(1)` for a subgroup `H` given by element indices. The value at `g`
/// is `|C_G(g)| · |g^G ∩ H| / |H|`.
pub fn induced_trivial_character(group: &FiniteGroup, h: &[usize]) -> Result<ClassFunction> {
    group.check_subgroup(h)?;
    let mut hits = vec![0u64; group.classes().len()];
    for &x in h {
        hits[group.class_of(x)] += 1;
    }
    let s = group.structure();
    let values = hits
        .iter()
        .enumerate()
        .map(|(c, &n)| {
            let num = s.centralizer_order(c) * n;
            if num % h.len() as u64 != 0 {
                return Err(Error::NonIntegralResult(alloc::format!("induced value {num}/{}", h.len())));
            }
            Ok(Cyclotomic::from_bigint(BigInt::from(num / h.len() as u64)))
        })
        .collect::<Result<_>>()?;
    ClassFunction::new(s.clone(), values)
}

/// `Ind_{⟨x⟩}^G(1)` for `x` in class `c`, from class data alone: the value at
/// class `D` is `|C_G(d)| · #{0 ≤ k < n : x^k ∈ D} / n` with `n = ord(x)`.
pub fn induced_from_cyclic(structure: &alloc::sync::Arc<ClassStructure>, c: usize) -> Result<ClassFunction> {
    let info = structure.class(c);
    let n = info.order;
    let mut hits = vec![0u64; structure.len()];
    for &d in &info.power_map {
        hits[d as usize] += 1;
    }
    let values = hits
        .iter()
        .enumerate()
        .map(|(d, &k)| {
            let num = structure.centralizer_order(d) * k;
            if num % n != 0 {
                return Err(Error::NonIntegralResult(alloc::format!("induced value {num}/{n}")));
            }
            Ok(Cyclotomic::from_bigint(BigInt::from(num / n)))
        })
        .collect::<Result<_>>()?;
    ClassFunction::new(structure.clone(), values)
}
