//! The lower-bound chain for `Σ_g χ(g)^3` when `q ≥ 43` is odd.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::display_opt;
use crate::arith::nt::prime_power;
use crate::{Error, Result};

/// Exact values of the chain
/// `Σχ³ > L1 ≥ L2 > L3 > 0` with
/// `L1 = (|G|/42)^3 - (2|G|/(q-1)) q^3 · 5`,
/// `L2 = (q-1)^3 q^3 (q+1)^3 / 84^3 - q(q+1) q^3 · 5`,
/// `L3 = q^4 (q+1)/84^3 · ((q-1)^3 (q+1) - 5·2^3·42^3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub q: u64,
    /// `Σ_g χ(g)^3`, absent when `PSL_2(F_q)` has no element of order 7.
    #[serde(serialize_with = "display_opt")]
    pub cube_sum: Option<BigInt>,
    #[serde(serialize_with = "super::display")]
    pub l1: BigRational,
    #[serde(serialize_with = "super::display")]
    pub l2: BigRational,
    #[serde(serialize_with = "super::display")]
    pub l3: BigRational,
    /// `(q-1)^3 (q+1) - 5·2^3·42^3`.
    #[serde(serialize_with = "super::display")]
    pub bracket: BigInt,
    /// `L1 = L2` as numbers.
    pub l1_equals_l2: bool,
}

impl BoundCheck {
    /// `cube_sum - L1`, when the sum is known.
    pub fn margin(&self) -> Option<BigRational> {
        self.cube_sum.as_ref().map(|s| BigRational::from_integer(s.clone()) - &self.l1)
    }
}

/// Evaluates the chain exactly and checks every link. `cube_sum` is the
/// exact value of `Σ_g χ(g)^3` when it exists.
pub fn bound_chain(q: u64, cube_sum: Option<BigInt>) -> Result<BoundCheck> {
    prime_power(q).ok_or(Error::InvalidPrimePower(q))?;
    if q < 43 || q % 2 == 0 {
        return Err(Error::InvalidInput(alloc::format!("the bound chain needs odd q >= 43, got {q}")));
    }
    let qi = BigInt::from(q);
    let one = BigInt::from(1);
    let order: BigInt = &qi * (&qi * &qi - &one) / 2;
    let r = |n: BigInt| BigRational::from_integer(n);
    let q3 = &qi * &qi * &qi;
    let c84 = BigInt::from(84).pow(3);
    let c42 = BigInt::from(42).pow(3);
    let l1 = BigRational::new(order.clone(), 42.into()).pow(3)
        - BigRational::new(&order * 2, &qi - &one) * r(&q3 * 5);
    let qm = &qi - &one;
    let qp = &qi + &one;
    let l2 = BigRational::new(qm.pow(3) * &q3 * qp.pow(3), c84.clone()) - r(&qi * &qp * &q3 * 5);
    let bracket = qm.pow(3) * &qp - BigInt::from(40) * &c42;
    let l3 = BigRational::new(q3 * &qi * &qp, c84) * r(bracket.clone());
    let check = BoundCheck { q, l1_equals_l2: l1 == l2, cube_sum, l1, l2, l3, bracket };
    let fail = |what: &str| Err(Error::TheoremViolation(alloc::format!("q = {q}: {what}")));
    if let Some(s) = &check.cube_sum {
        if r(s.clone()) <= check.l1 {
            return fail("sum of cubes does not exceed L1");
        }
    }
    if check.l1 < check.l2 {
        return fail("L1 < L2");
    }
    if check.l2 <= check.l3 {
        return fail("L2 <= L3");
    }
    if !check.l3.is_positive() || check.l3.is_zero() {
        return fail("L3 is not positive");
    }
    if check.bracket < &c42 * 4 {
        return fail("(q-1)^3 (q+1) - 5·2^3·42^3 < 42^3 · 4");
    }
    Ok(check)
}
