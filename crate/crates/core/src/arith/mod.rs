//! Exact arithmetic: big rationals, integer polynomials, cyclotomic fields
//! and the small amount of arithmetic modulo a word-sized prime that the
//! Dixon engine needs.

mod cyclotomic;
pub mod modp;
pub mod nt;
mod poly;

pub use cyclotomic::Cyclotomic;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{cyclotomic_polynomial, cyclotomic_polynomial_i64};

use num_traits::Signed;

/// `num / den` as a reduced big rational.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The integer value of `r`, if `r` is integral.
pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// The value of `r` as a nonnegative machine integer, if it is one.
pub fn as_u64(r: &BigRational) -> Option<u64> {
    let n = as_integer(r)?;
    if n.is_negative() {
        return None;
    }
    u64::try_from(&n).ok()
}
