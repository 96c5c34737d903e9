use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    InvalidPrimePower(u64),
    #[error("group enumeration exceeded the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("semidirect action is not a homomorphism into automorphisms: {0}")]
    NonFaithfulAction(String),
    #[error("invalid group recipe: {0}")]
    InvalidSpec(String),
    #[error("element list is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("expected a nonnegative integer, got {0}")]
    NonIntegralResult(String),
    #[error("no prime p = 1 mod {exponent} with p > {lower} below {bound}")]
    PrimeSearchFailed { exponent: u64, lower: u64, bound: u64 },
    #[error("character table failed a consistency check: {0}")]
    TableInconsistent(String),
    #[error("Riemann-Hurwitz gives a non-integral genus: 2g - 2 = {0}")]
    NonIntegralGenus(String),
    #[error("genus {0} is below 2")]
    GenusTooSmall(i64),
    #[error("no character table available: {0}")]
    TableUnavailable(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown conjugacy class label {0:?}")]
    UnknownClass(String),
    #[error("trilinear identity violated for {0}")]
    TheoremViolation(String),
}
