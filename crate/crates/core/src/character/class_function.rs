//! Class functions with exact cyclotomic values.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::arith::as_integer;
use crate::group::ClassStructure;
use crate::{Cyclotomic, Error, Result};

/// A function on the conjugacy classes of a group, one exact value per class
/// in the order of its [`ClassStructure`]. Virtual characters are allowed.
#[derive(Clone, PartialEq)]
pub struct ClassFunction {
    structure: Arc<ClassStructure>,
    values: Vec<Cyclotomic>,
}

fn same_group(a: &Arc<ClassStructure>, b: &Arc<ClassStructure>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl ClassFunction {
    pub fn new(structure: Arc<ClassStructure>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != structure.len() {
            return Err(Error::InvalidInput(alloc::format!(
                "{} values for {} classes",
                values.len(),
                structure.len()
            )));
        }
        Ok(Self { structure, values })
    }

    pub fn from_integers(structure: Arc<ClassStructure>, values: &[i64]) -> Result<Self> {
        Self::new(structure, values.iter().map(|&v| Cyclotomic::from_integer(v)).collect())
    }

    pub fn constant(structure: Arc<ClassStructure>, c: i64) -> Self {
        let values = alloc::vec![Cyclotomic::from_integer(c); structure.len()];
        Self { structure, values }
    }

    pub fn zero(structure: Arc<ClassStructure>) -> Self {
        Self::constant(structure, 0)
    }

    pub fn trivial(structure: Arc<ClassStructure>) -> Self {
        Self::constant(structure, 1)
    }

    pub fn regular(structure: Arc<ClassStructure>) -> Self {
        let mut values = alloc::vec![Cyclotomic::zero(); structure.len()];
        values[0] = Cyclotomic::from_bigint(BigInt::from(structure.group_order));
        Self { structure, values }
    }

    pub fn structure(&self) -> &Arc<ClassStructure> {
        &self.structure
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// Integer values, if every value is a rational integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(|v| v.to_integer()).collect()
    }

    pub fn is_integer_valued(&self) -> bool {
        self.to_integers().is_some()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.structure, &other.structure) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(Self { structure: self.structure.clone(), values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (the character of the tensor product).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { structure: self.structure.clone(), values: self.values.iter().map(|v| v.scale(r)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&crate::arith::int(n))
    }

    /// Complex conjugate (the dual character).
    pub fn conj(&self) -> Self {
        Self { structure: self.structure.clone(), values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    /// `(1/|G|) Σ_C |C| Π f_i(C)` for the given factors.
    fn class_average(factors: &[&ClassFunction]) -> Result<Cyclotomic> {
        let first = factors[0];
        for f in &factors[1..] {
            first.check(f)?;
        }
        let s = &first.structure;
        let terms = (0..s.len()).map(|c| {
            let mut v = factors[0].values[c].clone();
            for f in &factors[1..] {
                v = &v * &f.values[c];
            }
            v.scale(&BigRational::from_integer(BigInt::from(s.size(c))))
        });
        let total = Cyclotomic::sum(terms);
        Ok(total.scale(&BigRational::new(1.into(), BigInt::from(s.group_order))))
    }

    /// `⟨f, h⟩ = (1/|G|) Σ_C |C| f(C) conj(h(C))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        Self::class_average(&[self, &other.conj()])
    }

    /// `dim (V^{⊗n})^G` for a character `χ` of `V`.
    pub fn tensor_power_invariant_dim(&self, n: u32) -> Result<u64> {
        if n == 0 {
            return Ok(1);
        }
        let s = &self.structure;
        let terms = (0..s.len()).map(|c| {
            self.values[c].pow(n).scale(&BigRational::from_integer(BigInt::from(s.size(c))))
        });
        let total = Cyclotomic::sum(terms).scale(&BigRational::new(1.into(), BigInt::from(s.group_order)));
        nonnegative_integer(&total)
    }

    /// `dim (V_1 ⊗ V_2 ⊗ V_3)^G`.
    pub fn triple_invariant_dim(a: &Self, b: &Self, c: &Self) -> Result<u64> {
        nonnegative_integer(&Self::class_average(&[a, b, c])?)
    }

    /// `f(g^k)` as a class function of `g`.
    pub fn power(&self, k: i64) -> Self {
        let s = &self.structure;
        let values = (0..s.len()).map(|c| self.values[s.power(c, k)].clone()).collect();
        Self { structure: s.clone(), values }
    }
}

/// The value as a nonnegative machine integer, or `NonIntegralResult`.
pub fn nonnegative_integer(v: &Cyclotomic) -> Result<u64> {
    let r = v.to_rational().ok_or_else(|| Error::NonIntegralResult(alloc::format!("{v}")))?;
    let n = as_integer(&r).ok_or_else(|| Error::NonIntegralResult(alloc::format!("{r}")))?;
    if n.is_negative() {
        return Err(Error::NonIntegralResult(alloc::format!("{n}")));
    }
    u64::try_from(&n).map_err(|_| Error::NonIntegralResult(alloc::format!("{n}")))
}

/// The value as a rational integer, or `NonIntegralResult`.
pub fn integer_value(v: &Cyclotomic) -> Result<BigInt> {
    v.to_integer().ok_or_else(|| Error::NonIntegralResult(alloc::format!("{v}")))
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (v, c)) in self.values.iter().zip(&self.structure.classes).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {}", c.label, v)?;
        }
        f.write_str("]")
    }
}
