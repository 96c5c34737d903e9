//! Character tables and decompositions.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::class_function::integer_value;
use super::ClassFunction;
use crate::group::ClassStructure;
use crate::{Cyclotomic, Error, Result};

/// The irreducible characters of a group, optionally named.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    structure: Arc<ClassStructure>,
    characters: Vec<ClassFunction>,
    names: Vec<String>,
}

/// Multiplicities of the irreducibles in a virtual character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub multiplicities: Vec<BigInt>,
    /// All multiplicities are nonnegative.
    pub genuine: bool,
}

impl CharacterTable {
    /// Builds a table and checks it; names default to `X.1, X.2, …`.
    pub fn new(structure: Arc<ClassStructure>, characters: Vec<ClassFunction>, names: Option<Vec<String>>) -> Result<Self> {
        let names = names.unwrap_or_else(|| (1..=characters.len()).map(|i| alloc::format!("X.{i}")).collect());
        if names.len() != characters.len() {
            return Err(Error::InvalidInput("one name per character".into()));
        }
        let t = Self { structure, characters, names };
        t.validate()?;
        Ok(t)
    }

    pub fn structure(&self) -> &Arc<ClassStructure> {
        &self.structure
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.characters[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters
            .iter()
            .map(|c| u64::try_from(&integer_value(c.degree()).expect("checked in validate")).expect("positive"))
            .collect()
    }

    /// Row and column orthogonality, `Σ χ(1)^2 = |G|`, degrees dividing `|G|`.
    pub fn validate(&self) -> Result<()> {
        let s = &self.structure;
        let r = s.len();
        if self.characters.len() != r {
            return Err(Error::TableInconsistent(alloc::format!("{} characters for {r} classes", self.characters.len())));
        }
        let mut square_sum = BigInt::zero();
        for chi in &self.characters {
            if !Arc::ptr_eq(chi.structure(), s) && **chi.structure() != **s {
                return Err(Error::GroupMismatch);
            }
            let d = integer_value(chi.degree()).map_err(|_| Error::TableInconsistent("non-integral degree".into()))?;
            if !d.is_positive() || BigInt::from(s.group_order) % &d != BigInt::zero() {
                return Err(Error::TableInconsistent(alloc::format!("degree {d} does not divide |G|")));
            }
            square_sum += &d * &d;
        }
        if square_sum != BigInt::from(s.group_order) {
            return Err(Error::TableInconsistent(alloc::format!("sum of squared degrees is {square_sum}")));
        }
        for (i, a) in self.characters.iter().enumerate() {
            for (j, b) in self.characters.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let want = Cyclotomic::from_integer((i == j) as i64);
                if ip != want {
                    return Err(Error::TableInconsistent(alloc::format!("<X.{}, X.{}> = {ip}", i + 1, j + 1)));
                }
            }
        }
        for g in 0..r {
            for h in g..r {
                let sum = Cyclotomic::sum(self.characters.iter().map(|c| c.value(g) * &c.value(h).conj()));
                let want = if g == h { Cyclotomic::from_bigint(BigInt::from(s.centralizer_order(g))) } else { Cyclotomic::zero() };
                if sum != want {
                    return Err(Error::TableInconsistent(alloc::format!(
                        "column orthogonality fails at ({}, {})",
                        s.class(g).label,
                        s.class(h).label
                    )));
                }
            }
        }
        Ok(())
    }

    /// `m_i = ⟨χ, χ_i⟩`; fails unless every `m_i` is an integer.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Decomposition> {
        let multiplicities = self
            .characters
            .iter()
            .map(|irr| integer_value(&chi.inner_product(irr)?))
            .collect::<Result<Vec<_>>>()?;
        let genuine = multiplicities.iter().all(|m| !m.is_negative());
        Ok(Decomposition { multiplicities, genuine })
    }

    /// `Σ m_i χ_i`.
    pub fn rebuild(&self, multiplicities: &[BigInt]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(self.structure.clone());
        for (m, chi) in multiplicities.iter().zip(&self.characters) {
            acc = acc.add(&chi.scale(&BigRational::from_integer(m.clone())))?;
        }
        Ok(acc)
    }

    /// Renders a decomposition like `2 X.3 + X.5`.
    pub fn describe(&self, d: &Decomposition) -> String {
        let parts: Vec<String> = d
            .multiplicities
            .iter()
            .zip(&self.names)
            .filter(|(m, _)| !m.is_zero())
            .map(|(m, n)| if *m == BigInt::from(1) { n.clone() } else { alloc::format!("{m} {n}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
