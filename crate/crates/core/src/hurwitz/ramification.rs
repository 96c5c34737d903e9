//! Ramification types, Riemann–Hurwitz, and the Hurwitz character.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::character::{induced_from_cyclic, ClassFunction};
use crate::group::ClassStructure;
use crate::{Error, Result};

/// An ordered tuple of nontrivial conjugacy classes `(C_1, …, C_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationType {
    structure: Arc<ClassStructure>,
    classes: Vec<usize>,
}

impl RamificationType {
    pub fn new(structure: Arc<ClassStructure>, classes: Vec<usize>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::InvalidInput("a ramification type needs at least one class".into()));
        }
        for &c in &classes {
            if c >= structure.len() {
                return Err(Error::UnknownClass(alloc::format!("#{c}")));
            }
            if c == 0 {
                return Err(Error::InvalidInput("ramification classes must be nontrivial".into()));
            }
        }
        Ok(Self { structure, classes })
    }

    pub fn from_labels<S: AsRef<str>>(structure: Arc<ClassStructure>, labels: &[S]) -> Result<Self> {
        let classes = labels.iter().map(|l| structure.find(l.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(structure, classes)
    }

    pub fn structure(&self) -> &Arc<ClassStructure> {
        &self.structure
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|&c| self.structure.class(c).label.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Element orders `(e_1, …, e_r)` in increasing order.
    pub fn signature(&self) -> Vec<u64> {
        let mut s: Vec<u64> = self.classes.iter().map(|&c| self.structure.order(c)).collect();
        s.sort_unstable();
        s
    }

    pub fn genus(&self) -> Result<u64> {
        genus_from_signature(self.structure.group_order, &self.signature())
    }

    /// The same type with `C_i` replaced by the class of inverses.
    pub fn with_inverse(&self, i: usize) -> Self {
        let mut classes = self.classes.clone();
        classes[i] = self.structure.inverse(classes[i]);
        Self { structure: self.structure.clone(), classes }
    }
}

/// `2g - 2 = |G| (r - 2 - Σ 1/e_i)`.
pub fn euler_characteristic_term(group_order: u64, signature: &[u64]) -> Result<BigRational> {
    if let Some(&e) = signature.iter().find(|&&e| e < 2) {
        return Err(Error::InvalidInput(alloc::format!("ramification index {e} is below 2")));
    }
    let n = BigInt::from(group_order);
    let mut total = BigRational::from_integer(&n * BigInt::from(signature.len() as i64 - 2));
    for &e in signature {
        total -= BigRational::new(n.clone(), BigInt::from(e));
    }
    Ok(total)
}

/// Genus of a `G`-cover of `P^1` with the given signature; must be an
/// integer `≥ 2`.
pub fn genus_from_signature(group_order: u64, signature: &[u64]) -> Result<u64> {
    let t = euler_characteristic_term(group_order, signature)?;
    if !t.is_integer() || t.to_integer().is_odd() {
        return Err(Error::NonIntegralGenus(alloc::format!("{t}")));
    }
    let g: BigInt = t.to_integer() / 2 + 1;
    if g < BigInt::from(2) {
        return Err(Error::GenusTooSmall(g.to_i64().unwrap_or(i64::MIN)));
    }
    g.to_u64().ok_or_else(|| Error::NonIntegralGenus(alloc::format!("{t}")))
}

/// `-2(Ind_1 1 - 1) + Σ_i (Ind_1 1 - Ind_{G_i} 1)` with `G_i = ⟨γ_i⟩`.
pub fn hurwitz_character(ram: &RamificationType) -> Result<ClassFunction> {
    let s = ram.structure();
    let reg = ClassFunction::regular(s.clone());
    let triv = ClassFunction::trivial(s.clone());
    let mut hur = reg.sub(&triv)?.scale_int(-2);
    for &c in ram.classes() {
        hur = hur.add(&reg.sub(&induced_from_cyclic(s, c)?)?)?;
    }
    Ok(hur)
}

/// Hurwitz character values as machine integers.
pub fn integer_values(chi: &ClassFunction) -> Result<Vec<i64>> {
    chi.values()
        .iter()
        .map(|v| {
            let n = crate::character::integer_value(v)?;
            n.to_i64().ok_or_else(|| Error::NonIntegralResult(alloc::format!("{n} does not fit")))
        })
        .collect()
}

/// `dim H^1 = Hur(1)`, checked to be `2g`.
pub fn check_degree(chi: &ClassFunction, genus: u64) -> Result<()> {
    let d = crate::character::integer_value(chi.degree())?;
    if d.is_negative() || d != BigInt::from(2 * genus) {
        return Err(Error::TableInconsistent(alloc::format!("Hur(1) = {d} but 2g = {}", 2 * genus)));
    }
    Ok(())
}
