//! Certificates for the vanishing of the trilinear invariant `d_3`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::existence::{existence_check, ExistenceReport, Generation};
use super::ramification::{check_degree, hurwitz_character, RamificationType};
use crate::character::{integer_value, CharacterTable, ClassFunction};
use crate::group::{ClassStructure, FiniteGroup, GroupElement};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "criterion satisfied")]
    Satisfied,
    #[serde(rename = "criterion NOT satisfied")]
    NotSatisfied,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Satisfied => "criterion satisfied",
            Verdict::NotSatisfied => "criterion NOT satisfied",
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub name: String,
    pub degree: u64,
    pub multiplicity: i64,
}

/// Everything needed to check `d_3 = 0` for one ramification type.
#[derive(Debug, Clone, Serialize)]
pub struct VanishingCertificate {
    pub group: String,
    pub classes: Vec<String>,
    pub signature: Vec<u64>,
    pub genus: u64,
    pub dim_h1: u64,
    /// `⟨Hur^3, 1⟩`; negative values only occur for types with no cover.
    pub d3: i64,
    /// Some tuple in `C_1 × … × C_r` has product one.
    pub exists: bool,
    pub generating: Generation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Component>>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub hurwitz: ClassFunction,
    /// Every multiplicity of `Hur` is nonnegative (known only with a table).
    #[serde(skip)]
    pub genuine: bool,
    #[serde(skip)]
    pub tuple_count: Option<num_bigint::BigInt>,
    #[serde(skip)]
    pub witness: Option<Vec<GroupElement>>,
}

impl VanishingCertificate {
    pub fn satisfied(&self) -> bool {
        self.verdict == Verdict::Satisfied
    }
}

fn same_structure(a: &Arc<ClassStructure>, b: &Arc<ClassStructure>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// `d_3` and the verdict from a class structure alone, with no existence
/// search. `exists` and `generating` are left for the caller to fill; a type
/// with no generating tuple never gets a satisfied verdict.
pub fn certify_structure(
    group_name: &str,
    table: Option<&CharacterTable>,
    ram: &RamificationType,
) -> Result<VanishingCertificate> {
    let genus = ram.genus()?;
    let hur = hurwitz_character(ram)?;
    check_degree(&hur, genus)?;
    let cube = hur.mul(&hur)?.mul(&hur)?;
    let d3 = integer_value(&cube.inner_product(&ClassFunction::trivial(ram.structure().clone()))?)?
        .to_i64()
        .ok_or_else(|| Error::NonIntegralResult("d3 out of range".into()))?;
    let mut genuine = true;
    let decomposition = match table {
        Some(t) => {
            same_structure(t.structure(), ram.structure())?;
            let d = t.decompose(&hur)?;
            genuine = d.genuine;
            let degrees = t.degrees();
            let parts = d
                .multiplicities
                .iter()
                .enumerate()
                .filter(|(_, m)| **m != 0.into())
                .map(|(i, m)| Component {
                    name: t.names()[i].clone(),
                    degree: degrees[i],
                    multiplicity: m.to_i64().unwrap_or(i64::MAX),
                })
                .collect();
            Some(parts)
        }
        None => None,
    };
    let verdict = if d3 == 0 && genus >= 2 { Verdict::Satisfied } else { Verdict::NotSatisfied };
    Ok(VanishingCertificate {
        genuine,
        group: group_name.into(),
        classes: ram.labels(),
        signature: ram.signature(),
        genus,
        dim_h1: 2 * genus,
        d3,
        exists: false,
        generating: Generation::Undetermined,
        decomposition,
        verdict,
        hurwitz: hur,
        tuple_count: None,
        witness: None,
    })
}

/// Full certificate for an enumerated group.
pub fn certify(group: &FiniteGroup, table: Option<&CharacterTable>, ram: &RamificationType) -> Result<VanishingCertificate> {
    same_structure(group.structure(), ram.structure())?;
    let mut cert = certify_structure(group.description(), table, ram)?;
    let ExistenceReport { count, product_one, generating, witness, .. } = existence_check(group, table, ram.classes())?;
    cert.exists = product_one;
    cert.generating = generating;
    if generating == Generation::Yes && (!cert.genuine || cert.d3 < 0) {
        return Err(Error::TableInconsistent("Hurwitz character of a realizable type is not a character".into()));
    }
    if generating == Generation::No {
        cert.verdict = Verdict::NotSatisfied;
    }
    cert.tuple_count = count;
    cert.witness = witness;
    Ok(cert)
}

/// Every class tuple realizing a signature, taken as multisets within runs
/// of equal orders.
pub fn class_assignments(structure: &ClassStructure, signature: &[u64]) -> Vec<Vec<usize>> {
    let mut sig = signature.to_vec();
    sig.sort_unstable();
    let mut runs: Vec<(u64, usize)> = Vec::new();
    for e in sig {
        match runs.last_mut() {
            Some((f, n)) if *f == e => *n += 1,
            _ => runs.push((e, 1)),
        }
    }
    let mut out = vec![Vec::new()];
    for (e, n) in runs {
        let of_order: Vec<usize> = (1..structure.len()).filter(|&c| structure.order(c) == e).collect();
        let choices = multisets(&of_order, n);
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for m in &choices {
                let mut t = prefix.clone();
                t.extend_from_slice(m);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn multisets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Certificates for every class assignment of `signature`; assignments with
/// no generating tuple are dropped unless `keep_all`.
pub fn certify_signature(
    group: &FiniteGroup,
    table: Option<&CharacterTable>,
    signature: &[u64],
    keep_all: bool,
) -> Result<Vec<VanishingCertificate>> {
    let mut out = Vec::new();
    for classes in class_assignments(group.structure(), signature) {
        let ram = RamificationType::new(group.structure().clone(), classes)?;
        let cert = certify(group, table, &ram)?;
        if keep_all || cert.generating != Generation::No {
            out.push(cert);
        }
    }
    Ok(out)
}
