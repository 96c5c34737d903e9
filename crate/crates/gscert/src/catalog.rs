//! The embedded catalog of curves with their expected outcomes.

use anyhow::{anyhow, ensure, Result};
use gscert_core::character::{dixon_character_table, ClassFunction};
use gscert_core::group::{FiniteGroup, GroupElement, GroupSpec, LinearFamily, LinearModel, Permutation};
use gscert_core::hurwitz::{certify, class_assignments, genus_from_signature, Generation, RamificationType, VanishingCertificate};
use gscert_core::pgl2::{GenericKind, Pgl2Irrep, Pgl2Table};
use gscert_core::{BigInt, Cyclotomic};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::TableCache;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExpectedVerdict {
    #[serde(rename = "d3 = 0")]
    Vanishes,
    #[serde(rename = "d3 > 0")]
    NonVanishing,
}

/// Fingerprint fields that are checked; unset fields are not.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedFingerprint {
    pub order: u64,
    pub center: Option<u64>,
    pub abelian_invariants: Option<Vec<u64>>,
    pub derived_order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedDecomposition {
    /// Twice a single cuspidal representation of `PGL_2(F_q)`.
    TwiceCuspidal { family: LinearFamily, q: u64 },
    /// `2 (sgn ⊠ ρ + ρ ⊠ sgn)` on `S_3 × S_3`.
    SignTimesStandard,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub name: &'static str,
    pub genus: u64,
    pub spec: GroupSpec,
    pub small_group_id: Option<(u32, u32)>,
    pub signature: Vec<u64>,
    pub class_labels: Option<Vec<&'static str>>,
    pub expected: ExpectedVerdict,
    pub fingerprint: ExpectedFingerprint,
    pub decomposition: Option<ExpectedDecomposition>,
    pub note: &'static str,
}

fn c2() -> GroupSpec {
    GroupSpec::Cyclic { n: 2 }
}

fn s3() -> GroupSpec {
    GroupSpec::Symmetric { n: 3 }
}

fn fp(order: u64, center: Option<u64>, ab: Option<Vec<u64>>, derived: Option<u64>) -> ExpectedFingerprint {
    ExpectedFingerprint { order, center, abelian_invariants: ab, derived_order: derived }
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            key: "fricke-macbeath",
            name: "Fricke-Macbeath curve",
            genus: 7,
            spec: GroupSpec::Psl2 { q: 8 },
            small_group_id: Some((504, 156)),
            signature: vec![2, 3, 7],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(504, Some(1), Some(vec![]), Some(504)),
            decomposition: Some(ExpectedDecomposition::TwiceCuspidal { family: LinearFamily::Psl2, q: 8 }),
            note: "Hurwitz curve of genus 7. Its genus 3 quotient by an involution is recorded only as metadata.",
        },
        CatalogEntry {
            key: "bring",
            name: "Bring curve",
            genus: 4,
            spec: GroupSpec::Pgl2 { q: 5 },
            small_group_id: Some((120, 34)),
            signature: vec![2, 4, 5],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(120, Some(1), Some(vec![2]), Some(60)),
            decomposition: Some(ExpectedDecomposition::TwiceCuspidal { family: LinearFamily::Pgl2, q: 5 }),
            note: "Largest automorphism group in genus 4.",
        },
        CatalogEntry {
            key: "g3-48-33",
            name: "genus 3, y^4 = x^3 - 1",
            genus: 3,
            spec: GroupSpec::CentralProduct { left: Box::new(GroupSpec::Sl2 { q: 3 }), right: Box::new(GroupSpec::Cyclic { n: 4 }) },
            small_group_id: Some((48, 33)),
            signature: vec![2, 3, 12],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(48, Some(4), Some(vec![2, 3]), Some(8)),
            decomposition: None,
            note: "Non-hyperelliptic genus 3 curve.",
        },
        CatalogEntry {
            key: "g4-72-40",
            name: "genus 4, S3 wr C2",
            genus: 4,
            spec: GroupSpec::Wreath2 { base: Box::new(s3()) },
            small_group_id: Some((72, 40)),
            signature: vec![2, 4, 6],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(72, Some(1), Some(vec![2, 2]), Some(18)),
            decomposition: None,
            note: "Genus 4 curve with a wreath product action.",
        },
        CatalogEntry {
            key: "g5-160-234",
            name: "genus 5, (C2)^4 : D5",
            genus: 5,
            spec: GroupSpec::Semidirect {
                normal: Box::new(GroupSpec::DirectProduct { factors: vec![c2(), c2(), c2(), c2()] }),
                acting: Box::new(GroupSpec::Permutations {
                    degree: 5,
                    generators: vec!["(0 1 2 3 4)".into(), "(1 4)(2 3)".into()],
                }),
                // D5 acting on the sum-zero part of F_2^5 with basis e_i + e_{i+1}
                action: vec![
                    vec![vec![1], vec![2], vec![3], vec![0, 1, 2, 3]],
                    vec![vec![0, 1, 2, 3], vec![3], vec![2], vec![1]],
                ],
            },
            small_group_id: Some((160, 234)),
            signature: vec![2, 4, 5],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(160, Some(1), Some(vec![2]), Some(80)),
            decomposition: None,
            note: "Genus 5 curve with 160 automorphisms.",
        },
        CatalogEntry {
            key: "g5-96-195",
            name: "genus 5, GL2(Z/4)",
            genus: 5,
            spec: GroupSpec::Gl2Mod { n: 4 },
            small_group_id: Some((96, 195)),
            signature: vec![2, 4, 6],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(96, Some(2), None, None),
            decomposition: None,
            note: "Genus 5 curve with automorphism group GL2(Z/4).",
        },
        CatalogEntry {
            key: "family-g4-36-10",
            name: "genus 4 family, S3 x S3",
            genus: 4,
            spec: GroupSpec::DirectProduct { factors: vec![s3(), s3()] },
            small_group_id: Some((36, 10)),
            signature: vec![2, 2, 2, 3],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(36, Some(1), Some(vec![2, 2]), Some(9)),
            decomposition: Some(ExpectedDecomposition::SignTimesStandard),
            note: "One-parameter family; moduli dimension r - 3 = 1.",
        },
        CatalogEntry {
            key: "family-g5-32-27",
            name: "genus 5 family, (C2 x C2) wr C2",
            genus: 5,
            spec: GroupSpec::Wreath2 { base: Box::new(GroupSpec::DirectProduct { factors: vec![c2(), c2()] }) },
            small_group_id: Some((32, 27)),
            signature: vec![2, 2, 2, 4],
            class_labels: None,
            expected: ExpectedVerdict::Vanishes,
            fingerprint: fp(32, Some(4), Some(vec![2, 2, 2]), Some(4)),
            decomposition: None,
            note: "One-parameter family; moduli dimension r - 3 = 1.",
        },
        CatalogEntry {
            key: "klein",
            name: "Klein quartic (negative control)",
            genus: 3,
            spec: GroupSpec::Psl2 { q: 7 },
            small_group_id: Some((168, 42)),
            signature: vec![2, 3, 7],
            class_labels: None,
            expected: ExpectedVerdict::NonVanishing,
            fingerprint: fp(168, Some(1), Some(vec![]), Some(168)),
            decomposition: None,
            note: "Hurwitz curve of genus 3.",
        },
    ]
}

pub fn find(key: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.key == key)
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub key: String,
    pub name: String,
    pub group: String,
    pub small_group_id: Option<(u32, u32)>,
    pub signature: Vec<u64>,
    pub declared_genus: u64,
    pub genus: Option<u64>,
    pub genus_ok: bool,
    pub moduli_dimension: usize,
    pub fingerprint_ok: bool,
    pub fingerprint_notes: Vec<String>,
    pub expected: ExpectedVerdict,
    pub certificates: Vec<VanishingCertificate>,
    pub verdict_ok: bool,
    pub decomposition_ok: Option<bool>,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
}

fn check_fingerprint(group: &FiniteGroup, want: &ExpectedFingerprint) -> Vec<String> {
    let got = group.fingerprint();
    let mut notes = Vec::new();
    if got.order != want.order {
        notes.push(format!("order {} != {}", got.order, want.order));
    }
    if let Some(c) = want.center {
        if got.center_order != c {
            notes.push(format!("center order {} != {c}", got.center_order));
        }
    }
    if let Some(ab) = &want.abelian_invariants {
        if &got.abelian_invariants != ab {
            notes.push(format!("abelian invariants {:?} != {ab:?}", got.abelian_invariants));
        }
    }
    if let Some(d) = want.derived_order {
        if got.derived_order != d {
            notes.push(format!("derived order {} != {d}", got.derived_order));
        }
    }
    notes
}

/// The certificates to check: the declared classes, or every class
/// assignment of the signature that has a generating tuple.
pub fn entry_certificates(entry: &CatalogEntry, group: &FiniteGroup, cache: &TableCache) -> Result<Vec<VanishingCertificate>> {
    let table = cache.character_table(&entry.spec, group)?;
    let assignments = match &entry.class_labels {
        Some(labels) => vec![RamificationType::from_labels(group.structure().clone(), labels)?.classes().to_vec()],
        None => class_assignments(group.structure(), &entry.signature),
    };
    let mut out = Vec::new();
    for classes in assignments {
        let ram = RamificationType::new(group.structure().clone(), classes)?;
        let cert = certify(group, Some(&table), &ram)?;
        if cert.generating != Generation::No {
            out.push(cert);
        }
    }
    Ok(out)
}

/// `Hur` pulled back to the structural classes of `PGL_2(F_q)` and split
/// there: a single cuspidal with multiplicity two.
fn check_twice_cuspidal(group: &FiniteGroup, family: LinearFamily, q: u64, hur: &ClassFunction) -> Result<bool> {
    let table = Pgl2Table::new(q)?;
    let model = LinearModel::new(family, q)?;
    let classes = table.classes();
    let s = classes.structure();
    let mut values = vec![Cyclotomic::zero(); s.len()];
    for (e, c) in group.classes().iter().enumerate() {
        let kind = model.classify(&c.representative)?;
        let k = classes.index(kind).ok_or_else(|| anyhow!("no structural class {kind:?}"))?;
        values[k] = hur.value(e).clone();
    }
    let pulled = ClassFunction::new(s.clone(), values)?;
    let d = table.table().decompose(&pulled)?;
    let parts: Vec<(usize, &BigInt)> = d.multiplicities.iter().enumerate().filter(|(_, m)| **m != BigInt::from(0)).collect();
    Ok(match parts.as_slice() {
        [(i, m)] => {
            matches!(table.irreps()[*i], Pgl2Irrep::Generic(l) if l.kind == GenericKind::Cuspidal) && **m == BigInt::from(2)
        }
        _ => false,
    })
}

/// Checks `Hur = 2 (sgn ⊠ ρ + ρ ⊠ sgn)` on `S_3 × S_3` acting on two blocks
/// of three points.
fn check_sign_times_standard(group: &FiniteGroup, hur: &ClassFunction) -> Result<bool> {
    let s3 = GroupSpec::Symmetric { n: 3 }.build()?;
    let t = dixon_character_table(&s3)?;
    let degree_of = |d: u64, nontrivial: bool| {
        t.characters()
            .iter()
            .find(|c| c.degree() == &Cyclotomic::from_integer(d as i64) && (!nontrivial || c.value(1) != c.degree()))
            .cloned()
            .ok_or_else(|| anyhow!("S3 table lacks a degree {d} character"))
    };
    let sgn = degree_of(1, true)?;
    let rho = degree_of(2, false)?;
    let project = |x: &GroupElement, block: u32| -> Result<usize> {
        let p = x.as_perm().ok_or_else(|| anyhow!("expected a permutation group"))?;
        ensure!(p.degree() == 6, "expected S3 x S3 on six points");
        let images: Vec<u32> = (0..3).map(|i| p.apply(i + 3 * block) - 3 * block).collect();
        let e = GroupElement::Perm(Permutation::from_images(images)?);
        s3.class_of_element(&e).ok_or_else(|| anyhow!("projection is not in S3"))
    };
    let mut values = Vec::with_capacity(group.classes().len());
    for c in group.classes() {
        let (a, b) = (project(&c.representative, 0)?, project(&c.representative, 1)?);
        let v = sgn.value(a) * rho.value(b) + rho.value(a) * sgn.value(b);
        values.push(v.scale(&gscert_core::arith::int(2)));
    }
    Ok(&ClassFunction::new(group.structure().clone(), values)? == hur)
}

fn check_decomposition(expected: &ExpectedDecomposition, group: &FiniteGroup, certs: &[VanishingCertificate]) -> Result<bool> {
    if certs.is_empty() {
        return Ok(false);
    }
    for cert in certs {
        let ok = match expected {
            ExpectedDecomposition::TwiceCuspidal { family, q } => check_twice_cuspidal(group, *family, *q, &cert.hurwitz)?,
            ExpectedDecomposition::SignTimesStandard => check_sign_times_standard(group, &cert.hurwitz)?,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn certify_entry(entry: &CatalogEntry, cache: &TableCache) -> EntryReport {
    let mut report = EntryReport {
        key: entry.key.into(),
        name: entry.name.into(),
        group: entry.spec.describe(),
        small_group_id: entry.small_group_id,
        signature: entry.signature.clone(),
        declared_genus: entry.genus,
        genus: None,
        genus_ok: false,
        moduli_dimension: entry.signature.len().saturating_sub(3),
        fingerprint_ok: false,
        fingerprint_notes: Vec::new(),
        expected: entry.expected,
        certificates: Vec::new(),
        verdict_ok: false,
        decomposition_ok: None,
        error: None,
        pass: false,
    };
    let result = (|| -> Result<()> {
        let genus = genus_from_signature(entry.fingerprint.order, &entry.signature)?;
        report.genus = Some(genus);
        let group = entry.spec.build()?;
        report.fingerprint_notes = check_fingerprint(&group, &entry.fingerprint);
        report.fingerprint_ok = report.fingerprint_notes.is_empty();
        let certs = entry_certificates(entry, &group, cache)?;
        report.genus_ok = genus == entry.genus && certs.iter().all(|c| c.genus == entry.genus && c.dim_h1 == 2 * genus);
        report.verdict_ok = !certs.is_empty()
            && certs.iter().all(|c| match entry.expected {
                ExpectedVerdict::Vanishes => c.d3 == 0,
                ExpectedVerdict::NonVanishing => c.d3 > 0,
            });
        if let Some(d) = &entry.decomposition {
            report.decomposition_ok = Some(check_decomposition(d, &group, &certs)?);
        }
        report.certificates = certs;
        Ok(())
    })();
    if let Err(e) = result {
        report.error = Some(format!("{e:#}"));
    }
    report.pass = report.error.is_none()
        && report.genus_ok
        && report.fingerprint_ok
        && report.verdict_ok
        && report.decomposition_ok != Some(false);
    report
}

/// Certifies every entry, in parallel, reporting in catalog order.
pub fn reproduce_all(cache: &TableCache) -> CatalogReport {
    let entries: Vec<EntryReport> = catalog().par_iter().map(|e| certify_entry(e, cache)).collect();
    let passed = entries.iter().filter(|e| e.pass).count();
    CatalogReport { failed: entries.len() - passed, passed, entries }
}
