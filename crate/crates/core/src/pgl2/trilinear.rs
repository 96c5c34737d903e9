//! The trilinear-form identity `m_G - m_{S'} + m_{T'} = 1` and the
//! tensor-cube corollary.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::dihedral::{Normalizers, TorusNormalizer, TransferredRep};
use super::table::{GenericKind, GenericRepLabel, Pgl2Table};
use crate::arith::nt::gcd;
use crate::character::ClassFunction;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subgroup {
    G,
    SPrime,
    TPrime,
}

/// `m_H` for one triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleResult {
    pub labels: [GenericRepLabel; 3],
    pub m_g: u64,
    pub m_s: u64,
    pub m_t: u64,
}

impl TripleResult {
    pub fn alternating_sum(&self) -> i64 {
        self.m_g as i64 - self.m_s as i64 + self.m_t as i64
    }

    /// `PS/St/Cusp` pattern, e.g. `PS,PS,Cusp`.
    pub fn pattern(&self) -> String {
        let names: Vec<&str> = self
            .labels
            .iter()
            .map(|l| match l.kind {
                GenericKind::PrincipalSeries => "PS",
                GenericKind::SteinbergTwist => "St",
                GenericKind::Cuspidal => "Cusp",
            })
            .collect();
        names.join(",")
    }
}

/// Summary of a full check over all unordered generic triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrilinearReport {
    pub q: u64,
    pub triples_checked: u64,
    pub pattern_counts: BTreeMap<String, u64>,
    pub violations: Vec<TripleResult>,
    /// Triples breaking one of the three case statements: a cuspidal forces
    /// `m_{S'} = 0`, a principal series forces `m_{T'} = 0`, three Steinberg
    /// twists give `m_{S'} = m_{T'} ∈ {0, 1}`.
    pub case_violations: Vec<TripleResult>,
    pub samples: Vec<TripleResult>,
}

/// Everything needed to evaluate `m_H` for a fixed `q`.
#[derive(Debug, Clone)]
pub struct TrilinearContext {
    table: Pgl2Table,
    normalizers: Normalizers,
}

impl TrilinearContext {
    pub fn new(q: u64) -> Result<Self> {
        Ok(Self { table: Pgl2Table::new(q)?, normalizers: Normalizers::new(q) })
    }

    pub fn table(&self) -> &Pgl2Table {
        &self.table
    }

    pub fn normalizers(&self) -> &Normalizers {
        &self.normalizers
    }

    pub fn transfer(&self, label: GenericRepLabel, target: TorusNormalizer) -> TransferredRep {
        self.normalizers.transfer(label, target)
    }

    pub fn m_h(&self, labels: [GenericRepLabel; 3], h: Subgroup) -> Result<u64> {
        let fs: Vec<ClassFunction> = match h {
            Subgroup::G => labels.iter().map(|&l| self.table.generic(l).cloned()).collect::<Result<_>>()?,
            Subgroup::SPrime | Subgroup::TPrime => {
                let target = if h == Subgroup::SPrime { TorusNormalizer::Split } else { TorusNormalizer::Nonsplit };
                labels.iter().map(|&l| self.transfer(l, target).function).collect()
            }
        };
        if fs.iter().any(ClassFunction::is_zero) {
            return Ok(0);
        }
        ClassFunction::triple_invariant_dim(&fs[0], &fs[1], &fs[2])
    }

    pub fn evaluate(&self, labels: [GenericRepLabel; 3]) -> Result<TripleResult> {
        Ok(TripleResult {
            labels,
            m_g: self.m_h(labels, Subgroup::G)?,
            m_s: self.m_h(labels, Subgroup::SPrime)?,
            m_t: self.m_h(labels, Subgroup::TPrime)?,
        })
    }

    /// Checks every unordered triple (with repetition) of generic labels.
    pub fn report(&self) -> Result<TrilinearReport> {
        let labels = GenericRepLabel::all(self.table.q());
        let mut report = TrilinearReport {
            q: self.table.q(),
            triples_checked: 0,
            pattern_counts: BTreeMap::new(),
            violations: Vec::new(),
            case_violations: Vec::new(),
            samples: Vec::new(),
        };
        for i in 0..labels.len() {
            for j in i..labels.len() {
                for k in j..labels.len() {
                    let r = self.evaluate([labels[i], labels[j], labels[k]])?;
                    report.triples_checked += 1;
                    let pattern = r.pattern();
                    let count = report.pattern_counts.entry(pattern).or_insert(0);
                    *count += 1;
                    if *count == 1 {
                        report.samples.push(r.clone());
                    }
                    if !case_statements_hold(&r) {
                        report.case_violations.push(r.clone());
                    }
                    if r.alternating_sum() != 1 {
                        report.violations.push(r);
                    }
                }
            }
        }
        Ok(report)
    }
}

fn case_statements_hold(r: &TripleResult) -> bool {
    let has = |k: GenericKind| r.labels.iter().any(|l| l.kind == k);
    if has(GenericKind::Cuspidal) && r.m_s != 0 {
        return false;
    }
    if has(GenericKind::PrincipalSeries) && r.m_t != 0 {
        return false;
    }
    if r.labels.iter().all(|l| l.kind == GenericKind::SteinbergTwist) && (r.m_s != r.m_t || r.m_s > 1) {
        return false;
    }
    true
}

/// Full report for `q` without failing on violations.
pub fn trilinear_report(q: u64) -> Result<TrilinearReport> {
    TrilinearContext::new(q)?.report()
}

/// Like [`trilinear_report`] but fails with the first offending triple.
pub fn verify_trilinear(q: u64) -> Result<TrilinearReport> {
    let report = trilinear_report(q)?;
    if let Some(v) = report.violations.first().or(report.case_violations.first()) {
        let [a, b, c] = v.labels;
        return Err(Error::TheoremViolation(alloc::format!(
            "q = {q}: ({a}, {b}, {c}) has m_G = {}, m_S' = {}, m_T' = {}",
            v.m_g,
            v.m_s,
            v.m_t
        )));
    }
    Ok(report)
}

/// `dim (π^{⊗3})^G` for every generic `π`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub q: u64,
    pub dims: Vec<(GenericRepLabel, u64)>,
    /// Cuspidals attached to characters of `T` of exact order 3.
    pub cubic_cuspidals: Vec<GenericRepLabel>,
    /// Principal series attached to characters of `S` of exact order 3.
    pub cubic_principal_series: Vec<GenericRepLabel>,
    /// The dimension is 0 on cubic cuspidals and 1 on every other generic
    /// representation.
    pub holds_as_stated: bool,
    /// As above, except that cubic principal series have dimension 2.
    pub holds_with_principal_series_exception: bool,
}

pub fn is_cubic_cuspidal(q: u64, label: GenericRepLabel) -> bool {
    label.kind == GenericKind::Cuspidal && (q + 1) / gcd(label.exponent, q + 1) == 3
}

pub fn is_cubic_principal_series(q: u64, label: GenericRepLabel) -> bool {
    label.kind == GenericKind::PrincipalSeries && (q - 1) / gcd(label.exponent, q - 1) == 3
}

pub fn corollary_report(q: u64) -> Result<CorollaryReport> {
    let table = Pgl2Table::new(q)?;
    let mut report = CorollaryReport {
        q,
        dims: Vec::new(),
        cubic_cuspidals: Vec::new(),
        cubic_principal_series: Vec::new(),
        holds_as_stated: true,
        holds_with_principal_series_exception: true,
    };
    for label in GenericRepLabel::all(q) {
        let d = table.generic(label)?.tensor_power_invariant_dim(3)?;
        let (stated, corrected) = if is_cubic_cuspidal(q, label) {
            report.cubic_cuspidals.push(label);
            (0, 0)
        } else if is_cubic_principal_series(q, label) {
            report.cubic_principal_series.push(label);
            (1, 2)
        } else {
            (1, 1)
        };
        report.holds_as_stated &= d == stated;
        report.holds_with_principal_series_exception &= d == corrected;
        report.dims.push((label, d));
    }
    Ok(report)
}
