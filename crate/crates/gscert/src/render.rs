//! Markdown renderings of the JSON reports.

use std::fmt::Write;

use gscert_core::character::CharacterTable;
use gscert_core::hurwitz::VanishingCertificate;
use gscert_core::pgl2::{TrilinearReport, TripleResult};
use gscert_core::psl2_scan::ScanRow;

use crate::catalog::CatalogReport;

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn certificates(certs: &[VanishingCertificate]) -> String {
    let mut s = String::from("| group | classes | signature | g | dim H1 | d3 | generating | decomposition | verdict |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for c in certs {
        let dec = c.decomposition.as_ref().map_or_else(
            || "-".to_string(),
            |parts| {
                parts
                    .iter()
                    .map(|p| format!("{} x {} (deg {})", p.multiplicity, p.name, p.degree))
                    .collect::<Vec<_>>()
                    .join(" + ")
            },
        );
        let _ = writeln!(
            s,
            "| {} | {} | ({}) | {} | {} | {} | {} | {} | {} |",
            c.group,
            c.classes.join(","),
            join(&c.signature),
            c.genus,
            c.dim_h1,
            c.d3,
            c.generating,
            dec,
            c.verdict
        );
    }
    s
}

fn triple_line(t: &TripleResult) -> String {
    format!(
        "| {} | {} | {} | {} | {} |\n",
        t.labels.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        t.m_g,
        t.m_s,
        t.m_t,
        t.alternating_sum()
    )
}

pub fn trilinear(r: &TrilinearReport) -> String {
    let mut s = format!(
        "## PGL2({}) trilinear check\n\ntriples checked: {}, violations: {}, case violations: {}\n\n",
        r.q,
        r.triples_checked,
        r.violations.len(),
        r.case_violations.len()
    );
    s.push_str("| pattern | triples |\n|---|---|\n");
    for (p, n) in &r.pattern_counts {
        let _ = writeln!(s, "| {p} | {n} |");
    }
    s.push_str("\n| triple | m_G | m_S' | m_T' | m_G - m_S' + m_T' |\n|---|---|---|---|---|\n");
    for t in r.violations.iter().chain(&r.samples) {
        s.push_str(&triple_line(t));
    }
    s
}

pub fn triple(t: &TripleResult) -> String {
    let mut s = String::from("| triple | m_G | m_S' | m_T' | m_G - m_S' + m_T' |\n|---|---|---|---|---|\n");
    s.push_str(&triple_line(t));
    s
}

pub fn scan(rows: &[ScanRow]) -> String {
    let mut s = String::from(
        "| q | admissible | realizable | g | d3 | closed form | unipotent term | brute force | sum of cubes | L1 |\n",
    );
    s.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
    for r in rows {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.q,
            r.admissible,
            r.realizable,
            opt(&r.genus),
            opt(&r.d3),
            opt(&r.closed_form_agrees),
            opt(&r.naive_unipotent_agrees),
            r.brute_force_checked,
            opt(&r.cube_sum),
            r.bound.as_ref().map_or_else(|| "-".to_string(), |b| b.l1.to_string()),
        );
    }
    s
}

pub fn catalog(r: &CatalogReport) -> String {
    let mut s = String::from("| entry | group | signature | g | fingerprint | expected | d3 | decomposition | result |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for e in &r.entries {
        let d3: Vec<String> = e.certificates.iter().map(|c| c.d3.to_string()).collect();
        let expected = match e.expected {
            crate::catalog::ExpectedVerdict::Vanishes => "d3 = 0",
            crate::catalog::ExpectedVerdict::NonVanishing => "d3 > 0",
        };
        let _ = writeln!(
            s,
            "| {} | {} | ({}) | {} | {} | {} | {} | {} | {} |",
            e.name,
            e.group,
            join(&e.signature),
            opt(&e.genus),
            if e.fingerprint_ok { "ok" } else { "MISMATCH" },
            expected,
            if d3.is_empty() { "-".into() } else { d3.join(",") },
            opt(&e.decomposition_ok),
            if e.pass { "pass" } else { "FAIL" },
        );
        if let Some(err) = &e.error {
            let _ = writeln!(s, "|   error: {err} | | | | | | | | |");
        }
    }
    let _ = writeln!(s, "\n{} passed, {} failed", r.passed, r.failed);
    s
}

pub fn table(t: &CharacterTable) -> String {
    let st = t.structure();
    let mut s = format!("| {} |", st.name);
    for c in &st.classes {
        let _ = write!(s, " {} |", c.label);
    }
    s.push('\n');
    s.push_str(&"|---".repeat(st.len() + 1));
    s.push_str("|\n");
    for (chi, name) in t.characters().iter().zip(t.names()) {
        let _ = write!(s, "| {name} |");
        for v in chi.values() {
            let _ = write!(s, " {v} |");
        }
        s.push('\n');
    }
    s
}
