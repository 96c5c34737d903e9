//! Acceptance run: one line per criterion, exit status 0 only when every
//! failure is a documented deviation that still fails the way it is
//! documented.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, ensure, Result};
use gscert::catalog::{catalog, certify_entry, reproduce_all};
use gscert::TableCache;
use gscert_core::character::{dixon_character_table, induced_from_cyclic, induced_trivial_character, ClassFunction};
use gscert_core::group::{FiniteGroup, GroupElement, GroupSpec, LinearClasses, LinearFamily, LinearModel, Permutation};
use gscert_core::hurwitz::{
    certify, certify_signature, certify_structure, class_assignments, genus_from_signature, Generation, RamificationType,
    VanishingCertificate,
};
use gscert_core::pgl2::{corollary_report, is_cubic_cuspidal, verify_identity_polynomial, verify_trilinear, GenericRepLabel, Pgl2Table};
use gscert_core::psl2_scan::{macbeath_admissible, scan_theorem};
use gscert_core::{BigInt, CharacterTable, Cyclotomic};

const SMALL_Q: [u64; 7] = [4, 5, 7, 8, 9, 11, 13];

/// Criteria expected to fail, with the reason. The dimension of the
/// invariants of the tensor cube of a principal series attached to a cubic
/// character of the split torus is 2, so the literal statement is false
/// whenever 3 | q - 1.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[(6, "cubic principal series give dim 2 when 3 | q-1 (q = 4, 7, 13)")];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn table_of(g: &FiniteGroup) -> Result<CharacterTable> {
    Ok(dixon_character_table(g)?)
}

// H^1 trace by Lefschetz, element by element: 2 - #Fix(x) for x != 1. A
// point over the i-th branch point with stabilizer y<γ_i>y^{-1} is fixed by
// x iff y^{-1} x y ∈ <γ_i>.
fn lefschetz_value(g: &FiniteGroup, cyclic: &[Vec<usize>], genus: u64, x: usize) -> i64 {
    if x == 0 {
        return 2 * genus as i64;
    }
    let fixed: usize = cyclic
        .iter()
        .map(|h| (0..g.order()).filter(|&y| h.contains(&g.conj(x, y))).count() / h.len())
        .sum();
    2 - fixed as i64
}

/// `Σ_x Hur(x)^3 / |G|` summed over elements with Hur from fixed points.
fn brute_force_d3(g: &FiniteGroup, classes: &[usize], genus: u64) -> Result<i64> {
    let cyclic: Vec<Vec<usize>> = classes.iter().map(|&c| g.cyclic_subgroup(g.classes()[c].rep_index)).collect();
    let mut by_class: Vec<Option<i64>> = vec![None; g.classes().len()];
    let mut sum = BigInt::from(0);
    for x in 0..g.order() {
        let v = lefschetz_value(g, &cyclic, genus, x);
        let c = g.class_of(x);
        // the trace is a class function; a mismatch means the fixed-point count is wrong
        ensure!(*by_class[c].get_or_insert(v) == v, "fixed points are not a class function");
        sum += BigInt::from(v).pow(3);
    }
    let order = BigInt::from(g.order());
    ensure!(&sum % &order == BigInt::from(0), "element sum is not divisible by |G|");
    i64::try_from(sum / order).map_err(|e| anyhow!("{e}"))
}

fn c1_fricke_macbeath() -> Result<Outcome> {
    let g = GroupSpec::Psl2 { q: 8 }.build()?;
    let t = table_of(&g)?;
    let certs = certify_signature(&g, Some(&t), &[2, 3, 7], false)?;
    ensure!(!certs.is_empty(), "no generating (2,3,7) type");
    let mut ok = true;
    for c in &certs {
        let parts = c.decomposition.as_deref().unwrap_or_default();
        let single = matches!(parts, [p] if p.degree == 7 && p.multiplicity == 2);
        ok &= c.genus == 7 && c.dim_h1 == 14 && c.d3 == 0 && single && c.generating == Generation::Yes;
    }
    // the degree-7 constituent is cuspidal in the explicit PGL2(8) table
    let entry = catalog().into_iter().find(|e| e.key == "fricke-macbeath").ok_or_else(|| anyhow!("missing entry"))?;
    let cuspidal = certify_entry(&entry, &TableCache::disabled()).decomposition_ok == Some(true);
    let c = &certs[0];
    outcome(ok && cuspidal, format!("genus {}, dim {}, d3 {}, 2 x cuspidal of degree 7: {cuspidal}, {} types", c.genus, c.dim_h1, c.d3, certs.len()))
}

fn c2_bring() -> Result<Outcome> {
    let g = GroupSpec::Pgl2 { q: 5 }.build()?;
    let t = table_of(&g)?;
    let certs = certify_signature(&g, Some(&t), &[2, 4, 5], false)?;
    ensure!(!certs.is_empty(), "no generating (2,4,5) type");
    let ok = certs.iter().all(|c| c.genus == 4 && c.dim_h1 == 8 && c.d3 == 0 && c.satisfied());
    outcome(ok, format!("genus {}, dim {}, d3 {}", certs[0].genus, certs[0].dim_h1, certs[0].d3))
}

fn c3_catalog() -> Result<Outcome> {
    let report = reproduce_all(&TableCache::disabled());
    let klein = report.entries.iter().find(|e| e.key == "klein").ok_or_else(|| anyhow!("missing klein"))?;
    let g = GroupSpec::Psl2 { q: 7 }.build()?;
    let mut brute_ok = !klein.certificates.is_empty();
    for c in &klein.certificates {
        let classes: Vec<usize> = c.classes.iter().map(|l| g.class_index(l)).collect::<Result<_, _>>()?;
        let brute = brute_force_d3(&g, &classes, c.genus)?;
        brute_ok &= c.d3 > 0 && brute == c.d3;
    }
    let d3 = klein.certificates.first().map(|c| c.d3).unwrap_or(-1);
    outcome(
        report.failed == 0 && report.passed == 9 && brute_ok,
        format!("{} passed, {} failed; Klein d3 = {d3}, brute force over 168 elements agrees: {brute_ok}", report.passed, report.failed),
    )
}

fn c4_genus() -> Result<Outcome> {
    let mut bad = Vec::new();
    for e in catalog() {
        let g = e.spec.build()?;
        let from_formula = genus_from_signature(g.order() as u64, &e.signature)?;
        let t = table_of(&g)?;
        let certs = certify_signature(&g, Some(&t), &e.signature, false)?;
        let degrees_ok = !certs.is_empty()
            && certs.iter().all(|c| c.hurwitz.degree() == &Cyclotomic::from_integer(2 * e.genus as i64) && c.genus == e.genus);
        if from_formula != e.genus || !degrees_ok {
            bad.push(e.key);
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "9 entries, Hur(1) = 2g".to_string() } else { format!("mismatch: {bad:?}") })
}

fn c5_trilinear() -> Result<Outcome> {
    let mut total = 0;
    let mut violations = 0;
    for q in SMALL_Q {
        let r = verify_trilinear(q)?;
        total += r.triples_checked;
        violations += r.violations.len() + r.case_violations.len();
    }
    outcome(violations == 0, format!("{total} triples over q in {SMALL_Q:?}, {violations} violations"))
}

fn c6_corollary() -> Result<Outcome> {
    let mut failing = Vec::new();
    let mut corrected = true;
    let mut exceptional_ok = true;
    for q in SMALL_Q {
        let r = corollary_report(q)?;
        if !r.holds_as_stated {
            failing.push(q);
        }
        corrected &= r.holds_with_principal_series_exception;
        let cubic = GenericRepLabel::all(q).into_iter().any(|l| is_cubic_cuspidal(q, l));
        exceptional_ok &= cubic == ((q + 1) % 3 == 0) && !r.cubic_cuspidals.is_empty() == cubic;
    }
    outcome(
        failing.is_empty() && exceptional_ok,
        format!("literal statement fails at q = {failing:?}; exceptional set iff 3 | q+1: {exceptional_ok}; with principal series exception: {corrected}"),
    )
}

fn c7_identity() -> Result<Outcome> {
    outcome(verify_identity_polynomial(), "cleared numerator and denominator sides agree coefficientwise")
}

fn c8_scan() -> Result<Outcome> {
    let rows = scan_theorem(199)?;
    let mut ok = true;
    let mut admissible = 0;
    let mut odd = 0;
    for r in &rows {
        if r.admissible {
            admissible += 1;
            ok &= macbeath_admissible(r.q)? && (r.d3 == Some(0)) == (r.q == 8) && r.d3.is_some();
        }
        if r.q % 2 == 1 && (43..=199).contains(&r.q) {
            odd += 1;
            let b = r.bound.as_ref().ok_or_else(|| anyhow!("q = {}: no bound", r.q))?;
            ok &= b.l3 > gscert_core::arith::int(0);
            if r.realizable {
                let s = r.cube_sum.as_ref().ok_or_else(|| anyhow!("q = {}: no cube sum", r.q))?;
                let s = gscert_core::BigRational::from_integer(s.clone());
                ok &= s > gscert_core::arith::int(0) && b.l3 <= s && b.l1 < s;
            }
        }
    }
    outcome(ok, format!("{admissible} admissible q, d3 = 0 only at q = 8; bound chain on {odd} odd prime powers in [43, 199]"))
}

fn suite() -> Vec<(String, GroupSpec)> {
    let mut out: Vec<(String, GroupSpec)> = catalog().into_iter().map(|e| (e.key.to_string(), e.spec)).collect();
    out.push(("S5".into(), GroupSpec::Symmetric { n: 5 }));
    out.push(("S4".into(), GroupSpec::Symmetric { n: 4 }));
    for q in SMALL_Q {
        out.push((format!("PGL2({q})"), GroupSpec::Pgl2 { q }));
        if q % 2 == 1 {
            out.push((format!("PSL2({q})"), GroupSpec::Psl2 { q }));
        }
    }
    out
}

fn c9_oracles() -> Result<Outcome> {
    // Hurwitz d3: class sums against element sums with fixed-point traces
    let mut types = 0;
    for e in catalog() {
        let g = e.spec.build()?;
        ensure!(g.order() <= 5000);
        let t = table_of(&g)?;
        for c in certify_signature(&g, Some(&t), &e.signature, true)? {
            let classes: Vec<usize> = c.classes.iter().map(|l| g.class_index(l)).collect::<Result<_, _>>()?;
            ensure!(brute_force_d3(&g, &classes, c.genus)? == c.d3, "{}: d3 differs for {:?}", e.key, c.classes);
            types += 1;
        }
    }
    // tensor cubes of irreducibles: class sums against element sums
    let mut groups = 0;
    for (name, spec) in suite() {
        let g = spec.build()?;
        if g.order() > 5000 {
            continue;
        }
        groups += 1;
        let t = table_of(&g)?;
        for chi in t.characters() {
            let mut sum = Cyclotomic::zero();
            for x in 0..g.order() {
                let v = chi.value(g.class_of(x));
                sum = sum + &(v * v * v);
            }
            let by_classes = Cyclotomic::from_integer(chi.tensor_power_invariant_dim(3)? as i64);
            ensure!(sum.scale(&gscert_core::arith::rat(1, g.order() as i64)) == by_classes, "{name}: tensor cube differs");
        }
    }
    // structural class data against enumeration, and explicit tables against Dixon
    let mut linear = 0;
    for q in SMALL_Q {
        for family in [LinearFamily::Psl2, LinearFamily::Pgl2] {
            if family == LinearFamily::Psl2 && q % 2 == 0 {
                continue;
            }
            let spec = match family {
                LinearFamily::Psl2 => GroupSpec::Psl2 { q },
                LinearFamily::Pgl2 => GroupSpec::Pgl2 { q },
            };
            let g = spec.build()?;
            let classes = LinearClasses::new(family, q)?;
            let map = LinearModel::new(family, q)?.class_correspondence(&g, &classes)?;
            let s = classes.structure();
            let e = g.structure();
            for c in 0..e.len() {
                ensure!(e.size(c) == s.size(map[c]) && e.order(c) == s.order(map[c]), "{q}: class data");
                for k in 2..=e.order(c) as i64 {
                    ensure!(map[e.power(c, k)] == s.power(map[c], k), "{q}: power map");
                }
            }
            if family == LinearFamily::Pgl2 {
                ensure!(explicit_matches_dixon(q, &g, &map)?, "PGL2({q}): explicit table differs from Dixon");
            }
            linear += 1;
        }
    }
    outcome(true, format!("{types} ramification types, {groups} groups, {linear} linear groups"))
}

fn explicit_matches_dixon(q: u64, g: &FiniteGroup, map: &[usize]) -> Result<bool> {
    let explicit = Pgl2Table::new(q)?;
    let dixon = table_of(g)?;
    let mut used = vec![false; dixon.len()];
    for chi in explicit.table().characters() {
        let pulled: Vec<Cyclotomic> = map.iter().map(|&s| chi.value(s).clone()).collect();
        let pulled = ClassFunction::new(g.structure().clone(), pulled)?;
        match dixon.characters().iter().position(|d| *d == pulled) {
            Some(i) if !used[i] => used[i] = true,
            _ => return Ok(false),
        }
    }
    Ok(used.iter().all(|u| *u))
}

fn sorted_degrees(t: &CharacterTable) -> Vec<u64> {
    let mut d = t.degrees();
    d.sort_unstable();
    d
}

fn c10_tables() -> Result<Outcome> {
    let mut checked = 0;
    for (name, spec) in suite() {
        let g = spec.build()?;
        let t = table_of(&g)?;
        t.validate()?;
        ensure!(t.degrees().iter().map(|d| d * d).sum::<u64>() == g.order() as u64, "{name}: sum of squares");
        checked += 1;
    }
    for q in SMALL_Q {
        Pgl2Table::new(q)?.table().validate()?;
        checked += 1;
    }
    let s3 = GroupSpec::Symmetric { n: 3 }.build()?;
    let t3 = table_of(&s3)?;
    let s5 = table_of(&GroupSpec::Symmetric { n: 5 }.build()?)?;
    let ok3 = sorted_degrees(&t3) == [1, 1, 2];
    let ok5 = sorted_degrees(&s5) == [1, 1, 4, 4, 5, 5, 6];
    let ok33 = external_products(&s3, &t3)?;
    outcome(ok3 && ok5 && ok33, format!("{checked} tables orthogonal; S3 {ok3}, S5 {ok5}, S3 x S3 external products {ok33}"))
}

/// The S3 x S3 table is exactly the set of the 9 products χ ⊠ ψ.
fn external_products(s3: &FiniteGroup, t3: &CharacterTable) -> Result<bool> {
    let g = GroupSpec::DirectProduct { factors: vec![GroupSpec::Symmetric { n: 3 }; 2] }.build()?;
    let t = table_of(&g)?;
    t.validate()?;
    let project = |x: &GroupElement, block: u32| -> Result<usize> {
        let p = x.as_perm().ok_or_else(|| anyhow!("not a permutation"))?;
        let images: Vec<u32> = (0..3).map(|i| p.apply(i + 3 * block) - 3 * block).collect();
        s3.class_of_element(&GroupElement::Perm(Permutation::from_images(images)?)).ok_or_else(|| anyhow!("not in S3"))
    };
    let mut used = vec![false; t.len()];
    for a in t3.characters() {
        for b in t3.characters() {
            let values = g
                .classes()
                .iter()
                .map(|c| Ok(a.value(project(&c.representative, 0)?) * b.value(project(&c.representative, 1)?)))
                .collect::<Result<Vec<_>>>()?;
            let product = ClassFunction::new(g.structure().clone(), values)?;
            match t.characters().iter().position(|c| *c == product) {
                Some(i) if !used[i] => used[i] = true,
                _ => return Ok(false),
            }
        }
    }
    Ok(t.len() == 9 && used.iter().all(|u| *u))
}

fn check_properties(name: &str, g: &FiniteGroup, t: &CharacterTable, c: &VanishingCertificate) -> Result<()> {
    ensure!(c.hurwitz.is_integer_valued(), "{name}: Hur not integer valued");
    let one = ClassFunction::trivial(g.structure().clone());
    ensure!(c.hurwitz.inner_product(&one)?.is_zero(), "{name}: <Hur, 1> != 0");
    if c.generating == Generation::Yes {
        ensure!(c.genuine && c.d3 >= 0, "{name}: realizable type with a virtual Hur");
    }
    let classes: Vec<usize> = c.classes.iter().map(|l| g.class_index(l)).collect::<Result<_, _>>()?;
    let ram = RamificationType::new(g.structure().clone(), classes)?;
    for i in 0..ram.len() {
        let flipped = certify_structure(name, Some(t), &ram.with_inverse(i))?;
        ensure!(flipped.d3 == c.d3, "{name}: d3 changes when class {i} is inverted");
    }
    Ok(())
}

fn c11_properties() -> Result<Outcome> {
    let mut types = 0;
    for e in catalog() {
        let g = e.spec.build()?;
        let t = table_of(&g)?;
        for c in certify_signature(&g, Some(&t), &e.signature, true)? {
            check_properties(e.key, &g, &t, &c)?;
            types += 1;
        }
    }
    // a few non-catalog types, including ones without generating tuples
    for (spec, signature) in [
        (GroupSpec::Symmetric { n: 4 }, vec![2, 2, 2, 3]),
        (GroupSpec::Symmetric { n: 5 }, vec![2, 4, 5]),
        (GroupSpec::Pgl2 { q: 7 }, vec![2, 3, 8]),
    ] {
        let g = spec.build()?;
        let t = table_of(&g)?;
        for classes in class_assignments(g.structure(), &signature) {
            let ram = RamificationType::new(g.structure().clone(), classes)?;
            check_properties(&spec.describe(), &g, &t, &certify(&g, Some(&t), &ram)?)?;
            types += 1;
        }
    }
    // Ind_H^G 1 is the same for H and its conjugates, and agrees with the
    // power-map formula for cyclic H
    let mut subgroups = 0;
    for (name, spec) in suite() {
        let g = spec.build()?;
        if g.order() > 2000 {
            continue;
        }
        let gens = g.generator_indices();
        let mut hs: Vec<Vec<usize>> = g.classes().iter().map(|c| g.cyclic_subgroup(c.rep_index)).collect();
        if gens.len() >= 2 {
            hs.push(g.closure(&[gens[0], g.conj(gens[1], gens[0])]));
            hs.push(g.closure(&[gens[1]]));
        }
        for (i, h) in hs.iter().enumerate() {
            let base = induced_trivial_character(&g, h)?;
            if i < g.classes().len() {
                ensure!(base == induced_from_cyclic(g.structure(), i)?, "{name}: cyclic induction formula");
            }
            for x in (0..g.order()).step_by(1 + g.order() / 7) {
                ensure!(induced_trivial_character(&g, &g.conjugate_subgroup(h, x))? == base, "{name}: conjugate subgroup");
            }
            subgroups += 1;
        }
    }
    outcome(true, format!("{types} ramification types, {subgroups} subgroups"))
}

type Check = fn() -> Result<Outcome>;

fn main() -> ExitCode {
    let criteria: [(u32, &str, Option<Duration>, Check); 11] = [
        (1, "Fricke-Macbeath PSL2(8) (2,3,7)", Some(Duration::from_secs(5)), c1_fricke_macbeath),
        (2, "Bring PGL2(5) (2,4,5)", Some(Duration::from_secs(5)), c2_bring),
        (3, "catalog batch and Klein control", Some(Duration::from_secs(60)), c3_catalog),
        (4, "genus cross-check", None, c4_genus),
        (5, "trilinear identity m_G - m_S' + m_T' = 1", Some(Duration::from_secs(120)), c5_trilinear),
        (6, "tensor cube corollary as stated", None, c6_corollary),
        (7, "four-variable polynomial identity", Some(Duration::from_secs(1)), c7_identity),
        (8, "PSL2 Hurwitz scan to 199", Some(Duration::from_secs(60)), c8_scan),
        (9, "oracle equivalence", None, c9_oracles),
        (10, "character table hygiene", None, c10_tables),
        (11, "property suite", None, c11_properties),
    ];
    let mut unexpected = Vec::new();
    for (n, title, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (mut pass, mut detail) = match result {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e:#}")),
        };
        if let Some(limit) = limit {
            if elapsed > limit {
                pass = false;
                detail = format!("{detail}; took longer than {limit:?}");
            }
        }
        let known = KNOWN_DEVIATIONS.iter().find(|(k, _)| *k == n);
        let status = if pass { "PASS" } else { "FAIL" };
        println!("criterion {n} ({title}): {status} [{:.2}s] {detail}", elapsed.as_secs_f64());
        match (pass, known) {
            (false, Some((_, why))) => println!("  known deviation: {why}"),
            (true, Some(_)) => {
                println!("  documented deviation no longer fails");
                unexpected.push(n);
            }
            (false, None) => unexpected.push(n),
            (true, None) => {}
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria pass except documented deviations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
