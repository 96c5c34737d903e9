use gscert_core::character::{dixon_character_table, ClassFunction};
use gscert_core::group::{GroupSpec, LinearFamily, LinearModel, TorusClass};
use gscert_core::pgl2::{
    corollary_report, identity_lhs, is_cubic_cuspidal, trilinear_report, verify_identity_polynomial,
    verify_trilinear, GenericKind, GenericRepLabel, Pgl2Irrep, Pgl2Table, Subgroup, TorusNormalizer,
    TrilinearContext,
};
use gscert_core::{arith::rat, Cyclotomic};

fn label(q: u64, kind: GenericKind, e: u64) -> GenericRepLabel {
    GenericRepLabel::new(q, kind, e).unwrap()
}

#[test]
fn label_normalization() {
    assert_eq!(label(7, GenericKind::PrincipalSeries, 4).exponent, 2);
    assert_eq!(label(7, GenericKind::Cuspidal, 7).exponent, 1);
    assert!(GenericRepLabel::new(7, GenericKind::PrincipalSeries, 3).is_err());
    assert!(GenericRepLabel::new(7, GenericKind::Cuspidal, 4).is_err());
    assert!(GenericRepLabel::new(8, GenericKind::SteinbergTwist, 3).is_err());
    assert_eq!(GenericRepLabel::parse(8, "cusp:6").unwrap(), label(8, GenericKind::Cuspidal, 3));
}

#[test]
fn q5_label_counts() {
    let t = Pgl2Table::new(5).unwrap();
    let count = |k: GenericKind| {
        t.irreps().iter().filter(|r| matches!(r, Pgl2Irrep::Generic(l) if l.kind == k)).count()
    };
    assert_eq!(count(GenericKind::PrincipalSeries), 1);
    assert_eq!(count(GenericKind::SteinbergTwist), 2);
    assert_eq!(count(GenericKind::Cuspidal), 2);
    assert_eq!(t.irreps().iter().filter(|r| matches!(r, Pgl2Irrep::OneDim(_))).count(), 2);
    let mut d = t.table().degrees();
    d.sort_unstable();
    assert_eq!(d, vec![1, 1, 4, 4, 5, 5, 6]);
}

#[test]
fn table_entries_on_unipotent_and_nonsplit() {
    for q in [4u64, 5, 7, 8, 9] {
        let t = Pgl2Table::new(q).unwrap();
        let u = t.classes().index(TorusClass::Unipotent(0)).unwrap();
        for l in GenericRepLabel::all(q) {
            let chi = t.generic(l).unwrap();
            match l.kind {
                GenericKind::Cuspidal => assert_eq!(*chi.value(u), Cyclotomic::from_integer(-1)),
                GenericKind::PrincipalSeries => {
                    for j in 1..=(q + 1) / 2 {
                        let c = t.classes().index(TorusClass::Nonsplit(j)).unwrap();
                        assert!(chi.value(c).is_zero());
                    }
                }
                GenericKind::SteinbergTwist => assert!(chi.value(u).is_zero()),
            }
        }
    }
}

// rows of the explicit table equal rows of the Dixon table, via the matrix model
#[test]
fn explicit_table_matches_dixon() {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let explicit = Pgl2Table::new(q).unwrap();
        let g = GroupSpec::Pgl2 { q }.build().unwrap();
        let dixon = dixon_character_table(&g).unwrap();
        let model = LinearModel::new(LinearFamily::Pgl2, q).unwrap();
        let map = model.class_correspondence(&g, explicit.classes()).unwrap();
        let mut used = vec![false; dixon.len()];
        for chi in explicit.table().characters() {
            let pulled: Vec<Cyclotomic> = map.iter().map(|&s| chi.value(s).clone()).collect();
            let pulled = ClassFunction::new(g.structure().clone(), pulled).unwrap();
            let i = dixon.characters().iter().position(|d| *d == pulled).unwrap_or_else(|| panic!("q={q}"));
            assert!(!std::mem::replace(&mut used[i], true));
        }
    }
}

#[test]
fn transfer_examples() {
    let ctx = TrilinearContext::new(5).unwrap();
    let cusp = label(5, GenericKind::Cuspidal, 1);
    assert!(ctx.transfer(cusp, TorusNormalizer::Split).function.is_zero());
    let st = label(5, GenericKind::SteinbergTwist, 0);
    let f = ctx.transfer(st, TorusNormalizer::Nonsplit).function;
    assert_eq!(f, ClassFunction::trivial(f.structure().clone()));
    let ps = label(5, GenericKind::PrincipalSeries, 1);
    let f = ctx.transfer(ps, TorusNormalizer::Split).function;
    let d = ctx.normalizers().group(TorusNormalizer::Split);
    // rotation r of order 4: ζ4 + ζ4^{-1} = 0; r^2: -2
    assert!(f.value(d.rotation_class(1)).is_zero());
    assert_eq!(*f.value(d.rotation_class(2)), Cyclotomic::from_integer(-2));
    assert_eq!(f.inner_product(&f).unwrap(), Cyclotomic::one());
}

// π|_S − π^{S'}|_S and π|_T + π^{T'}|_T are regular characters
#[test]
fn restriction_property() {
    for q in [5u64, 7, 8, 9] {
        let ctx = TrilinearContext::new(q).unwrap();
        let t = ctx.table();
        for l in GenericRepLabel::all(q) {
            let chi = t.generic(l).unwrap();
            for (target, m, sign) in [(TorusNormalizer::Split, q - 1, -1i64), (TorusNormalizer::Nonsplit, q + 1, 1)] {
                let tr = ctx.transfer(l, target).function;
                let d = ctx.normalizers().group(target);
                for k in 0..m {
                    let r = k.min(m - k);
                    let kind = match (k, target) {
                        (0, _) => TorusClass::Identity,
                        (_, TorusNormalizer::Split) => TorusClass::Split(r),
                        (_, TorusNormalizer::Nonsplit) => TorusClass::Nonsplit(r),
                    };
                    let g_val = chi.value(t.classes().index(kind).unwrap());
                    let h_val = tr.value(d.rotation_class(k)).scale(&rat(sign, 1));
                    let want = Cyclotomic::from_integer(if k == 0 { m as i64 } else { 0 });
                    assert_eq!(g_val + &h_val, want, "q={q} {l} {target:?} k={k}");
                }
                if !tr.is_zero() {
                    // genuine character of the dihedral group
                    let norm = tr.inner_product(&tr).unwrap();
                    assert!(norm.is_rational());
                }
            }
        }
    }
}

#[test]
fn trilinear_theorem_small_q() {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let r = verify_trilinear(q).unwrap();
        assert!(r.violations.is_empty() && r.case_violations.is_empty());
        let n = GenericRepLabel::all(q).len() as u64;
        assert_eq!(r.triples_checked, n * (n + 1) * (n + 2) / 6);
    }
}

#[test]
fn cubic_cuspidal_at_q8() {
    let ctx = TrilinearContext::new(8).unwrap();
    let c = label(8, GenericKind::Cuspidal, 3);
    assert!(is_cubic_cuspidal(8, c));
    assert_eq!(ctx.m_h([c; 3], Subgroup::G).unwrap(), 0);
    assert_eq!(ctx.m_h([c; 3], Subgroup::TPrime).unwrap(), 1);
    assert_eq!(ctx.m_h([c; 3], Subgroup::SPrime).unwrap(), 0);
    let st = label(5, GenericKind::SteinbergTwist, 0);
    let ctx5 = TrilinearContext::new(5).unwrap();
    assert_eq!(ctx5.m_h([st; 3], Subgroup::G).unwrap(), 1);
}

#[test]
fn corollary_small_q() {
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let r = corollary_report(q).unwrap();
        assert!(r.holds_with_principal_series_exception, "q={q}");
        assert_eq!(!r.cubic_cuspidals.is_empty(), (q + 1) % 3 == 0);
        // principal series of a cubic η have a 2-dimensional space of invariants
        assert_eq!(r.holds_as_stated, (q - 1) % 3 != 0);
    }
    assert!(trilinear_report(4).unwrap().violations.is_empty());
}

#[test]
fn identity_polynomial() {
    assert!(verify_identity_polynomial());
    let v = identity_lhs(&rat(7, 1), [&rat(1, 1), &rat(0, 1), &rat(-1, 1)]).unwrap();
    assert_eq!(v, rat(1, 1));
    let v = identity_lhs(&rat(2, 1), [&rat(0, 1), &rat(0, 1), &rat(0, 1)]).unwrap();
    assert_eq!(v, rat(1, 1));
}

mod props {
    use super::*;
    use proptest::prelude::*;
    use std::sync::LazyLock;

    static CTX11: LazyLock<TrilinearContext> = LazyLock::new(|| TrilinearContext::new(11).unwrap());

    proptest! {
        #[test]
        fn identity_holds_at_rational_points(
            qn in 2i64..400, qd in 1i64..9, a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1i64..7,
        ) {
            let q = rat(qn, qd);
            prop_assume!(q != rat(1, 1));
            let v = identity_lhs(&q, [&rat(a, d), &rat(b, d), &rat(c, 1)]).unwrap();
            prop_assert_eq!(v, rat(1, 1));
        }

        #[test]
        fn m_h_independent_of_representative(i in 0usize..13, j in 0usize..13, k in 0usize..13) {
            let q = 11u64;
            let labels = GenericRepLabel::all(q);
            let pick = |n: usize| labels[n % labels.len()];
            let (a, b, c) = (pick(i), pick(j), pick(k));
            let flip = |l: GenericRepLabel| {
                let m = match l.kind { GenericKind::PrincipalSeries => q - 1, GenericKind::Cuspidal => q + 1, _ => return l };
                GenericRepLabel { kind: l.kind, exponent: m - l.exponent }
            };
            let ctx = &*CTX11;
            for h in [Subgroup::G, Subgroup::SPrime, Subgroup::TPrime] {
                let x = ctx.m_h([a, b, c], h).unwrap();
                prop_assert_eq!(x, ctx.m_h([flip(a), b, flip(c)], h).unwrap());
            }
        }
    }
}
