use std::collections::BTreeMap;

use gscert_core::group::{
    FiniteGroup, GroupElement, GroupSpec, LinearClasses, LinearFamily, LinearModel, Permutation, ORDER_CAP,
};

fn cyc(n: u32) -> GroupSpec {
    GroupSpec::Cyclic { n }
}

fn check_class_invariants(g: &FiniteGroup) {
    let s = g.structure();
    s.validate().unwrap();
    assert_eq!(s.group_order as usize, g.order());
    for (i, c) in g.classes().iter().enumerate() {
        for &gen in &g.generator_indices() {
            assert_eq!(g.class_of(g.conj(c.rep_index, gen)), i);
        }
        assert_eq!(c.representative.order(), c.order);
    }
}

#[test]
fn orders_of_standard_groups() {
    let cases = [
        (GroupSpec::Symmetric { n: 5 }, 120),
        (GroupSpec::Psl2 { q: 8 }, 504),
        (GroupSpec::Psl2 { q: 7 }, 168),
        (GroupSpec::Pgl2 { q: 5 }, 120),
        (GroupSpec::Sl2 { q: 3 }, 24),
        (GroupSpec::Gl2Mod { n: 4 }, 96),
        (GroupSpec::Wreath2 { base: Box::new(GroupSpec::Symmetric { n: 3 }) }, 72),
    ];
    for (spec, order) in cases {
        let g = spec.build().unwrap();
        assert_eq!(g.order(), order, "{spec}");
        check_class_invariants(&g);
    }
}

#[test]
fn class_counts() {
    assert_eq!(GroupSpec::Pgl2 { q: 5 }.build().unwrap().classes().len(), 7);
    assert_eq!(GroupSpec::Symmetric { n: 5 }.build().unwrap().classes().len(), 7);
    let psl7 = GroupSpec::Psl2 { q: 7 }.build().unwrap();
    let sizes: Vec<(u64, u64)> = psl7.classes().iter().map(|c| (c.order, c.size)).collect();
    assert_eq!(sizes, vec![(1, 1), (2, 21), (3, 56), (4, 42), (7, 24), (7, 24)]);
}

#[test]
fn fingerprint_of_cyclic_four() {
    let f = cyc(4).build().unwrap().fingerprint();
    assert_eq!(f.order, 4);
    assert_eq!(f.element_orders, BTreeMap::from([(1, 1), (2, 1), (4, 2)]));
    assert_eq!(f.center_order, 4);
    assert_eq!(f.abelian_invariants, vec![4]);
    assert_eq!(f.derived_order, 1);
}

#[test]
fn abelian_invariants_of_products() {
    let g = GroupSpec::DirectProduct { factors: vec![cyc(2), cyc(4), cyc(6)] }.build().unwrap();
    assert_eq!(g.fingerprint().abelian_invariants, vec![2, 2, 3, 4]);
    let s3 = GroupSpec::Symmetric { n: 3 };
    let f = GroupSpec::DirectProduct { factors: vec![s3.clone(), s3] }.build().unwrap().fingerprint();
    assert_eq!((f.order, f.center_order, f.derived_order), (36, 1, 9));
    assert_eq!(f.abelian_invariants, vec![2, 2]);
}

#[test]
fn central_product_sl23_c4() {
    let spec = GroupSpec::CentralProduct {
        left: Box::new(GroupSpec::Sl2 { q: 3 }),
        right: Box::new(cyc(4)),
    };
    let g = spec.build().unwrap();
    let f = g.fingerprint();
    assert_eq!(f.order, 48);
    assert_eq!(f.center_order, 4);
    assert_eq!(f.order / f.center_order, 12);
    assert_eq!(f.abelian_invariants, vec![2, 3]);
    assert_eq!(f.derived_order, 8);
    assert!(!g.center_has_two_generated_complement());
    // the split extension C4 x A4 does have one
    let a4 = GroupSpec::Permutations { degree: 4, generators: vec!["(0 1 2)".into(), "(0 1)(2 3)".into()] };
    let split = GroupSpec::DirectProduct { factors: vec![cyc(4), a4] }.build().unwrap();
    assert!(split.center_has_two_generated_complement());
}

#[test]
fn semidirect_with_bad_action_is_rejected() {
    // swapping a generator of C4 with its square is not an automorphism
    let spec = GroupSpec::Semidirect {
        normal: Box::new(cyc(4)),
        acting: Box::new(cyc(2)),
        action: vec![vec![vec![0, 0]]],
    };
    assert!(matches!(spec.build(), Err(gscert_core::Error::NonFaithfulAction(_))));
    let dihedral = GroupSpec::Semidirect {
        normal: Box::new(cyc(4)),
        acting: Box::new(cyc(2)),
        action: vec![vec![vec![0, 0, 0]]],
    };
    let f = dihedral.build().unwrap().fingerprint();
    assert_eq!((f.order, f.center_order, f.derived_order), (8, 2, 2));
    // an order-3 automorphism cannot come from C2
    let bad = GroupSpec::Semidirect {
        normal: Box::new(GroupSpec::DirectProduct { factors: vec![cyc(2), cyc(2)] }),
        acting: Box::new(cyc(2)),
        action: vec![vec![vec![1], vec![0, 1]]],
    };
    assert!(matches!(bad.build(), Err(gscert_core::Error::NonFaithfulAction(_))));
}

#[test]
fn fingerprint_survives_relabeling() {
    let gens = ["(0 1 2 3 4 5)", "(0 3)(1 2)", "(6 7 8)"];
    let sigma = Permutation::parse_cycles(9, "(0 5 8 2)(1 7)(3 6 4)").unwrap();
    let plain: Vec<GroupElement> =
        gens.iter().map(|s| GroupElement::Perm(Permutation::parse_cycles(9, s).unwrap())).collect();
    let moved: Vec<GroupElement> = plain
        .iter()
        .map(|g| GroupElement::Perm(g.as_perm().unwrap().relabel(&sigma)))
        .collect();
    let a = FiniteGroup::generate("a", plain, ORDER_CAP).unwrap();
    let b = FiniteGroup::generate("b", moved, ORDER_CAP).unwrap();
    assert_eq!(a.fingerprint(), b.fingerprint());
    assert_eq!(a.structure().classes, b.structure().classes);
}

#[test]
fn structural_classes_match_enumeration() {
    for family in [LinearFamily::Pgl2, LinearFamily::Psl2] {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13] {
            let lin = LinearClasses::new(family, q).unwrap();
            lin.structure().validate().unwrap();
            let spec = match family {
                LinearFamily::Pgl2 => GroupSpec::Pgl2 { q },
                LinearFamily::Psl2 => GroupSpec::Psl2 { q },
            };
            let g = spec.build().unwrap();
            assert_eq!(g.order() as u64, lin.group_order(), "{spec}");
            let model = LinearModel::new(family, q).unwrap();
            let mut seen = vec![false; lin.structure().len()];
            for c in g.classes() {
                let kind = model.classify(&c.representative).unwrap();
                let s = lin.index(kind).unwrap_or_else(|| panic!("{spec}: {kind:?}"));
                assert!(!std::mem::replace(&mut seen[s], true), "{spec}: {kind:?} hit twice");
                assert_eq!(lin.structure().size(s), c.size, "{spec} {kind:?}");
                assert_eq!(lin.structure().order(s), c.order, "{spec} {kind:?}");
                assert_eq!(model.classify(&model.representative(kind)).unwrap(), kind);
                for k in 0..c.order {
                    let pk = model.classify(&c.representative.pow(k)).unwrap();
                    assert_eq!(pk, lin.kind(lin.structure().power(s, k as i64)), "{spec} {kind:?}^{k}");
                }
            }
            assert!(seen.iter().all(|&b| b));
        }
    }
}

#[test]
fn psl2_seven_structural_sizes() {
    let lin = LinearClasses::new(LinearFamily::Psl2, 7).unwrap();
    let s = lin.structure();
    let of = |o: u64| -> Vec<u64> { s.classes.iter().filter(|c| c.order == o).map(|c| c.size).collect() };
    assert_eq!(of(7), vec![24, 24]);
    assert_eq!(of(2), vec![21]);
}

#[test]
fn element_orders() {
    let id = GroupElement::Perm(Permutation::identity(4));
    assert_eq!(id.order(), 1);
    assert_eq!(id.cyclic_subgroup(), vec![id.clone()]);
    let model = LinearModel::new(LinearFamily::Psl2, 8).unwrap();
    let u = model.representative(gscert_core::group::TorusClass::Unipotent(0));
    assert_eq!(u.order(), 2);
}

