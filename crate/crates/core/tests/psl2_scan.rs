use gscert_core::group::{LinearClasses, LinearFamily};
use gscert_core::hurwitz::hurwitz_character;
use gscert_core::psl2_scan::{
    bound_chain, bound_check, closed_form_hurwitz_character, closed_form_with_check, macbeath_admissible,
    scan_row, scan_theorem, standard_ramification,
};
use gscert_core::{BigInt, Cyclotomic, Error};

#[test]
fn macbeath_condition() {
    assert!(macbeath_admissible(7).unwrap());
    assert!(macbeath_admissible(8).unwrap());
    assert!(!macbeath_admissible(11).unwrap());
    assert!(macbeath_admissible(13).unwrap());
    assert!(macbeath_admissible(27).unwrap());
    assert!(macbeath_admissible(29).unwrap());
    assert!(!macbeath_admissible(49).unwrap());
    assert!(!macbeath_admissible(343).unwrap());
    assert!(!macbeath_admissible(64).unwrap());
    assert!(matches!(macbeath_admissible(12), Err(Error::InvalidPrimePower(12))));
    // the only even admissible q is 8
    for m in 1..10 {
        assert_eq!(macbeath_admissible(1 << m).unwrap(), m == 3);
    }
}

#[test]
fn closed_form_values_at_13() {
    let chi = closed_form_hurwitz_character(13, &[2, 3, 7]).unwrap();
    let lc = LinearClasses::new(LinearFamily::Psl2, 13).unwrap();
    let s = lc.structure();
    let order = s.group_order as i64;
    assert_eq!(chi.value(0), &Cyclotomic::from_integer(2 + order / 42 - 2 + 2));
    for c in 1..s.len() {
        let d = s.order(c);
        if ![2, 3, 7].iter().any(|e| e % d == 0) {
            assert_eq!(chi.value(c), &Cyclotomic::from_integer(2), "class {}", s.class(c).label);
        }
    }
}

#[test]
fn closed_form_matches_direct_induction() {
    for q in [7u64, 13, 27, 29, 41, 43, 49, 83, 97, 127, 169] {
        let lc = LinearClasses::new(LinearFamily::Psl2, q).unwrap();
        let Some(ram) = standard_ramification(&lc, &[2, 3, 7]).unwrap() else { continue };
        let (closed, naive) = closed_form_with_check(&lc, &ram).unwrap();
        assert_eq!(closed, hurwitz_character(&ram).unwrap(), "q = {q}");
        // for even m the cyclic subgroup meets only one of the two unipotent
        // classes, so the uniform unipotent term is wrong on the other one
        let expected = match q {
            7 | 27 => Some(true),
            49 => Some(false),
            _ => None,
        };
        assert_eq!(naive, expected, "q = {q}");
    }
    assert!(matches!(closed_form_hurwitz_character(8, &[2, 3, 7]), Err(Error::InvalidInput(_))));
    assert!(matches!(closed_form_hurwitz_character(11, &[2, 3, 7]), Err(Error::InvalidInput(_))));
}

#[test]
fn small_rows_checked_by_brute_force() {
    let r7 = scan_row(7).unwrap();
    assert!(r7.brute_force_checked && r7.d3.unwrap() > 0);
    assert_eq!(r7.genus, Some(3));
    let r8 = scan_row(8).unwrap();
    assert!(r8.brute_force_checked);
    assert_eq!((r8.genus, r8.d3), (Some(7), Some(0)));
    assert_eq!(r8.closed_form_agrees, None);
    let r13 = scan_row(13).unwrap();
    assert!(r13.brute_force_checked && r13.closed_form_agrees == Some(true));
    assert_eq!(r13.genus, Some(14));
}

#[test]
fn bound_chain_links() {
    for q in [43u64, 47] {
        assert!(bound_check(q).unwrap().l1_equals_l2);
    }
    assert!(bound_check(43).unwrap().margin().unwrap() > gscert_core::arith::int(0));
    let b43 = bound_check(43).unwrap();
    assert_eq!(b43.bracket, BigInt::from(42 * 42 * 42 * 44 - 40 * 42 * 42 * 42));
    assert!(matches!(bound_check(41), Err(Error::InvalidInput(_))));
    assert!(matches!(bound_chain(45, None), Err(Error::InvalidPrimePower(45))));
    // 47 ≡ 5 mod 7: no element of order 7
    assert_eq!(bound_check(47).unwrap().cube_sum, None);
}

#[test]
fn scan_to_199() {
    let rows = scan_theorem(199).unwrap();
    let zeros: Vec<u64> = rows.iter().filter(|r| r.d3 == Some(0)).map(|r| r.q).collect();
    assert_eq!(zeros, vec![8]);
    let admissible: Vec<u64> = rows.iter().filter(|r| r.admissible).map(|r| r.q).collect();
    assert_eq!(admissible, vec![7, 8, 13, 27, 29, 41, 43, 71, 83, 97, 113, 125, 127, 139, 167, 181, 197]);
    for r in rows.iter().filter(|r| r.q % 2 == 1 && r.q >= 43) {
        let b = r.bound.as_ref().unwrap();
        if let Some(s) = &r.cube_sum {
            assert!(*s > 0.into());
            assert!(b.margin().unwrap() > gscert_core::arith::int(0));
        }
    }
    assert!(matches!(scan_theorem(1001), Err(Error::InvalidInput(_))));
}
