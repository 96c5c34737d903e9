use gscert::catalog::{catalog, certify_entry, reproduce_all, ExpectedVerdict};
use gscert::TableCache;
use gscert_core::hurwitz::genus_from_signature;

#[test]
fn declared_genera_follow_from_signatures() {
    for e in catalog() {
        assert_eq!(genus_from_signature(e.fingerprint.order, &e.signature).unwrap(), e.genus, "{}", e.key);
    }
}

#[test]
fn every_entry_passes() {
    let report = reproduce_all(&TableCache::disabled());
    for e in &report.entries {
        assert!(e.pass, "{}: {:?}", e.key, e);
        assert!(!e.certificates.is_empty());
        for c in &e.certificates {
            assert_eq!(c.dim_h1, 2 * e.declared_genus);
            match e.expected {
                ExpectedVerdict::Vanishes => assert_eq!(c.verdict.as_str(), "criterion satisfied"),
                ExpectedVerdict::NonVanishing => assert_eq!(c.verdict.as_str(), "criterion NOT satisfied"),
            }
        }
    }
    assert_eq!((report.passed, report.failed), (9, 0));
}

#[test]
fn families_have_one_dimensional_moduli() {
    let families: Vec<_> = catalog().into_iter().filter(|e| e.key.starts_with("family")).collect();
    assert_eq!(families.len(), 2);
    for e in families {
        assert_eq!(e.signature.len() - 3, 1);
    }
}

#[test]
fn reproduction_is_byte_stable() {
    let a = serde_json::to_string(&reproduce_all(&TableCache::disabled())).unwrap();
    let b = serde_json::to_string(&reproduce_all(&TableCache::disabled())).unwrap();
    assert_eq!(a, b);
}

#[test]
fn a_wrong_expectation_is_reported() {
    let mut e = catalog().into_iter().find(|e| e.key == "klein").unwrap();
    e.expected = ExpectedVerdict::Vanishes;
    let r = certify_entry(&e, &TableCache::disabled());
    assert!(!r.pass && !r.verdict_ok);
    let mut e = catalog().into_iter().find(|e| e.key == "bring").unwrap();
    e.genus = 5;
    assert!(!certify_entry(&e, &TableCache::disabled()).genus_ok);
}
