use gscert::cache::{spec_hash, TableCache};
use gscert_core::character::dixon_character_table;
use gscert_core::group::GroupSpec;

#[test]
fn tables_round_trip_through_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    for spec in [GroupSpec::Psl2 { q: 8 }, GroupSpec::Gl2Mod { n: 4 }, GroupSpec::Symmetric { n: 5 }] {
        let g = spec.build().unwrap();
        let fresh = dixon_character_table(&g).unwrap();
        let first = cache.character_table(&spec, &g).unwrap();
        let file = dir.path().join(format!("{}.json", spec_hash(&spec)));
        assert!(file.is_file());
        let second = cache.character_table(&spec, &g).unwrap();
        assert_eq!(first.characters(), fresh.characters());
        assert_eq!(second.characters(), fresh.characters());
        assert_eq!(second.names(), fresh.names());
    }
}

#[test]
fn corrupt_entries_are_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::new(dir.path());
    let spec = GroupSpec::Symmetric { n: 4 };
    let g = spec.build().unwrap();
    let file = dir.path().join(format!("{}.json", spec_hash(&spec)));
    std::fs::write(&file, "{ not json").unwrap();
    let t = cache.character_table(&spec, &g).unwrap();
    assert_eq!(t.len(), 5);
    // a syntactically valid but wrong table is rejected by validation
    let text = std::fs::read_to_string(&file).unwrap().replacen("\"1\"", "\"7\"", 1);
    std::fs::write(&file, text).unwrap();
    assert_eq!(cache.character_table(&spec, &g).unwrap().characters(), t.characters());
}

#[test]
fn hash_depends_on_the_spec() {
    assert_ne!(spec_hash(&GroupSpec::Psl2 { q: 8 }), spec_hash(&GroupSpec::Pgl2 { q: 8 }));
    assert_eq!(spec_hash(&GroupSpec::Psl2 { q: 8 }).len(), 64);
}
