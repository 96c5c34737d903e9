use gscert::spec_file::{load_spec, parse_shorthand, parse_spec, resolve_group, to_toml, SpecFileError};
use gscert_core::group::GroupSpec;

const S3XS3: &str = r#"
kind = "direct_product"

[[factors]]
kind = "symmetric"
n = 3

[[factors]]
kind = "symmetric"
n = 3
"#;

#[test]
fn parses_nested_tables() {
    let spec = parse_spec(S3XS3).unwrap();
    let s3 = GroupSpec::Symmetric { n: 3 };
    assert_eq!(spec, GroupSpec::DirectProduct { factors: vec![s3.clone(), s3] });
    let inline = parse_spec("kind = \"wreath2\"\nbase = { kind = \"symmetric\", n = 3 }\n").unwrap();
    assert_eq!(inline.describe(), "S3 wr C2");
}

#[test]
fn round_trips_every_catalog_group() {
    for e in gscert::catalog() {
        let text = to_toml(&e.spec);
        assert_eq!(parse_spec(&text).unwrap(), e.spec, "{}\n{text}", e.key);
    }
}

#[test]
fn errors_name_line_and_field() {
    let bad = S3XS3.replacen("n = 3\n\n[[factors]]\nkind = \"symmetric\"\nn = 3", "n = 3\n\n[[factors]]\nkind = \"symmetric\"\nm = 3", 1);
    let e = parse_spec(&bad).unwrap_err();
    assert_eq!((e.line, e.field.as_str()), (10, "factors[1].m"));

    let e = parse_spec("kind = \"pgl2\"\nq = \"five\"\n").unwrap_err();
    assert_eq!((e.line, e.column, e.field.as_str()), (2, 5, "q"));

    let e = parse_spec("kind = \"dihedral\"\nn = 4\n").unwrap_err();
    assert_eq!(e.field, "kind");
    assert!(e.message.contains("dihedral"));

    let e = parse_spec("kind = \"wreath2\"\n").unwrap_err();
    assert_eq!(e.field, "base");
    assert!(e.message.contains("missing"));

    let e = parse_spec("kind = \"semidirect\"\nnormal = { kind = \"cyclic\", n = 3 }\nacting = { kind = \"cyclic\", n = 2 }\naction = [[[0, -1]]]\n").unwrap_err();
    assert_eq!((e.line, e.field.as_str()), (4, "action[0][0]"));

    let e = parse_spec("kind = \"pgl2\"\nq = 5\nq = 7\n").unwrap_err();
    assert_eq!(e.line, 3);
}

#[test]
fn files_and_names() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3xs3.toml");
    std::fs::write(&path, S3XS3).unwrap();
    assert_eq!(load_spec(&path).unwrap().describe(), "S3 x S3");
    assert_eq!(resolve_group(path.to_str().unwrap()).unwrap().describe(), "S3 x S3");
    assert!(matches!(load_spec(&dir.path().join("missing.toml")), Err(SpecFileError::Io { .. })));
    std::fs::write(&path, "kind = 3").unwrap();
    let msg = load_spec(&path).unwrap_err().to_string();
    assert!(msg.contains("s3xs3.toml") && msg.contains("line 1"), "{msg}");
    assert_eq!(resolve_group("bring").unwrap(), GroupSpec::Pgl2 { q: 5 });
    assert_eq!(parse_shorthand("psl2:8"), Some(GroupSpec::Psl2 { q: 8 }));
    assert_eq!(parse_shorthand("psl2:x"), None);
    assert!(matches!(resolve_group("nothing"), Err(SpecFileError::UnknownGroup(_))));
}
