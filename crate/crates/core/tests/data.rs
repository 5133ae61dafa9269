use koszul::corpus::{builtin, builtin_names, Document};

#[test]
fn data_files_match_builtins() {
    for name in builtin_names() {
        let path = format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let doc = Document::load(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
        assert_eq!(doc.spec, builtin(name).unwrap(), "{name}");
    }
}
