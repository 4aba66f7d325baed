fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let written = tppforge::tables::export_builtin_tables(&dir).unwrap();
    for p in written {
        println!("{}", p.display());
    }
}
