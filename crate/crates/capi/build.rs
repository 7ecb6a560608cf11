use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR is set by cargo");
    let out_dir = PathBuf::from(env::var("OUT_DIR").expect("OUT_DIR is set by cargo"));

    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    let config = cbindgen::Config::from_file(PathBuf::from(&crate_dir).join("cbindgen.toml"))
        .expect("cbindgen.toml should parse");
    let bindings = cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("header generation should succeed");

    bindings.write_to_file(out_dir.join("tripow.h"));
    // Refresh the committed copy when the tree is writable; skip silently in
    // read-only checkouts.
    let committed = PathBuf::from(&crate_dir).join("include").join("tripow.h");
    if std::fs::create_dir_all(committed.parent().unwrap()).is_ok() {
        bindings.write_to_file(&committed);
    }
}
