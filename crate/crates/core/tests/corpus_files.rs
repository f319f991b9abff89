use std::fs;
use std::path::Path;

use bihom::corpus;
use bihom::io::{load_bundle, render_bundle};

fn dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus"))
}

#[test]
fn committed_files_match_the_builders() {
    for (name, b) in corpus::all() {
        let path = dir().join(format!("{name}.bundle"));
        assert_eq!(fs::read_to_string(&path).unwrap(), render_bundle(&b).unwrap(), "{name}");
        assert_eq!(load_bundle(&path).unwrap(), b, "{name}");
    }
}

#[test]
fn no_stray_files() {
    let mut names: Vec<String> = fs::read_dir(dir())
        .unwrap()
        .map(|e| e.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    names.sort();
    let mut expected: Vec<String> = corpus::NAMES.iter().map(|s| s.to_string()).collect();
    expected.sort();
    assert_eq!(names, expected);
}

#[test]
fn m2_file_lists_the_matrix_unit_products() {
    let b = load_bundle(dir().join("m2_rational.bundle")).unwrap();
    let p = b.product("mul").unwrap();
    for (a, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for d in 0..2 {
            let (i, j, k) = (corpus::m2_unit(a, c), corpus::m2_unit(c, d), corpus::m2_unit(a, d));
            assert!(p.coeff(i, j, k).is_one());
        }
    }
    assert_eq!(p.coeffs().iter().filter(|c| !c.is_zero()).count(), 8);
}
