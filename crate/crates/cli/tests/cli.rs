//! Behavior of the `triangle-cone` binary: output determinism, file
//! contents, table rendering and exit codes.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_triangle-cone"))
}

fn read(dir: &Path, name: &str) -> Vec<u8> {
    std::fs::read(dir.join(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"))
}

#[test]
fn generate_is_byte_deterministic() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    for dir in [&dir_a, &dir_b] {
        let status = bin()
            .args(["generate", "--family", "C3", "--format", "ieq"])
            .arg("--out")
            .arg(dir.path())
            .status()
            .unwrap();
        assert!(status.success());
    }
    for name in ["c3_system.ieq", "c3_facets.ieq", "c3_rays.poi"] {
        assert_eq!(read(dir_a.path(), name), read(dir_b.path(), name), "{name}");
    }
}

#[test]
fn generated_files_have_the_expected_row_counts() {
    let dir = tempfile::tempdir().unwrap();
    let status = bin()
        .args(["generate", "--family", "C3", "--format", "ieq"])
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(status.success());
    let count_rows = |name: &str, after: &str| -> usize {
        let text = String::from_utf8(read(dir.path(), name)).unwrap();
        text.lines()
            .skip_while(|l| !l.starts_with(after))
            .skip(1)
            .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("EQUALITIES"))
            .take_while(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-'))
            .count()
    };
    assert_eq!(count_rows("c3_system.ieq", "INEQUALITIES"), 135);
    assert_eq!(count_rows("c3_facets.ieq", "INEQUALITIES"), 102);
    assert_eq!(count_rows("c3_rays.poi", "DIM"), 51);

    // JSON document for A3 carries the trace equalities.
    let status = bin()
        .args(["generate", "--family", "A3", "--format", "json"])
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(status.success());
    let doc: serde_json::Value =
        serde_json::from_slice(&read(dir.path(), "a3.json")).unwrap();
    assert_eq!(doc["family"], "A3");
    assert_eq!(doc["dimension"], 12);
    assert_eq!(doc["equalities"].as_array().unwrap().len(), 3);
    assert_eq!(doc["inequalities"].as_array().unwrap().len(), 50);
    assert_eq!(doc["facets"].as_array().unwrap().len(), 50);
}

#[test]
fn product_table_prints_the_published_grid() {
    let out = bin()
        .args(["table", "--family", "C3", "--parabolic", "2", "--kind", "products"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2a4' + a4''"), "missing a1*a3' entry:\n{text}");
    assert!(text.contains("a2' + a2''"), "missing a1*a1 entry:\n{text}");
}

#[test]
fn inequality_table_marks_the_chamber_consequences() {
    let out = bin()
        .args(["table", "--family", "C3", "--parabolic", "1", "--kind", "inequalities"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text
        .lines()
        .find(|l| l.contains("(2,2,1)"))
        .expect("the (2,2,1) row is listed");
    assert!(row.contains("(*)"), "trivially redundant marker missing: {row}");
    assert!(text.contains("21 rows after symmetrization"), "{text}");
}

#[test]
fn rays_are_printed_in_coordinate_major_order() {
    let out = bin()
        .args(["rays", "--family", "C3", "--format", "text"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 51);
    assert!(lines.contains(&"1 0 1 0 0 0 0 0 0"));
    assert!(lines.contains(&"1 2 3 1 2 1 1 0 1"));
}

#[test]
fn verify_a3_exits_zero() {
    let out = bin().args(["verify", "--family", "A3"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] A3 facet count"), "{text}");
    assert!(!text.contains("[FAIL]"), "{text}");
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = bin().args(["table", "--family", "C3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "missing --kind is a usage error");
    let out = bin()
        .args(["verify", "--family", "D4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "unknown family is a usage error");
    let out = bin()
        .args(["table", "--family", "C3", "--parabolic", "4", "--kind", "weyl"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "parabolic out of range");
}
