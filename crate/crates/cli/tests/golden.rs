//! Byte-for-byte comparison of the binary's output with the files under
//! `tests/golden/`. Set `NEFCONE_BLESS=1` to rewrite them.

mod common;

use common::{golden_dir, run, CASES};

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("NEFCONE_BLESS").is_some();
    let mut mismatched = Vec::new();
    for case in CASES {
        let out = run(case.args);
        assert_eq!(out.status.code(), Some(case.exit), "{}: {}", case.name, String::from_utf8_lossy(&out.stderr));
        let path = golden_dir().join(case.name);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if expected != out.stdout {
            mismatched.push(case.name);
        }
    }
    assert!(mismatched.is_empty(), "output differs from golden files: {mismatched:?}");
}

#[test]
fn repeated_runs_are_identical() {
    for case in CASES {
        assert_eq!(run(case.args).stdout, run(case.args).stdout, "{}", case.name);
    }
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.svg");
    let out = run(&["render", "--d", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, std::fs::read(golden_dir().join("render_d2.svg")).unwrap());
}

#[test]
fn bad_input_exits_2_with_one_line() {
    let cases: &[&[&str]] = &[
        &["decompose", "--model", "@duplicate_ids"],
        &["picard", "--model", "/nonexistent/model.json"],
        &["funddomain", "--d", "4"],
        &["funddomain", "--d", "12"],
        &["funddomain", "--d", "2", "--ray", "1,1"],
        &["reduce", "--form", "1,3,5"],
        &["reduce", "--form", "1,2"],
        &["surface", "--a", "1", "--b", "-2"],
        &["verify", "--pi", "1,0;3,2", "--g", "1,1;0,1", "--a", "1", "--b", "2"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error: "), "{err}");
        assert!(out.stdout.is_empty());
    }
    let malformed = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(malformed.path(), "{\"factors\": [").unwrap();
    let out = run(&["bauer", "--model", malformed.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
