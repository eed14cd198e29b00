//! Byte-for-byte comparison of CLI output against checked-in files.
//! Run with `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

const CORPUS: &[(&str, &[&str])] = &[
    ("fueter_2_1_3", &["fueter", "--alpha", "2", "--beta", "1", "--n", "3"]),
    (
        "fueter_2_1_4_json",
        &["fueter", "--alpha", "2", "--beta", "1", "--n", "4", "--json"],
    ),
    ("divpoly_2_1_3", &["divpoly", "--alpha", "2", "--beta", "1", "--n", "3"]),
    (
        "divpoly_5_m2_4_json",
        &["divpoly", "--alpha", "5", "--beta", "-2", "--n", "4", "--json"],
    ),
    ("reduce_2_1", &["reduce", "--alpha", "2", "--beta", "1"]),
    ("reduce_2_1_json", &["reduce", "--alpha", "2", "--beta", "1", "--json"]),
    (
        "reduce_136_1_p2",
        &["reduce", "--alpha", "136", "--beta", "1", "--prime", "2"],
    ),
    (
        "newton_f3_2",
        &["newton", "--poly=-3,-2,-6,0,1", "--phi=-1,1", "--prime", "2"],
    ),
    (
        "newton_f3_2_json",
        &["newton", "--poly=-3,-2,-6,0,1", "--phi=-1,1", "--prime", "2", "--json"],
    ),
    ("index_t2m4_2", &["index", "--poly=-4,0,1", "--prime", "2"]),
    (
        "index_f3_3_json",
        &["index", "--poly=-3,-2,-6,0,1", "--prime", "3", "--json"],
    ),
    ("certify_2", &["certify", "--alpha", "2"]),
    ("certify_2_json", &["certify", "--alpha", "2", "--json"]),
    ("certify_10", &["certify", "--alpha", "10"]),
    ("certify_16_generic", &["certify", "--alpha", "16", "--generic"]),
    ("scan_m25_25", &["scan", "--min", "-25", "--max", "25", "--jobs", "3"]),
    ("survey_a", &["survey", "--family", "A", "--s", "1..2", "--t", "0..4"]),
    (
        "survey_b_json",
        &["survey", "--family", "B", "--s", "0", "--t", "1", "--json"],
    ),
    (
        "valuation_13_1_5_3",
        &["valuation", "--alpha", "13", "--prime", "5", "--n", "3"],
    ),
    (
        "valuation_1_5_5_5_json",
        &[
            "valuation",
            "--alpha",
            "1",
            "--beta",
            "5",
            "--prime",
            "5",
            "--n",
            "5",
            "--json",
        ],
    ),
];

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monodiv"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (name, args) in CORPUS {
        let out = bin().args(*args).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let path = golden_dir().join(format!("{name}.txt"));
        if update {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let want = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if want != out.stdout {
            stale.push(*name);
        }
    }
    assert!(stale.is_empty(), "output differs for {stale:?}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["fueter", "--alpha", "2", "--n", "3"]), Some(0));
    // singular curve
    assert_eq!(code(&["divpoly", "--alpha", "8", "--n", "3"]), Some(1));
    assert_eq!(code(&["reduce", "--alpha", "3", "--prime", "2"]), Some(1));
    // usage errors
    assert_eq!(code(&["scan", "--min", "1"]), Some(2));
    assert_eq!(code(&["reduce", "--alpha", "2", "--prime", "6"]), Some(2));
    assert_eq!(code(&["fueter", "--alpha", "4", "--beta", "2", "--n", "3"]), Some(2));
    assert_eq!(code(&["survey", "--family", "Z", "--s", "0", "--t", "0"]), Some(2));
    // budget: a zero budget cannot factor alpha -+ 8 for a 40-digit alpha
    let big = "-1000000000000000000000000000000000000000";
    let alpha = format!("{big}7");
    assert_eq!(code(&["certify", "--alpha", &alpha, "--budget-ms", "0"]), Some(3));
}

#[test]
fn scan_does_not_depend_on_jobs() {
    let run = |jobs: &str| {
        bin()
            .args(["scan", "--min", "-60", "--max", "60", "--json", "--jobs", jobs])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
