//! Golden-file cases shared by the golden and acceptance targets.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "decompose_e1_e2.json", args: &["decompose", "--model", "@e1_e2"], exit: 0 },
    Case { name: "decompose_mixed.json", args: &["decompose", "--model", "@mixed"], exit: 0 },
    Case { name: "picard_e1_e2.json", args: &["picard", "--model", "@e1_e2"], exit: 0 },
    Case { name: "picard_e_squared.json", args: &["picard", "--model", "@e_squared"], exit: 0 },
    Case { name: "picard_cm_e_squared.json", args: &["picard", "--model", "@cm_e_squared"], exit: 0 },
    Case { name: "amplecone_real_mult.json", args: &["amplecone", "--model", "@real_mult"], exit: 0 },
    Case { name: "amplecone_mixed.json", args: &["amplecone", "--model", "@mixed"], exit: 0 },
    Case { name: "bauer_e1_e2.json", args: &["bauer", "--model", "@e1_e2"], exit: 0 },
    Case { name: "bauer_real_mult.json", args: &["bauer", "--model", "@real_mult"], exit: 0 },
    Case { name: "surface_1_1.json", args: &["surface", "--a", "1", "--b", "1"], exit: 0 },
    Case { name: "surface_1_2.json", args: &["surface", "--a", "1", "--b", "2"], exit: 0 },
    Case { name: "surface_4_1.json", args: &["surface", "--a", "4", "--b", "1"], exit: 0 },
    Case { name: "reduce_5_4_5.json", args: &["reduce", "--form", "5,4,5"], exit: 0 },
    Case { name: "reduce_1_3_10.json", args: &["reduce", "--form", "1,3,10"], exit: 0 },
    Case { name: "funddomain_d2.json", args: &["funddomain", "--d", "2", "--ray", "1,0"], exit: 0 },
    Case { name: "funddomain_d3.json", args: &["funddomain", "--d", "3", "--ray", "1,0"], exit: 0 },
    Case {
        name: "verify_d2.json",
        args: &["verify", "--pi", "1,0;3,2", "--g", "3,4;2,3", "--a", "1", "--b", "2"],
        exit: 0,
    },
    Case {
        name: "verify_overlap.json",
        args: &["verify", "--pi", "1,0;17,12", "--g", "3,4;2,3", "--a", "1", "--b", "2", "--samples", "50"],
        exit: 1,
    },
    Case { name: "render_d2.svg", args: &["render", "--d", "2", "--ray", "1,0", "--k-range", "3"], exit: 0 },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn expand(arg: &str) -> String {
    match arg.strip_prefix('@') {
        Some(model) => golden_dir().join("models").join(format!("{model}.json")).display().to_string(),
        None => arg.to_string(),
    }
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nefcone")).args(args.iter().map(|a| expand(a))).output().expect("binary runs")
}

/// Names of the cases whose output differs from the stored file.
pub fn golden_mismatches() -> Vec<&'static str> {
    CASES
        .iter()
        .filter(|case| {
            let out = run(case.args);
            let expected = std::fs::read(golden_dir().join(case.name)).unwrap_or_default();
            out.status.code() != Some(case.exit) || out.stdout != expected
        })
        .map(|case| case.name)
        .collect()
}
