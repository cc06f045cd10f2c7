use std::path::PathBuf;

use nefcone::reduction::{DomainReport, Witness};
use nefcone::scalars::rat;
use nefcone_cli::json::{
    AmpleConeReport, BauerReport, DecomposeReport, FundDomainReport, JsonInt, JsonMatrix, PicardReport, ReduceReport,
    SurfaceReport, VerifyReport,
};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

/// parse(emit(x)) = x, and emit(parse(text)) reproduces the golden text.
fn check<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(name: &str) {
    let text = golden(name);
    let parsed: T = serde_json::from_str(&text).unwrap();
    let emitted = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(emitted, text, "{name}");
    assert_eq!(serde_json::from_str::<T>(&emitted).unwrap(), parsed);
}

#[test]
fn golden_reports_round_trip() {
    check::<DecomposeReport>("decompose_mixed.json");
    check::<PicardReport>("picard_cm_e_squared.json");
    check::<AmpleConeReport>("amplecone_mixed.json");
    check::<BauerReport>("bauer_real_mult.json");
    check::<SurfaceReport>("surface_1_1.json");
    check::<SurfaceReport>("surface_1_2.json");
    check::<ReduceReport>("reduce_5_4_5.json");
    check::<FundDomainReport>("funddomain_d2.json");
    check::<VerifyReport>("verify_overlap.json");
}

#[test]
fn large_integers_and_rationals_round_trip() {
    let big: BigInt = BigInt::from(i64::MAX) * 1000 + 7;
    let report = VerifyReport {
        pi: vec![vec![JsonInt(big.clone()), JsonInt((-5).into())]],
        g: JsonMatrix::from_mat2(&[[rat(1, 2), rat(0, 1)], [rat(-3, 4), rat(2, 1)]]),
        report: DomainReport {
            covering_ok: false,
            disjoint_ok: true,
            witnesses: vec![
                Witness::Uncovered { point: [rat(7, 3), rat(-1, 9)], slope: rat(-1, 21), located: Some(13) },
                Witness::Uncovered { point: [rat(1, 1), rat(0, 1)], slope: rat(0, 1), located: None },
                Witness::Overlap { word: -4 },
            ],
            words_used: 12,
        },
    };
    let text = serde_json::to_string(&report).unwrap();
    assert!(text.contains(&format!("\"{big}\"")));
    assert!(text.contains("\"-3/4\""));
    assert_eq!(serde_json::from_str::<VerifyReport>(&text).unwrap(), report);
}
