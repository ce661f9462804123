use std::process::Command;

use qschur::schur::AlgebraJson;
use qschur::udot::MonomialJson;
use qschur::{AlgebraElem, GenWord, LaurentPoly, PeriodicMatrix, PeriodicVec, RationalFunc, Weight};
use qschur_cli::commands::cmd_canon;
use qschur_cli::Config;

fn qschur(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qschur")).args(args).env_remove("QSCHUR_CACHE").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn round_trips() {
    let m = PeriodicMatrix::from_entries(3, &[1, 0, 2], &[(1, 3, 1), (3, 2, 2), (2, 5, 1)]);
    assert_eq!(m.to_string().parse::<PeriodicMatrix>().unwrap(), m);
    assert_eq!(serde_json::from_str::<PeriodicMatrix>(&serde_json::to_string(&m).unwrap()).unwrap(), m);
    let w: GenWord = "E1^(2) F3 K(1,-1,0) E2".parse().unwrap();
    assert_eq!(w.to_string().parse::<GenWord>().unwrap(), w);
    let lam = Weight::new(vec![2, 0, 1]).unwrap();
    let j = MonomialJson::from_parts(&w, &lam);
    let back: MonomialJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
    assert_eq!(back.to_parts().unwrap(), (w.clone(), lam));
    let p = LaurentPoly::from_ints([(3, 2), (-1, -5), (-4, 1)]);
    assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    let f = RationalFunc::new(p.clone(), LaurentPoly::from_ints([(0, 1), (-2, -1)])).unwrap();
    assert_eq!(f.to_string().parse::<RationalFunc>().unwrap(), f);
    let x = AlgebraElem::idempotent(&PeriodicVec(vec![1, 1, 1]), 3).unwrap().apply_word(&"E1 F2 E3".parse().unwrap()).unwrap();
    let jx: AlgebraJson = serde_json::from_str(&serde_json::to_string(&x.to_json()).unwrap()).unwrap();
    assert_eq!(AlgebraElem::from_json(&jx).unwrap(), x);
}

#[test]
fn warm_cache_gives_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = Config { cache_dir: Some(dir.path().to_path_buf()), ..Config::default() };
    let a: PeriodicMatrix = "diag(1,0) + 1*E^{1,2} + 1*E^{1,3} + 1*E^{2,1}".parse().unwrap();
    let cold = serde_json::to_string(&cmd_canon(&a, &cfg, true).unwrap()).unwrap();
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 1);
    let warm = serde_json::to_string(&cmd_canon(&a, &cfg, true).unwrap()).unwrap();
    assert_eq!(cold, warm);
    let uncached = serde_json::to_string(&cmd_canon(&a, &Config::default(), true).unwrap()).unwrap();
    assert_eq!(cold, uncached);
}

#[test]
fn mult_and_limits() {
    let (code, out, _) = qschur(&["mult", "-w", "E1", "-a", "0,1"]);
    assert_eq!(code, 0);
    let j: AlgebraJson = serde_json::from_str(&out).unwrap();
    assert_eq!(j.terms.len(), 1);
    assert_eq!(j.terms[0].matrix, PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1)]));
    let (code, out, _) = qschur(&["inner-limit", "-x", "F1", "-y", "F1", "--x-weight", "2,0", "--y-weight", "2,0", "--order", "5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["series"], serde_json::json!(["1", "0", "1", "0", "1", "0"]));
    let (code, out, _) = qschur(&["inner", "-x", "F1", "-y", "F1", "--x-weight", "2,0", "--y-weight", "2,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("1*v^0 + 1*v^-2"), "{out}");
}

#[test]
fn canon_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("b.json");
    std::fs::write(&file, r#"{"n":2,"diag":[0,1],"offdiag":[[1,2,1]]}"#).unwrap();
    let (code, out, _) = qschur(&["canon", "--n", "2", "--D", "2", "-A", file.to_str().unwrap(), "--stable"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["presentation"], serde_json::json!([["E1 E2", "1*v^0"]]));
    let terms = v["expansion"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    let a_per = terms.iter().find(|t| t["text"] == "diag(0,0) + 1*E^{1,2} + 1*E^{2,3}").unwrap();
    assert_eq!(a_per["coeff"], "1*v^-1");
    let (code, out, _) = qschur(&["oracle", "count", "--n", "2", "--D", "2", "--q", "2", "-A", "diag(2,0)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(qschur(&["mult", "-w", "E1 X2", "-a", "0,1"]).0, 2);
    assert_eq!(qschur(&["verify", "A12"]).0, 2);
    assert_eq!(qschur(&["frobnicate"]).0, 2);
    // A_per is periodic: no canonical element is constructed for it
    assert_eq!(qschur(&["canon", "--n", "2", "--D", "2", "-A", "diag(0,0) + 1*E^{1,2} + 1*E^{2,3}"]).0, 2);
    assert_eq!(qschur(&["canon", "--n", "3", "--D", "2", "-A", "diag(0,1) + 1*E^{1,3}"]).0, 2);
    let big = "diag(1,1) + 1*E^{1,2} + 1*E^{2,4}";
    assert_eq!(qschur(&["oracle", "count", "--n", "2", "--D", "4", "--q", "3", "-A", big, "--budget", "2"]).0, 3);
    let (code, out, _) = qschur(&["verify", "A1", "--seed", "11"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("A1 PASS"), "{out}");
}
