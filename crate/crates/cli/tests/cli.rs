use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use uhlenbeck::bvariety::BTriple;
use uhlenbeck::calogero::CmPair;
use uhlenbeck::quiver::{monad_of_point, DimVector, QuiverRep};
use uhlenbeck::{rat, Partition};

fn uhl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uhl"))
        .args(args)
        .env_remove("UHL_SEED")
        .output()
        .expect("binary runs")
}

fn envelope(args: &[&str]) -> (i32, Value) {
    let out = uhl(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

#[test]
fn stalk_example() {
    let (code, v) = envelope(&["ic", "stalk", "--n", "3", "--m", "0", "--lambda", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["poly"], "q^2+q^4+q^6");
    let (_, v) = envelope(&["ic", "stalk", "--n", "4", "--m", "1", "--lambda", "2,1"]);
    assert_eq!(v["payload"], serde_json::json!({ "poly": "q^6+q^8", "total": 2 }));
    assert_eq!(v["meta"]["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn wrong_level_is_a_domain_error() {
    let (code, v) = envelope(&["ic", "stalk", "--n", "5", "--m", "0", "--lambda", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
    assert!(v["payload"]["error"].is_string());
}

#[test]
fn alpha_example() {
    let (code, v) = envelope(&["quiver", "alpha", "--r", "1", "--d", "0", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"], serde_json::json!([2, 5, 2]));
    let dim: DimVector = serde_json::from_value(v["payload"].clone()).unwrap();
    assert_eq!(dim, DimVector::new(2, 5, 2));
}

#[test]
fn zero_pair_is_rejected_with_ranks() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.json");
    let zero = r#"{"rows":2,"cols":2,"entries":[["0","0"],["0","0"]]}"#;
    fs::write(&path, format!(r#"{{"X":{zero},"Y":{zero},"tau":"1"}}"#)).unwrap();
    let (code, v) = envelope(&["cm", "verify", "--pair", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
    assert_eq!(v["payload"]["rank_minus_tau"], 2);
    assert_eq!(v["payload"]["rank_plus_tau"], 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(uhl(&["bogus"]).status.code(), Some(2));
    assert_eq!(uhl(&["ic", "stalk", "--n", "x"]).status.code(), Some(2));
    assert_eq!(uhl(&["quiver", "alpha", "--r", "1", "--d", "0", "--n", "2", "--csv"]).status.code(), Some(2));
    assert_eq!(uhl(&["cm", "sample"]).status.code(), Some(2));
}

#[test]
fn sampled_pair_round_trips_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = envelope(&["cm", "sample", "--spectrum", "0,1,-3/2", "--tau", "2/3"]);
    assert_eq!(code, 0);
    assert_eq!(v["meta"]["tau"], "2/3");
    let pair: CmPair = serde_json::from_value(v["payload"].clone()).unwrap();
    assert!(pair.verify().unwrap().is_member());
    let path = dir.path().join("pair.json");
    fs::write(&path, v["payload"].to_string()).unwrap();
    let (code, v) = envelope(&["cm", "verify", "--pair", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["signs"], serde_json::json!(["plus"]));
}

#[test]
fn seeds_make_output_reproducible() {
    let a = uhl(&["cm", "sample", "--n", "4", "--seed", "9"]).stdout;
    let b = uhl(&["cm", "sample", "--n", "4", "--seed", "9"]).stdout;
    assert_eq!(a, b);
    let from_env = Command::new(env!("CARGO_BIN_EXE_uhl"))
        .args(["cm", "sample", "--n", "4"])
        .env("UHL_SEED", "9")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, from_env);
    let other = uhl(&["cm", "sample", "--n", "4", "--seed", "10"]).stdout;
    assert_ne!(a, other);
}

#[test]
fn jordan_triple_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let (_, v) = envelope(&["bvar", "jordan", "--k", "3", "--u", "-1/2", "--tau", "3/7"]);
    let t: BTriple = serde_json::from_value(v["payload"].clone()).unwrap();
    assert!(t.check().unwrap().is_valid());
    let path = dir.path().join("triple.json");
    fs::write(&path, v["payload"].to_string()).unwrap();
    let (code, v) = envelope(&["bvar", "check", "--triple", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["span"], 3);
}

#[test]
fn component_table() {
    let out = uhl(&["bvar", "components", "--k", "3", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,orbit_dim,solution_dim,centralizer_formula,total");
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.ends_with(",3")));
}

#[test]
fn fiber_of_a_single_block() {
    let (code, v) = envelope(&["bvar", "fiber", "--lambda", "2,1", "--u", "1", "--tau", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["fiber_dim"], 1);
    assert_eq!(v["payload"]["bound"], 2);
}

#[test]
fn monad_checks_and_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let rep = monad_of_point(&rat(1, 1), &rat(2, 1), &rat(1, 2)).unwrap();
    let path = dir.path().join("rep.json");
    fs::write(&path, serde_json::to_string(&rep).unwrap()).unwrap();
    let p = path.to_str().unwrap();
    let (code, v) = envelope(&["quiver", "check", "--rep", p]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["holds"], true);
    let (code, v) = envelope(&["quiver", "stability", "--theta0", "-1,0,1", "--rep", p]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["verdict"], "stable");
    assert_eq!(v["payload"]["method"], "exact");

    let zero = QuiverRep::zero(DimVector::new(1, 2, 1), rat(1, 1));
    fs::write(&path, serde_json::to_string(&zero).unwrap()).unwrap();
    let (_, v) = envelope(&["quiver", "stability", "--theta0", "-1,0,1", "--rep", p]);
    assert_eq!(v["payload"]["verdict"], "unstable");
    assert_eq!(v["payload"]["witness"]["dim"], serde_json::json!([1, 0, 0]));
}

#[test]
fn normal_form_symbolic_and_specialized() {
    let (_, v) = envelope(&["nc", "normal-form", "--tau", "t", "--word", "yx"]);
    let terms = v["payload"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert!(terms.iter().any(|t| t["mono"] == "x^0 y^0 z^2" && t["coeff"] == "-t"));
    let (_, v) = envelope(&["nc", "normal-form", "--tau", "0", "--word", "yx"]);
    assert_eq!(
        v["payload"]["terms"],
        serde_json::json!([{ "mono": "x^1 y^1 z^0", "coeff": "1" }])
    );
    let (_, v) = envelope(&["nc", "dims", "--max-degree", "4", "--tau", "-2"]);
    let dims: Vec<u64> = v["payload"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 3, 6, 10, 15]);
    assert_eq!(v["payload"]["confluent"], true);
}

#[test]
fn ic_tables() {
    let (_, v) = envelope(&["ic", "betti", "--n", "4"]);
    assert_eq!(v["payload"]["betti"], serde_json::json!([1, 2, 1, 1]));
    let (_, v) = envelope(&["ic", "strata", "--n", "2"]);
    assert_eq!(v["payload"].as_array().unwrap().len(), 4);
    let lambda: Partition = serde_json::from_value(v["payload"][0]["lambda"].clone()).unwrap();
    assert!(lambda.is_empty());
    let (_, v) = envelope(&["ic", "fixed-points", "--n", "2"]);
    assert_eq!(v["payload"]["count"], 7);
    let (code, v) = envelope(&["ic", "audit", "--n", "6"]);
    assert_eq!(code, 0);
    assert!(v["payload"].as_array().unwrap().iter().all(|r| r["small"] == true));
}

#[test]
fn report_writes_tables() {
    let dir = tempfile::tempdir().unwrap();
    for (n, rows) in [(0, 1), (1, 2), (3, 7)] {
        let out = dir.path().join(format!("n{n}"));
        let (code, _) = envelope(&["report", "--n", &n.to_string(), "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        let strata = fs::read_to_string(out.join("strata.csv")).unwrap();
        assert_eq!(strata.lines().count(), rows + 1, "n={n}");
        if n == 3 {
            assert!(strata.lines().any(|l| l.starts_with("0,(3),") && l.contains("q^2+q^4+q^6")));
        }
        assert!(out.join("betti.csv").exists() && out.join("fixed_points.csv").exists());
    }
    let (code, _) = envelope(&["report", "--n", "21", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 1);
}
