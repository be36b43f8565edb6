use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = stpairs::cli::run(std::iter::once("stpairs").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn bin(args: &[&str]) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_stpairs")).args(args).output().unwrap();
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

#[test]
fn binary_matches_library() {
    for args in [
        &["st-table", "--max-n", "12", "--format", "csv"][..],
        &["crank-table", "--max-n", "7", "--format", "json"],
        &["enumerate", "--max-n", "4"],
        &["--list", "--format", "csv"],
    ] {
        assert_eq!(bin(args), run(args), "{args:?}");
    }
}

#[test]
fn st_table_values() {
    let (code, out, err) = bin(&["st-table", "--max-n", "8", "--format", "json"]);
    assert_eq!((code, err.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&out).unwrap();
    let counts: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["sT"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 3, 5, 10, 15, 26, 38, 60]);
}

#[test]
fn csv_schemas() {
    let header = |args: &[&str]| run(args).1.lines().next().unwrap().to_string();
    assert_eq!(header(&["st-table", "--format", "csv"]), "n,sT");
    assert_eq!(header(&["crank-table", "--format", "csv"]), "n,m,C");
    assert_eq!(header(&["crank-table", "--modulus", "5", "--format", "csv"]), "n,k,C");
    assert_eq!(header(&["enumerate", "--format", "csv"]), "n,pi1,pi2,paircrank");
    assert_eq!(
        header(&["verify", "--identity", "misc_prop_1", "--order", "20", "--format", "csv"]),
        "name,order,passed,first_bad_exponent"
    );
}

#[test]
fn enumerate_lists_fifteen_pairs_of_five() {
    let (_, out, _) = run(&["enumerate", "--max-n", "5", "--format", "csv"]);
    let fives: Vec<&str> = out.lines().filter(|l| l.starts_with("5,")).collect();
    assert_eq!(fives.len(), 15);
    assert!(fives.contains(&"5,2,3,-1"));
}

#[test]
fn same_seed_same_bytes() {
    let args = ["verify-all", "--order", "40", "--seed", "11", "--format", "json"];
    let (a, b) = (bin(&args), bin(&args));
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    let seq = bin(&["verify-all", "--order", "40", "--seed", "11", "--format", "json", "--sequential"]);
    assert_eq!(a, seq);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    let s4 = v.as_array().unwrap().iter().find(|r| r["name"] == "chan_lemma_s4").unwrap();
    assert_eq!(s4["seed"], 11);
}

#[test]
fn verify_text_and_exit_codes() {
    let (code, out, _) = run(&["verify", "--identity", "thm1_congruences", "--order", "50"]);
    assert_eq!(code, 0);
    assert_eq!(out, "PASS thm1_congruences order=50\n");
    let (code, out, _) = run(&["verify-all", "--order", "30"]);
    assert_eq!(code, 0);
    assert!(out.ends_with(&format!("{n}/{n} passed\n", n = stpairs::identities::list_checks().len())));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &[][..],
        &["verify", "--identity", "no_such_identity"],
        &["verify", "--identity", "thm3_component_B4", "--order", "3"],
        &["enumerate", "--max-n", "30"],
        &["crank-table", "--modulus", "0"],
        &["st-table", "--format", "xml"],
        &["frobnicate"],
    ] {
        let (code, out, err) = bin(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn list_names_every_check() {
    let (code, out, _) = run(&["--list", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), stpairs::identities::list_checks().len());
    assert!(rows.iter().all(|r| r["routes"].as_array().unwrap().len() == 2));
    assert!(rows.iter().any(|r| r["name"] == "thm2_dissection"));
}
