//! End-to-end checks of the binary: exit codes, output schemas, determinism,
//! and cross-format agreement.

use std::process::{Command, Output};

use ssprimes::report::CSV_HEADER;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssprimes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn verify_csv_at_one_hundred() {
    let out = run(&["verify", "--max-prime", "100", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 26, "header plus one row per prime <= 100");
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(
        lines[1],
        "2,true,true,true,true,true,true,0,2,0,0,1,1,Unirational"
    );
    let in_s = lines[1..]
        .iter()
        .filter(|l| l.split(',').nth(6) == Some("true"))
        .count();
    assert_eq!(in_s, 15);
    // stdout stays machine-parseable; the human summary goes to stderr.
    assert!(stderr(&out).contains("checked 25 primes"));
}

#[test]
fn verify_bound_below_range_is_a_usage_error() {
    let out = run(&["verify", "--max-prime", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_bound_above_range_is_a_usage_error() {
    let out = run(&["verify", "--max-prime", "1000001"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn composite_argument_reports_a_factor() {
    let out = run(&["genus", "91"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("91 is not prime"), "stderr was: {err}");
    assert!(err.contains("divisible by 7"), "stderr was: {err}");
}

#[test]
fn json_output_is_byte_deterministic() {
    let a = run(&["verify", "--max-prime", "71", "--format", "json"]);
    let b = run(&["verify", "--max-prime", "71", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_zero_set_at_seventy_one_is_s() {
    let out = run(&["verify", "--max-prime", "71", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["meta"]["bound"], 71);
    let zero_set: Vec<u64> = doc["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| {
            ["c1_monster", "c2_genus_plus_zero", "c3_ss_rational", "c4_jacobi_zero"]
                .iter()
                .all(|k| r[k] == true)
        })
        .map(|r| r["p"].as_u64().unwrap())
        .collect();
    assert_eq!(
        zero_set,
        vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71]
    );
}

#[test]
fn csv_and_json_agree_field_for_field() {
    let csv = run(&["verify", "--max-prime", "100", "--format", "csv"]);
    let json = run(&["verify", "--max-prime", "100", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let records = doc["records"].as_array().unwrap();
    let text = stdout(&csv);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), records.len());
    for (row, rec) in rows.iter().zip(records) {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!(f[0], rec["p"].to_string());
        assert_eq!(f[1], rec["c1_monster"].to_string());
        assert_eq!(f[2], rec["c2_genus_plus_zero"].to_string());
        assert_eq!(f[3], rec["c3_ss_rational"].to_string());
        assert_eq!(f[4], rec["c4_jacobi_zero"].to_string());
        assert_eq!(f[5], rec["consistent"].to_string());
        assert_eq!(f[6], rec["in_S"].to_string());
        assert_eq!(f[7], rec["genus"]["genus_x0"].to_string());
        assert_eq!(f[8], rec["genus"]["fricke_fixed_points"].to_string());
        assert_eq!(f[9], rec["genus"]["genus_plus"].to_string());
        assert_eq!(f[10], rec["jacobi"]["jacobi_dim"].to_string());
        assert_eq!(f[11], rec["supersingular"]["ss_expected"].to_string());
        assert_eq!(f[12], rec["supersingular"]["ss_in_fp"].to_string());
        assert_eq!(f[13], rec["kodaira"].as_str().unwrap());
    }
}

#[test]
fn genus_detail_csv() {
    let out = run(&["genus", "37", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "p,index_mu,nu2,nu3,nu_inf,genus_x0,fricke_fixed_points,genus_plus,dim_weight2_plus",
            "37,38,2,2,2,2,2,1,1",
        ]
    );
}

#[test]
fn jacobi_terms_csv_shape() {
    let out = run(&["jacobi", "11", "--terms", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,j,term");
    assert_eq!(lines.len(), 12, "one term row per 1 <= j <= 11");
    let total: i64 = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap().parse::<i64>().unwrap())
        .sum();
    assert_eq!(total, 0, "p = 11 lies in the zero set");
}

#[test]
fn jacobi_without_terms_is_a_single_row() {
    let out = run(&["jacobi", "37", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().collect::<Vec<_>>(), vec!["p,jacobi_dim", "37,1"]);
}

#[test]
fn supersingular_list_json() {
    let out = run(&["supersingular", "13", "--list", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["p"], 13);
    assert_eq!(doc["ss_expected"], 1);
    assert_eq!(doc["ss_in_fp"], 1);
    assert_eq!(doc["all_rational"], true);
    assert_eq!(doc["found_in_fp"], serde_json::json!([5]));
}

#[test]
fn supersingular_without_list_omits_the_values() {
    let out = run(&["supersingular", "13", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.get("found_in_fp").is_none());
}

#[test]
fn conditions_row_matches_verify_row() {
    let cond = run(&["conditions", "71", "--format", "csv"]);
    assert_eq!(cond.status.code(), Some(0));
    let cond_text = stdout(&cond);
    let cond_row = cond_text.lines().nth(1).unwrap();
    let verify = run(&["verify", "--max-prime", "71", "--format", "csv"]);
    let verify_text = stdout(&verify);
    let verify_row = verify_text
        .lines()
        .find(|l| l.starts_with("71,"))
        .unwrap();
    assert_eq!(cond_row, verify_row);
}

#[test]
fn monster_check_succeeds() {
    let out = run(&["monster-check", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["num_digits"], 54);
    assert_eq!(doc["factorization"][0]["prime"], 2);
    assert_eq!(doc["factorization"][0]["exponent"], 46);
}

#[test]
fn closed_pipe_does_not_panic() {
    use std::process::Stdio;
    // ~13 MB of term rows, far beyond any pipe buffer; dropping the read
    // end forces EPIPE mid-write.
    let mut child = Command::new(env!("CARGO_BIN_EXE_ssprimes"))
        .args(["jacobi", "999983", "--terms", "--format", "csv"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    drop(child.stdout.take());
    let out = child.wait_with_output().expect("child exits");
    assert_eq!(out.status.code(), Some(0));
    assert!(!stderr(&out).contains("panicked"), "stderr: {}", stderr(&out));
}

#[test]
fn table_format_prints_summary_and_note() {
    let out = run(&["verify", "--max-prime", "31"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("kodaira"));
    assert!(text.contains("checked 11 primes <= 31"));
    assert!(text.contains("Composite degrees"));
}
