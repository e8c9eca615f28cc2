use std::process::{Command, Output};

use serde_json::Value;

fn recurlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recurlab"))
        .args(args)
        .env_remove("RECURLAB_GEOM_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = recurlab(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is one JSON object");
    (out.status.code().unwrap(), v)
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| recurlab(args).status.code().unwrap();
    assert_eq!(code(&["table", "--seq", "1,2,4,8,16,31"]), 0);
    assert_eq!(code(&["table", "--seq", "1,2,oops"]), 2);
    assert_eq!(code(&["solve", "--seq", "1,1,2,3,5,8"]), 3);
    assert_eq!(code(&["regions", "--m", "0"]), 2);
    assert_eq!(code(&["regions", "--m", "7", "--degenerate", "hexagon"]), 2);
    assert_eq!(code(&["verify", "--max-m", "1"]), 0);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn hexagon_with_all_methods_disagrees() {
    let (code, v) = json(&[
        "regions",
        "--m",
        "6",
        "--method",
        "all",
        "--degenerate",
        "hexagon",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["agreement"], false);
    assert_eq!(v["result"]["counts"]["binomial"], 31);
    assert_eq!(v["result"]["counts"]["geometric"][0], 30);
}

#[test]
fn human_and_json_report_the_same_numbers() {
    let text =
        String::from_utf8(recurlab(&["regions", "--m", "9", "--trials", "2"]).stdout).unwrap();
    let (_, v) = json(&["regions", "--m", "9", "--trials", "2"]);
    assert!(text.contains("binomial: 163"));
    assert_eq!(v["result"]["counts"]["binomial"], 163);
    assert!(text.contains("geometric[1]: 163"));
    assert_eq!(v["result"]["counts"]["geometric"][1], 163);

    let text = String::from_utf8(recurlab(&["table", "--moser", "7"]).stdout).unwrap();
    let (_, v) = json(&["table", "--moser", "7"]);
    assert!(text.contains("next: 99"));
    assert_eq!(v["result"]["next"], "99/1");
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        &["--json", "solve", "--moser", "8"][..],
        &["--json", "regions", "--m", "10", "--trials", "2"][..],
        &["--json", "verify", "--max-m", "9"][..],
        &[
            "--json",
            "--seed",
            "7",
            "regions",
            "--m",
            "8",
            "--method",
            "geometric",
        ][..],
    ] {
        assert_eq!(recurlab(args).stdout, recurlab(args).stdout, "{args:?}");
    }
}

#[test]
fn envelope_fields() {
    let (_, v) = json(&["solve", "--moser"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "solve");
    assert_eq!(v["method_tags"], serde_json::json!(["charpoly", "genfunc"]));
    assert_eq!(v["agreement"], true);
    let poly = &v["result"]["moser_variable"]["terms"][0]["polynomial"];
    assert_eq!(
        poly,
        &serde_json::json!(["1/1", "-3/4", "23/24", "-1/4", "1/24"])
    );
    assert_eq!(v["inputs"]["sequence"]["terms"][5], "31/1");
}

#[test]
fn sequence_from_file() {
    let dir = std::env::temp_dir().join(format!("recurlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.txt");
    std::fs::write(&path, "# squares\n0\n1\n4\n9\n16\n").unwrap();
    let (code, v) = json(&["table", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["next"], "25/1");
    let (code, _) = json(&["table", "--file", dir.join("missing").to_str().unwrap()]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn geom_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_recurlab"))
        .args(["regions", "--m", "5", "--method", "geometric"])
        .env("RECURLAB_GEOM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rational_sequences() {
    let (code, v) = json(&["solve", "--seq", "1/2,1,3/2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["closed_forms"]["genfunc"]["text"], "(n + 1)/2");
}
