//! End-to-end tests that drive the compiled `folded-codes` binary the way a
//! user would: real argv, real files on disk, and assertions on stdout,
//! stderr, and exit codes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_folded-codes");

/// Runs the binary with `args` and returns (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN)
        .args(args)
        .output()
        .expect("failed to spawn the CLI binary");
    (
        out.status.code().expect("process was killed by a signal"),
        String::from_utf8(out.stdout).expect("stdout was not UTF-8"),
        String::from_utf8(out.stderr).expect("stderr was not UTF-8"),
    )
}

/// A scratch directory unique to one test, recreated fresh on every run.
fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("folded-codes-cli-{test}"));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).expect("failed to create scratch dir");
    dir
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_str()
        .expect("fixture path was not UTF-8")
        .to_owned()
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

#[test]
fn binary_long_construct_then_classify() {
    let dir = scratch("binary_long_construct_then_classify");
    let code = dir.join("c.json");
    let code = code.to_str().unwrap();

    let (status, stdout, stderr) = run(&["construct", "binary-long", "--r", "2", "--out", code]);
    assert_eq!(status, 0, "construct failed: {stderr}");
    assert!(stdout.contains("[7,2,3]"), "summary line: {stdout}");
    assert!(Path::new(code).exists(), "output file was not written");

    let (status, stdout, stderr) = run(&["classify", "--in", code]);
    assert_eq!(status, 0, "classify failed: {stderr}");
    assert_eq!(first_line(&stdout), "dually-QMDS [7,2,3,6]");
    assert!(stdout.contains("d_perp = 2"), "dual distance line: {stdout}");
}

#[test]
fn formula_distribution_from_params() {
    let (status, stdout, stderr) = run(&[
        "wdist",
        "--method",
        "formula",
        "--params",
        "3,3,4,2",
    ]);
    assert_eq!(status, 0, "wdist failed: {stderr}");
    assert_eq!(first_line(&stdout), "A = 1,0,3,12");
}

#[test]
fn formula_distribution_reads_params_from_a_code_file() {
    let dir = scratch("formula_distribution_reads_params_from_a_code_file");
    let code = dir.join("c.json");
    let code = code.to_str().unwrap();

    run(&["construct", "binary-long", "--r", "2", "--out", code]);
    let (status, stdout, _) = run(&["wdist", "--in", code, "--method", "formula"]);
    assert_eq!(status, 0);
    assert_eq!(first_line(&stdout), "A = 1,0,0,0,0,0,7,0");
}

#[test]
fn missing_input_file_is_a_clean_error() {
    let (status, stdout, stderr) = run(&["classify", "--in", "/tmp/definitely-not-here.json"]);
    assert_eq!(status, 1);
    assert!(stdout.is_empty(), "nothing should reach stdout: {stdout}");
    assert!(
        stderr.contains("definitely-not-here.json"),
        "diagnostic should name the file: {stderr}"
    );
    assert!(stderr.starts_with("error:"), "diagnostic prefix: {stderr}");
}

#[test]
fn usage_errors_exit_with_two() {
    let (status, _, _) = run(&["no-such-subcommand"]);
    assert_eq!(status, 2, "unknown subcommand");

    let (status, _, _) = run(&["classify", "--frobnicate"]);
    assert_eq!(status, 2, "unknown flag");

    let (status, _, stderr) = run(&["wdist", "--method", "formula", "--params", "3,3"]);
    assert_eq!(status, 2, "wrong --params arity");
    assert!(stderr.contains("n,r,k,q"), "arity hint: {stderr}");

    let (status, _, _) = run(&["bounds", "--q", "2", "--p", "2", "--r", "2", "--k", "3"]);
    assert_eq!(status, 2, "--q conflicts with --p");

    let (status, _, _) = run(&["bounds", "--e", "2", "--r", "2", "--k", "3"]);
    assert_eq!(status, 2, "--e without --p");

    let (status, _, _) = run(&["bounds", "--r", "2", "--k", "3"]);
    assert_eq!(status, 2, "a field must be chosen");
}

#[test]
fn fixture_codes_classify_to_their_known_labels() {
    let expect = [
        ("qmds_3_3_4.json", "QMDS [3,3,4,2]"),
        ("dually_qmds_7_2_3.json", "dually-QMDS [7,2,3,6]"),
        ("qmds_9_2_13.json", "QMDS [9,2,13,3]"),
        ("dually_qmds_6_2_5.json", "dually-QMDS [6,2,5,4]"),
    ];
    for (name, label) in expect {
        let (status, stdout, stderr) = run(&["classify", "--in", &fixture(name)]);
        assert_eq!(status, 0, "{name}: {stderr}");
        assert_eq!(first_line(&stdout), label, "{name}");
    }
}

#[test]
fn classify_emits_json_on_request() {
    let (status, stdout, _) = run(&[
        "classify",
        "--in",
        &fixture("dually_qmds_7_2_3.json"),
        "--json",
    ]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("stdout was not JSON");
    assert_eq!(v["d"], 6);
    assert_eq!(v["d_perp"], 2);
    assert_eq!(v["class"], "dually-QMDS");
}

#[test]
fn exhaustive_method_and_budget_guard() {
    let (status, stdout, _) = run(&[
        "classify",
        "--in",
        &fixture("qmds_3_3_4.json"),
        "--method",
        "exhaustive",
    ]);
    assert_eq!(status, 0);
    assert_eq!(first_line(&stdout), "QMDS [3,3,4,2]");

    let (status, _, stderr) = run(&[
        "classify",
        "--in",
        &fixture("qmds_9_2_13.json"),
        "--method",
        "exhaustive",
        "--budget",
        "100",
    ]);
    assert_eq!(status, 1, "budget too small for 2^13 words");
    assert!(stderr.contains("budget"), "diagnostic: {stderr}");
}

#[test]
fn restriction_and_shortening_take_one_based_blocks() {
    let dir = scratch("restriction_and_shortening_take_one_based_blocks");
    let code = dir.join("c.json");
    let code = code.to_str().unwrap();
    let restricted = dir.join("r.json");
    let restricted = restricted.to_str().unwrap();
    let shortened = dir.join("s.json");
    let shortened = shortened.to_str().unwrap();

    run(&["construct", "binary-long", "--r", "2", "--out", code]);

    let (status, _, stderr) = run(&[
        "restrict", "--in", code, "--blocks", "1,3,5", "--out", restricted,
    ]);
    assert_eq!(status, 0, "restrict failed: {stderr}");
    let (status, stdout, _) = run(&["classify", "--in", restricted]);
    assert_eq!(status, 0);
    assert_eq!(first_line(&stdout), "dually-QMDS [3,2,3,2]");

    let (status, _, stderr) = run(&[
        "shorten", "--in", code, "--blocks", "1,2,3,4,5,6", "--out", shortened,
    ]);
    assert_eq!(status, 0, "shorten failed: {stderr}");
    let (status, stdout, _) = run(&["classify", "--in", shortened]);
    assert_eq!(status, 0);
    assert_eq!(first_line(&stdout), "dually-QMDS [6,2,1,6]");

    let (status, _, stderr) = run(&["restrict", "--in", code, "--blocks", "0,1"]);
    assert_eq!(status, 2, "block numbers start at 1");
    assert!(stderr.contains("1"), "diagnostic should mention 1-based: {stderr}");
}

#[test]
fn bounds_report_names_values_and_applicability() {
    let (status, stdout, _) = run(&["bounds", "--q", "2", "--r", "2", "--k", "3", "--n", "7", "--json"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("stdout was not JSON");
    assert_eq!(v["q"], 2);
    assert_eq!(v["epsilon"], 1);
    assert_eq!(v["delta"], 1);
    let reports = v["reports"].as_array().expect("reports array");
    let names: Vec<&str> = reports
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["distance", "dual-distance", "length", "binary-length"]);
    let distance = &reports[0];
    assert_eq!(distance["value"], "6");
    assert_eq!(distance["applies"], true);
    assert!(distance["attained_by"].is_string(), "distance bound is sharp here");
    let binary = &reports[3];
    assert_eq!(binary["value"], "7");
    assert_eq!(binary["applies"], true);

    // Without --n the length-dependent hypotheses cannot be settled.
    let (status, stdout, _) = run(&["bounds", "--p", "3", "--r", "2", "--k", "5", "--json"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert!(reports[1]["applies"].is_null(), "dual-distance needs n");
    assert_eq!(reports[3]["applies"], false, "binary bound off the binary field");
}

#[test]
fn density_run_is_seeded_and_reports_exact_rationals() {
    let (status, stdout, _) = run(&[
        "density", "--q", "5", "--n", "2", "--r", "2", "--k", "3",
        "--trials", "100", "--seed", "7", "--json",
    ]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("stdout was not JSON");
    assert_eq!(v["trials"], 100);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["bound_vacuous"], true, "q = 5 is below the guarantee threshold");
    let count = v["dually_count"].as_u64().expect("count");
    assert!(count <= 100);
    let empirical = v["empirical"].as_str().expect("empirical fraction");
    assert_eq!(empirical, format!("{count}/100"));

    // Same seed, same stream: the run is reproducible.
    let (_, again, _) = run(&[
        "density", "--q", "5", "--n", "2", "--r", "2", "--k", "3",
        "--trials", "100", "--seed", "7", "--json",
    ]);
    assert_eq!(stdout, again);
}

#[test]
fn pseudoarc_round_trip_preserves_the_code() {
    let dir = scratch("pseudoarc_round_trip_preserves_the_code");
    let code = dir.join("c.json");
    let code = code.to_str().unwrap();
    let arc = dir.join("arc.json");
    let arc = arc.to_str().unwrap();
    let back = dir.join("back.json");
    let back = back.to_str().unwrap();

    run(&["construct", "binary-long", "--r", "2", "--out", code]);

    let (status, _, stderr) = run(&["pseudoarc", "from-code", "--in", code, "--out", arc]);
    assert_eq!(status, 0, "from-code failed: {stderr}");

    let (status, stdout, _) = run(&["pseudoarc", "params", "--in", arc, "--json"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["n"], 7);
    assert_eq!(v["r"], 2);
    assert_eq!(v["m"], 11);
    assert_eq!(v["t"], 5, "t = d - 1 for the one-weight code");
    assert_eq!(v["nondegenerate"], true);

    let (status, _, stderr) = run(&["pseudoarc", "to-code", "--in", arc, "--out", back]);
    assert_eq!(status, 0, "to-code failed: {stderr}");
    let (status, stdout, _) = run(&["classify", "--in", back]);
    assert_eq!(status, 0);
    assert_eq!(first_line(&stdout), "dually-QMDS [7,2,3,6]");
}

#[test]
fn isometry_apply_preserves_class_and_witness_verifies() {
    let dir = scratch("isometry_apply_preserves_class_and_witness_verifies");
    let code = dir.join("c.json");
    let code = code.to_str().unwrap();
    let iso = dir.join("iso.json");
    let image = dir.join("phi.json");
    let image = image.to_str().unwrap();

    run(&["construct", "binary-long", "--r", "2", "--out", code]);

    // Swap the first two blocks, shear one block, flip another.
    fs::write(
        &iso,
        r#"{
          "field": {"p": 2, "e": 1},
          "r": 2,
          "sigma": [2, 1, 3, 4, 5, 6, 7],
          "blocks": [
            [[1,0],[0,1]],
            [[1,0],[0,1]],
            [[0,1],[1,0]],
            [[1,0],[0,1]],
            [[1,0],[0,1]],
            [[1,1],[0,1]],
            [[1,0],[0,1]]
          ]
        }"#,
    )
    .unwrap();
    let iso = iso.to_str().unwrap();

    let (status, _, stderr) = run(&["isometry", "apply", "--in", code, "--iso", iso, "--out", image]);
    assert_eq!(status, 0, "apply failed: {stderr}");
    let (status, stdout, _) = run(&["classify", "--in", image]);
    assert_eq!(status, 0);
    assert_eq!(first_line(&stdout), "dually-QMDS [7,2,3,6]");

    let (status, stdout, stderr) = run(&["isometry", "dual-witness", "--in", code, "--iso", iso, "--json"]);
    assert_eq!(status, 0, "dual-witness failed: {stderr}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verified"], true);
    let b = v["b"].as_array().expect("witness matrix");
    assert_eq!(b.len(), 11, "witness acts on the 11-dimensional dual side");
}

#[test]
fn subcode_keeps_distance_inside_the_legal_window() {
    let dir = scratch("subcode_keeps_distance_inside_the_legal_window");
    let big = dir.join("big.json");
    let big = big.to_str().unwrap();
    let small = dir.join("small.json");
    let small = small.to_str().unwrap();

    let (status, _, stderr) = run(&[
        "construct", "pi", "--q", "7", "--r", "2", "--n", "3", "--k", "4", "--out", big,
    ]);
    assert_eq!(status, 0, "pi construct failed: {stderr}");

    let (status, _, stderr) = run(&["construct", "subcode", "--in", big, "--k", "3", "--out", small]);
    assert_eq!(status, 0, "subcode failed: {stderr}");
    let (status, stdout, _) = run(&["classify", "--in", small]);
    assert_eq!(status, 0);
    assert!(
        first_line(&stdout).contains("QMDS [3,2,3,2]"),
        "the subcode keeps the distance: {stdout}"
    );

    // Dropping below the window would change the distance guarantee.
    let (status, _, stderr) = run(&["construct", "subcode", "--in", big, "--k", "2"]);
    assert_eq!(status, 1);
    assert!(stderr.contains("window"), "diagnostic: {stderr}");
}

#[test]
fn expansion_needs_a_width_one_input() {
    let dir = scratch("expansion_needs_a_width_one_input");
    let narrow = dir.join("narrow.json");
    let narrow = narrow.to_str().unwrap();
    let wide = dir.join("wide.json");
    let wide = wide.to_str().unwrap();

    let (status, _, stderr) = run(&[
        "construct", "repetition-dual", "--p", "2", "--e", "2", "--r", "1", "--n", "3",
        "--out", narrow,
    ]);
    assert_eq!(status, 0, "repetition-dual failed: {stderr}");

    let (status, _, stderr) = run(&["construct", "expand", "--in", narrow, "--out", wide]);
    assert_eq!(status, 0, "expand failed: {stderr}");
    let (status, stdout, _) = run(&["classify", "--in", wide]);
    assert_eq!(status, 0);
    assert_eq!(first_line(&stdout), "MDS [3,2,4,2]");

    let r2 = fixture("dually_qmds_7_2_3.json");
    let (status, _, stderr) = run(&["construct", "expand", "--in", &r2]);
    assert_eq!(status, 1, "a width-2 code has no symbol-per-block expansion");
    assert!(stderr.contains("width-1"), "diagnostic: {stderr}");
}

#[test]
fn macwilliams_check_and_reconstruction_agree_with_enumeration() {
    let dir = scratch("macwilliams_check_and_reconstruction_agree_with_enumeration");
    let code = dir.join("c.json");
    let code = code.to_str().unwrap();

    run(&["construct", "binary-long", "--r", "2", "--out", code]);

    let (status, stdout, _) = run(&["wdist", "--in", code, "--method", "macwilliams-check"]);
    assert_eq!(status, 0);
    assert!(stdout.contains("identity holds: yes"), "{stdout}");
    assert!(stdout.contains("residuals = 0,0,0,0,0,0,0,0"), "{stdout}");

    let (status, stdout, _) = run(&["wdist", "--in", code, "--method", "reconstruct"]);
    assert_eq!(status, 0);
    assert!(stdout.contains("d = 6, d_perp = 2"), "{stdout}");
    assert!(stdout.contains("A = 1,0,0,0,0,0,7,0"), "{stdout}");

    let (status, stdout, _) = run(&["wdist", "--in", code, "--json"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let counts: Vec<&str> = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(counts, ["1", "0", "0", "0", "0", "0", "7", "0"]);
}

#[test]
fn code_files_written_by_construct_are_self_contained() {
    let dir = scratch("code_files_written_by_construct_are_self_contained");
    let code = dir.join("c.json");

    run(&[
        "construct", "binary-long", "--r", "2", "--out", code.to_str().unwrap(),
    ]);
    let text = fs::read_to_string(&code).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["field"]["p"], 2);
    assert_eq!(v["field"]["e"], 1);
    assert!(v["field"].get("modulus").is_none(), "prime fields carry no modulus");
    assert_eq!(v["n"], 7);
    assert_eq!(v["r"], 2);
    assert_eq!(v["generator"].as_array().unwrap().len(), 3);
}
