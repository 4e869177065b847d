//! End-to-end tests of the `thuim` binary: flag handling, output formats,
//! exit codes, and the generate subcommand.

use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const SAMPLE: &str = "\
4 5 6:49:10 15 24
1 2 4 6:88:9 40 35 4
1 2 5 6:54:15 15 12 12
1 2 3 4 6:71:12 30 1 20 8
2 4 5 6 7:91:25 15 21 24 6
1 2 4 6 7:75:24 35 10 4 2
1 2 3 5 6 7:49:3 5 6 15 16 4
";

fn thuim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thuim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_sample(dir: &TempDir) -> PathBuf {
    let path = dir.path().join("sample.txt");
    std::fs::write(&path, SAMPLE).unwrap();
    path
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn mines_known_answers() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    let out = thuim(&[
        "--input",
        input.to_str().unwrap(),
        "--min-util",
        "130",
        "--target",
        "5,6",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    assert_eq!(stdout_of(&out), "2 5 6 #UTIL: 145\n5 6 #UTIL: 139\n");
}

#[test]
fn json_stats_carry_the_documented_keys() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    let out = thuim(&[
        "--input",
        input.to_str().unwrap(),
        "--min-util",
        "130",
        "--target",
        "5,6",
        "--stats",
        "json",
    ]);
    assert!(out.status.success());
    let stats: serde_json::Value = serde_json::from_str(stderr_of(&out).trim()).unwrap();
    let object = stats.as_object().unwrap();
    let mut keys: Vec<&str> = object.keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        vec![
            "candidates",
            "min_util",
            "order",
            "peak_elements",
            "runtime_ms",
            "target",
            "thuis"
        ]
    );
    assert_eq!(stats["candidates"], 22);
    assert_eq!(stats["thuis"], 2);
    assert_eq!(stats["peak_elements"], 48);
    assert_eq!(stats["min_util"], 130);
    assert_eq!(stats["order"], "twu-asc");
    assert_eq!(stats["target"], serde_json::json!([5, 6]));
    assert!(stats["runtime_ms"].is_u64());
}

#[test]
fn percent_threshold_matches_absolute() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    // Total utility is 477; 27.25% of it rounds to 130.
    let absolute = thuim(&[
        "--input",
        input.to_str().unwrap(),
        "--min-util",
        "130",
        "--target",
        "5,6",
    ]);
    let percent = thuim(&[
        "--input",
        input.to_str().unwrap(),
        "--min-util-percent",
        "27.25",
        "--target",
        "5,6",
    ]);
    assert!(percent.status.success());
    assert_eq!(stdout_of(&absolute), stdout_of(&percent));
}

#[test]
fn orders_produce_identical_bytes() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    for (min_util, target) in [("130", "5,6"), ("50", "3,6"), ("130", "")] {
        let mut outputs = Vec::new();
        for order in ["twu-asc", "lexi", "twu-desc"] {
            let out = thuim(&[
                "--input",
                input.to_str().unwrap(),
                "--min-util",
                min_util,
                "--target",
                target,
                "--order",
                order,
            ]);
            assert!(out.status.success());
            outputs.push(stdout_of(&out));
        }
        assert_eq!(outputs[0], outputs[1], "min-util {min_util}");
        assert_eq!(outputs[0], outputs[2], "min-util {min_util}");
    }
}

#[test]
fn all_modes_agree_on_results() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    let mut outputs = Vec::new();
    for mode in ["mine", "filter-baseline", "brute-force", "verify"] {
        let out = thuim(&[
            "--input",
            input.to_str().unwrap(),
            "--min-util",
            "50",
            "--target",
            "3,6",
            "--mode",
            mode,
        ]);
        assert!(out.status.success(), "mode {mode}: {}", stderr_of(&out));
        outputs.push(stdout_of(&out));
    }
    assert!(outputs.iter().all(|o| o == &outputs[0]));
    assert!(!outputs[0].is_empty());
}

#[test]
fn verify_mode_reports_agreement() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    let out = thuim(&[
        "--input",
        input.to_str().unwrap(),
        "--min-util",
        "130",
        "--mode",
        "verify",
    ]);
    assert!(out.status.success());
    let err = stderr_of(&out);
    assert!(
        err.contains("verify: ok") && err.contains("brute-force"),
        "stderr: {err}"
    );
}

#[test]
fn output_flag_writes_the_file_and_keeps_stdout_quiet() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    let result = dir.path().join("results.txt");
    let out = thuim(&[
        "--input",
        input.to_str().unwrap(),
        "--min-util",
        "130",
        "--target",
        "5,6",
        "--output",
        result.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "");
    assert_eq!(
        std::fs::read_to_string(&result).unwrap(),
        "2 5 6 #UTIL: 145\n5 6 #UTIL: 139\n"
    );
}

#[test]
fn bad_invocations_exit_with_2() {
    let dir = TempDir::new().unwrap();
    let input = write_sample(&dir);
    let input = input.to_str().unwrap();
    let missing = dir.path().join("missing.txt");
    let malformed = dir.path().join("malformed.txt");
    std::fs::write(&malformed, "1 2:10:3 3\n").unwrap();

    let cases: Vec<Vec<&str>> = vec![
        // No input file.
        vec!["--min-util", "10"],
        // No threshold.
        vec!["--input", input],
        // Both thresholds.
        vec!["--input", input, "--min-util", "1", "--min-util-percent", "1"],
        // Percent out of range.
        vec!["--input", input, "--min-util-percent", "150"],
        // Unparseable target.
        vec!["--input", input, "--min-util", "10", "--target", "5,x"],
        // Unknown order.
        vec!["--input", input, "--min-util", "10", "--order", "sideways"],
        // Unreadable file.
        vec!["--input", missing.to_str().unwrap(), "--min-util", "10"],
        // Declared transaction utility off by four.
        vec!["--input", malformed.to_str().unwrap(), "--min-util", "10"],
    ];
    for args in cases {
        let out = thuim(&args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "args {args:?}; stderr: {}",
            stderr_of(&out)
        );
    }
}

#[test]
fn malformed_input_names_the_line() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "1 2:9:3 6\n1 1:2:1 1\n").unwrap();
    let out = thuim(&["--input", path.to_str().unwrap(), "--min-util", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn brute_force_mode_refuses_wide_databases() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("wide.txt");
    let lines: String = (1..=21).map(|i| format!("{i}:1:1\n")).collect();
    std::fs::write(&path, lines).unwrap();
    let out = thuim(&[
        "--input",
        path.to_str().unwrap(),
        "--min-util",
        "1",
        "--mode",
        "brute-force",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("21"), "names the item count");
}

#[test]
fn generate_is_deterministic_and_parseable() {
    let args = [
        "generate",
        "--items",
        "40",
        "--transactions",
        "200",
        "--avg-len",
        "4.0",
        "--max-len",
        "12",
        "--seed",
        "7",
    ];
    let first = thuim(&args);
    let second = thuim(&args);
    assert!(first.status.success());
    assert_eq!(stdout_of(&first), stdout_of(&second));
    assert_eq!(stdout_of(&first).lines().count(), 200);

    // The generated text must itself be mineable: feed it back in.
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("gen.txt");
    std::fs::write(&path, stdout_of(&first)).unwrap();
    let mined = thuim(&[
        "--input",
        path.to_str().unwrap(),
        "--min-util-percent",
        "2",
        "--mode",
        "verify",
    ]);
    assert!(mined.status.success(), "stderr: {}", stderr_of(&mined));
}

#[test]
fn generate_rejects_inconsistent_parameters() {
    let out = thuim(&["generate", "--items", "5", "--max-len", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("max_len"));
}

#[test]
fn generate_writes_output_files() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("db.txt");
    let out = thuim(&[
        "generate",
        "--items",
        "30",
        "--transactions",
        "50",
        "--avg-len",
        "3.0",
        "--max-len",
        "10",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "");
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 50);
    assert!(stderr_of(&out).contains("generated 50 transaction(s)"));
}
