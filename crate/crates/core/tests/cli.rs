use std::io::Write;

use kkr_e6::cli::{run, Output, EXIT_OK, EXIT_USAGE};

fn cmd(args: &str) -> Output {
    run(std::iter::once("kkr-e6").chain(args.split_whitespace()))
}

fn file_with(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const EXAMPLE_RC: &str = "L 6
nu1: (2,0) (1,1) (1,1) (1,0) (1,0)
nu2: (2,0) (1,0) (1,0) (1,0) (1,0)
nu3: (2,1) (1,0) (1,0) (1,0) (1,0)
nu4: (2,0) (1,0) (1,0)
nu5: (2,0)
nu6: (2,0) (1,1)
";

#[test]
fn x_for_a_single_factor() {
    let out = cmd("x --length 1 --weight 1,0,0,0,0,0");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "1\n");
}

#[test]
fn x_and_m_agree_at_length_six() {
    let x = cmd("x --length 6 --weight 0,0,1,0,0,0");
    let m = cmd("m --length 6 --weight 0,0,1,0,0,0");
    assert_eq!((x.code, m.code), (EXIT_OK, EXIT_OK));
    assert_eq!(x.stdout, m.stdout);
    assert!(x.stdout.contains("q^-14"));
}

#[test]
fn sums_over_all_weights_agree() {
    for length in 0..=4 {
        let x = cmd(&format!("x --length {length}"));
        let m = cmd(&format!("m --length {length}"));
        assert_eq!(x.stdout, m.stdout, "L={length}");
        assert!(!x.stdout.is_empty());
    }
}

#[test]
fn listing_counts_match() {
    let paths = cmd("paths --length 3 --weight 0,0,0,0,0,1");
    let rcs = cmd("rcs --length 3 --weight 0,0,0,0,0,1");
    let n_paths = paths.stdout.lines().count();
    let n_rcs = rcs.stdout.lines().filter(|l| l.starts_with("L ")).count();
    assert!(n_paths > 0);
    assert_eq!(n_paths, n_rcs);
    for line in paths.stdout.lines() {
        assert_eq!(line.split_whitespace().count(), 3);
    }
    let all = cmd("paths --length 2");
    assert_eq!(
        all.stdout
            .lines()
            .filter(|l| l.starts_with("# weight"))
            .count(),
        3
    );
}

#[test]
fn phi_on_example() {
    let f = file_with(EXAMPLE_RC);
    let out = cmd(&format!("phi --rc {}", f.path().display()));
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "1 2 3 16 2 24\nc=-14 D=-14\n");
}

#[test]
fn phi_inv_on_example() {
    let f = file_with("1 2 3 16 2 24\n");
    let out = cmd(&format!("phi-inv --path {}", f.path().display()));
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, format!("{EXAMPLE_RC}c=-14 D=-14\n"));
}

#[test]
fn bad_input_exits_with_usage_code() {
    assert_eq!(cmd("x --length 2 --weight 1,2").code, EXIT_USAGE);
    assert_eq!(cmd("frobnicate").code, EXIT_USAGE);
    assert_eq!(cmd("phi --rc /nonexistent/file").code, EXIT_USAGE);
    let not_hw = file_with("2 1\n");
    assert_eq!(
        cmd(&format!("phi-inv --path {}", not_hw.path().display())).code,
        EXIT_USAGE
    );
    let bad_rigging = file_with("L 1\nnu1: (1,5)\nnu2:\nnu3:\nnu4:\nnu5:\nnu6:\n");
    assert_eq!(
        cmd(&format!("phi --rc {}", bad_rigging.path().display())).code,
        EXIT_USAGE
    );
    assert_eq!(cmd("verify --max-length 1 --jobs 0").code, EXIT_USAGE);
}

#[test]
fn graph_commands() {
    let dump = cmd("graph dump");
    assert_eq!(dump.code, EXIT_OK);
    assert!(!dump.stdout.is_empty());
    let check = cmd("graph verify");
    assert_eq!(check.code, EXIT_OK, "{}", check.stdout);
    assert!(check
        .stdout
        .starts_with("vertices=27 edges=36 source=1 sink=27\n"));
    assert!(check.stdout.ends_with("counterexamples=0\n"));
}

#[test]
fn verify_is_clean_and_deterministic() {
    let one = cmd("verify --max-length 4 --jobs 1");
    let many = cmd("verify --max-length 4 --jobs 3");
    let default = cmd("verify --max-length 4");
    assert_eq!(one.code, EXIT_OK, "{}", one.stdout);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, default.stdout);
    let last = one.stdout.lines().last().unwrap();
    assert!(last.starts_with("RESULT pass cases="), "{last}");
    assert!(last.ends_with(" failures=0"), "{last}");
}

#[test]
fn verify_json_report() {
    let out = cmd("verify --max-length 3 --json");
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let cases = v["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    assert!(cases
        .iter()
        .all(|c| c["equal"] == serde_json::Value::Bool(true)));
}
