//! End-to-end tests of the `subzeta` binary: frozen outputs, exit codes,
//! and byte-exact determinism.

use std::process::{Command, Output};

fn subzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subzeta"))
        .args(args)
        .output()
        .expect("the binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is text")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is text")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("the binary should exit normally")
}

#[test]
fn trivial_group_zeta_is_one() {
    let out = subzeta(&["zeta", "C1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn zeta_formats_are_frozen() {
    let cases = [
        ("plain", "1 + 4*3^-s + 9^-s\n"),
        ("latex", "1 + 4\\cdot 3^{-s} + 9^{-s}\n"),
        ("json", "{\"order\": 9, \"coefficients\": {\"1\": 1, \"3\": 4, \"9\": 1}}\n"),
        ("csv", "order,count\n1,1\n3,4\n9,1\n"),
    ];
    for (format, expected) in cases {
        let out = subzeta(&["zeta", "A(3;1,1)", "--format", format]);
        assert_eq!(code(&out), 0, "format {format}");
        assert_eq!(stdout(&out), expected, "format {format}");
    }
}

#[test]
fn product_specs_compute() {
    let out = subzeta(&["zeta", "C4xC2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 + 3*2^-s + 3*4^-s + 8^-s\n");
}

#[test]
fn twisted_product_agrees_with_its_abelian_type() {
    let twisted = subzeta(&["zeta", "T(2;3,1,1)"]);
    let straight = subzeta(&["zeta", "A(2;3,1,1)"]);
    assert_eq!(code(&twisted), 0);
    assert_eq!(code(&straight), 0);
    assert_eq!(stdout(&twisted), stdout(&straight));
}

#[test]
fn lattice_export_is_frozen() {
    let out = subzeta(&["lattice", "C6"]);
    assert_eq!(code(&out), 0);
    let expected = "[\n\
                    \x20 {\"order\": 1, \"members\": [0]},\n\
                    \x20 {\"order\": 2, \"members\": [0, 3]},\n\
                    \x20 {\"order\": 3, \"members\": [0, 2, 4]},\n\
                    \x20 {\"order\": 6, \"members\": [0, 1, 2, 3, 4, 5]}\n\
                    ]\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn abelian_numeric_fast_path() {
    let out = subzeta(&["abelian", "-p", "2", "--partition", "2,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 + 3*2^-s + 3*4^-s + 8^-s\n");
}

#[test]
fn abelian_symbolic_table() {
    let out = subzeta(&["abelian", "-p", "2", "--partition", "2,1", "--symbolic"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "k=0: 1\nk=1: p + 1\nk=2: p + 1\nk=3: 1\n");
}

#[test]
fn hterm_table_is_consistent() {
    let out = subzeta(&["hterm", "--partition", "3,2,1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("k=3: coefficient 2, degree 3"), "got:\n{text}");
}

#[test]
fn recover_finds_the_abelian_type() {
    let out = subzeta(&["recover", "--order", "8", "--coeffs", "1,3,3,1", "-p", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2,1\n");
}

#[test]
fn recover_reports_non_abelian_series() {
    let out = subzeta(&["recover", "--order", "8", "--coeffs", "1,1,3,1", "-p", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "no abelian match at 2\n");
}

#[test]
fn recover_order_one_is_trivial() {
    let out = subzeta(&["recover", "--order", "1", "--coeffs", "1", "-p", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "trivial group\n");
}

#[test]
fn recover_without_prime_reports_per_prime() {
    let out = subzeta(&["recover", "--order", "12", "--coeffs", "1,1,1,1,1,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "{\"euler\": true, \"primes\": {\"2\": {\"partition\": [2]}, \"3\": {\"partition\": [1]}}}\n"
    );

    // Subgroup counts of the order-6 dihedral group: no Euler product.
    let out = subzeta(&["recover", "--order", "6", "--coeffs", "1,3,1,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{\"euler\": false, \"primes\": {}}\n");
}

#[test]
fn recover_rejects_misshapen_input() {
    let out = subzeta(&["recover", "--order", "12", "--coeffs", "1,1,1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("6 coefficients"), "got: {}", stderr(&out));

    let out = subzeta(&["recover", "--order", "0", "--coeffs", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_order8_table_prints_five_passes() {
    let out = subzeta(&["verify", "order8-table"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|line| line.contains(": PASS (")), "got:\n{text}");
}

#[test]
fn every_verify_suite_passes() {
    for suite in [
        "duality",
        "euler-nilpotent",
        "order8-table",
        "coincidence-metacyclic",
        "coincidence-tilde",
        "stehling",
        "unimodal",
        "recovery-roundtrip",
    ] {
        let out = subzeta(&["verify", suite]);
        let text = stdout(&out);
        assert_eq!(code(&out), 0, "suite {suite}:\n{text}");
        assert!(!text.contains(": FAIL ("), "suite {suite}:\n{text}");
        assert!(text.lines().count() >= 1, "suite {suite} printed nothing");
        assert!(
            text.lines().all(|line| line.starts_with(suite)),
            "suite {suite}:\n{text}"
        );
    }
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = subzeta(&["verify", "everything"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("available:"), "got: {}", stderr(&out));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let out = subzeta(&["zeta", "C4xx"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("offset 3"), "got: {}", stderr(&out));

    let out = subzeta(&["abelian", "-p", "2", "--partition", "1,2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn resource_guards_exit_three() {
    let out = subzeta(&["zeta", "C8", "--max-order", "4"]);
    assert_eq!(code(&out), 3);

    let out = subzeta(&["lattice", "A(2;1,1,1,1,1,1,1)", "--max-subgroups", "1000"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let out = subzeta(&[]);
    assert_eq!(code(&out), 2);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["zeta", "A(3;2,1)", "--format", "json"][..],
        &["lattice", "D4"][..],
        &["verify", "order8-table"][..],
        &["abelian", "-p", "3", "--partition", "2,2", "--symbolic"][..],
    ] {
        let first = subzeta(args);
        let second = subzeta(args);
        assert_eq!(code(&first), 0, "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn jobs_flag_is_accepted() {
    let out = subzeta(&["zeta", "A(2;1,1,1)", "--jobs", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 + 7*2^-s + 7*4^-s + 8^-s\n");
}

#[cfg(unix)]
#[test]
fn early_closed_pipes_are_quiet() {
    use std::io::Read;
    use std::os::unix::process::ExitStatusExt;
    use std::process::Stdio;

    // 2825 subgroup records overflow the pipe buffer, so the writer is still
    // writing when the read end drops and must die silently on SIGPIPE
    // rather than panic with a broken-pipe backtrace.
    let mut child = Command::new(env!("CARGO_BIN_EXE_subzeta"))
        .args(["lattice", "A(2;1,1,1,1,1,1)"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("the binary should start");
    let mut first = [0u8; 64];
    child.stdout.take().expect("piped stdout").read_exact(&mut first).expect("some output");
    let status = child.wait().expect("the child should finish");
    assert_eq!(status.signal(), Some(libc::SIGPIPE));
    let mut err = String::new();
    child.stderr.take().expect("piped stderr").read_to_string(&mut err).expect("stderr is text");
    assert!(err.is_empty(), "expected silence on stderr, got:\n{err}");
}

#[test]
fn cayley_tables_load_from_files() {
    let table = subzeta::families::cyclic(4, &subzeta::Limits::default())
        .expect("small cyclic group")
        .to_cayley_json();
    let path = std::env::temp_dir().join(format!("subzeta-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, table).expect("temp file is writable");
    let spec = format!("file(\"{}\")", path.display());
    let out = subzeta(&["zeta", &spec]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 + 2^-s + 4^-s\n");
}
