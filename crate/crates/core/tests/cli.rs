use std::process::{Command, Output};

fn triarray(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triarray"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn symbolic_latex_table_has_published_cell() {
    let out = triarray(&["table", "A", "--symbolic", "--rmax", "4", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(r"3\,(s)_2 + s"));
}

#[test]
fn phi_json_contains_one_sixth() {
    let out = triarray(&["table", "phi", "--nmax", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"][1][1][1], "1/6");
}

#[test]
fn f_csv_row() {
    let out = triarray(&["table", "F", "--n", "1", "--lam", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1/2,1/6\n");
}

#[test]
fn numeric_b_csv() {
    let out = triarray(&["table", "B", "--s", "2", "--rmax", "4"]);
    assert_eq!(stdout(&out), "1\n2\n2,2\n0,8\n0,8,8\n");
}

#[test]
fn oeis_rows_output() {
    let out = triarray(&["oeis-rows", "--rmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n1,3\n1,15,15\n1,63,210,105\n");
}

#[test]
fn rowsum_reports_143_rows() {
    let out = triarray(&["verify", "rowsum", "--smax", "10", "--rmax", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS rowsum: A row sums equal s^r, 143 rows checked"));
}

#[test]
fn stirling_lists_values() {
    let out = triarray(&["verify", "stirling", "--rmax", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("r=5: S(r, r-i) for i=0..r = 1, 10, 25, 15, 1, 0"), "{text}");
    assert!(!text.contains("r=11"));
}

#[test]
fn default_bounds_flag() {
    let out = triarray(&["verify", "ode", "--default-bounds"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("66 pairs checked"));
    let clash = triarray(&["verify", "ode", "--default-bounds", "--nmax", "3"]);
    assert_eq!(clash.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["table", "A"][..],
        &["table", "A", "--s", "3", "--symbolic"],
        &["table", "A", "--s", "-1"],
        &["table", "phi", "--s", "3"],
        &["table", "F", "--n", "2", "--lam", "3"],
        &["table", "F"],
        &["table", "Z", "--s", "1"],
        &["table", "A", "--s", "1", "--format", "xml"],
        &["verify", "everything"],
        &["verify", "rowsum", "--smax", "x"],
        &["oeis-rows", "--rmax", "1"],
        &["oeis-rows"],
        &[],
    ] {
        let out = triarray(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "phiT", "--nmax", "5", "--format", "latex"][..],
        &["table", "A", "--symbolic", "--format", "json"],
        &["verify", "all", "--smax", "4", "--rmax", "6", "--nmax", "4", "--K", "4"],
    ] {
        let first = triarray(args);
        let second = triarray(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(first.stdout.ends_with(b"\n"));
    }
}
