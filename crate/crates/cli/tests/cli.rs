use std::io::Write;
use std::process::{Command, Output, Stdio};

fn copsi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copsi"))
        .args(args)
        .output()
        .unwrap()
}

fn copsi_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_copsi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.split('\t')
        .find_map(|c| c.strip_prefix(key)?.strip_prefix('='))
}

fn single_value(args: &[&str], key: &str) -> String {
    let o = copsi(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1, "{out}");
    field(lines[0], key).unwrap().to_string()
}

#[test]
fn family_and_graph6_inputs() {
    assert_eq!(
        single_value(&["copsi", "--family", "star", "--param", "3"], "total"),
        "58"
    );
    assert_eq!(single_value(&["copsi", "Bw"], "total"), "33");
    assert_eq!(
        single_value(&["copsi", "--family", "path", "--param", "1"], "total"),
        "1"
    );
}

#[test]
fn breakdown_fields() {
    let o = copsi(&["copsi", "--family", "star", "--param", "3", "--breakdown"]);
    let out = stdout(&o);
    let line = out.trim_end();
    // K_{1,3}: 4^2 singleton maps, 2*3^2 edge maps
    assert_eq!(field(line, "singleton"), Some("16"));
    assert_eq!(field(line, "edge"), Some("18"));
    assert_eq!(field(line, "third"), Some("24"));
}

#[test]
fn both_engines_agree() {
    let o = copsi(&["copsi", "--engine", "both", "Bw", "Cs", "Ch"]);
    assert!(o.status.success());
    for line in stdout(&o).lines() {
        assert_eq!(field(line, "agree"), Some("true"), "{line}");
        assert_eq!(field(line, "naive"), field(line, "classes"));
    }
}

#[test]
fn formula_and_sequence() {
    assert_eq!(single_value(&["formula", "cycle", "5"], "value"), "185");
    let out = stdout(&copsi(&["sequence", "path", "4"]));
    let values: Vec<&str> = out.lines().map(|l| field(l, "value").unwrap()).collect();
    assert_eq!(values, ["1", "6", "19", "44"]);
    assert_eq!(single_value(&["sequence", "star", "1"], "value"), "1");
}

#[test]
fn summands_restricted_to_stars() {
    let out = stdout(&copsi(&["sequence", "star", "3", "--summands"]));
    for line in out.lines() {
        let v: u64 = field(line, "value").unwrap().parse().unwrap();
        let l: u64 = field(line, "linear").unwrap().parse().unwrap();
        let p: u64 = field(line, "psin").unwrap().parse().unwrap();
        assert_eq!(v, l + p);
    }
    assert_eq!(
        copsi(&["sequence", "path", "3", "--summands"])
            .status
            .code(),
        Some(2)
    );
}

fn extremal_rows(out: &str) -> Vec<&str> {
    out.lines()
        .skip(1)
        .filter(|l| !l.starts_with("extremal\t"))
        .collect()
}

#[test]
fn extremal_by_size_three() {
    let o = copsi(&["extremal", "--by-size", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows = extremal_rows(&out);
    assert_eq!(rows.len(), 3);
    let top: Vec<&str> = rows[0].split_whitespace().collect();
    // K_{1,3} in graph6 is "Cs"
    assert_eq!(&top[1..5], ["Cs", "4", "3", "58"]);
    assert_eq!(
        field(out.lines().last().unwrap(), "confirmed"),
        Some("true")
    );
}

#[test]
fn extremal_by_order_three() {
    let o = copsi(&["extremal", "--by-order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows = extremal_rows(&out);
    assert_eq!(rows.len(), 4);
    let top: Vec<&str> = rows[0].split_whitespace().collect();
    assert_eq!(&top[1..5], ["Bw", "3", "3", "33"]);
}

#[test]
fn extremal_by_size_zero() {
    let o = copsi(&["extremal", "--by-size", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(extremal_rows(&stdout(&o)).len(), 1);
}

#[test]
fn extremal_output_ignores_jobs() {
    let one = copsi(&["extremal", "--by-size", "5", "--jobs", "1"]);
    let four = copsi(&["extremal", "--by-size", "5", "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(
        copsi(&["extremal", "--by-size", "2", "--jobs", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn extremal_json_matches_table() {
    let table = stdout(&copsi(&["extremal", "--by-order", "3"]));
    let json = stdout(&copsi(&["extremal", "--by-order", "3", "--json"]));
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    for (row, line) in rows.iter().zip(extremal_rows(&table)) {
        let cells: Vec<&str> = line.split_whitespace().collect();
        let json_cells: Vec<&str> = row
            .as_object()
            .unwrap()
            .values()
            .map(|c| c.as_str().unwrap())
            .collect();
        assert_eq!(cells, json_cells);
    }
    let summary = table.lines().last().unwrap();
    for key in [
        "candidates",
        "maximum",
        "maximizers",
        "expected",
        "confirmed",
    ] {
        assert_eq!(field(summary, key), v[key].as_str(), "{key}");
    }
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "lemma", "--order-bound", "5"][..],
        &["verify", "--suite", "formulas"],
        &["verify", "--suite", "engines", "--order-bound", "1"],
    ] {
        let o = copsi(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        let out = stdout(&o);
        assert!(
            out.lines().all(|l| field(l, "passed") == Some("true")),
            "{out}"
        );
    }
}

#[test]
fn gen_prints_graph6() {
    assert_eq!(stdout(&copsi(&["gen", "complete", "3"])), "Bw\n");
    assert_eq!(stdout(&copsi(&["gen", "path", "1"])), "@\n");
}

#[test]
fn gen_pipes_into_copsi() {
    let g = stdout(&copsi(&["gen", "star", "4"]));
    let o = copsi_stdin(&["copsi"], &g);
    assert!(o.status.success());
    assert_eq!(field(stdout(&o).trim_end(), "total"), Some("249"));
}

#[test]
fn stdin_skips_blank_lines_and_header() {
    let o = copsi_stdin(&["copsi"], ">>graph6<<Bw\r\n\n@\n");
    assert!(o.status.success());
    let out = stdout(&o);
    let totals: Vec<&str> = out.lines().map(|l| field(l, "total").unwrap()).collect();
    assert_eq!(totals, ["33", "1"]);
}

#[test]
fn file_input() {
    let path = std::env::temp_dir().join(format!("copsi-cli-test-{}.g6", std::process::id()));
    std::fs::write(&path, "Bw\nCs\n").unwrap();
    let o = copsi(&["copsi", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    let out = stdout(&o);
    let totals: Vec<&str> = out.lines().map(|l| field(l, "total").unwrap()).collect();
    assert_eq!(totals, ["33", "58"]);
}

#[test]
fn parse_error_names_line_and_exits_two() {
    let o = copsi_stdin(&["copsi"], "Bw\nB\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("line 2"), "{err}");
    // the good line is still processed
    assert_eq!(
        field(stdout(&o).lines().next().unwrap(), "total"),
        Some("33")
    );
}

#[test]
fn out_of_range_parameters() {
    assert_eq!(
        copsi(&["copsi", "--family", "cycle", "--param", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(copsi(&["formula", "hexagon", "3"]).status.code(), Some(2));
    assert_eq!(
        copsi(&["extremal", "--by-size", "9"]).status.code(),
        Some(3)
    );
    assert_eq!(
        copsi(&["extremal", "--by-order", "9"]).status.code(),
        Some(3)
    );
}

#[test]
fn subset_cap_exits_three() {
    let o = copsi(&[
        "copsi",
        "--family",
        "complete",
        "--param",
        "10",
        "--subset-cap",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(field(stdout(&o).trim_end(), "error").is_some());
}

#[test]
fn json_and_table_carry_the_same_fields() {
    let args = ["copsi", "--breakdown", "--engine", "both", "Bw", "Cs"];
    let table = stdout(&copsi(&args));
    let json = stdout(&copsi(&[&args[..], &["--json"]].concat()));
    for (t, j) in table.lines().zip(json.lines()) {
        let v: serde_json::Value = serde_json::from_str(j).unwrap();
        let obj = v.as_object().unwrap();
        let cells: Vec<&str> = t.split('\t').collect();
        assert_eq!(obj["command"], cells[0]);
        assert_eq!(obj["input"], cells[1]);
        let keys: Vec<&str> = obj.keys().skip(2).map(String::as_str).collect();
        let table_keys: Vec<&str> = cells[2..]
            .iter()
            .map(|c| c.split('=').next().unwrap())
            .collect();
        assert_eq!(keys, table_keys);
        for c in &cells[2..] {
            let (k, val) = c.split_once('=').unwrap();
            assert_eq!(obj[k], val);
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["extremal", "--by-order", "4"][..],
        &["verify", "--suite", "engines", "--order-bound", "4"],
    ] {
        assert_eq!(copsi(args).stdout, copsi(args).stdout, "{args:?}");
    }
}

#[test]
fn timing_is_opt_in() {
    assert!(!stdout(&copsi(&["copsi", "Bw"])).contains("timing_ms"));
    assert!(stdout(&copsi(&["copsi", "Bw", "--timing"])).contains("timing_ms="));
}
