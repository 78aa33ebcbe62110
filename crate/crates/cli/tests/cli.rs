use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galois-lcd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn cosets_all_lcd_family() {
    let o = run(&["cosets", "-p", "5", "-e", "3", "-k", "1", "-n", "13", "--lambda", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("4 cosets"));
    assert!(s.contains("{1,5,21,25}"));
    assert!(s.contains("t=4 h=0"));
    assert!(s.contains("all-LCD: yes"));
}

#[test]
fn cosets_singletons_with_long_orbit() {
    let o = run(&["cosets", "-p", "13", "-e", "3", "-k", "2", "-n", "9", "--lambda", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("9 cosets"));
    assert!(s.contains("t=1 h=1"));
    assert!(s.contains("length 6"));
    assert!(s.contains("all-LCD: no"));
}

#[test]
fn cosets_json_is_parseable() {
    let o = run(&["cosets", "-p", "2", "-n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cosets"], serde_json::json!([[0]]));
    assert_eq!(v["census"]["t"], 1);
}

#[test]
fn invalid_parameters_exit_one() {
    let o = run(&["cosets", "-p", "4", "-n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stderr(&o).is_empty());
    let o = run(&["cosets", "-p", "3", "-n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["nonsense"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn classify_counts_and_writes_file() {
    let dir = tempdir();
    let path = dir.join("cat.json");
    let o = run(&[
        "classify", "-p", "5", "-e", "3", "-k", "1", "-n", "13", "--lambda", "-1",
        "--exact-distance", "-o", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("stable defining sets: 16; nonzero LCD codes: 15"));
    let first = std::fs::read(&path).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert!(v.to_string().contains("13"));
    // Deterministic output for identical flags.
    let o = run(&[
        "classify", "-p", "5", "-e", "3", "-k", "1", "-n", "13", "--lambda", "-1",
        "--exact-distance", "-o", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn classify_hermitian_csv() {
    let o = run(&[
        "classify", "-p", "11", "-e", "2", "-k", "1", "-n", "10", "--lambda", "-1",
        "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(
        lines.next(),
        Some("p,e,k,n,lambda,r,defining_set,dim,d,exact,bch,lcd,mds")
    );
    assert_eq!(lines.count(), 64);
    assert!(stderr(&o).contains("nonzero LCD codes: 63"));
}

#[test]
fn lcd_check_on_matrix() {
    // alpha = [0,1,0] over GF(8) with x^3+x+1.
    let m = "[[1,0,[0,1,0],[0,1,0]],[0,1,1,[0,1,0]]]";
    let o = run(&["lcd-check", "-p", "2", "-e", "3", "-k", "1", "--matrix", m, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lcd"], true);
    assert_eq!(v["det"], serde_json::json!([0, 1, 0]));
}

#[test]
fn lcd_check_on_constacyclic_code() {
    let o = run(&["lcd-check", "-p", "3", "-e", "2", "-k", "1", "-n", "13", "--set", "1,3,9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("Galois LCD (k = 1): no"));
}

#[test]
fn mindist_exact_and_refused() {
    let o = run(&["mindist", "-p", "3", "-n", "13", "--set", "1,3,9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[13,10,3]");
    let o = run(&[
        "mindist", "-p", "3", "-n", "40", "--set", "1,3,9,27",
        "--budget-messages", "10", "--budget-supports", "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn genpoly_lists_factors() {
    let o = run(&["genpoly", "-p", "2", "-n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("x^3 + x + 1"));
    assert!(s.contains("x^3 + x^2 + 1"));
    let o = run(&["genpoly", "-p", "2", "-n", "7", "--set", "1,2,4"]);
    assert!(stdout(&o).contains("dimension 4"));
}

#[test]
fn dual_of_constacyclic_code() {
    let o = run(&["dual", "-p", "3", "-e", "2", "-k", "1", "-n", "13", "--set", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 1);
}

#[test]
fn extend_modes() {
    let o = run(&["extend", "-p", "5", "--matrix", "[[1,0,1],[0,1,2]]", "--mode", "pmod4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("Galois LCD (k = 0): yes"));
    let o = run(&["extend", "-p", "3", "--matrix", "[[1,0,1]]", "--mode", "pmod4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["extend", "-p", "2", "--matrix", "[[1,1,0],[1,1,1]]", "--mode", "char2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("columns reordered"));
}

#[test]
fn reproduce_examples() {
    let o = run(&["reproduce", "2.4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("example 2.4: match"));
    let o = run(&["reproduce", "3.8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("expected-flag"));
    let o = run(&["reproduce", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    let o = run(&["reproduce", "9.9"]);
    assert_eq!(o.status.code(), Some(1));
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("galois-lcd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
