use std::process::{Command, Output};

fn gottlieb(args: &[&str], env: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gottlieb"));
    c.args(args).env_remove("GOTTLIEB_CATALOG");
    if let Some(p) = env {
        c.env("GOTTLIEB_CATALOG", p);
    }
    c.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_catalog(name: &str, edit: impl Fn(&str) -> String) -> String {
    let path = std::env::temp_dir().join(format!("gottlieb-{}-{}.txt", name, std::process::id()));
    std::fs::write(&path, edit(tables::Catalog::bundled_text())).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn spec_queries() {
    let o = gottlieb(&["query", "--what", "P", "--field", "H", "--n", "3", "--k", "14"], None);
    let s = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(s.contains("exact") && s.contains("Z_12") && s.contains("Prop. exh1(4)"), "{}", s);
    assert!(s.contains("i(Eε′)") && s.contains("α_1(3)α_2(6)"), "{}", s);

    let o = gottlieb(&["query", "--what", "pi", "--field", "R", "--n", "4", "--k", "4", "--format", "machine"], None);
    assert!(stdout(&o).starts_with("exact|Z|all:Z|"), "{}", stdout(&o));

    let o = gottlieb(&["query", "--what", "G", "--field", "K", "--n", "2", "--k", "8", "--format", "machine"], None);
    assert!(stdout(&o).starts_with("exact|"));
    assert!(stdout(&o).contains("|0:0|"));
}

#[test]
fn not_covered_is_an_answer() {
    let o = gottlieb(&["query", "--what", "G", "--field", "H", "--n", "2", "--k", "40", "--format", "machine"], None);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("not_covered|"));
    assert!(s.trim_end().rsplit('|').next().is_some_and(|c| !c.is_empty()));
}

#[test]
fn usage_errors() {
    for args in [
        vec!["query", "--what", "G", "--field", "R", "--n", "2"],
        vec!["query", "--what", "Q", "--field", "R", "--n", "2", "--k", "3"],
        vec!["query", "--what", "G", "--field", "X", "--n", "2", "--k", "3"],
        vec!["query", "--what", "G", "--field", "K", "--n", "3", "--k", "3"],
        vec!["query", "--what", "G", "--field", "R", "--n", "0", "--k", "3"],
        vec!["query", "--what", "pi", "--field", "C", "--n", "2", "--k", "3", "--p", "2"],
        vec!["dump", "--what", "G", "--k", "a..b"],
        vec!["frobnicate"],
    ] {
        let o = gottlieb(&args, None);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(!o.stderr.is_empty());
    }
    let o = gottlieb(&["--version"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn catalog_errors() {
    let o = gottlieb(&["--catalog", "/nonexistent/x.txt", "query", "--what", "pi", "--field", "R", "--n", "2", "--k", "2"], None);
    assert_eq!(o.status.code(), Some(3));
    let bad = write_catalog("garbage", |t| t.replace("schema|1", "schema|9"));
    assert_eq!(gottlieb(&["export"], Some(&bad)).status.code(), Some(3));
    let _ = std::fs::remove_file(bad);
}

#[test]
fn env_var_is_used_and_flag_wins() {
    let o = gottlieb(&["selfcheck"], Some("/nonexistent/env.txt"));
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/env.txt"));
    let good = write_catalog("good", |t| t.to_string());
    assert_eq!(gottlieb(&["--catalog", &good, "selfcheck"], Some("/nonexistent/env.txt")).status.code(), Some(0));
    assert_eq!(gottlieb(&["selfcheck"], Some(&good)).status.code(), Some(0));
    let _ = std::fs::remove_file(good);
}

#[test]
fn selfcheck_catches_corruption() {
    let bad = write_catalog("s4", |t| t.replace("pi|S4|7|1|12|", "pi|S4|7|1|6|"));
    let o = gottlieb(&["selfcheck"], Some(&bad));
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("splitting") && s.contains("FAIL") && s.contains("pi_7(S^4)"), "{}", s);
    let _ = std::fs::remove_file(bad);

    let empty = write_catalog("empty", |_| "schema|1\n".into());
    let o = gottlieb(&["selfcheck"], Some(&empty));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not covered"));
    let _ = std::fs::remove_file(empty);
}

#[test]
fn dump_rows() {
    let o = gottlieb(&["dump", "--what", "P", "--field", "H", "--k", "5..14", "--n", "3", "--format", "machine"], None);
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.starts_with("H|3|") && r.contains("exh1")));

    let o = gottlieb(&["dump", "--what", "G", "--field", "R", "--n", "2", "--format", "machine"], None);
    let s = stdout(&o);
    let big: Vec<&str> = s.lines().filter(|r| r.split('|').nth(2).unwrap().parse::<u32>().unwrap() >= 3).collect();
    assert!(big.len() > 10);
    assert!(big.iter().all(|r| r.split('|').nth(5).unwrap().starts_with("all:")), "{}", s);

    let o = gottlieb(&["dump", "--what", "G", "--k", "9..3"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = gottlieb(&["dump", "--what", "G", "--k", "9..3", "--format", "machine"], None);
    assert_eq!(stdout(&o), "");
}

#[test]
fn dump_order_is_field_n_k() {
    let o = gottlieb(&["dump", "--what", "P", "--n", "1..3", "--k", "1..9", "--format", "machine"], None);
    let keys: Vec<(String, u32, u32)> = stdout(&o)
        .lines()
        .map(|r| {
            let f: Vec<&str> = r.split('|').collect();
            (f[0].to_string(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    let rank = |f: &str| "RCHK".find(f).unwrap();
    let mut sorted = keys.clone();
    sorted.sort_by_key(|(f, n, k)| (rank(f), *n, *k));
    assert_eq!(keys, sorted);
    assert!(keys.iter().any(|k| k.0 == "K") && keys.iter().any(|k| k.0 == "R"));
}

#[test]
fn export_lists_records() {
    let o = gottlieb(&["export"], None);
    let s = stdout(&o);
    assert!(s.starts_with("space|k|group|generators|citation\n"));
    assert!(s.lines().any(|l| l.starts_with("S4|7|Z+Z12|")));
}
