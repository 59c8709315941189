use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkbound")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn homfly_prints_polynomial_and_order() {
    let o = run(&["homfly", "BR[3,{1,-2,1,2,-1,2}]"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("P = v^4 + v^4*z^(-2) - v^2*z^2 - 3*v^2 - 2*v^2*z^(-2) + 2 + z^(-2)"), "{s}");
    assert!(s.contains("ord_v = 0"));
}

#[test]
fn machine_mode_is_key_value() {
    let o = run(&["--machine", "lk", "BR[2,{1,1}]"]);
    let s = stdout(&o);
    assert!(s.lines().all(|l| l.contains('=')));
    assert!(s.contains("lk={{0, 1}, {1, 0}}"));
}

#[test]
fn table1_has_no_mismatches() {
    let o = run(&["table1", &fixture("table1.kb")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("29 rows, 0 mismatches"));
}

#[test]
fn table1_exit_three_on_mismatch() {
    let src = std::fs::read_to_string(fixture("table1.kb")).unwrap();
    let broken = src.replace("row 4_1           no       no(a)     no(b)      -1 1", "row 4_1 no no(a) no(b) -1 3");
    assert_ne!(src, broken);
    let path = std::env::temp_dir().join(format!("linkbound-broken-{}.kb", std::process::id()));
    std::fs::write(&path, broken).unwrap();
    let o = run(&["table1", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("1 mismatches"));
}

#[test]
fn output_independent_of_jobs() {
    let a = run(&["--machine", "--jobs", "1", "classify", &fixture("table1.kb")]);
    let b = run(&["--machine", "--jobs", "4", "classify", &fixture("table1.kb")]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_and_budget_exit_codes() {
    assert_eq!(run(&["homfly", "BR[3,{1,x}]"]).status.code(), Some(1));
    assert_eq!(run(&["--skein-budget", "3", "homfly", "BR[3,{1,2,1,2,1,2}]"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "/nonexistent/kb"]).status.code(), Some(1));
}

#[test]
fn wermer_chain_realizable_and_embeds() {
    let o = run(&["ovals", "realize", &fixture("wermer.ovals")]);
    assert!(stdout(&o).starts_with("realizable"));
    let e = run(&["--machine", "ovals", "embed", "--conjugate", "--boundary", &fixture("wermer.ovals")]);
    let h = run(&["--machine", "homfly", "BR[3,{1,2,-1,-1,2,1}]"]);
    let p = |s: String| s.lines().find(|l| l.starts_with("P=")).unwrap().to_string();
    assert_eq!(p(stdout(&e)), p(stdout(&h)));
}

#[test]
fn splice_lk_matches_embed_lk() {
    let s = run(&["--machine", "ovals", "splice", &fixture("wermer.ovals")]);
    let e = run(&["--machine", "ovals", "embed", "--boundary", &fixture("wermer.ovals")]);
    let lk = |s: String| s.lines().find(|l| l.starts_with("lk=")).unwrap().to_string();
    assert_eq!(lk(stdout(&s)), lk(stdout(&e)));
}

#[test]
fn qp_verify_and_obstruct() {
    let path = std::env::temp_dir().join(format!("linkbound-cert-{}.txt", std::process::id()));
    std::fs::write(&path, "BR[3,{1,1,2,2,1,-2}]\n[]1 []1 []2 [2]1\n").unwrap();
    let o = run(&["qp-verify", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    std::fs::write(&path, "BR[3,{1,1,2,2,1,-2}]\n[]1 []1 []2 [-2]1\n").unwrap();
    assert_eq!(run(&["qp-verify", path.to_str().unwrap()]).status.code(), Some(3));
    std::fs::remove_file(&path).ok();
    let o = run(&["qp-obstruct", "BR[3,{1,-2,1,-2,1}]"]);
    assert!(stdout(&o).contains("verdict = refuted"));
}
