use fock_crystal::cli::run;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fock-crystal").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn quotient_of_figure_partition() {
    let (code, out, _) = exec(&["quotient", "4.2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(2|1)\nt=0\n");
}

#[test]
fn core_reports_e_core_status() {
    let (code, out, _) = exec(&["core", "5.1", "--e", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("e-core: no"));
    let (_, out, _) = exec(&["core", "2.1", "--e", "2"]);
    assert_eq!(out, "(2.1)\ne-core: yes\n");
}

#[test]
fn symbol_commands() {
    assert_eq!(exec(&["nfun", "2^2.1^2"]).1, "7\n");
    assert_eq!(exec(&["afun", "1|1^2", "--t", "0"]).1, "7\n");
    assert_eq!(exec(&["phit", "-|-", "--t", "2"]).1, "(2.1)\n");
}

#[test]
fn kleshchev_rank_zero_is_single_vertex() {
    let (code, out, _) = exec(&[
        "crystal",
        "--level",
        "2",
        "--e",
        "3",
        "--charge",
        "-1,0",
        "--realization",
        "kleshchev",
        "--max-rank",
        "0",
    ]);
    assert_eq!(code, 0);
    let body: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["rank 0: ∅|∅"]);
}

#[test]
fn crystal_json_matches_golden() {
    let (code, out, _) = exec(&[
        "crystal",
        "--level",
        "2",
        "--e",
        "3",
        "--charge",
        "-1,0",
        "--realization",
        "uglov",
        "--max-rank",
        "3",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.as_bytes(), std::fs::read(fixture("uglov_crystal.json")).unwrap());
}

#[test]
fn hcgraph_dot_has_thirteen_labels() {
    let (code, out, _) = exec(&["hcgraph", "--s", "0", "--e", "3", "--max-rank", "3", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph crystal {"));
    let nodes = out
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains("->"))
        .count();
    assert_eq!(nodes, 13);
    assert_eq!(out.matches("->").count(), 12);
    assert!(out.contains("[label=\"2^2.1^2\"]"));
}

#[test]
fn phi_maps_bold_vertex() {
    let (code, out, _) = exec(&["phi", "--e", "3", "--charge", "-1,0", "--vertex", "1^2|1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1|2\n");
}

#[test]
fn diff_of_goldens() {
    let (code, out, _) = exec(&[
        "diff",
        &fixture("uglov_crystal.json"),
        &fixture("kleshchev_crystal.json"),
        "--ignore-colors",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("vertices only in left, rank 3: -|3"));
    assert!(out.contains("vertices only in right, rank 3: 1^2|1"));
    let same = exec(&["diff", &fixture("uglov_crystal.json"), &fixture("uglov_crystal.json")]);
    assert_eq!(same.1, "identical\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exec(&["crystal", "--bogus"]).0, 2);
    assert_eq!(exec(&["afun", "1|-"]).0, 2);
    let (code, _, err) = exec(&[
        "crystal",
        "--level",
        "3",
        "--e",
        "3",
        "--charge",
        "-1,0",
        "--realization",
        "uglov",
        "--max-rank",
        "1",
    ]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn domain_errors_exit_one() {
    let (code, _, err) = exec(&["phi", "--e", "3", "--charge", "-1,0", "--vertex", "-|1^3"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a vertex"));
    assert_eq!(exec(&["hcgraph", "--s", "1", "--e", "3", "--max-rank", "1"]).0, 1);
    assert_eq!(
        exec(&["diff", &fixture("missing.json"), &fixture("uglov_crystal.json")]).0,
        1
    );
    assert_eq!(
        exec(&["diff", &fixture("uglov_crystal.txt"), &fixture("uglov_crystal.json")]).0,
        1
    );
}

#[test]
fn selftest_passes() {
    let (code, out, _) = exec(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 7);
}
