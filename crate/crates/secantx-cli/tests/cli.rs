use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_secantx"))
}

fn run_with_stdin(args: &[&str], input: &str) -> (String, String, i32) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn secantx");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

fn sunlet_graph6() -> String {
    secantx::graph6::emit_graph6(&secantx::Graph::sunlet4()).unwrap()
}

#[test]
fn betti_renders_the_sunlet_table() {
    let (stdout, _, code) = run_with_stdin(&["betti", "--q", "2"], &sunlet_graph6());
    assert_eq!(code, 0);
    assert!(stdout.contains("20"), "{}", stdout);
    assert!(stdout.contains("45"));
    assert!(stdout.contains("36"));
    assert!(stdout.contains("10"));
    assert!(stdout.contains("pd = 4"));
    assert!(stdout.contains("reg I = 3"));
}

#[test]
fn betti_json_has_schema() {
    let (stdout, _, code) = run_with_stdin(&["betti", "--q", "2", "--json"], &sunlet_graph6());
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["pd"], 4);
    assert_eq!(v["field"], "Q");
}

#[test]
fn betti_on_a_simplex_facet_file() {
    let dir = std::env::temp_dir().join("secantx-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("simplex.facets");
    std::fs::write(&path, "0 1 2 3\n").unwrap();
    let (stdout, _, code) = run_with_stdin(
        &["betti", "--q", "1", "--format", "facets", path.to_str().unwrap()],
        "",
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("pd = 0"), "{}", stdout);
    assert!(stdout.contains("reg S = 0"), "{}", stdout);
}

#[test]
fn classify_c7_is_del_pezzo() {
    let c7 = secantx::graph6::emit_graph6(&secantx::Graph::cycle(7).unwrap()).unwrap();
    let (stdout, _, code) = run_with_stdin(&["classify", "--q", "2"], &c7);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(v["del_pezzo"], true);
    assert_eq!(v["q_secant_chordal"]["verdict"], false);
    assert_eq!(v["schema"], 1);
}

#[test]
fn secant_lists_generators_with_tags() {
    let c5 = secantx::graph6::emit_graph6(&secantx::Graph::cycle(5).unwrap()).unwrap();
    let (stdout, _, code) = run_with_stdin(&["secant", "--q", "2", "--json"], &c5);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(v["minimal_generators"][0]["family"], "Fq1");
    assert_eq!(
        v["minimal_generators"][0]["vertices"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
}

#[test]
fn enumerate_streams_iso_classes() {
    let (stdout, _, code) = run_with_stdin(&["enumerate", "--n", "4"], "");
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 11);
    for l in lines {
        assert!(secantx::graph6::parse_graph6(l).is_ok());
    }
}

#[test]
fn verify_suite_passes_and_unknown_suite_is_usage_error() {
    let (stdout, _, code) = run_with_stdin(&["verify", "froberg", "--n-max", "5"], "");
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS"));
    let (_, stderr, code) = run_with_stdin(&["verify", "no-such-suite"], "");
    assert_eq!(code, 2);
    assert!(stderr.contains("available"));
}

#[test]
fn oversize_input_is_an_infeasibility_error() {
    // edgeless graph on 30 vertices: size byte ']' then 73 zero groups
    let line = format!("]{}", "?".repeat(73));
    let (_, stderr, code) = run_with_stdin(&["betti", "--q", "1"], &line);
    assert_eq!(code, 3, "{}", stderr);
    assert!(stderr.contains("infeasible"));
}

#[test]
fn malformed_graph6_is_a_usage_error() {
    let (_, stderr, code) = run_with_stdin(&["betti"], "C");
    assert_eq!(code, 2);
    assert!(stderr.contains("line 1"), "{}", stderr);
}

#[test]
fn jobs_flag_and_env_are_accepted() {
    let (stdout, _, code) = run_with_stdin(&["--jobs", "2", "enumerate", "--n", "3"], "");
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 4);
    let mut child = bin();
    child.env("SECANTX_JOBS", "1");
    let out = child
        .args(["verify", "thm-2-8", "--n-max", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn edge_list_input_works() {
    let (stdout, _, code) = run_with_stdin(
        &["classify", "--q", "1", "--format", "edges"],
        "0 1\n1 2\n2 3\n3 0\n",
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(v["elementary_bipartite"]["verdict"], true);
    assert_eq!(v["fq2"]["verdict"], true);
}
