use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    topokit_verify::fixtures::bundled_dir().join(name)
}

fn topo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topo")).args(args).output().expect("binary runs")
}

fn run_on(args: &[&str], file: &str) -> Output {
    let path = fixture(file);
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    topo(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sphere_homology_line() {
    let o = run_on(&["homology", "--ring", "z"], "sphere-2.cx");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "H_0=Z H_1=0 H_2=Z\n");
}

#[test]
fn klein_bottle_torsion() {
    let o = run_on(&["homology"], "klein-bottle.scheme");
    assert_eq!(stdout(&o), "H_0=Z H_1=Z+Z/2 H_2=0\n");
}

#[test]
fn k5_is_not_planar() {
    let o = run_on(&["planar", "--vk"], "k5.graph");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "planar=no obstruction=nonzero\n");
    assert_eq!(stdout(&run_on(&["planar"], "k4.graph")), "planar=yes obstruction=zero\n");
    assert_eq!(stdout(&run_on(&["planar", "--rotation"], "k33.graph")), "planar=no\n");
}

#[test]
fn k5_drawing_gives_the_same_verdict() {
    let draw = fixture("k5-pentagon.draw");
    let o = run_on(&["planar", "--drawing", draw.to_str().unwrap()], "k5.graph");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("planar=no obstruction=nonzero crossings=5"), "{}", stdout(&o));
}

#[test]
fn k5_genus_by_interlacement() {
    let o = run_on(&["genus", "--mohar"], "k5.graph");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "genus=1\n");
    assert_eq!(stdout(&run_on(&["genus"], "k33.graph")), "genus=1\n");
}

#[test]
fn surface_classification_and_form() {
    let o = run_on(&["surface", "--form"], "torus.scheme");
    assert_eq!(stdout(&o), "surface=yes orientable=yes genus=1 boundary=0 chi=0 rank=2 w1_squared=0\n0 1\n1 0\n");
    let o = run_on(&["surface"], "projective-plane.scheme");
    assert_eq!(stdout(&o), "surface=yes orientable=no genus=1 boundary=0 chi=1\n");
}

#[test]
fn paths_and_links() {
    assert_eq!(stdout(&run_on(&["approx"], "fork.path")), "c=1 v=(1) approximable=no\n");
    assert_eq!(stdout(&run_on(&["approx"], "folded-segment.path")), "c=0 v=() approximable=yes\n");
    assert!(stdout(&run_on(&["link"], "hopf.link")).contains("lk_mod2=1"));
    assert!(stdout(&run_on(&["link"], "unlink.link")).starts_with("lk=0 lk_mod2=0"));
}

#[test]
fn cover_counts() {
    assert_eq!(stdout(&run_on(&["covers"], "k4.graph")), "cycle_rank=3 classes=8\n");
    assert_eq!(stdout(&run_on(&["covers", "--surface"], "klein-bottle.scheme")), "classes=4\n");
}

#[test]
fn thickenings() {
    let o = run_on(&["thicken", "--classes"], "k4.graph");
    assert!(stdout(&o).starts_with("labeled_oriented=16 "), "{}", stdout(&o));
    assert!(stdout(&o).contains("classes=3"));
    let o = run_on(&["thicken", "--trace"], "interleaved-loops.rot");
    assert_eq!(stdout(&o), "faces=1 orientable=yes genus=1 euler_genus=2 chi=-1\ncircuit 0: 0.0 1.1 0.1 1.0\n");
}

#[test]
fn json_is_one_record() {
    let o = run_on(&["--json", "genus", "--mohar"], "k5.graph");
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["genus"], 1);
    let o = run_on(&["approx", "--json"], "double-circuit.path");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["v"], serde_json::json!([true]));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.graph");
    fs::write(&bad, "vertices 3\nedge 0 7\n").unwrap();
    let o = topo(&["genus", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error:"));
    let o = run_on(&["genus"], "torus.scheme");
    assert_eq!(o.status.code(), Some(2));
    let o = topo(&["genus", "--budget", "lots", "x.graph"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let o = run_on(&["genus", "--budget", "10"], "k5.graph");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("genus >= 1"));
    let o = run_on(&["--json", "surface", "--form"], "mobius-band.scheme");
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "domain");
    let dir = tempfile::tempdir().unwrap();
    let two = dir.path().join("two.graph");
    fs::write(&two, "vertices 4\nedge 0 1\nedge 2 3\n").unwrap();
    assert_eq!(topo(&["genus", two.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [&["thicken", "--classes"][..], &["covers", "--list"][..]] {
        let a = run_on(args, "k4.graph");
        let b = run_on(args, "k4.graph");
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn selftest_filter_runs_a_subset() {
    let o = topo(&["selftest", "--filter", "mohar"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.starts_with("passed=3 failed=0\n"), "{text}");
    let criteria: Vec<&str> = text.lines().filter(|l| l.starts_with("[PASS]")).collect();
    assert_eq!(criteria.len(), 3);
    assert!(criteria[1].contains("genus-mohar") && criteria[2].contains("one-vertex-mohar"));
}

#[test]
fn selftest_flags_a_corrupted_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(topokit_verify::fixtures::bundled_dir()).unwrap() {
        let path = entry.unwrap().path();
        fs::copy(&path, dir.path().join(path.file_name().unwrap())).unwrap();
    }
    let dir_arg = dir.path().to_str().unwrap();
    let clean = topo(&["selftest", "--filter", "sphere", "--fixtures", dir_arg]);
    assert_eq!(clean.status.code(), Some(0), "{}", stdout(&clean));
    let torus = dir.path().join("torus.scheme");
    let text = fs::read_to_string(&torus).unwrap();
    fs::write(&torus, text.replace("face 0+ 1+ 0- 1-", "face 0+ 1+ 0+ 1-")).unwrap();
    let o = topo(&["selftest", "--filter", "sphere", "--fixtures", dir_arg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("torus.scheme"), "{}", stdout(&o));
}
