use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn spec(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs").join(format!("{name}.json"))
}

fn linkdraw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkdraw")).args(args).output().unwrap()
}

fn synth(name: &str, dir: &Path, extra: &[&str]) -> Output {
    let spec = spec(name);
    let mut args = vec!["synth", spec.to_str().unwrap(), "--out-dir", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    linkdraw(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn metadata(dir: &Path) -> serde_json::Value {
    let text = std::fs::read_to_string(dir.join("linkage.json")).unwrap();
    serde_json::from_str::<serde_json::Value>(&text).unwrap()["metadata"].clone()
}

#[test]
fn synth_viviani_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let o = synth("viviani", dir.path(), &["--m0", "0,0,1/2,0,0,0,0,0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let meta = metadata(dir.path());
    assert_eq!((meta["links"].as_u64(), meta["joints"].as_u64()), (Some(6), Some(7)));
    assert_eq!(meta["mode"], "spherical");
    let trace = std::fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    assert!(trace.lines().any(|l| l.starts_with("1,-1,0,1,")));
    assert!(trace.lines().last().unwrap().starts_with("inf,"));
    let report = std::fs::read_to_string(dir.path().join("report.txt")).unwrap();
    assert_eq!(stdout(&o), report);
}

#[test]
fn synth_ellipse_planar() {
    let dir = tempfile::tempdir().unwrap();
    let o = synth("ellipse", dir.path(), &["--mode", "planar"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let meta = metadata(dir.path());
    assert_eq!((meta["links"].as_u64(), meta["joints"].as_u64()), (Some(8), Some(10)));
}

#[test]
fn unbounded_curve_exits_with_curve_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = synth("unbounded", dir.path(), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("Unbounded at stage curve_load"), "{}", stderr(&o));
    assert!(!dir.path().join("linkage.json").exists());
}

#[test]
fn empty_samples_give_header_only_trace() {
    let dir = tempfile::tempdir().unwrap();
    let o = synth("segment", dir.path(), &["--samples", ""]);
    assert!(o.status.success(), "{}", stderr(&o));
    let trace = std::fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    assert_eq!(trace.lines().collect::<Vec<_>>(), vec![linkdraw::pipeline::TRACE_HEADER]);
}

#[test]
fn check_accepts_produced_document_and_rejects_other_curve() {
    let dir = tempfile::tempdir().unwrap();
    assert!(synth("cardioid", dir.path(), &[]).status.success());
    let doc = dir.path().join("linkage.json");
    let o = linkdraw(&["check", doc.to_str().unwrap(), spec("cardioid").to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("ok: 6 links, 7 joints"));
    let o = linkdraw(&["check", doc.to_str().unwrap(), spec("limacon").to_str().unwrap(), "--samples", "2,1/3"]);
    assert_eq!(o.status.code(), Some(5), "{}", stderr(&o));
    assert!(stderr(&o).contains("at stage verify"));
}

#[test]
fn factor_prints_factorization() {
    let o = linkdraw(&["factor", spec("segment").to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("degree d = 2, circularity c = 0"));
    assert_eq!(out.lines().filter(|l| l.starts_with('h')).count(), 3);
}

#[test]
fn bounds_output_and_parity_error() {
    let o = linkdraw(&["bounds", "4", "2"]);
    assert_eq!(stdout(&o), "links 6\njoints 7\n");
    let o = linkdraw(&["bounds", "2", "0"]);
    assert_eq!(stdout(&o), "links 8\njoints 10\n");
    let o = linkdraw(&["bounds", "3", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("InvalidDegreeParity at stage parse"));
}

#[test]
fn malformed_flags_are_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = synth("ellipse", dir.path(), &["--m0", "0,0,0,-2,0,0,-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("Parse at stage parse"));
    let o = synth("ellipse", dir.path(), &["--mode", "hyperbolic"]);
    assert_eq!(o.status.code(), Some(2));
    let o = synth("ellipse", dir.path(), &["--samples", "1,x"]);
    assert!(stderr(&o).contains("--samples[1]"), "{}", stderr(&o));
}

#[test]
fn seed_is_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for d in [&a, &b] {
        assert!(synth("viviani", d.path(), &["--mode", "generic", "--seed", "11"]).status.success());
    }
    for f in ["linkage.json", "trace.csv", "report.txt"] {
        let read = |d: &tempfile::TempDir| std::fs::read(d.path().join(f)).unwrap();
        assert_eq!(read(&a), read(&b), "{f}");
    }
}
