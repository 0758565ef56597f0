use std::fs;
use std::process::{Command, Output};

fn rectlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn counts(o: &Output) -> Vec<u64> {
    stdout(o).lines().filter(|l| !l.starts_with('#')).map(|l| l.split('\t').nth(1).unwrap().parse().unwrap()).collect()
}

#[test]
fn count_examples() {
    let o = rectlab(&["count", "--class", "strong:avoid=td", "--n", "1..5"]);
    assert!(o.status.success());
    assert_eq!(counts(&o), [1, 2, 5, 15, 51]);
    let o = rectlab(&["count", "--class", "weak:avoid=td,tu", "--n", "4"]);
    assert_eq!(counts(&o), [8]);
    let o = rectlab(&["count", "--class", "strong:avoid=td", "--n", "5..9", "--method", "formula"]);
    let universe =
        rectlab(&["count", "--class", "strong:avoid=td", "--n", "5..9", "--method", "universe", "--cap", "9"]);
    assert_eq!(counts(&o), counts(&universe));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--class", "medium:avoid=td"][..],
        &["count", "--class", "strong", "--n", "12"],
        &["verify", "--suite", "99"],
        &["map", "tau", "--input", "[0,2]"],
        &["map", "beta", "--inverse", "--input", "[1,2]"],
        &["nonsense"],
    ] {
        assert_eq!(rectlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_small() {
    let o = rectlab(&["verify", "--suite", "elementary,catalan,9", "--max-n", "5"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 3);
    let o = rectlab(&["verify", "--suite", "all", "--max-n", "4", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 11);
}

#[test]
fn map_and_trace_round_trip() {
    let o = rectlab(&["map", "tau7", "--input", "d3'"]);
    assert_eq!(stdout(&o).trim(), "[0,0,1]");
    let o = rectlab(&["map", "sigma", "--input", "d3"]);
    assert_eq!(stdout(&o).trim(), "[0,0,2]");
    let drawing = stdout(&rectlab(&["map", "sigma", "--inverse", "--input", "[0,0,2]"]));
    let o = rectlab(&["map", "sigma", "--input", drawing.trim()]);
    assert_eq!(stdout(&o).trim(), "[0,0,2]");
    let trace = stdout(&rectlab(&["trace", "--tree", "t2", "--input", "[0,0,2]"]));
    let replay = stdout(&rectlab(&["trace", "--tree", "t2", "--replay", trace.trim()]));
    let v: serde_json::Value = serde_json::from_str(&replay).unwrap();
    assert_eq!(v["sequence"], serde_json::json!([0, 0, 2]));
    let o = rectlab(&[
        "map",
        "nw-word",
        "--input",
        stdout(&rectlab(&["map", "nw-word", "--inverse", "--input", "NWWN"])).trim(),
    ]);
    assert_eq!(stdout(&o).trim(), "\"NWWN\"");
}

#[test]
fn render_is_deterministic() {
    let a = rectlab(&["render", "--input", "v2", "--format", "svg"]);
    let b = rectlab(&["render", "--input", "v2", "--format", "svg"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).matches("<rect ").count(), 2);
    let o = rectlab(&["render", "--input", "d3", "--joints", "--labels", "nwse"]);
    assert!(stdout(&o).contains('⊤'));
}

#[test]
fn oeis_offline_uses_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let o = rectlab(&["oeis", "A279555", "--offline", "--cache-dir", cache, "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(3));

    fs::create_dir_all(dir.path().join("oeis")).unwrap();
    fs::write(dir.path().join("oeis/b279555.txt"), "# hand-made\n1 1\n2 2\n3 5\n4 15\n").unwrap();
    let o = rectlab(&["oeis", "A279555", "--offline", "--cache-dir", cache, "--max-n", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("index n+0"));

    fs::write(dir.path().join("oeis/b279555.txt"), "0 1\n1 2\n2 5\n3 15\n").unwrap();
    let o = rectlab(&["oeis", "279555", "--offline", "--cache-dir", cache, "--max-n", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("index n-1"));

    fs::write(dir.path().join("oeis/b279555.txt"), "1 1\n2 2\n3 5\n4 16\n").unwrap();
    let o = rectlab(&["oeis", "A279555", "--offline", "--cache-dir", cache, "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch at n=4"));

    let o = Command::new(env!("CARGO_BIN_EXE_rectlab"))
        .args(["oeis", "A279555", "--offline", "--class", "strong:avoid=td", "--max-n", "3"])
        .env("RECTLAB_CACHE_DIR", cache)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
}
