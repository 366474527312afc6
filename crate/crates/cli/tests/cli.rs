use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_youngspan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn face_counts_line() {
    assert_eq!(
        stdout(&["faces", "--n", "6", "--count-only"]),
        "v=0:32 v=1:48 v=2:18 v=3:1\n"
    );
    assert_eq!(
        stdout(&["faces", "--n", "5", "--dim", "2", "--count-only"]),
        "v=2:5\n"
    );
}

#[test]
fn vertex_json() {
    let text = stdout(&[
        "vertex",
        "--n",
        "9",
        "--partition",
        "5,3,3,2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["partition"], serde_json::json!([5, 3, 3, 2]));
    assert_eq!(v["f"][5], 7);
    assert_eq!(v["f"][8], 11);
}

#[test]
fn empty_partition_spelling() {
    let text = stdout(&["vertex", "--n", "4", "--partition", "0"]);
    assert!(
        text.starts_with("partition 0\nf         0 3 4 3\n"),
        "{text}"
    );
}

#[test]
fn enumerate_count_and_list() {
    assert_eq!(
        stdout(&["enumerate", "--n", "16", "--count-only"]),
        "32768\n"
    );
    let list = stdout(&["enumerate", "--n", "3"]);
    assert_eq!(list.lines().count(), 4);
    assert!(list.lines().any(|l| l == "0"));
}

#[test]
fn verify_with_oracle() {
    let text = stdout(&["verify", "--n", "5", "--oracle"]);
    assert!(
        text.contains("16 vertices matched, 20 edges, 5 two-faces"),
        "{text}"
    );
    let json = stdout(&["verify", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn skeleton_json_small() {
    let text = stdout(&["skeleton", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["edges"], serde_json::json!([[0, 1]]));
    assert_eq!(v["vertices"][1]["f"], serde_json::json!([1, 0]));
}

#[test]
fn projection_origin_orbit() {
    let text = stdout(&["project", "--n", "9"]);
    assert!(
        text.ends_with("at origin: 3,3,3; 4,3,2,1; 4,4,1,1,1; 5,2,2,2\n"),
        "{text}"
    );
}

#[test]
fn svg_written_and_stable() {
    let dir = std::env::temp_dir().join(format!("youngspan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n6.svg");
    let p = path.to_str().unwrap();
    stdout(&["project", "--n", "6", "--svg", p, "--scale", "50"]);
    let first = std::fs::read_to_string(&path).unwrap();
    stdout(&["project", "--n", "6", "--svg", p, "--scale", "50"]);
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());
    assert_eq!(first.matches("<circle").count(), 32);
    assert_eq!(first.matches("<line").count(), 48);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn continuous_table() {
    let text = stdout(&["continuous", "--n", "9", "--partition", "5,3,3,2"]);
    assert_eq!(
        text,
        "t -4 -3 -2 -1  0  1  2  3  4\nL  4  5  6  5  6  5  4  5  6\n"
    );
    let a = stdout(&["continuous", "--samples", "30", "--seed", "3"]);
    assert_eq!(a, stdout(&["continuous", "--samples", "30", "--seed", "3"]));
}

#[test]
fn continuous_profile_file() {
    let dir = std::env::temp_dir().join(format!("youngspan-prof-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    std::fs::write(
        &path,
        r#"{"u":"-2/3","breakpoints":[["-2/3","2/3"],["-1/3","1"],["1/3","1/3"]]}"#,
    )
    .unwrap();
    let text = stdout(&["continuous", "--profile", path.to_str().unwrap()]);
    assert_eq!(text, "zero of Lambda at 2r, r = 1/3\nmin F = 0\n");
    std::fs::write(&path, r#"{"u":"0","breakpoints":[["0","1"],["1","1"]]}"#).unwrap();
    assert_eq!(
        run(&["continuous", "--profile", path.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["enumerate", "--n", "17"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--n", "9", "--oracle"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["vertex", "--n", "4", "--partition", "3,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["vertex", "--n", "4", "--partition", "1,2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["faces", "--n", "5"]).status.code(), Some(1));
    let out = run(&["project", "--n", "5", "--svg", "/nonexistent-dir/x.svg"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        run(&["continuous", "--profile", "/nonexistent-dir/p.json"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
