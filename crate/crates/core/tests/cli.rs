use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn invsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invsemi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn builtin_then_analyze_round_trip() {
    let gens = scratch("rook3.json");
    let out = invsemi(&["builtin", "rook-3", "--output", path_str(&gens)]);
    assert!(out.status.success());

    let report = scratch("rook3-report.json");
    let out = invsemi(&[
        "analyze",
        "--input",
        path_str(&gens),
        "--output",
        path_str(&report),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("verdict: PASS"), "{stdout}");

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["table"]["size"], 34);
    assert_eq!(json["conjugacy"]["counts"]["structural"], 7);
    assert_eq!(json["conjugacy"]["counts"]["g_conjugacy"], 10);
    assert_eq!(json["verdict"]["status"], "PASS");
    assert_eq!(json["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn reports_are_byte_identical() {
    let a = scratch("det-a.json");
    let b = scratch("det-b.json");
    for p in [&a, &b] {
        let out = invsemi(&[
            "analyze",
            "--builtin",
            "random-4",
            "--seed",
            "11",
            "--field",
            "fp:13",
            "--output",
            path_str(p),
        ]);
        assert!(out.status.code().is_some_and(|c| c <= 1));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let json: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(json["input"]["seed"], 11);
}

#[test]
fn exit_codes() {
    // Input error.
    let missing = invsemi(&["analyze", "--input", "/nonexistent/generators.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let bad_field = invsemi(&["analyze", "--builtin", "rook-2", "--field", "fp:4"]);
    assert_eq!(bad_field.status.code(), Some(2));
    let unknown = invsemi(&["builtin", "tree-3"]);
    assert_eq!(unknown.status.code(), Some(2));

    // Guard failures.
    let guard = invsemi(&["analyze", "--builtin", "rook-3", "--field", "fp:3"]);
    assert_eq!(guard.status.code(), Some(3));
    let plain = scratch("plain-chain.json");
    std::fs::write(
        &plain,
        r#"{"degree": 3, "generators": [[null, 0, 1]], "close_under_inverse": false}"#,
    )
    .unwrap();
    let non_inverse = invsemi(&["analyze", "--input", path_str(&plain)]);
    assert_eq!(non_inverse.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&non_inverse.stderr).contains("not an inverse semigroup"));

    // Resource cap.
    let capped = invsemi(&["analyze", "--builtin", "rook-4", "--cap", "50"]);
    assert_eq!(capped.status.code(), Some(4));
}

#[test]
fn verify_reports_each_check() {
    let report = scratch("verify-sym4.json");
    let out = invsemi(&[
        "verify",
        "--builtin",
        "sym-4",
        "--output",
        path_str(&report),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["passed"], true);
    let checks = json["checks"].as_array().unwrap();
    assert!(checks.len() > 20);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn supplied_representations_file() {
    // Klein four-group: no built-in irreducibles, four supplied characters.
    let gens = scratch("klein.json");
    std::fs::write(
        &gens,
        r#"{"degree": 4, "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]}"#,
    )
    .unwrap();
    let bare = invsemi(&["analyze", "--input", path_str(&gens)]);
    assert_eq!(bare.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&bare.stdout).contains("UNDETERMINED"));

    let json = scratch("klein-report.json");
    let out = invsemi(&[
        "analyze",
        "--input",
        path_str(&gens),
        "--skip-reps",
        "--output",
        path_str(&json),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let elements: Vec<String> = report["table"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let id = |lit: &str| elements.iter().position(|e| e == lit).unwrap();
    let (e, x, y, xy) = (
        id("[0,1,2,3]"),
        id("[1,0,3,2]"),
        id("[2,3,0,1]"),
        id("[3,2,1,0]"),
    );
    let character = |sx: i32, sy: i32| {
        format!(
            r#"{{"degree": 1, "images": {{"{e}": [[1]], "{x}": [[{sx}]], "{y}": [[{sy}]], "{xy}": [[{}]]}}}}"#,
            sx * sy
        )
    };
    let reps = scratch("klein-reps.json");
    std::fs::write(
        &reps,
        format!(
            r#"{{"{e}": [{}, {}, {}, {}]}}"#,
            character(1, 1),
            character(1, -1),
            character(-1, 1),
            character(-1, -1)
        ),
    )
    .unwrap();
    let out = invsemi(&[
        "analyze",
        "--input",
        path_str(&gens),
        "--reps",
        path_str(&reps),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: PASS"));

    std::fs::write(
        &reps,
        format!(r#"{{"{e}": [{}, {}]}}"#, character(1, 1), character(1, 1)),
    )
    .unwrap();
    let out = invsemi(&[
        "analyze",
        "--input",
        path_str(&gens),
        "--reps",
        path_str(&reps),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
