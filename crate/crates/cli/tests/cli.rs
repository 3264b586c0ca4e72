use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use jetforge_cli::json::parse_field;
use jetforge_cli::{poly_from_terms, JsonJetIdeal};

fn problem(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems").join(name)
}

fn run(args: &[&str]) -> (String, String, i32) {
    run_with_stdin(args, None)
}

fn run_with_stdin(args: &[&str], stdin: Option<&str>) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jetforge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn path(name: &str) -> String {
    problem(name).display().to_string()
}

#[test]
fn jetify_cusp_lists_both_levels() {
    let (out, _, code) = run(&["jetify", &path("cusp.jet"), "-m", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("F[0][0] (weight 0) = -x[0][2]^3 + x[0][1]^2"), "{out}");
    assert!(out.contains("F[0][1] (weight 1) = -3*x[0][2]^2*x[1][2] + 2*x[0][1]*x[1][1]"), "{out}");
    assert!(out.contains("2 nonzero generator(s) of 2"));
}

#[test]
fn jetify_double_point_over_f2() {
    let (out, _, code) = run(&["jetify", &path("frobenius_f2.jet"), "-m", "5"]);
    assert_eq!(code, 0);
    for (level, poly) in [(0, "x[0][1]^2"), (2, "x[1][1]^2"), (4, "x[2][1]^2")] {
        assert!(out.contains(&format!("F[0][{level}] (weight {level}) = {poly}\n")), "{out}");
    }
    for level in [1, 3, 5] {
        assert!(out.contains(&format!("F[0][{level}] = 0\n")), "{out}");
    }
    assert!(out.contains("vanishing (generator, level): (0, 1) (0, 3) (0, 5)"));

    let (short, _, _) = run(&["jetify", &path("frobenius_f2.jet"), "-m", "5", "--max-level", "2"]);
    assert!(short.contains("F[0][2]") && !short.contains("F[0][3]"));
}

#[test]
fn jetify_zero_ideal() {
    let (out, _, code) = run(&["jetify", &path("plane.jet"), "-m", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("zero ideal: X = A^2 and X_3 = A^8"), "{out}");
}

#[test]
fn json_round_trip_is_byte_identical() {
    for (file, m) in [("cusp.jet", "3"), ("umbrella.jet", "2"), ("frobenius_f2.jet", "5"), ("cusp_f5.jet", "4"), ("conic.jet", "2")] {
        let (out, _, code) = run(&["jetify", &path(file), "-m", m, "--json"]);
        assert_eq!(code, 0);
        let doc: JsonJetIdeal = serde_json::from_str(&out).unwrap();
        let field = parse_field(&doc.field).unwrap();
        let mut rebuilt = doc.clone();
        for g in &mut rebuilt.generators {
            let poly = poly_from_terms(field, &g.terms).unwrap();
            g.terms = jetforge_cli::json::terms_of(&poly);
        }
        let again = jetforge_cli::json::to_canonical_string(&rebuilt);
        assert_eq!(again, out, "{file}");
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", out);
    }
}

#[test]
fn smooth_exit_codes() {
    assert_eq!(run(&["smooth", &path("cusp.jet")]).2, 1);
    let (out, _, code) = run(&["smooth", &path("parabola.jet"), "-m", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: SMOOTH"));
    assert_eq!(run(&["smooth", &path("frobenius_f2.jet"), "-m", "1"]).2, 1);
    assert_eq!(run(&["smooth", &path("conic.jet"), "-m", "2"]).2, 0);
    let stuck = "field Q\nvars x y\ngen x + x^2 + y^2\ngen x + x*y + x^3\n";
    let (out, _, code) = run_with_stdin(&["smooth", "-", "-m", "1"], Some(stuck));
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("INCONCLUSIVE"));
}

#[test]
fn flatness_verdicts() {
    let (out, _, code) = run(&["flatness", &path("cusp.jet"), "-m", "0", "-p", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness F = F[0][1] = -3*x[0][2]^2*x[1][2] + 2*x[0][1]*x[1][1]"), "{out}");
    assert!(out.contains("verdict: NOT FLAT"));
    assert!(!out.contains("[FAIL]"));

    let (out, _, code) = run(&["flatness", &path("frobenius_f2.jet"), "-m", "2", "-p", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: NO WITNESS FOUND") && out.contains("non-reduced"), "{out}");

    let (out, _, code) = run(&["flatness", &path("line.jet"), "-m", "1", "-p", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("NO WITNESS FOUND"));

    let (out, _, code) = run(&["flatness", &path("cusp_f5.jet"), "-m", "1", "-p", "2", "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "NOT FLAT");
    assert_eq!(v["witness"]["witness"]["type"], "fiber_jump");
    assert_eq!(v["witness"]["witness"]["fiber_dim"], 2);
}

#[test]
fn refusals_and_errors_exit_with_3() {
    let (_, err, code) = run(&["flatness", &path("cusp_f5.jet"), "-m", "0", "-p", "2"]);
    assert_eq!(code, 3);
    assert!(err.contains("m = 0"), "{err}");
    let (_, _, code) = run(&["flatness", &path("cusp.jet"), "-m", "2", "-p", "2"]);
    assert_eq!(code, 3);
    let (_, err, code) = run_with_stdin(&["jetify", "-", "-m", "1"], Some("field Q\nvars x y\ngen x^2 - z\n"));
    assert_eq!(code, 3);
    assert!(err.contains("line 3, column 11") && err.contains("unknown variable"), "{err}");
    let (_, err, code) = run_with_stdin(&["smooth", "-"], Some("field Q\nvars x\ngen x + 1\n"));
    assert_eq!(code, 3);
    assert!(err.contains("origin"), "{err}");
    let (_, _, code) = run(&["tangent", "/nonexistent/file.jet"]);
    assert_eq!(code, 3);
}

#[test]
fn fiber_and_tangent() {
    let (out, _, code) = run(&["fiber", &path("cusp.jet"), "-m", "0", "-p", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("zero fiber ideal: the fiber is A^2"), "{out}");
    let (out, _, _) = run(&["fiber", &path("cusp.jet"), "-m", "0", "-p", "2"]);
    assert!(out.contains("F[0][2] restricted = x[1][1]^2"), "{out}");

    let (out, _, code) = run(&["tangent", &path("cusp.jet"), "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["fiber_dimension"].as_u64(), v["embedding_dimension"].as_u64(), v["dimension"].as_u64()), (Some(2), Some(2), Some(1)));
    let (out, _, code) = run(&["tangent", &path("parabola.jet")]);
    assert_eq!(code, 0);
    assert!(out.contains("dim of the fiber of X_1 -> X over 0: 1"));
}

#[test]
fn verify_supplied_and_constructed_witnesses() {
    let (out, _, code) = run(&["verify", &path("frobenius_f2.jet"), "-m", "0", "-p", "2", "--witness", "x[1][1]^2"]);
    assert_eq!(code, 0);
    assert!(out.contains("[FAIL] F in M R_m'"), "{out}");
    let (out, _, code) = run(&["verify", &path("node.jet"), "-m", "1", "-p", "2", "--verify-bound", "5"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("excluded modulo degree 5"));
    let (out, _, code) =
        run(&["verify", &path("cusp.jet"), "-m", "1", "-p", "2", "--witness", "2*x[0][1]*x[1][1] - 3*x[0][2]^2*x[1][2]"]);
    assert_eq!(code, 0);
    assert!(out.contains("[FAIL] initial form has weight > m"), "{out}");
}
