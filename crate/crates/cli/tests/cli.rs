use std::collections::BTreeSet;
use std::path::PathBuf;

use hopfdom_cli::{run, subcommand_names, Outcome, DISPATCH};
use serde_json::Value;

fn spec(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "specs", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn hopfdom(args: &[&str]) -> Outcome {
    run(std::iter::once("hopfdom").chain(args.iter().copied()))
}

fn report(args: &[&str]) -> Value {
    let out = hopfdom(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn verify_golden_b_instance() {
    let b6 = spec("b6.json");
    let r = report(&["verify", "--spec", &b6, "--samples", "100", "--seed", "7"]);
    assert_eq!(r["passed"], true);
    assert_eq!(r["suites"]["axioms"]["samples"], 100);
    let checks = r["suites"]["bdata"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn primitives_of_a11() {
    let r = report(&["primitives", "--spec", &spec("a11.json"), "--weight", "x^1", "--box", "4"]);
    assert_eq!(r["dim"], 2);
    assert_eq!(r["basis"], serde_json::json!(["1 - x", "z"]));
    assert_eq!(r["matches_prediction"], true);
}

#[test]
fn isomorphism_of_permuted_data() {
    let r = report(&["isomorphic", "--spec", &spec("b6.json"), "--spec2", &spec("b6_permuted.json")]);
    assert_eq!(r["isomorphic"], true);
    let r = report(&["isomorphic", "--spec", &spec("b6.json"), "--spec2", &spec("b6_other.json")]);
    assert_eq!(r["isomorphic"], false);
    assert!(r["certificate"].as_str().unwrap().contains("χ(1/9)"));
}

#[test]
fn reports_match_goldens_byte_for_byte() {
    let cases: [(&str, Vec<String>); 5] = [
        (
            "verify_a11.json",
            vec![
                "verify".into(),
                "--spec".into(),
                spec("a11.json"),
                "--samples".into(),
                "20".into(),
                "--seed".into(),
                "1".into(),
            ],
        ),
        (
            "verify_c3.json",
            vec![
                "verify".into(),
                "--spec".into(),
                spec("c3.json"),
                "--samples".into(),
                "20".into(),
                "--seed".into(),
                "1".into(),
            ],
        ),
        (
            "verify_b6.json",
            vec![
                "verify".into(),
                "--spec".into(),
                spec("b6.json"),
                "--samples".into(),
                "100".into(),
                "--seed".into(),
                "7".into(),
            ],
        ),
        (
            "primitives_a11.json",
            vec![
                "primitives".into(),
                "--spec".into(),
                spec("a11.json"),
                "--weight".into(),
                "x^1".into(),
                "--box".into(),
                "4".into(),
            ],
        ),
        ("recognize_b6.json", vec!["recognize".into(), "--spec".into(), spec("b6.json")]),
    ];
    for (file, args) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = hopfdom(&args);
        let second = hopfdom(&args);
        assert_eq!(first, second, "{file}: rerun differs");
        assert_eq!(first.stdout, golden(file), "{file}");
    }
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["takeuchi", "--spec", &spec("z6.json"), "--spec2", &spec("z.json"), "--samples", "30", "--seed", "5"];
    let first = hopfdom(&args);
    assert_eq!(first.code, 0, "{}", first.stderr);
    assert_eq!(first, hopfdom(&args));
    let other = hopfdom(&[
        "takeuchi",
        "--spec",
        &spec("z6.json"),
        "--spec2",
        &spec("z.json"),
        "--samples",
        "30",
        "--seed",
        "6",
    ]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn spec_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("hopfdom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = [
        ("unknown.json", r#"{"algebra":{"family":"affine_c","n":3,"extra":1}}"#),
        ("toplevel.json", r#"{"algebra":{"family":"affine_c","n":3},"comment":"x"}"#),
        ("scalar.json", r#"{"algebra":{"family":"affine_a","n":1,"q":"zeta("}}"#),
        ("family.json", r#"{"algebra":{"family":"type_z"}}"#),
        (
            "data.json",
            r#"{"algebra":{"family":"type_b","group":{"cyclic":6},"primes":[2,3],"character":{"crt":{"2":"-1","3":"1"}}}}"#,
        ),
        ("syntax.json", r#"{"algebra":"#),
    ];
    for (name, text) in bad {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        let out = hopfdom(&["construct", "--spec", path.to_str().unwrap()]);
        assert_eq!(out.code, 2, "{name}");
        assert!(out.stdout.is_empty() && !out.stderr.is_empty(), "{name}");
    }
    assert_eq!(hopfdom(&["construct", "--spec", "/nonexistent/spec.json"]).code, 2);
    assert_eq!(hopfdom(&["nonsense"]).code, 2);
    assert_eq!(hopfdom(&["recognize", "--spec", &spec("a11.json")]).code, 2);
}

#[test]
fn dispatch_table_covers_every_operation_once() {
    let names: Vec<String> = subcommand_names().into_iter().filter(|n| n != "help").collect();
    let table: Vec<&str> = DISPATCH.iter().map(|(n, _)| *n).collect();
    assert_eq!(names, table);
    let ops: Vec<&str> = DISPATCH.iter().flat_map(|(_, ops)| ops.iter().copied()).collect();
    let unique: BTreeSet<&str> = ops.iter().copied().collect();
    assert_eq!(unique.len(), ops.len(), "an operation is listed twice");
    let expected: BTreeSet<&str> = [
        "make_group_algebra",
        "make_enveloping",
        "make_a",
        "make_b",
        "make_c",
        "make_affine_a",
        "make_affine_b",
        "make_affine_c",
        "prime_tower",
        "presentation",
        "verify_axioms",
        "validate_bdata",
        "find_grouplikes",
        "find_skew_primitives",
        "expected_skew_primitives",
        "recognize_affine",
        "chain_stage",
        "is_isomorphic",
        "growth_dimensions",
        "tangent_dimension",
        "takeuchi_maps",
        "kernel_of_difference",
    ]
    .into_iter()
    .collect();
    assert_eq!(unique, expected);
}

#[test]
fn every_subcommand_runs() {
    let (a11, b6, tower, z6, z) =
        (spec("a11.json"), spec("b6.json"), spec("tower.json"), spec("z6.json"), spec("z.json"));
    let runs: Vec<Vec<&str>> = vec![
        vec!["construct", "--spec", &b6],
        vec!["verify", "--spec", &a11, "--samples", "5"],
        vec!["grouplikes", "--spec", &b6, "--box", "2"],
        vec!["primitives", "--spec", &b6, "--weight", "x^(1/2)", "--box", "3"],
        vec!["recognize", "--spec", &tower],
        vec!["stage", "--spec", &tower, "--stage", "3"],
        vec!["isomorphic", "--spec", &b6, "--spec2", &b6],
        vec!["growth", "--spec", &a11, "--nmax", "8"],
        vec!["tangent", "--spec", &b6],
        vec!["takeuchi", "--spec", &z6, "--spec2", &z, "--samples", "5"],
    ];
    let mut seen = BTreeSet::new();
    for args in runs {
        let r = report(&args);
        assert!(r.is_object());
        seen.insert(args[0]);
    }
    assert_eq!(seen.len(), DISPATCH.len());
    let r = report(&["growth", "--spec", &a11, "--nmax", "8"]);
    let dims: Vec<u64> = r["growth"]["dims"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    assert_eq!(dims, (0..=8u64).map(|n| (n + 1) * (n + 1)).collect::<Vec<_>>());
    let r = report(&["stage", "--spec", &tower, "--stage", "3"]);
    assert_eq!(r["result"]["stage"], 3);
    let r = report(&["recognize", "--spec", &tower]);
    assert_eq!(r["recognition"]["m"], 2310);
}
