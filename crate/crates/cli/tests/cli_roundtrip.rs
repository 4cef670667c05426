//! End-to-end checks of the binary: schema conformance, determinism,
//! exit codes, corpus round-trips, and output plumbing.

use std::process::{Command, Output};

use corelab::corpus;
use corelab::report::verdict_exit;
use corelab::schema::{report_schema, validate};
use corelab_core::engine::Verdict;
use serde_json::Value;

fn corelab_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corelab"))
        .args(args)
        .env_remove("CORELAB_SEED")
        .output()
        .expect("binary spawns")
}

fn json_of(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal exits")
}

#[test]
fn reports_validate_against_the_shipped_schema() {
    let schema = report_schema();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["gb", "k[x:1,y:1]", "x^2", "x*y + y^2", "--nf", "y^3"],
        vec!["hilbert", "k[a:2,b:3]/(b^2 - a^3)", "--up-to", "8"],
        vec!["invariants", "k[x:1,y:1]/(x*y)"],
        vec![
            "verify", "standard", "k[x:1,y:1]", "--n", "1", "--reduced",
            "--samples", "24", "--window", "4",
        ],
        vec![
            "grcore", "k[a:2,b:3]/(b^2 - a^3)", "--n", "4",
            "--samples", "24", "--window", "4",
        ],
        vec![
            "charscan", "k[x:1,y:1]/(x*y)", "--n", "2",
            "--primes", "5,32003", "--rationals", "--samples", "16", "--window", "4",
        ],
    ];
    for args in invocations {
        let out = corelab_bin(&args);
        assert_eq!(exit_code(&out), 0, "{args:?} failed: {out:?}");
        let report = json_of(&out);
        let errors = validate(&report, &schema);
        assert!(errors.is_empty(), "{args:?} schema violations: {errors:?}");
    }
}

#[test]
fn results_are_byte_identical_for_a_fixed_seed() {
    let args = [
        "grcore", "k[a:2,b:3]/(b^2 - a^3)", "--n", "4", "--mode", "both",
        "--seed", "9", "--samples", "24", "--window", "4",
    ];
    let first = json_of(&corelab_bin(&args));
    let second = json_of(&corelab_bin(&args));
    assert_eq!(
        serde_json::to_string(&first["results"]).unwrap(),
        serde_json::to_string(&second["results"]).unwrap(),
    );
    // The seed is threaded into the meta block verbatim.
    assert_eq!(first["meta"]["seed"], serde_json::json!(9));
}

#[test]
fn the_seed_environment_variable_is_a_fallback_not_an_override() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_corelab"))
        .args(["gb", "k[x:1,y:1]", "x^2"])
        .env("CORELAB_SEED", "41")
        .output()
        .expect("binary spawns");
    assert_eq!(json_of(&with_env)["meta"]["seed"], serde_json::json!(41));

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_corelab"))
        .args(["gb", "k[x:1,y:1]", "x^2", "--seed", "5"])
        .env("CORELAB_SEED", "41")
        .output()
        .expect("binary spawns");
    assert_eq!(json_of(&flag_wins)["meta"]["seed"], serde_json::json!(5));
}

#[test]
fn exit_codes_separate_usage_engine_and_verdict_failures() {
    // Clean run → 0.
    let ok = corelab_bin(&["hilbert", "k[x:1,y:1]"]);
    assert_eq!(exit_code(&ok), 0);

    // Engine rejection (target not m-primary) → 2.
    let engine = corelab_bin(&[
        "grcore", "k[a:2,b:3,u:2]/(b^2 - a^3)", "--n", "3", "--samples", "8",
    ]);
    assert_eq!(exit_code(&engine), 2);
    let stderr = String::from_utf8_lossy(&engine.stderr);
    assert!(stderr.contains("N = 3"), "unhelpful message: {stderr}");

    // Unknown flag → 3.
    assert_eq!(exit_code(&corelab_bin(&["--definitely-not-a-flag"])), 3);
    // Unparsable ring → 3.
    assert_eq!(exit_code(&corelab_bin(&["hilbert", "k[x:0]"])), 3);
    // Bad field syntax → 3.
    assert_eq!(
        exit_code(&corelab_bin(&["hilbert", "k[x:1]", "--field", "p=6"])),
        3
    );
    // Missing corpus file → 3.
    assert_eq!(
        exit_code(&corelab_bin(&["corpus", "run", "/nonexistent.corpus"])),
        3
    );

    // A refuted verdict maps to exit 1; the mapping itself is pure.
    let ring = corelab_core::PresentedRing::new(
        corelab_core::FieldSpec::Rationals,
        vec![("x".to_string(), 1)],
        Vec::new(),
    )
    .unwrap();
    let refuted = Verdict::Refuted {
        witness: ring.ambient().parse("x").unwrap(),
        violated: String::new(),
    };
    assert_eq!(verdict_exit(&refuted), 1);
    assert_eq!(
        verdict_exit(&Verdict::Inconclusive {
            reason: String::new()
        }),
        2
    );
}

#[test]
fn corpus_files_round_trip_through_their_canonical_form() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/desk.corpus");
    let text = std::fs::read_to_string(path).expect("desk corpus exists");
    let parsed = corpus::parse(&text, "desk").expect("desk corpus parses");
    assert!(parsed.experiments.len() >= 12, "sweep shrank unexpectedly");

    let canonical = corpus::render(&parsed);
    let reparsed = corpus::parse(&canonical, "canonical").expect("canonical form parses");

    assert_eq!(parsed.experiments, reparsed.experiments);
    assert_eq!(parsed.rings.len(), reparsed.rings.len());
    for ((name_a, spec_a), (name_b, spec_b)) in parsed.rings.iter().zip(reparsed.rings.iter()) {
        assert_eq!(name_a, name_b);
        assert_eq!(spec_a.recipe, spec_b.recipe, "ring {name_a}");
        assert_eq!(spec_a.field_override, spec_b.field_override, "ring {name_a}");
    }
    // The canonical form is a fixpoint of parse ∘ render.
    assert_eq!(canonical, corpus::render(&reparsed));
}

#[test]
fn corpus_check_reports_block_counts() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/desk.corpus");
    let out = corelab_bin(&["corpus", "check", path]);
    assert_eq!(exit_code(&out), 0);
    let report = json_of(&out);
    assert_eq!(report["results"]["experiments"], serde_json::json!(17));
    assert_eq!(report["results"]["rings"], serde_json::json!(10));
}

#[test]
fn reports_can_be_written_to_a_file() {
    let dir = std::env::temp_dir().join(format!("corelab-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = corelab_bin(&[
        "gb", "k[x:1,y:1]", "x^2",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty(), "stdout should stay quiet with --out");
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["results"]["reduced_basis"], serde_json::json!(["x^2"]));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn the_text_format_is_a_flat_readable_dump() {
    let out = corelab_bin(&[
        "verify", "standard", "k[x:1,y:1]", "--n", "1", "--reduced",
        "--samples", "24", "--window", "4", "--format", "text",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("kind: consistent"), "missing verdict: {text}");
    assert!(text.contains("formula: core(m^N) = m^(N*d + a + 1)"));
    assert!(!text.contains('{'), "text format leaked JSON: {text}");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&corelab_bin(&["--help"])), 0);
    assert_eq!(exit_code(&corelab_bin(&["--version"])), 0);
    assert_eq!(exit_code(&corelab_bin(&["verify", "--help"])), 0);
}
