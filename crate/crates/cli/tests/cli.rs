use std::path::{Path, PathBuf};
use std::process::Command as Process;

use hopfext_cli::{run_command, Command, Flags, Format, InputDocument, Report};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Run the binary; returns exit code, stdout, stderr.
fn hopfext(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_hopfext")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_doc(dir: &tempfile::TempDir, name: &str, doc: &InputDocument) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, doc.to_json()).unwrap();
    path.to_str().unwrap().to_string()
}

fn load(name: &str) -> InputDocument {
    InputDocument::parse(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

#[test]
fn verify_kp8_passes() {
    let (code, out, _) = hopfext(&["verify", data("e_kp8.json").to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("verify: pass"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn type_of_e_triv() {
    let (code, out, _) = hopfext(&["type", data("e_triv.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("coalgebra type: (1, 4)\n"), "{out}");
}

#[test]
fn failing_verify_names_axiom_and_basis() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = load("e_kp8.json");
    let tau = doc.tau.as_mut().unwrap();
    tau[1][1][2] = (tau[1][1][2] + 2) % 4;
    let path = write_doc(&dir, "mutant.json", &doc);
    let (code, out, _) = hopfext(&["verify", &path]);
    assert_eq!(code, 1, "{out}");
    let fail = out.lines().find(|l| l.contains("[FAIL]")).unwrap();
    assert!(fail.contains("at (e_"), "{fail}");
    let (_, structured, _) = hopfext(&["verify", "--format", "structured", &path]);
    let report: Report = serde_json::from_str(&structured).unwrap();
    let failed = report.checks.iter().find(|c| c.status == hopfext_cli::CheckStatus::Fail).unwrap();
    assert!(["coassociativity", "comultiplication_is_multiplicative"].contains(&failed.name.as_str()));
    assert!(failed.witness.as_ref().unwrap().contains("e_"));
}

#[test]
fn classify_rejections_name_the_condition() {
    let (code, out, _) = hopfext(&["classify", data("z2cubed_degenerate_triple.json").to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("[FAIL] tau_nondegenerate"), "{out}");

    // E_16 with τ_b trivial; on Z_2 × Z_2 a degenerate τ_x is cohomologically
    // trivial, so the failure is reported before the nondegeneracy check.
    let dir = tempfile::tempdir().unwrap();
    let mut doc = load("e16_triple.json");
    let tau = doc.tau.as_mut().unwrap();
    tau[3] = tau[2].clone();
    tau[2] = vec![vec![0; 4]; 4];
    let path = write_doc(&dir, "e16_mutant.json", &doc);
    let (code, out, _) = hopfext(&["classify", &path]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("[FAIL] hopf_axioms"), "{out}");
    assert!(out.contains("[skip] tau_nondegenerate"), "{out}");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"a\": [2],\n  \"f\": {\"cyclic\": 2},\n  \"sigma\": nope\n}").unwrap();
    let (code, _, err) = hopfext(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4"), "{err}");

    let mut doc = load("e_kp8.json");
    doc.tau.as_mut().unwrap()[1][3][3] = 4;
    let path = write_doc(&dir, "range.json", &doc);
    let (code, _, err) = hopfext(&["verify", &path]);
    assert_eq!(code, 2);
    assert!(err.contains("tau[1][3][3] = 4"), "{err}");

    let (code, _, err) = hopfext(&["classify", data("e_kp8.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("triple"), "{err}");

    let (code, _, _) = hopfext(&["verify", "/nonexistent/doc.json"]);
    assert_eq!(code, 2);
}

#[test]
fn truncated_enumeration_exits_3() {
    let path = data("klein_z6_rotation.json");
    let (code, out, _) = hopfext(&["enumerate", "--budget", "1", path.to_str().unwrap()]);
    assert_eq!(code, 3, "{out}");
    let (code, _, _) = hopfext(&["enumerate", "--max-order", "8", path.to_str().unwrap()]);
    assert_eq!(code, 3);
}

#[test]
fn enumerated_triples_classify_as_a4() {
    let doc = load("klein_z6_rotation.json");
    let r = run_command(Command::Enumerate, &doc, &Flags::default()).unwrap();
    assert!(r.passed());
    let triples: Vec<InputDocument> = serde_json::from_value(r.artifacts["triples"].clone()).unwrap();
    assert!(!triples.is_empty());
    for t in &triples {
        let c = run_command(Command::Classify, t, &Flags::default()).unwrap();
        assert!(c.passed(), "{:?}", c.checks);
        assert_eq!(c.artifacts["coalgebra_type"], "(1, 12; 2, 3)");
        assert_eq!(c.artifacts["grouplikes"]["order"], 12);
    }
}

#[test]
fn grouplikes_of_kp8() {
    let r = run_command(Command::Grouplikes, &load("e_kp8.json"), &Flags::default()).unwrap();
    assert!(r.passed());
    let g = &r.artifacts["grouplikes"];
    assert_eq!(g["elements"].as_array().unwrap().len(), 4);
    assert_eq!(g["abelian_invariants"], serde_json::json!([2, 2]));
    assert!(g["elements"].as_array().unwrap().iter().all(|e| e["x"] == 0));
}

#[test]
fn modulus_flag_embeds_cocycles() {
    let flags = Flags {
        modulus: Some(8),
        ..Flags::default()
    };
    let r = run_command(Command::Type, &load("e_kp8.json"), &flags).unwrap();
    assert_eq!(r.artifacts["coalgebra_type"], "(1, 4; 2, 1)");
    let bad = Flags {
        modulus: Some(6),
        ..Flags::default()
    };
    assert_eq!(run_command(Command::Verify, &load("e_kp8.json"), &bad).unwrap_err().exit_code(), 2);
}

#[test]
fn ty_on_kp8_triple() {
    let r = run_command(Command::Ty, &load("kp8_triple.json"), &Flags::default()).unwrap();
    assert!(r.passed(), "{:?}", r.checks);
    assert_eq!(r.checks.len(), 5);
    let e = run_command(Command::Ty, &load("e16_triple.json"), &Flags::default()).unwrap_err();
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn documents_round_trip() {
    for name in ["e_triv.json", "e_kp8.json", "e_16.json", "kp8_triple.json", "klein_z6_rotation.json"] {
        let doc = load(name);
        let again = InputDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(again, doc, "{name}");
    }
}

/// Set `UPDATE_GOLDEN=1` to rewrite the golden files.
#[test]
fn golden_structured_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for stem in ["e_triv", "e_kp8", "e_16"] {
        let doc = load(&format!("{stem}.json"));
        for cmd in [Command::Verify, Command::Grouplikes, Command::Type, Command::Fusion] {
            let r = run_command(cmd, &doc, &Flags::default()).unwrap();
            let text = r.emit(Format::Structured);
            let again = run_command(cmd, &doc, &Flags::default()).unwrap().emit(Format::Structured);
            assert_eq!(text, again, "{stem} {}: not deterministic", cmd.name());
            let back: Report = serde_json::from_str(&text).unwrap();
            assert_eq!(back.emit(Format::Structured), text);
            let path = golden(&format!("{stem}.{}.json", cmd.name()));
            if update {
                std::fs::create_dir_all(path.parent().unwrap()).unwrap();
                std::fs::write(&path, &text).unwrap();
            }
            let expected = std::fs::read_to_string(&path)
                .unwrap_or_else(|_| panic!("missing {}; run with UPDATE_GOLDEN=1", path.display()));
            assert_eq!(text, expected, "{} changed", path.display());
        }
    }
}

#[test]
fn schema_lists_exactly_the_document_fields() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/input-schema.json");
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let mut documented: Vec<&str> = schema["properties"].as_object().unwrap().keys().map(String::as_str).collect();
    documented.sort_unstable();
    let mut full = load("e_kp8.json");
    full.left = Some(vec![]);
    full.right = Some(vec![]);
    full.action = Some(vec![]);
    full.sigma = Some(vec![]);
    let value = serde_json::to_value(&full).unwrap();
    let mut fields: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
    fields.sort_unstable();
    assert_eq!(documented, fields);
}
