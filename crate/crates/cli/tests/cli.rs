use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn unital(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unital")).args(args).env_remove("UNITAL_MAX_CANDIDATES").output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn every_command_succeeds_on_the_corpus() {
    for file in ["term.cat", "ind2.cat", "poset2.cat", "z2eh.cat", "xor2.cat", "min2_disc.cat"] {
        let f = fixture(file);
        for cmd in ["validate", "units", "unit-cat", "axioms", "kelly-audit", "monoids", "fair"] {
            let out = unital(&[cmd, path(&f)]);
            assert_eq!(out.status.code(), Some(0), "{cmd} {file}: {}", String::from_utf8_lossy(&out.stderr));
            let r = report(&out);
            assert_eq!(r["command"], cmd);
            assert_eq!(r["status"], "ok");
        }
    }
}

#[test]
fn corrupted_fixture_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("z2eh.cat")).unwrap().replace("compose s s = id_E", "compose s s = s");
    let bad = dir.path().join("bad.cat");
    std::fs::write(&bad, text).unwrap();
    let out = unital(&["validate", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["status"], "invalid_input");
    let cat = &r["categories"][0];
    assert_eq!(cat["valid"], false);
    assert!(!cat["violations"].as_array().unwrap().is_empty());
    // semantic commands refuse invalid input
    assert_eq!(unital(&["units", path(&bad)]).status.code(), Some(1));
}

#[test]
fn units_on_z2eh() {
    let r = report(&unital(&["units", path(&fixture("z2eh.cat")), "--category", "z2eh"]));
    let cat = &r["categories"][0];
    assert_eq!(cat["saavedra_units"], serde_json::json!(["(E,id_E)", "(E,s)"]));
    assert_eq!(cat["unit_category"]["contractible"], true);
    assert_eq!(cat["unit_category"]["objects"], 2);
}

#[test]
fn unit_cat_connects_the_two_units_of_z2eh_by_s() {
    let r = report(&unital(&["unit-cat", path(&fixture("z2eh.cat"))]));
    let canonical = r["categories"][0]["canonical_morphisms"].as_array().unwrap().clone();
    let between = canonical.iter().find(|c| c["from"] == "(E,id_E)" && c["to"] == "(E,s)").unwrap();
    assert_eq!(between["morphism"], "s");
}

#[test]
fn derive_reports_the_lr_form() {
    let out = unital(&["derive", path(&fixture("z2eh.cat")), "--unit", "E:s"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["lr"]["lambda"]["E"], "s");
    assert_eq!(r["roundtrip"], true);
    let bad = unital(&["derive", path(&fixture("z2eh.cat")), "--unit", "E"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(report(&bad)["status"], "invalid_input");
}

#[test]
fn zero_functor_is_lax_but_not_strong() {
    let r = report(&unital(&["functor-audit", path(&fixture("zero_functor.cat"))]));
    let f = &r["functors"][0];
    assert_eq!(f["phi2_iso"], true);
    assert_eq!(f["declared_phi0"]["saavedra_lax"], true);
    assert_eq!(f["declared_phi0"]["lr_lax"], true);
    assert_eq!(f["declared_phi0"]["saavedra_strong"], false);
    assert_eq!(f["declared_phi0"]["phi0_iso"], false);
    assert_eq!(f["strong_functor_with_non_iso_lax_compatibility"], true);
}

#[test]
fn lift_is_refused_without_a_strong_compatibility() {
    let out = unital(&["lift", path(&fixture("zero_functor.cat"))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lax_audit_lists_the_one_sided_compatibility() {
    let r = report(&unital(&["lax-audit", path(&fixture("one_sided.cat"))]));
    let f = &r["functors"][0];
    assert_eq!(f["one_sided"], serde_json::json!(["id_E"]));
    assert_eq!(f["right_compatible"], serde_json::json!(["id_E"]));
    assert_eq!(f["left_compatible"], serde_json::json!([]));
}

#[test]
fn search_reports_within_bounds() {
    let out = unital(&["search", "--max-objects", "1", "--max-morphisms", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"], "no counterexample within bounds");
    let out = unital(&["search", "--max-objects", "2", "--max-morphisms", "2"]);
    let r = report(&out);
    assert_eq!(r["result"], "counterexample found");
    let doc = r["witness"]["document"].as_str().unwrap();
    let parsed = unital_cli::dsl::parse(doc).unwrap();
    assert_eq!(unital_cli::dsl::emit(&parsed), doc);
}

#[test]
fn emitted_corpus_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(unital(&["fixtures", "--emit", path(dir.path())]).status.code(), Some(0));
    for (name, shipped) in unital_cli::corpus::SHIPPED {
        let text = std::fs::read_to_string(dir.path().join(format!("{name}.cat"))).unwrap();
        assert_eq!(text, shipped, "{name}");
        let again = unital_cli::dsl::emit(&unital_cli::dsl::parse(&text).unwrap());
        assert_eq!(again, text, "{name}");
    }
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.json");
    let out = unital(&["units", path(&fixture("xor2.cat")), "--out", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&file).unwrap();
    assert_eq!(written, unital(&["units", path(&fixture("xor2.cat"))]).stdout);
}

#[test]
fn serial_and_parallel_reports_are_identical() {
    let f = fixture("zero_functor.cat");
    let args = ["functor-audit", path(&f), "--exhaustive"];
    let parallel = unital(&args);
    let mut serial_args = args.to_vec();
    serial_args.push("--serial");
    assert_eq!(parallel.status.code(), Some(0));
    assert_eq!(parallel.stdout, unital(&serial_args).stdout);
    assert_eq!(parallel.stdout, unital(&args).stdout);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(unital(&["units"]).status.code(), Some(1));
    assert_eq!(unital(&["bogus"]).status.code(), Some(1));
    assert_eq!(unital(&["units", "/nonexistent.cat"]).status.code(), Some(1));
    assert_eq!(unital(&["units", path(&fixture("z2eh.cat")), "--category", "nope"]).status.code(), Some(1));
    assert_eq!(unital(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_carry_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cat");
    std::fs::write(&bad, "category c\nobjects a\nhom f : a -> b\n").unwrap();
    let out = unital(&["validate", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out)["error"].as_str().unwrap().contains("line 3, column"));
}

#[test]
fn candidate_cap_is_read_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_unital"))
        .args(["functor-audit", path(&fixture("zero_functor.cat")), "--exhaustive"])
        .env("UNITAL_MAX_CANDIDATES", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out)["error"].as_str().unwrap().contains("budget"));
    let out = Command::new(env!("CARGO_BIN_EXE_unital"))
        .args(["units", path(&fixture("z2eh.cat"))])
        .env("UNITAL_MAX_CANDIDATES", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
