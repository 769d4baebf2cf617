mod common;

use common::{stdout, unproj};
use unproj_cli::{ExportBundle, Format, OPEN_MARKER};

fn generator_count(text: &str) -> usize {
    text.lines().find_map(|l| l.strip_prefix("generators: ")).expect("count line").parse().unwrap()
}

#[test]
fn generate_counts() {
    let out = unproj(&["generate", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(generator_count(&stdout(&out)), 6);

    let out = unproj(&["generate", "--n", "3", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["generators"].as_array().unwrap().len(), 9);
    assert_eq!(json["quadratic"], "computed");

    let text = stdout(&unproj(&["generate", "--n", "4"]));
    assert_eq!(generator_count(&text), 11);
    assert!(text.contains(OPEN_MARKER));
}

#[test]
fn plain_and_json_round_trip() {
    for format in [Format::Plain, Format::Json] {
        let text = stdout(&unproj(&["generate", "--n", "3", "--format", format.name()]));
        let bundle = ExportBundle::parse(&text, format).unwrap();
        assert_eq!(bundle.render(format), text, "{format}");
    }
}

#[test]
fn identity_spec_reproduces_generate() {
    let direct = stdout(&unproj(&["generate", "--n", "3"]));
    let via_spec = stdout(&unproj(&["substitute", "--spec", "identity_n3"]));
    assert_eq!(direct, via_spec);
}

#[test]
fn shipped_specs_are_homogeneous() {
    for name in ["appendix_n3", "altinok_x12_14", "fano_x4_6"] {
        let out = unproj(&["substitute", "--spec", name]);
        assert!(out.status.success(), "{name}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(!err.contains("not homogeneous"), "{name}: {err}");
    }
}

#[test]
fn altinok_degrees() {
    let text = stdout(&unproj(&["substitute", "--spec", "altinok_x12_14"]));
    let line = text.lines().find_map(|l| l.strip_prefix("degrees: ")).unwrap();
    assert!(line.ends_with("8, 9"), "{line}");
}

#[test]
fn spec_file_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("identity.json");
    std::fs::write(&path, unproj_core::specs::IDENTITY_N3).unwrap();
    let out = unproj(&["substitute", "--spec", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["generators"].as_array().unwrap().len(), 9);
}

#[test]
fn export_cas_n2() {
    for dialect in ["cas-script-A", "cas-script-B"] {
        let text = stdout(&unproj(&["export-cas", "--n", "2", "--dialect", dialect]));
        let ideal = text.lines().find(|l| l.contains("ideal")).unwrap();
        assert_eq!(ideal.matches(',').count(), 5, "{ideal}");
    }
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let out = unproj(&["generate", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(generator_count(&std::fs::read_to_string(&path).unwrap()), 6);
}

#[test]
fn exit_codes() {
    assert_eq!(unproj(&["export-cas", "--n", "3", "--dialect", "json"]).status.code(), Some(2));
    assert_eq!(unproj(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
    assert_eq!(unproj(&["verify", "--n-max", "1"]).status.code(), Some(2));
    assert_eq!(unproj(&["substitute", "--spec", "/no/such/file.json"]).status.code(), Some(3));
}

#[test]
fn verify_single_suite() {
    let out = unproj(&["verify", "--suite", "bigcheck", "--report", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = json.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["suite"] == "bigcheck"), "{json}");
}

#[test]
fn appendix_listing_matches_export() {
    let listing = std::fs::read_to_string(common::fixture("appendix_n3.m2")).unwrap();
    let reference = common::m2::Session::run(&listing).unwrap();
    let exported = common::m2::Session::run(&stdout(&unproj(&["export-cas", "--n", "3", "--dialect", "m2"]))).unwrap();
    let (ring, degrees) = reference.ring("S").unwrap();
    assert_eq!(exported.ring("S").unwrap().1, degrees);
    let ours = exported.ideal("IY").unwrap();
    let theirs = reference.ideal("IY").unwrap();
    assert_eq!(ours.len(), theirs.len());
    for (a, b) in ours.iter().zip(&theirs) {
        assert_eq!(a.with_table(&ring).unwrap(), *b);
    }
    assert_eq!(reference.ideal("specificIY").unwrap().len(), 9);
}

#[test]
fn evaluator_runs_a_small_script() {
    let s = common::m2::Session::run(
        "S = QQ [a,b, Degrees => {2:1}]\n\
         M = matrix {{a,b},{b,a}}\n\
         f = (N) -> det N\n\
         g = f (M) + M_1_0 * 1_S/2_S\n\
         I = ideal (g, a^2)\n",
    )
    .unwrap();
    let (t, d) = s.ring("S").unwrap();
    assert_eq!(d, Some(vec![1, 1]));
    let g = s.ideal("I").unwrap();
    assert_eq!(g[0], unproj_core::ring::parse_polynomial(&t, "a^2 - b^2 + 1/2*b").unwrap());
}
