use std::path::{Path, PathBuf};
use std::process::Command;

use gauge_quandles::cli::run;
use gauge_quandles::group::catalog;
use gauge_quandles::rack::{conjugation_quandle, generalized_alexander, trivial_quandle, MagmaTable, QuandleFile};
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn write_table(dir: &TempDir, name: &str, m: &MagmaTable) -> PathBuf {
    write(dir, name, &serde_json::to_string(&QuandleFile::from(m.clone())).unwrap())
}

fn cli(args: &[&str]) -> gauge_quandles::cli::Outcome {
    run(std::iter::once("gauge-quandle").chain(args.iter().copied()))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn read_table(path: &Path) -> MagmaTable {
    let file: QuandleFile = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    MagmaTable::try_from(file).unwrap()
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write_table(&dir, "trivial.json", &trivial_quandle(4));
    assert_eq!(cli(&["verify", p(&good)]).code, 0);

    let conj = write_table(&dir, "s3.json", &conjugation_quandle(&catalog("S3").unwrap()));
    let o = cli(&["verify", p(&conj), "--json"]);
    assert_eq!(o.code, 0);
    let report: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(report["is_quandle"], true);

    let mut bad = conjugation_quandle(&catalog("S3").unwrap());
    bad.set(1, 2, 0).unwrap();
    let bad = write_table(&dir, "bad.json", &bad);
    let o = cli(&["verify", p(&bad)]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("self-distributivity fails at"), "{}", o.stdout);

    let garbage = write(&dir, "garbage.json", "{\"size\": 2, \"op\": [[0, 5], [1, 1]]}");
    assert_eq!(cli(&["verify", p(&garbage)]).code, 2);
    let not_json = write(&dir, "x.json", "not json");
    assert_eq!(cli(&["verify", p(&not_json)]).code, 2);
}

#[test]
fn verify_rack_flag() {
    let dir = TempDir::new().unwrap();
    // x ◁ y = x + 1 mod 3: a rack, not a quandle
    let shift = write_table(&dir, "shift.json", &MagmaTable::from_fn(3, |x, _| (x + 1) % 3));
    assert_eq!(cli(&["verify", p(&shift)]).code, 1);
    assert_eq!(cli(&["verify", "--rack", p(&shift)]).code, 0);
}

#[test]
fn build_over_a_point_is_alexander_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let bundle = write(&dir, "b.json", r#"{"group": "S3", "base_size": 1}"#);
    let map = write(&dir, "f.json", r#"{"section_values": [1]}"#);
    let out = dir.path().join("q.json");
    let o = cli(&["build", p(&bundle), p(&map), "--out", p(&out)]);
    assert_eq!(o.code, 0, "{o:?}");
    assert!(o.stdout.contains("◁ |"));

    let g = catalog("S3").unwrap();
    let built = read_table(&out);
    assert!(built.same_operation(&generalized_alexander(&g, &g.inner_automorphism(1)).unwrap()));
    let raw: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(raw["provenance"]["bundle"]["group"], "S3");
    assert_eq!(raw["provenance"]["section_values"], serde_json::json!([1]));

    assert_eq!(cli(&["verify", p(&out)]).code, 0);
}

#[test]
fn build_trivial_cases() {
    let dir = TempDir::new().unwrap();
    let trivial = write(&dir, "t.json", r#"{"group": "trivial", "base_size": 3}"#);
    let map = write(&dir, "f.json", r#"{"section_values": [0, 0, 0]}"#);
    let out = dir.path().join("q.json");
    assert_eq!(cli(&["build", p(&trivial), p(&map), "--out", p(&out)]).code, 0);
    assert!(read_table(&out).same_operation(&trivial_quandle(3)));

    let d4 = write(&dir, "d4.json", r#"{"group": "D4", "base_size": 2}"#);
    let id = write(&dir, "id.json", r#"{"section_values": [0, 0]}"#);
    assert_eq!(cli(&["build", p(&d4), p(&id), "--out", p(&out)]).code, 0);
    assert!(read_table(&out).same_operation(&trivial_quandle(16)));
}

#[test]
fn build_input_errors() {
    let dir = TempDir::new().unwrap();
    let bundle = write(&dir, "b.json", r#"{"group": "S3", "base_size": 2}"#);
    let short = write(&dir, "short.json", r#"{"section_values": [1]}"#);
    let range = write(&dir, "range.json", r#"{"section_values": [1, 6]}"#);
    let unknown = write(&dir, "u.json", r#"{"group": "S9", "base_size": 1}"#);
    assert_eq!(cli(&["build", p(&bundle), p(&short)]).code, 2);
    assert_eq!(cli(&["build", p(&bundle), p(&range)]).code, 2);
    assert_eq!(cli(&["build", p(&unknown), p(&short)]).code, 2);
}

#[test]
fn inline_group_bundle() {
    let dir = TempDir::new().unwrap();
    let bundle = write(
        &dir,
        "b.json",
        r#"{"group": {"name": "C3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}, "base_size": 2}"#,
    );
    let map = write(&dir, "f.json", r#"{"section_values": [0, 1]}"#);
    assert_eq!(cli(&["build", p(&bundle), p(&map)]).code, 0);
}

#[test]
fn rack_command() {
    let dir = TempDir::new().unwrap();
    let bundle = write(&dir, "b.json", r#"{"group": "Z4", "base_size": 1}"#);
    let map = write(&dir, "f.json", r#"{"section_values": [1]}"#);
    let out = dir.path().join("r.json");
    let o = cli(&["rack", p(&bundle), p(&map), "--out", p(&out)]);
    assert_eq!(o.code, 0, "{o:?}");
    assert!(o.stdout.contains("quandle: no"));
    assert!(o.stdout.contains("associated quandle equals gauge quandle: yes"));
    // x ◁ y = x + 1
    assert_eq!(read_table(&out).rows()[2], vec![3, 3, 3, 3]);
}

#[test]
fn census_command() {
    let dir = TempDir::new().unwrap();
    let s3 = write(&dir, "s3.json", r#"{"group": "S3", "base_size": 1}"#);
    let o = cli(&["census", p(&s3), "--json"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let sizes: Vec<u64> = v["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![1, 3, 2]);

    let trivial = write(&dir, "t.json", r#"{"group": "trivial", "base_size": 4}"#);
    assert!(cli(&["census", p(&trivial)]).stdout.starts_with("1 maps, 1 isomorphism classes"));
    let z6 = write(&dir, "z6.json", r#"{"group": "Z6", "base_size": 1}"#);
    assert!(cli(&["census", p(&z6)]).stdout.starts_with("6 maps, 1 isomorphism classes"));

    let big = write(&dir, "big.json", r#"{"group": "S4", "base_size": 3}"#);
    let o = cli(&["census", p(&big)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("exceeds the cap"));
    assert_eq!(cli(&["census", p(&s3), "--cap", "5"]).code, 2);
}

#[test]
fn fiber_command() {
    let dir = TempDir::new().unwrap();
    let bundle = write(&dir, "b.json", r#"{"group": "Q8", "base_size": 3}"#);
    let map = write(&dir, "f.json", r#"{"section_values": [2, 0, 5]}"#);
    for base in ["0", "1", "2"] {
        let o = cli(&["fiber", p(&bundle), p(&map), "--base", base]);
        assert_eq!(o.code, 0, "{o:?}");
        assert!(o.stdout.contains("equals generalized Alexander quandle: yes"));
    }
    assert_eq!(cli(&["fiber", p(&bundle), p(&map), "--base", "3"]).code, 2);
}

#[test]
fn reduce_command() {
    let dir = TempDir::new().unwrap();
    let bundle = write(&dir, "b.json", r#"{"group": "S3", "base_size": 1}"#);
    let map = write(&dir, "f.json", r#"{"section_values": [1]}"#);
    let o = cli(&["reduce", p(&bundle), p(&map), "--subgroup", "e, (1 2 3), (1 3 2)", "--json"]);
    assert_eq!(o.code, 0, "{o:?}");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["quandle"]["size"], 2);

    let o = cli(&["reduce", p(&bundle), p(&map), "--subgroup", "e,(1 3)"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("does not normalize"));
    // not closed
    assert_eq!(cli(&["reduce", p(&bundle), p(&map), "--subgroup", "e,(1 2 3)"]).code, 2);
    assert_eq!(cli(&["reduce", p(&bundle), p(&map), "--subgroup", "e,nope"]).code, 2);
}

#[test]
fn homogeneous_from_group_file() {
    let dir = TempDir::new().unwrap();
    let z4 = serde_json::to_string(&catalog("Z4").unwrap().to_file()).unwrap();
    let path = write(&dir, "z4.json", &z4);
    let o = cli(&["homogeneous", p(&path), "--subgroup", "0,2", "--element", "1", "--json"]);
    assert_eq!(o.code, 0, "{o:?}");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["cosets"], serde_json::json!([[0, 2], [1, 3]]));
}

#[test]
fn lie_check_command() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "sweep.json",
        r#"{"model": "SO3", "base_points": 3, "samples": 30, "seed": 1, "t_range": [-2, 2], "tolerance": 1e-8}"#,
    );
    let o = cli(&["lie-check", p(&cfg), "--seed", "77", "--json"]);
    assert_eq!(o.code, 0, "{o:?}");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["seed"], 77);
    assert!(v["axioms"].as_array().unwrap().iter().all(|r| r["seed"] == 77 && r["passed"] == true));

    assert_eq!(cli(&["lie-check", p(&cfg), "--seed", "77", "--json"]).stdout, o.stdout);
    assert_eq!(cli(&["lie-check", p(&cfg), "--seed", "77", "--tolerance", "0"]).code, 1);
    assert_eq!(cli(&["lie-check", p(&cfg)]).code, 2);

    let bad = write(&dir, "bad.json", r#"{"model": "SO3", "base_points": 3}"#);
    assert_eq!(cli(&["lie-check", p(&bad), "--seed", "1"]).code, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gauge-quandle");
    let dir = TempDir::new().unwrap();
    let good = write_table(&dir, "t.json", &trivial_quandle(2));
    let bad = write_table(&dir, "b.json", &MagmaTable::from_fn(2, |_, _| 0));
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["verify", p(&good)]), Some(0));
    assert_eq!(status(&["verify", p(&bad)]), Some(1));
    assert_eq!(status(&["verify", "/no/such/file.json"]), Some(2));
    let out = Command::new(bin).args(["verify", p(&good)]).output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("quandle: yes"));
}
