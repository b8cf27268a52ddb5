mod common;

use std::process::Command;

use common::golden::{self, cases, check, fixture_dir, golden_path, run};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tcgame"))
}

fn fixture(name: &str) -> String {
    fixture_dir().join(format!("{}.toml", name)).display().to_string()
}

fn argv(words: &[&str]) -> Vec<String> {
    std::iter::once("tcgame").chain(words.iter().copied()).map(String::from).collect()
}

/// Set `TCGAME_BLESS=1` to rewrite the goldens from the current output.
#[test]
fn fixtures_match_goldens() {
    let all = cases();
    assert_eq!(all.len(), 19);
    let bless = std::env::var_os("TCGAME_BLESS").is_some();
    let mut failures = Vec::new();
    for case in &all {
        if bless {
            let (code, out, err) = run(&case.argv);
            assert_eq!(code, 0, "{}: {}", case.name, err);
            std::fs::write(golden_path(&case.name), out).unwrap();
        }
        if let Err(e) = check(case) {
            failures.push(e);
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn goldens_show_the_reference_outcomes() {
    let read = |n: &str| std::fs::read_to_string(golden_path(n)).unwrap();
    assert!(read("table02").contains("minimum 3.8 at (1,1)"));
    assert!(read("table03").contains("minimum 1.0 at (0,0)"));
    assert!(read("table04").contains("minimum 5.2 at (2,2)"));
    assert!(read("table06").contains("pure equilibria: (1,1)"));
    assert!(read("table08").contains("pure equilibria: (2,2)"));
    assert!(read("table10").contains("pure equilibria: none"));
    assert!(read("table12").contains("30.0, 30.0"));
    assert!(read("table14").contains("equilibria: (1,1)"));
    assert!(read("table15").contains("equilibria: (0,0)"));
    assert!(read("table17").contains("equilibria: (1,0)"));
    assert!(read("table19").contains("path: (0,0)"));
}

#[test]
fn exact_mode_prints_fractions() {
    let (code, out, _) = run(&argv(&["--exact", "game", "solve", &fixture("table10"), "--mixed"]));
    assert_eq!(code, 0);
    assert!(out.contains("74/109"), "{}", out);
    let (code, out, _) = run(&argv(&["--exact", "sweep", &fixture("table01"), "--from", "1/2", "--to", "250"]));
    assert_eq!(code, 0);
    assert!(out.contains("20/19"), "{}", out);
}

#[test]
fn csv_carries_full_precision() {
    let (_, paper, _) = run(&argv(&["--paper-rounding", "game", "solve", &fixture("table10"), "--mixed"]));
    let (_, csv, _) = run(&argv(&["--paper-rounding", "--format", "csv", "game", "solve", &fixture("table10"), "--mixed"]));
    assert!(paper.contains("0.68"));
    assert!(csv.starts_with("i,j,cost1,cost2,pure_equilibrium\n"), "{}", csv);
    assert!(csv.contains("profile,p,q,cost1,cost2,total,slack\n"));
    assert!(csv.contains("0.6788990825688"), "{}", csv);
}

#[test]
fn surface_export_has_one_row_per_pair() {
    let (code, out, _) = run(&argv(&["--format", "csv", "export-surface", &fixture("table01"), "--exposure", "60"]));
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "i,j,z1,z2,pl,tc,relevant");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[5], "1,1,1,1,0.03,3.8,yes");
}

#[test]
fn fixtures_round_trip() {
    for case in cases() {
        let path = fixture_dir().join(format!("{}.toml", case.name));
        let doc = tcgame::cli::parse_model(&path).unwrap();
        let text = tcgame::cli::to_toml_string(&doc);
        let again = tcgame::cli::parse_str(&tcgame::cli::Source::new("again", text)).unwrap();
        assert_eq!(doc, again, "{}", case.name);
    }
}

#[test]
fn exit_codes() {
    let ok = bin().args(["optimum", &fixture("table02")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("minimum 3.8 at (1,1)"));

    let missing = bin().args(["frontier", "no/such/file.toml"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));

    let usage = bin().args(["optimum"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));

    let ill_posed = bin()
        .args(["rule", "design", &fixture("table01"), "--criterion", "balanced", "--exposure", "50"])
        .output()
        .unwrap();
    assert_eq!(ill_posed.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&ill_posed.stderr).contains("several minima"));

    let bad_range = bin().args(["sweep", &fixture("table01"), "--from", "5", "--to", "1"]).output().unwrap();
    assert_eq!(bad_range.status.code(), Some(1));
}

#[test]
fn invalid_share_is_reported_with_its_line() {
    let dir = std::env::temp_dir().join(format!("tcgame-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(fixture_dir().join("table05.toml"))
        .unwrap()
        .replacen("[0.5, 0.5, 0.5],\n  [0.5, 0.5, 0.5],\n  [0.5, 0.5, 0.5]", "[0.5, 0.5, 0.5],\n  [0.5, 1.2, 0.5],\n  [0.5, 0.5, 0.5]", 1);
    let path = dir.join("bad.toml");
    std::fs::write(&path, text).unwrap();
    let out = bin().args(["rule", "check-optimizer", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("out of [0,1] at (1,1)"), "{}", err);
    assert!(err.contains("bad.toml:"), "{}", err);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn golden_helper_is_deterministic() {
    let c = &golden::cases()[0];
    assert_eq!(run(&c.argv), run(&c.argv));
}
