//! End-to-end CLI behavior: fixture round trips, verdict exit codes, and
//! error reporting on malformed input.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bfdes::format::{
    automaton_to_json, finitelang_to_json, parse_automaton, parse_automaton_str,
    parse_finitelang, parse_finitelang_str, parse_ucmap, parse_ucmap_str, ucmap_to_json,
};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn bfdes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bfdes")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn fixtures_round_trip_exactly() {
    for name in ["example2_plant.json", "example2_spec.json"] {
        let g = parse_automaton(&fixture(name)).unwrap();
        let json = automaton_to_json(&g);
        let again = parse_automaton_str(&json, name).unwrap();
        assert_eq!(automaton_to_json(&again), json, "{name}");
    }
    for name in ["example2_plant_lang.json", "example2_spec_lang.json"] {
        let l = parse_finitelang(&fixture(name)).unwrap();
        let json = finitelang_to_json(&l);
        let again = parse_finitelang_str(&json, name).unwrap();
        assert_eq!(again, l, "{name}");
        assert_eq!(finitelang_to_json(&again), json, "{name}");
    }
    for name in ["uc1.json", "uc2.json"] {
        let uc = parse_ucmap(&fixture(name)).unwrap();
        let json = ucmap_to_json(&uc);
        let again = parse_ucmap_str(&json, name).unwrap();
        assert_eq!(ucmap_to_json(&again), json, "{name}");
    }
}

#[test]
fn check_exit_codes_match_verdicts() {
    let plant = fixture("example2_plant.json");
    let spec = fixture("example2_spec.json");
    let run = |uc: &str, extra: &[&str]| {
        let mut args: Vec<String> = ["check", plant.to_str().unwrap(), spec.to_str().unwrap()]
            .iter()
            .map(|s| s.to_string())
            .collect();
        args.push(fixture(uc).to_str().unwrap().to_string());
        args.extend(extra.iter().map(|s| s.to_string()));
        Command::new(env!("CARGO_BIN_EXE_bfdes")).args(&args).output().expect("binary runs")
    };

    let out = run("uc1.json", &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("verdict: uncontrollable"));

    let out = run("uc2.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: controllable"));

    let out = run("uc1.json", &["--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["verdict"], "uncontrollable");

    let out = run("uc1.json", &["--budget", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn malformed_inputs_exit_2_with_located_errors() {
    let dir = std::env::temp_dir().join(format!("bfdes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"states\": [,]\n}").unwrap();

    let out = bfdes(&[
        "check",
        bad.to_str().unwrap(),
        fixture("example2_spec.json").to_str().unwrap(),
        fixture("uc1.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.json") && err.contains("line 2"), "unlocated error: {err}");

    let out = bfdes(&["eval", dir.join("missing.json").to_str().unwrap(), "s1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = bfdes(&["rank", "not-a-degree", "1/0.5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = bfdes(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn eval_compose_rank_and_approx_outputs() {
    let plant = fixture("example2_plant.json");

    let out = bfdes(&["eval", plant.to_str().unwrap(), "s1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1/0.9 + 0.8/1");

    let out = bfdes(&["compose", plant.to_str().unwrap(), plant.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    parse_automaton_str(&stdout(&out), "composed").unwrap();

    let out = bfdes(&["rank", "0.5..0.9", "1/0.3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = bfdes(&["rank", "1/0.3", "0.5..0.9"]);
    assert_eq!(out.status.code(), Some(1));

    let out = bfdes(&[
        "approx",
        fixture("example2_spec_lang.json").to_str().unwrap(),
        fixture("example2_plant_lang.json").to_str().unwrap(),
        fixture("uc1.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["supremal", "infimal"] {
        let lang = serde_json::to_string(&doc[key]).unwrap();
        parse_finitelang_str(&lang, key).unwrap();
    }
}

#[test]
fn traffic_outputs() {
    let out = bfdes(&["traffic", "--rate", "720", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc["d_avg"].as_f64().unwrap() > 0.0);

    let out = bfdes(&["traffic", "compare", "--rates", "720", "--seeds", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("rate,bfdes_davg,fdes_davg"));
    assert_eq!(lines.count(), 1);

    let out = bfdes(&["traffic"]);
    assert_eq!(out.status.code(), Some(2));
}
