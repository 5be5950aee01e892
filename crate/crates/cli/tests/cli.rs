use std::process::{Command, Output};

use superschur::SuperPartition;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(args)
        .env_remove("SUPERSCHUR_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn expand_examples() {
    assert_eq!(
        stdout(&["expand", "--family", "s", "--lambda", "3,1;2,1,1", "--basis", "m"]).trim(),
        "m(3,1;2,1,1) + 3*m(3,1;1,1,1,1)"
    );
    assert_eq!(stdout(&["expand", "--family", "s", "--lambda", ";2", "--basis", "m"]).trim(), "m(;2) + m(;1,1)");
    let by_pieri = stdout(&["expand", "--family", "s", "--lambda", "3,1;2,1,1", "--route", "pieri"]);
    assert_eq!(by_pieri.trim(), "m(3,1;2,1,1) + 3*m(3,1;1,1,1,1)");
}

#[test]
fn expand_json_round_trips() {
    let args = ["expand", "--family", "sbar", "--lambda", "2,0;3", "--basis", "m", "--format", "json"];
    let text = stdout(&args);
    assert_eq!(text, stdout(&args), "output is deterministic");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(obj.len(), 7);
    assert_eq!(obj["1,0;1,1,1,1"], 3);
    for key in obj.keys() {
        let l: SuperPartition = key.parse().unwrap();
        assert_eq!(&l.to_text(), key);
    }
}

#[test]
fn expand_latex() {
    let text = stdout(&["expand", "--family", "s", "--lambda", ";2", "--format", "latex"]);
    assert_eq!(text.trim(), "s_{(\\emptyset;2)} = m_{(\\emptyset;2)} + m_{(\\emptyset;1,1)}");
}

#[test]
fn pieri_example() {
    let text = stdout(&["pieri", "--kind", "sstar_h", "--lambda", "4,1,0;2", "--ell", "3"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.contains(&"+(2,1,0;7)"));
    let text = stdout(&["pieri", "--kind", "sstar_htilde", "--lambda", "4,1;3", "--ell", "3"]);
    assert_eq!(text.lines().filter(|l| l.starts_with('-')).count(), 3);
}

#[test]
fn kostka_example() {
    let text = stdout(&["kostka", "--n", "1", "--m", "0"]);
    assert_eq!(text.lines().last(), Some("[[1]]"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["kostka", "--n", "2", "--m", "1", "--format", "json"])).unwrap();
    assert_eq!(v["index"].as_array().unwrap().len(), 4);
}

#[test]
fn lr_example() {
    assert_eq!(stdout(&["lr", "--gamma", ";1", "--omega", ";1"]).trim(), "s(;2) + s(;1,1)");
    assert_eq!(stdout(&["lr", "--gamma", "0;", "--omega", "0;1", "--family", "sbar"]).trim(), "sbar(1,0;)");
}

#[test]
fn tableaux_example() {
    let text = stdout(&["tableaux", "--lambda", "2,0;3", "--weight", "1~,0~,2,1,1"]);
    assert!(text.contains("2 sbar-tableaux"), "{text}");
    assert_eq!(text.matches("\ntableau ").count(), 2);
    let text = stdout(&["tableaux", "--lambda", ";2", "--weight", "2", "--family", "s"]);
    assert!(text.trim_end().ends_with("\n1 1"), "{text}");
    let latex = stdout(&[
        "tableaux",
        "--lambda",
        "3,1;2,1,1",
        "--weight",
        "3~,1~,1,1,1,1",
        "--family",
        "s",
        "--format",
        "latex",
    ]);
    assert!(latex.contains("\\tableau[scY]{1&1&1&\\bl\\tcercle{1}\\\\2&6\\\\3&\\bl\\tcercle{2}\\\\4\\\\5}"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "tableaux",
        "--lambda",
        "2,0;3",
        "--weight",
        "1~,0~,2,1,1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v[1]["count"], 2);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "pieri-oracle", "--n", "4", "--m", "2", "--ell", "3"][..],
        &["verify", "--suite", "cauchy", "--nx", "2", "--ny", "2", "--deg", "3"],
        &["verify", "--suite", "appendix", "--seed", "42"],
        &["verify", "--suite", "dualities", "--n", "3"],
        &["verify", "--suite", "tableaux", "--n", "4"],
    ] {
        let text = stdout(args);
        assert!(text.contains(": pass ("), "{args:?}: {text}");
        assert_eq!(text, stdout(args), "deterministic");
    }
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "verify",
        "--suite",
        "appendix",
        "--identity",
        "key-reorder",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"], 25);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["expand", "--family", "s", "--lambda", "3,1;x"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--family", "q", "--lambda", ";1"]).status.code(), Some(2));
    assert_eq!(run(&["tableaux", "--lambda", ";2", "--weight", "2x"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--family", "s", "--lambda", ";9"]).status.code(), Some(3));
    assert_eq!(run(&["kostka", "--n", "3", "--m", "4"]).status.code(), Some(3));
    assert_eq!(run(&["expand", "--family", "s", "--lambda", ";9", "--max-n", "9"]).status.code(), Some(0));
    let raised = Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(["kostka", "--n", "9", "--m", "0"])
        .env("SUPERSCHUR_MAX_N", "9")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
}
