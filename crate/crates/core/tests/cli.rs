use std::collections::HashMap;

use morphlab::cli::{parse_record, run};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("morphlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(text: &str) -> Vec<HashMap<String, String>> {
    text.lines().map(|l| parse_record(l).unwrap_or_else(|| panic!("bad record {l:?}")).into_iter().collect()).collect()
}

#[test]
fn check_if_reports_fibonacci_witness() {
    let (code, out, _) = invoke(&["check-if", "--morphism", "a->ab;b->a", "--word", "abaab"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("NOT-IF"));
    assert!(out.contains("z=a"));

    let (code, out, _) = invoke(&["--format", "machine", "check-if", "-m", "fibonacci", "-w", "abaab"]);
    assert_eq!(code, 1);
    let r = &records(&out)[0];
    assert_eq!(r["record"], "check-if");
    assert_eq!(r["decision"], "NOT-IF");
    assert_eq!(r["z"], "a");
    assert_eq!(r["x"], "");

    let (code, _, _) = invoke(&["check-if", "-m", "thue-morse", "-w", "tm:8"]);
    assert_eq!(code, 0);
}

#[test]
fn oracle_mode_agrees() {
    for word in ["ab", "abaab", "abaababa", "aab"] {
        let fast = invoke(&["check-if", "-m", "fibonacci", "-w", word]).0;
        let slow = invoke(&["check-if", "-m", "fibonacci", "-w", word, "--oracle"]).0;
        assert_eq!(fast, slow, "{word}");
    }
}

#[test]
fn gen_and_apply() {
    assert_eq!(invoke(&["gen", "--family", "fibonacci", "--order", "6"]), (0, "abaababa\n".into(), String::new()));
    let (code, out, _) = invoke(&["apply", "-m", "thue-morse", "-w", "a", "--power", "3"]);
    assert_eq!((code, out.trim()), (0, "abbabaab"));
    let (_, out, _) = invoke(&["--format", "machine", "gen", "--list-morphisms"]);
    assert_eq!(records(&out).len(), 6);
}

#[test]
fn verify_suites_pass() {
    let (code, out, _) = invoke(&["verify", "--suite", "tm-mus", "--max-order", "10"]);
    assert_eq!(code, 0);
    let passes: Vec<&str> = out.lines().filter(|l| l.starts_with("PASS")).collect();
    assert_eq!(passes.len(), 6);
    for (line, i) in passes.iter().zip(5..) {
        assert!(line.contains(&format!("i={i}")), "{line}");
    }
    for suite in ["fibonacci-mus", "netocc", "structural", "if-parity", "occ-preserve"] {
        let (code, out, err) = invoke(&["--format", "machine", "verify", "--suite", suite, "--max-order", "12"]);
        assert_eq!(code, 0, "{suite}: {out}{err}");
        let recs = records(&out);
        assert_eq!(recs.last().unwrap()["failed"], "0");
    }
}

#[test]
fn decisions_set_exit_codes() {
    assert_eq!(invoke(&["check-strong-if", "-m", "mephisto-waltz"]).0, 0);
    assert_eq!(invoke(&["check-strong-if", "-m", "fibonacci"]).0, 1);
    let (code, out, _) = invoke(&["--format", "machine", "check-recognizable", "-m", "thue-morse", "-w", "aa"]);
    assert_eq!(code, 1);
    let r = &records(&out)[0];
    assert_eq!((r["rotation"].as_str(), r["factorizations"].as_str()), ("baba", "2"));
    assert_eq!(invoke(&["check-recognizable", "-m", "fibonacci", "-w", "abaab"]).0, 0);
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(invoke(&["frobnicate"]).0, 2);
    assert_eq!(invoke(&["check-if", "-m", "a->", "-w", "a"]).0, 2);
    assert_eq!(invoke(&["check-if", "-m", "fibonacci", "-w", "abc"]).0, 2);
    assert_eq!(invoke(&["check-if", "-m", "a->ab;b->abab", "-w", "a"]).0, 2);
    assert_eq!(invoke(&["gen", "--family", "fibonacci", "--order", "0"]).0, 2);
    assert_eq!(invoke(&["verify", "--suite", "tm-mus", "--max-order", "4"]).0, 2);
    assert_eq!(invoke(&["--budget", "nonsense", "gen", "--list-morphisms"]).0, 2);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn file_arguments() {
    let dir = std::env::temp_dir().join(format!("morphlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let word = dir.join("word.txt");
    let morphism = dir.join("morphism.txt");
    std::fs::write(&word, "abaab\nab\n").unwrap();
    std::fs::write(&morphism, "a -> ab;\nb -> a\n").unwrap();
    let (code, out, _) = invoke(&[
        "apply",
        "-m",
        &format!("@{}", morphism.display()),
        "-w",
        &format!("@{}", word.display()),
    ]);
    assert_eq!((code, out.trim()), (0, "abaababaaba"));
    assert_eq!(invoke(&["apply", "-m", "fibonacci", "-w", "@/nonexistent/file"]).0, 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn occurrences_mus_and_net() {
    let (_, out, _) = invoke(&["--format", "machine", "occ", "-p", "ab", "-w", "tm:5"]);
    assert_eq!(records(&out)[0]["positions"], "1,4,7,11,13");
    let (_, out, _) = invoke(&["--format", "machine", "mus", "-w", "abaababa"]);
    let recs = records(&out);
    let mus: Vec<(&str, &str, &str)> =
        recs.iter().map(|r| (r["start"].as_str(), r["end"].as_str(), r["content"].as_str())).collect();
    assert_eq!(mus, [("3", "4", "aa"), ("5", "7", "bab")]);
    let (_, out, _) = invoke(&["--format", "machine", "netocc", "--family", "fibonacci", "--order", "7"]);
    let spans: Vec<String> = records(&out).iter().map(|r| format!("{}-{}", r["start"], r["end"])).collect();
    assert_eq!(spans, ["1-6", "6-11", "9-13"]);
}

#[test]
fn machine_output_is_stable() {
    let args = ["--format", "machine", "scan", "-m", "fibonacci", "-w", "abaababa"];
    let (code, first, _) = invoke(&args);
    assert_eq!(code, 0);
    assert_eq!(first, invoke(&args).1);
    for line in first.lines() {
        let fields = parse_record(line).unwrap();
        let rebuilt: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        assert_eq!(rebuilt.join(" "), line);
    }
    assert!(parse_record("no equals here").is_none());
}

#[test]
fn bench_reports_each_order() {
    let (code, out, _) = invoke(&["--format", "machine", "bench", "--from", "10", "--to", "12", "--repeats", "1", "--max-ratio", "1000"]);
    assert_eq!(code, 0);
    let recs = records(&out);
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["ratio"], "-");
    assert_eq!(recs[2]["image_len"], "233");
}
