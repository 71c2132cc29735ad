use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heckeuler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn hecke_product_of_a_generator_with_itself() {
    let out = run(&["hecke", "A2", "--names", "s,t", "T[s]", "T[s]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("= (q-1)*T[s] + q*T[]"), "{text}");
    assert!(text.contains("eps_q = q^2"), "{text}");
    assert!(text.contains("trace = q"), "{text}");
}

#[test]
fn hecke_system_from_type_flag() {
    let v = json(&[
        "hecke", "--type", "A1", "T[s1]", "T[s1]", "--format", "json",
    ]);
    assert_eq!(v["product"], "(q-1)*T[s1] + q*T[]");
    assert_eq!(v["trace"], serde_json::json!(["0", "1"]));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["info", "B3"]), 0);
    assert_eq!(code(&["info", "Nope7"]), 2);
    assert_eq!(code(&["info", "-i", "{bad"]), 2);
    assert_eq!(code(&["info", "-i", r#"{"matrix": [[1, 3], [2, 1]]}"#]), 2);
    assert_eq!(code(&["hecke", "A2", "T[s1]", "T[x]"]), 2);
    assert_eq!(code(&["hecke", "A2", "T[s1,s1]", "T[]"]), 2);
    assert_eq!(code(&["deodhar", "A2", "--radius", "2"]), 2);
    assert_eq!(code(&["deodhar", "Atilde1"]), 2);
    assert_eq!(
        code(&[
            "hecke",
            "Atilde1",
            "--max-length",
            "3",
            "T[s1,s2]",
            "T[s1,s2]"
        ]),
        3
    );
    assert_eq!(code(&["verify", "A5", "--mem-cap", "100"]), 3);
    assert_eq!(
        code(&["deodhar", "Atilde2", "--max-length", "3", "--coradius", "2"]),
        2
    );
}

#[test]
fn json_is_deterministic() {
    for args in [
        &[
            "euler", "Atilde2", "--at", "2", "--at", "1/2", "--format", "json",
        ][..],
        &["deodhar", "B3", "--format", "json"][..],
        &["verify", "Atilde1", "--max-length", "6", "--format", "json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_and_json_agree() {
    let v = json(&["euler", "Atilde1", "--at", "2", "--format", "json"]);
    let text = stdout(&run(&["euler", "Atilde1", "--at", "2"]));
    let at2 = v["specializations"]["2"].as_str().expect("value at 2");
    assert_eq!(at2, "-1/3");
    assert!(text.contains("-1/3"), "{text}");

    let v = json(&["deodhar", "B2", "--format", "json"]);
    assert_eq!(v["homology"], serde_json::json!([1, 1]));
    assert_eq!(v["actions"]["0"], "q");
    assert_eq!(v["actions"]["top"], "-1");
    let text = stdout(&run(&["deodhar", "B2"]));
    assert!(text.contains("q") && text.contains("-1"), "{text}");
}

#[test]
fn verify_finite_and_affine() {
    let v = json(&["verify", "A2", "--format", "json"]);
    assert_eq!(v["passed"], true);
    let out = run(&["verify", "Atilde1", "--max-length", "6", "--samples", "200"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("overall: pass"));
}

#[test]
fn exhaustive_suites_ignore_the_seed() {
    let a = run(&["verify", "B2", "--seed", "0", "--format", "json"]);
    let b = run(&["verify", "B2", "--seed", "7", "--format", "json"]);
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("json");
        v.as_object_mut().expect("object").remove("seed");
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn specialization_at_minus_one_is_skipped() {
    let v = json(&["euler", "A2", "--at", "-1", "--format", "json"]);
    let s = v["specializations"]["-1"].as_str().expect("entry");
    assert!(s.starts_with("skipped"), "{s}");
}

#[test]
fn poincare_series_check() {
    let v = json(&[
        "poincare",
        "Atilde2",
        "--max-length",
        "8",
        "--format",
        "json",
    ]);
    assert_eq!(v["series"]["matches"], true);
    assert_eq!(v["series"]["counts"][8], "24");
}
