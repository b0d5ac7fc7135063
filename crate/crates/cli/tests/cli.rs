use assert_cmd::Command;
use serde_json::{json, Value};

fn run(verb: &str, job: &Value, extra: &[&str]) -> (i32, Value) {
    let out = Command::cargo_bin("skewpoly")
        .unwrap()
        .arg(verb)
        .args(extra)
        .write_stdin(job.to_string())
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    (out.status.code().unwrap(), serde_json::from_str(&stdout).unwrap())
}

fn gf(p: u32) -> Value {
    json!({"kind": "prime-field", "p": p})
}

#[test]
fn eval_reverses_the_word() {
    let job = json!({"ring": gf(5), "frame": {"n": 2}, "f": "x1.x2", "point": [2, 3]});
    assert_eq!(run("eval", &job, &[]), (0, json!({"value": 1})));
}

#[test]
fn rank_of_the_binary_plane() {
    let job = json!({"ring": gf(2), "frame": {"n": 2}, "points": [[0, 0], [0, 1], [1, 0], [1, 1]]});
    assert_eq!(run("rank", &job, &[]), (0, json!({"rank": 4})));
}

#[test]
fn invalid_frame_exits_1() {
    let job = json!({"ring": gf(5), "frame": {"n": 1, "sigma": [[{"op": "zero"}]]}});
    let (code, out) = run("validate-frame", &job, &[]);
    assert_eq!(code, 1);
    assert_eq!(out["error"], "InvalidFrame");
    assert_eq!(out["details"]["violations"][0]["identity"], "unit not preserved");
    // other verbs refuse the frame too
    let job = json!({"ring": gf(5), "frame": {"n": 1, "sigma": [[{"op": "zero"}]]}, "points": [[1]]});
    assert_eq!(run("rank", &job, &[]).1["error"], "InvalidFrame");
}

#[test]
fn malformed_input_exits_2() {
    let out = Command::cargo_bin("skewpoly")
        .unwrap()
        .arg("eval")
        .write_stdin("{\"ring\": ")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "Parse");
    let job = json!({"ring": gf(5), "frame": {"n": 2}, "point": [2, 3]});
    assert_eq!(run("eval", &job, &[]).0, 2);
}

#[test]
fn domain_errors_exit_1() {
    let frob = json!({"n": 1, "sigma": [[{"op": "frobenius"}]]});
    let gf4 = json!({"kind": "extension-field", "p": 2, "k": 2});
    let job = json!({"ring": gf4, "frame": frob, "points": [[[1, 0]], [[0, 1]], [[1, 1]]], "values": [[1, 0], [0, 0], [0, 0]]});
    let (code, out) = run("interpolate", &job, &[]);
    assert_eq!((code, out["error"].as_str()), (1, Some("NotPIndependent")));
    let h = json!({"kind": "rational-quaternion"});
    let job = json!({"ring": h, "frame": {"n": 1}, "points": [[[0, 1, 0, 0]]]});
    assert_eq!(run("closure", &job, &[]).0, 0);
    assert_eq!(run("two-sided", &job, &[]).1["error"], "NotFinite");
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let gf9 = json!({"kind": "extension-field", "p": 3, "k": 2});
    let frame = json!({"n": 2, "sigma": [[{"op": "frobenius"}, {"op": "zero"}], [{"op": "zero"}, {"op": "frobenius"}]],
                       "beta": [[0, 1], [2, 0]]});
    let job = json!({"ring": gf9, "frame": frame, "points": [[[0, 1], [1, 0]], [[1, 1], [0, 0]], [[2, 0], [1, 2]]],
                     "values": [[1, 0], [0, 1], [2, 2]]});
    let bytes = |extra: &[&str]| {
        Command::cargo_bin("skewpoly")
            .unwrap()
            .arg("interpolate")
            .args(extra)
            .write_stdin(job.to_string())
            .output()
            .unwrap()
            .stdout
    };
    let first = bytes(&[]);
    assert_eq!(first, bytes(&[]));
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", String::from_utf8(first).unwrap());

    // the emitted polynomial is accepted back and interpolates
    let f = v["polynomial"].clone();
    for (b, a) in job["points"].as_array().unwrap().iter().zip(job["values"].as_array().unwrap()) {
        let eval = json!({"ring": job["ring"], "frame": job["frame"], "f": f, "point": b});
        assert_eq!(run("eval", &eval, &[]).1["value"], *a);
    }
    let (_, linear) = run("interpolate", &job, &["--method", "vandermonde"]);
    for b in job["points"].as_array().unwrap() {
        let at = |f: &Value| run("eval", &json!({"ring": job["ring"], "frame": job["frame"], "f": f, "point": b}), &[]).1;
        assert_eq!(at(&f), at(&linear["polynomial"]));
    }
}

#[test]
fn text_format_uses_term_syntax() {
    let job = json!({"ring": gf(5), "frame": {"n": 2}, "f": "x1", "g": "x2 + 2*1"});
    let out = Command::cargo_bin("skewpoly")
        .unwrap()
        .args(["mul", "--format", "text"])
        .write_stdin(job.to_string())
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "product: 1*x1.x2 + 2*x1\n");
}

#[test]
fn dual_basis_and_reduce() {
    let job = json!({"ring": gf(3), "frame": {"n": 1}, "points": [[0], [1]], "f": "x1.x1.x1"});
    let (code, dual) = run("dual-basis", &job, &[]);
    assert_eq!(code, 0);
    assert_eq!(dual["duals"].as_array().unwrap().len(), 2);
    // x^3 = x on GF(3), so x^3 reduces to x modulo I({0, 1})
    let (_, red) = run("reduce", &job, &[]);
    assert_eq!(red["coordinates"], json!([0, 1]));
    assert_eq!(red["representative"], json!([{"monomial": [1], "coeff": 1}]));
}

#[test]
fn selftest_passes() {
    let out = Command::cargo_bin("skewpoly").unwrap().arg("selftest").output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() > 10);
}

#[test]
fn norm_table_and_conjugate() {
    let gf4 = json!({"kind": "extension-field", "p": 2, "k": 2});
    let frob = json!({"n": 1, "sigma": [[{"op": "frobenius"}]]});
    let job = json!({"ring": gf4, "frame": frob, "point": [[0, 1]], "degree": 3, "c": [0, 1]});
    let (code, out) = run("norm", &job, &[]);
    assert_eq!(code, 0);
    // N_{x^3}(w) = w^4 w^2 w = w^7 = w
    assert_eq!(out["values"][3], json!({"monomial": "x1.x1.x1", "value": [0, 1]}));
    // w^w = w^2 w w^-1 = w^2
    assert_eq!(run("conjugate", &job, &[]).1["conjugate"], json!([[1, 1]]));
}

#[test]
fn shipped_jobs() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("jobs");
    let cases = [
        ("eval", "eval-gf5.json", 0, "value", json!(1)),
        ("rank", "rank-gf2.json", 0, "rank", json!(4)),
        ("closure", "closure-quaternion.json", 0, "member", json!(true)),
        ("matroid-check", "frobenius-gf4-matroid.json", 0, "rank", json!(3)),
        ("validate-frame", "invalid-frame.json", 1, "error", json!("InvalidFrame")),
        ("interpolate", "interpolate-gf9-inner.json", 0, "polynomial",
         json!([{"monomial": [], "coeff": [2, 1]}, {"monomial": [1], "coeff": [2, 2]}, {"monomial": [2], "coeff": [0, 1]}])),
    ];
    for (verb, file, code, key, want) in cases {
        let out = Command::cargo_bin("skewpoly")
            .unwrap()
            .args([verb, "--job"])
            .arg(dir.join(file))
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(code), "{file}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v[key], want, "{file}");
    }
}

#[test]
fn schema_is_json_and_covers_the_job_keys() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("job-schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let props = schema["properties"].as_object().unwrap();
    for key in ["ring", "frame", "f", "g", "point", "c", "monomials", "degree", "points", "query", "values", "method", "order"] {
        assert!(props.contains_key(key), "{key}");
    }
}
