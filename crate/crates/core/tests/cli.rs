use std::process::Command;

fn polylaw(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polylaw")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn enumerate_listings() {
    let (code, out) = polylaw(&["enumerate", "delta1", "--phi", "1,1@1", "--psi", "1,2@2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1,2\n2,1\ncount 2\n");
    let (_, out) = polylaw(&["enumerate", "s2", "--n", "2", "--m", "2"]);
    assert_eq!(out, "1,1@2\n1,2@2\n2,2@2\ncount 3\n");
    let (_, out) = polylaw(&["enumerate", "delta1", "--phi", "1@1", "--psi", "1,2@2"]);
    assert_eq!(out, "count 0\n");
    let (_, out) = polylaw(&["enumerate", "whiskered", "--side", "left", "--phi", "1,1@1;1@1", "--psi", "1,2@2;1,1@1"]);
    assert!(out.ends_with("count 2\n"), "{out}");
}

#[test]
fn span_summary() {
    let (code, out) = polylaw(&["span", "1,1@1;1,2@2"]);
    assert_eq!(code, 0);
    assert!(out.contains("pushout r = 1") && out.contains("suitable true"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(polylaw(&["verify", "--suite", "spans", "--bound", "3"]).0, 0);
    assert_eq!(polylaw(&["verify", "--suite", "pda", "--bound", "2"]).0, 0);
    let (code, out) = polylaw(&["verify", "--suite", "polyaxioms", "--preset", "free2-mutated"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL") && out.contains("  at "), "{out}");
    assert_eq!(polylaw(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(polylaw(&["verify", "--bound", "0"]).0, 2);
    assert_eq!(polylaw(&["span", "1,2"]).0, 2);
    assert_eq!(polylaw(&["enumerate", "s2", "--n", "x", "--m", "1"]).0, 2);
    assert_eq!(polylaw(&["table", "--preset", "missing"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--bound", "2", "--seed", "9", "--format", "json"];
    let (code, a) = polylaw(&args);
    assert_eq!(code, 0);
    assert_eq!(a, polylaw(&args).1);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 9);
    assert_eq!(v["clean"], true);
    let tags: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["tag"].as_str().unwrap()).collect();
    assert!(tags.contains(&"pda6.local-mono"));
    assert!(tags.contains(&"free2:monad.assoc"));
}

/// Table JSON with the entry lists compared as sets.
fn canonical(json: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    for key in ["exchange", "composition"] {
        v[key].as_array_mut().unwrap().sort_by_key(|e| e.to_string());
    }
    v
}

#[test]
fn table_files_roundtrip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["terminal", "free2", "free2-mutated"] {
        let (code, json) = polylaw(&["table", "--preset", name, "--bound", "3"]);
        assert_eq!(code, 0);
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &json).unwrap();
        let p = path.to_str().unwrap();
        let (code, _) = polylaw(&["verify", "--suite", "polyaxioms", "--table", p]);
        assert_eq!(code, if name == "free2-mutated" { 1 } else { 0 }, "{name}");
        let back = polylaw::cli::parse_polytable(&path).unwrap();
        assert_eq!(canonical(&back.to_json()), canonical(&json));
    }
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"objects\": [").unwrap();
    assert_eq!(polylaw(&["verify", "--suite", "monad", "--table", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn compose_in_a_table() {
    let (code, out) = polylaw(&["compose", "--preset", "free2", "--g", "id_b", "--f", "m5", "--cut", "1,0"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("m5 :"), "{out}");
    assert_eq!(polylaw(&["compose", "--preset", "free2", "--g", "id_b", "--f", "m5", "--cut", "0,0"]).0, 2);
}
