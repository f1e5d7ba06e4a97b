use std::io::Write;
use std::process::{Command, Output, Stdio};

fn kbe(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kbe"))
        .args(args)
        .env_remove("KBE_WORKERS")
        .env_remove("KBE_MAX_STEPS")
        .env_remove("KBE_MAX_VERTICES")
        .env_remove("KBE_MAX_BICLIQUES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: &str) -> String {
    let out = kbe(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn named(what: &[&str]) -> String {
    let mut args = vec!["named"];
    args.extend_from_slice(what);
    stdout(&args, "")
}

/// Every labeled graph on `n` vertices, in graph6.
fn all_labeled(n: usize) -> String {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut text = String::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<String> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, (a, b))| format!("{a} {b}"))
            .collect();
        let list = format!("n {n}\n{}\n", edges.join("\n"));
        text.push_str(&stdout(
            &["kbe", "--steps", "0", "--input-format", "edge-list"],
            &list,
        ));
    }
    text
}

#[test]
fn two_steps_empty_k5() {
    let k5 = named(&["complete", "5"]);
    let once = stdout(&["kbe", "--output-format", "json"], &k5);
    assert!(once.contains("\"n\":10"), "{once}");
    // graph6 of the graph with no vertices.
    assert_eq!(stdout(&["kbe", "--steps", "2"], &k5), "?\n");
}

#[test]
fn partition_of_k4_has_six_classes() {
    let out = stdout(&["partition", "--verify"], &named(&["complete", "4"]));
    assert!(out.starts_with("k=6\n"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with('E')).count(), 6);
    let json = stdout(
        &["partition", "--output-format", "json"],
        &named(&["cycle", "5"]),
    );
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["k"], 1);
}

#[test]
fn disconnected_partition_needs_flag() {
    let two = stdout(
        &["kbe", "--steps", "0", "--input-format", "edge-list"],
        "n 4\n0 1\n2 3\n",
    );
    let out = kbe(&["partition"], &two);
    assert_eq!(out.status.code(), Some(1));
    let out = stdout(&["partition", "--per-component"], &two);
    assert!(out.starts_with("k=2\n"), "{out}");
}

#[test]
fn identity_on_p3() {
    let out = stdout(&["verify-identity", "--verify"], &named(&["path", "3"]));
    assert_eq!(out, "OK: both sides isomorphic (K2)\n");
    let out = kbe(&["verify-identity"], &named(&["path", "2"]));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn formats_round_trip() {
    let p = named(&["petersen"]);
    let json = stdout(&["kbe", "--steps", "0", "--output-format", "json"], &p);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let mut list = format!("n {}\n", v["n"]);
    for e in v["edges"].as_array().unwrap() {
        list.push_str(&format!("{} {}\n", e[0], e[1]));
    }
    assert_eq!(
        stdout(
            &["kbe", "--steps", "0", "--input-format", "edge-list"],
            &list
        ),
        p
    );
    let dot = stdout(&["kbe", "--steps", "0", "--output-format", "dot"], &p);
    assert_eq!(dot.matches(" -- ").count(), 15);
}

#[test]
fn exit_codes() {
    assert_eq!(kbe(&["kbe"], "not graph6 !!\n").status.code(), Some(2));
    assert_eq!(kbe(&["named", "nonsense"], "").status.code(), Some(2));
    assert_eq!(kbe(&["kbe", "--workers", "0"], "").status.code(), Some(2));
    assert_eq!(kbe(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        kbe(&["kbe", "/nonexistent/file"], "").status.code(),
        Some(2)
    );
    // Not a burgeon graph.
    let c4 = named(&["cycle", "4"]);
    assert_eq!(kbe(&["burgeon", "--recognize"], &c4).status.code(), Some(1));
    // Over budget: KB_e(K5) has 10 vertices.
    let k5 = named(&["complete", "5"]);
    assert_eq!(
        kbe(&["kbe", "--max-vertices", "9"], &k5).status.code(),
        Some(1)
    );
}

#[test]
fn bad_record_does_not_stop_batch() {
    let input = format!(
        "{}garbage!\n{}",
        named(&["cycle", "5"]),
        named(&["cycle", "6"])
    );
    let out = kbe(&["kbe"], &input);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("input 2"));
}

#[test]
fn classify_emits_json_lines() {
    let input = named(&["complete", "5"]) + &named(&["net"]) + &named(&["necklace", "5", "1"]);
    let out = stdout(&["classify"], &input);
    let outcomes: Vec<String> = out
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["outcome"].to_string())
        .collect();
    assert_eq!(
        outcomes,
        [
            "\"converged_empty\"",
            "\"converged_fixed\"",
            "\"divergent_certified\""
        ]
    );
}

#[test]
fn necklace_search_prints_certificate() {
    let out = stdout(
        &["find-necklace", "--verify"],
        &named(&["necklace", "6", "2"]),
    );
    assert!(out.starts_with("(6,"), "{out}");
    assert!(out.ends_with("exhaustive: true\n"));
    let out = stdout(&["find-necklace"], &named(&["cycle", "7"]));
    assert_eq!(out, "none found\nexhaustive: true\n");
}

#[test]
fn burgeon_round_trip() {
    let b = stdout(&["burgeon", "--verify"], &named(&["star", "3"]));
    let host = stdout(&["burgeon", "--recognize", "--verify"], &b);
    let json = stdout(&["kbe", "--steps", "0", "--output-format", "json"], &host);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn fixed_points_on_five_vertices_are_c5() {
    let input = all_labeled(5);
    let out = stdout(&["fixed-points", "--verify"], &input);
    let rows: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // The 12 labeled copies of C5; nothing else on five vertices is fixed.
    assert_eq!(rows.len(), 12);
    for r in rows {
        assert_eq!(
            (r["n"].as_u64(), r["m"].as_u64(), r["girth"].as_u64()),
            (Some(5), Some(5), Some(5))
        );
    }
}

#[test]
fn output_independent_of_workers() {
    let input = all_labeled(4);
    let one = stdout(&["classify", "--workers", "1"], &input);
    let three = stdout(&["classify", "--workers", "3"], &input);
    assert_eq!(one, three);
    assert_eq!(one.lines().count(), 64);
}

#[test]
fn env_overrides_budget() {
    let k5 = named(&["complete", "5"]);
    let out = Command::new(env!("CARGO_BIN_EXE_kbe"))
        .args(["kbe", "-"])
        .env("KBE_MAX_VERTICES", "9")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(k5.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn named_list() {
    let out = stdout(&["named", "--list"], "");
    assert!(out.contains("petersen"));
}
