//! End-to-end checks of the binary: output determinism, exit codes, and the
//! file formats.

use std::process::{Command, Output};

fn symgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn json_output_is_byte_identical_for_same_argv_and_seed() {
    let args = ["numth", "zsig", "--max-m", "10", "--max-q", "16", "--seed", "5"];
    let a = symgraph(&args);
    let b = symgraph(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "same argv and seed must be byte-identical");
    // Parse and check the reproducibility header.
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["seed"], 5);
}

#[test]
fn group_order_from_catalogue_and_from_file() {
    let out = symgraph(&["group", "order", "--file", "M12", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "95040");

    // Same record via a temp file exercises the parser path.
    let dir = std::env::temp_dir().join("symgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a9.grp");
    std::fs::write(
        &path,
        "name A9test\ndegree 9\norder 181440\ngen (1,2,3)\ngen (1,2,3,4,5,6,7,8,9)\n",
    )
    .unwrap();
    let out = symgraph(&["group", "order", "--file", path.to_str().unwrap(), "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "181440");
}

#[test]
fn order_mismatch_is_fatal_with_input_error_code() {
    let dir = std::env::temp_dir().join("symgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.grp");
    std::fs::write(
        &path,
        "name Bad\ndegree 5\norder 61\ngen (1,2,3)\ngen (3,4,5)\n",
    )
    .unwrap();
    let out = symgraph(&["group", "order", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("order mismatch"), "stderr: {err}");
}

#[test]
fn usage_errors_exit_2() {
    let out = symgraph(&["group", "order"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn claims_pass_and_fail_codes() {
    let out = symgraph(&["claims", "run", "TABLE1_LINE3", "--format", "text"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("[PASS] TABLE1_LINE3"));

    let out = symgraph(&["claims", "run", "NO_SUCH_CLAIM"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_and_json_agree_on_values() {
    let json = symgraph(&["numth", "ppart", "--n", "2520", "--p", "11"]);
    let text = symgraph(&["numth", "ppart", "--n", "2520", "--p", "11", "--format", "text"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["report"]["p_part"], "1");
    assert_eq!(String::from_utf8_lossy(&text.stdout).trim(), "1");
}

#[test]
fn graph_build_writes_readable_graph_files() {
    let dir = std::env::temp_dir().join("symgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.json");
    let out = symgraph(&[
        "graph", "build", "--group", "A4", "--h", "stab:3", "--x", "(1,2)(3,4)",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let props = symgraph(&["graph", "props", "--graph", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&props.stdout).unwrap();
    assert_eq!(v["report"]["vertex_count"], 4);
    assert_eq!(v["report"]["valency"], 3);
    assert_eq!(v["report"]["connected"], true);
}

// ---------------------------------------------------------------------------
// Structural validation of JSON outputs against the checked-in schemas.

fn schema(name: &str) -> serde_json::Value {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Minimal structural checker: every `required` property exists, and typed
/// properties match their declared primitive type where present.
fn check_schema(schema: &serde_json::Value, value: &serde_json::Value, ctx: &str) {
    if let Some(required) = schema["required"].as_array() {
        for key in required {
            let key = key.as_str().unwrap();
            assert!(
                !value[key].is_null() || schema["properties"][key]["type"]
                    .as_array()
                    .is_some_and(|ts| ts.iter().any(|t| t == "null")),
                "{ctx}: missing required field {key:?}"
            );
        }
    }
    if let Some(props) = schema["properties"].as_object() {
        for (key, sub) in props {
            let v = &value[key];
            if v.is_null() {
                continue;
            }
            match sub["type"].as_str() {
                Some("integer") => assert!(v.is_i64() || v.is_u64(), "{ctx}.{key} not integer"),
                Some("string") => assert!(v.is_string(), "{ctx}.{key} not string"),
                Some("boolean") => assert!(v.is_boolean(), "{ctx}.{key} not boolean"),
                Some("array") => {
                    assert!(v.is_array(), "{ctx}.{key} not array");
                    if let (Some(items), Some(arr)) = (sub.get("items"), v.as_array()) {
                        for (i, item) in arr.iter().enumerate() {
                            if items["type"] == "object" || items.get("required").is_some() {
                                check_schema(items, item, &format!("{ctx}.{key}[{i}]"));
                            }
                        }
                    }
                }
                Some("object") => check_schema(sub, v, &format!("{ctx}.{key}")),
                _ => {}
            }
        }
    }
}

#[test]
fn json_outputs_validate_against_checked_in_schemas() {
    // Envelope around any command.
    let out = symgraph(&["numth", "phi", "--m", "4", "--q", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    check_schema(&schema("envelope.schema.json"), &v, "envelope");

    // Search outcome.
    let out = symgraph(&[
        "search", "remark", "--h-file", "F21_TEST_UNUSED", "--r", "7",
    ]);
    assert_eq!(out.status.code(), Some(2)); // unknown group: input error

    let dir = std::env::temp_dir().join("symgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let f21 = dir.join("f21.grp");
    std::fs::write(
        &f21,
        "name F21\ndegree 7\norder 21\ngen (1,2,3,4,5,6,7)\ngen (2,3,5)(4,7,6)\n",
    )
    .unwrap();
    let out = symgraph(&[
        "search", "remark", "--h-file", f21.to_str().unwrap(), "--r", "7",
        "--ambient", "alt", "--mode", "exhaustive",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    check_schema(&schema("envelope.schema.json"), &v, "envelope");
    check_schema(&schema("search_outcome.schema.json"), &v["report"], "search");

    // Claim report array.
    let out = symgraph(&["claims", "run", "TABLE1_LINE1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for (i, rep) in v["report"].as_array().unwrap().iter().enumerate() {
        check_schema(&schema("claim_report.schema.json"), rep, &format!("claim[{i}]"));
    }

    // Catalogue listing.
    let out = symgraph(&["atlas", "list"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    check_schema(&schema("catalogue.schema.json"), &v["report"], "catalogue");
    for row in v["report"].as_array().unwrap() {
        check_schema(
            &schema("catalogue.schema.json")["items"],
            row,
            "catalogue row",
        );
    }

    // Graph json from a build.
    let k4 = dir.join("schema-k4.json");
    let out = symgraph(&[
        "graph", "build", "--group", "A4", "--h", "stab:3", "--x", "(1,2)(3,4)",
        "--out", k4.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&k4).unwrap()).unwrap();
    check_schema(&schema("graph.schema.json"), &v, "graph");
}
