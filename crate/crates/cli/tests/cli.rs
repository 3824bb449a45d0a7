use std::process::Command;

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cyclic-es"));
    cmd.args(args).env_remove("CYCLIC_ES_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with_env(args, &[])
}

/// Parses stdout as exactly one JSON document and checks the envelope.
fn doc(r: &Run) -> Value {
    let v: Value = serde_json::from_str(&r.stdout)
        .unwrap_or_else(|e| panic!("stdout is not one JSON document ({e}):\n{}", r.stdout));
    assert_eq!(v["exit_code"], json!(r.code), "{v}");
    if r.code == 0 {
        assert!(v.get("payload").is_some() && v.get("error").is_none(), "{v}");
    } else {
        assert!(v["error"]["kind"].is_string() && v["error"]["message"].is_string(), "{v}");
        assert!(!r.stderr.is_empty(), "diagnostic expected on stderr");
    }
    v
}

#[test]
fn golden_corpus_exit_codes() {
    let corpus: &[(&[&str], i32)] = &[
        (&["analyze", "1,2,3"], 0),
        (&["analyze", "(6,1,4,2,7,3,5)", "--cyclic"], 0),
        (&["analyze", "3,1,2", "--k", "2", "--l", "2"], 0),
        (&["analyze", "3,1,2", "--cyclic", "--k", "1", "--l", "1"], 0),
        (&["analyze", "2,2,3"], 2),
        (&["analyze", "1,5,2"], 2),
        (&["analyze", "1,x"], 2),
        (&["analyze", ""], 2),
        (&["analyze", "(1,2"], 2),
        (&["analyze", "1,2", "--k", "0", "--l", "1"], 2),
        (&["analyze", "1,2", "--k", "2"], 2),
        (&["construct", "4", "5"], 0),
        (&["construct", "4", "5", "--structure", "ii"], 0),
        (&["construct", "1", "5"], 1),
        (&["construct", "4", "5", "--structure", "iii"], 2),
        (&["count", "3", "3"], 0),
        (&["count", "20", "20"], 0),
        (&["count", "0", "3"], 1),
        (&["count", "three", "3"], 2),
        (&["bijection", "--forward", "3,1,4,2"], 0),
        (&["bijection", "--forward", "2,4,1,3", "--k", "2", "--l", "2"], 0),
        (&["bijection", "--forward", "1,2,3,4", "--k", "2", "--l", "2"], 1),
        (&["bijection", "--forward", "1,2,3", "--k", "2", "--l", "2"], 1),
        (&["bijection", "--inverse", "[[1,3],[2,4]]", "[[1,2],[3,4]]"], 0),
        (&["bijection", "--inverse", "[[1,3],[2,4]]", "[[1,2,3]]"], 1),
        (&["bijection", "--inverse", "[[2,1],[3,4]]", "[[1,2],[3,4]]"], 2),
        (&["bijection", "--inverse", "[[1,3],[2]]", "[[1,2],[3,4]]"], 2),
        (&["bijection", "--inverse", "not json", "[[1]]"], 2),
        (&["bijection"], 2),
        (&["bijection", "--forward", "1", "--inverse", "[[1]]", "[[1]]"], 2),
        (&["enumerate", "3", "3"], 0),
        (&["enumerate", "3", "4", "--limit", "1", "--offset", "1"], 0),
        (&["enumerate", "1", "3"], 1),
        (&["enumerate", "8", "8"], 1),
        (&["verify-alpha", "3", "3"], 0),
        (&["verify-alpha", "2", "2"], 0),
        (&["verify-alpha", "0", "2"], 1),
        (&["verify-alpha", "6", "6"], 1),
        (&["estimate-mu", "10", "50", "--seed", "3"], 0),
        (&["estimate-mu", "3,5,8", "20"], 0),
        (&["estimate-mu", "0", "20"], 2),
        (&["estimate-mu", "5", "0"], 2),
        (&["grid-export", "2,1,4,3"], 0),
        (&["grid-export", "2,1,4,3", "--k", "2", "--l", "2"], 0),
        (&["grid-export", "1,2,3,4", "--k", "2", "--l", "2"], 1),
        (&["grid-export", "2,1,4,4"], 2),
        (&["frobnicate"], 2),
        (&[], 2),
    ];
    for (args, expected) in corpus {
        let r = run(args);
        assert_eq!(r.code, *expected, "{args:?}\nstdout: {}\nstderr: {}", r.stdout, r.stderr);
        doc(&r);
    }
}

#[test]
fn analyze_examples() {
    let v = doc(&run(&["analyze", "(6,1,4,2,7,3,5)", "--cyclic"]));
    assert_eq!(v["payload"]["cyclic_lis"], 5);
    assert_eq!(v["payload"]["cyclic_lds"], 4);
    assert_eq!(v["payload"]["increasing_witness"]["values"], json!([1, 2, 3, 5, 6]));

    let v = doc(&run(&["analyze", "1,2,3"]));
    assert_eq!((v["payload"]["lis"].as_u64(), v["payload"]["lds"].as_u64()), (Some(3), Some(1)));

    let r = run(&["analyze", "2,2,3"]);
    assert_eq!(doc(&r)["error"]["kind"], "DuplicateValue");

    let v = doc(&run(&["analyze", "3,1,2", "--k", "2", "--l", "2"]));
    assert_eq!(v["payload"]["erdos_szekeres"]["satisfies"], false);
}

#[test]
fn construct_examples() {
    let v = doc(&run(&["construct", "4", "5", "--structure", "i"]));
    assert_eq!(v["payload"]["cycle"], json!([1, 11, 8, 5, 2, 12, 9, 6, 3, 13, 10, 7, 4]));
    assert_eq!(v["payload"]["verification"]["is_member"], true);
    let v = doc(&run(&["construct", "4", "5", "--structure", "ii"]));
    assert_eq!(v["payload"]["text"], "(1,5,9,13,4,8,12,3,7,11,2,6,10)");
    let r = run(&["construct", "1", "5"]);
    assert_eq!(doc(&r)["error"]["kind"], "InvalidBound");
}

#[test]
fn count_and_verify_alpha_examples() {
    let v = doc(&run(&["count", "3", "3"]));
    assert_eq!(v["payload"]["syt"], 42);
    assert_eq!(v["payload"]["extremal_linear"], 1764);

    // Beyond u64 the counts are decimal strings.
    let v = doc(&run(&["count", "20", "20"]));
    assert!(v["payload"]["syt"].is_string());

    let v = doc(&run(&["verify-alpha", "3", "3"]));
    let p = &v["payload"];
    assert_eq!((p["alpha"].as_u64(), p["all_forced"].as_bool()), (Some(6), Some(true)));
    assert_eq!(p["survivor_count"], 2);
    assert_eq!(p["survivors"], json!([[1, 3, 5, 2, 4], [1, 4, 2, 5, 3]]));
    assert_eq!(p["tableau_route_agrees"], true);
}

#[test]
fn bijection_round_trip_through_the_binary() {
    let v = doc(&run(&["bijection", "--forward", "3,6,2,5,1,4", "--k", "2", "--l", "3"]));
    let r = v["payload"]["ranking"]["entries"].to_string();
    let val = v["payload"]["valuation"]["entries"].to_string();
    let back = doc(&run(&["bijection", "--inverse", &r, &val]));
    assert_eq!(back["payload"]["permutation"], json!([3, 6, 2, 5, 1, 4]));
    assert_eq!((back["payload"]["k"].as_u64(), back["payload"]["ℓ"].as_u64()), (Some(2), Some(3)));
}

#[test]
fn estimates_are_reproducible_and_strategy_independent() {
    let a = run(&["estimate-mu", "400", "20", "--seed", "7"]);
    let b = run(&["--sequential", "estimate-mu", "400", "20", "--seed", "7"]);
    assert_eq!(doc(&a)["payload"], doc(&b)["payload"]);
    let p = &doc(&a)["payload"];
    for key in ["n", "samples", "mean", "std_error", "ratio", "seed"] {
        assert!(p.get(key).is_some(), "missing {key}");
    }
    let sweep = doc(&run(&["estimate-mu", "3,5", "10"]));
    assert_eq!(sweep["payload"]["estimates"].as_array().unwrap().len(), 2);
}

#[test]
fn enumerate_paginates() {
    let full = doc(&run(&["enumerate", "3", "4"]));
    assert_eq!(full["payload"]["total"], 2);
    let page = doc(&run(&["enumerate", "3", "4", "--offset", "1", "--limit", "5"]));
    assert_eq!(page["payload"]["cycles"], json!([full["payload"]["cycles"][1]]));
}

#[test]
fn csv_output_is_tabular() {
    let r = run(&["enumerate", "3", "3", "--format", "csv"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "index,cycle\n1,\"(1,3,5,2,4)\"\n2,\"(1,4,2,5,3)\"\n");

    let r = run(&["estimate-mu", "3,4", "10", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(r.stdout.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["n", "samples", "mean", "std_error", "ratio", "seed"]);
    assert_eq!(reader.records().count(), 2);
}

#[test]
fn budget_env_var_overrides_the_cap() {
    let r = run_with_env(&["verify-alpha", "3", "3"], &[("CYCLIC_ES_BUDGET", "10")]);
    assert_eq!(r.code, 1);
    assert_eq!(doc(&r)["error"]["kind"], "BudgetExceeded");

    let r = run_with_env(&["enumerate", "3", "3"], &[("CYCLIC_ES_BUDGET", "lots")]);
    assert_eq!(r.code, 2);
    doc(&r);
}

#[test]
fn grid_export_schema() {
    let v = doc(&run(&["grid-export", "2,1,4,3"]));
    assert_eq!(
        v["payload"],
        json!({
            "points": [[1, 2], [2, 1], [3, 4], [4, 3]],
            "edges": [[1, 2, "neg"], [1, 3, "pos"], [2, 4, "pos"], [3, 4, "neg"]],
        })
    );
}

#[test]
fn help_writes_json_to_stdout() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    let v = doc(&r);
    assert!(v["payload"]["text"].as_str().unwrap().contains("verify-alpha"));
}
