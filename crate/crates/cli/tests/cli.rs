use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use tropgrass::exactalg::{plucker_ideal, Field};
use tropgrass::treespace::SemiLabeledTree;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropgrass"))
        .args(args)
        .env_remove("TROPGRASS_BUDGET")
        .env_remove("TROPGRASS_SEED")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tropgrass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn all_pass(r: &Value) -> bool {
    r["claims"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true)
}

#[test]
fn treespace_stats_for_six_leaves() {
    let out = run(&["treespace", "stats", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["f_vector"], serde_json::json!([25, 105, 105]));
    assert_eq!(r["result"]["facets"], 105);
    assert!(all_pass(&r));
}

#[test]
fn treespace_verify_initial_in_char_two() {
    let out = run(&[
        "treespace",
        "verify-initial",
        "--n",
        "6",
        "--trees",
        "3",
        "--char",
        "2",
        "--seed",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["claims"].as_array().unwrap().len(), 3);
}

#[test]
fn g36_verify_with_homology_and_links() {
    let out = run(&["g36", "verify", "--homology", "--links"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let betti = r["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "Betti numbers")
        .unwrap();
    assert_eq!(betti["actual"], serde_json::json!([1, 0, 0, 126]));
    assert!(all_pass(&r));
}

#[test]
fn char7_depends_on_characteristic() {
    let two = run(&["char7", "demo", "--char", "2"]);
    assert_eq!(two.status.code(), Some(0));
    let r = report(&two);
    assert_eq!(r["result"]["witness"], Value::Null);

    let zero = run(&["char7", "demo", "--char", "0"]);
    assert_eq!(zero.status.code(), Some(0));
    assert_eq!(report(&zero)["result"]["witness"], "p_123*p_467*p_567");

    let flipped = run(&["char7", "demo", "--char", "2", "--wprime"]);
    assert_eq!(flipped.status.code(), Some(0));
    assert_ne!(report(&flipped)["result"]["witness"], Value::Null);
}

#[test]
fn budget_exhaustion_is_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_tropgrass"))
        .args(["char7", "demo"])
        .env("TROPGRASS_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let r = report(&out);
    assert_eq!(r["status"], "budget_exceeded");
    assert_eq!(r["config"]["budget"], 1);
}

#[test]
fn tree_round_trip_through_csv() {
    let t = SemiLabeledTree::from_labels(6, &["12|3456", "34|1256", "56|1234"]).unwrap();
    let mut csv = Vec::new();
    t.to_dissimilarity().write_distance_csv(&mut csv).unwrap();
    let path = scratch("cherries.csv", std::str::from_utf8(&csv).unwrap());
    let newick = path.with_extension("nwk");
    let out = run(&[
        "tree",
        "reconstruct",
        path.to_str().unwrap(),
        "--newick",
        newick.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["newick"], t.to_newick());
    assert_eq!(
        std::fs::read_to_string(&newick).unwrap().trim(),
        t.to_newick()
    );
    assert_eq!(r["result"]["tree"]["splits"].as_array().unwrap().len(), 3);
}

#[test]
fn non_tree_matrix_is_a_mismatch() {
    // d12 + d34 = 6 is the unique largest pair sum on 1234
    let path = scratch("bad.csv", "0,1,2,2\n1,0,2,2\n2,2,0,5\n2,2,5,0\n");
    let out = run(&["tree", "reconstruct", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["status"], "mismatch");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let path = scratch("ragged.csv", "0,1\n1,0,3\n");
    assert_eq!(
        run(&["tree", "reconstruct", path.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["plane", "type", "--sample", "XYZ"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["treespace", "stats"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn plane_commands_on_samples() {
    let out = run(&["plane", "type", "--sample", "EEFF1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["type"].as_array().unwrap().len(), 28);

    let out = run(&["plane", "reconstruct", "--sample", "FFGG"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["plane", "member", "--sample", "FFGG", "--x", "0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["result"]["member"], true);
    let out = run(&["plane", "member", "--sample", "FFGG", "--x", "9,0,0,0,0,-9"]);
    assert_eq!(report(&out)["result"]["member"], false);
}

#[test]
fn plane_dual_from_file() {
    let w = tropgrass::PlueckerVector::sum_of_units(2, 6, &["12", "34", "56"]).unwrap();
    let path = scratch("w.json", &w.to_json().to_string());
    let out = run(&["plane", "dual", "--plucker", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["circuits"].as_array().unwrap().len(), 6);
    assert_eq!(r["result"]["dual"]["d"], 4);
}

#[test]
fn groebner_commands_on_i24() {
    let ideal = plucker_ideal(2, 4, Field::Rational).unwrap();
    let path = scratch("i24.json", &ideal.to_json().to_string());
    let p = path.to_str().unwrap();

    let out = run(&["groebner", "degree", "--ideal", p]);
    assert_eq!(report(&out)["result"]["degree"], "2");

    // weight 1 on p_13, p_24: the other two terms tie, so no monomial
    let out = run(&[
        "groebner",
        "monomial-free",
        "--ideal",
        p,
        "--w",
        "0,1,0,0,1,0",
    ]);
    assert_eq!(report(&out)["result"]["monomial_free"], true);
    let out = run(&[
        "groebner",
        "monomial-free",
        "--ideal",
        p,
        "--w",
        "0,1,1,1,1,0",
    ]);
    assert_eq!(report(&out)["result"]["monomial_free"], false);

    let out = run(&[
        "groebner",
        "initial",
        "--ideal",
        p,
        "--w",
        "0,1,0,0,1,0",
        "--char",
        "2",
    ]);
    let r = report(&out);
    assert_eq!(r["result"]["initial_ideal"]["characteristic"], 2);
    assert_eq!(
        r["result"]["initial_ideal"]["generators"]
            .as_array()
            .unwrap()
            .len(),
        1
    );

    let out = run(&["groebner", "intersect", "--ideal", p, "--other", p]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sagbi_demo_passes() {
    let out = run(&["sagbi", "demo"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["sagbi"], false);
    assert!(all_pass(&r));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "treespace",
        "verify-initial",
        "--n",
        "5",
        "--trees",
        "2",
        "--seed",
        "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let path = std::env::temp_dir().join(format!("tropgrass-cli-out-{}.json", std::process::id()));
    let c = run(&[
        "treespace",
        "stats",
        "--n",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(c.stdout.is_empty());
    assert_eq!(
        std::fs::read(&path).unwrap(),
        run(&["treespace", "stats", "--n", "5"]).stdout
    );
}
