use std::process::{Command, Output};

fn seqcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqcalc"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    let text = stdout(o);
    serde_json::from_str(text.lines().last().unwrap()).unwrap()
}

#[test]
fn check_lem() {
    let o = seqcalc(&["check", "examples/lem_lk.pf", "--calculus", "lk"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = seqcalc(&["check", "examples/lem_lj.pf", "--calculus", "lj"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn tractable_reports_cut_purity() {
    let o = seqcalc(&["tractable", "examples/parx_tensor_ilci.pf", "--calculus", "ilc-rho", "--json"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("clause 2"));
    let j = json(&o);
    assert_eq!(j["schema"], 1);
    assert_eq!(j["clause"], 2);
    assert_eq!(j["tractable"], false);
    let o = seqcalc(&["tractable", "examples/dist_a.pf", "--calculus", "ilc-rho"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn commute_lem() {
    let o = seqcalc(&["commute", "examples/lem_lk.pf", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["commutes"], true);
}

#[test]
fn search_verdicts() {
    let o = seqcalc(&["search", "!?X |- ?!X", "--calculus", "ilc-iota", "--depth", "6"]);
    assert_eq!(code(&o), 0);
    let o = seqcalc(&["search", "!?X |- ?!X", "--calculus", "ilc", "--depth", "6", "--contraction-budget", "1", "--json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["found"], false);
}

#[test]
fn translate_edges() {
    let o = seqcalc(&["translate", "examples/lem_lk.pf", "--edge", "lk-ilc-n", "--json"]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    assert_eq!(j["target"], "ilc-iota");
    assert_eq!(j["edge"], "lk-ilc-n");
    let o = seqcalc(&["translate", "examples/lem_lk.pf", "--edge", "nowhere"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn cutelim_trace_and_fuel() {
    let o = seqcalc(&["cutelim", "examples/cut_pure_demo.pf", "--calculus", "ilc", "--trace"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("Id-cut"));
    let o = seqcalc(&["cutelim", "examples/dist_bang_why_l.pf", "--calculus", "ilc-delta", "--fuel", "0"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn formula_commands() {
    let o = seqcalc(&["rank", "?!X"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "2"));
    let o = seqcalc(&["dual", "(X tensor !Y)"]);
    assert_eq!(stdout(&o).trim(), "(X^ par ?Y^)");
    let o = seqcalc(&["parse", "(X par", "--json"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["schema"], 1);
    let o = seqcalc(&["parse", "examples/lem_lk.pf", "--logic", "cl"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&seqcalc(&["frobnicate"])), 2);
}
