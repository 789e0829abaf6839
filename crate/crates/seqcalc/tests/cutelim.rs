use std::path::PathBuf;

use seqcalc::cutelim::{
    cut_sites, cut_step, eliminate_cuts, eliminate_node, merge_multicut, select_cut, unfold_multicut, CutElimError,
    Options,
};
use seqcalc::gen::{count_cuts, random_contraction_cut, random_cut_proof, random_rho_cut};
use seqcalc::purity::is_tractable;
use seqcalc::{check_proof, parse_proof, CalculusId, LogicId, Node, Params, RuleId};

fn load(name: &str, logic: LogicId) -> seqcalc::Proof {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name);
    parse_proof(&std::fs::read_to_string(path).unwrap(), logic).unwrap()
}

fn ilc(text: &str) -> Node {
    check_proof(&parse_proof(text, LogicId::Ille).unwrap(), CalculusId::Ilc).unwrap()
}

/// Runs the engine, checking every intermediate proof keeps the end sequent
/// and the output is a cut-free proof of `c`.
fn run(n: &Node, c: CalculusId) -> Result<(Node, Vec<String>), CutElimError> {
    let mut steps = 0;
    let out = eliminate_node(n, c, &Options::default(), &mut |m, _| {
        assert_eq!(m.seq, n.seq, "end sequent changed");
        steps += 1;
    })?;
    assert_eq!(count_cuts(&out.proof), 0);
    let checked = check_proof(&out.proof.to_proof(), c).unwrap_or_else(|v| panic!("{c}: output does not check: {v}"));
    assert_eq!(checked.seq, n.seq);
    Ok((out.proof, out.trace.into_iter().map(|t| t.case).collect()))
}

#[test]
fn selects_the_higher_rank_cut() {
    let n = ilc("(cut (cut (id !X) (bang-d (id X))) (id X))");
    let s = select_cut(&n).unwrap();
    assert_eq!(s.path, vec![0]);
    assert_eq!((s.rank, s.multiplicity), (1, 1));
    let (m, _) = cut_step(&n, &s, CalculusId::Ilc).unwrap();
    assert_eq!(select_cut(&m).unwrap().rank, 0);
    assert!(select_cut(&ilc("(id X)")).is_none());
}

#[test]
fn topmost_among_equal_ranks() {
    let n = ilc("(cut (id X) (cut (id X) (id X)))");
    assert_eq!(select_cut(&n).unwrap().path, vec![1]);
}

#[test]
fn identity_cuts() {
    let n = ilc("(cut (id X) (id X))");
    let (m, case) = cut_step(&n, &select_cut(&n).unwrap(), CalculusId::Ilc).unwrap();
    assert_eq!(case, "Left Id-cut");
    assert_eq!(m.rule, RuleId::Id);
}

#[test]
fn id_chains_collapse() {
    for len in 1..=10 {
        let mut text = "(id !X)".to_string();
        for k in 0..len {
            text = if k % 2 == 0 { format!("(cut (id !X) {text})") } else { format!("(cut {text} (id !X))") };
        }
        let n = ilc(&text);
        let (m, _) = run(&n, CalculusId::Ilc).unwrap();
        assert_eq!(m.rule, RuleId::Id, "chain of {len}");
    }
}

#[test]
fn top_cut_is_principal() {
    let n = ilc("(cut (top-r) (top-l (id X)))");
    let (m, case) = cut_step(&n, &select_cut(&n).unwrap(), CalculusId::Ilc).unwrap();
    assert_eq!(case, "(⊤R,⊤L)-cut");
    assert_eq!(m.to_proof(), parse_proof("(id X)", LogicId::Ille).unwrap());
}

#[test]
fn contraction_yields_a_double_multicut() {
    let n = ilc("(cut (bang-r (top-r)) (bang-c (bang-w :intro !top (bang-w :intro !top (top-r)))))");
    let (m, case) = cut_step(&n, &select_cut(&n).unwrap(), CalculusId::Ilc).unwrap();
    assert_eq!(case, "(!R,!C)-cut");
    let sites = cut_sites(&m);
    assert_eq!(sites.len(), 1);
    assert_eq!(sites[0].multiplicity, 2);
    run(&n, CalculusId::Ilc).unwrap();
}

#[test]
fn merge_and_unfold_round_trip() {
    let n = ilc("(cut (bang-r (top-r)) (cut (bang-r (top-r)) (bang-w :intro !top (bang-w :intro !top (top-r)))))");
    let m = merge_multicut(&n, &[], CalculusId::Ilc).unwrap();
    assert_eq!(m.rule, RuleId::CutLn);
    assert_eq!(m.params.occ.as_deref(), Some(&[0, 1][..]));
    assert_eq!(m.seq, n.seq);
    assert_eq!(unfold_multicut(&m, &[], CalculusId::Ilc).unwrap(), n);

    let single = ilc("(cut (id X) (id X))");
    let m = merge_multicut(&single, &[], CalculusId::Ilc).unwrap();
    assert_eq!((m.rule, m.params.occ.clone()), (RuleId::CutLn, Some(vec![0])));
    assert_eq!(unfold_multicut(&m, &[], CalculusId::Ilc).unwrap(), single);
}

#[test]
fn empty_multicut_does_nothing() {
    let p = ilc("(id X)");
    let q = ilc("(top-r)");
    let n = Node::mk(CalculusId::Ilc, RuleId::CutLn, Params::multicut(0, vec![]), vec![p, q.clone()]).unwrap();
    let (m, case) = cut_step(&n, &select_cut(&n).unwrap(), CalculusId::Ilc).unwrap();
    assert_eq!(m, q);
    assert_eq!(case, "CutL⁰");
}

#[test]
fn cut_free_input_is_unchanged() {
    let p = load("dist_a.pf", LogicId::Ille);
    let p2 = parse_proof("(bang-r (why-d (id X)))", LogicId::Ille).unwrap();
    assert_eq!(eliminate_cuts(&p2, CalculusId::Ilc), Err(CutElimError::Input(check_proof(&p2, CalculusId::Ilc).unwrap_err())));
    assert_eq!(eliminate_cuts(&p, CalculusId::IlcRho).unwrap(), p);
}

#[test]
fn dist_cut_in_ilc_delta() {
    let p = load("dist_bang_why_l.pf", LogicId::Ille);
    let out = eliminate_cuts(&p, CalculusId::IlcDelta).unwrap();
    assert!(out.is_cut_free());
    assert_eq!(out, parse_proof("(dist X)", LogicId::Ille).unwrap());
}

#[test]
fn unsupported_calculi() {
    let p = parse_proof("(cut (id X) (id X))", LogicId::Cl).unwrap();
    assert_eq!(eliminate_cuts(&p, CalculusId::Lk), Err(CutElimError::Unsupported(CalculusId::Lk)));
    let p = parse_proof("(cut (id X) (id X))", LogicId::Ille).unwrap();
    assert_eq!(eliminate_cuts(&p, CalculusId::IlcIota), Err(CutElimError::Unsupported(CalculusId::IlcIota)));
}

fn fuzz(c: CalculusId, seeds: std::ops::Range<u64>, depth: usize) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    let mut steps = 0;
    for seed in seeds {
        let n = random_cut_proof(c, seed, depth);
        assert!(count_cuts(&n) >= 1);
        match run(&n, c) {
            Ok((_, trace)) => steps += trace.len(),
            Err(e) => failures.push(format!("seed {seed}: {e}\n{}", n.to_proof().to_file_string())),
        }
    }
    (steps, failures)
}

#[test]
fn fuzzed_ilc_cuts_eliminate() {
    let (steps, failures) = fuzz(CalculusId::Ilc, 0..500, 6);
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
    assert!(steps > 500);
}

#[test]
fn fuzzed_inc_cuts_eliminate() {
    let (_, failures) = fuzz(CalculusId::Inc, 0..200, 5);
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn fuzzed_clc_cuts_eliminate() {
    let (_, failures) = fuzz(CalculusId::Clc, 0..200, 5);
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn rho_preserves_tractability() {
    let mut tried = 0;
    let mut failures = Vec::new();
    for seed in 0..600 {
        let n = random_cut_proof(CalculusId::IlcIota, seed, 6);
        if is_tractable(&n, CalculusId::IlcRho).is_err() {
            continue;
        }
        tried += 1;
        match run(&n, CalculusId::IlcRho) {
            Ok((m, _)) => {
                if let Err(v) = is_tractable(&m, CalculusId::IlcRho) {
                    failures.push(format!("seed {seed}: output not tractable: {v}"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}\n{}", n.to_proof().to_file_string())),
        }
    }
    assert!(tried > 100, "only {tried} tractable inputs");
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn contracted_cut_formulas() {
    let mut failures = Vec::new();
    let mut multi = 0;
    for seed in 0..300 {
        let n = random_contraction_cut(CalculusId::Ilc, seed, 5);
        let mut saw = false;
        let r = eliminate_node(&n, CalculusId::Ilc, &Options::default(), &mut |m, _| {
            assert_eq!(m.seq, n.seq);
            saw |= cut_sites(m).iter().any(|s| s.multiplicity >= 2);
        });
        multi += usize::from(saw);
        match r {
            Ok(o) => {
                assert_eq!(check_proof(&o.proof.to_proof(), CalculusId::Ilc).unwrap().seq, n.seq);
            }
            Err(e) => failures.push(format!("seed {seed}: {e}\n{}", n.to_proof().to_file_string())),
        }
    }
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
    assert!(multi > 100, "only {multi} runs went through a multicut");
}

#[test]
fn rho_bang_why_cuts() {
    let (mut pure, mut impure, mut tried) = (0, 0, 0);
    let mut failures = Vec::new();
    for seed in 0..400 {
        let n = random_rho_cut(seed);
        if is_tractable(&n, CalculusId::IlcRho).is_err() {
            continue;
        }
        tried += 1;
        match run(&n, CalculusId::IlcRho) {
            Ok((m, trace)) => {
                pure += usize::from(trace.iter().any(|t| t.ends_with("pure") && !t.ends_with("impure")));
                impure += usize::from(trace.iter().any(|t| t.ends_with("impure")));
                if let Err(v) = is_tractable(&m, CalculusId::IlcRho) {
                    failures.push(format!("seed {seed}: output not tractable: {v}"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}\n{}", n.to_proof().to_file_string())),
        }
    }
    assert!(failures.is_empty(), "{} failures of {tried}:\n{}", failures.len(), failures.join("\n"));
    assert!(pure > 20 && impure > 20, "pure {pure}, impure {impure} of {tried}");
}
