use std::time::Instant;

use seqcalc::search::{search_cutfree, search_with, SearchConfig, Verdict};
use seqcalc::{check_proof, parse_sequent, CalculusId, LogicId, Sequent};

fn seq(s: &str, l: LogicId) -> Sequent {
    parse_sequent(s, l).unwrap()
}

fn assert_found(goal: &Sequent, c: CalculusId, bound: usize) {
    let r = search_cutfree(goal, c, bound).unwrap();
    let p = r.found().unwrap_or_else(|| panic!("{goal} not found in {c} at {bound}"));
    let n = check_proof(p, c).unwrap();
    assert_eq!(&n.seq, goal);
    assert!(p.is_cut_free());
}

#[test]
fn neg_par_excluded_middle_in_ilc() {
    assert_found(&seq("|- (neg X par X)", LogicId::Ille), CalculusId::Ilc, 5);
}

#[test]
fn identity_at_bound_zero() {
    for c in CalculusId::ALL {
        if c.is_rho() {
            continue;
        }
        assert_found(&seq("X |- X", c.logic()), c, 0);
    }
}

#[test]
fn dist_needs_weakly_distributive_rules() {
    let t = Instant::now();
    let goal = seq("!?X |- ?!X", LogicId::Ille);
    assert_found(&goal, CalculusId::IlcIota, 6);
    let r = search_with(&goal, CalculusId::Ilc, &SearchConfig::new(12)).unwrap();
    assert_eq!(r.verdict, Verdict::Exhausted { bound: 12 });
    assert!(!r.truncated);
    eprintln!("dist: {:?}, {} nodes", t.elapsed(), r.nodes_explored);
}

#[test]
fn excluded_middle_classical_only() {
    let t = Instant::now();
    assert_found(&seq("|- ((~ X) or X)", LogicId::Cl), CalculusId::Lk, 8);
    let r = search_cutfree(&seq("|- ((X star) or X)", LogicId::Il), CalculusId::Lj, 10).unwrap();
    assert_eq!(r.verdict, Verdict::Exhausted { bound: 10 });
    eprintln!("lem: {:?}", t.elapsed());
}
