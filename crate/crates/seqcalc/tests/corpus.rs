use std::path::PathBuf;

use seqcalc::calculi::ViolationKind;
use seqcalc::search::logical_depth;
use seqcalc::{check_proof, in_subcalculus, parse_proof, parse_sequent, CalculusId, LogicId, Marker, Proof};

fn load(name: &str, logic: LogicId) -> Proof {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    parse_proof(&text, logic).unwrap()
}

#[test]
fn lem_checks_in_lk() {
    let p = load("lem_lk.pf", LogicId::Cl);
    let n = check_proof(&p, CalculusId::Lk).unwrap();
    assert_eq!(n.seq, parse_sequent("|- ((~ X) or X)", LogicId::Cl).unwrap());
    assert_eq!(p.depth(), 6);
}

#[test]
fn lem_fails_in_lj_at_two_succedents() {
    let p = load("lem_lj.pf", LogicId::Il);
    let v = check_proof(&p, CalculusId::Lj).unwrap_err();
    assert_eq!(v.kind, ViolationKind::SideCondition, "{v}");
    assert_eq!(v.rule, seqcalc::RuleId::FfR);
}

#[test]
fn parx_tensor_checks_in_ilc_iota() {
    let p = load("parx_tensor_ilci.pf", LogicId::Ille);
    let n = check_proof(&p, CalculusId::IlcIota).unwrap();
    assert_eq!(n.seq, parse_sequent("!(X par X) |- ?(X tensor X)", LogicId::Ille).unwrap());
    assert!(in_subcalculus(&p, CalculusId::IlcIota, Marker::BangWhy).unwrap());
    assert!(check_proof(&p, CalculusId::Ilc).is_err());
}

#[test]
fn parx_tensor_is_not_tractable() {
    let p = load("parx_tensor_ilci.pf", LogicId::Ille);
    let v = check_proof(&p, CalculusId::IlcRho).unwrap_err();
    assert_eq!(v.kind, ViolationKind::NotTractable { clause: 2 });
    assert!(v.path.is_empty());
}

#[test]
fn dist_derivations() {
    let goal = parse_sequent("!?X |- ?!X", LogicId::Ille).unwrap();
    for f in ["dist_a.pf", "dist_b.pf"] {
        let p = load(f, LogicId::Ille);
        let n = check_proof(&p, CalculusId::IlcIota).unwrap();
        assert_eq!(n.seq, goal);
        assert!(p.depth() <= 6);
        assert_eq!(logical_depth(&n), 4);
    }
    let p = load("dist_bang_why_l.pf", LogicId::Ille);
    assert_eq!(check_proof(&p, CalculusId::IlcDelta).unwrap().seq, goal);
}

#[test]
fn cut_pure_demo_is_tractable() {
    let p = load("cut_pure_demo.pf", LogicId::Ille);
    check_proof(&p, CalculusId::IlcRho).unwrap();
}
