use std::collections::HashSet;
use std::path::PathBuf;

use seqcalc::purity::{constituents, is_pure, is_tractable_with, CountMode, Occ, OccurrenceRef};
use seqcalc::{check_proof, parse_proof, CalculusId, Formula, LogicId, Node, ViolationKind};

fn ilc(src: &str) -> Node {
    check_proof(&parse_proof(src, LogicId::Ille).unwrap(), CalculusId::IlcIota).unwrap()
}

fn parx() -> Node {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/parx_tensor_ilci.pf");
    ilc(&std::fs::read_to_string(path).unwrap())
}

/// `X, X ⊢ X ⊗ X` cut against `X ⊗ X ⊢ X ⊗ X`: the left cut formula shares
/// its sequent with two `X`s that are not its constituents.
const SPLIT: &str = "(cut (tensor-r (id X) (id X)) (tensor-l (tensor-r (id X) (id X))))";

fn left_cut_occ() -> OccurrenceRef {
    OccurrenceRef { path: vec![0], occ: Occ::r(0) }
}

fn right_cut_occ(root: &Node) -> OccurrenceRef {
    OccurrenceRef { path: vec![1], occ: Occ::l(root.prem[1].seq.left.len() - 1) }
}

fn formula_at(root: &Node, o: &OccurrenceRef) -> Formula {
    let n = root.at_path(&o.path).unwrap();
    let side = if o.occ == Occ::l(o.occ.index) { &n.seq.left } else { &n.seq.right };
    side[o.occ.index].clone()
}

#[test]
fn constituents_stay_inside_their_formula() {
    for root in [parx(), ilc(SPLIT)] {
        for o in [left_cut_occ(), right_cut_occ(&root)] {
            let a = formula_at(&root, &o);
            let mut subs: HashSet<Formula> = a.subformulas().into_iter().collect();
            // `!?L` and `?!R` trade `!?B` for `!B` and `?!B` for `?B`
            for f in subs.clone() {
                match &f {
                    Formula::Bang(b) => {
                        if let Formula::Why(c) = &**b {
                            subs.insert(Formula::Bang(c.clone()));
                        }
                    }
                    Formula::Why(b) => {
                        if let Formula::Bang(c) = &**b {
                            subs.insert(Formula::Why(c.clone()));
                        }
                    }
                    _ => {}
                }
            }
            let cons = constituents(&root, &o).unwrap();
            assert!(cons.contains(&o));
            for c in &cons {
                assert!(c.path.starts_with(&o.path), "{c:?} outside the subtree of {o:?}");
                assert!(subs.contains(&formula_at(&root, c)), "{c:?} is not built from {a}");
            }
            // every leaf below the occurrence contributes at least one constituent
            assert!(cons.iter().any(|c| root.at_path(&c.path).unwrap().prem.is_empty()));
        }
    }
}

#[test]
fn contraction_on_a_constituent_is_impure_in_both_modes() {
    let root = parx();
    for mode in [CountMode::Global, CountMode::Constituent] {
        assert!(!is_pure(&root, CalculusId::IlcRho, &left_cut_occ(), mode).unwrap());
        assert!(!is_pure(&root, CalculusId::IlcRho, &right_cut_occ(&root), mode).unwrap());
        let v = is_tractable_with(&root, CalculusId::IlcRho, mode).unwrap_err();
        assert_eq!(v.kind, ViolationKind::NotTractable { clause: 2 });
        assert!(v.path.is_empty());
    }
}

#[test]
fn counting_modes_differ_on_foreign_copies() {
    let root = ilc(SPLIT);
    let left = left_cut_occ();
    assert!(!is_pure(&root, CalculusId::IlcRho, &left, CountMode::Global).unwrap());
    assert!(is_pure(&root, CalculusId::IlcRho, &left, CountMode::Constituent).unwrap());
    // on the right both `X`s are constituents of the cut formula
    let right = right_cut_occ(&root);
    for mode in [CountMode::Global, CountMode::Constituent] {
        assert!(!is_pure(&root, CalculusId::IlcRho, &right, mode).unwrap());
    }
    assert!(is_tractable_with(&root, CalculusId::IlcRho, CountMode::Global).is_err());
    assert!(is_tractable_with(&root, CalculusId::IlcRho, CountMode::Constituent).is_ok());
}

#[test]
fn why_bang_r_breaks_clause_one() {
    let dist_b = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/dist_b.pf");
    let root = ilc(&std::fs::read_to_string(dist_b).unwrap());
    let v = is_tractable_with(&root, CalculusId::IlcRho, CountMode::Global).unwrap_err();
    assert_eq!(v.kind, ViolationKind::NotTractable { clause: 1 });
}
