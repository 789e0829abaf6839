use std::path::PathBuf;

use seqcalc::gen::{random_lk_proof, random_proof};
use seqcalc::normalize::{commute_check, commute_node, normalize_node, permutation_normalize};
use seqcalc::translate::{translate_proof, Edge};
use seqcalc::{check_proof, parse_proof, CalculusId, LogicId, Proof, RuleId};

fn load(name: &str, logic: LogicId) -> Proof {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name);
    parse_proof(&std::fs::read_to_string(path).unwrap(), logic).unwrap()
}

fn ille(text: &str) -> Proof {
    parse_proof(text, LogicId::Ille).unwrap()
}

fn has_cimp_l(p: &Proof) -> bool {
    p.count_rule(&|r| r == RuleId::CImpL) > 0
}

#[test]
fn dereliction_order_is_irrelevant() {
    let a = permutation_normalize(&ille("(why-d (bang-d (id X)))"), CalculusId::Ilc).unwrap();
    let b = permutation_normalize(&ille("(bang-d (why-d (id X)))"), CalculusId::Ilc).unwrap();
    assert_eq!(a, b);
}

#[test]
fn exchanges_are_canonical() {
    let p = ille("(tensor-l (tensor-r (id X) (id Y)))");
    let q = ille("(tensor-l (xl :at 0 (xl :at 0 (tensor-r (id X) (id Y)))))");
    let np = permutation_normalize(&p, CalculusId::Ilc).unwrap();
    assert_eq!(np, permutation_normalize(&q, CalculusId::Ilc).unwrap());
    assert_eq!(np, p);
}

#[test]
fn weakenings_float_above_promotion() {
    let c = CalculusId::Ilc;
    let a = ille("(bang-r (why-d (bang-w :intro !Y (bang-d (id X)))))");
    let b = ille("(bang-w :intro !Y (bang-r (why-d (bang-d (id X)))))");
    let nb = permutation_normalize(&b, c).unwrap();
    assert_eq!(permutation_normalize(&a, c).unwrap(), nb);
    assert_eq!(nb, b);
}

#[test]
fn rho_pairs_exchange() {
    let c = CalculusId::IlcIota;
    let a = permutation_normalize(&ille("(bang-why-l (bang-d (why-d (id X))))"), c).unwrap();
    let b = permutation_normalize(&ille("(bang-d (why-l (why-d (id X))))"), c).unwrap();
    assert_eq!(a, b);
    assert_eq!(b, ille("(bang-d (id ?X))"));
}

#[test]
fn dist_block_folds() {
    let c = CalculusId::IlcIota;
    let block = ille("(cut (bang-r (why-d (bang-d (id X)))) (bang-why-l (why-d (id !X))))");
    let folded = ille("(why-bang-r (why-d (bang-d (id X))))");
    let nb = permutation_normalize(&block, c).unwrap();
    assert_eq!(nb, permutation_normalize(&folded, c).unwrap());
}

#[test]
fn normal_forms_are_idempotent_and_sound() {
    let mut corpus: Vec<(Proof, CalculusId)> = Vec::new();
    for seed in 0..150 {
        let n = random_proof(CalculusId::IlcIota, seed, 6, 1);
        corpus.push((n.to_proof(), CalculusId::IlcIota));
        let n = random_lk_proof(seed, 6);
        for e in [Edge::LkIlcN, Edge::LkIlcV] {
            corpus.push((translate_proof(&n.to_proof(), e).unwrap(), CalculusId::IlcIota));
        }
    }
    for (p, c) in corpus {
        let n = check_proof(&p, c).unwrap();
        let once = normalize_node(&n, c).unwrap();
        assert_eq!(once.seq, n.seq);
        check_proof(&once.to_proof(), c).unwrap();
        let twice = normalize_node(&once, c).unwrap();
        assert_eq!(once.to_proof(), twice.to_proof());
    }
}

#[test]
fn lem_commutes() {
    let r = commute_check(&load("lem_lk.pf", LogicId::Cl)).unwrap();
    assert!(r.commutes(), "{:?}", r.divergence);
    let id = parse_proof("(id X)", LogicId::Cl).unwrap();
    assert!(commute_check(&id).unwrap().commutes());
}

#[test]
fn implication_free_fuzz_commutes() {
    let mut tried = 0;
    for seed in 0..500 {
        let n = random_lk_proof(seed, 8);
        if has_cimp_l(&n.to_proof()) {
            continue;
        }
        tried += 1;
        let r = commute_node(&n).unwrap();
        assert!(r.commutes(), "seed {seed}: {:?}\n{}", r.divergence, n.to_proof().to_file_string());
    }
    assert!(tried > 300);
}

/// Along the two routes the `⇛L` block cuts on `!?(!?A ⤳ ?B)` and
/// `!?(!A ⤳ ?!B)` respectively; no permutation identifies them.
#[test]
fn implication_left_diverges_at_its_cut() {
    let p = parse_proof("(c-imp-l (xr :at 0 (wr :intro Y (id X))) (xl :at 0 (wl :intro X (id Y))))", LogicId::Cl).unwrap();
    let r = commute_check(&p).unwrap();
    let d = r.divergence.expect("the two images differ");
    let inc = r.via_inc.at_path(&d.path).unwrap();
    let clc = r.via_clc.at_path(&d.path).unwrap();
    assert_eq!(inc.seq.right[0].to_string(), "!?(!?X -o ?Y)");
    assert_eq!(clc.seq.right[0].to_string(), "!?(!X -o ?!Y)");
}
