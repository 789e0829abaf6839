use std::path::PathBuf;

use seqcalc::gen::{count_cuts, random_lk_proof, random_proof};
use seqcalc::search::logical_depth;
use seqcalc::translate::{translate_node, translate_proof, translate_sequent, Edge, TranslateError};
use seqcalc::{check_proof, parse_proof, parse_sequent, CalculusId, LogicId, Node};

const LK_EDGES: [Edge; 4] = [Edge::LkInc, Edge::LkClc, Edge::LkIlcN, Edge::LkIlcV];

fn load(name: &str, logic: LogicId) -> seqcalc::Proof {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name);
    parse_proof(&std::fs::read_to_string(path).unwrap(), logic).unwrap()
}

/// The image checks in the target calculus and has exactly the mapped end sequent.
fn sound(n: &Node, e: Edge) {
    let t = translate_node(n, e).unwrap_or_else(|err| panic!("{e}: {err}\n{}", n.to_proof().to_file_string()));
    let checked = check_proof(&t.to_proof(), e.target()).unwrap_or_else(|v| panic!("{e}: {v}"));
    assert_eq!(checked.seq, translate_sequent(&n.seq, e).unwrap(), "{e}");
}

#[test]
fn lem_along_every_lk_edge() {
    let p = load("lem_lk.pf", LogicId::Cl);
    let n = check_proof(&p, CalculusId::Lk).unwrap();
    for e in LK_EDGES {
        sound(&n, e);
    }
    let q = translate_proof(&p, Edge::LkIlcN).unwrap();
    let s = check_proof(&q, CalculusId::IlcIota).unwrap().seq.clone();
    assert_eq!(s, parse_sequent("|- ?(!(neg !X par ?!bot) plus !X)", LogicId::Ille).unwrap());
}

#[test]
fn formula_images() {
    let f = seqcalc::parse_formula("(X => Y)", LogicId::Cl);
    assert!(f.is_err(), "=> is not classical");
    let cases = [
        (Edge::LkInc, "(X and tt)", "(?X with ??top)"),
        (Edge::LkInc, "(X ==> Y)", "(X => ?Y)"),
        (Edge::LkClc, "(X or ff)", "(!X plus !!bot)"),
        (Edge::LkClc, "(X ==> Y)", "(!X ->> Y)"),
    ];
    for (e, src, dst) in cases {
        let src = seqcalc::parse_formula(src, e.source().logic()).unwrap();
        let dst = seqcalc::parse_formula(dst, e.target().logic()).unwrap();
        assert_eq!(seqcalc::translate::translate_formula(&src, e).unwrap(), dst, "{e}");
    }
}

#[test]
fn fuzzed_lk_proofs_translate_soundly() {
    let mut with_cuts = 0;
    for seed in 0..500 {
        let n = random_lk_proof(seed, 8);
        assert!(logical_depth(&n) <= 8);
        check_proof(&n.to_proof(), CalculusId::Lk).unwrap();
        with_cuts += usize::from(count_cuts(&n) > 0);
        for e in LK_EDGES {
            sound(&n, e);
        }
    }
    assert!(with_cuts > 20, "only {with_cuts} fuzzed proofs carry a cut");
}

#[test]
fn embeddings_are_sound() {
    for seed in 0..200 {
        let n = random_proof(CalculusId::Llj, seed, 6, 1);
        sound(&n, Edge::LljIlc);
        let n = random_proof(CalculusId::Lj, seed, 6, 0);
        sound(&n, Edge::LjInc);
    }
}

#[test]
fn lj_cut_has_no_image() {
    let p = parse_proof("(cut (id X) (id X))", LogicId::Il).unwrap();
    let err = translate_proof(&p, Edge::LjInc).unwrap_err();
    assert!(matches!(err, TranslateError::NoImage { .. }), "{err}");
}

fn corpus(name: &str, logic: LogicId) -> seqcalc::Proof {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name);
    parse_proof(&std::fs::read_to_string(path).unwrap(), logic).unwrap()
}

/// Per-edge goldens: the image is the recorded tree, and its end sequent is
/// the one computed by hand from the formula tables.
#[test]
fn translation_goldens() {
    let lem = load("lem_lk.pf", LogicId::Cl);
    let dneg = corpus("dneg_lj.pf", LogicId::Il);
    let swap = corpus("swap_llj.pf", LogicId::Ill);
    let cases = [
        (&lem, Edge::LkInc, "lem_inc.pf", "|- ?((X => ?ff) or X)"),
        (&lem, Edge::LkClc, "lem_clc.pf", "|- (!(!X ->> !bot) plus !X)"),
        (&lem, Edge::LkIlcN, "lem_ilc_via_inc.pf", "|- ?(!(!X -o ?!bot) plus !X)"),
        (&lem, Edge::LkIlcV, "lem_ilc_via_clc.pf", "|- ?(!(!X -o ?!bot) plus !X)"),
        (&dneg, Edge::LjInc, "dneg_inc.pf", "X |- ((X => ff) => ff)"),
        (&swap, Edge::LljIlc, "swap_ilc.pf", "(X tensor Y) |- (Y tensor X)"),
    ];
    for (src, e, golden, seq) in cases {
        let logic = e.target().logic();
        let image = translate_proof(src, e).unwrap();
        assert_eq!(image, corpus(golden, logic), "{e}: image differs from {golden}");
        let checked = check_proof(&image, e.target()).unwrap();
        assert_eq!(checked.seq, parse_sequent(seq, logic).unwrap(), "{e}");
    }
    // the composite edges are the composition of their steps
    let inc = corpus("lem_inc.pf", LogicId::Ile);
    assert_eq!(translate_proof(&inc, Edge::IncIlc).unwrap(), corpus("lem_ilc_via_inc.pf", LogicId::Ille));
    let clc = corpus("lem_clc.pf", LogicId::CllMinus);
    assert_eq!(translate_proof(&clc, Edge::ClcIlc).unwrap(), corpus("lem_ilc_via_clc.pf", LogicId::Ille));
}
