//! Acceptance run: one PASS/FAIL line per criterion, diagnostics indented
//! below a failing line. Bounds, counts and time limits are pinned here.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use seqcalc::calculi::ViolationKind;
use seqcalc::cutelim::{eliminate_node, CutElimError, Options};
use seqcalc::gen::{count_cuts, random_cut_proof, random_lk_proof, random_rho_cut};
use seqcalc::normalize::commute_node;
use seqcalc::purity::is_tractable;
use seqcalc::search::{search_with, SearchConfig, Verdict};
use seqcalc::syntax::Bin;
use seqcalc::translate::{translate_node, Edge};
use seqcalc::{check_proof, parse_proof, parse_sequent, CalculusId, Formula, LogicId, Node, Proof, RuleId, Sequent};

const GOLDEN_TIME: Duration = Duration::from_secs(1);
const FUZZ_COUNT: u64 = 500;
const FUZZ_DEPTH: usize = 8;
const CUT_COUNT: u64 = 500;
const CUT_DEPTH: usize = 6;
const RHO_SEEDS: u64 = 600;
const SEARCH_TIME: Duration = Duration::from_secs(60);
const DIST_EXHAUST_BOUND: usize = 12;
const DIST_FOUND_BOUND: usize = 6;
const LEM_EXHAUST_BOUND: usize = 10;
const LEM_FOUND_BOUND: usize = 8;
const CONTRACTION_BUDGET: u8 = 2;
/// Conservativity: sequents of total size ≤ 4 over X, Y; LJ/INC share the
/// bound, and ILC gets twice the LLJ bound since each `⤳` rule becomes a
/// `¬`, `⅋` pair.
const CONS_SIZE: usize = 4;
const CONS_BOUND: usize = 6;
const SHOW: usize = 8;

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

fn outcome(pass: bool, summary: String, details: Vec<String>) -> Outcome {
    Outcome { pass, summary, details }
}

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(sub)
}

fn load(path: &Path, logic: LogicId) -> Proof {
    parse_proof(&std::fs::read_to_string(path).unwrap(), logic).unwrap()
}

fn example(name: &str, logic: LogicId) -> Proof {
    load(&dir("examples").join(name), logic)
}

fn seq(s: &str, l: LogicId) -> Sequent {
    parse_sequent(s, l).unwrap()
}

/// Every corpus file with the calculus it checks in (first match).
fn corpus() -> Vec<(String, Proof, CalculusId)> {
    use CalculusId::*;
    let order = [Lk, Lj, Llj, Inc, Clc, Ilc, IlcIota, IlcDelta];
    let mut out = Vec::new();
    for sub in ["examples", "corpus"] {
        let mut paths: Vec<PathBuf> = std::fs::read_dir(dir(sub)).unwrap().map(|e| e.unwrap().path()).collect();
        paths.sort();
        for path in paths {
            let text = std::fs::read_to_string(&path).unwrap();
            let name = format!("{sub}/{}", path.file_name().unwrap().to_string_lossy());
            let found = order.iter().find_map(|&c| {
                let p = parse_proof(&text, c.logic()).ok()?;
                check_proof(&p, c).ok().map(|_| (p, c))
            });
            if let Some((p, c)) = found {
                out.push((name, p, c));
            }
        }
    }
    out
}

// ---------------------------------------------------------------- oracles

fn bang(a: Formula) -> Formula {
    Formula::Bang(Arc::new(a))
}

fn why(a: Formula) -> Formula {
    Formula::Why(Arc::new(a))
}

fn bin(op: Bin, a: Formula, b: Formula) -> Formula {
    Formula::bin(op, a, b)
}

/// `A ⤳ B` in ILLᵉ is `¬A ⅋ B`.
fn lolli(a: Formula, b: Formula) -> Formula {
    bin(Bin::Par, Formula::Neg(Arc::new(a)), b)
}

/// The formula tables of the translation lemmas, transcribed per edge; the
/// two composite edges share the corollaries' single table.
fn image(f: &Formula, e: Edge) -> Formula {
    use Formula::*;
    let t = |x: &Formula| image(x, e);
    match (e, f) {
        (_, Var(_)) => f.clone(),
        (Edge::LkInc, Tt) => why(Top),
        (Edge::LkInc, Ff) => Ff,
        (Edge::LkInc, And(a, b)) => bin(Bin::With, why(t(a)), why(t(b))),
        (Edge::LkInc, Or(a, b)) => bin(Bin::Or, t(a), t(b)),
        (Edge::LkInc, CImp(a, b)) => bin(Bin::IImp, t(a), why(t(b))),
        (Edge::LkClc, Tt) => Tt,
        (Edge::LkClc, Ff) => bang(Bot),
        (Edge::LkClc, And(a, b)) => bin(Bin::And, t(a), t(b)),
        (Edge::LkClc, Or(a, b)) => bin(Bin::Plus, bang(t(a)), bang(t(b))),
        (Edge::LkClc, CImp(a, b)) => bin(Bin::LImp, bang(t(a)), t(b)),
        (Edge::LkIlcN | Edge::LkIlcV, Tt) => why(Top),
        (Edge::LkIlcN | Edge::LkIlcV, Ff) => bang(Bot),
        (Edge::LkIlcN | Edge::LkIlcV, And(a, b)) => bin(Bin::With, why(t(a)), why(t(b))),
        (Edge::LkIlcN | Edge::LkIlcV, Or(a, b)) => bin(Bin::Plus, bang(t(a)), bang(t(b))),
        (Edge::LkIlcN | Edge::LkIlcV, CImp(a, b)) => lolli(bang(t(a)), why(t(b))),
        (Edge::IncIlc, Top) => Top,
        (Edge::IncIlc, Ff) => bang(Bot),
        (Edge::IncIlc, With(a, b)) => bin(Bin::With, t(a), t(b)),
        (Edge::IncIlc, Or(a, b)) => bin(Bin::Plus, bang(t(a)), bang(t(b))),
        (Edge::IncIlc, IImp(a, b)) => lolli(bang(t(a)), t(b)),
        (Edge::IncIlc, Why(a)) => why(t(a)),
        (Edge::ClcIlc, Tt) => why(Top),
        (Edge::ClcIlc, Bot) => Bot,
        (Edge::ClcIlc, And(a, b)) => bin(Bin::With, why(t(a)), why(t(b))),
        (Edge::ClcIlc, Plus(a, b)) => bin(Bin::Plus, t(a), t(b)),
        (Edge::ClcIlc, LImp(a, b)) => lolli(t(a), why(t(b))),
        (Edge::ClcIlc, Bang(a)) => bang(t(a)),
        // the embeddings are the identity on formulas
        (Edge::LjInc | Edge::LljIlc, _) => f.clone(),
        _ => unreachable!("{e} on {f}"),
    }
}

/// `!𝒯*(Δ) ⊢ 𝒯*(Γ)` for `!`-edges, `𝒯*(Δ) ⊢ ?𝒯*(Γ)` for `?`-edges.
fn image_sequent(s: &Sequent, e: Edge) -> Sequent {
    let (lb, rq) = match e {
        Edge::LkInc | Edge::ClcIlc => (false, true),
        Edge::LkClc | Edge::IncIlc => (true, false),
        Edge::LkIlcN | Edge::LkIlcV => (true, true),
        Edge::LjInc | Edge::LljIlc => (false, false),
    };
    let l = s.left.iter().map(|f| if lb { bang(image(f, e)) } else { image(f, e) }).collect();
    let r = s.right.iter().map(|f| if rq { why(image(f, e)) } else { image(f, e) }).collect();
    Sequent::new(l, r)
}

fn subformulas(f: &Formula, out: &mut HashSet<Formula>) {
    out.insert(f.clone());
    if let Some((_, a)) = f.as_un() {
        subformulas(a, out);
    } else if let Some((_, a, b)) = f.as_bin() {
        subformulas(a, out);
        subformulas(b, out);
    }
}

/// First formula, anywhere in a proof, that is not a subformula of the root.
fn foreign_formula(n: &Node) -> Option<Formula> {
    let mut subs = HashSet::new();
    for f in n.seq.formulas() {
        subformulas(f, &mut subs);
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if let Some(f) = m.seq.formulas().find(|f| !subs.contains(*f)) {
            return Some(f.clone());
        }
        stack.extend(m.prem.iter());
    }
    None
}

/// Cut-free ILC proofs gathered for the subformula criterion.
#[derive(Default)]
struct Produced {
    proofs: Vec<(String, Node)>,
}

// --------------------------------------------------------------- criteria

fn golden() -> Outcome {
    let mut bad = Vec::new();
    let mut timed = |what: &str, f: &mut dyn FnMut() -> Result<(), String>| {
        let t = Instant::now();
        let r = f();
        if let Err(e) = r {
            bad.push(format!("{what}: {e}"));
        } else if t.elapsed() > GOLDEN_TIME {
            bad.push(format!("{what}: took {:?}", t.elapsed()));
        }
    };
    timed("lem_lk.pf in LK", &mut || {
        let n = check_proof(&example("lem_lk.pf", LogicId::Cl), CalculusId::Lk).map_err(|v| v.to_string())?;
        (n.seq == seq("|- ((~ X) or X)", LogicId::Cl)).then_some(()).ok_or(format!("end sequent {}", n.seq))
    });
    timed("lem_lj.pf in LJ", &mut || {
        let p = example("lem_lj.pf", LogicId::Il);
        let v = match check_proof(&p, CalculusId::Lj) {
            Ok(_) => return Err("checks, but must not".into()),
            Err(v) => v,
        };
        // the failing node would conclude its premise's succedent plus one formula
        let at = p.at_path(&v.path).ok_or("violation path outside the proof")?;
        let prem = check_proof(&at.premises[0], CalculusId::Lj).map_err(|v| v.to_string())?;
        let width = prem.seq.right.len() + usize::from(at.rule == RuleId::FfR);
        (width == 2).then_some(()).ok_or(format!("failure at {v} concludes {width} succedent formulas"))
    });
    timed("parx_tensor_ilci.pf in ILC_ι", &mut || {
        let n = check_proof(&example("parx_tensor_ilci.pf", LogicId::Ille), CalculusId::IlcIota)
            .map_err(|v| v.to_string())?;
        (n.seq == seq("!(X par X) |- ?(X tensor X)", LogicId::Ille)).then_some(()).ok_or(format!("end sequent {}", n.seq))
    });
    for f in ["dist_a.pf", "dist_b.pf"] {
        timed(&format!("{f} in ILC_ι"), &mut || {
            let p = example(f, LogicId::Ille);
            let n = check_proof(&p, CalculusId::IlcIota).map_err(|v| v.to_string())?;
            if n.seq != seq("!?X |- ?!X", LogicId::Ille) {
                return Err(format!("end sequent {}", n.seq));
            }
            (p.depth() <= 6).then_some(()).ok_or(format!("depth {}", p.depth()))
        });
    }
    outcome(bad.is_empty(), "golden derivations check (LJ rejection at two succedents), each < 1 s".into(), bad)
}

fn tractability(corpus: &[(String, Proof, CalculusId)]) -> Outcome {
    let mut bad = Vec::new();
    let p = example("parx_tensor_ilci.pf", LogicId::Ille);
    match check_proof(&p, CalculusId::IlcRho) {
        Err(v) if v.kind == ViolationKind::NotTractable { clause: 2 } => {}
        other => bad.push(format!("parx_tensor_ilci.pf in ILC_ρ: {:?}", other.map(|n| n.seq.clone()))),
    }
    let mut tried = 0;
    for (name, p, c) in corpus {
        let rho = match c {
            CalculusId::Lk => CalculusId::LkRho,
            CalculusId::Inc => CalculusId::IncRho,
            CalculusId::Clc => CalculusId::ClcRho,
            CalculusId::Ilc | CalculusId::IlcIota => CalculusId::IlcRho,
            _ => continue,
        };
        if !p.is_cut_free() || p.count_rule(&|r| r == RuleId::WhyBangR) > 0 {
            continue;
        }
        tried += 1;
        let n = check_proof(p, rho.parent()).unwrap();
        if let Err(v) = is_tractable(&n, rho) {
            bad.push(format!("{name} in {rho}: {v}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("parx_tensor_ilci.pf fails clause 2; {tried} cut-free corpus proofs without ?!R are tractable"),
        bad,
    )
}

const LK_EDGES: [Edge; 4] = [Edge::LkInc, Edge::LkClc, Edge::LkIlcN, Edge::LkIlcV];

fn lk_set(corpus: &[(String, Proof, CalculusId)]) -> Vec<(String, Node)> {
    let mut set: Vec<(String, Node)> = corpus
        .iter()
        .filter(|(_, _, c)| *c == CalculusId::Lk)
        .map(|(name, p, _)| (name.clone(), check_proof(p, CalculusId::Lk).unwrap()))
        .collect();
    set.extend((0..FUZZ_COUNT).map(|s| (format!("fuzz seed {s}"), random_lk_proof(s, FUZZ_DEPTH))));
    set
}

/// Translates along `e`, checks the image in the target and compares its
/// end sequent with the oracle's.
fn along(n: &Node, e: Edge) -> Result<Node, String> {
    let t = translate_node(n, e).map_err(|err| err.to_string())?;
    let checked = check_proof(&t.to_proof(), e.target()).map_err(|v| v.to_string())?;
    let want = image_sequent(&n.seq, e);
    (checked.seq == want).then_some(checked.clone()).ok_or(format!("end sequent {} instead of {want}", checked.seq))
}

fn translation(set: &[(String, Node)], corpus: &[(String, Proof, CalculusId)]) -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    let mut note = |r: Result<Node, String>, label: String| {
        total += 1;
        r.map_err(|err| bad.push(format!("{label}: {err}"))).ok()
    };
    for (name, n) in set {
        for e in LK_EDGES {
            let img = note(along(n, e), format!("{name} along {e}"));
            // second legs of the square, from the one-step images
            let next = match e {
                Edge::LkInc => Edge::IncIlc,
                Edge::LkClc => Edge::ClcIlc,
                _ => continue,
            };
            if let Some(m) = img {
                note(along(&m, next), format!("{name} along {e}, {next}"));
            }
        }
    }
    for (name, p, c) in corpus {
        let e = match c {
            CalculusId::Lj => Edge::LjInc,
            CalculusId::Llj => Edge::LljIlc,
            _ => continue,
        };
        let n = check_proof(p, *c).unwrap();
        note(along(&n, e), format!("{name} along {e}"));
    }
    outcome(
        bad.is_empty(),
        format!("{} of {total} translations over all eight edges check with the lemma end sequents", total - bad.len()),
        bad,
    )
}

fn commutativity(set: &[(String, Node)]) -> Outcome {
    let mut bad = Vec::new();
    let mut with_imp = 0;
    for (name, n) in set {
        match commute_node(n) {
            Ok(r) => {
                if let Some(d) = r.divergence {
                    let imp = n.to_proof().count_rule(&|r| r == RuleId::CImpL) > 0;
                    with_imp += usize::from(imp);
                    let cut = |m: &Node| m.at_path(&d.path).map(|x| x.seq.to_string()).unwrap_or_default();
                    bad.push(format!(
                        "{name}{}: at {:?} via INC `{}` / via CLC `{}`",
                        if imp { " (⇛L)" } else { "" },
                        d.path,
                        cut(&r.via_inc),
                        cut(&r.via_clc)
                    ));
                }
            }
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    let summary = format!(
        "{} of {} LK proofs commute; {} divergent, {} of them through ⇛L",
        set.len() - bad.len(),
        set.len(),
        bad.len(),
        with_imp
    );
    outcome(bad.is_empty(), summary, bad)
}

fn cut_elimination(produced: &mut Produced) -> Outcome {
    let mut bad = Vec::new();
    let mut no_case = 0;
    let mut run = |label: String, n: &Node, c: CalculusId, bad: &mut Vec<String>| -> Option<Node> {
        let mut drift = None;
        let r = eliminate_node(n, c, &Options::default(), &mut |m, line| {
            if m.seq != n.seq && drift.is_none() {
                drift = Some(line.step);
            }
        });
        if let Some(step) = drift {
            bad.push(format!("{label}: end sequent changed at step {step}"));
        }
        match r {
            Ok(o) => {
                let p = o.proof.to_proof();
                match check_proof(&p, c) {
                    Ok(m) if m.seq == n.seq && p.is_cut_free() => Some(m),
                    Ok(m) => {
                        bad.push(format!("{label}: output {} with {} cuts", m.seq, count_cuts(&m)));
                        None
                    }
                    Err(v) => {
                        bad.push(format!("{label}: output does not check: {v}"));
                        None
                    }
                }
            }
            Err(e) => {
                no_case += usize::from(matches!(e, CutElimError::NoMatchingCase { .. }));
                bad.push(format!("{label}: {e}"));
                None
            }
        }
    };
    for seed in 0..CUT_COUNT {
        let n = random_cut_proof(CalculusId::Ilc, seed, CUT_DEPTH);
        if let Some(m) = run(format!("ILC seed {seed}"), &n, CalculusId::Ilc, &mut bad) {
            produced.proofs.push((format!("cut elimination, ILC seed {seed}"), m));
        }
    }
    let mut tractable = 0;
    let inputs = (0..RHO_SEEDS)
        .map(|s| (format!("ILC_ρ seed {s}"), random_cut_proof(CalculusId::IlcIota, s, CUT_DEPTH)))
        .chain((0..RHO_SEEDS).map(|s| (format!("ILC_ρ !?-cut seed {s}"), random_rho_cut(s))));
    for (label, n) in inputs {
        if is_tractable(&n, CalculusId::IlcRho).is_err() {
            continue;
        }
        tractable += 1;
        if let Some(m) = run(label.clone(), &n, CalculusId::IlcRho, &mut bad) {
            if let Err(v) = is_tractable(&m, CalculusId::IlcRho) {
                bad.push(format!("{label}: output not tractable: {v}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{CUT_COUNT} ILC and {tractable} tractable ILC_ρ cut proofs reduce; {no_case} no-matching-case events"),
        bad,
    )
}

fn search(produced: &mut Produced) -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut run = |goal: Sequent, c: CalculusId, bound: usize, want_found: bool| {
        let cfg = SearchConfig { contraction_budget: CONTRACTION_BUDGET, ..SearchConfig::new(bound) };
        let r = search_with(&goal, c, &cfg).unwrap();
        match (&r.verdict, want_found) {
            (Verdict::Found(p), true) => {
                let n = check_proof(p, c).unwrap();
                if c == CalculusId::Ilc || c == CalculusId::IlcIota {
                    produced.proofs.push((format!("search {goal} in {c}"), n));
                }
            }
            (Verdict::Exhausted { .. }, false) if !r.truncated => {}
            _ => bad.push(format!("{goal} in {c} at bound {bound}: {:?}", r.verdict)),
        }
    };
    let dist = seq("!?X |- ?!X", LogicId::Ille);
    run(dist.clone(), CalculusId::Ilc, DIST_EXHAUST_BOUND, false);
    run(dist, CalculusId::IlcIota, DIST_FOUND_BOUND, true);
    run(seq("|- ((X star) or X)", LogicId::Il), CalculusId::Lj, LEM_EXHAUST_BOUND, false);
    run(seq("|- ((~ X) or X)", LogicId::Cl), CalculusId::Lk, LEM_FOUND_BOUND, true);
    let took = t.elapsed();
    if took > SEARCH_TIME {
        bad.push(format!("took {took:?}"));
    }
    outcome(
        bad.is_empty(),
        format!(
            "!?X ⊢ ?!X exhausted in ILC at {DIST_EXHAUST_BOUND}, found in ILC_ι ≤ {DIST_FOUND_BOUND}; IL LEM exhausted in LJ at {LEM_EXHAUST_BOUND}, found in LK ≤ {LEM_FOUND_BOUND} ({took:.1?})"
        ),
        bad,
    )
}

/// Formulas of each size up to `max` over X, Y.
fn formulas(consts: &[Formula], bang_op: bool, bins: &[Bin], max: usize) -> Vec<Vec<Formula>> {
    let mut by: Vec<Vec<Formula>> = vec![Vec::new(); max + 1];
    by[1] = [Formula::var("X"), Formula::var("Y")].into_iter().chain(consts.iter().cloned()).collect();
    for s in 2..=max {
        let mut v = Vec::new();
        if bang_op {
            v.extend(by[s - 1].iter().map(|a| bang(a.clone())));
        }
        for &op in bins {
            for i in 1..s - 1 {
                for a in &by[i] {
                    for b in &by[s - 1 - i] {
                        v.push(bin(op, a.clone(), b.clone()));
                    }
                }
            }
        }
        by[s] = v;
    }
    by
}

/// `⊢ B`, optionally `A ⊢`, and `A ⊢ B`, of total size ≤ the maximum.
fn sequents(by: &[Vec<Formula>], empty_right: bool) -> Vec<Sequent> {
    let max = by.len() - 1;
    let mut out = Vec::new();
    for fs in by {
        for f in fs {
            out.push(Sequent::new(vec![], vec![f.clone()]));
            if empty_right {
                out.push(Sequent::new(vec![f.clone()], vec![]));
            }
        }
    }
    for sa in 1..=max {
        for sb in 1..=max - sa {
            for a in &by[sa] {
                for b in &by[sb] {
                    out.push(Sequent::new(vec![a.clone()], vec![b.clone()]));
                }
            }
        }
    }
    out
}

/// ILL sequent read in ILLᵉ: `A ⤳ B` becomes `¬A ⅋ B`.
fn ille(f: &Formula) -> Formula {
    use Formula::*;
    match f {
        UImp(a, b) => lolli(ille(a), ille(b)),
        Bang(a) => bang(ille(a)),
        _ => match f.as_bin() {
            Some((op, a, b)) => bin(op, ille(a), ille(b)),
            None => f.clone(),
        },
    }
}

fn conservativity(produced: &mut Produced) -> Outcome {
    let mut bad = Vec::new();
    let cfg = |b| SearchConfig { contraction_budget: CONTRACTION_BUDGET, ..SearchConfig::new(b) };
    let found = |s: &Sequent, c: CalculusId, b: usize| search_with(s, c, &cfg(b)).unwrap();
    let il = sequents(&formulas(&[Formula::Top, Formula::Ff], false, &[Bin::With, Bin::Or, Bin::IImp], CONS_SIZE), true);
    let mut provable = 0;
    for s in &il {
        let (a, b) = (found(s, CalculusId::Lj, CONS_BOUND), found(s, CalculusId::Inc, CONS_BOUND));
        provable += usize::from(a.found().is_some());
        if a.found().is_some() != b.found().is_some() {
            bad.push(format!("{s}: LJ {} / INC {}", a.found().is_some(), b.found().is_some()));
        }
    }
    let ill = sequents(
        &formulas(&[Formula::Top], true, &[Bin::Tensor, Bin::With, Bin::Plus, Bin::UImp], CONS_SIZE),
        false,
    );
    let mut provable_ll = 0;
    for s in &ill {
        let img = Sequent::new(s.left.iter().map(ille).collect(), s.right.iter().map(ille).collect());
        let a = found(s, CalculusId::Llj, CONS_BOUND);
        let b = found(&img, CalculusId::Ilc, 2 * CONS_BOUND);
        provable_ll += usize::from(a.found().is_some());
        if let Some(p) = b.found() {
            produced.proofs.push((format!("search {img} in ILC"), check_proof(p, CalculusId::Ilc).unwrap()));
        }
        if a.found().is_some() != b.found().is_some() {
            bad.push(format!("{s}: LLJ {} / ILC {}", a.found().is_some(), b.found().is_some()));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "LJ/INC agree on {} IL sequents ({provable} provable), LLJ/ILC on {} ILL sequents ({provable_ll} provable)",
            il.len(),
            ill.len()
        ),
        bad,
    )
}

fn subformula(produced: &Produced) -> Outcome {
    let mut bad = Vec::new();
    for (label, n) in &produced.proofs {
        if let Some(f) = foreign_formula(n) {
            bad.push(format!("{label}: {f} is not a subformula of {}", n.seq));
        }
        if let Err(v) = seqcalc::subformula_property(n) {
            bad.push(format!("{label}: library check rejects {} at {:?}", v.formula, v.path));
        }
    }
    outcome(bad.is_empty(), format!("{} cut-free ILC proofs from search and cut elimination", produced.proofs.len()), bad)
}

type Criterion<'a> = Box<dyn FnOnce(&mut Produced) -> Outcome + 'a>;

fn main() -> ExitCode {
    let corpus = corpus();
    let set = lk_set(&corpus);
    let mut produced = Produced::default();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("golden proofs", Box::new(|_| golden())),
        ("tractability", Box::new(|_| tractability(&corpus))),
        ("translations", Box::new(|_| translation(&set, &corpus))),
        ("commutativity", Box::new(|_| commutativity(&set))),
        ("cut elimination", Box::new(cut_elimination)),
        ("search bounds", Box::new(search)),
        ("conservativity", Box::new(conservativity)),
        ("subformula property", Box::new(|p: &mut Produced| subformula(p))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let o = run(&mut produced);
        failed += usize::from(!o.pass);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {verdict} {name}: {} [{:.1?}]", k + 1, o.summary, t.elapsed());
        for d in o.details.iter().take(SHOW) {
            println!("    {d}");
        }
        if o.details.len() > SHOW {
            println!("    ... {} more", o.details.len() - SHOW);
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
