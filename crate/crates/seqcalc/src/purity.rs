//! Occurrence flow (which premise occurrences constitute each conclusion
//! occurrence), pure occurrences and tractable proofs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::calculi::{CalculusId, Node, Violation, ViolationKind};
use crate::proof::Side;
use crate::rules::RuleId;
use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occ {
    pub side: Side,
    pub index: usize,
}

impl Occ {
    pub fn l(index: usize) -> Occ {
        Occ { side: Side::L, index }
    }
    pub fn r(index: usize) -> Occ {
        Occ { side: Side::R, index }
    }
}

/// An occurrence at a node of a derivation, addressed by its path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccurrenceRef {
    pub path: Vec<usize>,
    pub occ: Occ,
}

/// A premise occurrence feeding a conclusion occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Src {
    pub prem: usize,
    pub occ: Occ,
}

type Table = Vec<Vec<Src>>;

fn src(prem: usize, side: Side, index: usize) -> Src {
    Src { prem, occ: Occ { side, index } }
}

/// Positional identity for `len` occurrences of premise `k`, shifted.
fn ident(k: usize, side: Side, from: usize, len: usize) -> Table {
    (0..len).map(|i| vec![src(k, side, from + i)]).collect()
}

/// Flow tables (left, right) of one rule application.
pub fn flow_tables(n: &Node) -> (Table, Table) {
    use RuleId as R;
    use Side::{L, R as Rt};
    let c = &n.seq;
    let (cl, cr) = (c.left.len(), c.right.len());
    let pl = |k: usize| n.prem[k].seq.left.len();
    let pr = |k: usize| n.prem[k].seq.right.len();
    let none = || Vec::<Src>::new();
    let mut left: Table;
    let mut right: Table;
    match n.rule {
        R::Xl | R::Xr => {
            left = ident(0, L, 0, cl);
            right = ident(0, Rt, 0, cr);
            let k = n.params.at.unwrap_or(0);
            if n.rule == R::Xl {
                left.swap(k, k + 1);
            } else {
                right.swap(k, k + 1);
            }
        }
        R::Wl | R::BangW | R::TtL | R::TtLBang | R::TopL => {
            left = ident(0, L, 0, cl - 1);
            left.push(none());
            right = ident(0, Rt, 0, cr);
        }
        R::Wr | R::WhyW | R::FfR | R::FfRWhy | R::BotR => {
            left = ident(0, L, 0, cl);
            right = vec![none()];
            right.extend(ident(0, Rt, 0, cr - 1));
        }
        R::Cl | R::BangC | R::TensorL => {
            left = ident(0, L, 0, cl - 1);
            left.push(vec![src(0, L, cl - 1), src(0, L, cl)]);
            right = ident(0, Rt, 0, cr);
        }
        R::Cr | R::WhyC | R::ParR => {
            left = ident(0, L, 0, cl);
            right = vec![vec![src(0, Rt, 0), src(0, Rt, 1)]];
            right.extend(ident(0, Rt, 2, cr - 1));
        }
        R::BangD | R::WhyL | R::WhyLWhy | R::BangWhyL | R::AndL | R::AndLBang | R::WithL => {
            left = ident(0, L, 0, cl);
            right = ident(0, Rt, 0, cr);
        }
        R::WhyD | R::BangR | R::BangRBang | R::WhyBangR | R::OrR | R::OrRWhy | R::PlusR => {
            left = ident(0, L, 0, cl);
            right = ident(0, Rt, 0, cr);
        }
        R::CImpR | R::IImpR | R::IImpRWhy | R::UImpR | R::ClImpRBang => {
            left = ident(0, L, 0, cl);
            right = ident(0, Rt, 0, cr);
            right[0] = vec![src(0, L, cl), src(0, Rt, 0)];
        }
        R::NegR | R::LDualR => {
            left = ident(0, L, 0, cl);
            right = vec![vec![src(0, L, cl)]];
            right.extend(ident(0, Rt, 0, cr - 1));
        }
        R::NegL | R::LDualL => {
            left = ident(0, L, 0, cl - 1);
            left.push(vec![src(0, Rt, 0)]);
            right = ident(0, Rt, 1, cr);
        }
        R::Id | R::Dist | R::TtR | R::TopR | R::FfL | R::BotL | R::OneR | R::ZeroL => {
            left = vec![none(); cl];
            right = vec![none(); cr];
        }
        R::AndR | R::WithR | R::WithRWhy | R::OrL | R::PlusL | R::PlusLBang => {
            let both = |side: Side, i: usize| vec![src(0, side, i), src(1, side, i)];
            left = (0..cl).map(|i| both(L, i)).collect();
            right = (0..cr).map(|i| both(Rt, i)).collect();
        }
        R::CImpL => {
            left = (0..cl - 1).map(|i| vec![src(0, L, i), src(1, L, i)]).collect();
            left.push(vec![src(0, Rt, 0), src(1, L, cl - 1)]);
            right = (0..cr).map(|i| vec![src(0, Rt, i + 1), src(1, Rt, i)]).collect();
        }
        R::IImpL => {
            left = (0..cl - 1).map(|i| vec![src(0, L, i), src(1, L, i)]).collect();
            left.push(vec![src(0, Rt, 0), src(1, L, cl - 1)]);
            right = ident(1, Rt, 0, cr);
        }
        R::TensorR => {
            left = ident(0, L, 0, pl(0));
            left.extend(ident(1, L, 0, pl(1)));
            right = vec![vec![src(0, Rt, 0), src(1, Rt, 0)]];
            right.extend(ident(0, Rt, 1, pr(0) - 1));
            right.extend(ident(1, Rt, 1, pr(1) - 1));
        }
        R::ParL => {
            left = ident(0, L, 0, pl(0) - 1);
            left.extend(ident(1, L, 0, pl(1) - 1));
            left.push(vec![src(0, L, pl(0) - 1), src(1, L, pl(1) - 1)]);
            right = ident(0, Rt, 0, pr(0));
            right.extend(ident(1, Rt, 0, pr(1)));
        }
        R::UImpL => {
            left = ident(0, L, 0, pl(0));
            left.extend(ident(1, L, 0, pl(1) - 1));
            left.push(vec![src(0, Rt, 0), src(1, L, pl(1) - 1)]);
            right = ident(0, Rt, 1, pr(0) - 1);
            right.extend(ident(1, Rt, 0, pr(1)));
        }
        R::ClImpLBang | R::IImpLWhy => {
            left = ident(0, L, 0, pl(0) - 1);
            left.extend(ident(1, L, 0, pl(1)));
            left.push(vec![src(0, L, pl(0) - 1), src(1, Rt, 0)]);
            right = ident(0, Rt, 0, pr(0));
            right.extend(ident(1, Rt, 1, pr(1) - 1));
        }
        R::Cut | R::CutWhy | R::CutBang => {
            left = ident(0, L, 0, pl(0));
            left.extend(ident(1, L, 0, pl(1) - 1));
            right = ident(0, Rt, 1, pr(0) - 1);
            right.extend(ident(1, Rt, 0, pr(1)));
        }
        R::CutLn | R::CutLnWB | R::CutWB => {
            let a = n.params.at.unwrap_or(0);
            let o = n.params.occ.clone().unwrap_or_default();
            left = Vec::new();
            right = Vec::new();
            for _ in 0..o.len() {
                left.extend(ident(0, L, 0, pl(0)));
                right.extend((0..pr(0)).filter(|&i| i != a).map(|i| vec![src(0, Rt, i)]));
            }
            left.extend((0..pl(1)).filter(|i| !o.contains(i)).map(|i| vec![src(1, L, i)]));
            right.extend(ident(1, Rt, 0, pr(1)));
        }
        R::CutRn | R::CutRnWB => {
            let b = n.params.at.unwrap_or(0);
            let o = n.params.occ.clone().unwrap_or_default();
            left = ident(0, L, 0, pl(0));
            right = (0..pr(0)).filter(|i| !o.contains(i)).map(|i| vec![src(0, Rt, i)]).collect();
            for _ in 0..o.len() {
                left.extend((0..pl(1)).filter(|&i| i != b).map(|i| vec![src(1, L, i)]));
                right.extend(ident(1, Rt, 0, pr(1)));
            }
        }
        R::CutDistL => {
            let o = n.params.occ.clone().unwrap_or_default();
            left = o.iter().map(|&i| vec![src(0, L, i)]).collect();
            left.extend((0..pl(0)).filter(|i| !o.contains(i)).map(|i| vec![src(0, L, i)]));
            right = ident(0, Rt, 0, cr);
        }
        R::CutDistR => {
            let o = n.params.occ.clone().unwrap_or_default();
            left = ident(0, L, 0, cl);
            right = (0..pr(0)).filter(|i| !o.contains(i)).map(|i| vec![src(0, Rt, i)]).collect();
            right.extend(o.iter().map(|&i| vec![src(0, Rt, i)]));
        }
    }
    debug_assert_eq!(left.len(), cl);
    debug_assert_eq!(right.len(), cr);
    (left, right)
}

pub fn flow(n: &Node, o: Occ) -> Vec<Src> {
    let (l, r) = flow_tables(n);
    match o.side {
        Side::L => l[o.index].clone(),
        Side::R => r[o.index].clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PurityError {
    #[error("no node at path {0:?}")]
    BadPath(Vec<usize>),
    #[error("occurrence {0:?} out of range")]
    BadOccurrence(Occ),
    #[error("purity is not defined for calculus {0}")]
    Unsupported(CalculusId),
}

/// All occurrences in the subtree at `o.path` that flow into `o` (including
/// `o`). Axiom leaves link their two occurrences.
pub fn constituents(root: &Node, o: &OccurrenceRef) -> Result<BTreeSet<OccurrenceRef>, PurityError> {
    let n = root.at_path(&o.path).ok_or_else(|| PurityError::BadPath(o.path.clone()))?;
    if o.occ.index >= n.seq.side(o.occ.side).len() {
        return Err(PurityError::BadOccurrence(o.occ));
    }
    let mut out = BTreeSet::new();
    let mut path = o.path.clone();
    collect(n, &mut path, o.occ, &mut out);
    Ok(out)
}

fn collect(n: &Node, path: &mut Vec<usize>, o: Occ, out: &mut BTreeSet<OccurrenceRef>) {
    if !out.insert(OccurrenceRef { path: path.clone(), occ: o }) {
        return;
    }
    if matches!(n.rule, RuleId::Id | RuleId::Dist) {
        let twin = Occ { side: o.side.flip(), index: 0 };
        out.insert(OccurrenceRef { path: path.clone(), occ: twin });
        return;
    }
    for s in flow(n, o) {
        path.push(s.prem);
        collect(&n.prem[s.prem], path, s.occ, out);
        path.pop();
    }
}

/// How clause (2) counts subformula occurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CountMode {
    /// Every whole-formula occurrence on a side counts.
    #[default]
    Global,
    /// Only occurrences constituting the occurrence under test count.
    Constituent,
}

/// Weakening and contraction rules whose action on a constituent breaks purity.
pub fn wc_rules(c: CalculusId) -> Result<&'static [RuleId], PurityError> {
    use CalculusId::*;
    use RuleId as R;
    Ok(match c {
        Ilc | IlcIota | IlcDelta | IlcRho => &[R::BangW, R::BangC, R::WhyW, R::WhyC],
        Inc | IncRho => &[R::Wl, R::Cl, R::WhyW, R::WhyC],
        Clc | ClcRho => &[R::BangW, R::BangC, R::Wr, R::Cr],
        Lk | LkRho => &[R::Wl, R::Cl, R::Wr, R::Cr],
        _ => return Err(PurityError::Unsupported(c)),
    })
}

/// Principal occurrence of a weakening/contraction rule.
fn wc_principal(r: RuleId) -> Occ {
    match r {
        RuleId::Wr | RuleId::WhyW | RuleId::Cr | RuleId::WhyC => Occ::r(0),
        _ => Occ::l(usize::MAX),
    }
}

pub fn is_pure(root: &Node, c: CalculusId, o: &OccurrenceRef, mode: CountMode) -> Result<bool, PurityError> {
    let wc = wc_rules(c)?;
    let cons = constituents(root, o)?;
    for r in &cons {
        let n = root.at_path(&r.path).expect("constituent path");
        if wc.contains(&n.rule) {
            let mut p = wc_principal(n.rule);
            if p.side == Side::L {
                p.index = n.seq.left.len() - 1;
            }
            if p == r.occ {
                return Ok(false);
            }
        }
    }
    let top = root.at_path(&o.path).expect("checked above");
    let a = &top.seq.side(o.occ.side)[o.occ.index];
    let subs = a.subformulas();
    let mut path = o.path.clone();
    Ok(unique_subformulas(top, &mut path, &subs, mode, &cons))
}

fn unique_subformulas(
    n: &Node,
    path: &mut Vec<usize>,
    subs: &[Formula],
    mode: CountMode,
    cons: &BTreeSet<OccurrenceRef>,
) -> bool {
    for side in [Side::L, Side::R] {
        for s in subs {
            let count = n
                .seq
                .side(side)
                .iter()
                .enumerate()
                .filter(|(i, f)| {
                    *f == s
                        && (mode == CountMode::Global
                            || cons.contains(&OccurrenceRef { path: path.clone(), occ: Occ { side, index: *i } }))
                })
                .count();
            if count > 1 {
                return false;
            }
        }
    }
    for (k, q) in n.prem.iter().enumerate() {
        path.push(k);
        let ok = unique_subformulas(q, path, subs, mode, cons);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Checks the global predicate of a ρ-calculus (or of the tractable fragment
/// of its parent): no `?!R` (ILC family only) and a pure side on every cut.
pub fn is_tractable(root: &Node, c: CalculusId) -> Result<(), Violation> {
    is_tractable_with(root, c, CountMode::Global)
}

pub fn is_tractable_with(root: &Node, c: CalculusId, mode: CountMode) -> Result<(), Violation> {
    let mut first: Option<Violation> = None;
    let mut path = Vec::new();
    root.walk(&mut path, &mut |p, n| {
        if first.is_some() {
            return;
        }
        if n.rule == RuleId::WhyBangR && c.is_ilc_family() {
            first = Some(Violation {
                path: p.to_vec(),
                kind: ViolationKind::NotTractable { clause: 1 },
                rule: n.rule,
                message: "?!R does not occur in tractable proofs".into(),
            });
            return;
        }
        if matches!(n.rule, RuleId::Cut | RuleId::CutWhy | RuleId::CutBang) {
            let mut lp = p.to_vec();
            lp.push(0);
            let mut rp = p.to_vec();
            rp.push(1);
            let last = n.prem[1].seq.left.len() - 1;
            let lo = OccurrenceRef { path: lp, occ: Occ::r(0) };
            let ro = OccurrenceRef { path: rp, occ: Occ::l(last) };
            let pure = |o: &OccurrenceRef| is_pure(root, c, o, mode).unwrap_or(false);
            if !pure(&lo) && !pure(&ro) {
                let f = &n.prem[0].seq.right[0];
                first = Some(Violation {
                    path: p.to_vec(),
                    kind: ViolationKind::NotTractable { clause: 2 },
                    rule: n.rule,
                    message: format!("neither cut occurrence of {f} is pure"),
                });
            }
        }
    });
    match first {
        Some(v) => Err(v),
        None => Ok(()),
    }
}
