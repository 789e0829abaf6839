//! Cut elimination for ILC, its δ- and ρ-variants, INC and CLC.
//!
//! Every cut is handled as a multicut: a single occurrence of the cut
//! formula on one side (`at`) against a list of occurrences on the other
//! (`occ`). `CutLⁿ` has the list in the right premise's antecedent, `CutRⁿ`
//! in the left premise's succedent; the `?!` forms cut `?B` against `!B`.
//! A step rewrites the selected site into a proof of the same sequent:
//! principal reductions, minor cuts pushed through the last rule of one
//! premise (driven by the occurrence flow tables), identity cuts, and the
//! ρ cases around `!?L`.

use std::fmt;

use thiserror::Error;

use crate::calculi::{CalculusId, Node, RuleError, Violation};
use crate::proof::{Params, Proof, Sequent, Side};
use crate::purity::{flow_tables, is_pure, CountMode, Occ, OccurrenceRef};
use crate::rules::RuleId;
use crate::structural::{adjust, reorder, reorder_to, to_principal};
use crate::syntax::Formula;

use RuleId as R;

pub const DEFAULT_FUEL: usize = 1_000_000;

/// A Cut-family node selected for reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSite {
    pub path: Vec<usize>,
    pub formula: Formula,
    pub rank: usize,
    /// Distance from the root; the deepest site is the topmost one.
    pub depth: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    pub step: usize,
    pub case: String,
    pub path: Vec<usize>,
    pub rank: usize,
    pub depth: usize,
    /// Ranks of all cuts left after the step, largest first.
    pub ranks: Vec<usize>,
    pub size: usize,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:>5} {:<28} at {:?} rank {} depth {} | cuts {:?} size {}",
            self.step, self.case, self.path, self.rank, self.depth, self.ranks, self.size
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CutElimError {
    #[error("cut elimination is not available for {0}")]
    Unsupported(CalculusId),
    #[error("input proof: {0}")]
    Input(Violation),
    #[error("no node at path {0:?}, or not a cut")]
    InvalidSite(Vec<usize>),
    #[error("no matching case at {path:?}: {rule} of {left} against {right} on {formula}")]
    NoMatchingCase { path: Vec<usize>, rule: RuleId, left: RuleId, right: RuleId, formula: Formula },
    #[error("step limit of {0} exceeded")]
    FuelExhausted(usize),
    #[error("rebuilding the proof failed at {path:?}: {source}")]
    Rebuild { path: Vec<usize>, source: RuleError },
}

pub fn supported(c: CalculusId) -> bool {
    use CalculusId::*;
    matches!(c, Ilc | IlcDelta | IlcRho | Inc | IncRho | Clc | ClcRho)
}

// ------------------------------------------------------------------ sites

fn site_formula(n: &Node) -> Option<(Formula, usize)> {
    let l = n.prem.first()?;
    Some(match n.rule {
        R::Cut | R::CutWhy => (l.seq.right[0].clone(), 1),
        R::CutBang => (Formula::bang(l.seq.right[0].clone()), 1),
        R::CutLn | R::CutLnWB | R::CutWB => (l.seq.right[n.params.at?].clone(), n.params.occ.as_ref()?.len()),
        R::CutRn | R::CutRnWB => (n.prem[1].seq.left[n.params.at?].clone(), n.params.occ.as_ref()?.len()),
        R::CutDistL => (Formula::why(Formula::bang(n.params.intro.clone()?)), n.params.occ.as_ref()?.len()),
        R::CutDistR => (Formula::bang(Formula::why(n.params.intro.clone()?)), n.params.occ.as_ref()?.len()),
        _ => return None,
    })
}

fn site_at(n: &Node, path: &[usize]) -> Option<CutSite> {
    let (formula, multiplicity) = site_formula(n)?;
    Some(CutSite { path: path.to_vec(), rank: formula.rank(), formula, depth: path.len(), multiplicity })
}

/// All Cut-family sites, in pre-order.
pub fn cut_sites(root: &Node) -> Vec<CutSite> {
    let mut out = Vec::new();
    root.walk(&mut Vec::new(), &mut |p, n| {
        if let Some(s) = site_at(n, p) {
            out.push(s);
        }
    });
    out
}

/// The site of maximal rank; among those the topmost (deepest path), then
/// the leftmost. Pre-order visits a node before its premises, so the
/// first site reaching the optimum on `(rank, depth)` is the leftmost.
pub fn select_cut(root: &Node) -> Option<CutSite> {
    let mut best: Option<CutSite> = None;
    for s in cut_sites(root) {
        let better = match &best {
            None => true,
            Some(b) => (s.rank, s.depth) > (b.rank, b.depth),
        };
        if better {
            best = Some(s);
        }
    }
    best
}

fn rank_multiset(root: &Node) -> Vec<usize> {
    let mut v: Vec<usize> = cut_sites(root).into_iter().map(|s| s.rank).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

// ------------------------------------------------------------- multicuts

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dir {
    /// One occurrence in `p`'s succedent, `occ` in `q`'s antecedent.
    L,
    /// `occ` in `p`'s succedent, one occurrence in `q`'s antecedent.
    R,
}

#[derive(Clone, Debug)]
struct Mc {
    dir: Dir,
    wb: bool,
    p: Node,
    q: Node,
    at: usize,
    occ: Vec<usize>,
}

/// A premise with cut occurrences pushed into it, and where its old
/// occurrences went (`None`: consumed by the cut).
struct Pushed {
    node: Node,
    lmap: Vec<Option<usize>>,
    rmap: Vec<Option<usize>>,
}

impl Pushed {
    fn same(n: &Node) -> Pushed {
        Pushed {
            node: n.clone(),
            lmap: (0..n.seq.left.len()).map(Some).collect(),
            rmap: (0..n.seq.right.len()).map(Some).collect(),
        }
    }
}

fn removal_map(len: usize, removed: &[usize], shift: usize) -> Vec<Option<usize>> {
    (0..len)
        .map(|i| (!removed.contains(&i)).then(|| shift + i - removed.iter().filter(|&&r| r < i).count()))
        .collect()
}

impl Mc {
    fn of(n: &Node) -> Option<Mc> {
        let (p, q) = (n.prem.first()?.clone(), n.prem.get(1)?.clone());
        let at = n.params.at;
        let occ = n.params.occ.clone();
        let (dir, wb, at, occ) = match n.rule {
            R::Cut => (Dir::L, false, 0, vec![q.seq.left.len() - 1]),
            R::CutLn => (Dir::L, false, at?, occ?),
            R::CutLnWB | R::CutWB => (Dir::L, true, at?, occ?),
            R::CutRn => (Dir::R, false, at?, occ?),
            R::CutRnWB => (Dir::R, true, at?, occ?),
            _ => return None,
        };
        Some(Mc { dir, wb, p, q, at, occ })
    }

    fn n(&self) -> usize {
        self.occ.len()
    }

    fn with_q(&self, q: Node, occ: Vec<usize>) -> Mc {
        Mc { q, occ, ..self.clone() }
    }

    fn with_p(&self, p: Node, occ: Vec<usize>) -> Mc {
        Mc { p, occ, ..self.clone() }
    }

    /// The same cut seen from the other side; only meaningful for n = 1.
    fn flip(&self) -> Mc {
        debug_assert_eq!(self.n(), 1);
        let dir = match self.dir {
            Dir::L => Dir::R,
            Dir::R => Dir::L,
        };
        Mc { dir, at: self.occ[0], occ: vec![self.at], ..self.clone() }
    }

    /// `(p-side index in p.right, q-side index in q.left)` for n = 1.
    fn pair(&self) -> (usize, usize) {
        match self.dir {
            Dir::L => (self.at, self.occ[0]),
            Dir::R => (self.occ[0], self.at),
        }
    }

    /// Builds the node; a canonical single cut comes out as a plain `Cut`,
    /// and n = 0 as the untouched side.
    fn build(&self, c: CalculusId) -> Option<Node> {
        let mut occ = self.occ.clone();
        occ.sort_unstable();
        if occ.is_empty() {
            return Some(match self.dir {
                Dir::L => self.q.clone(),
                Dir::R => self.p.clone(),
            });
        }
        let last = self.q.seq.left.len().checked_sub(1)?;
        if !self.wb && occ.len() == 1 && self.pair() == (0, last) {
            return Node::mk(c, R::Cut, Params::none(), vec![self.p.clone(), self.q.clone()]).ok();
        }
        let rule = match (self.dir, self.wb) {
            (Dir::L, false) => R::CutLn,
            (Dir::L, true) => R::CutLnWB,
            (Dir::R, false) => R::CutRn,
            (Dir::R, true) => R::CutRnWB,
        };
        Node::mk(c, rule, Params::multicut(self.at, occ), vec![self.p.clone(), self.q.clone()]).ok()
    }

    /// `Dir::L`: cuts `p` into the antecedent occurrences `occ` of `qj`,
    /// keeping `qj`'s formulas in place (copies of `p`'s context go to the
    /// front of the antecedent and the back of the succedent).
    fn into_q(&self, c: CalculusId, qj: &Node, occ: Vec<usize>) -> Option<Pushed> {
        if occ.is_empty() {
            return Some(Pushed::same(qj));
        }
        let k = occ.len();
        let node = self.with_q(qj.clone(), occ.clone()).build(c)?;
        let g: Vec<Formula> = remove_at(&self.p.seq.right, &[self.at]);
        let mut right = qj.seq.right.clone();
        for _ in 0..k {
            right.extend(g.iter().cloned());
        }
        let node = reorder(c, node, Side::R, &right).ok()?;
        Some(Pushed {
            node,
            lmap: removal_map(qj.seq.left.len(), &occ, k * self.p.seq.left.len()),
            rmap: (0..qj.seq.right.len()).map(Some).collect(),
        })
    }

    /// `Dir::R`: cuts `q` into the succedent occurrences `occ` of `pj`.
    fn into_p(&self, c: CalculusId, pj: &Node, occ: Vec<usize>) -> Option<Pushed> {
        if occ.is_empty() {
            return Some(Pushed::same(pj));
        }
        let k = occ.len();
        let node = self.with_p(pj.clone(), occ.clone()).build(c)?;
        let d: Vec<Formula> = remove_at(&self.q.seq.left, &[self.at]);
        let mut left = Vec::new();
        for _ in 0..k {
            left.extend(d.iter().cloned());
        }
        left.extend(pj.seq.left.iter().cloned());
        let node = reorder(c, node, Side::L, &left).ok()?;
        Some(Pushed {
            node,
            lmap: (0..pj.seq.left.len()).map(|i| Some(k * d.len() + i)).collect(),
            rmap: removal_map(pj.seq.right.len(), &occ, 0),
        })
    }
}

fn remove_at(v: &[Formula], idx: &[usize]) -> Vec<Formula> {
    v.iter().enumerate().filter(|(i, _)| !idx.contains(i)).map(|(_, f)| f.clone()).collect()
}

// ------------------------------------------------------- rule anatomy

/// Whether the occurrence is introduced or acted on by the node's last
/// rule, as opposed to copied unchanged from the premises.
fn principal(n: &Node, side: Side, idx: usize) -> bool {
    if n.prem.is_empty() {
        return match n.rule {
            R::OneR => side == Side::R && idx == 0,
            R::ZeroL => side == Side::L && idx + 1 == n.seq.left.len(),
            _ => true,
        };
    }
    let (lt, rt) = flow_tables(n);
    let srcs = match side {
        Side::L => &lt[idx],
        Side::R => &rt[idx],
    };
    let f = &n.seq.side(side)[idx];
    let mut prems: Vec<usize> = srcs.iter().map(|s| s.prem).collect();
    prems.sort_unstable();
    prems.dedup();
    let context = !srcs.is_empty()
        && prems.len() == srcs.len()
        && srcs.iter().all(|s| &n.prem[s.prem].seq.side(s.occ.side)[s.occ.index] == f);
    !context
}

/// Per premise, the indices feeding the given conclusion occurrences.
fn sources(n: &Node, side: Side, occ: &[usize]) -> Vec<Vec<usize>> {
    let (lt, rt) = flow_tables(n);
    let tab = match side {
        Side::L => lt,
        Side::R => rt,
    };
    let mut per = vec![Vec::new(); n.prem.len()];
    for &o in occ {
        for s in &tab[o] {
            if s.occ.side == side {
                per[s.prem].push(s.occ.index);
            }
        }
    }
    for v in &mut per {
        v.sort_unstable();
    }
    per
}

/// Rewrites index parameters after premises were rearranged.
fn remap(rule: RuleId, params: &Params, pushed: &[Pushed]) -> Option<Params> {
    let mut p = params.clone();
    p.split = None;
    let map_one = |m: &Vec<Option<usize>>, i: usize| m.get(i).copied().flatten();
    let map_all = |m: &Vec<Option<usize>>, v: &Vec<usize>| v.iter().map(|&i| map_one(m, i)).collect::<Option<Vec<_>>>();
    match rule {
        R::CutLn | R::CutLnWB | R::CutWB => {
            p.at = Some(map_one(&pushed[0].rmap, params.at?)?);
            p.occ = Some(map_all(&pushed[1].lmap, params.occ.as_ref()?)?);
        }
        R::CutRn | R::CutRnWB => {
            p.at = Some(map_one(&pushed[1].lmap, params.at?)?);
            p.occ = Some(map_all(&pushed[0].rmap, params.occ.as_ref()?)?);
        }
        R::CutDistL => p.occ = Some(map_all(&pushed[0].lmap, params.occ.as_ref()?)?),
        R::CutDistR => p.occ = Some(map_all(&pushed[0].rmap, params.occ.as_ref()?)?),
        _ => {}
    }
    Some(p)
}

/// Pushes a cut on the occurrences `occ` (on `side`) of `host` through its
/// last rule, which is not principal on any of them.
fn minor(
    c: CalculusId,
    host: &Node,
    side: Side,
    occ: &[usize],
    into: &dyn Fn(&Node, Vec<usize>) -> Option<Pushed>,
    target: &Sequent,
) -> Option<Node> {
    if host.prem.is_empty() {
        return absorb(c, host, target);
    }
    let per = sources(host, side, occ);
    if host.rule.is_exchange() {
        // exchanges above a cut are absorbed into the final reordering
        let pushed = into(&host.prem[0], per[0].clone())?;
        return reorder_to(c, pushed.node, target).ok();
    }
    let pushed: Vec<Pushed> = host.prem.iter().zip(per).map(|(q, o)| into(q, o)).collect::<Option<_>>()?;
    let params = remap(host.rule, &host.params, &pushed)?;
    let node = Node::mk(c, host.rule, params, pushed.into_iter().map(|p| p.node).collect()).ok()?;
    reorder_to(c, node, target).ok()
}

/// `1R` and `0L` carry their context explicitly: the cut disappears into
/// a fresh axiom instance.
fn absorb(c: CalculusId, host: &Node, target: &Sequent) -> Option<Node> {
    let (mut left, mut right) = (target.left.clone(), target.right.clone());
    match host.rule {
        R::OneR => {
            let i = right.iter().position(|f| *f == Formula::One)?;
            right.remove(i);
        }
        R::ZeroL => {
            let i = left.iter().rposition(|f| *f == Formula::Zero)?;
            left.remove(i);
        }
        _ => return None,
    }
    let n = Node::mk(c, host.rule, Params::ctx(left, right), vec![]).ok()?;
    reorder_to(c, n, target).ok()
}

fn cut(c: CalculusId, a: Node, b: Node) -> Option<Node> {
    Node::mk(c, R::Cut, Params::none(), vec![a, b]).ok()
}

fn last_left(n: &Node) -> usize {
    n.seq.left.len() - 1
}

/// `!D` over a derivation of `?B ⊢ ?B` under weakenings of other formulas.
fn weakened_bang_d_id(p: &Node, b: &Formula) -> bool {
    let mut p = p;
    while matches!(p.rule, R::BangW | R::WhyW) {
        if p.rule == R::WhyW && p.seq.right.last() == Some(b) {
            return false;
        }
        p = &p.prem[0];
    }
    is_bang_d_id(p) && p.seq.right.first() == Some(b)
}

/// `!D` over any derivation of `?A ⊢ ?A` (an identity up to η).
fn is_bang_d_id(p: &Node) -> bool {
    let s = &p.prem.first().map(|q| q.seq.clone());
    p.rule == R::BangD && matches!(s, Some(s) if s.left.len() == 1 && s.left == s.right)
}

/// Applies `!?L` to each marked antecedent occurrence.
fn bang_why_all(c: CalculusId, mut n: Node, occ: &[usize]) -> Option<Node> {
    let mut marks: Vec<bool> = (0..n.seq.left.len()).map(|i| occ.contains(&i)).collect();
    while let Some(i) = marks.iter().position(|&m| m) {
        n = to_principal(c, n, Side::L, i).ok()?;
        n = Node::mk(c, R::BangWhyL, Params::none(), vec![n]).ok()?;
        marks.remove(i);
        marks.push(false);
    }
    Some(n)
}

// ------------------------------------------------------------ the cases

type Step = Option<(Node, String)>;

fn named(n: Option<Node>, label: impl Into<String>) -> Step {
    n.map(|n| (n, label.into()))
}

fn pair_label(p: &Node, q: &Node, wb: bool) -> String {
    format!("({},{})-{}", p.rule.label(), q.rule.label(), if wb { "Cut?!" } else { "cut" })
}

struct Engine {
    c: CalculusId,
}

impl Engine {
    fn identity(&self, m: &Mc, target: &Sequent) -> Step {
        let c = self.c;
        let n = m.n();
        if !m.wb {
            let (left_id, right_id) = match m.dir {
                Dir::L => (m.p.rule == R::Id, m.q.rule == R::Id && n == 1),
                Dir::R => (m.p.rule == R::Id && n == 1, m.q.rule == R::Id),
            };
            if left_id {
                return named(reorder_to(c, m.q.clone(), target).ok(), "Left Id-cut");
            }
            if right_id {
                return named(reorder_to(c, m.p.clone(), target).ok(), "Right Id-cut");
            }
            return None;
        }
        // `!D` over `Id ?A` acts as an identity for `Cut?!`: the `!B`
        // occurrences become `!?B` through `!?L`.
        if m.dir == Dir::R && n != 1 {
            return None;
        }
        let l = if m.dir == Dir::L { m.clone() } else { m.flip() };
        if weakened_bang_d_id(&l.p, &l.p.seq.right[l.at]) {
            let n = bang_why_all(c, l.q.clone(), &l.occ)?;
            return named(adjust(c, n, target).ok(), "(!D·Id,·)-Cut?!");
        }
        None
    }

    /// `Dir::L` with `q` principal on `o`: a principal or structural
    /// reduction after cutting `p` into the other occurrences.
    fn principal_l(&self, m: &Mc, o: usize, target: &Sequent) -> Step {
        let c = self.c;
        let (p, q) = (&m.p, &m.q);
        let rest: Vec<usize> = m.occ.iter().copied().filter(|&x| x != o).collect();
        let per = sources(q, Side::L, &rest);
        let qq: Vec<Node> = q
            .prem
            .iter()
            .zip(per.iter())
            .map(|(qj, oj)| m.into_q(c, qj, oj.clone()).map(|x| x.node))
            .collect::<Option<_>>()?;
        let label = pair_label(p, q, m.wb);
        match q.rule {
            R::BangW | R::Wl => return named(adjust(c, qq[0].clone(), target).ok(), label),
            R::BangC | R::Cl => {
                let q0 = &q.prem[0];
                let l = q0.seq.left.len();
                let mut occ = per[0].clone();
                occ.extend([l - 2, l - 1]);
                let n = m.with_q(q0.clone(), occ).build(c)?;
                return named(adjust(c, n, target).ok(), label);
            }
            _ => {}
        }
        if !principal(p, Side::R, m.at) {
            return None;
        }
        let pm = |k: usize| p.prem[k].clone();
        let out = if m.wb {
            match (p.rule, q.rule) {
                (R::WhyD, R::BangD) => cut(c, pm(0), qq[0].clone()),
                (R::WhyD, R::BangWhyL) => {
                    let q0 = qq[0].clone();
                    let l = last_left(&q0);
                    Mc { dir: Dir::L, wb: true, p: pm(0), q: q0, at: 0, occ: vec![l] }.build(c)
                }
                _ => None,
            }
        } else {
            match (p.rule, q.rule) {
                (R::TopR | R::TtR, R::TopL | R::TtL | R::TtLBang) => Some(qq[0].clone()),
                (R::BotR | R::FfR | R::FfRWhy, R::BotL | R::FfL) => Some(pm(0)),
                (R::NegR, R::NegL) => cut(c, qq[0].clone(), pm(0)),
                (R::TensorR, R::TensorL) => {
                    let r = cut(c, pm(1), qq[0].clone())?;
                    cut(c, pm(0), r)
                }
                (R::ParR, R::ParL) => {
                    let r = cut(c, pm(0), qq[0].clone())?;
                    cut(c, r, qq[1].clone())
                }
                (R::WithR | R::WithRWhy | R::AndR, R::WithL | R::AndL | R::AndLBang) => {
                    let i = usize::from(q.params.i?) - 1;
                    cut(c, pm(i), qq[0].clone())
                }
                (R::PlusR | R::OrR | R::OrRWhy, R::PlusL | R::OrL | R::PlusLBang) => {
                    let i = usize::from(p.params.i?) - 1;
                    cut(c, pm(0), qq[i].clone())
                }
                (R::IImpR | R::IImpRWhy, R::IImpL | R::IImpLWhy) => self.imp(qq[1].clone(), pm(0), qq[0].clone()),
                (R::BangRBang, R::ClImpLBang) if p.prem[0].rule == R::ClImpRBang => {
                    self.imp(qq[1].clone(), p.prem[0].prem[0].clone(), qq[0].clone())
                }
                (R::BangR | R::BangRBang, R::BangD) => cut(c, pm(0), qq[0].clone()),
                (R::WhyD, R::WhyL | R::WhyLWhy) => cut(c, pm(0), qq[0].clone()),
                (R::BangR, R::BangWhyL) => return self.rho(m, &rest, &qq[0], target),
                (R::Dist, R::WhyL) if rest.is_empty() => {
                    let q0 = &q.prem[0];
                    let a = p.params.intro.clone()?;
                    let occ = vec![last_left(q0)];
                    Node::mk(c, R::CutDistL, Params { occ: Some(occ), ..Params::intro(a) }, vec![q0.clone()]).ok()
                }
                (R::BangR, R::Dist) if rest.is_empty() => {
                    let a = q.params.intro.clone()?;
                    Node::mk(c, R::CutDistR, Params { occ: Some(vec![0]), ..Params::intro(a) }, vec![pm(0)]).ok()
                }
                _ => None,
            }
        };
        named(reorder_to(c, out?, target).ok(), label)
    }

    /// Implication: `a ⊢ A, Ξ` and `b: Δ, A ⊢ B, Γ` then `B` against `e`.
    fn imp(&self, a: Node, b: Node, e: Node) -> Option<Node> {
        let c = self.c;
        let k = a.seq.right.len() - 1;
        let r = cut(c, a, b)?;
        let r = to_principal(c, r, Side::R, k).ok()?;
        cut(c, r, e)
    }

    /// `(!R, !?L)`: the pure case becomes `CutL?!` against the `!A` of the
    /// `!?L` premise, the impure one `CutR?!` against the same.
    fn rho(&self, m: &Mc, rest: &[usize], qq0: &Node, target: &Sequent) -> Step {
        let c = self.c;
        let purity_calc = if c.is_ilc_family() { c } else { CalculusId::IlcRho };
        let occ = OccurrenceRef { path: vec![], occ: Occ::r(m.at) };
        let pure = is_pure(&m.p, purity_calc, &occ, CountMode::Global).unwrap_or(false);
        let p0 = m.p.prem[0].clone();
        let (n, label) = if pure {
            let l = last_left(qq0);
            (Mc { dir: Dir::L, wb: true, p: p0, q: qq0.clone(), at: 0, occ: vec![l] }.build(c)?, "(!R,!?L)-cut, pure")
        } else if rest.is_empty() {
            let q0 = m.q.prem[0].clone();
            let l = last_left(&q0);
            (Mc { dir: Dir::R, wb: true, p: p0, q: q0, at: l, occ: vec![0] }.build(c)?, "(!R,!?L)-cut, impure")
        } else {
            return None;
        };
        named(reorder_to(c, n, target).ok(), label)
    }

    /// `Dir::R` with `p` principal on `o`.
    fn principal_r(&self, m: &Mc, o: usize, target: &Sequent) -> Step {
        let c = self.c;
        let (p, q) = (&m.p, &m.q);
        let rest: Vec<usize> = m.occ.iter().copied().filter(|&x| x != o).collect();
        let per = sources(p, Side::R, &rest);
        let pp: Vec<Node> = p
            .prem
            .iter()
            .zip(per.iter())
            .map(|(pj, oj)| m.into_p(c, pj, oj.clone()).map(|x| x.node))
            .collect::<Option<_>>()?;
        let label = pair_label(p, q, m.wb);
        match p.rule {
            R::WhyW | R::Wr => return named(adjust(c, pp[0].clone(), target).ok(), label),
            R::WhyC | R::Cr => {
                let mut occ = per[0].clone();
                occ.extend([0, 1]);
                let n = m.with_p(p.prem[0].clone(), occ).build(c)?;
                return named(adjust(c, n, target).ok(), label);
            }
            _ => {}
        }
        if !principal(q, Side::L, m.at) {
            return None;
        }
        let q0 = || q.prem[0].clone();
        let out = match (p.rule, q.rule, m.wb) {
            (R::WhyD, R::WhyL | R::WhyLWhy, false) | (R::WhyD, R::BangD, true) => cut(c, pp[0].clone(), q0()),
            (R::WhyD, R::BangWhyL, true) => {
                let l = last_left(&q.prem[0]);
                Mc { dir: Dir::L, wb: true, p: pp[0].clone(), q: q0(), at: 0, occ: vec![l] }.build(c)
            }
            (R::BotR | R::FfR | R::FfRWhy, R::BotL | R::FfL, false) => Some(pp[0].clone()),
            _ => None,
        };
        named(reorder_to(c, out?, target).ok(), label)
    }

    /// Splits one occurrence off a multicut: `CutLⁿ` becomes `CutL¹` over
    /// `CutLⁿ⁻¹` (and mirrored), so the single cut can move on its own.
    fn unfold(&self, m: &Mc, o: usize, target: &Sequent) -> Step {
        let c = self.c;
        let rest: Vec<usize> = m.occ.iter().copied().filter(|&x| x != o).collect();
        let before = rest.iter().filter(|&&r| r < o).count();
        let inner = Mc { occ: rest.clone(), ..m.clone() }.build(c)?;
        let outer = match m.dir {
            Dir::L => {
                let idx = rest.len() * m.p.seq.left.len() + o - before;
                m.with_q(inner, vec![idx])
            }
            Dir::R => m.with_p(inner, vec![o - before]),
        };
        named(reorder_to(c, outer.build(c)?, target).ok(), format!("unfold {}", rule_of(m).label()))
    }

    fn right_minor(&self, m: &Mc, target: &Sequent) -> Step {
        let into = |qj: &Node, o: Vec<usize>| m.into_q(self.c, qj, o);
        named(minor(self.c, &m.q, Side::L, &m.occ, &into, target), format!("right-minor {}", m.q.rule.label()))
    }

    fn left_minor(&self, m: &Mc, target: &Sequent) -> Step {
        let into = |pj: &Node, o: Vec<usize>| m.into_p(self.c, pj, o);
        named(minor(self.c, &m.p, Side::R, &m.occ, &into, target), format!("left-minor {}", m.p.rule.label()))
    }

    fn single(&self, m: &Mc, target: &Sequent) -> Step {
        let l = if m.dir == Dir::L { m.clone() } else { m.flip() };
        let r = l.flip();
        let (a, b) = l.pair();
        let qp = principal(&l.q, Side::L, b);
        let pp = principal(&l.p, Side::R, a);
        let structural_q = matches!(l.q.rule, R::BangW | R::Wl | R::BangC | R::Cl);
        let structural_p = matches!(l.p.rule, R::WhyW | R::Wr | R::WhyC | R::Cr);
        if qp && structural_q {
            if let Some(s) = self.principal_l(&l, b, target) {
                return Some(s);
            }
        }
        if pp && structural_p {
            if let Some(s) = self.principal_r(&r, a, target) {
                return Some(s);
            }
        }
        if pp && qp {
            if let Some(s) = self.principal_l(&l, b, target).or_else(|| self.principal_r(&r, a, target)) {
                return Some(s);
            }
        }
        if !qp {
            if let Some(s) = self.right_minor(&l, target) {
                return Some(s);
            }
        }
        if !pp {
            if let Some(s) = self.left_minor(&r, target) {
                return Some(s);
            }
        }
        None
    }

    fn multicut(&self, m: &Mc, target: &Sequent) -> Step {
        if m.n() == 0 {
            let n = match m.dir {
                Dir::L => m.q.clone(),
                Dir::R => m.p.clone(),
            };
            return named(reorder_to(self.c, n, target).ok(), format!("{}⁰", rule_of(m).label()));
        }
        if let Some(s) = self.identity(m, target) {
            return Some(s);
        }
        if m.n() == 1 {
            return self.single(m, target);
        }
        let (host, side) = match m.dir {
            Dir::L => (&m.q, Side::L),
            Dir::R => (&m.p, Side::R),
        };
        let prin: Vec<usize> = m.occ.iter().copied().filter(|&o| principal(host, side, o)).collect();
        if prin.is_empty() {
            let s = match m.dir {
                Dir::L => self.right_minor(m, target),
                Dir::R => self.left_minor(m, target),
            };
            return s.or_else(|| self.unfold(m, m.occ[0], target));
        }
        for &o in &prin {
            let s = match m.dir {
                Dir::L => self.principal_l(m, o, target),
                Dir::R => self.principal_r(m, o, target),
            };
            if s.is_some() {
                return s;
            }
        }
        self.unfold(m, prin[0], target)
    }

    /// `CutDistL` replaces antecedent `!A` occurrences by `!?A`;
    /// `CutDistR` succedent `?A` occurrences by `?!A`.
    fn dist(&self, n: &Node) -> Step {
        let c = self.c;
        let target = &n.seq;
        let host = &n.prem[0];
        let a = n.params.intro.clone()?;
        let occ = n.params.occ.clone()?;
        let left = n.rule == R::CutDistL;
        let side = if left { Side::L } else { Side::R };
        if occ.is_empty() {
            return named(reorder_to(c, host.clone(), target).ok(), format!("{}⁰", n.rule.label()));
        }
        let into = |h: &Node, o: Vec<usize>| -> Option<Pushed> {
            if o.is_empty() {
                return Some(Pushed::same(h));
            }
            let k = o.len();
            let node = Node::mk(c, n.rule, Params { occ: Some(o.clone()), ..Params::intro(a.clone()) }, vec![h.clone()]).ok()?;
            Some(if left {
                Pushed {
                    node,
                    lmap: removal_map(h.seq.left.len(), &o, k),
                    rmap: (0..h.seq.right.len()).map(Some).collect(),
                }
            } else {
                Pushed {
                    node,
                    lmap: (0..h.seq.left.len()).map(Some).collect(),
                    rmap: removal_map(h.seq.right.len(), &o, 0),
                }
            })
        };
        // the two derivations of Dist's own sequent
        let axiom = || Node::mk(c, R::Dist, Params::intro(a.clone()), vec![]).ok();
        if occ.len() == 1 && host.seq.left.len() == 1 && host.seq.right.len() == 1 {
            let inner = host.prem.first().map(|q| q.seq.left.len() == 1 && q.seq.left == q.seq.right);
            if (left && host.rule == R::WhyD && inner == Some(true)) || (!left && is_bang_d_id(host)) {
                return named(axiom(), format!("{} over {}·Id", n.rule.label(), host.rule.label()));
            }
        }
        let prin: Vec<usize> = occ.iter().copied().filter(|&o| principal(host, side, o)).collect();
        let Some(&o) = prin.first() else {
            return named(minor(c, host, side, &occ, &into, target), format!("{}-minor {}", n.rule.label(), host.rule.label()));
        };
        let rest: Vec<usize> = occ.iter().copied().filter(|&x| x != o).collect();
        let per = sources(host, side, &rest);
        let h0 = &host.prem.first()?;
        let label = format!("({},{})", n.rule.label(), host.rule.label());
        let out = match host.rule {
            R::BangW | R::WhyW => into(h0, per[0].clone())?.node,
            R::BangC => {
                let l = h0.seq.left.len();
                let mut o = per[0].clone();
                o.extend([l - 2, l - 1]);
                into(h0, o)?.node
            }
            R::WhyC => {
                let mut o = per[0].clone();
                o.extend([0, 1]);
                into(h0, o)?.node
            }
            _ => return None,
        };
        named(adjust(c, out, target).ok(), label)
    }

    /// `Cut?` and `Cut!` become plain cuts over `?L?` / `!R!`.
    fn convert(&self, n: &Node) -> Step {
        let c = self.c;
        let (l, r) = (n.prem[0].clone(), n.prem[1].clone());
        let out = match n.rule {
            R::CutWhy => cut(c, l, Node::mk(c, R::WhyLWhy, Params::none(), vec![r]).ok()?),
            R::CutBang => cut(c, Node::mk(c, R::BangRBang, Params::none(), vec![l]).ok()?, r),
            _ => return None,
        };
        named(out, format!("{} as Cut", n.rule.label()))
    }

    /// Last resort when no catalogue case applies: a premise whose
    /// conclusion is `F ⊢ F` on the cut formula is an identity up to
    /// η-expansion, so the cut keeps the other premise.
    fn identity_sequent(&self, m: &Mc, target: &Sequent) -> Step {
        if m.wb {
            return None;
        }
        let trivial = |n: &Node| n.seq.left.len() == 1 && n.seq.left == n.seq.right;
        let keep = match m.dir {
            Dir::L if trivial(&m.p) => &m.q,
            Dir::R if trivial(&m.q) => &m.p,
            Dir::L if m.n() == 1 && trivial(&m.q) => &m.p,
            Dir::R if m.n() == 1 && trivial(&m.p) => &m.q,
            _ => return None,
        };
        named(reorder_to(self.c, keep.clone(), target).ok(), "identity-sequent cut")
    }

    fn step(&self, n: &Node) -> Step {
        match n.rule {
            R::CutWhy | R::CutBang => self.convert(n),
            R::CutDistL | R::CutDistR => self.dist(n),
            _ => {
                let m = Mc::of(n)?;
                self.multicut(&m, &n.seq).or_else(|| self.identity_sequent(&m, &n.seq))
            }
        }
    }
}

fn rule_of(m: &Mc) -> RuleId {
    match (m.dir, m.wb) {
        (Dir::L, false) => R::CutLn,
        (Dir::L, true) => R::CutLnWB,
        (Dir::R, false) => R::CutRn,
        (Dir::R, true) => R::CutRnWB,
    }
}

// ----------------------------------------------------------- rewriting

fn replace(c: CalculusId, root: &Node, path: &[usize], new: Node) -> Result<Node, CutElimError> {
    let Some((&k, rest)) = path.split_first() else { return Ok(new) };
    let mut prem = root.prem.clone();
    let sub = prem.get(k).ok_or_else(|| CutElimError::InvalidSite(path.to_vec()))?;
    prem[k] = replace(c, sub, rest, new)?;
    Node::mk(c, root.rule, root.params.clone(), prem).map_err(|source| CutElimError::Rebuild { path: path.to_vec(), source })
}

fn no_case(n: &Node, path: &[usize]) -> CutElimError {
    CutElimError::NoMatchingCase {
        path: path.to_vec(),
        rule: n.rule,
        left: n.prem[0].rule,
        right: n.prem.get(1).map_or(n.rule, |q| q.rule),
        formula: site_formula(n).map_or(Formula::Top, |f| f.0),
    }
}

/// One reduction at `site`; returns the rewritten proof and the case name.
pub fn cut_step(root: &Node, site: &CutSite, c: CalculusId) -> Result<(Node, String), CutElimError> {
    let n = root.at_path(&site.path).filter(|n| n.rule.is_cut()).ok_or_else(|| CutElimError::InvalidSite(site.path.clone()))?;
    let (new, case) = Engine { c }.step(n).ok_or_else(|| no_case(n, &site.path))?;
    debug_assert_eq!(new.seq, n.seq);
    Ok((replace(c, root, &site.path, new)?, case))
}

/// Folds the cut at `path` into a multicut: a plain cut becomes `CutL¹`,
/// and a `CutL` whose right premise is another `CutL` of the same left
/// premise and occurrence absorbs it.
pub fn merge_multicut(root: &Node, path: &[usize], c: CalculusId) -> Result<Node, CutElimError> {
    let bad = || CutElimError::InvalidSite(path.to_vec());
    let n = root.at_path(path).ok_or_else(bad)?;
    let mut m = Mc::of(n).filter(|m| m.dir == Dir::L).ok_or_else(bad)?;
    while let Some(inner) = Mc::of(&m.q).filter(|i| i.dir == Dir::L && i.wb == m.wb && i.at == m.at && i.p == m.p) {
        let skip = inner.n() * m.p.seq.left.len();
        if m.occ.iter().any(|&o| o < skip) {
            break;
        }
        let kept: Vec<usize> = (0..inner.q.seq.left.len()).filter(|i| !inner.occ.contains(i)).collect();
        let mut occ = inner.occ.clone();
        occ.extend(m.occ.iter().map(|&o| kept[o - skip]));
        occ.sort_unstable();
        m = inner.with_q(inner.q.clone(), occ);
    }
    let rule = rule_of(&m);
    let new = Node::mk(c, rule, Params::multicut(m.at, m.occ.clone()), vec![m.p.clone(), m.q.clone()])
        .map_err(|source| CutElimError::Rebuild { path: path.to_vec(), source })?;
    debug_assert_eq!(new.seq, n.seq);
    replace(c, root, path, new)
}

/// Inverse of [`merge_multicut`]: a multicut becomes nested single cuts,
/// plain `Cut`s wherever the positions allow.
pub fn unfold_multicut(root: &Node, path: &[usize], c: CalculusId) -> Result<Node, CutElimError> {
    let bad = || CutElimError::InvalidSite(path.to_vec());
    let n = root.at_path(path).ok_or_else(bad)?;
    let m = Mc::of(n).ok_or_else(bad)?;
    let new = unfold_all(c, &m).ok_or_else(bad)?;
    replace(c, root, path, new)
}

fn unfold_all(c: CalculusId, m: &Mc) -> Option<Node> {
    if m.n() <= 1 {
        return m.build(c);
    }
    let mut occ = m.occ.clone();
    occ.sort_unstable();
    let o = occ[0];
    let rest = occ[1..].to_vec();
    let inner = unfold_all(c, &Mc { occ: rest.clone(), ..m.clone() })?;
    let outer = match m.dir {
        Dir::L => m.with_q(inner, vec![rest.len() * m.p.seq.left.len() + o]),
        Dir::R => m.with_p(inner, vec![o]),
    };
    outer.build(c)
}

// -------------------------------------------------------------- driver

#[derive(Clone, Debug)]
pub struct Options {
    pub fuel: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { fuel: DEFAULT_FUEL }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub proof: Node,
    pub trace: Vec<TraceLine>,
}

/// Eliminates all cuts from a checked derivation; `on_step` sees every
/// intermediate proof.
pub fn eliminate_node(
    root: &Node,
    c: CalculusId,
    opts: &Options,
    on_step: &mut dyn FnMut(&Node, &TraceLine),
) -> Result<Outcome, CutElimError> {
    if !supported(c) {
        return Err(CutElimError::Unsupported(c));
    }
    let mut cur = root.clone();
    let mut trace = Vec::new();
    while let Some(site) = select_cut(&cur) {
        if trace.len() >= opts.fuel {
            return Err(CutElimError::FuelExhausted(opts.fuel));
        }
        let (next, case) = cut_step(&cur, &site, c)?;
        cur = next;
        let line = TraceLine {
            step: trace.len() + 1,
            case,
            path: site.path,
            rank: site.rank,
            depth: site.depth,
            ranks: rank_multiset(&cur),
            size: cur.size(),
        };
        on_step(&cur, &line);
        trace.push(line);
    }
    Ok(Outcome { proof: cur, trace })
}

/// Checks `p` in `c` and returns a cut-free proof of the same end sequent.
pub fn eliminate_cuts(p: &Proof, c: CalculusId) -> Result<Proof, CutElimError> {
    if !supported(c) {
        return Err(CutElimError::Unsupported(c));
    }
    let n = crate::calculi::check_proof(p, c).map_err(CutElimError::Input)?;
    Ok(eliminate_node(&n, c, &Options::default(), &mut |_, _| {})?.proof.to_proof())
}
