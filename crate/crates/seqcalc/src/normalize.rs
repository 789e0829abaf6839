//! Normal forms modulo permutations of exponential rules, and the check that
//! the two routes LK → INC → ILC_ι and LK → CLC → ILC_ι agree up to them.
//!
//! Normalisation works in two layers:
//!
//! * exchanges are canonical: every exchange is erased and the principal
//!   occurrences of each rule are brought into place by a fixed placement
//!   (context order preserved, principal occurrences moved last/first);
//! * a small rewrite system on exponential rules, applied to a fixpoint:
//!   - adjacent unary exponential rules on unrelated occurrences are sorted
//!     by (`!?L`/`?!R` first and weakenings last, rule name, principal
//!     formula), the lesser one nearer the leaves;
//!   - `!?L` over `!D` on the same occurrence becomes `!D` over `?L`, and
//!     `?!R` over `?D` becomes `?D` over `!R`;
//!   - `!R(!D(Id A))` and `?L(?D(Id ?A))` become identity axioms;
//!   - the derived `?!R` block `Cut(!R(a), !?L(?D(Id !B)))` folds to `?!R(a)`;
//!   - `Cut(?!R(a), ?L(b))` becomes `Cut(!R(a), !?L(b))`.

use crate::calculi::{check_proof, CalculusId, Node, RuleError, Violation};
use crate::proof::{Params, Proof, Side};
use crate::purity::{flow, flow_tables, Occ, Src};
use crate::rules::RuleId as R;
use crate::structural::{permute, reorder_to, to_principal};
use crate::syntax::Formula;
use crate::translate::{translate_node, Edge, TranslateError};

type Res<T> = Result<T, RuleError>;

/// Passes of the rewrite system before giving up (never reached on
/// translated proofs; guards against a non-terminating swap cycle).
const MAX_PASSES: usize = 10_000;

/// Position maps from a node's conclusion to its canonical rebuild.
struct Map {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Map {
    fn get(&self, o: Occ) -> Occ {
        match o.side {
            Side::L => Occ::l(self.left[o.index]),
            Side::R => Occ::r(self.right[o.index]),
        }
    }
}

fn sorted(mut v: Vec<(usize, Occ)>) -> Vec<(usize, Occ)> {
    v.sort();
    v
}

/// Premise occurrences that only pass through as context.
fn context(n: &Node) -> Vec<Src> {
    let (l, r) = flow_tables(n);
    let mut out = Vec::new();
    for (side, table) in [(Side::L, l), (Side::R, r)] {
        for (j, srcs) in table.into_iter().enumerate() {
            let f = &n.seq.side(side)[j];
            let mut prems: Vec<usize> = srcs.iter().map(|s| s.prem).collect();
            prems.dedup();
            let same = srcs.iter().all(|s| n.prem[s.prem].seq.side(s.occ.side)[s.occ.index] == *f);
            if !srcs.is_empty() && same && prems.len() == srcs.len() {
                out.extend(srcs);
            }
        }
    }
    out
}

/// Rebuilds `n` without its exchanges, placing principal occurrences with
/// the fixed placement. Returns where each conclusion occurrence went.
fn rebuild(n: &Node, c: CalculusId) -> Res<(Node, Map)> {
    if n.rule.is_exchange() {
        let (m, inner) = rebuild(&n.prem[0], c)?;
        let (l, r) = flow_tables(n);
        let left = l.iter().map(|s| inner.get(s[0].occ).index).collect();
        let right = r.iter().map(|s| inner.get(s[0].occ).index).collect();
        return Ok((m, Map { left, right }));
    }
    if n.prem.is_empty() {
        let id = |k: usize| (0..k).collect();
        return Ok((n.clone(), Map { left: id(n.seq.left.len()), right: id(n.seq.right.len()) }));
    }
    let ctx = context(n);
    let (cl, cr) = flow_tables(n);
    let mut placed = Vec::with_capacity(n.prem.len());
    // per premise: canonical-premise position -> placed position
    let mut moves: Vec<Map> = Vec::with_capacity(n.prem.len());
    let mut maps: Vec<Map> = Vec::with_capacity(n.prem.len());
    for (k, q) in n.prem.iter().enumerate() {
        let (mut m, map) = rebuild(q, c)?;
        let mut mv = Map { left: Vec::new(), right: Vec::new() };
        for (side, table) in [(Side::L, &cl), (Side::R, &cr)] {
            let len = q.seq.side(side).len();
            let is_ctx = |i: usize| ctx.iter().any(|s| s.prem == k && s.occ == Occ { side, index: i });
            // active occurrences in their original order, as canonical positions
            let active: Vec<usize> = (0..len).filter(|&i| !is_ctx(i)).map(|i| map.get(Occ { side, index: i }).index).collect();
            let rest: Vec<usize> = (0..len).filter(|j| !active.contains(j)).collect();
            let mut perm: Vec<usize> = match side {
                Side::L => rest.iter().chain(active.iter()).copied().collect(),
                Side::R => active.iter().chain(rest.iter()).copied().collect(),
            };
            if k > 0 {
                // an additive context must line up with the first premise's
                let mut aligned: Vec<Option<usize>> = vec![None; len];
                for srcs in table.iter() {
                    let first = srcs.iter().find(|s| s.prem == 0 && s.occ.side == side);
                    let mine = srcs.iter().find(|s| s.prem == k && s.occ.side == side);
                    // only shared context lines up; a principal formula
                    // built from both premises does not
                    let shared = |s: &&Src| ctx.contains(s);
                    if let (Some(a), Some(b)) = (first.filter(shared), mine.filter(shared)) {
                        let at = moves[0].get(maps[0].get(a.occ)).index;
                        if at < len {
                            aligned[at] = Some(map.get(b.occ).index);
                        }
                    }
                }
                if aligned.iter().any(Option::is_some) {
                    let taken: Vec<usize> = aligned.iter().flatten().copied().collect();
                    let mut free = perm.iter().copied().filter(|x| !taken.contains(x));
                    let filled: Option<Vec<usize>> = aligned.iter().map(|x| x.or_else(|| free.next())).collect();
                    perm = filled.unwrap_or(perm);
                }
            }
            m = permute(c, m, side, &perm)?;
            let mut inv = vec![0; len];
            for (j, &from) in perm.iter().enumerate() {
                inv[from] = j;
            }
            match side {
                Side::L => mv.left = inv,
                Side::R => mv.right = inv,
            }
        }
        placed.push(m);
        moves.push(mv);
        maps.push(map);
    }
    let params = Params { split: None, ..n.params.clone() };
    let built = Node::mk(c, n.rule, params, placed)?;
    let (bl, br) = flow_tables(&built);
    let (ol, or) = (cl, cr);
    let key = |s: &Src| (s.prem, moves[s.prem].get(maps[s.prem].get(s.occ)));
    let mut out = Map { left: Vec::new(), right: Vec::new() };
    for (side, old, new) in [(Side::L, ol, bl), (Side::R, or, br)] {
        let new_keys: Vec<Vec<(usize, Occ)>> =
            new.iter().map(|srcs| sorted(srcs.iter().map(|s| (s.prem, s.occ)).collect())).collect();
        let fresh: Vec<usize> = (0..new.len()).filter(|&j| new[j].is_empty()).collect();
        let mut nth_fresh = 0;
        let mut target = Vec::with_capacity(old.len());
        for srcs in &old {
            let j = if srcs.is_empty() {
                nth_fresh += 1;
                fresh[nth_fresh - 1]
            } else {
                let want = sorted(srcs.iter().map(key).collect());
                new_keys.iter().position(|k| *k == want).expect("flow is preserved by placement")
            };
            target.push(j);
        }
        match side {
            Side::L => out.left = target,
            Side::R => out.right = target,
        }
    }
    Ok((built, out))
}

/// The exchange-canonical form of `n`, with the same conclusion.
fn canonical(n: &Node, c: CalculusId) -> Res<Node> {
    let (m, _) = rebuild(n, c)?;
    reorder_to(c, m, &n.seq)
}

// ------------------------------------------------------------ rewrites

fn skipx(n: &Node) -> &Node {
    let mut n = n;
    while n.rule.is_exchange() {
        n = &n.prem[0];
    }
    n
}

/// Follows a conclusion occurrence down through an exchange chain.
fn down_x(n: &Node, o: Occ) -> Occ {
    let (mut n, mut o) = (n, o);
    while n.rule.is_exchange() {
        o = flow(n, o)[0].occ;
        n = &n.prem[0];
    }
    o
}

/// Where premise occurrence `o` of the unary chain from `top` down to
/// `base` ends up in `top`'s conclusion.
fn up(top: &Node, base: &Node, o: Occ) -> Option<Occ> {
    let mut chain = Vec::new();
    let mut n = top;
    while !n.ptr_eq(base) {
        chain.push(n);
        n = n.prem.first()?;
    }
    let mut o = o;
    for n in chain.into_iter().rev() {
        let (l, r) = flow_tables(n);
        let hit = |t: &Vec<Vec<Src>>| t.iter().position(|s| s.iter().any(|s| s.occ == o));
        o = match (hit(&l), hit(&r)) {
            (Some(i), _) => Occ::l(i),
            (_, Some(i)) => Occ::r(i),
            _ => return None,
        };
    }
    Some(o)
}

/// The unary exponential rules that permute, with the side of their
/// principal formula.
fn swappable(r: R) -> Option<Side> {
    match r {
        R::BangD | R::WhyL | R::BangWhyL | R::BangW => Some(Side::L),
        R::WhyD | R::BangR | R::WhyBangR | R::WhyW => Some(Side::R),
        _ => None,
    }
}

/// Order of a commuting run, least nearest the leaves. `!?L` and `?!R` sink
/// first so that they meet the `!D`/`?D` they exchange with; weakenings
/// float to the top of the run.
fn sort_key(r: R, principal: &Formula) -> (u8, &'static str, String) {
    let class = match r {
        R::BangWhyL | R::WhyBangR => 0,
        R::BangW | R::WhyW => 2,
        _ => 1,
    };
    (class, r.name(), principal.to_string())
}

fn fixed(n: &Node, side: Side) -> Occ {
    match side {
        Side::L => Occ::l(n.seq.left.len() - 1),
        Side::R => Occ::r(0),
    }
}

fn is_weakening(r: R) -> bool {
    matches!(r, R::BangW | R::WhyW)
}

fn u(c: CalculusId, r: R, p: Node) -> Option<Node> {
    Node::mk(c, r, Params::none(), vec![p]).ok()
}

fn is_identity_block(n: &Node, outer: R, inner: R) -> bool {
    let a = skipx(n);
    a.rule == outer && {
        let b = skipx(&a.prem[0]);
        b.rule == inner && skipx(&b.prem[0]).rule == R::Id
    }
}

fn rewrite(n: &Node, c: CalculusId) -> Option<Node> {
    let out = match n.rule {
        R::Cut => {
            let (p, q) = (&n.prem[0], &n.prem[1]);
            let (lchain, l, lo) = trace(p, Occ::r(0));
            let (rchain, r, ro) = trace(q, fixed(q, Side::L));
            let unit = q.seq.left.len() == 1 && q.seq.right.len() == 1;
            if l.rule == R::BangR && lo == Occ::r(0) && unit && is_identity_block(q, R::BangWhyL, R::WhyD) {
                replay(c, &lchain, u(c, R::WhyBangR, l.prem[0].clone())?)?
            } else if l.rule == R::WhyBangR && r.rule == R::WhyL && lo == Occ::r(0) && ro == fixed(r, Side::L) {
                let a = replay(c, &lchain, u(c, R::BangR, l.prem[0].clone())?)?;
                let b = replay(c, &rchain, u(c, R::BangWhyL, r.prem[0].clone())?)?;
                Node::mk(c, R::Cut, Params::none(), vec![a, b]).ok()?
            } else {
                return None;
            }
        }
        R::BangR if n.seq.left.len() == 1 && n.seq.left == n.seq.right && is_identity_block(n, R::BangR, R::BangD) => {
            Node::mk(c, R::Id, Params::intro(n.seq.left[0].clone()), vec![]).ok()?
        }
        R::WhyL if n.seq.left.len() == 1 && n.seq.left == n.seq.right && is_identity_block(n, R::WhyL, R::WhyD) => {
            Node::mk(c, R::Id, Params::intro(n.seq.left[0].clone()), vec![]).ok()?
        }
        _ => return swap(n, c),
    };
    reorder_to(c, out, &n.seq).ok()
}

/// Follows occurrence `o` of `n`'s conclusion down the unary rules that
/// pass it through unchanged; returns those rules (top first), the node
/// that makes it, and its position there.
fn trace(n: &Node, o: Occ) -> (Vec<&Node>, &Node, Occ) {
    let mut chain: Vec<&Node> = Vec::new();
    let (mut cur, mut o) = (n, o);
    loop {
        let srcs = flow(cur, o);
        let through = cur.prem.len() == 1
            && srcs.len() == 1
            && cur.prem[0].seq.side(srcs[0].occ.side)[srcs[0].occ.index] == cur.seq.side(o.side)[o.index];
        if !through {
            return (chain, cur, o);
        }
        chain.push(cur);
        o = srcs[0].occ;
        cur = &cur.prem[0];
    }
}

/// Re-applies a traced chain over a new base.
fn replay(c: CalculusId, chain: &[&Node], base: Node) -> Option<Node> {
    chain.iter().rev().try_fold(base, |m, step| Node::mk(c, step.rule, step.params.clone(), vec![m]).ok())
}

/// `!?L` (`?!R`) whose occurrence comes unchanged through a unary chain
/// from a `!D` (`?D`): the pair is exchanged, `!D(?L(x))` (`?D(!R(x))`),
/// inserted at the lowest point of the replayed chain where it is a valid
/// instance.
fn sink(n: &Node, c: CalculusId) -> Option<Node> {
    let (side, partner) = match n.rule {
        R::BangWhyL => (Side::L, R::BangD),
        R::WhyBangR => (Side::R, R::WhyD),
        _ => return None,
    };
    let (chain, cur, o) = trace(&n.prem[0], fixed(&n.prem[0], side));
    if cur.rule != partner || o != fixed(cur, side) || chain.is_empty() {
        return None;
    }
    let x = cur.prem[0].clone();
    let pair = |x: Node| match partner {
        R::BangD => u(c, R::BangD, u(c, R::WhyL, x)?),
        _ => u(c, R::WhyD, u(c, R::BangR, x)?),
    };
    // lowest split of the chain under which the pair is a valid instance
    let m = (0..=chain.len()).rev().find_map(|k| {
        let (upper, lower) = chain.split_at(k);
        replay(c, upper, pair(replay(c, lower, x.clone())?)?)
    })?;
    (m.seq == n.seq).then_some(m)
}

/// Pair exchanges on one occurrence, then the sorting swaps.
fn swap(n: &Node, c: CalculusId) -> Option<Node> {
    if let Some(m) = sink(n, c) {
        return Some(m);
    }
    let so = swappable(n.rule)?;
    let p = &n.prem[0];
    let i = skipx(p);
    let si = swappable(i.rule)?;
    let o_active = (!is_weakening(n.rule)).then(|| down_x(p, fixed(p, so)));
    let i_principal = fixed(i, si);
    if o_active == Some(i_principal) {
        let x = i.prem[0].clone();
        let out = match (n.rule, i.rule) {
            (R::BangWhyL, R::BangD) => u(c, R::BangD, u(c, R::WhyL, x)?)?,
            (R::WhyBangR, R::WhyD) => u(c, R::WhyD, u(c, R::BangR, x)?)?,
            _ => return None,
        };
        return reorder_to(c, out, &n.seq).ok();
    }
    // the key of the inner rule, read in the outer conclusion
    let i_at = up(n, i, i_principal)?;
    let key_o = sort_key(n.rule, &n.seq.side(so)[fixed(n, so).index]);
    let key_i = sort_key(i.rule, &n.seq.side(i_at.side)[i_at.index]);
    if key_i <= key_o {
        return None;
    }
    let x = i.prem[0].clone();
    let lower = match o_active {
        Some(o) => {
            let q = flow(i, o)[0].occ;
            let moved = to_principal(c, x.clone(), so, q.index).ok()?;
            Node::mk(c, n.rule, n.params.clone(), vec![moved]).ok()?
        }
        None => Node::mk(c, n.rule, n.params.clone(), vec![x.clone()]).ok()?,
    };
    let upper = if is_weakening(i.rule) {
        Node::mk(c, i.rule, i.params.clone(), vec![lower]).ok()?
    } else {
        let a = up(&lower, &x, fixed(&x, si))?;
        let moved = to_principal(c, lower, si, a.index).ok()?;
        Node::mk(c, i.rule, i.params.clone(), vec![moved]).ok()?
    };
    reorder_to(c, upper, &n.seq).ok()
}

/// One bottom-up pass; rewrites each node at most once.
fn pass(n: &Node, c: CalculusId, changed: &mut bool) -> Node {
    let mut kids_changed = false;
    let kids: Vec<Node> = n
        .prem
        .iter()
        .map(|q| {
            let k = pass(q, c, changed);
            kids_changed |= !k.ptr_eq(q);
            k
        })
        .collect();
    let here = if kids_changed {
        Node::mk(c, n.rule, n.params.clone(), kids).expect("premise conclusions are unchanged")
    } else {
        n.clone()
    };
    match rewrite(&here, c) {
        Some(m) => {
            debug_assert_eq!(m.seq, n.seq);
            *changed = true;
            m
        }
        None => here,
    }
}

/// Normal form of a checked derivation in `c`.
pub fn normalize_node(n: &Node, c: CalculusId) -> Result<Node, RuleError> {
    let mut cur = canonical(n, c)?;
    for _ in 0..MAX_PASSES {
        let mut changed = false;
        let next = pass(&cur, c, &mut changed);
        if !changed {
            return Ok(cur);
        }
        cur = canonical(&next, c)?;
    }
    Ok(cur)
}

/// Canonical representative of `p` under the permutation equivalence.
pub fn permutation_normalize(p: &Proof, c: CalculusId) -> Result<Proof, Violation> {
    let n = check_proof(p, c)?;
    let m = normalize_node(&n, c).unwrap_or_else(|e| panic!("normalisation broke a checked proof: {e}"));
    Ok(m.to_proof())
}

// ------------------------------------------------------------ commutativity

/// Where the two normal forms first differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub path: Vec<usize>,
    pub via_inc: String,
    pub via_clc: String,
}

#[derive(Clone, Debug)]
pub struct CommuteReport {
    pub via_inc: Node,
    pub via_clc: Node,
    pub divergence: Option<Divergence>,
}

impl CommuteReport {
    pub fn commutes(&self) -> bool {
        self.divergence.is_none()
    }
}

fn describe(n: &Node) -> String {
    format!("{} : {}", n.rule.label(), n.seq)
}

/// First pre-order position where the trees differ in rule, parameters or
/// conclusion.
pub fn first_difference(a: &Node, b: &Node) -> Option<Divergence> {
    fn go(a: &Node, b: &Node, path: &mut Vec<usize>) -> Option<Divergence> {
        if a.rule != b.rule || a.params != b.params || a.seq != b.seq || a.prem.len() != b.prem.len() {
            return Some(Divergence { path: path.clone(), via_inc: describe(a), via_clc: describe(b) });
        }
        for (k, (x, y)) in a.prem.iter().zip(&b.prem).enumerate() {
            path.push(k);
            if let Some(d) = go(x, y, path) {
                return Some(d);
            }
            path.pop();
        }
        None
    }
    go(a, b, &mut Vec::new())
}

pub fn commute_node(n: &Node) -> Result<CommuteReport, TranslateError> {
    let c = CalculusId::IlcIota;
    let build = |e: Edge| -> Result<Node, TranslateError> {
        let t = translate_node(n, e)?;
        normalize_node(&t, c).map_err(|source| TranslateError::Build { edge: e, rule: t.rule, path: vec![], source })
    };
    let (via_inc, via_clc) = (build(Edge::LkIlcN)?, build(Edge::LkIlcV)?);
    let divergence = first_difference(&via_inc, &via_clc);
    Ok(CommuteReport { via_inc, via_clc, divergence })
}

/// Whether both routes of an LK proof into ILC_ι agree after normalisation.
pub fn commute_check(p: &Proof) -> Result<CommuteReport, TranslateError> {
    let n = check_proof(p, CalculusId::Lk).map_err(TranslateError::Source)?;
    commute_node(&n)
}
