//! Exchange, weakening and contraction chains computed on annotated
//! derivations. Every helper only emits rules of the given calculus.

use std::collections::HashMap;

use crate::calculi::{CalculusId, ErrKind, Node, RuleError};
use crate::proof::{Params, Sequent, Side};
use crate::rules::RuleId;
use crate::syntax::Formula;

pub type Res<T> = Result<T, RuleError>;

fn fail<T>(msg: impl Into<String>) -> Res<T> {
    Err(RuleError { kind: ErrKind::Shape, msg: msg.into() })
}

/// Stable matching: `perm[j]` is the index in `cur` that lands at `target[j]`.
pub fn matching(cur: &[Formula], target: &[Formula]) -> Option<Vec<usize>> {
    if cur.len() != target.len() {
        return None;
    }
    let mut used = vec![false; cur.len()];
    let mut perm = Vec::with_capacity(target.len());
    for t in target {
        let k = (0..cur.len()).find(|&k| !used[k] && &cur[k] == t)?;
        used[k] = true;
        perm.push(k);
    }
    Some(perm)
}

/// Applies adjacent exchanges so that position `j` of the side holds the
/// formula formerly at `perm[j]`.
pub fn permute(calc: CalculusId, mut n: Node, side: Side, perm: &[usize]) -> Res<Node> {
    let rule = match side {
        Side::L => RuleId::Xl,
        Side::R => RuleId::Xr,
    };
    let mut labels: Vec<usize> = (0..perm.len()).collect();
    for (j, &want) in perm.iter().enumerate() {
        let Some(k) = labels.iter().position(|&l| l == want) else { return fail("not a permutation") };
        for i in (j..k).rev() {
            labels.swap(i, i + 1);
            n = Node::mk(calc, rule, Params::at(i), vec![n])?;
        }
    }
    Ok(n)
}

pub fn reorder(calc: CalculusId, n: Node, side: Side, target: &[Formula]) -> Res<Node> {
    let cur = n.seq.side(side);
    if cur.as_slice() == target {
        return Ok(n);
    }
    let Some(perm) = matching(cur, target) else {
        return fail(format!("cannot permute {} into {}", show(cur), show(target)));
    };
    permute(calc, n, side, &perm)
}

/// Reorders both sides to match `target` exactly (as multisets they must agree).
pub fn reorder_to(calc: CalculusId, n: Node, target: &Sequent) -> Res<Node> {
    let n = reorder(calc, n, Side::L, &target.left)?;
    reorder(calc, n, Side::R, &target.right)
}

/// Moves the formula at `idx` to the end of the antecedent (left) or the
/// front of the succedent (right): the principal positions of the rules.
pub fn to_principal(calc: CalculusId, n: Node, side: Side, idx: usize) -> Res<Node> {
    let len = n.seq.side(side).len();
    let mut perm: Vec<usize> = (0..len).filter(|&k| k != idx).collect();
    match side {
        Side::L => perm.push(idx),
        Side::R => perm.insert(0, idx),
    }
    permute(calc, n, side, &perm)
}

fn counts(v: &[Formula]) -> HashMap<&Formula, usize> {
    let mut m = HashMap::new();
    for f in v {
        *m.entry(f).or_insert(0) += 1;
    }
    m
}

fn show(v: &[Formula]) -> String {
    v.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
}

/// Contracts duplicates on `side` until its multiset equals `target`'s, then
/// reorders. Fails if an excess formula cannot be contracted.
fn contract_side(calc: CalculusId, mut n: Node, side: Side, target: &[Formula]) -> Res<Node> {
    loop {
        let cur = n.seq.side(side).clone();
        let want = counts(target);
        let have = counts(&cur);
        let excess = cur.iter().position(|f| have[f] > want.get(f).copied().unwrap_or(0));
        let Some(i) = excess else { break };
        let f = cur[i].clone();
        let Some(j) = (i + 1..cur.len()).find(|&j| cur[j] == f) else {
            return fail(format!("cannot discard {f}: no duplicate to contract"));
        };
        let mut perm: Vec<usize> = (0..cur.len()).filter(|&k| k != i && k != j).collect();
        let rule = match side {
            Side::L => {
                perm.push(i);
                perm.push(j);
                calc.contract_left(&f)
            }
            Side::R => {
                perm.insert(0, j);
                perm.insert(0, i);
                calc.contract_right(&f)
            }
        };
        let Some(rule) = rule else { return fail(format!("{calc} cannot contract {f}")) };
        n = permute(calc, n, side, &perm)?;
        n = Node::mk(calc, rule, Params::none(), vec![n])?;
    }
    Ok(n)
}

/// Weakens in the formulas `target` has beyond the side's multiset.
fn weaken_side(calc: CalculusId, mut n: Node, side: Side, target: &[Formula]) -> Res<Node> {
    let have = counts(n.seq.side(side)).into_iter().map(|(f, c)| (f.clone(), c)).collect::<HashMap<_, _>>();
    let mut seen: HashMap<&Formula, usize> = HashMap::new();
    let mut missing = Vec::new();
    for f in target {
        let c = seen.entry(f).or_insert(0);
        *c += 1;
        if *c > have.get(f).copied().unwrap_or(0) {
            missing.push(f.clone());
        }
    }
    for f in missing {
        let rule = match side {
            Side::L => calc.weaken_left(&f),
            Side::R => calc.weaken_right(&f),
        };
        let Some(rule) = rule else { return fail(format!("{calc} cannot weaken {f}")) };
        n = Node::mk(calc, rule, Params::intro(f), vec![n])?;
    }
    Ok(n)
}

/// Contracts, weakens and exchanges until the conclusion is `target`.
pub fn adjust(calc: CalculusId, n: Node, target: &Sequent) -> Res<Node> {
    if n.seq == *target {
        return Ok(n);
    }
    let mut n = n;
    for side in [Side::L, Side::R] {
        let t = target.side(side);
        n = contract_side(calc, n, side, t)?;
        n = weaken_side(calc, n, side, t)?;
        n = reorder(calc, n, side, t)?;
    }
    Ok(n)
}

/// Contracts one side down to `target` (multiset), then reorders.
pub fn contract_to(calc: CalculusId, n: Node, side: Side, target: &[Formula]) -> Res<Node> {
    let n = contract_side(calc, n, side, target)?;
    reorder(calc, n, side, target)
}
