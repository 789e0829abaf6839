//! Bounded backward search for cut-free proofs.
//!
//! Sides are treated as multisets while searching; the exchange chains a
//! found proof needs are emitted afterwards. The bound limits the number of
//! non-exchange rules on any branch. Contraction is finitised by a
//! per-formula budget along each branch, and a branch never revisits a
//! sequent it is already trying to prove.

use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use crate::calculi::{infer, CalculusId, Node};
use crate::proof::{Params, Proof, Sequent};
use crate::rules::RuleId;
use crate::structural::reorder_to;
use crate::syntax::{dual_unchecked, Formula};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub depth: usize,
    pub contraction_budget: u8,
    /// Give up (reporting exhaustion) after this many explored goals.
    pub node_limit: Option<u64>,
}

impl SearchConfig {
    pub fn new(depth: usize) -> Self {
        SearchConfig { depth, contraction_budget: 2, node_limit: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Found(Proof),
    Exhausted { bound: usize },
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub verdict: Verdict,
    pub nodes_explored: u64,
    /// True when the node limit stopped the search before the bound did.
    pub truncated: bool,
}

impl SearchResult {
    pub fn found(&self) -> Option<&Proof> {
        match &self.verdict {
            Verdict::Found(p) => Some(p),
            Verdict::Exhausted { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("`{formula}` is not a formula of {calculus}")]
    Language { formula: String, calculus: CalculusId },
}

pub fn search_cutfree(goal: &Sequent, c: CalculusId, depth: usize) -> Result<SearchResult, SearchError> {
    search_with(goal, c, &SearchConfig::new(depth))
}

pub fn search_with(goal: &Sequent, c: CalculusId, cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    for f in goal.formulas() {
        if !f.in_language(c.logic()) {
            return Err(SearchError::Language { formula: f.to_string(), calculus: c });
        }
    }
    let mut s = Searcher::new(c, cfg);
    // iterative deepening keeps found proofs shallow
    for bound in 0..=cfg.depth {
        if let Some((n, _)) = s.go(goal, bound, &Used::new()).0 {
            let n = reorder_to(c, n, goal).expect("search result is a permutation of the goal");
            return Ok(SearchResult { verdict: Verdict::Found(n.to_proof()), nodes_explored: s.nodes, truncated: false });
        }
        if s.out_of_nodes() {
            break;
        }
    }
    Ok(SearchResult { verdict: Verdict::Exhausted { bound: cfg.depth }, nodes_explored: s.nodes, truncated: s.out_of_nodes() })
}

/// Number of non-exchange rules on the longest branch.
pub fn logical_depth(n: &Node) -> usize {
    let sub = n.prem.iter().map(logical_depth).max();
    match sub {
        None => 0,
        Some(d) if n.rule.is_exchange() => d,
        Some(d) => d + 1,
    }
}

type Used = BTreeMap<Formula, u8>;
type Canon = (Vec<Formula>, Vec<Formula>);

fn canon(s: &Sequent) -> Canon {
    let mut l = s.left.clone();
    let mut r = s.right.clone();
    l.sort();
    r.sort();
    (l, r)
}

enum Memo {
    Found(Node, usize),
    Failed(usize),
}

struct Cand {
    rule: RuleId,
    params: Params,
    prems: Vec<Sequent>,
    contracted: Option<Formula>,
}

struct Searcher {
    calc: CalculusId,
    budget: u8,
    limit: Option<u64>,
    rules: Vec<RuleId>,
    memo: HashMap<(Canon, Used), Memo>,
    stack: HashSet<Canon>,
    nodes: u64,
}

fn without(v: &[Formula], i: usize) -> Vec<Formula> {
    let mut w = v.to_vec();
    w.remove(i);
    w
}

fn with_last(v: &[Formula], f: &[Formula]) -> Vec<Formula> {
    let mut w = v.to_vec();
    w.extend_from_slice(f);
    w
}

fn with_first(f: &[Formula], v: &[Formula]) -> Vec<Formula> {
    let mut w = f.to_vec();
    w.extend_from_slice(v);
    w
}

/// All ways to split a list in two, up to multiset equality.
fn splits(v: &[Formula]) -> Vec<(Vec<Formula>, Vec<Formula>)> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for mask in 0u32..(1 << v.len()) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (k, f) in v.iter().enumerate() {
            if mask & (1 << k) != 0 {
                a.push(f.clone());
            } else {
                b.push(f.clone());
            }
        }
        let mut key = (a.clone(), b.clone());
        key.0.sort();
        key.1.sort();
        if seen.insert(key) {
            out.push((a, b));
        }
    }
    out
}

fn seq(l: Vec<Formula>, r: Vec<Formula>) -> Sequent {
    Sequent::new(l, r)
}

impl Searcher {
    fn new(calc: CalculusId, cfg: &SearchConfig) -> Self {
        let rules = calc.rules().into_iter().filter(|r| !r.is_cut() && !r.is_exchange()).collect();
        Searcher {
            calc,
            budget: cfg.contraction_budget,
            limit: cfg.node_limit,
            rules,
            memo: HashMap::new(),
            stack: HashSet::new(),
            nodes: 0,
        }
    }

    fn out_of_nodes(&self) -> bool {
        self.limit.is_some_and(|l| self.nodes >= l)
    }

    /// Returns a proof of some permutation of `goal`, and whether the
    /// outcome is independent of the current branch (cacheable).
    fn go(&mut self, goal: &Sequent, bound: usize, used: &Used) -> (Option<(Node, usize)>, bool) {
        let c = canon(goal);
        let key = (c.clone(), used.clone());
        match self.memo.get(&key) {
            Some(Memo::Found(n, d)) if *d <= bound => return (Some((n.clone(), *d)), true),
            Some(Memo::Failed(b)) if *b >= bound => return (None, true),
            _ => {}
        }
        if self.stack.contains(&c) || self.out_of_nodes() {
            return (None, false);
        }
        self.nodes += 1;
        self.stack.insert(c.clone());
        let mut clean = true;
        let mut result = None;
        for cand in self.candidates(goal, bound, used) {
            let mut used2 = used.clone();
            if let Some(f) = &cand.contracted {
                *used2.entry(f.clone()).or_insert(0) += 1;
            }
            let mut kids = Vec::with_capacity(cand.prems.len());
            let mut depth = 0;
            for p in &cand.prems {
                let (r, cl) = self.go(p, bound - 1, &used2);
                clean &= cl;
                match r {
                    Some((n, d)) => {
                        depth = depth.max(d + 1);
                        kids.push(n);
                    }
                    None => break,
                }
            }
            if kids.len() < cand.prems.len() {
                continue;
            }
            let kids: Option<Vec<Node>> =
                kids.into_iter().zip(&cand.prems).map(|(n, p)| reorder_to(self.calc, n, p).ok()).collect();
            if let Some(kids) = kids {
                if let Ok(n) = Node::mk(self.calc, cand.rule, cand.params.clone(), kids) {
                    result = Some((n, depth));
                    break;
                }
            }
        }
        if bound == 0 && result.is_none() {
            // leaves only at bound 0
            if let Some(n) = self.leaf(goal) {
                result = Some((n, 0));
            }
        }
        self.stack.remove(&c);
        match &result {
            Some((n, d)) => {
                self.memo.insert(key, Memo::Found(n.clone(), *d));
            }
            None if clean => {
                self.memo.insert(key, Memo::Failed(bound));
            }
            None => {}
        }
        (result, clean)
    }

    fn leaf(&self, goal: &Sequent) -> Option<Node> {
        for &r in &self.rules {
            if r.arity() != 0 {
                continue;
            }
            for params in self.leaf_params(r, goal) {
                if let Ok(n) = Node::mk(self.calc, r, params, vec![]) {
                    if canon(&n.seq) == canon(goal) {
                        return Some(n);
                    }
                }
            }
        }
        None
    }

    fn leaf_params(&self, r: RuleId, g: &Sequent) -> Vec<Params> {
        use RuleId as R;
        match r {
            R::Id if g.left.len() == 1 && g.right.len() == 1 && g.left[0] == g.right[0] => {
                vec![Params::intro(g.left[0].clone())]
            }
            R::Dist if g.left.len() == 1 => {
                let inner = g.left[0].unbang().and_then(Formula::unwhy);
                inner.map(|a| Params::intro(a.clone())).into_iter().collect()
            }
            R::TtR | R::TopR | R::FfL | R::BotL => vec![Params::none()],
            R::OneR => (0..g.right.len())
                .filter(|&j| g.right[j] == Formula::One)
                .map(|j| Params::ctx(g.left.clone(), without(&g.right, j)))
                .collect(),
            R::ZeroL => (0..g.left.len())
                .filter(|&i| g.left[i] == Formula::Zero)
                .map(|i| Params::ctx(without(&g.left, i), g.right.clone()))
                .collect(),
            _ => vec![],
        }
    }

    fn candidates(&self, goal: &Sequent, bound: usize, used: &Used) -> Vec<Cand> {
        if bound == 0 {
            return Vec::new();
        }
        let mut raw = Vec::new();
        let mut seen_l = HashSet::new();
        for i in 0..goal.left.len() {
            if seen_l.insert(&goal.left[i]) {
                self.left_cands(goal, i, used, &mut raw);
            }
        }
        let mut seen_r = HashSet::new();
        for j in 0..goal.right.len() {
            if seen_r.insert(&goal.right[j]) {
                self.right_cands(goal, j, used, &mut raw);
            }
        }
        // keep only instances whose conclusion is the goal up to order
        let want = canon(goal);
        let mut out: Vec<Cand> = raw
            .into_iter()
            .filter(|c| {
                if self.calc.intuitionistic() && c.prems.iter().any(|p| p.right.len() > 1) {
                    return false;
                }
                let refs: Vec<&Sequent> = c.prems.iter().collect();
                matches!(infer(self.calc, c.rule, &c.params, &refs), Ok(s) if canon(&s) == want)
            })
            .collect();
        // leaves need no recursion; try them before everything else
        let mut leaves: Vec<Cand> = self
            .rules
            .iter()
            .filter(|r| r.arity() == 0)
            .flat_map(|&r| {
                self.leaf_params(r, goal).into_iter().map(move |params| Cand { rule: r, params, prems: vec![], contracted: None })
            })
            .filter(|c| matches!(infer(self.calc, c.rule, &c.params, &[]), Ok(s) if canon(&s) == want))
            .collect();
        leaves.append(&mut out);
        leaves
    }

    fn allowed(&self, r: RuleId) -> bool {
        self.rules.contains(&r)
    }

    fn left_cands(&self, g: &Sequent, i: usize, used: &Used, out: &mut Vec<Cand>) {
        use RuleId as R;
        let f = &g.left[i];
        let d = without(&g.left, i);
        let gr = &g.right;
        let mut push = |rule: RuleId, params: Params, prems: Vec<Sequent>| {
            if self.allowed(rule) {
                out.push(Cand { rule, params, prems, contracted: None });
            }
        };
        if let Some(w) = self.calc.weaken_left(f) {
            push(w, Params::intro(f.clone()), vec![seq(d.clone(), gr.clone())]);
        }
        match f {
            Formula::Bang(a) => {
                push(R::BangD, Params::none(), vec![seq(with_last(&d, &[(**a).clone()]), gr.clone())]);
                if let Formula::Why(b) = &**a {
                    push(R::BangWhyL, Params::none(), vec![seq(with_last(&d, &[Formula::bang((**b).clone())]), gr.clone())]);
                }
                if let Formula::LImp(a0, b0) = &**a {
                    for (d1, th) in splits(&d) {
                        for (g1, xi) in splits(gr) {
                            push(
                                R::ClImpLBang,
                                Params::none(),
                                vec![
                                    seq(with_last(&d1, &[(**b0).clone()]), g1.clone()),
                                    seq(th.clone(), with_first(&[(**a0).clone()], &xi)),
                                ],
                            );
                        }
                    }
                }
            }
            Formula::Why(a) => {
                let p = vec![seq(with_last(&d, &[(**a).clone()]), gr.clone())];
                push(R::WhyL, Params::none(), p.clone());
                push(R::WhyLWhy, Params::none(), p);
            }
            Formula::Tt => {
                push(R::TtL, Params::none(), vec![seq(d.clone(), gr.clone())]);
                push(R::TtLBang, Params::none(), vec![seq(d.clone(), gr.clone())]);
            }
            Formula::Top => push(R::TopL, Params::none(), vec![seq(d.clone(), gr.clone())]),
            Formula::And(a, b) | Formula::With(a, b) => {
                let rules: &[RuleId] = if matches!(f, Formula::And(..)) { &[R::AndL, R::AndLBang] } else { &[R::WithL] };
                for &r in rules {
                    for (k, c) in [(1u8, a), (2, b)] {
                        push(r, Params::branch(k, f.clone()), vec![seq(with_last(&d, &[(**c).clone()]), gr.clone())]);
                    }
                }
            }
            Formula::Or(a, b) | Formula::Plus(a, b) => {
                let rules: &[RuleId] = if matches!(f, Formula::Or(..)) { &[R::OrL] } else { &[R::PlusL, R::PlusLBang] };
                for &r in rules {
                    push(
                        r,
                        Params::none(),
                        vec![seq(with_last(&d, &[(**a).clone()]), gr.clone()), seq(with_last(&d, &[(**b).clone()]), gr.clone())],
                    );
                }
            }
            Formula::CImp(a, b) => push(
                R::CImpL,
                Params::none(),
                vec![seq(d.clone(), with_first(&[(**a).clone()], gr)), seq(with_last(&d, &[(**b).clone()]), gr.clone())],
            ),
            Formula::IImp(a, b) => {
                push(R::IImpL, Params::none(), vec![seq(d.clone(), vec![(**a).clone()]), seq(with_last(&d, &[(**b).clone()]), gr.clone())]);
                if self.allowed(R::IImpLWhy) {
                    for (d1, th) in splits(&d) {
                        for (g1, xi) in splits(gr) {
                            push(
                                R::IImpLWhy,
                                Params::none(),
                                vec![seq(with_last(&d1, &[(**b).clone()]), g1.clone()), seq(th.clone(), with_first(&[(**a).clone()], &xi))],
                            );
                        }
                    }
                }
            }
            Formula::Tensor(a, b) => push(R::TensorL, Params::none(), vec![seq(with_last(&d, &[(**a).clone(), (**b).clone()]), gr.clone())]),
            Formula::Par(a, b) | Formula::UImp(a, b) => {
                let par = matches!(f, Formula::Par(..));
                let rule = if par { R::ParL } else { R::UImpL };
                if self.allowed(rule) {
                    for (d1, d2) in splits(&d) {
                        for (g1, g2) in splits(gr) {
                            let first =
                                if par { seq(with_last(&d1, &[(**a).clone()]), g1.clone()) } else { seq(d1.clone(), with_first(&[(**a).clone()], &g1)) };
                            push(rule, Params::none(), vec![first, seq(with_last(&d2, &[(**b).clone()]), g2.clone())]);
                        }
                    }
                }
            }
            Formula::Neg(a) => push(R::NegL, Params::none(), vec![seq(d.clone(), with_first(&[(**a).clone()], gr))]),
            _ => {}
        }
        if self.allowed(R::LDualL) {
            push(R::LDualL, Params::none(), vec![seq(d.clone(), with_first(&[dual_unchecked(f)], gr))]);
        }
        if used.get(f).copied().unwrap_or(0) < self.budget {
            if let Some(r) = self.calc.contract_left(f) {
                out.push(Cand {
                    rule: r,
                    params: Params::none(),
                    prems: vec![seq(with_last(&d, &[f.clone(), f.clone()]), gr.clone())],
                    contracted: Some(f.clone()),
                });
            }
        }
    }

    fn right_cands(&self, g: &Sequent, j: usize, used: &Used, out: &mut Vec<Cand>) {
        use RuleId as R;
        let f = &g.right[j];
        let gr = without(&g.right, j);
        let d = &g.left;
        let mut push = |rule: RuleId, params: Params, prems: Vec<Sequent>| {
            if self.allowed(rule) {
                out.push(Cand { rule, params, prems, contracted: None });
            }
        };
        if let Some(w) = self.calc.weaken_right(f) {
            push(w, Params::intro(f.clone()), vec![seq(d.clone(), gr.clone())]);
        }
        let one = |x: &Formula| vec![seq(d.clone(), with_first(std::slice::from_ref(x), &gr))];
        match f {
            Formula::Why(a) => {
                push(R::WhyD, Params::none(), one(a));
                if let Formula::Bang(b) = &**a {
                    push(R::WhyBangR, Params::none(), one(&Formula::why((**b).clone())));
                }
            }
            Formula::Bang(a) => {
                push(R::BangR, Params::none(), one(a));
                push(R::BangRBang, Params::none(), one(a));
            }
            Formula::Ff => {
                push(R::FfR, Params::none(), vec![seq(d.clone(), gr.clone())]);
                push(R::FfRWhy, Params::none(), vec![seq(d.clone(), gr.clone())]);
            }
            Formula::Bot => push(R::BotR, Params::none(), vec![seq(d.clone(), gr.clone())]),
            Formula::And(a, b) | Formula::With(a, b) => {
                let rules: &[RuleId] = if matches!(f, Formula::And(..)) { &[R::AndR] } else { &[R::WithR, R::WithRWhy] };
                for &r in rules {
                    let mut p = one(a);
                    p.extend(one(b));
                    push(r, Params::none(), p);
                }
            }
            Formula::Or(a, b) | Formula::Plus(a, b) => {
                let rules: &[RuleId] = if matches!(f, Formula::Or(..)) { &[R::OrR, R::OrRWhy] } else { &[R::PlusR] };
                for &r in rules {
                    for (k, c) in [(1u8, a), (2, b)] {
                        push(r, Params::branch(k, f.clone()), one(c));
                    }
                }
            }
            Formula::CImp(a, b) | Formula::IImp(a, b) | Formula::UImp(a, b) | Formula::LImp(a, b) => {
                let rules: &[RuleId] = match f {
                    Formula::CImp(..) => &[R::CImpR],
                    Formula::IImp(..) => &[R::IImpR, R::IImpRWhy],
                    Formula::UImp(..) => &[R::UImpR],
                    _ => &[R::ClImpRBang],
                };
                for &r in rules {
                    push(r, Params::none(), vec![seq(with_last(d, &[(**a).clone()]), with_first(&[(**b).clone()], &gr))]);
                }
            }
            Formula::Tensor(a, b) if self.allowed(R::TensorR) => {
                for (d1, d2) in splits(d) {
                    for (g1, g2) in splits(&gr) {
                        push(
                            R::TensorR,
                            Params::none(),
                            vec![seq(d1.clone(), with_first(&[(**a).clone()], &g1)), seq(d2.clone(), with_first(&[(**b).clone()], &g2))],
                        );
                    }
                }
            }
            Formula::Par(a, b) => push(R::ParR, Params::none(), vec![seq(d.clone(), with_first(&[(**a).clone(), (**b).clone()], &gr))]),
            Formula::Neg(a) => push(R::NegR, Params::none(), vec![seq(with_last(d, &[(**a).clone()]), gr.clone())]),
            _ => {}
        }
        if self.allowed(R::LDualR) {
            push(R::LDualR, Params::none(), vec![seq(with_last(d, &[dual_unchecked(f)]), gr.clone())]);
        }
        if used.get(f).copied().unwrap_or(0) < self.budget {
            if let Some(r) = self.calc.contract_right(f) {
                out.push(Cand {
                    rule: r,
                    params: Params::none(),
                    prems: vec![seq(d.clone(), with_first(&[f.clone(), f.clone()], &gr))],
                    contracted: Some(f.clone()),
                });
            }
        }
    }
}
