//! Seeded random formulas and proofs.
//!
//! Proofs are grown forward: a random rule is applied to random
//! subderivations and kept only if the rule engine accepts it. Cut partners
//! are built from η-expanded identities so that cuts meet their formula's
//! left and right introduction rules.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculi::{CalculusId, Node};
use crate::proof::{Params, Sequent, Side};
use crate::rules::RuleId;
use crate::search::logical_depth;
use crate::structural::{adjust, to_principal};
use crate::syntax::{Bin, Formula, LogicId, Un};

pub const VARS: [&str; 3] = ["X", "Y", "Z"];

pub struct Gen {
    pub calc: CalculusId,
    pub rng: ChaCha8Rng,
    /// Largest size of a formula introduced out of thin air.
    pub formula_size: usize,
    /// Cuts still allowed in the proof being generated.
    pub cut_budget: usize,
    vars: Vec<Formula>,
}

impl Gen {
    pub fn new(calc: CalculusId, seed: u64) -> Gen {
        Gen {
            calc,
            rng: ChaCha8Rng::seed_from_u64(seed),
            formula_size: 3,
            cut_budget: 0,
            vars: VARS.iter().map(|v| Formula::var(v)).collect(),
        }
    }

    pub fn with_vars(mut self, n: usize) -> Gen {
        self.vars.truncate(n.max(1));
        self
    }

    // -------------------------------------------------------- formulas

    fn atom(&mut self, logic: LogicId) -> Formula {
        if self.rng.gen_bool(0.8) {
            return self.vars.choose(&mut self.rng).unwrap().clone();
        }
        let units: Vec<Formula> = [Formula::Top, Formula::Bot, Formula::One, Formula::Zero, Formula::Tt, Formula::Ff]
            .into_iter()
            .filter(|u| u.in_language(logic))
            .collect();
        match units.choose(&mut self.rng) {
            Some(u) => u.clone(),
            None => self.vars[0].clone(),
        }
    }

    /// A random formula of `logic` with at most `size` nodes.
    pub fn formula(&mut self, logic: LogicId, size: usize) -> Formula {
        if size <= 1 || self.rng.gen_bool(0.25) {
            return self.atom(logic);
        }
        const UN: [Un; 3] = [Un::Bang, Un::Why, Un::Neg];
        const BIN: [Bin; 10] = [
            Bin::Tensor, Bin::Par, Bin::With, Bin::Plus, Bin::And, Bin::Or, Bin::IImp, Bin::CImp, Bin::UImp, Bin::LImp,
        ];
        for _ in 0..16 {
            let f = if self.rng.gen_bool(0.3) {
                let op = *UN.choose(&mut self.rng).unwrap();
                Formula::un(op, self.formula(logic, size - 1))
            } else if size >= 3 {
                let op = *BIN.choose(&mut self.rng).unwrap();
                let k = self.rng.gen_range(1..size - 1);
                let a = self.formula(logic, k);
                let b = self.formula(logic, size - 1 - k);
                // ILLᵉ spells ⤳ as ¬A ⅋ B
                if op == Bin::UImp && logic == LogicId::Ille {
                    Formula::lolli_e(a, b)
                } else {
                    Formula::bin(op, a, b)
                }
            } else {
                continue;
            };
            if f.in_language(logic) {
                return f;
            }
        }
        self.atom(logic)
    }

    fn small_formula(&mut self) -> Formula {
        let n = self.rng.gen_range(1..=self.formula_size);
        self.formula(self.calc.logic(), n)
    }

    // -------------------------------------------------------- proofs

    fn mk(&self, r: RuleId, p: Params, prem: Vec<Node>) -> Option<Node> {
        Node::mk(self.calc, r, p, prem).ok()
    }

    fn leaf(&mut self) -> Node {
        let c = self.calc;
        let mut opts = vec![RuleId::Id, RuleId::Id, RuleId::Id];
        opts.extend([RuleId::TopR, RuleId::TtR, RuleId::FfL, RuleId::BotL, RuleId::OneR, RuleId::ZeroL].into_iter().filter(|&r| c.allows(r)));
        let r = *opts.choose(&mut self.rng).unwrap();
        let params = match r {
            RuleId::Id => {
                let f = if self.rng.gen_bool(0.8) { self.atom(c.logic()) } else { self.small_formula() };
                return eta(c, &f);
            }
            RuleId::OneR | RuleId::ZeroL => Params::ctx(vec![], vec![]),
            _ => Params::none(),
        };
        self.mk(r, params, vec![]).unwrap_or_else(|| eta(c, &self.vars[0]))
    }

    /// Random exchanges bringing a random formula to each principal position.
    fn shuffle(&mut self, n: Node) -> Node {
        let mut n = n;
        for side in [Side::L, Side::R] {
            let len = n.seq.side(side).len();
            if len > 1 && self.rng.gen_bool(0.5) {
                let k = self.rng.gen_range(0..len);
                if let Ok(m) = to_principal(self.calc, n.clone(), side, k) {
                    n = m;
                }
            }
        }
        n
    }

    fn unary_params(&mut self, r: RuleId, p: &Node) -> Option<Params> {
        use RuleId as X;
        let logic = self.calc.logic();
        Some(match r {
            X::Xl | X::Xr => {
                let len = p.seq.side(if r == X::Xl { Side::L } else { Side::R }).len();
                if len < 2 {
                    return None;
                }
                Params::at(self.rng.gen_range(0..len - 1))
            }
            X::Wl | X::Wr => Params::intro(self.small_formula()),
            X::BangW => Params::intro(Formula::bang(self.small_formula())),
            X::WhyW => Params::intro(Formula::why(self.small_formula())),
            X::AndL | X::AndLBang | X::WithL | X::OrR | X::OrRWhy | X::PlusR => {
                let (op, a) = match r {
                    X::AndL | X::AndLBang => (Bin::And, p.seq.left.last()?),
                    X::WithL => (Bin::With, p.seq.left.last()?),
                    X::PlusR => (Bin::Plus, p.seq.right.first()?),
                    _ => (Bin::Or, p.seq.right.first()?),
                };
                let other = self.small_formula();
                let i = self.rng.gen_range(1..=2u8);
                let f = if i == 1 { Formula::bin(op, a.clone(), other) } else { Formula::bin(op, other, a.clone()) };
                if !f.in_language(logic) {
                    return None;
                }
                Params::branch(i, f)
            }
            _ => Params::none(),
        })
    }

    fn try_unary(&mut self, p: &Node) -> Option<Node> {
        let rules: Vec<RuleId> = self
            .calc
            .rules()
            .into_iter()
            .filter(|r| r.arity() == 1 && !r.is_internal() && !r.is_cut())
            .collect();
        for _ in 0..8 {
            let r = *rules.choose(&mut self.rng)?;
            let q = self.shuffle(p.clone());
            if matches!(r, RuleId::Cl | RuleId::Cr | RuleId::BangC | RuleId::WhyC) {
                if let Some(n) = self.contract(&q, r) {
                    return Some(n);
                }
                continue;
            }
            let Some(params) = self.unary_params(r, &q) else { continue };
            if let Some(n) = self.mk(r, params, vec![q]) {
                return Some(n);
            }
        }
        None
    }

    fn contract(&mut self, p: &Node, r: RuleId) -> Option<Node> {
        let side = if matches!(r, RuleId::Cl | RuleId::BangC) { Side::L } else { Side::R };
        let v = p.seq.side(side);
        let k = (0..v.len()).find(|&k| v[k + 1..].contains(&v[k]))?;
        let mut target = p.seq.clone();
        match side {
            Side::L => target.left.remove(k),
            Side::R => target.right.remove(k),
        };
        adjust(self.calc, p.clone(), &target).ok()
    }

    fn try_binary(&mut self, p: Node, q: Node) -> Option<Node> {
        use RuleId as X;
        let rules: Vec<RuleId> = self
            .calc
            .rules()
            .into_iter()
            .filter(|r| r.arity() == 2 && !r.is_internal() && !r.is_cut())
            .collect();
        for _ in 0..6 {
            let r = *rules.choose(&mut self.rng)?;
            let (p, q) = (self.shuffle(p.clone()), self.shuffle(q.clone()));
            let prem = match r {
                X::AndR | X::WithR | X::WithRWhy | X::OrL | X::PlusL | X::PlusLBang | X::CImpL | X::IImpL => {
                    match self.align(r, &p, &q) {
                        Some(v) => v,
                        // without weakening, an additive rule gets the same premise twice
                        None => vec![p.clone(), p.clone()],
                    }
                }
                _ => vec![p, q],
            };
            if let Some(n) = self.mk(r, Params::none(), prem) {
                return Some(n);
            }
        }
        None
    }

    /// Weakens both premises of an additive rule to a common context.
    fn align(&self, r: RuleId, p: &Node, q: &Node) -> Option<Vec<Node>> {
        use RuleId as X;
        if !self.calc.allows(X::Wl) {
            return None;
        }
        let (ps, qs) = (&p.seq, &q.seq);
        let (pa, pl, pr, qa, ql, qr);
        let mut tp;
        let mut tq;
        match r {
            X::AndR | X::WithR | X::WithRWhy => {
                (pa, qa) = (ps.right.first()?, qs.right.first()?);
                (pl, ql, pr, qr) = (&ps.left[..], &qs.left[..], &ps.right[1..], &qs.right[1..]);
                let (l, rr) = (union(pl, ql), union(pr, qr));
                tp = Sequent::new(l.clone(), rr.clone());
                tp.right.insert(0, pa.clone());
                tq = Sequent::new(l, rr);
                tq.right.insert(0, qa.clone());
            }
            X::OrL | X::PlusL | X::PlusLBang => {
                (pa, qa) = (ps.left.last()?, qs.left.last()?);
                (pl, ql) = (&ps.left[..ps.left.len() - 1], &qs.left[..qs.left.len() - 1]);
                (pr, qr) = (&ps.right[..], &qs.right[..]);
                let (l, rr) = (union(pl, ql), union(pr, qr));
                tp = Sequent::new(l.clone(), rr.clone());
                tp.left.push(pa.clone());
                tq = Sequent::new(l, rr);
                tq.left.push(qa.clone());
            }
            X::CImpL | X::IImpL => {
                let a = ps.right.first()?;
                let b = qs.left.last()?;
                let l = union(&ps.left, &qs.left[..qs.left.len() - 1]);
                let rr = union(&ps.right[1..], &qs.right);
                if r == X::IImpL && (ps.right.len() != 1 || qs.right.len() > 1) {
                    return None;
                }
                let mut pr_ = rr.clone();
                pr_.insert(0, a.clone());
                tp = Sequent::new(l.clone(), if r == X::IImpL { vec![a.clone()] } else { pr_ });
                let mut ql_ = l;
                ql_.push(b.clone());
                tq = Sequent::new(ql_, if r == X::IImpL { qs.right.clone() } else { rr });
            }
            _ => return None,
        }
        let p2 = adjust(self.calc, p.clone(), &tp).ok()?;
        let q2 = adjust(self.calc, q.clone(), &tq).ok()?;
        Some(vec![p2, q2])
    }

    fn cut_rule(&self) -> Option<RuleId> {
        [RuleId::Cut, RuleId::CutWhy, RuleId::CutBang].into_iter().find(|&r| self.calc.allows(r))
    }

    /// Grows `n` with random rules, keeping an occurrence of `keep` on `side`.
    fn grow(&mut self, mut n: Node, side: Side, keep: &Formula, steps: usize, d: usize) -> Node {
        for _ in 0..steps {
            let cand = if self.rng.gen_bool(0.75) {
                self.try_unary(&n)
            } else {
                let saved = self.cut_budget;
                self.cut_budget = 0;
                let q = self.proof(d.saturating_sub(2).min(2));
                self.cut_budget = saved;
                if self.rng.gen_bool(0.5) { self.try_binary(n.clone(), q) } else { self.try_binary(q, n.clone()) }
            };
            if let Some(m) = cand {
                if m.seq.side(side).contains(keep) && logical_depth(&m) <= d {
                    n = m;
                }
            }
        }
        n
    }

    fn cut(&mut self, d: usize) -> Option<Node> {
        let r = self.cut_rule()?;
        self.cut_budget -= 1;
        if r != RuleId::Cut {
            return self.side_cut(r, d);
        }
        let (p, q) = if self.rng.gen_bool(0.5) {
            let p = self.proof(d - 1);
            let k = self.rng.gen_range(0..p.seq.right.len().max(1));
            let b = p.seq.right.get(k)?.clone();
            let p = to_principal(self.calc, p, Side::R, k).ok()?;
            let steps = self.rng.gen_range(0..3);
            let q = self.grow(eta(self.calc, &b), Side::R, &b, 0, d - 1);
            let q = self.grow(q, Side::L, &b, steps, d - 1);
            let k = q.seq.left.iter().rposition(|f| *f == b)?;
            (p, to_principal(self.calc, q, Side::L, k).ok()?)
        } else {
            let q = self.proof(d - 1);
            let k = self.rng.gen_range(0..q.seq.left.len().max(1));
            let b = q.seq.left.get(k)?.clone();
            let q = to_principal(self.calc, q, Side::L, k).ok()?;
            let steps = self.rng.gen_range(0..3);
            let p = self.grow(eta(self.calc, &b), Side::R, &b, steps, d - 1);
            let k = p.seq.right.iter().position(|f| *f == b)?;
            (to_principal(self.calc, p, Side::R, k).ok()?, q)
        };
        self.mk(r, Params::none(), vec![p, q])
    }

    /// `Cut?` (INC) and `Cut!` (CLC): the partner of a random proof is grown
    /// from an identity on the marked cut formula.
    fn side_cut(&mut self, r: RuleId, d: usize) -> Option<Node> {
        let steps = self.rng.gen_range(0..3);
        let (p, q) = if r == RuleId::CutWhy {
            let q = self.proof(d - 1);
            if !q.seq.right.iter().all(Formula::is_why) {
                return None;
            }
            let k = self.rng.gen_range(0..q.seq.left.len().max(1));
            let b = q.seq.left.get(k)?.clone();
            let wb = Formula::why(b);
            let p = self.grow(eta(self.calc, &wb), Side::R, &wb, steps, d - 1);
            let j = p.seq.right.iter().position(|f| *f == wb)?;
            (to_principal(self.calc, p, Side::R, j).ok()?, to_principal(self.calc, q, Side::L, k).ok()?)
        } else {
            let p = self.proof(d - 1);
            if !p.seq.left.iter().all(Formula::is_bang) {
                return None;
            }
            let k = self.rng.gen_range(0..p.seq.right.len().max(1));
            let b = p.seq.right.get(k)?.clone();
            let bb = Formula::bang(b);
            let q = self.grow(eta(self.calc, &bb), Side::L, &bb, steps, d - 1);
            let j = q.seq.left.iter().rposition(|f| *f == bb)?;
            (to_principal(self.calc, p, Side::R, k).ok()?, to_principal(self.calc, q, Side::L, j).ok()?)
        };
        self.mk(r, Params::none(), vec![p, q])
    }

    /// A random derivation of logical depth at most `d`.
    pub fn proof(&mut self, d: usize) -> Node {
        if d == 0 || self.rng.gen_bool(0.15) {
            return self.leaf();
        }
        let roll = self.rng.gen_range(0..10);
        let n = if self.cut_budget > 0 && roll == 0 {
            self.cut(d)
        } else if roll < 6 {
            let p = self.proof(d - 1);
            self.try_unary(&p).or(Some(p))
        } else {
            let p = self.proof(d - 1);
            let q = self.proof(d - 1);
            self.try_binary(p.clone(), q).or(Some(p))
        };
        match n {
            Some(n) if logical_depth(&n) <= d => n,
            _ => self.leaf(),
        }
    }
}

fn union(a: &[Formula], b: &[Formula]) -> Vec<Formula> {
    let mut out = a.to_vec();
    let mut rest = a.to_vec();
    for f in b {
        if let Some(k) = rest.iter().position(|g| g == f) {
            rest.remove(k);
        } else {
            out.push(f.clone());
        }
    }
    out
}

/// The η-expanded identity `F ⊢ F`, introducing both occurrences by their
/// logical rules where the calculus has them; `Id F` otherwise.
pub fn eta(c: CalculusId, f: &Formula) -> Node {
    eta_opt(c, f).unwrap_or_else(|| Node::mk(c, RuleId::Id, Params::intro(f.clone()), vec![]).expect("Id is in every calculus"))
}

fn eta_opt(c: CalculusId, f: &Formula) -> Option<Node> {
    use Formula::*;
    use RuleId as X;
    let mk = |r: RuleId, p: Params, prem: Vec<Node>| Node::mk(c, r, p, prem).ok();
    let u = |r: RuleId, n: Node| Node::mk(c, r, Params::none(), vec![n]).ok();
    let e = |g: &Formula| eta(c, g);
    match f {
        Top => u(X::TopL, mk(X::TopR, Params::none(), vec![])?),
        Bot => u(X::BotR, mk(X::BotL, Params::none(), vec![])?),
        Tt => u(X::TtL, mk(X::TtR, Params::none(), vec![])?),
        Ff => u(X::FfR, mk(X::FfL, Params::none(), vec![])?),
        One => mk(X::OneR, Params::ctx(vec![One], vec![]), vec![]),
        Zero => mk(X::ZeroL, Params::ctx(vec![], vec![Zero]), vec![]),
        Tensor(a, b) => u(X::TensorL, mk(X::TensorR, Params::none(), vec![e(a), e(b)])?),
        Par(a, b) => u(X::ParR, mk(X::ParL, Params::none(), vec![e(a), e(b)])?),
        With(a, b) | And(a, b) => {
            let (l, r) = if matches!(f, With(..)) { (X::WithL, X::WithR) } else { (X::AndL, X::AndR) };
            let p1 = mk(l, Params::branch(1, f.clone()), vec![e(a)])?;
            let p2 = mk(l, Params::branch(2, f.clone()), vec![e(b)])?;
            mk(r, Params::none(), vec![p1, p2])
        }
        Plus(a, b) | Or(a, b) => {
            let (l, r) = if matches!(f, Plus(..)) { (X::PlusL, X::PlusR) } else { (X::OrL, X::OrR) };
            let p1 = mk(r, Params::branch(1, f.clone()), vec![e(a)])?;
            let p2 = mk(r, Params::branch(2, f.clone()), vec![e(b)])?;
            mk(l, Params::none(), vec![p1, p2])
        }
        Bang(a) => u(X::BangR, u(X::BangD, e(a))?).or_else(|| u(X::BangRBang, u(X::BangD, e(a))?)),
        Why(a) => u(X::WhyL, u(X::WhyD, e(a))?).or_else(|| u(X::WhyLWhy, u(X::WhyD, e(a))?)),
        Neg(a) => u(X::NegR, mk(X::Xl, Params::at(0), vec![u(X::NegL, e(a))?])?),
        CImp(a, b) => {
            let l = adjust(c, e(a), &Sequent::new(vec![(**a).clone()], vec![(**a).clone(), (**b).clone()])).ok()?;
            let r = adjust(c, e(b), &Sequent::new(vec![(**a).clone(), (**b).clone()], vec![(**b).clone()])).ok()?;
            let m = mk(X::CImpL, Params::none(), vec![l, r])?;
            u(X::CImpR, mk(X::Xl, Params::at(0), vec![m])?)
        }
        IImp(a, b) => {
            let l = e(a);
            let r = adjust(c, e(b), &Sequent::new(vec![(**a).clone(), (**b).clone()], vec![(**b).clone()])).ok()?;
            let m = mk(X::IImpL, Params::none(), vec![adjust(c, l, &Sequent::new(vec![(**a).clone()], vec![(**a).clone()])).ok()?, r])?;
            u(X::IImpR, mk(X::Xl, Params::at(0), vec![m])?)
        }
        UImp(a, b) => {
            let m = mk(X::UImpL, Params::none(), vec![e(a), e(b)])?;
            u(X::UImpR, mk(X::Xl, Params::at(0), vec![m])?)
        }
        _ => None,
    }
}

/// A random LK proof of logical depth at most `depth`, with up to two cuts.
pub fn random_lk_proof(seed: u64, depth: usize) -> Node {
    let mut g = Gen::new(CalculusId::Lk, seed);
    g.cut_budget = g.rng.gen_range(0..=2);
    g.proof(depth)
}

/// A random proof of `calc` (cut-free unless `cuts > 0`).
pub fn random_proof(calc: CalculusId, seed: u64, depth: usize, cuts: usize) -> Node {
    let mut g = Gen::new(calc, seed);
    g.cut_budget = cuts;
    g.proof(depth)
}

pub fn count_cuts(n: &Node) -> usize {
    let mut k = 0;
    n.walk(&mut Vec::new(), &mut |_, m| k += usize::from(m.rule.is_cut()));
    k
}

/// A random proof of `calc` containing between one and four cuts.
pub fn random_cut_proof(calc: CalculusId, seed: u64, depth: usize) -> Node {
    let mut g = Gen::new(calc, seed);
    g.formula_size = 2;
    loop {
        g.cut_budget = g.rng.gen_range(1..=4);
        let n = g.proof(depth);
        let k = count_cuts(&n);
        if (1..=4).contains(&k) {
            return n;
        }
        if k == 0 {
            if let Some(a) = n.seq.left.last().cloned() {
                if let Ok(m) = Node::mk(calc, RuleId::Cut, Params::none(), vec![eta(calc, &a), n]) {
                    return m;
                }
            }
        }
    }
}

impl Gen {
    /// A cut whose formula is contracted on one side: `!C` against `!R`
    /// territory, or `?C` against `?L`, each grown a little.
    fn contraction_cut(&mut self, a: Formula, d: usize) -> Option<Node> {
        let c = self.calc;
        let steps = self.rng.gen_range(0..3);
        let (p, q, b) = if self.rng.gen_bool(0.5) {
            let b = Formula::bang(a);
            let e = eta(c, &b);
            let two = self.mk(RuleId::TensorR, Params::none(), vec![e.clone(), e])?;
            let q = self.mk(RuleId::BangC, Params::none(), vec![two])?;
            let q = self.grow(q, Side::L, &b, steps, d);
            let p = self.grow(eta(c, &b), Side::R, &b, 2 - steps.min(2), d);
            (p, q, b)
        } else {
            let b = Formula::why(a);
            let e = eta(c, &b);
            let two = self.mk(RuleId::ParL, Params::none(), vec![e.clone(), e])?;
            let p = self.mk(RuleId::WhyC, Params::none(), vec![two])?;
            let p = self.grow(p, Side::R, &b, steps, d);
            let q = self.grow(eta(c, &b), Side::L, &b, 2 - steps.min(2), d);
            (p, q, b)
        };
        let k = p.seq.right.iter().position(|f| *f == b)?;
        let j = q.seq.left.iter().rposition(|f| *f == b)?;
        let p = to_principal(c, p, Side::R, k).ok()?;
        let q = to_principal(c, q, Side::L, j).ok()?;
        self.mk(RuleId::Cut, Params::none(), vec![p, q])
    }

    /// `!R` against `!?L` on `!?A`, with pure and impure variants of both
    /// premises (weakened, contracted or untouched `?A` and `!A`).
    fn rho_cut(&mut self, a: Formula) -> Option<Node> {
        let c = self.calc;
        let u = |g: &Gen, r: RuleId, n: Node| g.mk(r, Params::none(), vec![n]);
        let w = |g: &Gen, r: RuleId, f: Formula, n: Node| g.mk(r, Params::intro(f), vec![n]);
        let wa = Formula::why(a.clone());
        let ba = Formula::bang(a.clone());
        let y = self.vars.choose(&mut self.rng).unwrap().clone();
        let idy = Node::mk(c, RuleId::Id, Params::intro(y.clone()), vec![]).ok()?;
        let side = u(self, RuleId::WhyD, u(self, RuleId::BangD, idy)?)?; // !Y ⊢ ?Y
        let base = u(self, RuleId::BangD, eta(c, &wa))?; // !?A ⊢ ?A
        let p0 = match self.rng.gen_range(0..4) {
            0 => base,
            1 => u(self, RuleId::WhyC, w(self, RuleId::WhyW, wa.clone(), base)?)?,
            2 => w(self, RuleId::BangW, Formula::bang(y), base)?,
            _ => w(self, RuleId::WhyW, wa, side.clone())?,
        };
        let base = u(self, RuleId::WhyD, u(self, RuleId::BangR, u(self, RuleId::BangD, eta(c, &a))?)?)?; // !A ⊢ ?!A
        let q0 = match self.rng.gen_range(0..3) {
            0 => base,
            1 => u(self, RuleId::BangC, w(self, RuleId::BangW, ba.clone(), base)?)?,
            _ => w(self, RuleId::BangW, ba, side)?,
        };
        let p = u(self, RuleId::BangR, p0)?;
        let q = u(self, RuleId::BangWhyL, q0)?;
        self.mk(RuleId::Cut, Params::none(), vec![p, q])
    }
}

/// A cut-bearing proof of `calc` whose cut formula is contracted above the
/// cut, exercising multicuts with n ≥ 2.
pub fn random_contraction_cut(calc: CalculusId, seed: u64, depth: usize) -> Node {
    let mut g = Gen::new(calc, seed);
    g.formula_size = 2;
    loop {
        let a = g.small_formula();
        if let Some(n) = g.contraction_cut(a, depth) {
            return n;
        }
    }
}

/// An ILC_ι proof ending in a cut of `!R` against `!?L`; tractable or not.
pub fn random_rho_cut(seed: u64) -> Node {
    let mut g = Gen::new(CalculusId::IlcIota, seed);
    g.formula_size = 2;
    loop {
        let a = g.small_formula();
        if let Some(n) = g.rho_cut(a) {
            return n;
        }
    }
}
