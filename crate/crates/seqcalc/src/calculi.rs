//! The calculi as rule sets with side conditions, the per-rule conclusion
//! function, annotated derivations and the checker.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::proof::{Params, Proof, Sequent};
use crate::rules::RuleId;
use crate::syntax::{dual_unchecked, offending_node, Bin, Formula, LogicId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CalculusId {
    Lk,
    Lj,
    Llk,
    Llj,
    Ilc,
    IlcIota,
    IlcDelta,
    IlcRho,
    Inc,
    IncRho,
    Clc,
    ClcRho,
    LkRho,
}

use RuleId as R;

const STRUCT_LK: &[RuleId] = &[R::Xl, R::Xr, R::Wl, R::Wr, R::Cl, R::Cr, R::Id, R::Cut];

const LK_LOGIC: &[RuleId] = &[
    R::TtL, R::TtR, R::FfL, R::FfR, R::AndL, R::AndR, R::OrL, R::OrR, R::CImpL, R::CImpR,
];

const LJ_RULES: &[RuleId] = &[
    R::Xl, R::Wl, R::Cl, R::Id, R::Cut, R::TopL, R::TopR, R::FfL, R::FfR, R::WithL, R::WithR,
    R::OrL, R::OrR, R::IImpL, R::IImpR,
];

const LL_COMMON: &[RuleId] = &[
    R::Xl, R::Xr, R::BangW, R::WhyW, R::BangC, R::WhyC, R::BangD, R::WhyD, R::WhyL, R::BangR,
    R::Id, R::Cut, R::OneR, R::ZeroL, R::TopL, R::TopR, R::BotL, R::BotR, R::TensorL,
    R::TensorR, R::ParL, R::ParR, R::WithL, R::WithR, R::PlusL, R::PlusR,
];

const LLJ_RULES: &[RuleId] = &[
    R::Xl, R::Id, R::Cut, R::TopL, R::TopR, R::TensorL, R::TensorR, R::WithL, R::WithR,
    R::PlusL, R::PlusR, R::BangW, R::BangC, R::BangD, R::BangR, R::UImpL, R::UImpR,
];

const INC_RULES: &[RuleId] = &[
    R::Xl, R::Xr, R::Wl, R::WhyW, R::Cl, R::WhyC, R::WhyD, R::WhyLWhy, R::Id, R::CutWhy,
    R::TopL, R::TopR, R::FfL, R::FfRWhy, R::WithL, R::WithRWhy, R::OrL, R::OrRWhy,
    R::IImpLWhy, R::IImpRWhy,
];

const CLC_RULES: &[RuleId] = &[
    R::Xl, R::Xr, R::BangW, R::Wr, R::BangC, R::Cr, R::BangD, R::BangRBang, R::Id, R::CutBang,
    R::TtLBang, R::TtR, R::BotL, R::BotR, R::AndLBang, R::AndR, R::PlusLBang, R::PlusR,
    R::ClImpLBang, R::ClImpRBang,
];

impl CalculusId {
    pub const ALL: [CalculusId; 13] = [
        CalculusId::Lk,
        CalculusId::Lj,
        CalculusId::Llk,
        CalculusId::Llj,
        CalculusId::Ilc,
        CalculusId::IlcIota,
        CalculusId::IlcDelta,
        CalculusId::IlcRho,
        CalculusId::Inc,
        CalculusId::IncRho,
        CalculusId::Clc,
        CalculusId::ClcRho,
        CalculusId::LkRho,
    ];

    pub fn name(self) -> &'static str {
        use CalculusId::*;
        match self {
            Lk => "lk",
            Lj => "lj",
            Llk => "llk",
            Llj => "llj",
            Ilc => "ilc",
            IlcIota => "ilc-iota",
            IlcDelta => "ilc-delta",
            IlcRho => "ilc-rho",
            Inc => "inc",
            IncRho => "inc-rho",
            Clc => "clc",
            ClcRho => "clc-rho",
            LkRho => "lk-rho",
        }
    }

    pub fn logic(self) -> LogicId {
        use CalculusId::*;
        match self {
            Lk | LkRho => LogicId::Cl,
            Lj => LogicId::Il,
            Llk => LogicId::Cll,
            Llj => LogicId::Ill,
            Ilc | IlcIota | IlcDelta | IlcRho => LogicId::Ille,
            Inc | IncRho => LogicId::Ile,
            Clc | ClcRho => LogicId::CllMinus,
        }
    }

    /// Unrestricted parent of a ρ-calculus (itself otherwise).
    pub fn parent(self) -> CalculusId {
        use CalculusId::*;
        match self {
            IlcRho => IlcIota,
            IncRho => Inc,
            ClcRho => Clc,
            LkRho => Lk,
            c => c,
        }
    }

    pub fn is_rho(self) -> bool {
        self.parent() != self
    }

    /// Calculi whose sequents have at most one succedent formula.
    pub fn intuitionistic(self) -> bool {
        matches!(self, CalculusId::Lj | CalculusId::Llj)
    }

    pub fn is_ilc_family(self) -> bool {
        matches!(self, CalculusId::Ilc | CalculusId::IlcIota | CalculusId::IlcDelta | CalculusId::IlcRho)
    }

    pub fn allows(self, r: RuleId) -> bool {
        use CalculusId::*;
        match self {
            Lk | LkRho => STRUCT_LK.contains(&r) || LK_LOGIC.contains(&r),
            Lj => LJ_RULES.contains(&r),
            Llk => LL_COMMON.contains(&r) || matches!(r, R::LDualL | R::LDualR),
            Llj => LLJ_RULES.contains(&r),
            Ilc => LL_COMMON.contains(&r) || matches!(r, R::NegL | R::NegR),
            IlcIota => Ilc.allows(r) || matches!(r, R::BangWhyL | R::WhyBangR),
            IlcDelta => Ilc.allows(r) || r == R::Dist,
            // ?!R is excluded by the tractability predicate, not the rule set
            IlcRho => IlcIota.allows(r),
            Inc | IncRho => INC_RULES.contains(&r),
            Clc | ClcRho => CLC_RULES.contains(&r),
        }
    }

    pub fn rules(self) -> Vec<RuleId> {
        RuleId::ALL.iter().copied().filter(|&r| self.allows(r)).collect()
    }

    /// Left weakening rule applicable to `f`, if any.
    pub fn weaken_left(self, f: &Formula) -> Option<RuleId> {
        if self.allows(R::Wl) {
            Some(R::Wl)
        } else if f.is_bang() && self.allows(R::BangW) {
            Some(R::BangW)
        } else {
            None
        }
    }
    pub fn weaken_right(self, f: &Formula) -> Option<RuleId> {
        if self.allows(R::Wr) {
            Some(R::Wr)
        } else if f.is_why() && self.allows(R::WhyW) {
            Some(R::WhyW)
        } else {
            None
        }
    }
    pub fn contract_left(self, f: &Formula) -> Option<RuleId> {
        if self.allows(R::Cl) {
            Some(R::Cl)
        } else if f.is_bang() && self.allows(R::BangC) {
            Some(R::BangC)
        } else {
            None
        }
    }
    pub fn contract_right(self, f: &Formula) -> Option<RuleId> {
        if self.allows(R::Cr) {
            Some(R::Cr)
        } else if f.is_why() && self.allows(R::WhyC) {
            Some(R::WhyC)
        } else {
            None
        }
    }
}

impl fmt::Display for CalculusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CalculusId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.to_ascii_lowercase().replace('_', "-");
        CalculusId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown calculus `{s}`"))
    }
}

// ------------------------------------------------------------ rule instances

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrKind {
    /// Wrong arity or missing/invalid parameter.
    Param,
    /// Premise does not match the rule schema.
    Shape,
    /// Context shape (`!Δ`, `?Γ`, at most one succedent formula) violated.
    Side,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{msg}")]
pub struct RuleError {
    pub kind: ErrKind,
    pub msg: String,
}

fn shape<T>(msg: impl Into<String>) -> Result<T, RuleError> {
    Err(RuleError { kind: ErrKind::Shape, msg: msg.into() })
}
fn side<T>(msg: impl Into<String>) -> Result<T, RuleError> {
    Err(RuleError { kind: ErrKind::Side, msg: msg.into() })
}
fn param<T>(msg: impl Into<String>) -> Result<T, RuleError> {
    Err(RuleError { kind: ErrKind::Param, msg: msg.into() })
}

fn all_bang(v: &[Formula]) -> bool {
    v.iter().all(Formula::is_bang)
}
fn all_why(v: &[Formula]) -> bool {
    v.iter().all(Formula::is_why)
}
fn need_bang(v: &[Formula], what: &str) -> Result<(), RuleError> {
    if all_bang(v) {
        Ok(())
    } else {
        side(format!("{what} context not of shape !Δ"))
    }
}
fn need_why(v: &[Formula], what: &str) -> Result<(), RuleError> {
    if all_why(v) {
        Ok(())
    } else {
        side(format!("{what} context not of shape ?Γ"))
    }
}

fn split_last(v: &[Formula]) -> Result<(&Formula, &[Formula]), RuleError> {
    match v.split_last() {
        Some((a, rest)) => Ok((a, rest)),
        None => shape("empty antecedent"),
    }
}
fn split_first(v: &[Formula]) -> Result<(&Formula, &[Formula]), RuleError> {
    match v.split_first() {
        Some((a, rest)) => Ok((a, rest)),
        None => shape("empty succedent"),
    }
}

fn cat(a: &[Formula], b: &[Formula]) -> Vec<Formula> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}
fn push(a: &[Formula], f: Formula) -> Vec<Formula> {
    let mut v = a.to_vec();
    v.push(f);
    v
}
fn cons(f: Formula, a: &[Formula]) -> Vec<Formula> {
    let mut v = vec![f];
    v.extend_from_slice(a);
    v
}
fn repeat(a: &[Formula], n: usize) -> Vec<Formula> {
    let mut v = Vec::with_capacity(a.len() * n);
    for _ in 0..n {
        v.extend_from_slice(a);
    }
    v
}
fn remove_at(a: &[Formula], idx: &[usize]) -> Vec<Formula> {
    a.iter().enumerate().filter(|(k, _)| !idx.contains(k)).map(|(_, f)| f.clone()).collect()
}

fn intro(p: &Params) -> Result<&Formula, RuleError> {
    p.intro.as_ref().map_or_else(|| param("missing :intro"), Ok)
}
fn branch(p: &Params) -> Result<usize, RuleError> {
    match p.i {
        Some(1) => Ok(0),
        Some(2) => Ok(1),
        _ => param("missing or invalid :i"),
    }
}
fn at(p: &Params) -> Result<usize, RuleError> {
    p.at.map_or_else(|| param("missing :at"), Ok)
}
fn occ(p: &Params) -> Result<&Vec<usize>, RuleError> {
    p.occ.as_ref().map_or_else(|| param("missing :occ"), Ok)
}
fn valid_occ(v: &[Formula], o: &[usize], f: &Formula) -> Result<(), RuleError> {
    for (k, &i) in o.iter().enumerate() {
        if k > 0 && o[k - 1] >= i {
            return param("occurrence list must be strictly increasing");
        }
        if v.get(i) != Some(f) {
            return shape(format!("occurrence {i} is not the cut formula {f}"));
        }
    }
    Ok(())
}

/// Component `i` of the principal formula's binary node, checked against `op`.
fn component(f: &Formula, op: Bin, i: usize) -> Result<(&Formula, &Formula, &Formula), RuleError> {
    match f.as_bin() {
        Some((o, a, b)) if o == op => Ok(([a, b][i], a, b)),
        _ => param(format!(":intro {f} is not a {op:?} formula")),
    }
}

fn bin_of(op: Bin, a: &Formula, b: &Formula) -> Formula {
    Formula::bin(op, a.clone(), b.clone())
}

/// Conclusion of one rule instance. Calculus-specific context conditions are
/// applied for `calc`; rule membership is not checked here.
pub fn infer(calc: CalculusId, rule: RuleId, p: &Params, prem: &[&Sequent]) -> Result<Sequent, RuleError> {
    if prem.len() != rule.arity() {
        return param(format!("{} expects {} premise(s), got {}", rule.name(), rule.arity(), prem.len()));
    }
    let s = |l: Vec<Formula>, r: Vec<Formula>| Ok(Sequent::new(l, r));
    let p0 = prem.first().copied();
    let p1 = prem.get(1).copied();
    match rule {
        R::Xl | R::Xr => {
            let q = p0.unwrap();
            let k = at(p)?;
            let mut q = q.clone();
            let v = if rule == R::Xl { &mut q.left } else { &mut q.right };
            if k + 1 >= v.len() {
                return param(format!("exchange position {k} out of range"));
            }
            v.swap(k, k + 1);
            Ok(q)
        }
        R::Wl | R::BangW => {
            let q = p0.unwrap();
            let a = intro(p)?;
            if rule == R::BangW && !a.is_bang() {
                return param("!W introduces a !-formula");
            }
            s(push(&q.left, a.clone()), q.right.clone())
        }
        R::Wr | R::WhyW => {
            let q = p0.unwrap();
            let a = intro(p)?;
            if rule == R::WhyW && !a.is_why() {
                return param("?W introduces a ?-formula");
            }
            s(q.left.clone(), cons(a.clone(), &q.right))
        }
        R::Cl | R::BangC => {
            let q = p0.unwrap();
            let n = q.left.len();
            if n < 2 || q.left[n - 1] != q.left[n - 2] {
                return shape("contraction needs two equal formulas at the end of the antecedent");
            }
            if rule == R::BangC && !q.left[n - 1].is_bang() {
                return shape("!C contracts a !-formula");
            }
            s(q.left[..n - 1].to_vec(), q.right.clone())
        }
        R::Cr | R::WhyC => {
            let q = p0.unwrap();
            if q.right.len() < 2 || q.right[0] != q.right[1] {
                return shape("contraction needs two equal formulas at the front of the succedent");
            }
            if rule == R::WhyC && !q.right[0].is_why() {
                return shape("?C contracts a ?-formula");
            }
            s(q.left.clone(), q.right[1..].to_vec())
        }
        R::BangD => {
            let q = p0.unwrap();
            let (a, d) = split_last(&q.left)?;
            if matches!(calc, CalculusId::Clc | CalculusId::ClcRho) {
                need_bang(d, "left")?;
            }
            s(push(d, Formula::bang(a.clone())), q.right.clone())
        }
        R::WhyD => {
            let q = p0.unwrap();
            let (b, g) = split_first(&q.right)?;
            s(q.left.clone(), cons(Formula::why(b.clone()), g))
        }
        R::WhyL | R::WhyLWhy => {
            let q = p0.unwrap();
            let (a, d) = split_last(&q.left)?;
            if rule == R::WhyL {
                need_bang(d, "left")?;
            }
            need_why(&q.right, "right")?;
            s(push(d, Formula::why(a.clone())), q.right.clone())
        }
        R::BangR | R::BangRBang => {
            let q = p0.unwrap();
            let (b, g) = split_first(&q.right)?;
            need_bang(&q.left, "left")?;
            if rule == R::BangR {
                need_why(g, "right")?;
            }
            s(q.left.clone(), cons(Formula::bang(b.clone()), g))
        }
        R::BangWhyL => {
            let q = p0.unwrap();
            let (a, d) = split_last(&q.left)?;
            let Some(a0) = a.unbang() else { return shape("!?L needs !A at the end of the antecedent") };
            need_bang(d, "left")?;
            need_why(&q.right, "right")?;
            s(push(d, Formula::bang(Formula::why(a0.clone()))), q.right.clone())
        }
        R::WhyBangR => {
            let q = p0.unwrap();
            let (b, g) = split_first(&q.right)?;
            let Some(b0) = b.unwhy() else { return shape("?!R needs ?B at the front of the succedent") };
            need_bang(&q.left, "left")?;
            need_why(g, "right")?;
            s(q.left.clone(), cons(Formula::why(Formula::bang(b0.clone())), g))
        }
        R::Id => {
            let a = intro(p)?;
            s(vec![a.clone()], vec![a.clone()])
        }
        R::Dist => {
            let a = intro(p)?;
            s(vec![Formula::bang(Formula::why(a.clone()))], vec![Formula::why(Formula::bang(a.clone()))])
        }
        R::Cut => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (b, g) = split_first(&l.right)?;
            let (b2, d2) = split_last(&r.left)?;
            if b != b2 {
                return shape(format!("cut formulas differ: {b} vs {b2}"));
            }
            s(cat(&l.left, d2), cat(g, &r.right))
        }
        R::CutWhy => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (b, g) = split_first(&l.right)?;
            let (b2, d2) = split_last(&r.left)?;
            if b.unwhy() != Some(b2) {
                return shape(format!("Cut? needs ?B / B, got {b} / {b2}"));
            }
            need_why(&l.right, "left premise's right")?;
            need_why(&r.right, "right premise's right")?;
            s(cat(&l.left, d2), cat(g, &r.right))
        }
        R::CutBang => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (b, g) = split_first(&l.right)?;
            let (b2, d2) = split_last(&r.left)?;
            if b2.unbang() != Some(b) {
                return shape(format!("Cut! needs B / !B, got {b} / {b2}"));
            }
            need_bang(&l.left, "left premise's left")?;
            need_bang(&r.left, "right premise's left")?;
            s(cat(&l.left, d2), cat(g, &r.right))
        }
        R::TtL | R::TtLBang | R::TopL => {
            let q = p0.unwrap();
            if rule == R::TtLBang {
                need_bang(&q.left, "left")?;
            }
            let c = if rule == R::TopL { Formula::Top } else { Formula::Tt };
            s(push(&q.left, c), q.right.clone())
        }
        R::TtR => s(vec![], vec![Formula::Tt]),
        R::TopR => s(vec![], vec![Formula::Top]),
        R::FfL => s(vec![Formula::Ff], vec![]),
        R::BotL => s(vec![Formula::Bot], vec![]),
        R::FfR | R::FfRWhy | R::BotR => {
            let q = p0.unwrap();
            if rule == R::FfRWhy {
                need_why(&q.right, "right")?;
            }
            let c = if rule == R::BotR { Formula::Bot } else { Formula::Ff };
            s(q.left.clone(), cons(c, &q.right))
        }
        R::OneR | R::ZeroL => {
            let (Some(l), Some(r)) = (&p.left, &p.right) else { return param("1R/0L need :left and :right") };
            if rule == R::OneR {
                s(l.clone(), cons(Formula::One, r))
            } else {
                s(push(l, Formula::Zero), r.clone())
            }
        }
        R::AndL | R::AndLBang | R::WithL => {
            let q = p0.unwrap();
            let op = if rule == R::WithL { Bin::With } else { Bin::And };
            let f = intro(p)?;
            let (ai, _, _) = component(f, op, branch(p)?)?;
            let (a, d) = split_last(&q.left)?;
            if a != ai {
                return shape(format!("premise formula {a} is not component of {f}"));
            }
            if rule == R::AndLBang {
                need_bang(d, "left")?;
            }
            s(push(d, f.clone()), q.right.clone())
        }
        R::OrR | R::OrRWhy | R::PlusR => {
            let q = p0.unwrap();
            let op = if rule == R::PlusR { Bin::Plus } else { Bin::Or };
            let f = intro(p)?;
            let (bi, _, _) = component(f, op, branch(p)?)?;
            let (b, g) = split_first(&q.right)?;
            if b != bi {
                return shape(format!("premise formula {b} is not component of {f}"));
            }
            if rule == R::OrRWhy {
                need_why(g, "right")?;
            }
            s(q.left.clone(), cons(f.clone(), g))
        }
        R::AndR | R::WithR | R::WithRWhy => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (a, g1) = split_first(&l.right)?;
            let (b, g2) = split_first(&r.right)?;
            if l.left != r.left || g1 != g2 {
                return shape("additive rule needs identical contexts");
            }
            if rule == R::WithRWhy {
                need_why(g1, "right")?;
            }
            let op = if rule == R::AndR { Bin::And } else { Bin::With };
            s(l.left.clone(), cons(bin_of(op, a, b), g1))
        }
        R::OrL | R::PlusL | R::PlusLBang => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (a, d1) = split_last(&l.left)?;
            let (b, d2) = split_last(&r.left)?;
            if d1 != d2 || l.right != r.right {
                return shape("additive rule needs identical contexts");
            }
            if rule == R::PlusLBang {
                need_bang(d1, "left")?;
            }
            let op = if rule == R::OrL { Bin::Or } else { Bin::Plus };
            s(push(d1, bin_of(op, a, b)), l.right.clone())
        }
        R::CImpL => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (a, g) = split_first(&l.right)?;
            let (b, d) = split_last(&r.left)?;
            if l.left != d || g != r.right.as_slice() {
                return shape("⇛L needs identical contexts");
            }
            s(push(d, bin_of(Bin::CImp, a, b)), r.right.clone())
        }
        R::IImpL => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            if l.right.len() != 1 {
                return shape("⇒L's left premise has exactly one succedent formula");
            }
            let a = &l.right[0];
            let (b, d) = split_last(&r.left)?;
            if l.left != d {
                return shape("⇒L needs identical antecedents");
            }
            s(push(d, bin_of(Bin::IImp, a, b)), r.right.clone())
        }
        R::CImpR | R::IImpR | R::IImpRWhy | R::UImpR | R::ClImpRBang => {
            let q = p0.unwrap();
            let (a, d) = split_last(&q.left)?;
            let (b, g) = split_first(&q.right)?;
            let op = match rule {
                R::CImpR => Bin::CImp,
                R::IImpR | R::IImpRWhy => Bin::IImp,
                R::UImpR => Bin::UImp,
                _ => Bin::LImp,
            };
            if rule == R::IImpRWhy {
                need_why(g, "right")?;
            }
            if rule == R::ClImpRBang {
                need_bang(d, "left")?;
            }
            s(d.to_vec(), cons(bin_of(op, a, b), g))
        }
        R::TensorL => {
            let q = p0.unwrap();
            let n = q.left.len();
            if n < 2 {
                return shape("⊗L needs two antecedent formulas");
            }
            let f = bin_of(Bin::Tensor, &q.left[n - 2], &q.left[n - 1]);
            s(push(&q.left[..n - 2], f), q.right.clone())
        }
        R::ParR => {
            let q = p0.unwrap();
            if q.right.len() < 2 {
                return shape("⅋R needs two succedent formulas");
            }
            let f = bin_of(Bin::Par, &q.right[0], &q.right[1]);
            s(q.left.clone(), cons(f, &q.right[2..]))
        }
        R::TensorR => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            if let Some(k) = p.split {
                if k != l.left.len() {
                    return param(":split does not match the left premise");
                }
            }
            let (a, g1) = split_first(&l.right)?;
            let (b, g2) = split_first(&r.right)?;
            s(cat(&l.left, &r.left), cons(bin_of(Bin::Tensor, a, b), &cat(g1, g2)))
        }
        R::ParL | R::UImpL => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            if let Some(k) = p.split {
                if k + 1 != l.left.len() {
                    return param(":split does not match the left premise");
                }
            }
            if rule == R::ParL {
                let (a, d1) = split_last(&l.left)?;
                let (b, d2) = split_last(&r.left)?;
                s(push(&cat(d1, d2), bin_of(Bin::Par, a, b)), cat(&l.right, &r.right))
            } else {
                let (a, g1) = split_first(&l.right)?;
                let (b, d2) = split_last(&r.left)?;
                s(push(&cat(&l.left, d2), bin_of(Bin::UImp, a, b)), cat(g1, &r.right))
            }
        }
        R::NegL | R::LDualL => {
            let q = p0.unwrap();
            let (b, g) = split_first(&q.right)?;
            let f = if rule == R::NegL { Formula::neg(b.clone()) } else { dual_unchecked(b) };
            s(push(&q.left, f), g.to_vec())
        }
        R::NegR | R::LDualR => {
            let q = p0.unwrap();
            let (a, d) = split_last(&q.left)?;
            let f = if rule == R::NegR { Formula::neg(a.clone()) } else { dual_unchecked(a) };
            s(d.to_vec(), cons(f, &q.right))
        }
        R::ClImpLBang => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (b, d) = split_last(&l.left)?;
            need_bang(d, "left premise's left")?;
            let (a, xi) = split_first(&r.right)?;
            let f = Formula::bang(bin_of(Bin::LImp, a, b));
            s(push(&cat(d, &r.left), f), cat(&l.right, xi))
        }
        R::IImpLWhy => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let (b, d) = split_last(&l.left)?;
            let (a, xi) = split_first(&r.right)?;
            need_why(xi, "second premise's right")?;
            s(push(&cat(d, &r.left), bin_of(Bin::IImp, a, b)), cat(&l.right, xi))
        }
        R::CutLn | R::CutLnWB | R::CutWB => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let a = at(p)?;
            let o = occ(p)?;
            let Some(c) = l.right.get(a) else { return param("cut occurrence out of range") };
            let target = if rule == R::CutLn {
                c.clone()
            } else {
                let Some(b) = c.unwhy() else { return shape("Cut?! needs ?B on the left") };
                Formula::bang(b.clone())
            };
            if rule == R::CutWB && o.len() != 1 {
                return param("Cut?! takes exactly one occurrence");
            }
            valid_occ(&r.left, o, &target)?;
            let n = o.len();
            let g = remove_at(&l.right, &[a]);
            s(cat(&repeat(&l.left, n), &remove_at(&r.left, o)), cat(&repeat(&g, n), &r.right))
        }
        R::CutRn | R::CutRnWB => {
            let (l, r) = (p0.unwrap(), p1.unwrap());
            let b = at(p)?;
            let o = occ(p)?;
            let Some(c) = r.left.get(b) else { return param("cut occurrence out of range") };
            let target = if rule == R::CutRn {
                c.clone()
            } else {
                let Some(b) = c.unbang() else { return shape("Cut?! needs !B on the right") };
                Formula::why(b.clone())
            };
            valid_occ(&l.right, o, &target)?;
            let n = o.len();
            let d = remove_at(&r.left, &[b]);
            s(cat(&l.left, &repeat(&d, n)), cat(&remove_at(&l.right, o), &repeat(&r.right, n)))
        }
        R::CutDistL => {
            let q = p0.unwrap();
            let a = intro(p)?;
            let o = occ(p)?;
            valid_occ(&q.left, o, &Formula::bang(a.clone()))?;
            let d = Formula::bang(Formula::why(a.clone()));
            s(cat(&vec![d; o.len()], &remove_at(&q.left, o)), q.right.clone())
        }
        R::CutDistR => {
            let q = p0.unwrap();
            let a = intro(p)?;
            let o = occ(p)?;
            valid_occ(&q.right, o, &Formula::why(a.clone()))?;
            let d = Formula::why(Formula::bang(a.clone()));
            s(q.left.clone(), cat(&remove_at(&q.right, o), &vec![d; o.len()]))
        }
    }
}

// -------------------------------------------------------------- derivations

/// A derivation node with its conclusion cached; built bottom-up so every
/// node is a valid rule instance by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Node(Arc<NodeInner>);

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NodeInner {
    pub rule: RuleId,
    pub params: Params,
    pub prem: Vec<Node>,
    pub seq: Sequent,
    pub depth: usize,
}

impl Deref for Node {
    type Target = NodeInner;
    fn deref(&self) -> &NodeInner {
        &self.0
    }
}

impl Node {
    /// Builds one rule instance in `calc`. Engine-internal cut forms are
    /// accepted here; the checker rejects them in user proofs.
    pub fn mk(calc: CalculusId, rule: RuleId, params: Params, prem: Vec<Node>) -> Result<Node, RuleError> {
        // plain Cut is the engine's working form of Cut? and Cut! as well
        if !rule.is_internal() && !calc.allows(rule) && rule != R::Cut {
            return Err(RuleError { kind: ErrKind::Param, msg: format!("{} is not a rule of {}", rule.name(), calc.name()) });
        }
        let seqs: Vec<&Sequent> = prem.iter().map(|n| &n.seq).collect();
        let seq = infer(calc, rule, &params, &seqs)?;
        if calc.intuitionistic() && seq.right.len() > 1 {
            return side(format!("{} produced {} succedent formulas", rule.name(), seq.right.len()));
        }
        let depth = prem.iter().map(|n| n.depth + 1).max().unwrap_or(0);
        Ok(Node(Arc::new(NodeInner { rule, params, prem, seq, depth })))
    }

    pub fn to_proof(&self) -> Proof {
        Proof::new(self.rule, self.params.clone(), self.prem.iter().map(Node::to_proof).collect())
    }

    pub fn size(&self) -> usize {
        1 + self.prem.iter().map(Node::size).sum::<usize>()
    }

    pub fn ptr_eq(&self, other: &Node) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Pre-order visit with paths.
    pub fn walk(&self, path: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], &Node)) {
        f(path, self);
        for (k, q) in self.prem.iter().enumerate() {
            path.push(k);
            q.walk(path, f);
            path.pop();
        }
    }

    pub fn at_path(&self, path: &[usize]) -> Option<&Node> {
        let mut n = self;
        for &k in path {
            n = n.prem.get(k)?;
        }
        Some(n)
    }
}

// ------------------------------------------------------------------ checker

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    RuleNotInCalculus,
    BadRuleInstance,
    SideCondition,
    Language,
    /// Global predicate of a ρ-calculus; `clause` is 1 (no ?!R) or 2 (cut purity).
    NotTractable { clause: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: Vec<usize>,
    pub kind: ViolationKind,
    pub rule: RuleId,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            ViolationKind::RuleNotInCalculus => "rule not in calculus".to_string(),
            ViolationKind::BadRuleInstance => "bad rule instance".to_string(),
            ViolationKind::SideCondition => "side condition".to_string(),
            ViolationKind::Language => "language".to_string(),
            ViolationKind::NotTractable { clause } => format!("not tractable (clause {clause})"),
        };
        write!(f, "{kind} at path {:?} ({}): {}", self.path, self.rule.name(), self.message)
    }
}

pub type CheckReport = Result<Node, Violation>;

/// Checks `p` in `calc`; on success returns the annotated derivation whose
/// root sequent is the end sequent.
pub fn check_proof(p: &Proof, calc: CalculusId) -> CheckReport {
    let mut path = Vec::new();
    let n = build(p, calc, &mut path)?;
    if calc.is_rho() {
        crate::purity::is_tractable(&n, calc)?;
    }
    Ok(n)
}

fn build(p: &Proof, calc: CalculusId, path: &mut Vec<usize>) -> Result<Node, Violation> {
    let mut prem = Vec::with_capacity(p.premises.len());
    for (k, q) in p.premises.iter().enumerate() {
        path.push(k);
        prem.push(build(q, calc, path)?);
        path.pop();
    }
    let viol = |kind: ViolationKind, message: String| Violation { path: path.clone(), kind, rule: p.rule, message };
    if p.rule.is_internal() || !calc.allows(p.rule) {
        return Err(viol(ViolationKind::RuleNotInCalculus, format!("{} is not a rule of {}", p.rule.name(), calc.name())));
    }
    let logic = calc.logic();
    for f in p.params.intro.iter().chain(p.params.left.iter().flatten()).chain(p.params.right.iter().flatten()) {
        if let Some(bad) = offending_node(f, logic) {
            return Err(viol(ViolationKind::Language, format!("`{bad}` is not in {}", logic.name())));
        }
    }
    match Node::mk(calc, p.rule, p.params.clone(), prem) {
        Ok(n) => Ok(n),
        Err(e) => {
            let kind = match e.kind {
                ErrKind::Side => ViolationKind::SideCondition,
                _ => ViolationKind::BadRuleInstance,
            };
            Err(viol(kind, e.msg))
        }
    }
}

/// End sequent of a proof that checks in `calc`.
pub fn end_sequent(p: &Proof, calc: CalculusId) -> Result<Sequent, Violation> {
    check_proof(p, calc).map(|n| n.seq.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marker {
    Bang,
    Why,
    BangWhy,
}

impl FromStr for Marker {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "!" => Ok(Marker::Bang),
            "?" => Ok(Marker::Why),
            "!?" => Ok(Marker::BangWhy),
            _ => Err(format!("unknown marker `{s}`")),
        }
    }
}

/// Whether a checked proof lies in the sub-calculus `(c)_!`, `(c)_?` or both.
pub fn in_subcalculus(p: &Proof, calc: CalculusId, m: Marker) -> Result<bool, Violation> {
    let s = end_sequent(p, calc)?;
    Ok(match m {
        Marker::Bang => all_bang(&s.left),
        Marker::Why => all_why(&s.right),
        Marker::BangWhy => all_bang(&s.left) && all_why(&s.right),
    })
}

/// A formula of a cut-free derivation that is not a subformula of its end
/// sequent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubformulaViolation {
    pub path: Vec<usize>,
    pub formula: Formula,
}

/// Every formula at every node is a subformula of the root sequent (rule
/// parameters included). Cut-family rules are reported: they are the one
/// source of foreign formulas.
pub fn subformula_property(root: &Node) -> Result<(), SubformulaViolation> {
    let mut subs = std::collections::HashSet::new();
    for f in root.seq.formulas() {
        subs.extend(f.subformulas());
    }
    let mut bad = None;
    root.walk(&mut Vec::new(), &mut |path, n| {
        if bad.is_some() {
            return;
        }
        let params = n.params.intro.iter().chain(n.params.left.iter().flatten()).chain(n.params.right.iter().flatten());
        if let Some(f) = n.seq.formulas().chain(params).find(|f| !subs.contains(*f)) {
            bad = Some(SubformulaViolation { path: path.to_vec(), formula: f.clone() });
        }
    });
    bad.map_or(Ok(()), Err)
}
