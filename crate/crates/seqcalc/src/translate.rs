//! Formula and proof translations along the edges LK → INC → ILC_ι and
//! LK → CLC → ILC_ι, their composites, and the LLJ → ILC / LJ → INC
//! embeddings.
//!
//! Each rule of the source calculus is replaced by a fixed derived rule of
//! the target; exchange chains inside the derived rules are computed.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::calculi::{check_proof, CalculusId, Node, RuleError, Violation};
use crate::proof::{Params, Proof, Sequent, Side};
use crate::rules::RuleId;
use crate::structural::{adjust, reorder_to};
use crate::syntax::{Bin, Formula, LogicId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    LkInc,
    IncIlc,
    LkClc,
    ClcIlc,
    /// LK → INC → ILC_ι.
    LkIlcN,
    /// LK → CLC → ILC_ι.
    LkIlcV,
    LljIlc,
    LjInc,
}

impl Edge {
    pub const ALL: [Edge; 8] =
        [Edge::LkInc, Edge::IncIlc, Edge::LkClc, Edge::ClcIlc, Edge::LkIlcN, Edge::LkIlcV, Edge::LljIlc, Edge::LjInc];

    pub fn name(self) -> &'static str {
        match self {
            Edge::LkInc => "lk-inc",
            Edge::IncIlc => "inc-ilc",
            Edge::LkClc => "lk-clc",
            Edge::ClcIlc => "clc-ilc",
            Edge::LkIlcN => "lk-ilc-n",
            Edge::LkIlcV => "lk-ilc-v",
            Edge::LljIlc => "llj-ilc",
            Edge::LjInc => "lj-inc",
        }
    }

    pub fn source(self) -> CalculusId {
        match self {
            Edge::LkInc | Edge::LkClc | Edge::LkIlcN | Edge::LkIlcV => CalculusId::Lk,
            Edge::IncIlc => CalculusId::Inc,
            Edge::ClcIlc => CalculusId::Clc,
            Edge::LljIlc => CalculusId::Llj,
            Edge::LjInc => CalculusId::Lj,
        }
    }

    pub fn target(self) -> CalculusId {
        match self {
            Edge::LkInc | Edge::LjInc => CalculusId::Inc,
            Edge::LkClc => CalculusId::Clc,
            Edge::LljIlc => CalculusId::Ilc,
            _ => CalculusId::IlcIota,
        }
    }

    /// Whether the edge is one of the two conservative-extension embeddings.
    pub fn is_embedding(self) -> bool {
        matches!(self, Edge::LljIlc | Edge::LjInc)
    }

    /// The single-step edges a composite factors into.
    pub fn steps(self) -> &'static [Edge] {
        match self {
            Edge::LkIlcN => &[Edge::LkInc, Edge::IncIlc],
            Edge::LkIlcV => &[Edge::LkClc, Edge::ClcIlc],
            Edge::LkInc => &[Edge::LkInc],
            Edge::IncIlc => &[Edge::IncIlc],
            Edge::LkClc => &[Edge::LkClc],
            Edge::ClcIlc => &[Edge::ClcIlc],
            Edge::LljIlc => &[Edge::LljIlc],
            Edge::LjInc => &[Edge::LjInc],
        }
    }

    /// `!` edges put `!` on the antecedent, `?` edges put `?` on the succedent.
    fn marks(self) -> (bool, bool) {
        match self {
            Edge::LkInc | Edge::ClcIlc => (false, true),
            Edge::IncIlc | Edge::LkClc => (true, false),
            Edge::LkIlcN | Edge::LkIlcV => (true, true),
            Edge::LljIlc | Edge::LjInc => (false, false),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Edge {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Edge::ALL.into_iter().find(|e| e.name() == s).ok_or_else(|| format!("unknown edge `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("source proof does not check: {0}")]
    Source(Violation),
    #[error("`{formula}` is not a formula of {logic}")]
    Language { formula: String, logic: &'static str },
    #[error("{rule} at path {path:?} has no image along {edge}")]
    NoImage { edge: Edge, rule: RuleId, path: Vec<usize> },
    #[error("building the image of {rule} at path {path:?} along {edge}: {source}")]
    Build { edge: Edge, rule: RuleId, path: Vec<usize>, source: RuleError },
}

// ------------------------------------------------------------ formula maps

fn lang(f: &Formula, l: LogicId) -> Result<(), TranslateError> {
    if f.in_language(l) {
        Ok(())
    } else {
        Err(TranslateError::Language { formula: f.to_string(), logic: l.name() })
    }
}

fn why(a: Formula) -> Formula {
    Formula::why(a)
}
fn bang(a: Formula) -> Formula {
    Formula::bang(a)
}
fn bin(op: Bin, a: Formula, b: Formula) -> Formula {
    Formula::bin(op, a, b)
}
/// `A ⤳ B` as it is stored in ILLᵉ.
fn uimp(a: Formula, b: Formula) -> Formula {
    Formula::lolli_e(a, b)
}

fn map_step(f: &Formula, e: Edge) -> Formula {
    use Formula::*;
    let t = |x: &Formula| map_step(x, e);
    match (e, f) {
        (_, Var(_)) => f.clone(),
        (Edge::LkInc, Tt) => why(Top),
        (Edge::LkInc, Ff) => Ff,
        (Edge::LkInc, And(a, b)) => bin(Bin::With, why(t(a)), why(t(b))),
        (Edge::LkInc, Or(a, b)) => bin(Bin::Or, t(a), t(b)),
        (Edge::LkInc, CImp(a, b)) => bin(Bin::IImp, t(a), why(t(b))),

        (Edge::IncIlc, Top) => Top,
        (Edge::IncIlc, Ff) => bang(Bot),
        (Edge::IncIlc, With(a, b)) => bin(Bin::With, t(a), t(b)),
        (Edge::IncIlc, Or(a, b)) => bin(Bin::Plus, bang(t(a)), bang(t(b))),
        (Edge::IncIlc, IImp(a, b)) => uimp(bang(t(a)), t(b)),
        (Edge::IncIlc, Why(a)) => why(t(a)),

        (Edge::LkClc, Tt) => Tt,
        (Edge::LkClc, Ff) => bang(Bot),
        (Edge::LkClc, And(a, b)) => bin(Bin::And, t(a), t(b)),
        (Edge::LkClc, Or(a, b)) => bin(Bin::Plus, bang(t(a)), bang(t(b))),
        (Edge::LkClc, CImp(a, b)) => bin(Bin::LImp, bang(t(a)), t(b)),

        (Edge::ClcIlc, Tt) => why(Top),
        (Edge::ClcIlc, Bot) => Bot,
        (Edge::ClcIlc, And(a, b)) => bin(Bin::With, why(t(a)), why(t(b))),
        (Edge::ClcIlc, Plus(a, b)) => bin(Bin::Plus, t(a), t(b)),
        (Edge::ClcIlc, LImp(a, b)) => uimp(t(a), why(t(b))),
        (Edge::ClcIlc, Bang(a)) => bang(t(a)),

        (Edge::LljIlc, UImp(a, b)) => uimp(t(a), t(b)),
        (Edge::LljIlc, _) | (Edge::LjInc, _) => {
            if let Some((op, a)) = f.as_un() {
                Formula::un(op, t(a))
            } else if let Some((op, a, b)) = f.as_bin() {
                bin(op, t(a), t(b))
            } else {
                f.clone()
            }
        }
        _ => unreachable!("formula checked against the source language"),
    }
}

pub fn translate_formula(f: &Formula, e: Edge) -> Result<Formula, TranslateError> {
    lang(f, e.source().logic())?;
    Ok(e.steps().iter().fold(f.clone(), |g, &s| map_step(&g, s)))
}

/// The end sequent a translated proof must have.
pub fn translate_sequent(s: &Sequent, e: Edge) -> Result<Sequent, TranslateError> {
    let (lb, rq) = e.marks();
    let mut left = Vec::new();
    for f in &s.left {
        let g = translate_formula(f, e)?;
        left.push(if lb { bang(g) } else { g });
    }
    let mut right = Vec::new();
    for f in &s.right {
        let g = translate_formula(f, e)?;
        right.push(if rq { why(g) } else { g });
    }
    Ok(Sequent::new(left, right))
}

// ------------------------------------------------------------ proof tables

pub fn translate_proof(p: &Proof, e: Edge) -> Result<Proof, TranslateError> {
    let n = check_proof(p, e.source()).map_err(TranslateError::Source)?;
    Ok(translate_node(&n, e)?.to_proof())
}

/// Embeds an LLJ proof into ILC or an LJ proof into INC.
pub fn embed(p: &Proof, e: Edge) -> Result<Proof, TranslateError> {
    assert!(e.is_embedding(), "{e} is not an embedding edge");
    translate_proof(p, e)
}

pub fn translate_node(n: &Node, e: Edge) -> Result<Node, TranslateError> {
    let mut cur = n.clone();
    for &s in e.steps() {
        let mut path = Vec::new();
        cur = Tr { e: s, c: s.target() }.go(&cur, &mut path)?;
    }
    Ok(cur)
}

struct Tr {
    e: Edge,
    c: CalculusId,
}

type R = Result<Node, RuleError>;

impl Tr {
    fn t(&self, f: &Formula) -> Formula {
        map_step(f, self.e)
    }

    fn mk(&self, r: RuleId, params: Params, prem: Vec<Node>) -> R {
        Node::mk(self.c, r, params, prem)
    }
    fn u(&self, r: RuleId, p: Node) -> R {
        self.mk(r, Params::none(), vec![p])
    }
    fn id(&self, f: Formula) -> R {
        self.mk(RuleId::Id, Params::intro(f), vec![])
    }
    fn leaf(&self, r: RuleId) -> R {
        self.mk(r, Params::none(), vec![])
    }

    fn image(&self, s: &Sequent) -> Sequent {
        let (lb, rq) = self.e.marks();
        Sequent::new(
            s.left.iter().map(|f| if lb { bang(self.t(f)) } else { self.t(f) }).collect(),
            s.right.iter().map(|f| if rq { why(self.t(f)) } else { self.t(f) }).collect(),
        )
    }

    fn go(&self, n: &Node, path: &mut Vec<usize>) -> Result<Node, TranslateError> {
        let mut kids = Vec::with_capacity(n.prem.len());
        for (k, q) in n.prem.iter().enumerate() {
            path.push(k);
            kids.push(self.go(q, path)?);
            path.pop();
        }
        let built = match self.e {
            Edge::LkInc => self.lk_inc(n, kids),
            Edge::IncIlc => self.inc_ilc(n, kids),
            Edge::LkClc => self.lk_clc(n, kids),
            Edge::ClcIlc => self.clc_ilc(n, kids),
            Edge::LljIlc => self.llj_ilc(n, kids),
            Edge::LjInc => self.lj_inc(n, kids),
            Edge::LkIlcN | Edge::LkIlcV => unreachable!("composites are run step by step"),
        };
        let built = match built {
            Ok(Some(b)) => b,
            Ok(None) => return Err(TranslateError::NoImage { edge: self.e, rule: n.rule, path: path.clone() }),
            Err(source) => return Err(TranslateError::Build { edge: self.e, rule: n.rule, path: path.clone(), source }),
        };
        // the trailing XL*/XR* of the derived rules
        let want = self.image(&n.seq);
        reorder_to(self.c, built, &want)
            .map_err(|source| TranslateError::Build { edge: self.e, rule: n.rule, path: path.clone(), source })
    }

    fn intro(&self, n: &Node) -> Formula {
        self.t(n.params.intro.as_ref().expect("checked rule carries :intro"))
    }
    fn branch(&self, n: &Node, f: Formula) -> Params {
        Params::branch(n.params.i.expect("checked rule carries :i"), f)
    }
    /// Component `i` of the source node's `:intro`.
    fn component(&self, n: &Node) -> Formula {
        let (_, a, b) = n.params.intro.as_ref().and_then(Formula::as_bin).expect("binary :intro");
        if n.params.i == Some(1) {
            a.clone()
        } else {
            b.clone()
        }
    }
    /// The two components of the principal formula at the end of the
    /// antecedent of premise `k`... or, for right rules, of the conclusion.
    fn principal_l(n: &Node) -> (Formula, Formula) {
        let f = n.seq.left.last().expect("left principal");
        let (_, a, b) = f.as_bin().expect("binary principal");
        (a.clone(), b.clone())
    }

    fn lk_inc(&self, n: &Node, mut p: Vec<Node>) -> Result<Option<Node>, RuleError> {
        use RuleId as X;
        let one = |p: &mut Vec<Node>| p.remove(0);
        Ok(Some(match n.rule {
            X::Xl | X::Xr => self.mk(n.rule, n.params.clone(), p)?,
            X::Wl => self.mk(X::Wl, Params::intro(self.intro(n)), p)?,
            X::Wr => self.mk(X::WhyW, Params::intro(why(self.intro(n))), p)?,
            X::Cl => self.u(X::Cl, one(&mut p))?,
            X::Cr => self.u(X::WhyC, one(&mut p))?,
            X::Id => self.u(X::WhyD, self.id(self.intro(n))?)?,
            X::TtL => self.u(X::WhyLWhy, self.u(X::TopL, one(&mut p))?)?,
            X::TtR => self.u(X::WhyD, self.u(X::WhyD, self.leaf(X::TopR)?)?)?,
            X::FfL => self.leaf(X::FfL)?,
            X::FfR => self.u(X::WhyD, self.u(X::FfRWhy, one(&mut p))?)?,
            X::AndL => {
                let f = self.intro(n);
                self.mk(X::WithL, self.branch(n, f), vec![self.u(X::WhyLWhy, one(&mut p))?])?
            }
            X::AndR => self.u(X::WhyD, self.mk(X::WithRWhy, Params::none(), p)?)?,
            X::OrL => self.mk(X::OrL, Params::none(), p)?,
            X::OrR => {
                let f = self.intro(n);
                let bi = self.t(&self.component(n));
                let right = self.u(X::WhyD, self.mk(X::OrRWhy, self.branch(n, f), vec![self.id(bi)?])?)?;
                self.mk(X::CutWhy, Params::none(), vec![one(&mut p), right])?
            }
            X::CImpR => self.u(X::WhyD, self.u(X::IImpRWhy, one(&mut p))?)?,
            X::CImpL => {
                let (a, b) = Self::principal_l(n);
                let (a, b) = (self.t(&a), self.t(&b));
                let l = self.mk(X::IImpLWhy, Params::none(), vec![self.id(why(b.clone()))?, self.id(a.clone())?])?;
                let l = self.mk(X::Xl, Params::at(0), vec![l])?;
                let l = self.u(X::WhyD, self.u(X::IImpRWhy, self.u(X::WhyLWhy, l)?)?)?;
                let (p1, p2) = (p.remove(0), p.remove(0));
                let r = self.mk(X::IImpLWhy, Params::none(), vec![self.u(X::WhyLWhy, p2.clone())?, p1])?;
                let cut_f = bin(Bin::IImp, why(a), why(b));
                let mut want = p2.seq.clone();
                want.left.pop();
                want.left.push(cut_f);
                let r = adjust(self.c, r, &want)?;
                self.mk(X::CutWhy, Params::none(), vec![l, r])?
            }
            X::Cut => self.mk(X::CutWhy, Params::none(), p)?,
            _ => return Ok(None),
        }))
    }

    fn inc_ilc(&self, n: &Node, mut p: Vec<Node>) -> Result<Option<Node>, RuleError> {
        use RuleId as X;
        let one = |p: &mut Vec<Node>| p.remove(0);
        Ok(Some(match n.rule {
            X::Xl | X::Xr => self.mk(n.rule, n.params.clone(), p)?,
            X::Wl => self.mk(X::BangW, Params::intro(bang(self.intro(n))), p)?,
            X::WhyW => self.mk(X::WhyW, Params::intro(self.intro(n)), p)?,
            X::Cl => self.u(X::BangC, one(&mut p))?,
            X::WhyC => self.u(X::WhyC, one(&mut p))?,
            X::WhyD => self.u(X::WhyD, one(&mut p))?,
            X::Id => self.u(X::BangD, self.id(self.intro(n))?)?,
            X::TopL => self.u(X::BangD, self.u(X::TopL, one(&mut p))?)?,
            X::TopR => self.leaf(X::TopR)?,
            X::FfL => self.u(X::BangD, self.u(X::BangD, self.leaf(X::BotL)?)?)?,
            X::FfRWhy => self.u(X::BangR, self.u(X::BotR, one(&mut p))?)?,
            X::WithRWhy => self.mk(X::WithR, Params::none(), p)?,
            X::WithL => {
                let f = self.intro(n);
                let ai = self.t(&self.component(n));
                let l = self.mk(X::WithL, self.branch(n, f), vec![self.id(ai)?])?;
                let l = self.u(X::BangR, self.u(X::BangD, l)?)?;
                self.mk(X::Cut, Params::none(), vec![l, one(&mut p)])?
            }
            X::OrL => self.u(X::BangD, self.mk(X::PlusL, Params::none(), p)?)?,
            X::OrRWhy => {
                let f = self.intro(n);
                self.mk(X::PlusR, self.branch(n, f), vec![self.u(X::BangR, one(&mut p))?])?
            }
            X::IImpLWhy => {
                let (a, b) = Self::principal_l(n);
                let (a, b) = (self.t(&a), self.t(&b));
                let na = Formula::neg(bang(a.clone()));
                let l = self.u(X::NegL, self.id(bang(a.clone()))?)?;
                let l = self.mk(X::ParL, Params::none(), vec![l, self.id(b.clone())?])?;
                let l = self.u(X::BangR, self.u(X::BangD, l)?)?;
                let l = self.mk(X::Xl, Params::at(0), vec![l])?;
                let l = self.u(X::BangR, self.u(X::ParR, self.u(X::NegR, l)?)?)?;
                let (pl, pr) = (p.remove(0), p.remove(0));
                let r = self.u(X::NegL, self.u(X::BangR, pr)?)?;
                let r = self.mk(X::ParL, Params::none(), vec![r, pl])?;
                let r = self.u(X::BangD, r)?;
                debug_assert_eq!(r.seq.left.last(), Some(&bang(bin(Bin::Par, na, bang(b)))));
                self.mk(X::Cut, Params::none(), vec![l, r])?
            }
            X::IImpRWhy => self.u(X::ParR, self.u(X::NegR, one(&mut p))?)?,
            X::WhyLWhy => self.u(X::BangWhyL, one(&mut p))?,
            X::CutWhy => {
                let (p1, p2) = (p.remove(0), p.remove(0));
                self.mk(X::Cut, Params::none(), vec![self.u(X::BangR, p1)?, self.u(X::BangWhyL, p2)?])?
            }
            _ => return Ok(None),
        }))
    }

    fn lk_clc(&self, n: &Node, mut p: Vec<Node>) -> Result<Option<Node>, RuleError> {
        use RuleId as X;
        let one = |p: &mut Vec<Node>| p.remove(0);
        Ok(Some(match n.rule {
            X::Xl | X::Xr => self.mk(n.rule, n.params.clone(), p)?,
            X::Wl => self.mk(X::BangW, Params::intro(bang(self.intro(n))), p)?,
            X::Wr => self.mk(X::Wr, Params::intro(self.intro(n)), p)?,
            X::Cl => self.u(X::BangC, one(&mut p))?,
            X::Cr => self.u(X::Cr, one(&mut p))?,
            X::Id => self.u(X::BangD, self.id(self.intro(n))?)?,
            X::Cut => self.mk(X::CutBang, Params::none(), p)?,
            X::TtL => self.u(X::BangD, self.u(X::TtLBang, one(&mut p))?)?,
            X::TtR => self.leaf(X::TtR)?,
            X::FfL => self.u(X::BangD, self.u(X::BangD, self.leaf(X::BotL)?)?)?,
            X::FfR => self.u(X::BangRBang, self.u(X::BotR, one(&mut p))?)?,
            X::AndR => self.mk(X::AndR, Params::none(), p)?,
            X::CImpR => self.u(X::ClImpRBang, one(&mut p))?,
            X::AndL => {
                let f = self.intro(n);
                let ai = self.t(&self.component(n));
                let l = self.u(X::BangD, self.mk(X::AndLBang, self.branch(n, f), vec![self.id(ai)?])?)?;
                self.mk(X::CutBang, Params::none(), vec![l, one(&mut p)])?
            }
            X::OrL => self.u(X::BangD, self.mk(X::PlusLBang, Params::none(), p)?)?,
            X::OrR => {
                let f = self.intro(n);
                self.mk(X::PlusR, self.branch(n, f), vec![self.u(X::BangRBang, one(&mut p))?])?
            }
            X::CImpL => {
                let (a, b) = Self::principal_l(n);
                let (a, b) = (self.t(&a), self.t(&b));
                let l = self.mk(X::ClImpLBang, Params::none(), vec![self.id(b.clone())?, self.id(bang(a.clone()))?])?;
                let l = self.mk(X::Xl, Params::at(0), vec![self.u(X::BangRBang, l)?])?;
                let l = self.u(X::ClImpRBang, l)?;
                let (p1, p2) = (p.remove(0), p.remove(0));
                let r = self.mk(X::ClImpLBang, Params::none(), vec![p2.clone(), self.u(X::BangRBang, p1)?])?;
                // LK's ⇛L shares its context; the derived rule splits it
                let mut want = p2.seq.clone();
                want.left.pop();
                want.left.push(bang(bin(Bin::LImp, bang(a), bang(b))));
                let r = adjust(self.c, r, &want)?;
                self.mk(X::CutBang, Params::none(), vec![l, r])?
            }
            _ => return Ok(None),
        }))
    }

    fn clc_ilc(&self, n: &Node, mut p: Vec<Node>) -> Result<Option<Node>, RuleError> {
        use RuleId as X;
        let one = |p: &mut Vec<Node>| p.remove(0);
        Ok(Some(match n.rule {
            X::Xl | X::Xr => self.mk(n.rule, n.params.clone(), p)?,
            X::BangW => self.mk(X::BangW, Params::intro(self.intro(n)), p)?,
            X::Wr => self.mk(X::WhyW, Params::intro(why(self.intro(n))), p)?,
            X::BangC => self.u(X::BangC, one(&mut p))?,
            X::Cr => self.u(X::WhyC, one(&mut p))?,
            X::BangD => self.u(X::BangD, one(&mut p))?,
            X::Id => self.u(X::WhyD, self.id(self.intro(n))?)?,
            X::TtLBang => self.u(X::WhyL, self.u(X::TopL, one(&mut p))?)?,
            X::TtR => self.u(X::WhyD, self.u(X::WhyD, self.leaf(X::TopR)?)?)?,
            X::BotL => self.leaf(X::BotL)?,
            X::BotR => self.u(X::WhyD, self.u(X::BotR, one(&mut p))?)?,
            X::AndLBang => {
                let f = self.intro(n);
                self.mk(X::WithL, self.branch(n, f), vec![self.u(X::WhyL, one(&mut p))?])?
            }
            X::AndR => self.u(X::WhyD, self.mk(X::WithR, Params::none(), p)?)?,
            X::PlusLBang => self.mk(X::PlusL, Params::none(), p)?,
            X::PlusR => {
                let f = self.intro(n);
                let bi = self.t(&self.component(n));
                let r = self.mk(X::PlusR, self.branch(n, f), vec![self.id(bi)?])?;
                let r = self.u(X::WhyL, self.u(X::WhyD, r)?)?;
                self.mk(X::Cut, Params::none(), vec![one(&mut p), r])?
            }
            X::ClImpRBang => self.u(X::WhyD, self.u(X::ParR, self.u(X::NegR, one(&mut p))?)?)?,
            X::ClImpLBang => {
                let f = n.seq.left.last().expect("principal").unbang().expect("!(A ↬ B)").clone();
                let (_, a, b) = f.as_bin().expect("A ↬ B");
                let (a, b) = (self.t(a), self.t(b));
                let l = self.mk(X::ParL, Params::none(), vec![self.u(X::NegL, self.id(a.clone())?)?, self.id(why(b.clone()))?])?;
                let l = self.mk(X::Xl, Params::at(0), vec![self.u(X::BangD, l)?])?;
                let l = self.u(X::ParR, self.u(X::NegR, self.u(X::WhyL, l)?)?)?;
                let (pl, pr) = (p.remove(0), p.remove(0));
                let r = self.mk(X::ParL, Params::none(), vec![self.u(X::NegL, pr)?, self.u(X::WhyL, pl)?])?;
                self.mk(X::Cut, Params::none(), vec![l, r])?
            }
            X::BangRBang => {
                let q = one(&mut p);
                let b = n.seq.right[0].unbang().expect("!B").clone();
                let b = self.t(&b);
                let r = self.u(X::BangWhyL, self.u(X::WhyD, self.id(bang(b))?)?)?;
                self.mk(X::Cut, Params::none(), vec![self.u(X::BangR, q)?, r])?
            }
            X::CutBang => {
                let (p1, p2) = (p.remove(0), p.remove(0));
                self.mk(X::Cut, Params::none(), vec![self.u(X::BangR, p1)?, self.u(X::BangWhyL, p2)?])?
            }
            _ => return Ok(None),
        }))
    }

    fn llj_ilc(&self, n: &Node, mut p: Vec<Node>) -> Result<Option<Node>, RuleError> {
        use RuleId as X;
        Ok(Some(match n.rule {
            X::UImpR => self.u(X::ParR, self.u(X::NegR, p.remove(0))?)?,
            X::UImpL => {
                let (l, r) = (p.remove(0), p.remove(0));
                self.mk(X::ParL, Params::none(), vec![self.u(X::NegL, l)?, r])?
            }
            r if r.is_cut() && r != X::Cut => return Ok(None),
            r => self.mk(r, self.map_params(&n.params), p)?,
        }))
    }

    fn lj_inc(&self, n: &Node, mut p: Vec<Node>) -> Result<Option<Node>, RuleError> {
        use RuleId as X;
        let params = self.map_params(&n.params);
        Ok(Some(match n.rule {
            X::WithR => self.mk(X::WithRWhy, params, p)?,
            X::OrR => self.mk(X::OrRWhy, params, p)?,
            X::FfR => self.mk(X::FfRWhy, params, p)?,
            X::IImpR => self.mk(X::IImpRWhy, params, p)?,
            X::IImpL => {
                let (l, r) = (p.remove(0), p.remove(0));
                let want = n.seq.clone();
                let m = self.mk(X::IImpLWhy, Params::none(), vec![r, l])?;
                adjust(self.c, m, &want)?
            }
            // INC only cuts on ?-formulas
            X::Cut => return Ok(None),
            r => self.mk(r, params, p)?,
        }))
    }

    fn map_params(&self, p: &Params) -> Params {
        let m = |v: &Vec<Formula>| v.iter().map(|f| self.t(f)).collect::<Vec<_>>();
        Params {
            intro: p.intro.as_ref().map(|f| self.t(f)),
            left: p.left.as_ref().map(m),
            right: p.right.as_ref().map(m),
            ..p.clone()
        }
    }
}

/// Side of the sequent image that carries the edge's exponential, if any.
pub fn marked_side(e: Edge) -> Option<Side> {
    match e.marks() {
        (true, false) => Some(Side::L),
        (false, true) => Some(Side::R),
        _ => None,
    }
}
