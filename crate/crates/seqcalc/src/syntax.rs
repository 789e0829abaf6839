//! Formulas of the seven logics, their languages, rank, linear dual, and the
//! ASCII grammar.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

type F = Arc<Formula>;

/// A formula over propositional variables. Sugar (`~`, `star`, `lstar`, and
/// `-o` outside ILL) is expanded by the parser and never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(Arc<str>),
    /// `X^⊥`, CLL only.
    DualVar(Arc<str>),
    Top,
    Bot,
    One,
    Zero,
    Tt,
    Ff,
    Bang(F),
    Why(F),
    /// Up-linear negation `¬`.
    Neg(F),
    Tensor(F, F),
    Par(F, F),
    With(F, F),
    Plus(F, F),
    /// Classical conjunction `∧`.
    And(F, F),
    Or(F, F),
    /// Intuitionistic implication `⇒`.
    IImp(F, F),
    /// Classical implication `⇛`.
    CImp(F, F),
    /// Up-linear implication `⤳`, primitive only in ILL.
    UImp(F, F),
    /// Classical linear implication `↬`.
    LImp(F, F),
}

/// Binary connective tags, used by constructors and generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bin {
    Tensor,
    Par,
    With,
    Plus,
    And,
    Or,
    IImp,
    CImp,
    UImp,
    LImp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Un {
    Bang,
    Why,
    Neg,
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(Arc::from(name))
    }
    pub fn dual_var(name: &str) -> Formula {
        Formula::DualVar(Arc::from(name))
    }
    pub fn bang(a: Formula) -> Formula {
        Formula::Bang(Arc::new(a))
    }
    pub fn why(a: Formula) -> Formula {
        Formula::Why(Arc::new(a))
    }
    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Arc::new(a))
    }
    pub fn un(op: Un, a: Formula) -> Formula {
        match op {
            Un::Bang => Formula::bang(a),
            Un::Why => Formula::why(a),
            Un::Neg => Formula::neg(a),
        }
    }
    pub fn bin(op: Bin, a: Formula, b: Formula) -> Formula {
        let (a, b) = (Arc::new(a), Arc::new(b));
        match op {
            Bin::Tensor => Formula::Tensor(a, b),
            Bin::Par => Formula::Par(a, b),
            Bin::With => Formula::With(a, b),
            Bin::Plus => Formula::Plus(a, b),
            Bin::And => Formula::And(a, b),
            Bin::Or => Formula::Or(a, b),
            Bin::IImp => Formula::IImp(a, b),
            Bin::CImp => Formula::CImp(a, b),
            Bin::UImp => Formula::UImp(a, b),
            Bin::LImp => Formula::LImp(a, b),
        }
    }
    /// `A ⤳ B` as it lives in ILLᵉ: `¬A ⅋ B`.
    pub fn lolli_e(a: Formula, b: Formula) -> Formula {
        Formula::bin(Bin::Par, Formula::neg(a), b)
    }

    pub fn as_bin(&self) -> Option<(Bin, &Formula, &Formula)> {
        use Formula::*;
        Some(match self {
            Tensor(a, b) => (Bin::Tensor, a, b),
            Par(a, b) => (Bin::Par, a, b),
            With(a, b) => (Bin::With, a, b),
            Plus(a, b) => (Bin::Plus, a, b),
            And(a, b) => (Bin::And, a, b),
            Or(a, b) => (Bin::Or, a, b),
            IImp(a, b) => (Bin::IImp, a, b),
            CImp(a, b) => (Bin::CImp, a, b),
            UImp(a, b) => (Bin::UImp, a, b),
            LImp(a, b) => (Bin::LImp, a, b),
            _ => return None,
        })
    }
    pub fn as_un(&self) -> Option<(Un, &Formula)> {
        match self {
            Formula::Bang(a) => Some((Un::Bang, a)),
            Formula::Why(a) => Some((Un::Why, a)),
            Formula::Neg(a) => Some((Un::Neg, a)),
            _ => None,
        }
    }
    pub fn is_bang(&self) -> bool {
        matches!(self, Formula::Bang(_))
    }
    pub fn is_why(&self) -> bool {
        matches!(self, Formula::Why(_))
    }
    /// Body of `!A`.
    pub fn unbang(&self) -> Option<&Formula> {
        match self {
            Formula::Bang(a) => Some(a),
            _ => None,
        }
    }
    /// Body of `?A`.
    pub fn unwhy(&self) -> Option<&Formula> {
        match self {
            Formula::Why(a) => Some(a),
            _ => None,
        }
    }

    /// Number of connective and atom nodes.
    pub fn size(&self) -> usize {
        if let Some((_, a)) = self.as_un() {
            1 + a.size()
        } else if let Some((_, a, b)) = self.as_bin() {
            1 + a.size() + b.size()
        } else {
            1
        }
    }

    /// Rank: 0 on atoms and constants, +1 per connective.
    pub fn rank(&self) -> usize {
        if let Some((_, a)) = self.as_un() {
            a.rank() + 1
        } else if let Some((_, a, b)) = self.as_bin() {
            a.rank() + b.rank() + 1
        } else {
            0
        }
    }

    /// All subformulas including `self`, in pre-order, without duplicates.
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        self.collect_subs(&mut out);
        out
    }
    fn collect_subs(&self, out: &mut Vec<Formula>) {
        if !out.contains(self) {
            out.push(self.clone());
        }
        if let Some((_, a)) = self.as_un() {
            a.collect_subs(out);
        } else if let Some((_, a, b)) = self.as_bin() {
            a.collect_subs(out);
            b.collect_subs(out);
        }
    }

    /// Variable names occurring in the formula.
    pub fn vars(&self, out: &mut Vec<Arc<str>>) {
        match self {
            Formula::Var(x) | Formula::DualVar(x) => {
                if !out.contains(x) {
                    out.push(x.clone())
                }
            }
            _ => {
                if let Some((_, a)) = self.as_un() {
                    a.vars(out);
                } else if let Some((_, a, b)) = self.as_bin() {
                    a.vars(out);
                    b.vars(out);
                }
            }
        }
    }

    pub fn in_language(&self, logic: LogicId) -> bool {
        in_language(self, logic)
    }

    /// Unicode rendering for human reports.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        pretty_into(self, &mut s);
        s
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("not a CLL formula: {0}")]
    NotCll(String),
}

/// Strict De Morgan dual on CLL formulas.
pub fn linear_dual(f: &Formula) -> Result<Formula, DualError> {
    if !in_language(f, LogicId::Cll) {
        return Err(DualError::NotCll(f.to_string()));
    }
    Ok(dual_unchecked(f))
}

pub(crate) fn dual_unchecked(f: &Formula) -> Formula {
    use Formula::*;
    match f {
        Var(x) => DualVar(x.clone()),
        DualVar(x) => Var(x.clone()),
        Top => Bot,
        Bot => Top,
        One => Zero,
        Zero => One,
        Bang(a) => Formula::why(dual_unchecked(a)),
        Why(a) => Formula::bang(dual_unchecked(a)),
        Tensor(a, b) => Formula::bin(Bin::Par, dual_unchecked(a), dual_unchecked(b)),
        Par(a, b) => Formula::bin(Bin::Tensor, dual_unchecked(a), dual_unchecked(b)),
        With(a, b) => Formula::bin(Bin::Plus, dual_unchecked(a), dual_unchecked(b)),
        Plus(a, b) => Formula::bin(Bin::With, dual_unchecked(a), dual_unchecked(b)),
        other => other.clone(),
    }
}

/// The seven logics' formula languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogicId {
    Cl,
    Il,
    Cll,
    Ill,
    /// ILLᵉ, shared by every ILC variant.
    Ille,
    /// ILᵉ.
    Ile,
    /// CLL⁻.
    CllMinus,
}

impl LogicId {
    pub const ALL: [LogicId; 7] = [
        LogicId::Cl,
        LogicId::Il,
        LogicId::Cll,
        LogicId::Ill,
        LogicId::Ille,
        LogicId::Ile,
        LogicId::CllMinus,
    ];
    pub fn name(self) -> &'static str {
        match self {
            LogicId::Cl => "cl",
            LogicId::Il => "il",
            LogicId::Cll => "cll",
            LogicId::Ill => "ill",
            LogicId::Ille => "ille",
            LogicId::Ile => "ile",
            LogicId::CllMinus => "cll-minus",
        }
    }
    /// Admissible node kinds, as a predicate on a single node.
    fn admits(self, f: &Formula) -> bool {
        use Formula::*;
        use LogicId::*;
        match (self, f) {
            (_, Var(_)) => true,
            (Cl, Tt | Ff | And(..) | Or(..) | CImp(..)) => true,
            (Il, Top | Ff | With(..) | Or(..) | IImp(..)) => true,
            (
                Cll,
                DualVar(_) | Top | Bot | One | Zero | Tensor(..) | Par(..) | With(..) | Plus(..)
                | Bang(_) | Why(_),
            ) => true,
            (Ill, Top | Tensor(..) | With(..) | Plus(..) | UImp(..) | Bang(_)) => true,
            (
                Ille,
                Top | Bot | One | Zero | Tensor(..) | Par(..) | With(..) | Plus(..) | Neg(_)
                | Bang(_) | Why(_),
            ) => true,
            (Ile, Top | Ff | With(..) | Or(..) | IImp(..) | Why(_)) => true,
            (CllMinus, Tt | Bot | And(..) | Plus(..) | LImp(..) | Bang(_)) => true,
            _ => false,
        }
    }
}

impl FromStr for LogicId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        LogicId::ALL
            .into_iter()
            .find(|l| l.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown logic `{s}`"))
    }
}

/// First node (pre-order) not admitted by `logic`.
pub fn offending_node(f: &Formula, logic: LogicId) -> Option<Formula> {
    if !logic.admits(f) {
        return Some(f.clone());
    }
    if let Some((_, a)) = f.as_un() {
        offending_node(a, logic)
    } else if let Some((_, a, b)) = f.as_bin() {
        offending_node(a, logic).or_else(|| offending_node(b, logic))
    } else {
        None
    }
}

pub fn in_language(f: &Formula, logic: LogicId) -> bool {
    offending_node(f, logic).is_none()
}

// ---------------------------------------------------------------- printing

fn bin_kw(op: Bin) -> &'static str {
    match op {
        Bin::Tensor => "tensor",
        Bin::Par => "par",
        Bin::With => "with",
        Bin::Plus => "plus",
        Bin::And => "and",
        Bin::Or => "or",
        Bin::IImp => "=>",
        Bin::CImp => "==>",
        Bin::UImp => "-o",
        Bin::LImp => "->>",
    }
}

fn bin_sym(op: Bin) -> &'static str {
    match op {
        Bin::Tensor => "⊗",
        Bin::Par => "⅋",
        Bin::With => "&",
        Bin::Plus => "⊕",
        Bin::And => "∧",
        Bin::Or => "∨",
        Bin::IImp => "⇒",
        Bin::CImp => "⇛",
        Bin::UImp => "⤳",
        Bin::LImp => "↬",
    }
}

/// Canonical ASCII. `¬A ⅋ B` is re-sugared as `(A -o B)`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Formula::*;
        match self {
            Var(x) => write!(f, "{x}"),
            DualVar(x) => write!(f, "{x}^"),
            Top => write!(f, "top"),
            Bot => write!(f, "bot"),
            One => write!(f, "1"),
            Zero => write!(f, "0"),
            Tt => write!(f, "tt"),
            Ff => write!(f, "ff"),
            Bang(a) => write!(f, "!{a}"),
            Why(a) => write!(f, "?{a}"),
            Neg(a) => write!(f, "neg {a}"),
            Par(a, b) if matches!(**a, Neg(_)) => {
                let Neg(a0) = &**a else { unreachable!() };
                write!(f, "({a0} -o {b})")
            }
            _ => {
                let (op, a, b) = self.as_bin().expect("binary");
                write!(f, "({a} {} {b})", bin_kw(op))
            }
        }
    }
}

fn pretty_into(g: &Formula, s: &mut String) {
    use Formula::*;
    match g {
        Var(x) => s.push_str(x),
        DualVar(x) => {
            s.push_str(x);
            s.push_str("^⊥")
        }
        Top => s.push('⊤'),
        Bot => s.push('⊥'),
        One => s.push('1'),
        Zero => s.push('0'),
        Tt => s.push_str("tt"),
        Ff => s.push_str("ff"),
        Bang(a) => {
            s.push('!');
            pretty_into(a, s)
        }
        Why(a) => {
            s.push('?');
            pretty_into(a, s)
        }
        Neg(a) => {
            s.push('¬');
            pretty_into(a, s)
        }
        _ => {
            let (op, a, b) = g.as_bin().expect("binary");
            s.push('(');
            pretty_into(a, s);
            s.push(' ');
            s.push_str(bin_sym(op));
            s.push(' ');
            pretty_into(b, s);
            s.push(')');
        }
    }
}

// ----------------------------------------------------------------- parsing

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("connective not in {logic}: `{node}`")]
    NotInLanguage { logic: &'static str, node: String },
}

const RESERVED: &[&str] = &[
    "top", "bot", "tt", "ff", "neg", "tensor", "par", "with", "plus", "and", "or", "star", "lstar",
];

/// Recursive-descent reader over a byte slice; reused by the proof-file and
/// sequent readers.
pub struct Reader<'a> {
    pub src: &'a str,
    pub pos: usize,
    logic: LogicId,
}

impl<'a> Reader<'a> {
    pub fn new(src: &'a str, logic: LogicId) -> Self {
        Reader { src, pos: 0, logic }
    }

    pub fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    /// Skips whitespace and `;` comments.
    pub fn skip_ws(&mut self) {
        let b = self.src.as_bytes();
        while self.pos < b.len() {
            match b[self.pos] {
                b' ' | b'\t' | b'\n' | b'\r' => self.pos += 1,
                b';' => {
                    while self.pos < b.len() && b[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
    }

    pub fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        if self.eat(lit) {
            Ok(())
        } else {
            self.err(format!("expected `{lit}`"))
        }
    }

    /// Identifier or keyword (letters, digits, `_`, `-`).
    pub fn word(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let b = self.src.as_bytes();
        let start = self.pos;
        if start < b.len() && b[start].is_ascii_alphabetic() {
            let mut end = start + 1;
            while end < b.len() && (b[end].is_ascii_alphanumeric() || b[end] == b'_') {
                end += 1;
            }
            self.pos = end;
            Some(&self.src[start..end])
        } else {
            None
        }
    }

    fn peek_word(&mut self) -> Option<&'a str> {
        let save = self.pos;
        let w = self.word();
        self.pos = save;
        w
    }

    pub fn formula(&mut self) -> Result<Formula, ParseError> {
        let f = self.formula_raw()?;
        if let Some(bad) = offending_node(&f, self.logic) {
            return Err(ParseError::NotInLanguage { logic: self.logic.name(), node: bad.to_string() });
        }
        Ok(f)
    }

    fn formula_raw(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'!') => {
                self.pos += 1;
                Ok(Formula::bang(self.formula_raw()?))
            }
            Some(b'?') => {
                self.pos += 1;
                Ok(Formula::why(self.formula_raw()?))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Formula::One)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Formula::Zero)
            }
            Some(b'(') => {
                self.pos += 1;
                if self.eat("~") {
                    let a = self.formula_raw()?;
                    self.expect(")")?;
                    return Ok(Formula::bin(Bin::CImp, a, Formula::Ff));
                }
                let a = self.formula_raw()?;
                if self.eat(")") {
                    return Ok(a);
                }
                let op = self.binop()?;
                let f = match op {
                    Op::Star => Formula::bin(Bin::IImp, a, Formula::Ff),
                    Op::LStar => Formula::bin(Bin::LImp, a, Formula::Bot),
                    Op::Bin(Bin::UImp) if self.logic != LogicId::Ill => {
                        let b = self.formula_raw()?;
                        Formula::lolli_e(a, b)
                    }
                    Op::Bin(op) => {
                        let b = self.formula_raw()?;
                        Formula::bin(op, a, b)
                    }
                };
                self.expect(")")?;
                Ok(f)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let w = self.word().expect("alphabetic");
                match w {
                    "top" => Ok(Formula::Top),
                    "bot" => Ok(Formula::Bot),
                    "tt" => Ok(Formula::Tt),
                    "ff" => Ok(Formula::Ff),
                    "neg" => Ok(Formula::neg(self.formula_raw()?)),
                    _ if RESERVED.contains(&w) => {
                        self.pos = start;
                        self.err(format!("unexpected keyword `{w}`"))
                    }
                    _ => {
                        if self.src.as_bytes().get(self.pos) == Some(&b'^') {
                            self.pos += 1;
                            Ok(Formula::dual_var(w))
                        } else {
                            Ok(Formula::var(w))
                        }
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
        }
    }

    fn binop(&mut self) -> Result<Op, ParseError> {
        for (lit, op) in [
            ("==>", Op::Bin(Bin::CImp)),
            ("=>", Op::Bin(Bin::IImp)),
            ("->>", Op::Bin(Bin::LImp)),
            ("-o", Op::Bin(Bin::UImp)),
        ] {
            if self.eat(lit) {
                return Ok(op);
            }
        }
        let op = match self.peek_word() {
            Some("tensor") => Op::Bin(Bin::Tensor),
            Some("par") => Op::Bin(Bin::Par),
            Some("with") => Op::Bin(Bin::With),
            Some("plus") => Op::Bin(Bin::Plus),
            Some("and") => Op::Bin(Bin::And),
            Some("or") => Op::Bin(Bin::Or),
            Some("star") => Op::Star,
            Some("lstar") => Op::LStar,
            _ => return self.err("expected a binary connective"),
        };
        self.word();
        Ok(op)
    }
}

enum Op {
    Bin(Bin),
    Star,
    LStar,
}

/// Parses one formula of `logic`; trailing input is an error.
pub fn parse_formula(text: &str, logic: LogicId) -> Result<Formula, ParseError> {
    let mut r = Reader::new(text, logic);
    let f = r.formula()?;
    if !r.at_end() {
        return r.err("trailing input");
    }
    Ok(f)
}

/// Parses without a language check. `-o` becomes `¬A ⅋ B`.
pub fn parse_any(text: &str) -> Result<Formula, ParseError> {
    let mut r = Reader::new(text, LogicId::Ille);
    let f = r.formula_raw()?;
    if !r.at_end() {
        return r.err("trailing input");
    }
    Ok(f)
}
