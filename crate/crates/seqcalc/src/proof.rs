//! Sequents, proof trees and the proof-file format.

use std::fmt;

use crate::rules::RuleId;
use crate::syntax::{Formula, LogicId, ParseError, Reader};

/// `left ⊢ right`; order matters because exchange is an explicit rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Sequent {
    pub left: Vec<Formula>,
    pub right: Vec<Formula>,
}

impl Sequent {
    pub fn new(left: Vec<Formula>, right: Vec<Formula>) -> Self {
        Sequent { left, right }
    }

    pub fn side(&self, s: Side) -> &Vec<Formula> {
        match s {
            Side::L => &self.left,
            Side::R => &self.right,
        }
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.left.iter().chain(self.right.iter())
    }

    pub fn pretty(&self) -> String {
        let l: Vec<_> = self.left.iter().map(|f| f.pretty()).collect();
        let r: Vec<_> = self.right.iter().map(|f| f.pretty()).collect();
        format!("{} ⊢ {}", l.join(", "), r.join(", ")).trim().to_string()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<_> = self.left.iter().map(|x| x.to_string()).collect();
        let r: Vec<_> = self.right.iter().map(|x| x.to_string()).collect();
        write!(f, "{} |- {}", l.join(", "), r.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

/// `A, B |- C` (either side may be empty).
pub fn parse_sequent(text: &str, logic: LogicId) -> Result<Sequent, ParseError> {
    let mut r = Reader::new(text, logic);
    let left = formula_list_until(&mut r, "|-")?;
    r.expect("|-")?;
    let right = formula_list_until(&mut r, "")?;
    if !r.at_end() {
        return r.err("trailing input");
    }
    Ok(Sequent::new(left, right))
}

fn formula_list_until(r: &mut Reader<'_>, stop: &str) -> Result<Vec<Formula>, ParseError> {
    let mut out = Vec::new();
    r.skip_ws();
    if r.at_end() || (!stop.is_empty() && r.src[r.pos..].starts_with(stop)) {
        return Ok(out);
    }
    loop {
        out.push(r.formula()?);
        if !r.eat(",") {
            return Ok(out);
        }
    }
}

/// Rule parameters. Which fields a rule reads is fixed per rule; unused
/// fields must be absent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Params {
    /// Branch index, 1 or 2.
    pub i: Option<u8>,
    /// Exchange position, or cut occurrence in the left premise's succedent.
    pub at: Option<usize>,
    /// Context split point of a multiplicative binary rule (validated only).
    pub split: Option<usize>,
    /// Weakened / principal / axiom formula.
    pub intro: Option<Formula>,
    /// Explicit contexts of the leaves `1R` and `0L`.
    pub left: Option<Vec<Formula>>,
    pub right: Option<Vec<Formula>>,
    /// Occurrence list of an internal multicut.
    pub occ: Option<Vec<usize>>,
}

impl Params {
    pub fn none() -> Self {
        Params::default()
    }
    pub fn at(k: usize) -> Self {
        Params { at: Some(k), ..Params::default() }
    }
    pub fn intro(f: Formula) -> Self {
        Params { intro: Some(f), ..Params::default() }
    }
    pub fn branch(i: u8, f: Formula) -> Self {
        Params { i: Some(i), intro: Some(f), ..Params::default() }
    }
    pub fn ctx(left: Vec<Formula>, right: Vec<Formula>) -> Self {
        Params { left: Some(left), right: Some(right), ..Params::default() }
    }
    pub fn multicut(at: usize, occ: Vec<usize>) -> Self {
        Params { at: Some(at), occ: Some(occ), ..Params::default() }
    }
}

/// A proof tree. Conclusions are recomputed by the checker, never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Proof {
    pub rule: RuleId,
    pub params: Params,
    pub premises: Vec<Proof>,
}

impl Proof {
    pub fn new(rule: RuleId, params: Params, premises: Vec<Proof>) -> Self {
        Proof { rule, params, premises }
    }

    pub fn id(f: Formula) -> Self {
        Proof::new(RuleId::Id, Params::intro(f), vec![])
    }

    /// 0 at leaves, +1 per unary rule, max+1 per binary rule.
    pub fn depth(&self) -> usize {
        self.premises.iter().map(|p| p.depth() + 1).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }

    pub fn count_rule(&self, pred: &dyn Fn(RuleId) -> bool) -> usize {
        usize::from(pred(self.rule)) + self.premises.iter().map(|p| p.count_rule(pred)).sum::<usize>()
    }

    pub fn is_cut_free(&self) -> bool {
        self.count_rule(&|r| r.is_cut()) == 0
    }

    /// Subproof at a path of premise indices.
    pub fn at_path(&self, path: &[usize]) -> Option<&Proof> {
        let mut p = self;
        for &k in path {
            p = p.premises.get(k)?;
        }
        Some(p)
    }

    /// Proof-file rendering, one rule per line.
    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        self.write_indented(&mut s, 0);
        s.push('\n');
        s
    }

    fn write_indented(&self, s: &mut String, ind: usize) {
        for _ in 0..ind {
            s.push_str("  ");
        }
        s.push('(');
        s.push_str(self.rule.name());
        let p = &self.params;
        if let Some(i) = p.i {
            s.push_str(&format!(" :i {i}"));
        }
        if let Some(k) = p.at {
            s.push_str(&format!(" :at {k}"));
        }
        if let Some(k) = p.split {
            s.push_str(&format!(" :split {k}"));
        }
        if let Some(occ) = &p.occ {
            let v: Vec<_> = occ.iter().map(|k| k.to_string()).collect();
            s.push_str(&format!(" :occ [{}]", v.join(", ")));
        }
        if let Some(f) = &p.intro {
            if matches!(self.rule, RuleId::Id | RuleId::Dist) {
                s.push_str(&format!(" {f}"));
            } else {
                s.push_str(&format!(" :intro {f}"));
            }
        }
        for (key, list) in [("left", &p.left), ("right", &p.right)] {
            if let Some(l) = list {
                let v: Vec<_> = l.iter().map(|f| f.to_string()).collect();
                s.push_str(&format!(" :{key} [{}]", v.join(", ")));
            }
        }
        for q in &self.premises {
            s.push('\n');
            q.write_indented(s, ind + 1);
        }
        s.push(')');
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_file_string().trim_end())
    }
}

/// Reads a proof file whose formulas belong to `logic`.
pub fn parse_proof(text: &str, logic: LogicId) -> Result<Proof, ParseError> {
    let mut r = Reader::new(text, logic);
    let p = proof_node(&mut r)?;
    if !r.at_end() {
        return r.err("trailing input after proof");
    }
    Ok(p)
}

fn proof_node(r: &mut Reader<'_>) -> Result<Proof, ParseError> {
    r.expect("(")?;
    r.skip_ws();
    let start = r.pos;
    let b = r.src.as_bytes();
    let mut end = start;
    while end < b.len() && (b[end].is_ascii_alphanumeric() || b[end] == b'-' || b[end] == b'_') {
        end += 1;
    }
    let name = &r.src[start..end];
    let Some(rule) = RuleId::from_name(name) else {
        return r.err(format!("unknown rule `{name}`"));
    };
    r.pos = end;
    let mut params = Params::default();
    if matches!(rule, RuleId::Id | RuleId::Dist) {
        params.intro = Some(r.formula()?);
    }
    while r.eat(":") {
        let key = r.word().unwrap_or("");
        match key {
            "i" => {
                let n = number(r)?;
                if n != 1 && n != 2 {
                    return r.err("`:i` must be 1 or 2");
                }
                params.i = Some(n as u8);
            }
            "at" => params.at = Some(number(r)?),
            "split" => params.split = Some(number(r)?),
            "intro" => params.intro = Some(r.formula()?),
            "left" => params.left = Some(formula_list(r)?),
            "right" => params.right = Some(formula_list(r)?),
            "occ" => {
                r.expect("[")?;
                let mut v = Vec::new();
                if !r.eat("]") {
                    loop {
                        v.push(number(r)?);
                        if r.eat("]") {
                            break;
                        }
                        r.expect(",")?;
                    }
                }
                params.occ = Some(v);
            }
            other => return r.err(format!("unknown parameter `:{other}`")),
        }
    }
    let mut premises = Vec::new();
    while r.peek() == Some(b'(') {
        premises.push(proof_node(r)?);
    }
    r.expect(")")?;
    Ok(Proof { rule, params, premises })
}

fn number(r: &mut Reader<'_>) -> Result<usize, ParseError> {
    r.skip_ws();
    let b = r.src.as_bytes();
    let start = r.pos;
    while r.pos < b.len() && b[r.pos].is_ascii_digit() {
        r.pos += 1;
    }
    r.src[start..r.pos].parse().or_else(|_| {
        r.pos = start;
        r.err("expected a number")
    })
}

fn formula_list(r: &mut Reader<'_>) -> Result<Vec<Formula>, ParseError> {
    r.expect("[")?;
    let mut v = Vec::new();
    if r.eat("]") {
        return Ok(v);
    }
    loop {
        v.push(r.formula()?);
        if r.eat("]") {
            return Ok(v);
        }
        r.expect(",")?;
    }
}
