//! Rule identifiers shared by every calculus.

use std::fmt;

macro_rules! rules {
    ($( $id:ident => $kebab:literal, $label:literal, $arity:literal; )*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum RuleId { $($id,)* }

        impl RuleId {
            pub const ALL: &'static [RuleId] = &[$(RuleId::$id,)*];
            /// Proof-file spelling.
            pub fn name(self) -> &'static str {
                match self { $(RuleId::$id => $kebab,)* }
            }
            /// Label used in traces and diagnostics.
            pub fn label(self) -> &'static str {
                match self { $(RuleId::$id => $label,)* }
            }
            pub fn arity(self) -> usize {
                match self { $(RuleId::$id => $arity,)* }
            }
        }
    };
}

rules! {
    Xl => "xl", "XL", 1;
    Xr => "xr", "XR", 1;
    Wl => "wl", "WL", 1;
    Wr => "wr", "WR", 1;
    Cl => "cl", "CL", 1;
    Cr => "cr", "CR", 1;
    BangW => "bang-w", "!W", 1;
    WhyW => "why-w", "?W", 1;
    BangC => "bang-c", "!C", 1;
    WhyC => "why-c", "?C", 1;
    BangD => "bang-d", "!D", 1;
    WhyD => "why-d", "?D", 1;
    WhyL => "why-l", "?L", 1;
    BangR => "bang-r", "!R", 1;
    BangWhyL => "bang-why-l", "!?L", 1;
    WhyBangR => "why-bang-r", "?!R", 1;
    Id => "id", "Id", 0;
    Cut => "cut", "Cut", 2;
    CutWhy => "cut-why", "Cut?", 2;
    CutBang => "cut-bang", "Cut!", 2;
    TtL => "tt-l", "ttL", 1;
    TtR => "tt-r", "ttR", 0;
    TtLBang => "tt-l-bang", "ttL!", 1;
    FfL => "ff-l", "ffL", 0;
    FfR => "ff-r", "ffR", 1;
    FfRWhy => "ff-r-why", "ffR?", 1;
    TopL => "top-l", "⊤L", 1;
    TopR => "top-r", "⊤R", 0;
    BotL => "bot-l", "⊥L", 0;
    BotR => "bot-r", "⊥R", 1;
    OneR => "one-r", "1R", 0;
    ZeroL => "zero-l", "0L", 0;
    AndL => "and-l", "∧L", 1;
    AndR => "and-r", "∧R", 2;
    AndLBang => "and-l-bang", "∧L!", 1;
    OrL => "or-l", "∨L", 2;
    OrR => "or-r", "∨R", 1;
    OrRWhy => "or-r-why", "∨R?", 1;
    CImpL => "c-imp-l", "⇛L", 2;
    CImpR => "c-imp-r", "⇛R", 1;
    WithL => "with-l", "&L", 1;
    WithR => "with-r", "&R", 2;
    WithRWhy => "with-r-why", "&R?", 2;
    PlusL => "plus-l", "⊕L", 2;
    PlusR => "plus-r", "⊕R", 1;
    PlusLBang => "plus-l-bang", "⊕L!", 2;
    TensorL => "tensor-l", "⊗L", 1;
    TensorR => "tensor-r", "⊗R", 2;
    ParL => "par-l", "⅋L", 2;
    ParR => "par-r", "⅋R", 1;
    NegL => "neg-l", "¬L", 1;
    NegR => "neg-r", "¬R", 1;
    LDualL => "l-dual-l", "⊥L*", 1;
    LDualR => "l-dual-r", "⊥R*", 1;
    UImpL => "u-imp-l", "⤳L", 2;
    UImpR => "u-imp-r", "⤳R", 1;
    ClImpLBang => "cl-imp-l-bang", "↬L!", 2;
    ClImpRBang => "cl-imp-r-bang", "↬R!", 1;
    BangRBang => "bang-r-bang", "!R!", 1;
    IImpL => "i-imp-l", "⇒L", 2;
    IImpR => "i-imp-r", "⇒R", 1;
    IImpLWhy => "i-imp-l-why", "⇒L?", 2;
    IImpRWhy => "i-imp-r-why", "⇒R?", 1;
    WhyLWhy => "why-l-why", "?L?", 1;
    Dist => "dist", "Dist", 0;
    CutLn => "cut-ln", "CutL", 2;
    CutRn => "cut-rn", "CutR", 2;
    CutWB => "cut-wb", "Cut?!", 2;
    CutLnWB => "cut-ln-wb", "CutL?!", 2;
    CutRnWB => "cut-rn-wb", "CutR?!", 2;
    CutDistL => "cut-dist-l", "CutDistL", 1;
    CutDistR => "cut-dist-r", "CutDistR", 1;
}

impl RuleId {
    pub fn from_name(s: &str) -> Option<RuleId> {
        let s = match s {
            // the format sketch spells this one in camel case
            "ttR" => "tt-r",
            other => other,
        };
        RuleId::ALL.iter().copied().find(|r| r.name() == s)
    }

    /// Every member of the Cut family, user-visible or engine-internal.
    pub fn is_cut(self) -> bool {
        use RuleId::*;
        matches!(self, Cut | CutWhy | CutBang | CutLn | CutRn | CutWB | CutLnWB | CutRnWB | CutDistL | CutDistR)
    }

    /// Engine-only multicut forms; never accepted in user proofs.
    pub fn is_internal(self) -> bool {
        use RuleId::*;
        matches!(self, CutLn | CutRn | CutWB | CutLnWB | CutRnWB | CutDistL | CutDistR)
    }

    pub fn is_exchange(self) -> bool {
        matches!(self, RuleId::Xl | RuleId::Xr)
    }

    /// Whether the rule takes a branch index `:i`.
    pub fn takes_i(self) -> bool {
        use RuleId::*;
        matches!(self, AndL | AndLBang | OrR | OrRWhy | WithL | PlusR)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
