//! A proof-theory engine for a family of sequent calculi spanning classical,
//! intuitionistic and linear logics: formula syntax, proof checking, proof
//! translations between the calculi, purity/tractability, cut elimination and
//! bounded proof search.

pub mod calculi;
pub mod cutelim;
pub mod gen;
pub mod normalize;
pub mod proof;
pub mod purity;
pub mod rules;
pub mod search;
pub mod structural;
pub mod syntax;
pub mod translate;

pub use calculi::{
    check_proof, end_sequent, in_subcalculus, subformula_property, CalculusId, Marker, Node, Violation, ViolationKind,
};
pub use proof::{parse_proof, parse_sequent, Params, Proof, Sequent, Side};
pub use rules::RuleId;
pub use syntax::{linear_dual, parse_formula, Formula, LogicId};
