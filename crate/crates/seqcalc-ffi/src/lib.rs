//! C ABI for seqcalc.
//!
//! Proofs cross the boundary as opaque `SeqcalcProof` handles owned by the
//! caller and released with `seqcalc_proof_free`; strings returned by the
//! library are released with `seqcalc_string_free`. Every fallible call
//! returns a `SeqcalcStatus`; the message of the last failure on the calling
//! thread is available from `seqcalc_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use seqcalc::cutelim::{eliminate_node, CutElimError, Options};
use seqcalc::normalize::commute_check;
use seqcalc::purity::is_tractable;
use seqcalc::search::{search_with, SearchConfig, Verdict};
use seqcalc::translate::{translate_proof, Edge};
use seqcalc::{check_proof, parse_formula, parse_proof, parse_sequent, CalculusId, LogicId, Proof};

/// Result of a library call. The numbering follows the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqcalcStatus {
    Ok = 0,
    /// The proof does not check / is not tractable / search exhausted /
    /// the routes differ.
    False = 1,
    ParseError = 2,
    FuelExhausted = 3,
    /// Unknown calculus, logic or edge name, or an unsupported operation.
    InvalidArgument = 4,
    NullPointer = 5,
    /// A translation or reduction failed internally.
    Internal = 6,
}

/// An unchecked proof tree.
pub struct SeqcalcProof {
    proof: Proof,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: SeqcalcStatus, msg: impl ToString) -> SeqcalcStatus {
    let msg = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, SeqcalcStatus> {
    if s.is_null() {
        return Err(fail(SeqcalcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(SeqcalcStatus::ParseError, "argument is not UTF-8"))
}

unsafe fn named<T: std::str::FromStr<Err = String>>(s: *const c_char) -> Result<T, SeqcalcStatus> {
    text(s)?.parse().map_err(|e: String| fail(SeqcalcStatus::InvalidArgument, e))
}

unsafe fn proof<'a>(p: *const SeqcalcProof) -> Result<&'a Proof, SeqcalcStatus> {
    p.as_ref().map(|h| &h.proof).ok_or_else(|| fail(SeqcalcStatus::NullPointer, "null proof handle"))
}

fn give(out: *mut *mut SeqcalcProof, proof: Proof) -> SeqcalcStatus {
    // SAFETY: callers checked `out` for null
    unsafe { *out = Box::into_raw(Box::new(SeqcalcProof { proof })) };
    SeqcalcStatus::Ok
}

fn string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn status(r: Result<SeqcalcStatus, SeqcalcStatus>) -> SeqcalcStatus {
    r.unwrap_or_else(|s| s)
}

macro_rules! out_ptr {
    ($out:expr) => {
        if $out.is_null() {
            return fail(SeqcalcStatus::NullPointer, "null output pointer");
        }
    };
}

/// Message of the last failed call on this thread (empty if none). The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn seqcalc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a proof in the file format over the formulas of `logic`
/// (`cl`, `il`, `cll`, `ill`, `ille`, `ile`, `cll-minus`).
///
/// # Safety
/// `src` and `logic` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_proof_parse(
    src: *const c_char,
    logic: *const c_char,
    out: *mut *mut SeqcalcProof,
) -> SeqcalcStatus {
    out_ptr!(out);
    status((|| {
        let logic: LogicId = named(logic)?;
        let p = parse_proof(text(src)?, logic).map_err(|e| fail(SeqcalcStatus::ParseError, e))?;
        Ok(give(out, p))
    })())
}

/// Releases a proof handle; null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_proof_free(p: *mut SeqcalcProof) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The proof in the file format; free with `seqcalc_string_free`.
///
/// # Safety
/// `p` must be a live handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn seqcalc_proof_to_string(p: *const SeqcalcProof) -> *mut c_char {
    match proof(p) {
        Ok(p) => string(p.to_file_string()),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks a proof in `calculus` (`lk`, `lj`, `ilc`, `ilc-iota`, `ilc-rho`, ...).
/// On success writes the end sequent (free with `seqcalc_string_free`) to
/// `sequent` if it is non-null. A proof that does not check yields `False`.
///
/// # Safety
/// `p` must be a live handle, `calculus` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_check(
    p: *const SeqcalcProof,
    calculus: *const c_char,
    sequent: *mut *mut c_char,
) -> SeqcalcStatus {
    status((|| {
        let p = proof(p)?;
        let c: CalculusId = named(calculus)?;
        let n = check_proof(p, c).map_err(|v| fail(SeqcalcStatus::False, v))?;
        if !sequent.is_null() {
            *sequent = string(n.seq.to_string());
        }
        Ok(SeqcalcStatus::Ok)
    })())
}

/// Translates a proof along an edge (`lk-inc`, `inc-ilc`, `lk-clc`,
/// `clc-ilc`, `lk-ilc-n`, `lk-ilc-v`, `llj-ilc`, `lj-inc`).
///
/// # Safety
/// `p` must be a live handle, `edge` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_translate(
    p: *const SeqcalcProof,
    edge: *const c_char,
    out: *mut *mut SeqcalcProof,
) -> SeqcalcStatus {
    out_ptr!(out);
    status((|| {
        let p = proof(p)?;
        let e: Edge = named(edge)?;
        let t = translate_proof(p, e).map_err(|err| fail(SeqcalcStatus::Internal, err))?;
        Ok(give(out, t))
    })())
}

/// Eliminates the cuts of a proof in an ILC-family calculus, INC or CLC
/// within `fuel` reduction steps (0 selects the default).
///
/// # Safety
/// `p` must be a live handle, `calculus` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_eliminate_cuts(
    p: *const SeqcalcProof,
    calculus: *const c_char,
    fuel: usize,
    out: *mut *mut SeqcalcProof,
) -> SeqcalcStatus {
    out_ptr!(out);
    status((|| {
        let p = proof(p)?;
        let c: CalculusId = named(calculus)?;
        let n = check_proof(p, c).map_err(|v| fail(SeqcalcStatus::False, v))?;
        let opts = if fuel == 0 { Options::default() } else { Options { fuel } };
        let o = eliminate_node(&n, c, &opts, &mut |_, _| {}).map_err(|e| {
            let s = match e {
                CutElimError::FuelExhausted(_) => SeqcalcStatus::FuelExhausted,
                CutElimError::Unsupported(_) => SeqcalcStatus::InvalidArgument,
                _ => SeqcalcStatus::Internal,
            };
            fail(s, e)
        })?;
        Ok(give(out, o.proof.to_proof()))
    })())
}

/// Whether a proof that checks in the parent calculus is tractable for the
/// ρ-calculus `calculus`. `clause` (if non-null) receives the violated
/// clause: 1 for `?!R`, 2 for cut purity, 0 when tractable.
///
/// # Safety
/// `p` must be a live handle, `calculus` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_is_tractable(
    p: *const SeqcalcProof,
    calculus: *const c_char,
    clause: *mut u8,
) -> SeqcalcStatus {
    status((|| {
        let p = proof(p)?;
        let c: CalculusId = named(calculus)?;
        let n = check_proof(p, c.parent()).map_err(|v| fail(SeqcalcStatus::InvalidArgument, v))?;
        let k = match is_tractable(&n, c) {
            Ok(()) => 0,
            Err(v) => {
                fail(SeqcalcStatus::False, &v);
                match v.kind {
                    seqcalc::ViolationKind::NotTractable { clause } => clause,
                    _ => 0,
                }
            }
        };
        if !clause.is_null() {
            *clause = k;
        }
        Ok(if k == 0 { SeqcalcStatus::Ok } else { SeqcalcStatus::False })
    })())
}

/// Whether the two translations of an LK proof into ILC_ι agree up to
/// permutations; a divergence is described by `seqcalc_last_error`.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_commute(p: *const SeqcalcProof) -> SeqcalcStatus {
    status((|| {
        let r = commute_check(proof(p)?).map_err(|e| fail(SeqcalcStatus::Internal, e))?;
        Ok(match r.divergence {
            None => SeqcalcStatus::Ok,
            Some(d) => fail(SeqcalcStatus::False, format!("at {:?}: {} vs {}", d.path, d.via_inc, d.via_clc)),
        })
    })())
}

/// Bounded cut-free search for `sequent` (e.g. `"!?X |- ?!X"`). `Ok` with
/// a proof in `out`, or `False` when the bound is exhausted.
///
/// # Safety
/// `sequent` and `calculus` must be NUL-terminated strings, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_search(
    sequent: *const c_char,
    calculus: *const c_char,
    depth: usize,
    contraction_budget: u8,
    out: *mut *mut SeqcalcProof,
) -> SeqcalcStatus {
    out_ptr!(out);
    status((|| {
        let c: CalculusId = named(calculus)?;
        let goal = parse_sequent(text(sequent)?, c.logic()).map_err(|e| fail(SeqcalcStatus::ParseError, e))?;
        let cfg = SearchConfig { contraction_budget, ..SearchConfig::new(depth) };
        let r = search_with(&goal, c, &cfg).map_err(|e| fail(SeqcalcStatus::InvalidArgument, e))?;
        Ok(match r.verdict {
            Verdict::Found(p) => give(out, p),
            Verdict::Exhausted { bound } => fail(SeqcalcStatus::False, format!("exhausted at bound {bound}")),
        })
    })())
}

/// Rank of a formula of `logic`.
///
/// # Safety
/// `formula` and `logic` must be NUL-terminated strings, `rank` writable.
#[no_mangle]
pub unsafe extern "C" fn seqcalc_formula_rank(
    formula: *const c_char,
    logic: *const c_char,
    rank: *mut usize,
) -> SeqcalcStatus {
    out_ptr!(rank);
    status((|| {
        let l: LogicId = named(logic)?;
        let f = parse_formula(text(formula)?, l).map_err(|e| fail(SeqcalcStatus::ParseError, e))?;
        *rank = f.rank();
        Ok(SeqcalcStatus::Ok)
    })())
}
