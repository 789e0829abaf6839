//! Command-line front end: check, translate, cut-eliminate and search.
//!
//! Exit codes: 0 success / true / found, 1 check failed / false / exhausted,
//! 2 parse or usage error, 3 fuel exhausted.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use seqcalc::cutelim::{eliminate_node, CutElimError, Options, DEFAULT_FUEL};
use seqcalc::normalize::commute_check;
use seqcalc::purity::is_tractable;
use seqcalc::search::{search_with, SearchConfig, Verdict};
use seqcalc::translate::{translate_proof, Edge};
use seqcalc::{
    check_proof, linear_dual, parse_formula, parse_proof, parse_sequent, CalculusId, LogicId, Proof, ViolationKind,
};

#[derive(Parser)]
#[command(name = "seqcalc", version, about = "Sequent calculus checker, translator, cut eliminator and prover")]
struct Cli {
    /// Also print a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a proof file in a calculus.
    Check {
        file: PathBuf,
        #[arg(long)]
        calculus: CalculusId,
    },
    /// Translate an LK/INC/CLC/LLJ/LJ proof along an edge.
    Translate {
        file: PathBuf,
        /// lk-inc, inc-ilc, lk-clc, clc-ilc, lk-ilc-n, lk-ilc-v, llj-ilc, lj-inc
        #[arg(long)]
        edge: Edge,
    },
    /// Eliminate the cuts of a proof.
    Cutelim {
        file: PathBuf,
        #[arg(long)]
        calculus: CalculusId,
        /// Print one line per reduction step.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
    /// Decide whether a proof is tractable for a ρ-calculus.
    Tractable {
        file: PathBuf,
        #[arg(long)]
        calculus: CalculusId,
    },
    /// Bounded cut-free proof search.
    Search {
        sequent: String,
        #[arg(long)]
        calculus: CalculusId,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        contraction_budget: u8,
    },
    /// Compare the two translations of an LK proof into ILC_ι.
    Commute { file: PathBuf },
    /// Rank of a formula.
    Rank {
        formula: String,
        #[arg(long, default_value = "ille")]
        logic: LogicId,
    },
    /// Linear-negation dual of a CLL formula.
    Dual { formula: String },
    /// Parse and pretty-print a formula, sequent or proof file.
    Parse {
        input: String,
        #[arg(long, default_value = "ille")]
        logic: LogicId,
    },
}

/// A failed command: exit code and message.
struct Fail(u8, String);

fn usage(msg: impl ToString) -> Fail {
    Fail(2, msg.to_string())
}

struct Report {
    code: u8,
    text: String,
    json: Value,
}

impl Report {
    fn new(code: u8, text: String, mut json: Value) -> Report {
        json["schema"] = json!(1);
        json["exit"] = json!(code);
        Report { code, text, json }
    }
}

fn load(path: &PathBuf, logic: LogicId) -> Result<Proof, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_proof(&text, logic).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn run(cmd: Cmd) -> Result<Report, Fail> {
    Ok(match cmd {
        Cmd::Check { file, calculus } => {
            let p = load(&file, calculus.logic())?;
            match check_proof(&p, calculus) {
                Ok(n) => Report::new(
                    0,
                    format!("ok: {} in {calculus} (depth {})", n.seq.pretty(), p.depth()),
                    json!({"command": "check", "ok": true, "sequent": n.seq.to_string(), "depth": p.depth()}),
                ),
                Err(v) => Report::new(
                    1,
                    format!("invalid in {calculus}: {v}"),
                    json!({"command": "check", "ok": false, "path": v.path, "rule": v.rule.name(), "message": v.to_string()}),
                ),
            }
        }
        Cmd::Translate { file, edge } => {
            let p = load(&file, edge.source().logic())?;
            let t = translate_proof(&p, edge).map_err(|e| Fail(1, format!("{edge}: {e}")))?;
            let seq = check_proof(&t, edge.target()).map_err(|v| Fail(1, format!("{edge}: image does not check: {v}")))?.seq.clone();
            Report::new(
                0,
                format!("; {} in {}\n{}", seq.pretty(), edge.target(), t.to_file_string()),
                json!({"command": "translate", "edge": edge.name(), "target": edge.target().name(),
                       "sequent": seq.to_string(), "proof": t.to_string()}),
            )
        }
        Cmd::Cutelim { file, calculus, trace, fuel } => {
            let p = load(&file, calculus.logic())?;
            let n = check_proof(&p, calculus).map_err(|v| Fail(1, format!("input does not check: {v}")))?;
            let mut lines = Vec::new();
            let out = eliminate_node(&n, calculus, &Options { fuel }, &mut |_, l| {
                if trace {
                    lines.push(l.to_string());
                }
            });
            match out {
                Ok(o) => {
                    let q = o.proof.to_proof();
                    let mut text = lines.join("\n");
                    if !text.is_empty() {
                        text.push('\n');
                    }
                    text.push_str(&format!("; {} steps\n{}", o.trace.len(), q.to_file_string()));
                    let steps: Vec<Value> = o
                        .trace
                        .iter()
                        .map(|t| json!({"case": t.case, "path": t.path, "rank": t.rank, "depth": t.depth}))
                        .collect();
                    Report::new(0, text, json!({"command": "cutelim", "steps": o.trace.len(), "trace": steps, "proof": q.to_string()}))
                }
                Err(e @ CutElimError::FuelExhausted(_)) => return Err(Fail(3, e.to_string())),
                Err(e @ CutElimError::Unsupported(_)) => return Err(usage(e)),
                Err(e) => return Err(Fail(1, e.to_string())),
            }
        }
        Cmd::Tractable { file, calculus } => {
            let p = load(&file, calculus.logic())?;
            let n = check_proof(&p, calculus.parent()).map_err(|v| Fail(1, format!("does not check in {}: {v}", calculus.parent())))?;
            match is_tractable(&n, calculus) {
                Ok(()) => Report::new(0, format!("tractable in {calculus}"), json!({"command": "tractable", "tractable": true})),
                Err(v) => {
                    let clause = match v.kind {
                        ViolationKind::NotTractable { clause } => clause,
                        _ => 0,
                    };
                    let what = if clause == 1 { "no ?!R" } else { "cut purity" };
                    Report::new(
                        1,
                        format!("not tractable in {calculus}: clause {clause} ({what}) violated at {:?}: {}", v.path, v.message),
                        json!({"command": "tractable", "tractable": false, "clause": clause, "path": v.path, "message": v.message}),
                    )
                }
            }
        }
        Cmd::Search { sequent, calculus, depth, contraction_budget } => {
            let goal = parse_sequent(&sequent, calculus.logic()).map_err(usage)?;
            let cfg = SearchConfig { contraction_budget, ..SearchConfig::new(depth) };
            let r = search_with(&goal, calculus, &cfg).map_err(usage)?;
            match r.verdict {
                Verdict::Found(p) => Report::new(
                    0,
                    format!("found ({} goals explored)\n{}", r.nodes_explored, p.to_file_string()),
                    json!({"command": "search", "found": true, "explored": r.nodes_explored, "proof": p.to_string()}),
                ),
                Verdict::Exhausted { bound } => Report::new(
                    1,
                    format!("exhausted at bound {bound} ({} goals explored)", r.nodes_explored),
                    json!({"command": "search", "found": false, "bound": bound, "explored": r.nodes_explored, "truncated": r.truncated}),
                ),
            }
        }
        Cmd::Commute { file } => {
            let p = load(&file, LogicId::Cl)?;
            let r = commute_check(&p).map_err(|e| Fail(1, e.to_string()))?;
            match &r.divergence {
                None => Report::new(
                    0,
                    format!("the two images coincide up to permutation\n{}", r.via_inc.to_proof().to_file_string()),
                    json!({"command": "commute", "commutes": true}),
                ),
                Some(d) => Report::new(
                    1,
                    format!("images differ at {:?}:\n  via INC: {}\n  via CLC: {}", d.path, d.via_inc, d.via_clc),
                    json!({"command": "commute", "commutes": false, "path": d.path, "via_inc": d.via_inc, "via_clc": d.via_clc}),
                ),
            }
        }
        Cmd::Rank { formula, logic } => {
            let f = parse_formula(&formula, logic).map_err(usage)?;
            Report::new(0, f.rank().to_string(), json!({"command": "rank", "formula": f.to_string(), "rank": f.rank()}))
        }
        Cmd::Dual { formula } => {
            let f = parse_formula(&formula, LogicId::Cll).map_err(usage)?;
            let d = linear_dual(&f).map_err(usage)?;
            Report::new(0, d.to_string(), json!({"command": "dual", "formula": f.to_string(), "dual": d.to_string()}))
        }
        Cmd::Parse { input, logic } => {
            let path = PathBuf::from(&input);
            if path.is_file() {
                let p = load(&path, logic)?;
                Report::new(0, p.to_file_string(), json!({"command": "parse", "kind": "proof", "text": p.to_string()}))
            } else if input.contains("|-") {
                let s = parse_sequent(&input, logic).map_err(usage)?;
                Report::new(0, s.to_string(), json!({"command": "parse", "kind": "sequent", "text": s.to_string()}))
            } else {
                let f = parse_formula(&input, logic).map_err(usage)?;
                Report::new(0, f.to_string(), json!({"command": "parse", "kind": "formula", "text": f.to_string()}))
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.cmd) {
        Ok(r) => {
            // a closed pipe (e.g. `| head`) is not an error
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{}", r.text.trim_end());
            if json {
                let _ = writeln!(out, "{}", r.json);
            }
            ExitCode::from(r.code)
        }
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            if json {
                println!("{}", json!({"schema": 1, "exit": code, "error": msg}));
            }
            ExitCode::from(code)
        }
    }
}
