//! One function per verb: a JSON body and an exit code.

use mulecheck_core::classify::{sweep as run_sweep, JoinFamily, SweepRow};
use mulecheck_core::graph::{
    all_graphs_up_to, chromatic_number, clique_number, contains_clique_join, invariants as graph_invariants,
    to_graph6, Graph,
};
use mulecheck_core::listcolor::{degree_minus, is_f_choosable, Choosability, ChoosabilityOptions};
use mulecheck_core::mules::{reduce_delta, verify_mule, ReduceError};
use mulecheck_core::Budget;
use serde_json::{json, Value};

use crate::args::Family;

pub const HOLDS: u8 = 0;
pub const FAILS: u8 = 1;
pub const INDETERMINATE: u8 = 2;
pub const USAGE: u8 = 64;

pub struct Outcome {
    pub code: u8,
    pub body: Result<Value, String>,
}

impl Outcome {
    fn ok(code: u8, body: Value) -> Self {
        Outcome { code, body: Ok(body) }
    }

    fn invalid(e: impl std::fmt::Display) -> Self {
        Outcome { code: USAGE, body: Err(e.to_string()) }
    }
}

fn verdict_code(c: Choosability) -> u8 {
    match c {
        Choosability::Choosable => HOLDS,
        Choosability::NotChoosable => FAILS,
        Choosability::Indeterminate => INDETERMINATE,
    }
}

fn holds(b: bool) -> u8 {
    if b {
        HOLDS
    } else {
        FAILS
    }
}

pub fn family(f: Family, t: Option<usize>) -> Result<JoinFamily, String> {
    match (f, t) {
        (Family::Kt, Some(t)) if t >= 4 => Ok(JoinFamily::Clique(t)),
        (Family::Kt, Some(t)) => Err(format!("--family kt needs t >= 4, got {t}")),
        (Family::Kt, None) => Err("--family kt needs --t".into()),
        (Family::K3, None | Some(3)) => Ok(JoinFamily::Clique(3)),
        (Family::E2, None) => Ok(JoinFamily::E2),
        (_, Some(_)) => Err("--t only goes with --family kt".into()),
    }
}

fn options(budget: Budget, threads: usize) -> ChoosabilityOptions {
    ChoosabilityOptions::with_budget(budget).threads(threads)
}

pub fn invariants(g: &Graph) -> Outcome {
    match graph_invariants(g) {
        Ok(inv) => Outcome::ok(
            HOLDS,
            json!({
                "invariants": inv,
                "min_degree": g.min_degree(),
                "connected": g.is_connected(),
            }),
        ),
        Err(e) => Outcome::invalid(e),
    }
}

pub fn choosable(
    g: &Graph,
    r: Option<i64>,
    f: Option<&[i64]>,
    symmetry: bool,
    max_pot: Option<usize>,
    budget: Budget,
    threads: usize,
) -> Outcome {
    let f: Vec<i64> = match (r, f) {
        (Some(r), _) => degree_minus(g, r),
        (None, Some(f)) => f.to_vec(),
        (None, None) => unreachable!("checked by the caller"),
    };
    let mut opts = options(budget, threads);
    opts.symmetry = symmetry;
    opts.max_pot = max_pot;
    match is_f_choosable(g, &f, &opts) {
        Ok(v) => Outcome::ok(verdict_code(v.status), json!({ "f": f, "verdict": v })),
        Err(e) => Outcome::invalid(e),
    }
}

pub fn classify(b: &Graph, fam: JoinFamily, check: bool, budget: Budget, threads: usize) -> Outcome {
    let predicted = match fam.predict(b) {
        Ok(p) => p,
        Err(e) => return Outcome::invalid(e),
    };
    if !check {
        return Outcome::ok(
            holds(predicted.predicted_choosable),
            json!({ "family": fam, "predicted": predicted }),
        );
    }
    let g = match b.join(&fam.left()) {
        Ok(g) => g,
        Err(e) => return Outcome::invalid(e),
    };
    match is_f_choosable(&g, &degree_minus(&g, 1), &options(budget, threads).symmetric()) {
        Ok(v) => {
            let consistent = v.choosable().map(|c| match fam {
                JoinFamily::E2 => !predicted.predicted_choosable || c,
                JoinFamily::Clique(_) => predicted.predicted_choosable == c,
            });
            Outcome::ok(
                verdict_code(v.status),
                json!({
                    "family": fam,
                    "predicted": predicted,
                    "join": to_graph6(&g),
                    "checker": v,
                    "consistent": consistent,
                }),
            )
        }
        Err(e) => Outcome::invalid(e),
    }
}

pub fn mule(g: &Graph, name: Option<&str>, k: Option<usize>) -> Outcome {
    let k = match k {
        Some(k) => k,
        None => match chromatic_number(g) {
            Ok(c) => c,
            Err(e) => return Outcome::invalid(e),
        },
    };
    match verify_mule(g, k) {
        Ok(mut r) => {
            if let Some(n) = name {
                r.name = n.to_string();
            }
            Outcome::ok(holds(!r.in_c_kj.is_empty()), json!(r))
        }
        Err(e) => Outcome::invalid(e),
    }
}

pub fn reduce(g: &Graph, k: usize, j: usize, chain: bool, budget: Budget) -> Outcome {
    let mut steps = Vec::new();
    let mut cur = g.clone();
    let mut k = k;
    let (code, stopped) = loop {
        match reduce_delta(&cur, k, j, budget) {
            Ok(r) => {
                cur = r.graph.clone();
                k = r.k;
                steps.push(r);
                if !chain {
                    break (HOLDS, None);
                }
            }
            Err(e) => {
                let code = match (&e, steps.is_empty()) {
                    (ReduceError::Budget(_), _) => INDETERMINATE,
                    (ReduceError::Precondition(_), false) => HOLDS,
                    (ReduceError::Graph(_), true) => USAGE,
                    _ => FAILS,
                };
                break (code, Some(e.to_string()));
            }
        }
    };
    Outcome::ok(code, json!({ "steps": steps, "stopped": stopped }))
}

pub fn bk_check(g: &Graph) -> Outcome {
    let chi = match chromatic_number(g) {
        Ok(c) => c,
        Err(e) => return Outcome::invalid(e),
    };
    let omega = clique_number(g);
    let delta = g.max_degree();
    let bound = omega.max(delta.saturating_sub(1));
    Outcome::ok(
        holds(chi <= bound),
        json!({
            "chi": chi,
            "omega": omega,
            "delta": delta,
            "bound": bound,
            "holds": chi <= bound,
            "delta_at_least_9": delta >= 9,
        }),
    )
}

pub fn contains_join(g: &Graph, s: usize, t: Option<usize>) -> Outcome {
    let t = t.unwrap_or_else(|| g.max_degree().saturating_sub(s));
    let w = contains_clique_join(g, s, t);
    Outcome::ok(holds(w.is_some()), json!({ "s": s, "t": t, "witness": w }))
}

pub fn sweep(fam: JoinFamily, max_order: usize, budget: Budget) -> Outcome {
    let graphs = all_graphs_up_to(max_order);
    let opts = ChoosabilityOptions::with_budget(budget).symmetric();
    let rows: Vec<SweepRow> = match run_sweep(fam, &graphs, &opts) {
        Ok(r) => r,
        Err(e) => return Outcome::invalid(e),
    };
    let bad = rows.iter().filter(|r| r.consistent == Some(false)).count();
    let open = rows.iter().filter(|r| r.consistent.is_none()).count();
    let code = if bad > 0 {
        FAILS
    } else if open > 0 {
        INDETERMINATE
    } else {
        HOLDS
    };
    Outcome::ok(
        code,
        json!({ "family": fam, "graphs": rows.len(), "inconsistent": bad, "indeterminate": open, "rows": rows }),
    )
}
