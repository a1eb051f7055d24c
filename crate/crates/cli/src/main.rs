//! `mulecheck`: JSON verdicts and exit codes for scripted runs.

mod args;
mod input;
mod verbs;

use std::process::ExitCode;

use clap::Parser;
use mulecheck_core::Budget;
use serde_json::{json, Value};

use args::{Cli, Common, Verb};
use input::{parse_records, read_source, Record};
use verbs::{Outcome, USAGE};

pub const SCHEMA: &str = "mulecheck/v1";

fn budget_from(time_limit: Option<f64>, node_limit: Option<u64>) -> Result<Budget, String> {
    let mut b = Budget::DEFAULT;
    if let Ok(spec) = std::env::var("MULECHECK_BUDGET") {
        let (secs, nodes) = spec
            .split_once(':')
            .ok_or_else(|| format!("MULECHECK_BUDGET must look like <seconds>:<nodes>, got `{spec}`"))?;
        let secs: f64 =
            secs.trim().parse().map_err(|_| format!("bad seconds in MULECHECK_BUDGET: `{secs}`"))?;
        b.max_nodes =
            nodes.trim().parse().map_err(|_| format!("bad node count in MULECHECK_BUDGET: `{nodes}`"))?;
        b.max_millis = millis(secs)?;
    }
    if let Some(s) = time_limit {
        b.max_millis = millis(s)?;
    }
    if let Some(n) = node_limit {
        b.max_nodes = n;
    }
    Ok(b)
}

fn millis(secs: f64) -> Result<u64, String> {
    if !secs.is_finite() || secs < 0.0 {
        return Err(format!("time limit must be finite and non-negative, got {secs}"));
    }
    Ok((secs * 1000.0).round() as u64)
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("mulecheck: {message}");
    ExitCode::from(USAGE)
}

fn emit(v: &Value, pretty: bool) {
    let s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    println!("{}", s.expect("json values serialize"));
}

fn envelope(verb: &str, budget: Budget, source: Value, o: Outcome) -> (u8, Value) {
    let mut v = json!({
        "schema": SCHEMA,
        "verb": verb,
        "budget": budget,
        "exit": o.code,
    });
    let m = v.as_object_mut().unwrap();
    if let Value::Object(src) = source {
        m.extend(src);
    }
    match o.body {
        Ok(r) => m.insert("result".into(), r),
        Err(e) => m.insert("error".into(), Value::String(e)),
    };
    (o.code, v)
}

/// Graphs named with `--name`, else those read from the input.
fn load(common: &Common, name: Option<&str>) -> Result<Vec<(Value, Record)>, String> {
    if let Some(n) = name {
        let g = mulecheck_core::mules::mule(n).map_err(|e| e.to_string())?;
        return Ok(vec![(json!({ "name": n }), Record { line: 0, graph: g })]);
    }
    let text = read_source(common.input.as_deref()).map_err(|e| e.to_string())?;
    let recs = parse_records(&text, common.format).map_err(|e| e.to_string())?;
    Ok(recs
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            let src = json!({
                "record": i,
                "line": r.line,
                "graph6": mulecheck_core::graph::to_graph6(&r.graph),
            });
            (src, r)
        })
        .collect())
}

fn run_records(
    verb: &str,
    common: &Common,
    name: Option<&str>,
    work: impl Fn(&Record, Budget, usize) -> Outcome + Sync,
) -> ExitCode {
    let budget = match budget_from(common.time_limit, common.node_limit) {
        Ok(b) => b,
        Err(e) => return usage(e),
    };
    let records = match load(common, name) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let jobs = common.jobs.max(1);
    let inner = if records.len() == 1 { jobs } else { 1 };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let outs: Vec<(u8, Value)> = pool.install(|| {
        use rayon::prelude::*;
        records
            .into_par_iter()
            .map(|(src, rec)| envelope(verb, budget, src, work(&rec, budget, inner)))
            .collect()
    });
    let mut code = 0;
    for (c, v) in &outs {
        code = code.max(*c);
        emit(v, common.pretty);
    }
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.verb {
        Verb::Invariants { common } => {
            run_records("invariants", &common, None, |r, _, _| verbs::invariants(&r.graph))
        }
        Verb::Choosable { common, r, f, symmetry, max_pot } => {
            if r.is_none() && f.is_none() {
                return usage("choosable needs --r or --f");
            }
            run_records("choosable", &common, None, |rec, budget, threads| {
                verbs::choosable(&rec.graph, r, f.as_deref(), symmetry, max_pot, budget, threads)
            })
        }
        Verb::Classify { common, family, t, check } => {
            let fam = match verbs::family(family, t) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            run_records("classify", &common, None, |rec, budget, threads| {
                verbs::classify(&rec.graph, fam, check, budget, threads)
            })
        }
        Verb::Mule { common, name, k } => {
            let k = match (k, name.as_deref()) {
                (Some(k), _) => Some(k),
                (None, Some(n)) => match mulecheck_core::mules::catalog_entry(n) {
                    Ok(e) => Some(e.k),
                    Err(e) => return usage(e),
                },
                (None, None) => None,
            };
            run_records("mule", &common, name.as_deref(), |rec, _, _| {
                verbs::mule(&rec.graph, name.as_deref(), k)
            })
        }
        Verb::Reduce { common, name, k, j, chain } => {
            let k = match (k, name.as_deref()) {
                (Some(k), _) => k,
                (None, Some(n)) => match mulecheck_core::mules::catalog_entry(n) {
                    Ok(e) => e.k,
                    Err(e) => return usage(e),
                },
                (None, None) => return usage("reduce needs --k or --name"),
            };
            run_records("reduce", &common, name.as_deref(), |rec, budget, _| {
                verbs::reduce(&rec.graph, k, j, chain, budget)
            })
        }
        Verb::BkCheck { common, name } => {
            run_records("bk-check", &common, name.as_deref(), |rec, _, _| verbs::bk_check(&rec.graph))
        }
        Verb::ContainsJoin { common, s, t, name } => {
            run_records("contains-join", &common, name.as_deref(), |rec, _, _| {
                verbs::contains_join(&rec.graph, s, t)
            })
        }
        Verb::Sweep { family, t, max_order, time_limit, node_limit, jobs, pretty } => {
            let fam = match verbs::family(family, t) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let budget = match budget_from(time_limit, node_limit) {
                Ok(b) => b,
                Err(e) => return usage(e),
            };
            if max_order > 7 {
                return usage("sweep supports --max-order up to 7");
            }
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let o = pool.install(|| verbs::sweep(fam, max_order, budget));
            let (code, v) = envelope("sweep", budget, json!({}), o);
            emit(&v, pretty);
            ExitCode::from(code)
        }
    }
}
