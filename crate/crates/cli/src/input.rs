//! Reading graphs: graph6 streams (one per line) or a single edge list.

use std::io::Read;
use std::path::Path;

use mulecheck_core::graph::{parse_edge_list, parse_graph6, Graph};

use crate::args::Format;

#[derive(Debug, Clone)]
pub struct Record {
    /// 1-based line of the record in the input.
    pub line: usize,
    pub graph: Graph,
}

#[derive(Debug)]
pub struct InputError {
    pub line: Option<usize>,
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

pub fn read_source(path: Option<&Path>) -> Result<String, InputError> {
    let err = |e: std::io::Error| InputError { line: None, message: e.to_string() };
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| InputError { line: None, message: format!("{}: {e}", p.display()) }),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(err)?;
            Ok(s)
        }
    }
}

fn looks_like_edge_list(text: &str) -> bool {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) => {
            let words: Vec<&str> = l.split_whitespace().collect();
            !words.is_empty() && words.len() <= 2 && words.iter().all(|w| w.parse::<usize>().is_ok())
        }
        None => false,
    }
}

pub fn parse_records(text: &str, format: Format) -> Result<Vec<Record>, InputError> {
    let edges = match format {
        Format::Edges => true,
        Format::Graph6 => false,
        Format::Auto => looks_like_edge_list(text),
    };
    if edges {
        let line =
            text.lines().position(|l| !l.trim().is_empty() && !l.trim().starts_with('#')).unwrap_or(0) + 1;
        let graph = parse_edge_list(text).map_err(|e| InputError { line: None, message: e.to_string() })?;
        return Ok(vec![Record { line, graph }]);
    }
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut l = raw.trim();
        if let Some(rest) = l.strip_prefix(">>graph6<<") {
            l = rest;
        }
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let graph = parse_graph6(l).map_err(|e| InputError { line: Some(i + 1), message: e.to_string() })?;
        out.push(Record { line: i + 1, graph });
    }
    if out.is_empty() {
        return Err(InputError { line: None, message: "no graphs in input".into() });
    }
    Ok(out)
}
