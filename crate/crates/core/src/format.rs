//! The `.rg` text format.
//!
//! ```text
//! # two interlaced loops
//! vertex v : e.1 f.1 e.2 f.2
//! edge e : +
//! edge f : -
//! ```
//!
//! `+` marks an untwisted edge, `-` a twisted one. Edge indices follow the
//! order of the `edge` declarations.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{valid_label, End, RibbonGraph};

pub fn parse_half_edge(token: &str) -> std::result::Result<(String, End), String> {
    let (label, end) = token
        .rsplit_once('.')
        .ok_or_else(|| format!("half-edge {token:?} must be written <edge>.1 or <edge>.2"))?;
    let end = match end {
        "1" => End::First,
        "2" => End::Second,
        _ => return Err(format!("half-edge {token:?} must end in .1 or .2")),
    };
    if !valid_label(label) {
        return Err(format!("invalid edge label {label:?}"));
    }
    Ok((label.to_string(), end))
}

/// Whitespace-separated tokens of `s` with their 1-based columns, where
/// `s` starts at column `base`.
fn tokens(s: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        if c.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((base + st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((base + st, &s[st..]));
    }
    out
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_rg(text: &str) -> Result<RibbonGraph> {
    let mut vertices: Vec<(String, Vec<(String, End)>)> = Vec::new();
    let mut refs: Vec<(usize, usize, String)> = Vec::new();
    let mut edges: Vec<(String, bool)> = Vec::new();
    let mut edge_lines: HashMap<String, usize> = HashMap::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(perr(line, col, "expected `vertex <name> : ...` or `edge <name> : +|-`"));
        };
        let head = tokens(&content[..colon], 1);
        let body = tokens(&content[colon + 1..], colon + 2);
        let (kcol, keyword) = head[0];
        if head.len() != 2 {
            return Err(perr(line, kcol, "expected a keyword and a single name before ':'"));
        }
        let (ncol, name) = head[1];
        if !valid_label(name) {
            return Err(perr(line, ncol, format!("invalid name {name:?}")));
        }
        match keyword {
            "vertex" => {
                let mut rot = Vec::new();
                for (col, tok) in body {
                    let he = parse_half_edge(tok).map_err(|m| perr(line, col, m))?;
                    refs.push((line, col, he.0.clone()));
                    rot.push(he);
                }
                vertices.push((name.to_string(), rot));
            }
            "edge" => {
                let twisted = match body.as_slice() {
                    [(_, "+")] => false,
                    [(_, "-")] | [(_, "−")] => true,
                    [] => return Err(perr(line, colon + 2, "missing twist sign `+` or `-`")),
                    [(col, _), ..] => return Err(perr(line, *col, "expected a single `+` or `-`")),
                };
                if edge_lines.insert(name.to_string(), line).is_some() {
                    return Err(perr(line, ncol, format!("edge {name} declared twice")));
                }
                edges.push((name.to_string(), twisted));
            }
            other => return Err(perr(line, kcol, format!("unknown declaration {other:?}"))),
        }
    }
    for (line, col, label) in refs {
        if !edge_lines.contains_key(&label) {
            return Err(perr(line, col, format!("half-edge refers to undeclared edge {label}")));
        }
    }
    RibbonGraph::from_named(vertices, edges)
}

pub fn to_rg_string(g: &RibbonGraph) -> String {
    let mut s = String::new();
    for v in g.vertices() {
        let _ = write!(s, "vertex {} :", v.name);
        for h in &v.rotation {
            let _ = write!(s, " {}", g.half_edge_name(*h));
        }
        s.push('\n');
    }
    for e in g.edges() {
        let _ = writeln!(s, "edge {} : {}", e.label, if e.twisted { '-' } else { '+' });
    }
    s
}
