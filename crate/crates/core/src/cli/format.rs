//! Line-oriented text formats for instances, graphs and certificates.
//!
//! ```text
//! # instance
//! set a : 0 1 3
//! set b : 10 12
//!
//! # graph
//! vertices 3
//! edge 1 2
//!
//! # certificate
//! tree a b -10
//! budget 4
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt::Write as _;

use crate::core::Instance;
use crate::error::{Error, Result};
use crate::graphs::{EdgeWeights, Graph, WeightedTree};
use crate::solvers::Certificate;

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '(' | ')' | '-'))
}

fn integer(line: usize, token: &str) -> Result<i64> {
    token.parse::<i64>().map_err(|e| {
        use std::num::IntErrorKind::*;
        match e.kind() {
            PosOverflow | NegOverflow => Error::parse(line, format!("integer `{token}` overflows 64 bits")),
            _ => Error::parse(line, format!("`{token}` is not an integer")),
        }
    })
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut family: Vec<(String, Vec<i64>)> = Vec::new();
    let mut last_line = 0;
    for (line, tokens) in lines(text) {
        last_line = line;
        match tokens.as_slice() {
            ["set", label, ":", elements @ ..] => {
                if !valid_label(label) {
                    return Err(Error::parse(line, format!("invalid label `{label}`")));
                }
                if family.iter().any(|(l, _)| l == label) {
                    return Err(Error::parse(line, format!("duplicate label `{label}`")));
                }
                if elements.is_empty() {
                    return Err(Error::parse(line, format!("empty set `{label}`")));
                }
                let elements = elements
                    .iter()
                    .map(|t| integer(line, t))
                    .collect::<Result<Vec<_>>>()?;
                family.push((label.to_string(), elements));
            }
            ["set", ..] => {
                return Err(Error::parse(line, "expected `set <label> : <int> ...`"));
            }
            [other, ..] => return Err(Error::parse(line, format!("unknown directive `{other}`"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    if family.is_empty() {
        return Err(Error::parse(last_line, "instance has no sets"));
    }
    Instance::new(family)
}

pub fn render_instance(instance: &Instance) -> String {
    let mut out = String::new();
    for (label, set) in instance.iter() {
        write!(out, "set {label} :").unwrap();
        for x in set {
            write!(out, " {x}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn vertex(line: usize, token: &str) -> Result<u64> {
    match token.parse::<u64>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::parse(line, format!("vertex `{token}` is not a positive integer"))),
    }
}

/// Graphs with positive integer vertex names. A `vertices n` header adds
/// vertices `1..=n`, so isolated vertices can be declared.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    let mut declared: Option<u64> = None;
    for (line, tokens) in lines(text) {
        match tokens.as_slice() {
            ["vertices", count] => {
                if declared.is_some() {
                    return Err(Error::parse(line, "repeated `vertices` header"));
                }
                let count: u64 = count
                    .parse()
                    .map_err(|_| Error::parse(line, format!("`{count}` is not a vertex count")))?;
                if g.edge_count() > 0 {
                    return Err(Error::parse(line, "`vertices` must precede edges"));
                }
                for v in 1..=count {
                    g.add_vertex(v.to_string());
                }
                declared = Some(count);
            }
            ["edge", u, v] => {
                let (a, b) = (vertex(line, u)?, vertex(line, v)?);
                if let Some(n) = declared {
                    if a > n || b > n {
                        return Err(Error::parse(line, format!("vertex beyond declared count {n}")));
                    }
                }
                let (a, b) = (a.to_string(), b.to_string());
                g.add_vertex(a.clone());
                g.add_vertex(b.clone());
                g.add_edge(&a, &b).map_err(|e| Error::parse(line, e.to_string()))?;
            }
            [other, ..] => {
                return Err(Error::parse(line, format!("unknown or malformed directive `{other}`")))
            }
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Ok(g)
}

pub fn render_graph(g: &Graph) -> String {
    let mut out = String::new();
    let n = g.vertex_count();
    let numbered = (1..=n).all(|v| g.contains(&v.to_string()));
    if numbered {
        writeln!(out, "vertices {n}").unwrap();
    }
    let mut edges: Vec<(String, String)> = g.edges();
    edges.sort_by_key(|(a, b)| (a.parse::<u64>().ok(), b.parse::<u64>().ok(), a.clone(), b.clone()));
    for (a, b) in edges {
        writeln!(out, "edge {a} {b}").unwrap();
    }
    out
}

/// Contents of a certificate file before it is tied to an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFile {
    /// `(b, c, w(b, c))`
    pub edges: Vec<(String, String, i64)>,
    pub budget: Option<u64>,
}

impl CertificateFile {
    /// Builds a certificate whose tree spans the instance labels.
    /// `budget` overrides the file's budget line.
    pub fn into_certificate(self, instance: &Instance, budget: Option<u64>) -> Result<Certificate> {
        let budget = budget
            .or(self.budget)
            .ok_or_else(|| Error::parse(0, "certificate has no budget and none was given"))?;
        let mut tree = Graph::with_vertices(instance.labels())?;
        let mut weights = EdgeWeights::new();
        for (b, c, w) in self.edges {
            tree.add_edge(&b, &c).map_err(|e| match e {
                Error::UnknownVertex(v) => Error::CertificateMismatch(format!("unknown label `{v}`")),
                other => other,
            })?;
            weights.set(&b, &c, w)?;
        }
        Ok(Certificate::new(WeightedTree::new(tree, weights)?, budget))
    }
}

pub fn parse_certificate(text: &str) -> Result<CertificateFile> {
    let mut edges = Vec::new();
    let mut budget = None;
    for (line, tokens) in lines(text) {
        match tokens.as_slice() {
            ["tree", b, c, w] => edges.push((b.to_string(), c.to_string(), integer(line, w)?)),
            ["budget", k] => {
                let k = k
                    .parse::<u64>()
                    .map_err(|_| Error::parse(line, format!("`{k}` is not a budget")))?;
                if budget.replace(k).is_some() {
                    return Err(Error::parse(line, "repeated `budget` line"));
                }
            }
            [other, ..] => {
                return Err(Error::parse(line, format!("unknown or malformed directive `{other}`")))
            }
            [] => unreachable!("blank lines are skipped"),
        }
    }
    Ok(CertificateFile { edges, budget })
}

pub fn render_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    for (b, c, w) in cert.tree.weights().iter() {
        writeln!(out, "tree {b} {c} {w}").unwrap();
    }
    writeln!(out, "budget {}", cert.budget).unwrap();
    out
}
