//! Line-based text formats.
//!
//! ```text
//! # an instance
//! upbe 2
//! v a
//! v b
//! e a b 1
//! ```
//!
//! A `#` starts a comment that runs to the end of the line, and blank lines
//! are ignored. Betweenness files start with `betweenness` and use `elem`
//! lines (any number of names each) and `triple a b c` lines. Ordering files
//! hold one vertex name per line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::instance::{Instance, InstanceError, Ordering, OrderingError, RawInstance};
use crate::reductions::{BetweennessError, BetweennessInstance, LabeledInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Betweenness(#[from] BetweennessError),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = line.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
    args: usize,
) -> Result<(usize, Vec<&'a str>), ParseError> {
    match lines.next() {
        Some((line, words)) if words[0] == keyword && words.len() == args + 1 => Ok((line, words)),
        Some((line, _)) => Err(syntax(line, format!("expected header `{keyword}`"))),
        None => Err(syntax(1, format!("missing header `{keyword}`"))),
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = tokens(text);
    let (line, header) = expect_header(&mut lines, "upbe", 1)?;
    let pages = header[1]
        .parse::<u32>()
        .map_err(|_| syntax(line, format!("page count `{}` is not a number", header[1])))?;
    let mut raw = RawInstance::new(pages);
    for (line, words) in lines {
        match (words[0], words.len()) {
            ("v", 2) => raw.add_vertex(words[1]),
            ("e", 4) => {
                let page = words[3]
                    .parse::<u32>()
                    .map_err(|_| syntax(line, format!("page `{}` is not a number", words[3])))?;
                raw.add_edge(words[1], words[2], page);
            }
            ("v", _) => return Err(syntax(line, "expected `v <name>`")),
            ("e", _) => return Err(syntax(line, "expected `e <src> <dst> <page>`")),
            (other, _) => return Err(syntax(line, format!("unknown line kind `{other}`"))),
        }
    }
    Ok(raw.check()?)
}

/// Normal form: header, vertices in insertion order, then edges in input
/// order.
pub fn emit_instance(inst: &Instance) -> String {
    let mut out = format!("upbe {}\n", inst.pages());
    for name in inst.names() {
        let _ = writeln!(out, "v {name}");
    }
    for e in inst.edges() {
        let _ = writeln!(out, "e {} {} {}", inst.name(e.src), inst.name(e.dst), e.page);
    }
    out
}

pub fn parse_betweenness(text: &str) -> Result<BetweennessInstance, ParseError> {
    let mut lines = tokens(text);
    expect_header(&mut lines, "betweenness", 0)?;
    let mut elements: Vec<String> = Vec::new();
    let mut triples: Vec<[String; 3]> = Vec::new();
    for (line, words) in lines {
        match words[0] {
            "elem" => elements.extend(words[1..].iter().map(|w| w.to_string())),
            "triple" if words.len() == 4 => triples.push([words[1], words[2], words[3]].map(String::from)),
            "triple" => return Err(syntax(line, "expected `triple <a> <b> <c>`")),
            other => return Err(syntax(line, format!("unknown line kind `{other}`"))),
        }
    }
    Ok(BetweennessInstance::new(&elements, &triples)?)
}

pub fn emit_betweenness(bw: &BetweennessInstance) -> String {
    let mut out = String::from("betweenness\n");
    let _ = writeln!(out, "elem {}", bw.elements().join(" "));
    for t in bw.triples() {
        let [a, b, c] = t.map(|e| bw.elements()[e].as_str());
        let _ = writeln!(out, "triple {a} {b} {c}");
    }
    out
}

/// Names one per line; comments and blank lines are skipped.
pub fn parse_names(text: &str) -> Result<Vec<String>, ParseError> {
    tokens(text)
        .map(|(line, words)| match words[..] {
            [name] => Ok(name.to_string()),
            _ => Err(syntax(line, "expected a single name")),
        })
        .collect()
}

pub fn parse_ordering(inst: &Instance, text: &str) -> Result<Ordering, ParseError> {
    Ok(Ordering::from_names(inst, &parse_names(text)?)?)
}

pub fn emit_ordering(inst: &Instance, ord: &Ordering) -> String {
    let mut out = String::new();
    for name in ord.names(inst) {
        out.push_str(name);
        out.push('\n');
    }
    out
}

/// One line per vertex: its name, a tab, and what it stands for.
pub fn emit_labels(lab: &LabeledInstance) -> String {
    let mut out = String::new();
    for (v, role) in lab.roles.iter().enumerate() {
        let _ = writeln!(out, "{}\t{role}", lab.instance.name(v));
    }
    out
}
