//! Text and JSON formats for ribbon graphs and surface link diagrams.
//!
//! Ribbon graph files list every vertex as its counterclockwise cycle of
//! dart labels. A dart label is an edge name followed by `+` or `-`; each
//! edge name occurs once with each suffix. Edge signs default to `+`:
//!
//! ```text
//! # one vertex, two interleaved loops
//! vertices: [[e1+, e2+, e1-, e2-]]
//! signs: {e2: -}
//! ```
//!
//! `[]` is an isolated vertex.
//!
//! Diagram files are line oriented. Each crossing lists four port labels in
//! counterclockwise order and the over-pair index (0: ports 1 and 3 of the
//! line, i.e. positions 0 and 2, carry the overstrand; 1: positions 1 and 3):
//!
//! ```text
//! crossing x0 p0 p1 p2 p3 over 0
//! arc p2 p1
//! arc p0 p3
//! free_loops 0
//! ```
//!
//! Both formats have a JSON form, recognised by a leading `{`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use ribbonkb_core::{
    Crossing, DiagramError, MapError, OverPair, RibbonGraph, Sign, SurfaceLinkDiagram,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("edge name `{label}` duplicated")]
    DuplicateDart { label: String },
    #[error("edge `{name}` has no `{name}{suffix}` dart")]
    MissingDart { name: String, suffix: char },
    #[error("sign given for unknown edge `{name}`")]
    UnknownSignEdge { name: String },
    #[error("invalid sign `{value}` for edge `{name}`")]
    BadSign { name: String, value: String },
    #[error("missing `vertices` entry")]
    MissingVertices,
    #[error("port `{label}` is not matched by any arc")]
    UnmatchedPort { label: String },
    #[error("port `{label}` appears in more than one arc")]
    DuplicatePort { label: String },
    #[error("port `{label}` is paired with itself")]
    SelfPairedPort { label: String },
    #[error("arc refers to unknown port `{label}`")]
    UnknownPort { label: String },
    #[error("port label `{label}` used by two crossings")]
    DuplicatePortLabel { label: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("cannot tell whether the input is a ribbon graph or a diagram")]
    UnknownKind,
}

/// A ribbon graph with the edge names it was read with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRibbonGraph {
    pub graph: RibbonGraph,
    /// `edge_names[i]` names `Edge(i)`.
    pub edge_names: Vec<String>,
}

/// A diagram with its crossing and port labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedDiagram {
    pub diagram: SurfaceLinkDiagram,
    pub crossing_names: Vec<String>,
    /// `port_labels[4c + p]` labels port `p` of crossing `c`.
    pub port_labels: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Input {
    Ribbon(NamedRibbonGraph),
    Diagram(NamedDiagram),
}

/// Parses either file kind, deciding by the first keyword.
pub fn parse_any(text: &str) -> Result<Input, FormatError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(text)?;
        return if v.get("vertices").is_some() {
            parse_ribbon_file(text).map(Input::Ribbon)
        } else if v.get("crossings").is_some() || v.get("free_loops").is_some() {
            parse_diagram_file(text).map(Input::Diagram)
        } else {
            Err(FormatError::UnknownKind)
        };
    }
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or(FormatError::UnknownKind)?;
    let word: String = first
        .chars()
        .take_while(|c| c.is_alphanumeric() || *c == '_')
        .collect();
    match word.as_str() {
        "vertices" | "signs" => parse_ribbon_file(text).map(Input::Ribbon),
        "crossing" | "arc" | "free_loops" => parse_diagram_file(text).map(Input::Diagram),
        _ => Err(FormatError::UnknownKind),
    }
}

// ---------------------------------------------------------------- ribbon

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Plus,
    Minus,
    Punct(char),
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Lexer {
    fn new(text: &str) -> Result<Self, FormatError> {
        let mut toks = Vec::new();
        let (mut line, mut col) = (1, 0);
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            col += 1;
            let here = (line, col);
            match c {
                '\n' => {
                    line += 1;
                    col = 0;
                }
                '#' => {
                    while let Some(&n) = chars.peek() {
                        if n == '\n' {
                            break;
                        }
                        chars.next();
                    }
                }
                c if c.is_whitespace() => {}
                '+' => toks.push((Tok::Plus, here.0, here.1)),
                '-' | '−' => toks.push((Tok::Minus, here.0, here.1)),
                '[' | ']' | '{' | '}' | ',' | ':' => toks.push((Tok::Punct(c), here.0, here.1)),
                c if is_word_char(c) => {
                    let mut w = String::from(c);
                    while let Some(&n) = chars.peek() {
                        if !is_word_char(n) {
                            break;
                        }
                        w.push(n);
                        chars.next();
                        col += 1;
                    }
                    toks.push((Tok::Word(w), here.0, here.1));
                }
                other => {
                    return Err(FormatError::Syntax {
                        line,
                        col,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        Ok(Lexer {
            toks,
            pos: 0,
            end: (line, col + 1),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn err(&self, message: impl Into<String>) -> FormatError {
        let (line, col) = self
            .toks
            .get(self.pos)
            .map(|t| (t.1, t.2))
            .unwrap_or(self.end);
        FormatError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, c: char) -> Result<(), FormatError> {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> Result<String, FormatError> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn sign(&mut self) -> Result<Sign, FormatError> {
        match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                Ok(Sign::Positive)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Sign::Negative)
            }
            _ => Err(self.err("expected `+` or `-`")),
        }
    }

    /// `[ item (, item)* ]`, trailing comma allowed.
    fn list<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T, FormatError>,
    ) -> Result<Vec<T>, FormatError> {
        self.expect('[')?;
        let mut out = Vec::new();
        while !self.eat(']') {
            out.push(item(self)?);
            if !self.eat(',') && self.peek() != Some(&Tok::Punct(']')) {
                return Err(self.err("expected `,` or `]`"));
            }
        }
        Ok(out)
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

fn sign_char(s: Sign) -> char {
    if s.is_negative() {
        '-'
    } else {
        '+'
    }
}

/// Vertex dart cycles and edge signs, as written in a file.
fn build_ribbon(
    vertices: Vec<Vec<(String, Sign)>>,
    signs: Vec<(String, Sign)>,
) -> Result<NamedRibbonGraph, FormatError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut seen: HashMap<(String, bool), ()> = HashMap::new();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for v in vertices {
        let mut cycle = Vec::new();
        for (name, s) in v {
            let neg = s.is_negative();
            if seen.insert((name.clone(), neg), ()).is_some() {
                return Err(FormatError::DuplicateDart {
                    label: format!("{name}{}", sign_char(s)),
                });
            }
            let i = *index.entry(name.clone()).or_insert_with(|| {
                names.push(name.clone());
                names.len() - 1
            });
            cycle.push(2 * i + neg as usize);
        }
        cycles.push(cycle);
    }
    for name in &names {
        for (neg, suffix) in [(false, '+'), (true, '-')] {
            if !seen.contains_key(&(name.clone(), neg)) {
                return Err(FormatError::MissingDart {
                    name: name.clone(),
                    suffix,
                });
            }
        }
    }
    let mut sign_table = vec![Sign::Positive; names.len()];
    for (name, s) in signs {
        let i = *index
            .get(&name)
            .ok_or(FormatError::UnknownSignEdge { name: name.clone() })?;
        sign_table[i] = s;
    }
    let graph = RibbonGraph::from_rotations(&cycles)?.with_signs(sign_table)?;
    Ok(NamedRibbonGraph {
        graph,
        edge_names: names,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonSign {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRibbon {
    vertices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    signs: BTreeMap<String, JsonSign>,
}

fn split_dart(label: &str) -> Option<(String, Sign)> {
    let mut chars = label.chars();
    let last = chars.next_back()?;
    let name = chars.as_str();
    if name.is_empty() || !name.chars().all(is_word_char) {
        return None;
    }
    match last {
        '+' => Some((name.to_string(), Sign::Positive)),
        '-' | '−' => Some((name.to_string(), Sign::Negative)),
        _ => None,
    }
}

fn parse_sign_text(name: &str, v: &str) -> Result<Sign, FormatError> {
    match v.trim() {
        "+" | "+1" | "1" => Ok(Sign::Positive),
        "-" | "−" | "-1" => Ok(Sign::Negative),
        other => Err(FormatError::BadSign {
            name: name.to_string(),
            value: other.to_string(),
        }),
    }
}

fn parse_ribbon_json(text: &str) -> Result<NamedRibbonGraph, FormatError> {
    let raw: JsonRibbon = serde_json::from_str(text)?;
    let mut vertices = Vec::new();
    for v in raw.vertices {
        let mut cycle = Vec::new();
        for label in v {
            let d = split_dart(&label).ok_or_else(|| FormatError::Syntax {
                line: 0,
                col: 0,
                message: format!("bad dart label `{label}`"),
            })?;
            cycle.push(d);
        }
        vertices.push(cycle);
    }
    let mut signs = Vec::new();
    for (name, s) in raw.signs {
        let sign = match s {
            JsonSign::Int(1) => Sign::Positive,
            JsonSign::Int(-1) => Sign::Negative,
            JsonSign::Int(other) => parse_sign_text(&name, &other.to_string())?,
            JsonSign::Text(t) => parse_sign_text(&name, &t)?,
        };
        signs.push((name, sign));
    }
    build_ribbon(vertices, signs)
}

/// Parses a ribbon graph file (text or JSON). Darts are numbered in file
/// order: the `i`-th distinct edge name owns darts `2i` (`+`) and `2i + 1`
/// (`-`).
pub fn parse_ribbon_file(text: &str) -> Result<NamedRibbonGraph, FormatError> {
    if text.trim_start().starts_with('{') {
        return parse_ribbon_json(text);
    }
    let mut lx = Lexer::new(text)?;
    let mut vertices = None;
    let mut signs = Vec::new();
    while lx.peek().is_some() {
        let key = lx.word()?;
        lx.expect(':')?;
        match key.as_str() {
            "vertices" => {
                if vertices.is_some() {
                    return Err(lx.err("`vertices` given twice"));
                }
                vertices = Some(lx.list(|lx| {
                    lx.list(|lx| {
                        let name = lx.word()?;
                        let s = lx.sign()?;
                        Ok((name, s))
                    })
                })?);
            }
            "signs" => {
                lx.expect('{')?;
                while !lx.eat('}') {
                    let name = lx.word()?;
                    lx.expect(':')?;
                    let s = lx.sign()?;
                    if let Some(Tok::Word(w)) = lx.peek() {
                        if w == "1" {
                            lx.next();
                        }
                    }
                    signs.push((name, s));
                    if !lx.eat(',') && lx.peek() != Some(&Tok::Punct('}')) {
                        return Err(lx.err("expected `,` or `}`"));
                    }
                }
            }
            _ => {
                lx.pos -= 2;
                return Err(lx.err(format!("unknown key `{key}`")));
            }
        }
    }
    build_ribbon(vertices.ok_or(FormatError::MissingVertices)?, signs)
}

/// Default edge names `e1, e2, ...` for a bare graph.
pub fn name_edges(graph: RibbonGraph) -> NamedRibbonGraph {
    let edge_names = (1..=graph.num_edges()).map(|i| format!("e{i}")).collect();
    NamedRibbonGraph { graph, edge_names }
}

fn dart_label(g: &NamedRibbonGraph, d: usize) -> String {
    format!(
        "{}{}",
        g.edge_names[d / 2],
        if d % 2 == 0 { '+' } else { '-' }
    )
}

/// Text form accepted by [`parse_ribbon_file`]. Vertices start at their
/// smallest dart; only negative signs are written.
pub fn emit_ribbon_file(g: &NamedRibbonGraph) -> String {
    let cycles: Vec<String> = g
        .graph
        .rotations()
        .iter()
        .map(|c| {
            let labels: Vec<String> = c.iter().map(|d| dart_label(g, d.0)).collect();
            format!("[{}]", labels.join(", "))
        })
        .collect();
    let mut out = format!("vertices: [{}]\n", cycles.join(", "));
    let neg: Vec<String> = g
        .graph
        .edges()
        .filter(|e| g.graph.sign(*e).is_negative())
        .map(|e| format!("{}: -", g.edge_names[e.0]))
        .collect();
    if !neg.is_empty() {
        let _ = writeln!(out, "signs: {{{}}}", neg.join(", "));
    }
    out
}

pub fn emit_ribbon_json(g: &NamedRibbonGraph) -> String {
    let raw = JsonRibbon {
        vertices: g
            .graph
            .rotations()
            .iter()
            .map(|c| c.iter().map(|d| dart_label(g, d.0)).collect())
            .collect(),
        signs: g
            .graph
            .edges()
            .filter(|e| g.graph.sign(*e).is_negative())
            .map(|e| (g.edge_names[e.0].clone(), JsonSign::Text("-".into())))
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}

// ---------------------------------------------------------------- diagram

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonCrossing {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    ports: [String; 4],
    over: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDiagram {
    #[serde(default)]
    crossings: Vec<JsonCrossing>,
    #[serde(default)]
    arcs: Vec<[String; 2]>,
    #[serde(default)]
    free_loops: usize,
}

fn build_diagram(raw: JsonDiagram) -> Result<NamedDiagram, FormatError> {
    let mut crossings = Vec::new();
    let mut names = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for (i, c) in raw.crossings.into_iter().enumerate() {
        let over = OverPair::from_offset(c.over).ok_or_else(|| FormatError::Syntax {
            line: 0,
            col: 0,
            message: format!("over-pair index must be 0 or 1, got {}", c.over),
        })?;
        crossings.push(Crossing { over });
        names.push(c.name.unwrap_or_else(|| format!("x{i}")));
        for label in c.ports {
            if index.insert(label.clone(), labels.len()).is_some() {
                return Err(FormatError::DuplicatePortLabel { label });
            }
            labels.push(label);
        }
    }
    let mut arcs = Vec::new();
    for [a, b] in &raw.arcs {
        let pa = *index
            .get(a)
            .ok_or_else(|| FormatError::UnknownPort { label: a.clone() })?;
        let pb = *index
            .get(b)
            .ok_or_else(|| FormatError::UnknownPort { label: b.clone() })?;
        arcs.push((pa, pb));
    }
    let diagram = SurfaceLinkDiagram::new(crossings, &arcs, raw.free_loops).map_err(|e| {
        let label = |p: usize| labels.get(p).cloned().unwrap_or_default();
        match e {
            DiagramError::UnmatchedPort { port } => {
                FormatError::UnmatchedPort { label: label(port) }
            }
            DiagramError::DuplicatePort { port } => {
                FormatError::DuplicatePort { label: label(port) }
            }
            DiagramError::SelfPairedPort { port } => {
                FormatError::SelfPairedPort { label: label(port) }
            }
            other => FormatError::Diagram(other),
        }
    })?;
    Ok(NamedDiagram {
        diagram,
        crossing_names: names,
        port_labels: labels,
    })
}

/// Parses a diagram file (text or JSON).
pub fn parse_diagram_file(text: &str) -> Result<NamedDiagram, FormatError> {
    if text.trim_start().starts_with('{') {
        return build_diagram(serde_json::from_str(text)?);
    }
    let mut raw = JsonDiagram {
        crossings: Vec::new(),
        arcs: Vec::new(),
        free_loops: 0,
    };
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        let Some(&kw) = words.first() else { continue };
        let col = body.find(kw).unwrap_or(0) + 1;
        let syntax = |message: &str| FormatError::Syntax {
            line: n + 1,
            col,
            message: message.to_string(),
        };
        match kw {
            "crossing" => {
                if words.len() != 8 || words[6] != "over" {
                    return Err(syntax(
                        "expected `crossing <name> <p0> <p1> <p2> <p3> over <0|1>`",
                    ));
                }
                let over = match words[7] {
                    "0" => 0,
                    "1" => 1,
                    _ => return Err(syntax("over-pair index must be 0 or 1")),
                };
                raw.crossings.push(JsonCrossing {
                    name: Some(words[1].to_string()),
                    ports: [words[2], words[3], words[4], words[5]].map(String::from),
                    over,
                });
            }
            "arc" => {
                if words.len() != 3 {
                    return Err(syntax("expected `arc <port> <port>`"));
                }
                raw.arcs.push([words[1].to_string(), words[2].to_string()]);
            }
            "free_loops" => {
                if words.len() != 2 {
                    return Err(syntax("expected `free_loops <count>`"));
                }
                raw.free_loops = words[1]
                    .parse()
                    .map_err(|_| syntax("free loop count must be a nonnegative integer"))?;
            }
            _ => return Err(syntax(&format!("unknown directive `{kw}`"))),
        }
    }
    build_diagram(raw)
}

/// Labels crossing `c` by `names[c]` and its ports by `names[c].0` .. `.3`.
pub fn name_diagram(diagram: SurfaceLinkDiagram, names: Vec<String>) -> NamedDiagram {
    let port_labels = names
        .iter()
        .flat_map(|n| (0..4).map(move |p| format!("{n}.{p}")))
        .collect();
    NamedDiagram {
        diagram,
        crossing_names: names,
        port_labels,
    }
}

pub fn emit_diagram_file(d: &NamedDiagram) -> String {
    let mut out = String::new();
    for (i, c) in d.diagram.crossings().iter().enumerate() {
        let _ = writeln!(
            out,
            "crossing {} {} {} {} {} over {}",
            d.crossing_names[i],
            d.port_labels[4 * i],
            d.port_labels[4 * i + 1],
            d.port_labels[4 * i + 2],
            d.port_labels[4 * i + 3],
            c.over.offset()
        );
    }
    for (p, q) in d.diagram.arcs() {
        let _ = writeln!(out, "arc {} {}", d.port_labels[p], d.port_labels[q]);
    }
    let _ = writeln!(out, "free_loops {}", d.diagram.free_loops());
    out
}

pub fn emit_diagram_json(d: &NamedDiagram) -> String {
    let raw = JsonDiagram {
        crossings: d
            .diagram
            .crossings()
            .iter()
            .enumerate()
            .map(|(i, c)| JsonCrossing {
                name: Some(d.crossing_names[i].clone()),
                ports: std::array::from_fn(|p| d.port_labels[4 * i + p].clone()),
                over: c.over.offset(),
            })
            .collect(),
        arcs: d
            .diagram
            .arcs()
            .into_iter()
            .map(|(p, q)| [d.port_labels[p].clone(), d.port_labels[q].clone()])
            .collect(),
        free_loops: d.diagram.free_loops(),
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}
