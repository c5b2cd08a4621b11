//! Flat-file formats: graphs, codes and truth tables in text or JSON,
//! spectrum dumps as CSV, check reports as JSON.
//!
//! Text formats put qubit/vertex 1 leftmost. Graph files are a header
//! `n=<int>` and `n` rows of `0`/`1`; an edge-list variant lists 1-indexed
//! `u v` pairs after the header. Code files are `n=<int> k=<int>` followed
//! by `k` rows, either `<alpha>|<beta>` in bits or a GF(4) string over
//! `{0,1,w,W}`. Truth tables are `n=<int>` and one `+`/`-` line in index
//! order.

use crate::boolean::TruthTable;
use crate::exact::GaussianInt;
use crate::graph::Graph;
use crate::stabilizer::{gray_decode, gray_encode, GeneratorMatrix, PauliVector};
use crate::verify::CheckReport;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Any of the three input kinds the batch commands accept.
#[derive(Debug, Clone)]
pub enum Input {
    Graph(Graph),
    Code(GeneratorMatrix),
    Table(TruthTable),
}

/// Parses a graph, code or truth-table file, deciding the kind from its
/// header and shape.
pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return parse_input_json(text);
    }
    let header = trimmed.lines().next().unwrap_or_default();
    if header.contains("k=") {
        return Ok(Input::Code(parse_code_text(text)?));
    }
    let second = trimmed.lines().nth(1).unwrap_or_default().trim();
    if second.starts_with('+') || second.starts_with('-') {
        return Ok(Input::Table(parse_table_text(text)?));
    }
    Ok(Input::Graph(parse_graph_text(text)?))
}

fn parse_input_json(text: &str) -> Result<Input, ParseError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line(), format!("invalid JSON: {e}")))?;
    if value.get("k").is_some() {
        parse_code_json(text).map(Input::Code)
    } else if value.get("signs").is_some() {
        parse_table_json(text).map(Input::Table)
    } else {
        parse_graph_json(text).map(Input::Graph)
    }
}

fn header_value(line: &str, key: &str, line_no: usize) -> Result<usize, ParseError> {
    line.split_whitespace()
        .find_map(|tok| tok.strip_prefix(&format!("{key}=")))
        .ok_or_else(|| ParseError::new(line_no, format!("missing {key}=<int> in header")))?
        .parse()
        .map_err(|_| ParseError::new(line_no, format!("invalid {key} value")))
}

// ---- graphs ----

pub fn parse_graph_text(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty graph file"))?;
    let n = header_value(header, "n", header_no + 1)?;
    let body: Vec<(usize, &str)> = lines.collect();
    if body.iter().any(|(_, l)| l.trim().contains(' ')) {
        // Edge list: 1-indexed "u v" pairs.
        let mut edges = Vec::new();
        for (no, line) in body {
            let mut parts = line.split_whitespace();
            let u: usize = parts
                .next()
                .unwrap()
                .parse()
                .map_err(|_| ParseError::new(no + 1, "invalid vertex"))?;
            let v: usize = parts
                .next()
                .ok_or_else(|| ParseError::new(no + 1, "expected two vertices"))?
                .parse()
                .map_err(|_| ParseError::new(no + 1, "invalid vertex"))?;
            if parts.next().is_some() {
                return Err(ParseError::new(no + 1, "expected exactly two vertices"));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(ParseError::new(
                    no + 1,
                    format!("vertex out of range 1..={n}"),
                ));
            }
            edges.push((u - 1, v - 1));
        }
        return Graph::from_edges(n, &edges)
            .map_err(|e| ParseError::new(header_no + 1, e.to_string()));
    }
    if body.len() != n {
        return Err(ParseError::new(
            header_no + 1,
            format!("expected {n} adjacency rows, found {}", body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for (no, line) in body {
        let line = line.trim();
        if line.len() != n {
            return Err(ParseError::new(no + 1, format!("expected {n} characters")));
        }
        let mut row = 0u128;
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => row |= 1 << j,
                other => {
                    return Err(ParseError::new(
                        no + 1,
                        format!("unexpected character {other:?}"),
                    ))
                }
            }
        }
        rows.push(row);
    }
    Graph::new(rows).map_err(|e| ParseError::new(header_no + 1, e.to_string()))
}

pub fn format_graph_text(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for i in 0..g.n() {
        for j in 0..g.n() {
            out.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    rows: Vec<String>,
}

pub fn parse_graph_json(text: &str) -> Result<Graph, ParseError> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    let body: String = parsed.rows.iter().map(|r| format!("{r}\n")).collect();
    parse_graph_text(&format!("n={}\n{body}", parsed.n))
}

pub fn format_graph_json(g: &Graph) -> String {
    let rows = (0..g.n())
        .map(|i| {
            (0..g.n())
                .map(|j| if g.has_edge(i, j) { '1' } else { '0' })
                .collect()
        })
        .collect();
    serde_json::to_string_pretty(&GraphJson { n: g.n(), rows }).expect("serializable") + "\n"
}

// ---- codes ----

pub fn parse_code_text(text: &str) -> Result<GeneratorMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty code file"))?;
    let n = header_value(header, "n", header_no + 1)?;
    let k = header_value(header, "k", header_no + 1)?;
    let body: Vec<(usize, &str)> = lines.collect();
    if body.len() != k {
        return Err(ParseError::new(
            header_no + 1,
            format!("expected {k} generator rows, found {}", body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(k);
    for (no, line) in body {
        let line = line.trim();
        let row = if let Some((alpha_part, beta_part)) = line.split_once('|') {
            if alpha_part.len() != n || beta_part.len() != n {
                return Err(ParseError::new(no + 1, format!("expected {n}|{n} bits")));
            }
            let parse_word = |part: &str| -> Result<u128, ParseError> {
                let mut word = 0u128;
                for (i, ch) in part.chars().enumerate() {
                    match ch {
                        '0' => {}
                        '1' => word |= 1 << i,
                        other => {
                            return Err(ParseError::new(
                                no + 1,
                                format!("unexpected bit {other:?}"),
                            ))
                        }
                    }
                }
                Ok(word)
            };
            PauliVector::new(n, parse_word(alpha_part)?, parse_word(beta_part)?)
                .map_err(|e| ParseError::new(no + 1, e.to_string()))?
        } else {
            if line.len() != n {
                return Err(ParseError::new(
                    no + 1,
                    format!("expected {n} GF(4) symbols"),
                ));
            }
            gray_encode(line).map_err(|e| ParseError::new(no + 1, e.to_string()))?
        };
        rows.push(row);
    }
    GeneratorMatrix::new(rows).map_err(|e| ParseError::new(header_no + 1, e.to_string()))
}

fn bits_string(word: u128, n: usize) -> String {
    (0..n)
        .map(|i| if word >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn format_code_text(g: &GeneratorMatrix) -> String {
    let mut out = format!("n={} k={}\n", g.n(), g.k());
    for row in g.rows() {
        out.push_str(&bits_string(row.alpha(), g.n()));
        out.push('|');
        out.push_str(&bits_string(row.beta(), g.n()));
        out.push('\n');
    }
    out
}

pub fn format_code_gf4(g: &GeneratorMatrix) -> String {
    let mut out = format!("n={} k={}\n", g.n(), g.k());
    for row in g.rows() {
        out.push_str(&gray_decode(row));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    n: usize,
    k: usize,
    rows: Vec<CodeRowJson>,
}

#[derive(Serialize, Deserialize)]
struct CodeRowJson {
    alpha: String,
    beta: String,
}

pub fn parse_code_json(text: &str) -> Result<GeneratorMatrix, ParseError> {
    let parsed: CodeJson =
        serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    let body: String = parsed
        .rows
        .iter()
        .map(|r| format!("{}|{}\n", r.alpha, r.beta))
        .collect();
    parse_code_text(&format!("n={} k={}\n{body}", parsed.n, parsed.k))
}

pub fn format_code_json(g: &GeneratorMatrix) -> String {
    let rows = g
        .rows()
        .iter()
        .map(|r| CodeRowJson {
            alpha: bits_string(r.alpha(), g.n()),
            beta: bits_string(r.beta(), g.n()),
        })
        .collect();
    serde_json::to_string_pretty(&CodeJson {
        n: g.n(),
        k: g.k(),
        rows,
    })
    .expect("serializable")
        + "\n"
}

// ---- truth tables ----

pub fn parse_table_text(text: &str) -> Result<TruthTable, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty table file"))?;
    let n = header_value(header, "n", header_no + 1)?;
    let (no, signs) = lines
        .next()
        .ok_or_else(|| ParseError::new(header_no + 2, "missing sign row"))?;
    let signs = signs.trim();
    if n == 0 || n > crate::boolean::MAX_TABLE_N || signs.len() != 1 << n {
        return Err(ParseError::new(
            no + 1,
            format!("expected 2^{n} sign characters, found {}", signs.len()),
        ));
    }
    let mut parsed = Vec::with_capacity(signs.len());
    for (i, ch) in signs.chars().enumerate() {
        match ch {
            '+' => parsed.push(1i8),
            '-' => parsed.push(-1i8),
            other => {
                return Err(ParseError::new(
                    no + 1,
                    format!("unexpected sign {other:?} at index {i}"),
                ))
            }
        }
    }
    TruthTable::from_signs(&parsed).map_err(|e| ParseError::new(no + 1, e.to_string()))
}

pub fn format_table_text(t: &TruthTable) -> String {
    let signs: String = (0..t.len() as u32)
        .map(|x| if t.bit(x) { '-' } else { '+' })
        .collect();
    format!("n={}\n{signs}\n", t.n())
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    signs: String,
}

pub fn parse_table_json(text: &str) -> Result<TruthTable, ParseError> {
    let parsed: TableJson =
        serde_json::from_str(text).map_err(|e| ParseError::new(e.line(), e.to_string()))?;
    parse_table_text(&format!("n={}\n{}\n", parsed.n, parsed.signs))
}

pub fn format_table_json(t: &TruthTable) -> String {
    let signs: String = (0..t.len() as u32)
        .map(|x| if t.bit(x) { '-' } else { '+' })
        .collect();
    serde_json::to_string_pretty(&TableJson { n: t.n(), signs }).expect("serializable") + "\n"
}

// ---- spectrum dumps ----

/// CSV rows `mask,re,im,norm2` for a sequence of spectrum values indexed by
/// mask (printed as a bit string, position 1 leftmost).
pub fn spectrum_csv(n: usize, values: impl IntoIterator<Item = GaussianInt>) -> String {
    let mut out = String::from("mask,re,im,norm2\n");
    for (index, value) in values.into_iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            bits_string(index as u128, n),
            value.re,
            value.im,
            value.norm_sq()
        ));
    }
    out
}

// ---- reports ----

pub fn report_json(report: &CheckReport) -> serde_json::Value {
    serde_json::json!({
        "name": report.name,
        "instances": report.instances,
        "failures": report.failures.iter().map(|f| serde_json::json!({
            "input": f.input,
            "lhs": f.lhs,
            "rhs": f.rhs,
        })).collect::<Vec<_>>(),
        "notes": report.notes,
        "elapsed_ms": report.elapsed.as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique, nested_clique, NestedCliqueSpec, SigmaRule};
    use crate::rng::SplitMix64;

    #[test]
    fn graph_text_round_trip() {
        let g = nested_clique(&NestedCliqueSpec::new(3, SigmaRule::Cyclic).unwrap());
        let text = format_graph_text(&g);
        assert!(text.starts_with("n=9\n"));
        let back = parse_graph_text(&text).unwrap();
        assert_eq!(back, g);
        let json = format_graph_json(&g);
        assert_eq!(parse_graph_json(&json).unwrap(), g);
    }

    #[test]
    fn graph_edge_list() {
        let text = "n=3\n1 2\n2 3\n";
        let g = parse_graph_text(text).unwrap();
        assert_eq!(g, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(parse_graph_text("n=3\n1 4\n").is_err());
        assert!(parse_graph_text("n=3\n0 1\n").is_err());
    }

    #[test]
    fn graph_rejects_malformed_rows() {
        assert!(parse_graph_text("n=2\n01\n1\n").is_err());
        assert!(parse_graph_text("n=2\n0x\n10\n").is_err());
        assert!(parse_graph_text("n=2\n01\n").is_err());
        // Asymmetric matrix caught by the graph invariants.
        let err = parse_graph_text("n=2\n01\n00\n").unwrap_err();
        assert!(err.message.contains("symmetric"));
    }

    #[test]
    fn code_round_trips_both_formats() {
        let code = GeneratorMatrix::from_graph(&clique(3));
        let text = format_code_text(&code);
        assert!(text.starts_with("n=3 k=3\n"));
        assert_eq!(parse_code_text(&text).unwrap(), code);
        let gf4 = format_code_gf4(&code);
        assert_eq!(parse_code_text(&gf4).unwrap(), code);
        let json = format_code_json(&code);
        assert_eq!(parse_code_json(&json).unwrap(), code);
    }

    #[test]
    fn code_gf4_body_matches_gray_map() {
        let code = GeneratorMatrix::from_graph(&clique(2));
        // Rows (B|I) of K_2: alpha=01,beta=10 -> "Ww"? Qubit 1: (0,1)=W.
        let gf4 = format_code_gf4(&code);
        assert_eq!(gf4, "n=2 k=2\nWw\nwW\n");
    }

    #[test]
    fn table_round_trip() {
        let mut rng = SplitMix64::new(404);
        let t = crate::verify::random_table(&mut rng, 4);
        let text = format_table_text(&t);
        assert_eq!(parse_table_text(&text).unwrap(), t);
        let json = format_table_json(&t);
        assert_eq!(parse_table_json(&json).unwrap(), t);
        assert!(parse_table_text("n=2\n++*+\n").is_err());
        assert!(parse_table_text("n=2\n++\n").is_err());
    }

    #[test]
    fn input_detection() {
        let g = clique(4);
        match parse_input(&format_graph_text(&g)).unwrap() {
            Input::Graph(parsed) => assert_eq!(parsed, g),
            other => panic!("expected graph, got {other:?}"),
        }
        let code = GeneratorMatrix::from_graph(&g);
        match parse_input(&format_code_text(&code)).unwrap() {
            Input::Code(parsed) => assert_eq!(parsed, code),
            other => panic!("expected code, got {other:?}"),
        }
        let table = TruthTable::from_graph(&g).unwrap();
        match parse_input(&format_table_text(&table)).unwrap() {
            Input::Table(parsed) => assert_eq!(parsed, table),
            other => panic!("expected table, got {other:?}"),
        }
        match parse_input(&format_graph_json(&g)).unwrap() {
            Input::Graph(parsed) => assert_eq!(parsed, g),
            other => panic!("expected graph, got {other:?}"),
        }
    }

    #[test]
    fn spectrum_csv_layout() {
        let t = TruthTable::from_graph(&clique(2)).unwrap();
        let csv = spectrum_csv(2, t.wht().into_iter().map(GaussianInt::from));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "mask,re,im,norm2");
        assert_eq!(lines[1], "00,2,0,4");
        assert_eq!(lines[4], "11,-2,0,4");
    }

    #[test]
    fn report_json_shape() {
        let mut report = CheckReport::new("demo");
        report.instances = 3;
        report.fail("input", 1, 2);
        let value = report_json(&report);
        assert_eq!(value["name"], "demo");
        assert_eq!(value["instances"], 3);
        assert_eq!(value["failures"][0]["lhs"], "1");
    }
}
