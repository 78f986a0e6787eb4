//! Text formats: graph6 (one graph per line) and a plain edge list
//! (`n m` header followed by `m` lines `u v` with one-based labels).

use std::io::BufRead;

use thiserror::Error;

use super::{Graph, GraphError};

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("sparse6 and digraph6 are not supported")]
    Unsupported,
    #[error("byte {0:#04x} outside the printable graph6 range")]
    BadByte(u8),
    #[error("order header is truncated")]
    TruncatedOrder,
    #[error("expected {expected} adjacency bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    NonCanonicalPadding,
    #[error("order {0} is too large")]
    TooLarge(usize),
}

/// A parse failure tagged with its one-based input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl ToString) -> Self {
        Self { line, message: message.to_string() }
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != LONG {
        return Ok(((first - BIAS) as usize, 1));
    }
    let (width, offset) = if bytes.get(1) == Some(&LONG) { (6, 2) } else { (3, 1) };
    let digits = bytes.get(offset..offset + width).ok_or(Graph6Error::TruncatedOrder)?;
    let n = digits.iter().fold(0usize, |acc, b| acc << 6 | (b - BIAS) as usize);
    Ok((n, offset + width))
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 1 << 18 {
        out.push(LONG);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + BIAS));
    } else {
        out.extend([LONG, LONG]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + BIAS));
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\r', '\n']);
    let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    match bytes.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':' | b';' | b'&') => return Err(Graph6Error::Unsupported),
        _ => {}
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(BIAS..=LONG).contains(&b)) {
        return Err(Graph6Error::BadByte(bad));
    }
    let (n, start) = decode_order(bytes)?;
    if n > 1 << 16 {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[start..];
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { expected, found: body.len() });
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonCanonicalPadding);
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.link(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Serialises to graph6 without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Renders the edge-list format with one-based labels.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// A graph together with the line on which its record started.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRecord {
    pub line: usize,
    pub graph: Graph,
}

fn meaningful(line: &str) -> Option<&str> {
    let trimmed = line.trim();
    (!trimmed.is_empty() && !trimmed.starts_with('#')).then_some(trimmed)
}

/// Streams graph6 records. Blank lines and `#` comments are skipped; a
/// malformed line yields an error and the stream continues.
pub fn graph6_records<R: BufRead>(reader: R) -> impl Iterator<Item = Result<GraphRecord, ParseError>> {
    reader.lines().enumerate().filter_map(|(index, line)| {
        let line_no = index + 1;
        match line {
            Err(e) => Some(Err(ParseError::new(line_no, e))),
            Ok(text) => meaningful(&text).map(|t| {
                parse_graph6(t)
                    .map(|graph| GraphRecord { line: line_no, graph })
                    .map_err(|e| ParseError::new(line_no, e))
            }),
        }
    })
}

/// Streams edge-list records; several graphs may follow one another.
/// Errors end the stream, since the record boundaries are lost.
pub fn edge_list_records<R: BufRead>(reader: R) -> EdgeListRecords<R> {
    EdgeListRecords { lines: reader.lines(), line_no: 0, failed: false }
}

pub struct EdgeListRecords<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
    failed: bool,
}

impl<R: BufRead> EdgeListRecords<R> {
    fn next_meaningful(&mut self) -> Option<Result<String, ParseError>> {
        loop {
            let line = self.lines.next()?;
            self.line_no += 1;
            match line {
                Err(e) => return Some(Err(ParseError::new(self.line_no, e))),
                Ok(text) => {
                    if let Some(t) = meaningful(&text) {
                        return Some(Ok(t.to_string()));
                    }
                }
            }
        }
    }

    fn pair(&self, text: &str) -> Result<(usize, usize), ParseError> {
        let mut fields = text.split_whitespace().map(str::parse::<usize>);
        match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(ParseError::new(self.line_no, format!("expected two integers, found {text:?}"))),
        }
    }

    fn record(&mut self, header: String) -> Result<GraphRecord, ParseError> {
        let start = self.line_no;
        let (n, m) = self.pair(&header)?;
        let mut edges = Vec::new();
        for _ in 0..m {
            let text = self
                .next_meaningful()
                .ok_or_else(|| ParseError::new(self.line_no, format!("expected {m} edges")))??;
            edges.push(self.pair(&text)?);
        }
        let graph = Graph::build(n, &edges).map_err(|e: GraphError| ParseError::new(self.line_no, e))?;
        Ok(GraphRecord { line: start, graph })
    }
}

impl<R: BufRead> Iterator for EdgeListRecords<R> {
    type Item = Result<GraphRecord, ParseError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let result = match self.next_meaningful()? {
            Ok(header) => self.record(header),
            Err(e) => Err(e),
        };
        self.failed = result.is_err();
        Some(result)
    }
}
