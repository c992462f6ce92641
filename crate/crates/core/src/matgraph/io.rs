//! Edge-list and graph6 readers/writers.

use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// Optional `n <N>` header, then one `i j` pair per line (1-based), `#` comments.
    EdgeList,
    Graph6,
}

impl GraphFormat {
    /// `.g6` / `.graph6` select graph6, everything else is an edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn parse_graph(text: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

fn parse_edge_list(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| {
        Error::parse(format!("byte {}", e.valid_up_to()), "edge list is not UTF-8")
    })?;
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let at = || format!("line {}", lineno + 1);
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() == 2 && toks[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(Error::parse(at(), "header `n <N>` must come first"));
            }
            declared = Some(
                toks[1]
                    .parse()
                    .map_err(|_| Error::parse(at(), "vertex count is not a number"))?,
            );
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::parse(at(), format!("expected `i j`, got `{line}`")));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&toks) {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::parse(at(), format!("`{tok}` is not a vertex label")))?;
            if v == 0 {
                return Err(Error::parse(at(), "vertex labels are 1-based"));
            }
            *slot = v - 1;
        }
        if ends[0] == ends[1] {
            return Err(Error::parse(at(), "loops are not allowed"));
        }
        edges.push((ends[0], ends[1], lineno + 1));
    }
    let max_label = edges.iter().map(|&(i, j, _)| i.max(j) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < max_label => {
            return Err(Error::parse(
                "header",
                format!("declared n = {n} but label {max_label} is used"),
            ))
        }
        Some(n) => n,
        None => max_label,
    };
    let mut g = Graph::empty(n);
    for (i, j, lineno) in edges {
        if g.has_edge(i, j) {
            return Err(Error::parse(format!("line {lineno}"), "duplicate edge"));
        }
        g.add_edge(i, j)?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}

fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text;
    const HEADER: &[u8] = b">>graph6<<";
    let mut offset = 0;
    if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        offset = HEADER.len();
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    let at = |k: usize| format!("byte {}", offset + k);
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(at(k), format!("invalid graph6 byte 0x{b:02x}")));
        }
    }
    let (n, start) = match bytes {
        [] => return Err(Error::parse(at(0), "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(at(2), "truncated vertex count"));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(at(1), "truncated vertex count"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() != nbytes {
        return Err(Error::parse(
            at(start + body.len().min(nbytes)),
            format!("expected {nbytes} adjacency bytes for n = {n}, found {}", body.len()),
        ));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(Error::parse(at(start + k / 6), "nonzero padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut count = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            count += 1;
            if count == 6 {
                out.push(acc + 63);
                acc = 0;
                count = 0;
            }
        }
    }
    if count > 0 {
        out.push((acc << (6 - count)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
