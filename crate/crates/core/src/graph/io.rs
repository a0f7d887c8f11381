//! Edge-list and graph6 encodings.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` (0-indexed). Blank
//! lines and lines starting with `#` are ignored. graph6 is the standard
//! dense encoding, short form only (`n <= 62`).

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::parse("format", format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text.trim()),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::EdgeList => Ok(write_edge_list(g)),
        Format::Graph6 => write_graph6(g),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let numbers = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(format!("line {lineno}"), format!("expected two integers, got {line:?}")));
        }
        let parse = |f: &str| {
            f.parse::<usize>()
                .map_err(|_| Error::parse(format!("line {lineno}"), format!("not a nonnegative integer: {f:?}")))
        };
        Ok((parse(fields[0])?, parse(fields[1])?))
    };

    let (header_line, header) = lines.next().ok_or_else(|| Error::parse("line 1", "missing header \"n m\""))?;
    let (n, m) = numbers(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let (u, v) = numbers(lineno, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(format!("line {lineno}"), format!("endpoint out of range for n={n}")));
        }
        if u == v {
            return Err(Error::parse(format!("line {lineno}"), format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse("end of input", format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let offset = text.len() - body.len();
    let bytes = body.as_bytes();
    let first = *bytes.first().ok_or_else(|| Error::parse(format!("byte {offset}"), "empty graph6 string"))?;
    if !(63..=125).contains(&first) {
        return Err(Error::parse(
            format!("byte {offset}"),
            "vertex count byte outside 63..=125 (only n <= 62 is supported)",
        ));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != needed {
        return Err(Error::parse(
            format!("byte {}", offset + 1 + data.len().min(needed)),
            format!("expected {needed} data bytes for n={n}, found {}", data.len()),
        ));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(format!("byte {}", offset + 1 + i), format!("invalid graph6 character {:?}", b as char)));
        }
        let x = b - 63;
        for k in (0..6).rev() {
            bits.push(x >> k & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::CapExceeded { what: "graph6 short form vertices", got: n, cap: 62 });
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x = x << 1 | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push((x + 63) as char);
    }
    Ok(out)
}
