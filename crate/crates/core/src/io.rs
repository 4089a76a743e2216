//! graph6 and edge-list reading and writing.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}, byte {byte}: {message}")]
    Parse { line: usize, byte: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
}

fn parse_err(line: usize, byte: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, byte, message: message.into() }
}

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
}

/// graph6 bytes without header or trailing newline.
pub fn to_graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | row.contains(i) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    out
}

pub fn to_graph6(g: &Graph) -> String {
    String::from_utf8(to_graph6_bytes(g)).expect("graph6 is ASCII")
}

/// Decodes one graph6 record. `line` is only used for error positions.
pub fn parse_graph6_line(s: &str, line: usize) -> Result<Graph, IoError> {
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s).trim_end_matches(['\r', '\n']);
    let b = s.as_bytes();
    if let Some(pos) = b.iter().position(|&c| !(63..=126).contains(&c)) {
        return Err(parse_err(line, pos, format!("byte {:#04x} outside the graph6 range", b[pos])));
    }
    if b.is_empty() {
        return Err(parse_err(line, 0, "empty graph6 record"));
    }
    let (n, mut pos) = if b[0] != 126 {
        (b[0] as usize - 63, 1)
    } else if b.len() >= 2 && b[1] == 126 {
        if b.len() < 8 {
            return Err(parse_err(line, b.len(), "truncated 8-byte order field"));
        }
        (b[2..8].iter().fold(0usize, |a, &c| a << 6 | (c - 63) as usize), 8)
    } else {
        if b.len() < 4 {
            return Err(parse_err(line, b.len(), "truncated 4-byte order field"));
        }
        (b[1..4].iter().fold(0usize, |a, &c| a << 6 | (c - 63) as usize), 4)
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if b.len() - pos != need {
        return Err(parse_err(
            line,
            b.len().min(pos + need),
            format!("expected {need} adjacency bytes for n = {n}, found {}", b.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                cur = b[pos] - 63;
                pos += 1;
            }
            if cur >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && cur & ((1u8 << (6 - k % 6)) - 1) != 0 {
        return Err(parse_err(line, pos - 1, "nonzero padding bits"));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn from_graph6(s: &str) -> Result<Graph, IoError> {
    parse_graph6_line(s.trim(), 1)
}

/// Every non-blank record of a graph6 stream.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, IoError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6_line(line, i + 1)?);
    }
    Ok(out)
}

/// `n m` header followed by one `u v` line per edge, 0-based.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, 0, "missing `n m` header"))?;
    let nums = |line: usize, l: &str| -> Result<(usize, usize), IoError> {
        let mut it = l.split_whitespace();
        let mut next = || -> Result<usize, IoError> {
            let tok = it.next().ok_or_else(|| parse_err(line, l.len(), "expected two integers"))?;
            tok.parse().map_err(|_| parse_err(line, 0, format!("not an integer: {tok:?}")))
        };
        let pair = (next()?, next()?);
        if it.next().is_some() {
            return Err(parse_err(line, 0, "expected exactly two integers"));
        }
        Ok(pair)
    };
    let (n, m) = nums(hl, header)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = nums(line, l)?;
        if u >= n || v >= n {
            return Err(parse_err(line, 0, format!("edge {u} {v} references a vertex >= {n}")));
        }
        if u == v {
            return Err(parse_err(line, 0, format!("self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(line, 0, format!("duplicate edge {u} {v}")));
        }
        g = g.apply(&crate::graph::Edit::AddEdge { u, v })?;
        count += 1;
    }
    if count != m {
        return Err(parse_err(hl, 0, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// graph6 if the first non-blank line has no whitespace, edge list otherwise.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.starts_with(GRAPH6_HEADER) || !first.contains(char::is_whitespace) && !first.is_empty() && first.bytes().all(|c| (63..=126).contains(&c)) {
        Format::Graph6
    } else {
        Format::EdgeList
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    match detect_format(text) {
        Format::Graph6 => {
            let mut all = parse_graph6_stream(text)?;
            match all.len() {
                1 => Ok(all.remove(0)),
                0 => Err(parse_err(1, 0, "no graph in input")),
                k => Err(parse_err(2, 0, format!("expected one graph, found {k}"))),
            }
        }
        Format::EdgeList => parse_edge_list(text),
    }
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File { path: path.to_path_buf(), source })
}

/// `foo.g6` → `foo.g6.labels.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".labels.json");
    PathBuf::from(s)
}

/// Sidecar label maps are JSON objects `{"label": vertex, ...}`.
pub fn parse_label_map(text: &str, n: usize) -> Result<Vec<String>, IoError> {
    let map: BTreeMap<String, usize> =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    let mut out: Vec<Option<String>> = vec![None; n];
    for (label, v) in map {
        if v >= n {
            return Err(parse_err(1, 0, format!("label {label:?} points at vertex {v} >= {n}")));
        }
        if let Some(prev) = out[v].replace(label.clone()) {
            return Err(parse_err(1, 0, format!("vertex {v} labelled both {prev:?} and {label:?}")));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| parse_err(1, 0, format!("vertex {v} has no label"))))
        .collect()
}

pub fn label_map_json(g: &Graph) -> Option<String> {
    let labels = g.labels()?;
    let map: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(v, l)| (l.as_str(), v)).collect();
    Some(serde_json::to_string_pretty(&map).expect("plain map"))
}

/// Reads a graph file in either format, attaching sidecar labels if present.
pub fn read_graph_file(path: &Path) -> Result<Graph, IoError> {
    let g = parse_graph(&read(path)?)?;
    let side = sidecar_path(path);
    if side.exists() {
        let labels = parse_label_map(&read(&side)?, g.order())?;
        return Ok(g.with_labels(labels)?);
    }
    Ok(g)
}

/// Reads a graph6 stream, transparently gunzipping `.gz` files.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, IoError> {
    let text = if path.extension().is_some_and(|e| e == "gz") {
        use std::io::Read;
        let f = fs::File::open(path).map_err(|source| IoError::File { path: path.to_path_buf(), source })?;
        let mut s = String::new();
        flate2::read::GzDecoder::new(f)
            .read_to_string(&mut s)
            .map_err(|source| IoError::File { path: path.to_path_buf(), source })?;
        s
    } else {
        read(path)?
    };
    parse_graph6_stream(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        // the petersen graph as printed by nauty
        let p = from_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn header_and_padding() {
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
        assert!(matches!(from_graph6("B~"), Err(IoError::Parse { .. })));
        assert!(matches!(from_graph6("C~~"), Err(IoError::Parse { .. })));
    }

    #[test]
    fn long_order_field() {
        let g = Graph::path(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 7\n").is_err());
        assert_eq!(detect_format("3 1\n0 1\n"), Format::EdgeList);
        assert_eq!(detect_format("C~\n"), Format::Graph6);
    }

    #[test]
    fn label_maps() {
        let labels = parse_label_map(r#"{"a": 1, "b": 0}"#, 2).unwrap();
        assert_eq!(labels, vec!["b", "a"]);
        assert!(parse_label_map(r#"{"a": 0}"#, 2).is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = to_graph6(&g);
            prop_assert_eq!(&from_graph6(&s).unwrap(), &g);
            prop_assert_eq!(to_graph6(&from_graph6(&s).unwrap()), s);
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
