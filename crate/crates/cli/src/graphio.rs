//! Graph ingestion: whitespace-separated edge lists and graph6 strings.

use irrwalk_core::spectra::Graph;

#[derive(Debug)]
pub enum ParseError {
    Malformed { line: usize, reason: String },
    Graph6(String),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Malformed { line, reason } => {
                write!(f, "edge list line {}: {}", line, reason)
            }
            ParseError::Graph6(reason) => write!(f, "graph6: {}", reason),
        }
    }
}

impl std::error::Error for ParseError {}

/// Edge list: one "u v" pair per line, 0-indexed; blank lines are skipped;
/// the vertex count is max index + 1. Self-loops and duplicates are
/// rejected with the offending line number.
pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut max_vertex = 0usize;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let u = parts.next().ok_or_else(|| ParseError::Malformed {
            line: line_no,
            reason: "expected two vertex indices".into(),
        })?;
        let v = parts.next().ok_or_else(|| ParseError::Malformed {
            line: line_no,
            reason: "expected two vertex indices, found one".into(),
        })?;
        if parts.next().is_some() {
            return Err(ParseError::Malformed {
                line: line_no,
                reason: "expected exactly two vertex indices".into(),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Malformed {
                line: line_no,
                reason: format!("'{}' is not a vertex index", s),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(ParseError::Malformed {
                line: line_no,
                reason: format!("self-loop at vertex {}", u),
            });
        }
        max_vertex = max_vertex.max(u).max(v);
        edges.push((u, v, line_no));
    }
    let mut g = Graph::empty(max_vertex + 1);
    for (u, v, line_no) in edges {
        g.add_edge(u, v).map_err(|e| ParseError::Malformed {
            line: line_no,
            reason: e.to_string(),
        })?;
    }
    Ok(g)
}

/// graph6 (n ≤ 62): one byte 63+n, then ceil(n(n−1)/2 / 6) bytes of
/// 63+6 bits filling the upper triangle column by column.
pub fn parse_graph6(input: &str) -> Result<Graph, ParseError> {
    let s = input.trim();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Graph6("empty input".into()));
    }
    if bytes[0] == 126 {
        return Err(ParseError::Graph6(
            "extended sizes (n > 62) are not supported".into(),
        ));
    }
    if bytes[0] < 63 || bytes[0] > 125 {
        return Err(ParseError::Graph6(format!(
            "bad size byte '{}'",
            bytes[0] as char
        )));
    }
    let n = (bytes[0] - 63) as usize;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let body_len = bits_needed.div_ceil(6);
    if bytes.len() != 1 + body_len {
        return Err(ParseError::Graph6(format!(
            "expected {} data bytes for n = {}, found {}",
            body_len,
            n,
            bytes.len() - 1
        )));
    }
    let mut bits: Vec<bool> = Vec::with_capacity(body_len * 6);
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Graph6(format!("bad data byte '{}'", b as char)));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v & (1 << k) != 0);
        }
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                g.add_edge(u, v)
                    .map_err(|e| ParseError::Graph6(e.to_string()))?;
            }
            idx += 1;
        }
    }
    Ok(g)
}
