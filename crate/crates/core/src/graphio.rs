//! Simple undirected graphs, graph6 and 0/1-matrix text, and seeded
//! `G(n, 1/2)` sampling.

use std::fmt;

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::exactla::IntMatrix;
use crate::{Error, Result};

/// Default upper bound on graph order accepted by the parsers.
pub const DEFAULT_MAX_ORDER: usize = 64;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// A simple graph on vertices `0..n`, stored as a symmetric 0/1 adjacency
/// matrix with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: u.max(v) + 1,
                });
            }
            if u == v {
                return Err(Error::NonzeroDiagonal(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Validates symmetry, zero diagonal and 0/1 entries.
    pub fn from_matrix(m: &IntMatrix) -> Result<Self> {
        m.require_square()?;
        let n = m.rows();
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in 0..n {
                let v = &m[(i, j)];
                if *v != 0.into() && *v != 1.into() {
                    return Err(Error::MatrixText {
                        line: i + 1,
                        column: j + 1,
                        message: format!("entry {v} is not 0 or 1"),
                    });
                }
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::Asymmetric { i, j });
                }
            }
            if m[(i, i)] != 0.into() {
                return Err(Error::NonzeroDiagonal(i));
            }
            for j in 0..n {
                g.adj[i * n + j] = m[(i, j)] == 1.into();
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        self.adj[u * self.n + v] = on;
        self.adj[v * self.n + u] = on;
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    /// `A(G)` as an integer matrix.
    pub fn adjacency(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| u8::from(self.has_edge(i, j)))
    }

    /// `J - I - A`.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                g.adj[i * self.n + j] = i != j && !self.has_edge(i, j);
            }
        }
        g
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    pub fn to_graph6(&self) -> String {
        let mut out = String::new();
        encode_order(self.n, &mut out);
        let mut acc = 0u8;
        let mut nbits = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = (acc << 1) | u8::from(self.has_edge(u, v));
                nbits += 1;
                if nbits == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(((acc << (6 - nbits)) + 63) as char);
        }
        out
    }

    /// Rows of `0`/`1` separated by single spaces.
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<&str> = (0..self.n)
                .map(|j| if self.has_edge(i, j) { "1" } else { "0" })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line, with the default order limit.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_with_limit(text, DEFAULT_MAX_ORDER)
}

pub fn parse_graph6_with_limit(text: &str, max_order: usize) -> Result<Graph> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if bytes.starts_with(GRAPH6_HEADER.as_bytes()) {
        bytes = &bytes[GRAPH6_HEADER.len()..];
        base = GRAPH6_HEADER.len();
    }
    if bytes.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(base + pos, format!("byte 0x{:02x} outside the graph6 range", bytes[pos])));
    }
    let six = |i: usize| (bytes[i] - 63) as usize;
    let (n, mut pos) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(g6_err(base + bytes.len(), "truncated 8-byte order header"));
        }
        ((2..8).fold(0, |acc, i| (acc << 6) | six(i)), 8)
    } else {
        if bytes.len() < 4 {
            return Err(g6_err(base + bytes.len(), "truncated 4-byte order header"));
        }
        ((1..4).fold(0, |acc, i| (acc << 6) | six(i)), 4)
    };
    if n > max_order {
        return Err(Error::OrderTooLarge { n, max: max_order });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < need {
        return Err(g6_err(base + bytes.len(), format!("expected {need} data bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(g6_err(base + pos + need, "trailing bytes after graph data"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = six(pos + k / 6);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(u, v, true);
            }
            k += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

/// Parses whitespace-separated rows of `0`/`1` forming a square symmetric
/// matrix with zero diagonal. Blank lines and `#` comments are ignored.
pub fn parse_adjacency(text: &str) -> Result<Graph> {
    parse_adjacency_with_limit(text, DEFAULT_MAX_ORDER)
}

pub fn parse_adjacency_with_limit(text: &str, max_order: usize) -> Result<Graph> {
    let mut rows: Vec<(usize, Vec<bool>)> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        for (col, tok) in line.split_whitespace().enumerate() {
            row.push(match tok {
                "0" => false,
                "1" => true,
                _ => {
                    return Err(Error::MatrixText {
                        line: ln + 1,
                        column: col + 1,
                        message: format!("token {tok:?} is not 0 or 1"),
                    })
                }
            });
        }
        if !row.is_empty() {
            rows.push((ln + 1, row));
        }
    }
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > max_order {
        return Err(Error::OrderTooLarge { n, max: max_order });
    }
    if let Some((_, row)) = rows.iter().find(|(_, r)| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    let mut g = Graph::empty(n);
    for (i, (_, row)) in rows.iter().enumerate() {
        if row[i] {
            return Err(Error::NonzeroDiagonal(i));
        }
        for j in 0..n {
            if row[j] != rows[j].1[i] {
                return Err(Error::Asymmetric { i, j });
            }
            g.adj[i * n + j] = row[j];
        }
    }
    Ok(g)
}

/// A deterministic random stream for one graph, fixed by
/// `(master_seed, index)`. Streams with different indices are independent
/// ChaCha20 streams under the same key, so generation order is irrelevant.
#[derive(Clone, Debug)]
pub struct GraphStream {
    rng: ChaCha20Rng,
}

impl GraphStream {
    pub fn new(master_seed: u64, index: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(master_seed);
        rng.set_stream(index);
        rng.set_word_pos(0);
        GraphStream { rng }
    }
}

/// Samples `G(n, 1/2)`: one unbiased bit per vertex pair, pairs taken in
/// graph6 order (column-major upper triangle).
pub fn random_gnp_half(n: usize, stream: &mut GraphStream) -> Graph {
    let mut g = Graph::empty(n);
    let mut word = 0u64;
    let mut left = 0;
    for v in 1..n {
        for u in 0..v {
            if left == 0 {
                word = stream.rng.next_u64();
                left = 64;
            }
            if word & 1 == 1 {
                g.set_edge(u, v, true);
            }
            word >>= 1;
            left -= 1;
        }
    }
    g
}
