//! Finite simple undirected graphs over bitset adjacency rows.
//!
//! Vertices are `0..n` with `n <= 64`. Graphs are immutable after
//! construction; every operation that "changes" a graph builds a new one.

use crate::error::{Error, Result};
use crate::set::{low_mask, VertexSet};
use std::fmt;

/// Hard cap on the vertex count; one bitset word per adjacency row.
pub const VERTEX_CAP: usize = 64;

/// A simple undirected graph on `n <= 64` vertices.
///
/// Equality and hashing look only at the labelled structure `(n, adj)`;
/// the optional text tag is ignored.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl Graph {
    /// The edgeless graph `N_n` (building block for all constructors).
    pub fn new(n: usize) -> Result<Self> {
        if n > VERTEX_CAP {
            return Err(Error::CapExceeded {
                needed: n,
                cap: VERTEX_CAP,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0u64; n],
            label: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::InvalidConstruction(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    // ---- constructors ------------------------------------------------

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConstruction("path needs n >= 1".into()));
        }
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge_mut(v - 1, v)?;
        }
        Ok(g.with_label(format!("P{n}")))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidConstruction("cycle needs n >= 3".into()));
        }
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge_mut(v - 1, v)?;
        }
        g.add_edge_mut(n - 1, 0)?;
        Ok(g.with_label(format!("C{n}")))
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConstruction("complete needs n >= 1".into()));
        }
        let mut g = Graph::new(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g.with_label(format!("K{n}")))
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConstruction(
                "empty graph needs n >= 1".into(),
            ));
        }
        Ok(Graph::new(n)?.with_label(format!("N{n}")))
    }

    /// `K_{r,t}`: the `r`-side comes first in the vertex order.
    pub fn complete_bipartite(r: usize, t: usize) -> Result<Self> {
        Self::complete_multipartite(&[r, t])
    }

    /// Complete multipartite graph; parts laid out in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidConstruction(
                "multipartite parts must all be >= 1".into(),
            ));
        }
        let n: usize = parts.iter().sum();
        let mut g = Graph::new(n)?;
        let all = low_mask(n);
        let mut offset = 0;
        for &p in parts {
            let part_mask = low_mask(p) << offset;
            for v in offset..offset + p {
                g.adj[v] = all & !part_mask;
            }
            offset += p;
        }
        let tag = parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        Ok(g.with_label(format!("K{{{tag}}}")))
    }

    /// Corona `K_r x K_1`: clique vertices `0..r`, pendant partner of `i` is `r+i`.
    pub fn corona_k1(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidConstruction("corona needs r >= 1".into()));
        }
        let mut g = Graph::new(2 * r)?;
        for u in 0..r {
            for v in u + 1..r {
                g.add_edge_mut(u, v)?;
            }
            g.add_edge_mut(u, r + u)?;
        }
        Ok(g.with_label(format!("K{r}xK1")))
    }

    /// Disjoint union, pieces renumbered in the given order.
    pub fn disjoint_union(pieces: &[Graph]) -> Result<Self> {
        let n: usize = pieces.iter().map(|g| g.n).sum();
        let mut g = Graph::new(n)?;
        let mut offset = 0;
        for piece in pieces {
            for v in 0..piece.n {
                g.adj[offset + v] = piece.adj[v] << offset;
            }
            offset += piece.n;
        }
        Ok(g)
    }

    // ---- queries -----------------------------------------------------

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw adjacency row of `v`; callers must guarantee `v < n`.
    #[inline]
    pub(crate) fn nbits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbourhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.n, self.adj[v]))
    }

    pub fn closed_neighbourhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.n, self.adj[v] | (1u64 << v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_universal(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.degree(v) == self.n - 1)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in crate::set::bits_of(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// No edges at all (every `N_n`, including `n = 0`).
    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&a| a == 0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in crate::set::bits_of(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == low_mask(self.n)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    // ---- derived graphs ----------------------------------------------

    /// The complement graph: off-diagonal adjacency flipped.
    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let mut g = Graph::new(self.n).expect("same order");
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !(1u64 << v);
        }
        g
    }

    /// Induced subgraph on `s`, vertices reindexed in ascending order of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        debug_assert_eq!(s.universe(), self.n);
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::new(verts.len()).expect("subgraph within cap");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        g
    }

    /// Line graph: one vertex per edge of `self`, taken in lexicographic
    /// `(u, v)` order with `u < v`; two edge-vertices are adjacent when the
    /// underlying edges share an endpoint. Returns the edge list used for
    /// the indexing so callers can decode vertex indices back to edges.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges = self.edges();
        if edges.len() > VERTEX_CAP {
            return Err(Error::CapExceeded {
                needed: edges.len(),
                cap: VERTEX_CAP,
            });
        }
        let mut g = Graph::new(edges.len())?;
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        Ok((g, edges))
    }

    // ---- graph6 ------------------------------------------------------

    /// Parses one line of graph6 (the optional `>>graph6<<` header is
    /// accepted and skipped).
    pub fn parse_graph6(line: &str) -> Result<Self> {
        let s = line.trim_end_matches(['\r', '\n']);
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty input".into()));
        }
        let (n, header_len) = Self::parse_graph6_size(bytes)?;
        if n > VERTEX_CAP {
            return Err(Error::CapExceeded {
                needed: n,
                cap: VERTEX_CAP,
            });
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        let data = &bytes[header_len..];
        if data.len() != nbytes {
            return Err(Error::Graph6(format!(
                "expected {nbytes} data bytes for n={n}, found {}",
                data.len()
            )));
        }
        for &b in data {
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(format!("byte {b} out of range")));
            }
        }
        let mut g = Graph::new(n)?;
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                let val = data[k / 6] - 63;
                if (val >> (5 - k % 6)) & 1 == 1 {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
                k += 1;
            }
        }
        for pad in nbits..nbytes * 6 {
            let val = data[pad / 6] - 63;
            if (val >> (5 - pad % 6)) & 1 == 1 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
        }
        Ok(g)
    }

    fn parse_graph6_size(bytes: &[u8]) -> Result<(usize, usize)> {
        if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                if bytes.len() < 8 {
                    return Err(Error::Graph6("truncated size header".into()));
                }
                let mut n = 0usize;
                for &b in &bytes[2..8] {
                    if !(63..=126).contains(&b) {
                        return Err(Error::Graph6(format!("size byte {b} out of range")));
                    }
                    n = (n << 6) | (b - 63) as usize;
                }
                Ok((n, 8))
            } else {
                if bytes.len() < 4 {
                    return Err(Error::Graph6("truncated size header".into()));
                }
                let mut n = 0usize;
                for &b in &bytes[1..4] {
                    if !(63..=126).contains(&b) {
                        return Err(Error::Graph6(format!("size byte {b} out of range")));
                    }
                    n = (n << 6) | (b - 63) as usize;
                }
                Ok((n, 4))
            }
        } else {
            if !(63..=125).contains(&bytes[0]) {
                return Err(Error::Graph6(format!(
                    "size byte {} out of range",
                    bytes[0]
                )));
            }
            Ok(((bytes[0] - 63) as usize, 1))
        }
    }

    /// Canonical (minimal, headerless) graph6 encoding.
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(self.n as u8 + 63);
        } else {
            out.push(126);
            out.push(((self.n >> 12) & 63) as u8 + 63);
            out.push(((self.n >> 6) & 63) as u8 + 63);
            out.push((self.n & 63) as u8 + 63);
        }
        let mut acc = 0u8;
        let mut fill = 0usize;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | ((self.adj[i] >> j) & 1) as u8;
                fill += 1;
                if fill == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    fill = 0;
                }
            }
        }
        if fill > 0 {
            out.push((acc << (6 - fill)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are ascii")
    }

    // ---- edge-list text ----------------------------------------------

    /// Parses the plain edge-list format: one `u v` pair per line, 0-based.
    /// Blank lines and lines starting with `#` are skipped; the vertex count
    /// is the largest endpoint plus one (graphs with trailing isolated
    /// vertices need graph6).
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => {
                    let u: usize = a.parse().map_err(|_| {
                        Error::EdgeList(format!("line {}: bad vertex `{a}`", lineno + 1))
                    })?;
                    let v: usize = b.parse().map_err(|_| {
                        Error::EdgeList(format!("line {}: bad vertex `{b}`", lineno + 1))
                    })?;
                    (u, v)
                }
                _ => {
                    return Err(Error::EdgeList(format!(
                        "line {}: expected `u v`",
                        lineno + 1
                    )))
                }
            };
            if u == v {
                return Err(Error::EdgeList(format!("line {}: loop at {u}", lineno + 1)));
            }
            max = max.max(u).max(v);
            edges.push((u, v));
        }
        if edges.is_empty() {
            return Err(Error::EdgeList("no edges found".into()));
        }
        Graph::from_edges(max + 1, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Reads a graph from file contents, auto-detecting the format: lines
    /// containing whitespace are treated as an edge list, otherwise the file
    /// must hold exactly one graph6 line.
    pub fn parse_auto(text: &str) -> Result<Self> {
        let nonempty: Vec<&str> = text
            .lines()
            .map(str::trim_end)
            .filter(|l| !l.trim().is_empty())
            .collect();
        if nonempty.is_empty() {
            return Err(Error::Graph6("empty input".into()));
        }
        if nonempty
            .iter()
            .any(|l| l.starts_with('#') || l.trim().contains(char::is_whitespace))
        {
            Graph::parse_edge_list(text)
        } else if nonempty.len() == 1 {
            Graph::parse_graph6(nonempty[0])
        } else {
            Err(Error::Graph6(
                "file holds several graph6 lines; expected exactly one graph".into(),
            ))
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, g6={:?}",
            self.n,
            self.edge_count(),
            self.to_graph6()
        )?;
        if let Some(l) = &self.label {
            write!(f, ", {l}")?;
        }
        write!(f, ")")
    }
}
