//! Recognizer and constructor for the layered family of graphs whose super
//! domination number is one less than their order.
//!
//! A member is built from cliques `V_1, .., V_k` and empty layers
//! `V_1', .., V_{k'}'` with `k' = k` or `k' = k - 1`: cliques are pairwise
//! completely joined, a clique vertex in `V_i` sees an empty-layer vertex in
//! `V_j'` exactly when `i <= j`, and empty layers span no edges at all.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{bits_of, low_mask, VertexSet};
use serde::Serialize;

/// A layered decomposition witnessing family membership.
#[derive(Clone, Debug, Serialize)]
pub struct FDecomposition {
    /// `V_1, .., V_k`, each inducing a clique.
    pub cliques: Vec<VertexSet>,
    /// `V_1', .., V_{k'}'`, each inducing an empty graph; possibly one
    /// shorter than `cliques`.
    pub empties: Vec<VertexSet>,
}

impl FDecomposition {
    pub fn k(&self) -> usize {
        self.cliques.len()
    }

    pub fn k_prime(&self) -> usize {
        self.empties.len()
    }

    /// Layer sizes `(clique sizes, empty-layer sizes)`.
    pub fn shape(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.cliques.iter().map(VertexSet::len).collect(),
            self.empties.iter().map(VertexSet::len).collect(),
        )
    }

    /// Full check of the defining edge rules against `g`: layer counts,
    /// disjointness, coverage, and the exact adjacency pattern of every
    /// vertex pair.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        let k = self.k();
        let kp = self.k_prime();
        if k == 0 || (kp != k && kp + 1 != k) {
            return false;
        }
        let mut union = 0u64;
        for s in self.cliques.iter().chain(self.empties.iter()) {
            if s.is_empty() || s.universe() != n || s.bits() & union != 0 {
                return false;
            }
            union |= s.bits();
        }
        if union != low_mask(n) {
            return false;
        }
        let layer = |v: usize| -> (bool, usize) {
            for (i, s) in self.cliques.iter().enumerate() {
                if s.contains(v) {
                    return (true, i);
                }
            }
            for (j, s) in self.empties.iter().enumerate() {
                if s.contains(v) {
                    return (false, j);
                }
            }
            unreachable!("union covers every vertex")
        };
        for u in 0..n {
            for v in u + 1..n {
                let expected = match (layer(u), layer(v)) {
                    ((true, _), (true, _)) => true,
                    ((false, _), (false, _)) => false,
                    ((true, i), (false, j)) | ((false, j), (true, i)) => i <= j,
                };
                if g.has_edge(u, v) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// The neighbourhood laws implied by the layer structure, checked
    /// literally rather than derived from `validate`: closed neighbourhoods
    /// of clique vertices, open neighbourhoods of empty-layer vertices,
    /// equality inside a layer, and nesting across layers.
    pub fn satisfies_neighbourhood_laws(&self, g: &Graph) -> bool {
        let all_cliques: u64 = self
            .cliques
            .iter()
            .map(VertexSet::bits)
            .fold(0, |a, b| a | b);
        let closed = |v: usize| g.nbits(v) | (1u64 << v);

        for (i, s) in self.cliques.iter().enumerate() {
            let tail: u64 = self.empties[i.min(self.empties.len())..]
                .iter()
                .map(VertexSet::bits)
                .fold(0, |a, b| a | b);
            for x in s.iter() {
                if closed(x) != all_cliques | tail {
                    return false;
                }
            }
        }
        for (j, s) in self.empties.iter().enumerate() {
            let head: u64 = self.cliques[..=j]
                .iter()
                .map(VertexSet::bits)
                .fold(0, |a, b| a | b);
            for y in s.iter() {
                if g.nbits(y) != head {
                    return false;
                }
            }
        }
        for s in &self.cliques {
            let mut it = s.iter();
            if let Some(first) = it.next() {
                for x in it {
                    if closed(x) != closed(first) {
                        return false;
                    }
                }
            }
        }
        for s in &self.empties {
            let mut it = s.iter();
            if let Some(first) = it.next() {
                for x in it {
                    if g.nbits(x) != g.nbits(first) {
                        return false;
                    }
                }
            }
        }
        for i in 0..self.cliques.len() {
            for j in i + 1..self.cliques.len() {
                for x in self.cliques[i].iter() {
                    for y in self.cliques[j].iter() {
                        if closed(y) & !closed(x) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        for i in 0..self.empties.len() {
            for j in i + 1..self.empties.len() {
                for x in self.empties[i].iter() {
                    for y in self.empties[j].iter() {
                        if g.nbits(x) & !g.nbits(y) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        // every empty-layer neighbourhood sits inside every clique vertex's
        // closed neighbourhood
        for s in &self.cliques {
            for t in &self.empties {
                for x in s.iter() {
                    for y in t.iter() {
                        if g.nbits(y) & !closed(x) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Peels `g` layer by layer: the universal vertices of the current residue
/// form the next clique, the residue vertices seeing exactly that clique
/// form its companion empty layer, and the rest is the next residue. The
/// peeled decomposition is then validated in full against the edge rules,
/// so a graph outside the family can never be accepted.
///
/// Connected input required.
pub fn recognize(g: &Graph) -> Result<Option<FDecomposition>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let mut cliques = Vec::new();
    let mut empties = Vec::new();
    let mut active = low_mask(n);
    while active != 0 {
        let mut universal = 0u64;
        for v in bits_of(active) {
            if (g.nbits(v) | (1u64 << v)) & active == active {
                universal |= 1u64 << v;
            }
        }
        if universal == 0 {
            return Ok(None);
        }
        let mut companions = 0u64;
        for v in bits_of(active & !universal) {
            if g.nbits(v) & active == universal {
                companions |= 1u64 << v;
            }
        }
        let rest = active & !universal & !companions;
        if companions == 0 && rest != 0 {
            // a member has a companion layer at every level but the last
            return Ok(None);
        }
        cliques.push(VertexSet::from_bits(n, universal));
        if companions != 0 {
            empties.push(VertexSet::from_bits(n, companions));
        }
        active = rest;
    }
    let dec = FDecomposition { cliques, empties };
    if dec.validate(g) {
        Ok(Some(dec))
    } else {
        Ok(None)
    }
}

/// Builds the member with the given layer sizes, cliques first
/// (`V_1, .., V_k`, then `V_1', .., V_{k'}'`, consecutive vertex indices).
///
/// The shape must be the one the peeling in [`recognize`] reports, so that
/// construction and recognition round-trip exactly. Two degenerate shapes
/// are rejected: a singleton final empty layer paired with a final clique
/// (the two merge into one larger clique), and a singleton final clique
/// without a companion (it collapses into the previous empty layer).
pub fn construct_f(sizes_cliques: &[usize], sizes_empties: &[usize]) -> Result<Graph> {
    let k = sizes_cliques.len();
    let kp = sizes_empties.len();
    if k == 0 {
        return Err(Error::ShapeViolation(
            "at least one clique layer is required".into(),
        ));
    }
    if kp != k && kp + 1 != k {
        return Err(Error::ShapeViolation(format!(
            "{kp} empty layers incompatible with {k} cliques (need {k} or {})",
            k - 1
        )));
    }
    if sizes_cliques.iter().chain(sizes_empties).any(|&s| s == 0) {
        return Err(Error::ShapeViolation("layer sizes must be positive".into()));
    }
    if kp == k && sizes_empties[kp - 1] == 1 {
        return Err(Error::ShapeViolation(
            "a singleton final empty layer merges into the final clique; \
             grow that clique by one instead"
                .into(),
        ));
    }
    if kp + 1 == k && k >= 2 && sizes_cliques[k - 1] == 1 {
        return Err(Error::ShapeViolation(
            "a singleton final clique without companions collapses into the \
             previous empty layer; grow that layer by one instead"
                .into(),
        ));
    }

    let n: usize = sizes_cliques.iter().chain(sizes_empties).sum();
    let mut clique_spans = Vec::with_capacity(k);
    let mut offset = 0;
    for &s in sizes_cliques {
        clique_spans.push((offset, s));
        offset += s;
    }
    let mut empty_spans = Vec::with_capacity(kp);
    for &s in sizes_empties {
        empty_spans.push((offset, s));
        offset += s;
    }

    let mut edges = Vec::new();
    for (i, &(ci, si)) in clique_spans.iter().enumerate() {
        for a in ci..ci + si {
            for b in a + 1..ci + si {
                edges.push((a, b));
            }
        }
        for &(cj, sj) in &clique_spans[i + 1..] {
            for a in ci..ci + si {
                for b in cj..cj + sj {
                    edges.push((a, b));
                }
            }
        }
        for &(ej, sj) in &empty_spans[i..] {
            for a in ci..ci + si {
                for b in ej..ej + sj {
                    edges.push((a, b));
                }
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Whether `gamma_sp(g) = n - 1`, decided structurally by the recognizer.
/// Connected input required. (The one-vertex graph is accepted although its
/// super domination number is 1, not 0; the characterization concerns graphs
/// with at least two vertices.)
pub fn is_gamma_sp_n_minus_1(g: &Graph) -> Result<bool> {
    Ok(recognize(g)?.is_some())
}
