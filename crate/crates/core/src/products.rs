//! Lexicographic products `G o H` (one copy of `H_i` per vertex of `G`,
//! copies fully joined along the edges of `G`) and join graphs `G + H`,
//! together with the coordinate bookkeeping needed to project vertex sets
//! of a product onto single copies.

use crate::error::{Error, Result};
use crate::graph::{Graph, VERTEX_CAP};
use crate::set::{bits_of, low_mask, VertexSet};

/// A lexicographic product together with its coordinate maps.
///
/// Vertices are numbered copy-major: all of copy `0`, then copy `1`, and so
/// on, so each copy occupies a contiguous bit range of the product.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    base: Graph,
    g_order: usize,
    h_orders: Vec<usize>,
    offsets: Vec<usize>,
}

impl ProductGraph {
    /// The product graph itself.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn into_base(self) -> Graph {
        self.base
    }

    pub fn g_order(&self) -> usize {
        self.g_order
    }

    pub fn h_orders(&self) -> &[usize] {
        &self.h_orders
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Copy index and in-copy index of a product vertex.
    pub fn coord_of(&self, v: usize) -> Result<(usize, usize)> {
        if v >= self.base.n() {
            return Err(Error::VertexOutOfRange {
                v,
                n: self.base.n(),
            });
        }
        let i = match self.offsets.binary_search(&v) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        Ok((i, v - self.offsets[i]))
    }

    pub fn index_of(&self, i: usize, j: usize) -> Result<usize> {
        if i >= self.g_order {
            return Err(Error::VertexOutOfRange {
                v: i,
                n: self.g_order,
            });
        }
        if j >= self.h_orders[i] {
            return Err(Error::VertexOutOfRange {
                v: j,
                n: self.h_orders[i],
            });
        }
        Ok(self.offsets[i] + j)
    }

    /// Projection `W_g`: the in-copy indices of the members of `w` lying in
    /// copy `i`, as a subset of `0..|H_i|`.
    pub fn project(&self, w: &VertexSet, i: usize) -> Result<VertexSet> {
        if i >= self.g_order {
            return Err(Error::VertexOutOfRange {
                v: i,
                n: self.g_order,
            });
        }
        let span = low_mask(self.h_orders[i]) << self.offsets[i];
        let bits = (w.bits() & span) >> self.offsets[i];
        Ok(VertexSet::from_bits(self.h_orders[i], bits))
    }
}

/// Builds `G o {H_0, .., H_{n-1}}`. A single-element `hs` is replicated for
/// the uniform product `G o H`. Vertices `(i, j)` and `(k, l)` are adjacent
/// exactly when `ik` is an edge of `G`, or `i = k` and `jl` is an edge of
/// `H_i`.
pub fn lex_product(g: &Graph, hs: &[Graph]) -> Result<ProductGraph> {
    let n = g.n();
    let factors: Vec<&Graph> = if hs.len() == n {
        hs.iter().collect()
    } else if hs.len() == 1 && n > 0 {
        vec![&hs[0]; n]
    } else {
        return Err(Error::OrderMismatch {
            expected: n,
            got: hs.len(),
        });
    };
    if factors.iter().any(|h| h.n() == 0) {
        return Err(Error::InvalidConstruction(
            "every factor graph must have at least one vertex".into(),
        ));
    }

    let h_orders: Vec<usize> = factors.iter().map(|h| h.n()).collect();
    let total: usize = h_orders.iter().sum();
    if total > VERTEX_CAP {
        return Err(Error::CapExceeded {
            needed: total,
            cap: VERTEX_CAP,
        });
    }
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0;
    for &o in &h_orders {
        offsets.push(acc);
        acc += o;
    }

    let span_mask: Vec<u64> = (0..n)
        .map(|i| low_mask(h_orders[i]) << offsets[i])
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        let cross: u64 = g
            .neighbourhood(i)?
            .iter()
            .map(|k| span_mask[k])
            .fold(0, |m, s| m | s);
        for j in 0..h_orders[i] {
            let v = offsets[i] + j;
            let internal = factors[i].neighbourhood(j)?.bits() << offsets[i];
            for u in bits_of((internal | cross) & !low_mask(v + 1)) {
                edges.push((v, u));
            }
        }
    }
    let base = Graph::from_edges(total, &edges)?;
    Ok(ProductGraph {
        base,
        g_order: n,
        h_orders,
        offsets,
    })
}

/// The join `G + H`: disjoint union plus every cross edge. Identical to the
/// two-copy lexicographic product over an edge.
pub fn join(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::InvalidConstruction(
            "join factors must both have at least one vertex".into(),
        ));
    }
    lex_product(&Graph::complete(2)?, &[g.clone(), h.clone()])
}

/// Maximal connected vertex sets, ascending by minimum element.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in 0..n {
        if (seen >> v) & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits_of(frontier) {
                next |= g.nbits(u);
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        out.push(VertexSet::from_bits(n, comp));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_is_two_copy_product() {
        let g = Graph::edgeless(2).unwrap();
        let h = Graph::edgeless(3).unwrap();
        let j = join(&g, &h).unwrap();
        assert_eq!(j.base(), &Graph::complete_bipartite(2, 3).unwrap());
    }

    #[test]
    fn join_of_completes_is_complete() {
        let j = join(&Graph::complete(3).unwrap(), &Graph::complete(4).unwrap()).unwrap();
        assert!(j.base().is_complete());
        assert_eq!(j.base().n(), 7);
    }

    #[test]
    fn figure_product_p3() {
        // P3 o {P4, K2, P3}: 9 vertices, 6 internal + 8 + 6 cross edges
        let p = lex_product(
            &Graph::path(3).unwrap(),
            &[
                Graph::path(4).unwrap(),
                Graph::complete(2).unwrap(),
                Graph::path(3).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(p.base().n(), 9);
        assert_eq!(p.base().edge_count(), 3 + 1 + 2 + 4 * 2 + 2 * 3);
        assert_eq!(p.coord_of(5).unwrap(), (1, 1));
        assert_eq!(p.index_of(2, 0).unwrap(), 6);
        // copies 0 and 2 are not adjacent in P3
        assert!(!p.base().has_edge(0, 6));
        assert!(p.base().has_edge(0, 4));
    }

    #[test]
    fn join_of_path_and_triangle() {
        // P4 + C3: 7 vertices, 3 + 3 + 12 edges
        let j = join(&Graph::path(4).unwrap(), &Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(j.base().n(), 7);
        assert_eq!(j.base().edge_count(), 18);
        for g_side in 0..4 {
            for h_side in 4..7 {
                assert!(j.base().has_edge(g_side, h_side));
            }
        }
    }

    #[test]
    fn uniform_product_replicates() {
        // K_n o N_n' is complete multipartite
        let p = lex_product(&Graph::complete(3).unwrap(), &[Graph::edgeless(2).unwrap()]).unwrap();
        assert_eq!(p.base(), &Graph::complete_multipartite(&[2, 2, 2]).unwrap());
    }

    #[test]
    fn block_adjacency_matches_definition() {
        let g = Graph::cycle(4).unwrap();
        let h = Graph::path(3).unwrap();
        let p = lex_product(&g, std::slice::from_ref(&h)).unwrap();
        for v in 0..p.base().n() {
            for u in 0..p.base().n() {
                if u == v {
                    continue;
                }
                let (i, j) = p.coord_of(v).unwrap();
                let (k, l) = p.coord_of(u).unwrap();
                let expect = g.has_edge(i, k) || (i == k && h.has_edge(j, l));
                assert_eq!(p.base().has_edge(v, u), expect, "pair ({v},{u})");
            }
        }
    }

    #[test]
    fn projections() {
        let p = lex_product(
            &Graph::path(2).unwrap(),
            &[Graph::complete(2).unwrap(), Graph::complete(2).unwrap()],
        )
        .unwrap();
        let w = VertexSet::from_slice(4, &[0, 3]);
        assert_eq!(p.project(&w, 0).unwrap().to_vec(), vec![0]);
        assert_eq!(p.project(&w, 1).unwrap().to_vec(), vec![1]);
        let full = VertexSet::full(4);
        assert_eq!(p.project(&full, 0).unwrap().len(), 2);
        let none = VertexSet::empty(4);
        assert!(p.project(&none, 1).unwrap().is_empty());
        assert!(p.project(&w, 2).is_err());
    }

    #[test]
    fn components() {
        let g = Graph::disjoint_union(&[
            Graph::complete(2).unwrap(),
            Graph::complete(2).unwrap(),
            Graph::complete(2).unwrap(),
        ])
        .unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[2].to_vec(), vec![4, 5]);

        assert_eq!(connected_components(&Graph::cycle(7).unwrap()).len(), 1);
        let singles = connected_components(&Graph::edgeless(4).unwrap());
        assert_eq!(singles.len(), 4);
        assert!(singles.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn component_count_survives_products() {
        let g =
            Graph::disjoint_union(&[Graph::path(2).unwrap(), Graph::cycle(3).unwrap()]).unwrap();
        let p = lex_product(&g, &[Graph::path(2).unwrap()]).unwrap();
        assert_eq!(
            connected_components(p.base()).len(),
            connected_components(&g).len()
        );
    }

    #[test]
    fn size_validation() {
        let g = Graph::complete(3).unwrap();
        assert!(lex_product(&g, &[Graph::path(2).unwrap(), Graph::path(2).unwrap()]).is_err());
        assert!(lex_product(&Graph::complete(2).unwrap(), &[Graph::new(33).unwrap()]).is_err());
        assert!(lex_product(&g, &[Graph::new(0).unwrap()]).is_err());
    }
}
