//! Exact solvers for every invariant the formulas need: the super domination
//! number with a certifying witness, a plain full-subset oracle for
//! cross-checking it, and the classical invariants (domination number,
//! k-independence numbers, vertex cover number, 2-packing number).
//!
//! All searches are plain branch and bound over bitsets. Witnesses are
//! deterministic: lexicographically least among the optima.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::connected_components;
use crate::set::{bits_of, low_mask, VertexSet};
use serde::Serialize;

/// The full-subset oracle refuses anything larger than this.
pub const ORACLE_CAP: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvariantName {
    Gamma,
    GammaSp,
    Alpha,
    Alpha2,
    AlphaK,
    Tau,
    Rho,
}

impl InvariantName {
    pub fn as_str(&self) -> &'static str {
        match self {
            InvariantName::Gamma => "gamma",
            InvariantName::GammaSp => "gamma_sp",
            InvariantName::Alpha => "alpha",
            InvariantName::Alpha2 => "alpha_2",
            InvariantName::AlphaK => "alpha_k",
            InvariantName::Tau => "tau",
            InvariantName::Rho => "rho",
        }
    }
}

impl Serialize for InvariantName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A super dominating set `D` plus, for each `u` outside `D`, the vertex
/// `v` in `D` whose only neighbour outside `D` is `u`.
#[derive(Clone, Debug, Serialize)]
pub struct SuperDomWitness {
    pub dom_set: VertexSet,
    /// Pairs `(u, v)` ascending by `u`; `v` is the least qualifying index.
    /// Injective by construction: each `v` certifies exactly one `u`.
    pub assignment: Vec<(usize, usize)>,
}

impl SuperDomWitness {
    /// Re-checks the witness from scratch against the defining condition.
    pub fn check(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.dom_set.universe() != n {
            return false;
        }
        let dbits = self.dom_set.bits();
        let dbar = !dbits & low_mask(n);
        if self.assignment.len() != dbar.count_ones() as usize {
            return false;
        }
        let mut seen_v = 0u64;
        for &(u, v) in &self.assignment {
            if u >= n || v >= n {
                return false;
            }
            let ubit = 1u64 << u;
            let vbit = 1u64 << v;
            if dbar & ubit == 0 || dbits & vbit == 0 || seen_v & vbit != 0 {
                return false;
            }
            if g.nbits(v) & dbar != ubit {
                return false;
            }
            seen_v |= vbit;
        }
        true
    }
}

/// One solved invariant: its value and a certifying witness.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantValue {
    pub name: InvariantName,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub value: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(VertexSet),
    SuperDom(SuperDomWitness),
}

impl InvariantValue {
    fn of_set(name: InvariantName, value: usize, set: VertexSet) -> Self {
        InvariantValue {
            name,
            k: None,
            value,
            witness: Witness::Set(set),
        }
    }

    /// Checks that the witness certifies the stored value (feasibility plus
    /// cardinality; optimality is the solver's claim, tested elsewhere).
    pub fn certifies(&self, g: &Graph) -> bool {
        match (&self.name, &self.witness) {
            (InvariantName::GammaSp, Witness::SuperDom(w)) => {
                w.dom_set.len() == self.value && w.check(g)
            }
            (InvariantName::Gamma, Witness::Set(s)) => s.len() == self.value && is_dominating(g, s),
            (InvariantName::Alpha, Witness::Set(s)) => {
                s.len() == self.value && is_k_independent(g, s.bits(), 1)
            }
            (InvariantName::Alpha2, Witness::Set(s)) => {
                s.len() == self.value && is_k_independent(g, s.bits(), 2)
            }
            (InvariantName::AlphaK, Witness::Set(s)) => match self.k {
                Some(k) => s.len() == self.value && is_k_independent(g, s.bits(), k),
                None => false,
            },
            (InvariantName::Tau, Witness::Set(s)) => {
                s.len() == self.value && is_vertex_cover(g, s.bits())
            }
            (InvariantName::Rho, Witness::Set(s)) => {
                s.len() == self.value && is_two_packing(g, s.bits())
            }
            _ => false,
        }
    }
}

// ---- feasibility predicates ----------------------------------------------

pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    let dbits = d.bits();
    bits_of(!dbits & low_mask(g.n())).all(|u| g.nbits(u) & dbits != 0)
}

fn is_k_independent(g: &Graph, mask: u64, k: usize) -> bool {
    k >= 1 && bits_of(mask).all(|u| ((g.nbits(u) & mask).count_ones() as usize) < k)
}

fn is_vertex_cover(g: &Graph, mask: u64) -> bool {
    // no edge may join two vertices outside the cover
    bits_of(!mask & low_mask(g.n())).all(|u| g.nbits(u) & !mask == 0)
}

fn is_two_packing(g: &Graph, mask: u64) -> bool {
    let mut union = 0u64;
    for u in bits_of(mask) {
        let closed = g.nbits(u) | (1u64 << u);
        if closed & union != 0 {
            return false;
        }
        union |= closed;
    }
    true
}

/// Tests whether `d` is super dominating; on success returns the witness
/// with, for each outside vertex `u`, the smallest qualifying partner `v`.
/// The full vertex set succeeds vacuously with an empty assignment.
pub fn is_super_dominating(g: &Graph, d: &VertexSet) -> Option<SuperDomWitness> {
    debug_assert_eq!(d.universe(), g.n());
    let n = g.n();
    let dbits = d.bits();
    let dbar = !dbits & low_mask(n);
    let mut assignment = Vec::with_capacity(dbar.count_ones() as usize);
    for u in bits_of(dbar) {
        let ubit = 1u64 << u;
        let v = bits_of(dbits).find(|&v| g.nbits(v) & dbar == ubit)?;
        assignment.push((u, v));
    }
    Some(SuperDomWitness {
        dom_set: *d,
        assignment,
    })
}

// ---- gamma_sp --------------------------------------------------------------

/// Exact super domination number.
///
/// Solved per connected component. Within a component the search runs over
/// complements: sizes from `floor(n/2)` downward (every complement vertex
/// consumes a distinct private partner inside `D`, so larger complements are
/// infeasible), subsets in lexicographic order, pruning a branch as soon as
/// some complement vertex runs out of partner candidates. The first feasible
/// size `k` gives `gamma_sp = n - k`; if no nonempty complement is feasible
/// the value is `n`. The witness complement is the lexicographically least
/// among the maximum feasible ones.
pub fn gamma_sp(g: &Graph) -> InvariantValue {
    let n = g.n();
    let mut dbar_global = 0u64;
    for comp in connected_components(g) {
        let verts: Vec<usize> = comp.to_vec();
        let sub = g.induced_subgraph(&comp);
        for j in bits_of(component_max_dbar(&sub)) {
            dbar_global |= 1u64 << verts[j];
        }
    }
    let d = VertexSet::from_bits(n, !dbar_global & low_mask(n));
    let witness = is_super_dominating(g, &d).expect("complement found by search is feasible");
    InvariantValue {
        name: InvariantName::GammaSp,
        k: None,
        value: n - dbar_global.count_ones() as usize,
        witness: Witness::SuperDom(witness),
    }
}

/// Lexicographically least maximum feasible complement of one component
/// (zero when only the empty complement works).
fn component_max_dbar(g: &Graph) -> u64 {
    let n = g.n();
    for k in (1..=n / 2).rev() {
        let mut search = DbarSearch {
            g,
            dbar: 0,
            cand: [0u64; 64],
        };
        if let Some(dbar) = search.dfs(0, k) {
            return dbar;
        }
    }
    0
}

struct DbarSearch<'g> {
    g: &'g Graph,
    dbar: u64,
    /// `cand[u]`, for `u` in the current complement: vertices outside the
    /// complement whose neighbourhood meets it exactly in `u`. These sets
    /// only shrink as the complement grows, so emptiness is fatal.
    cand: [u64; 64],
}

impl DbarSearch<'_> {
    fn dfs(&mut self, start: usize, need: usize) -> Option<u64> {
        if need == 0 {
            return Some(self.dbar);
        }
        let n = self.g.n();
        // Vertices at or past `start` whose single addition keeps every
        // candidate set nonempty. No other vertex can occur in any feasible
        // extension, so their count bounds what is still reachable.
        let mut alive = [(0u8, 0u64); 64];
        let mut alive_len = 0usize;
        'w: for w in start..n {
            let wbit = 1u64 << w;
            let nb_w = self.g.nbits(w);
            if nb_w == 0 {
                continue; // isolated vertices have no possible partner
            }
            let db2 = self.dbar | wbit;
            let mut cw = 0u64;
            for v in bits_of(nb_w & !db2) {
                if self.g.nbits(v) & db2 == wbit {
                    cw |= 1u64 << v;
                }
            }
            if cw == 0 {
                continue;
            }
            let kill = wbit | nb_w;
            for u in bits_of(self.dbar) {
                if self.cand[u] & !kill == 0 {
                    continue 'w;
                }
            }
            alive[alive_len] = (w as u8, cw);
            alive_len += 1;
        }
        if alive_len < need {
            return None;
        }
        for (idx, &(w, cw)) in alive.iter().enumerate().take(alive_len) {
            if alive_len - idx < need {
                return None;
            }
            let w = w as usize;
            let wbit = 1u64 << w;
            let kill = wbit | self.g.nbits(w);
            let mut undo = [(0u8, 0u64); 32];
            let mut undo_len = 0usize;
            for u in bits_of(self.dbar) {
                undo[undo_len] = (u as u8, self.cand[u]);
                undo_len += 1;
                self.cand[u] &= !kill;
            }
            self.cand[w] = cw;
            self.dbar |= wbit;
            if let Some(hit) = self.dfs(w + 1, need - 1) {
                return Some(hit);
            }
            self.dbar &= !wbit;
            for &(u, c) in &undo[..undo_len] {
                self.cand[u as usize] = c;
            }
        }
        None
    }
}

/// Independent brute-force route to `gamma_sp`: all subsets ascending by
/// size (lexicographic within a size), first one accepted wins.
pub fn gamma_sp_oracle(g: &Graph) -> Result<InvariantValue> {
    let n = g.n();
    if n > ORACLE_CAP {
        return Err(Error::OracleCap { n, cap: ORACLE_CAP });
    }
    for size in 0..=n {
        for mask in subsets_lex(n, size) {
            if let Some(w) = is_super_dominating(g, &VertexSet::from_bits(n, mask)) {
                return Ok(InvariantValue {
                    name: InvariantName::GammaSp,
                    k: None,
                    value: size,
                    witness: Witness::SuperDom(w),
                });
            }
        }
    }
    unreachable!("the full vertex set is always super dominating")
}

// ---- subset enumeration -----------------------------------------------------

/// All `size`-subsets of `0..n`, lexicographic in their sorted member lists.
pub(crate) fn subsets_lex(n: usize, size: usize) -> SubsetsLex {
    SubsetsLex {
        n,
        size,
        idx: (0..size).collect(),
        done: size > n,
    }
}

pub(crate) struct SubsetsLex {
    n: usize,
    size: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for SubsetsLex {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | (1u64 << i));
        let mut i = self.size;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] != i + self.n - self.size {
                self.idx[i] += 1;
                for j in i + 1..self.size {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

// ---- alpha_k ----------------------------------------------------------------

/// Maximum size of a set inducing maximum degree at most `k - 1`;
/// `k = 1` is the independence number.
pub fn alpha_k(g: &Graph, k: usize) -> Result<InvariantValue> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let value = alpha_k_value(g, k);
    let mask = lex_min_k_independent(g, k, value).expect("optimum is attained");
    let name = match k {
        1 => InvariantName::Alpha,
        2 => InvariantName::Alpha2,
        _ => InvariantName::AlphaK,
    };
    Ok(InvariantValue {
        name,
        k: (name == InvariantName::AlphaK).then_some(k),
        value,
        witness: Witness::Set(VertexSet::from_bits(g.n(), mask)),
    })
}

pub fn alpha(g: &Graph) -> InvariantValue {
    alpha_k(g, 1).expect("k = 1 is valid")
}

pub fn alpha_2(g: &Graph) -> InvariantValue {
    alpha_k(g, 2).expect("k = 2 is valid")
}

fn alpha_k_value(g: &Graph, k: usize) -> usize {
    fn dfs(
        g: &Graph,
        k: usize,
        v: usize,
        chosen: u64,
        size: usize,
        cnt: &mut [u8; 64],
        best: &mut usize,
    ) {
        if size > *best {
            *best = size;
        }
        let n = g.n();
        if v == n || size + (n - v) <= *best {
            return;
        }
        if can_join(g, k, v, chosen, cnt) {
            for u in bits_of(g.nbits(v)) {
                cnt[u] += 1;
            }
            dfs(g, k, v + 1, chosen | (1u64 << v), size + 1, cnt, best);
            for u in bits_of(g.nbits(v)) {
                cnt[u] -= 1;
            }
        }
        dfs(g, k, v + 1, chosen, size, cnt, best);
    }
    let mut cnt = [0u8; 64];
    let mut best = 0;
    dfs(g, k, 0, 0, 0, &mut cnt, &mut best);
    best
}

/// Adding `v` must keep every induced degree at most `k - 1`: `v` itself
/// gains `cnt[v]` chosen neighbours and each chosen neighbour gains one.
#[inline]
fn can_join(g: &Graph, k: usize, v: usize, chosen: u64, cnt: &[u8; 64]) -> bool {
    (cnt[v] as usize) < k && bits_of(g.nbits(v) & chosen).all(|u| (cnt[u] as usize) + 1 < k)
}

fn lex_min_k_independent(g: &Graph, k: usize, size: usize) -> Option<u64> {
    fn rec(
        g: &Graph,
        k: usize,
        start: usize,
        need: usize,
        chosen: u64,
        cnt: &mut [u8; 64],
    ) -> Option<u64> {
        if need == 0 {
            return Some(chosen);
        }
        let n = g.n();
        if n < need {
            return None;
        }
        for w in start..=n - need {
            if can_join(g, k, w, chosen, cnt) {
                for u in bits_of(g.nbits(w)) {
                    cnt[u] += 1;
                }
                if let Some(hit) = rec(g, k, w + 1, need - 1, chosen | (1u64 << w), cnt) {
                    return Some(hit);
                }
                for u in bits_of(g.nbits(w)) {
                    cnt[u] -= 1;
                }
            }
        }
        None
    }
    let mut cnt = [0u8; 64];
    rec(g, k, 0, size, 0, &mut cnt)
}

// ---- tau ----------------------------------------------------------------------

/// Minimum vertex cover, searched directly (not through the independence
/// number, so both sides of the Gallai identity stay independent).
pub fn tau(g: &Graph) -> InvariantValue {
    let value = tau_value(g);
    let mask = lex_min_cover(g, value).expect("optimum is attained");
    InvariantValue::of_set(InvariantName::Tau, value, VertexSet::from_bits(g.n(), mask))
}

fn first_uncovered_edge(g: &Graph, cover: u64) -> Option<(usize, usize)> {
    for u in bits_of(!cover & low_mask(g.n())) {
        let rest = g.nbits(u) & !cover & !low_mask(u + 1);
        if rest != 0 {
            return Some((u, rest.trailing_zeros() as usize));
        }
    }
    None
}

/// Greedy matching on the uncovered edges; each matched edge needs its own
/// cover vertex, so the matching size bounds the remaining work.
fn matching_lower_bound(g: &Graph, cover: u64) -> usize {
    let mut used = cover;
    let mut size = 0;
    for u in 0..g.n() {
        if used & (1u64 << u) != 0 {
            continue;
        }
        let free = g.nbits(u) & !used & !low_mask(u + 1);
        if free != 0 {
            used |= (1u64 << u) | (1u64 << free.trailing_zeros());
            size += 1;
        }
    }
    size
}

fn tau_value(g: &Graph) -> usize {
    fn dfs(g: &Graph, cover: u64, size: usize, best: &mut usize) {
        match first_uncovered_edge(g, cover) {
            None => *best = (*best).min(size),
            Some((u, v)) => {
                if size + matching_lower_bound(g, cover) >= *best {
                    return;
                }
                dfs(g, cover | (1u64 << u), size + 1, best);
                dfs(g, cover | (1u64 << v), size + 1, best);
            }
        }
    }
    if g.is_edgeless() {
        return 0;
    }
    let mut best = g.n();
    dfs(g, 0, 0, &mut best);
    best
}

fn lex_min_cover(g: &Graph, size: usize) -> Option<u64> {
    fn rec(g: &Graph, start: usize, need: usize, mask: u64) -> Option<u64> {
        // an uncovered edge entirely below `start` can never be covered
        let low = low_mask(start);
        for u in bits_of(!mask & low) {
            if g.nbits(u) & !mask & low != 0 {
                return None;
            }
        }
        if need == 0 {
            return first_uncovered_edge(g, mask).is_none().then_some(mask);
        }
        if matching_lower_bound(g, mask) > need {
            return None;
        }
        let n = g.n();
        if n < need {
            return None;
        }
        for w in start..=n - need {
            if let Some(hit) = rec(g, w + 1, need - 1, mask | (1u64 << w)) {
                return Some(hit);
            }
        }
        None
    }
    rec(g, 0, size, 0)
}

// ---- rho ------------------------------------------------------------------------

/// Maximum 2-packing: vertices with pairwise disjoint closed neighbourhoods.
pub fn rho(g: &Graph) -> InvariantValue {
    let value = rho_value(g);
    let mask = lex_min_two_packing(g, value).expect("optimum is attained");
    InvariantValue::of_set(InvariantName::Rho, value, VertexSet::from_bits(g.n(), mask))
}

fn rho_value(g: &Graph) -> usize {
    fn dfs(g: &Graph, v: usize, union: u64, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let n = g.n();
        if v == n || size + (n - v) <= *best {
            return;
        }
        let closed = g.nbits(v) | (1u64 << v);
        if closed & union == 0 {
            dfs(g, v + 1, union | closed, size + 1, best);
        }
        dfs(g, v + 1, union, size, best);
    }
    let mut best = 0;
    dfs(g, 0, 0, 0, &mut best);
    best
}

fn lex_min_two_packing(g: &Graph, size: usize) -> Option<u64> {
    fn rec(g: &Graph, start: usize, need: usize, mask: u64, union: u64) -> Option<u64> {
        if need == 0 {
            return Some(mask);
        }
        let n = g.n();
        if n < need {
            return None;
        }
        for w in start..=n - need {
            let closed = g.nbits(w) | (1u64 << w);
            if closed & union == 0 {
                if let Some(hit) = rec(g, w + 1, need - 1, mask | (1u64 << w), union | closed) {
                    return Some(hit);
                }
            }
        }
        None
    }
    rec(g, 0, size, 0, 0)
}

// ---- gamma ------------------------------------------------------------------------

/// Minimum dominating set.
pub fn gamma(g: &Graph) -> InvariantValue {
    let value = gamma_value(g);
    let mask = lex_min_dominating(g, value).expect("optimum is attained");
    InvariantValue::of_set(
        InvariantName::Gamma,
        value,
        VertexSet::from_bits(g.n(), mask),
    )
}

fn gamma_value(g: &Graph) -> usize {
    fn dfs(g: &Graph, all: u64, per_pick: usize, dominated: u64, size: usize, best: &mut usize) {
        if dominated == all {
            *best = (*best).min(size);
            return;
        }
        let remaining = (all & !dominated).count_ones() as usize;
        if size + remaining.div_ceil(per_pick) >= *best {
            return;
        }
        // branch over the ways to dominate the least undominated vertex
        let u = (!dominated & all).trailing_zeros() as usize;
        for v in bits_of(g.nbits(u) | (1u64 << u)) {
            dfs(
                g,
                all,
                per_pick,
                dominated | g.nbits(v) | (1u64 << v),
                size + 1,
                best,
            );
        }
    }
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut best = n;
    dfs(g, low_mask(n), g.max_degree() + 1, 0, 0, &mut best);
    best
}

fn lex_min_dominating(g: &Graph, size: usize) -> Option<u64> {
    fn rec(
        g: &Graph,
        all: u64,
        per_pick: usize,
        start: usize,
        need: usize,
        mask: u64,
        dominated: u64,
    ) -> Option<u64> {
        if need == 0 {
            return (dominated == all).then_some(mask);
        }
        let undominated = all & !dominated;
        let avail = all & !low_mask(start);
        for u in bits_of(undominated) {
            if (g.nbits(u) | (1u64 << u)) & avail == 0 {
                return None;
            }
        }
        if (undominated.count_ones() as usize).div_ceil(per_pick) > need {
            return None;
        }
        for w in start..=g.n() - need {
            if let Some(hit) = rec(
                g,
                all,
                per_pick,
                w + 1,
                need - 1,
                mask | (1u64 << w),
                dominated | g.nbits(w) | (1u64 << w),
            ) {
                return Some(hit);
            }
        }
        None
    }
    let n = g.n();
    if size > n {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    rec(g, low_mask(n), g.max_degree() + 1, 0, size, 0, 0)
}

// ---- private neighbours ----------------------------------------------------------

/// `F_X(y)`: the members of `X` whose neighbourhood meets the complement of
/// `X` exactly in `y`. Requires `y` outside `X`.
pub fn private_neighbours(g: &Graph, x: &VertexSet, y: usize) -> Result<VertexSet> {
    let n = g.n();
    if y >= n {
        return Err(Error::VertexOutOfRange { v: y, n });
    }
    if x.contains(y) {
        return Err(Error::InvalidArgument(format!(
            "vertex {y} must lie outside the set"
        )));
    }
    let xbits = x.bits();
    let xbar = !xbits & low_mask(n);
    let ybit = 1u64 << y;
    let mut out = 0u64;
    for u in bits_of(xbits) {
        if g.nbits(u) & xbar == ybit {
            out |= 1u64 << u;
        }
    }
    Ok(VertexSet::from_bits(n, out))
}
