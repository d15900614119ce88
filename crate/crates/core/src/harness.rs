//! Verification harness: exhaustive labeled-graph corpora, per-theorem
//! checks, product sweeps, campaigns, and report emission.
//!
//! Every check is exhaustive over its corpus and collects failures instead
//! of stopping at the first one. Work is fanned out to a small thread pool
//! and merged by item index, so results are byte-identical no matter how
//! many workers run (`SUPERDOM_WORKERS` overrides the pool size).

use crate::error::{Error, Result};
use crate::family;
use crate::formulas::{self, LexFamily};
use crate::graph::Graph;
use crate::products::{connected_components, join, lex_product};
use crate::set::bits_of;
use crate::solvers::{alpha, gamma, gamma_sp, gamma_sp_oracle, subsets_lex, tau, Witness};
use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

/// Exhaustive labeled enumeration is limited to this order (2^21 graphs).
pub const ENUMERATION_CAP: usize = 7;

/// At most this many failure records are kept per check; the failure count
/// itself is always exact.
pub const FAILURE_SAMPLE_CAP: usize = 100;

// ---- theorem ids -----------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremId {
    Eq2Chain,
    Thm1,
    Lemma2,
    Lemma3,
    Thm7FamilyF,
    RemarkComponents,
    LemmaImportant,
    LemmaAdjacent,
    Thm10,
    Gallai,
    Thm11,
    Thm12,
    Thm13,
    ThmEquality,
    CorNphardReduction,
    Prop14,
    Prop15,
    Lemma15,
    Prop17,
    Lemma18,
    Prop19,
    Thm21,
    Thm22,
    Thm23,
}

pub const ALL_THEOREMS: [TheoremId; 24] = [
    TheoremId::Eq2Chain,
    TheoremId::Thm1,
    TheoremId::Lemma2,
    TheoremId::Lemma3,
    TheoremId::Thm7FamilyF,
    TheoremId::RemarkComponents,
    TheoremId::LemmaImportant,
    TheoremId::LemmaAdjacent,
    TheoremId::Thm10,
    TheoremId::Gallai,
    TheoremId::Thm11,
    TheoremId::Thm12,
    TheoremId::Thm13,
    TheoremId::ThmEquality,
    TheoremId::CorNphardReduction,
    TheoremId::Prop14,
    TheoremId::Prop15,
    TheoremId::Lemma15,
    TheoremId::Prop17,
    TheoremId::Lemma18,
    TheoremId::Prop19,
    TheoremId::Thm21,
    TheoremId::Thm22,
    TheoremId::Thm23,
];

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Eq2Chain => "eq2-chain",
            TheoremId::Thm1 => "thm1",
            TheoremId::Lemma2 => "lemma2",
            TheoremId::Lemma3 => "lemma3",
            TheoremId::Thm7FamilyF => "thm7-familyF",
            TheoremId::RemarkComponents => "remark-components",
            TheoremId::LemmaImportant => "lemma-important",
            TheoremId::LemmaAdjacent => "lemma-adjacent",
            TheoremId::Thm10 => "thm10",
            TheoremId::Gallai => "gallai",
            TheoremId::Thm11 => "thm11",
            TheoremId::Thm12 => "thm12",
            TheoremId::Thm13 => "thm13",
            TheoremId::ThmEquality => "thmEquality",
            TheoremId::CorNphardReduction => "cor-nphard-reduction",
            TheoremId::Prop14 => "prop14",
            TheoremId::Prop15 => "prop15",
            TheoremId::Lemma15 => "lemma15",
            TheoremId::Prop17 => "prop17",
            TheoremId::Lemma18 => "lemma18",
            TheoremId::Prop19 => "prop19",
            TheoremId::Thm21 => "thm21",
            TheoremId::Thm22 => "thm22",
            TheoremId::Thm23 => "thm23",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }

    /// Whether the check runs over a plain single-graph corpus (and so can
    /// be pointed at a graph6 file via [`verify_single`]).
    pub fn takes_single_graph_corpus(&self) -> bool {
        matches!(
            self,
            TheoremId::Thm1
                | TheoremId::Eq2Chain
                | TheoremId::Gallai
                | TheoremId::Thm7FamilyF
                | TheoremId::Lemma2
                | TheoremId::Lemma3
        )
    }

    /// One-line statement of what the check asserts.
    pub fn statement(&self) -> &'static str {
        match self {
            TheoremId::Eq2Chain => {
                "1 <= gamma <= ceil(n/2) <= gamma_sp <= n-1 on isolate-free graphs"
            }
            TheoremId::Thm1 => {
                "gamma_sp = 1 iff K1 or K2; gamma_sp = n iff edgeless; gamma_sp >= ceil(n/2)"
            }
            TheoremId::Lemma2 => "gamma_sp = n-1 forces induced-P4-free and induced-C4-free",
            TheoremId::Lemma3 => "gamma_sp = n-1 forces a universal vertex (connected)",
            TheoremId::Thm7FamilyF => {
                "gamma_sp = n-1 iff the layered clique/empty recognizer accepts (connected, n >= 2)"
            }
            TheoremId::RemarkComponents => {
                "components of G o H match components of G, and gamma_sp adds over them"
            }
            TheoremId::LemmaImportant => {
                "every copy of an optimal solution keeps at least gamma_sp(H) vertices"
            }
            TheoremId::LemmaAdjacent => {
                "adjacent copies with deficits have deficit exactly one each"
            }
            TheoremId::Thm10 => {
                "gamma_sp(G o H) <= alpha(G) gamma_sp(H) + (n - alpha(G)) n'; sharpened variant nn' - alpha_2(G)"
            }
            TheoremId::Gallai => "alpha + tau = n",
            TheoremId::Thm11 => {
                "gamma_sp(G o H) >= n gamma_sp(H); equality iff G = K2, gamma_sp(H) = n'-1, H noncomplete"
            }
            TheoremId::Thm12 => {
                "gamma_sp(G o H) <= min{n(n'-1) + gamma_sp(G), n'(n-1) + gamma_sp(H)}"
            }
            TheoremId::Thm13 => "gamma_sp(G o N_n') <= nn' - 2 rho(L(G))",
            TheoremId::ThmEquality => {
                "n' - gamma_sp(H) > max degree + 1 forces gamma_sp(G o H) = alpha(G) gamma_sp(H) + (n - alpha(G)) n'"
            }
            TheoremId::CorNphardReduction => {
                "alpha(G) is recovered from gamma_sp(G o tK2) with t = max degree + 2"
            }
            TheoremId::Prop14 => "closed form for gamma_sp(K_n o H), noncomplete H",
            TheoremId::Prop15 => "gamma_sp(K_{r,t} o H) = t gamma_sp(H) + r n'",
            TheoremId::Lemma15 => {
                "cycle subsets of size floor(2n/3)+1 contain one of three 5-window patterns"
            }
            TheoremId::Prop17 => "closed form for gamma_sp(C_n o H)",
            TheoremId::Lemma18 => {
                "path subsets of size ceil(2n/3)+1 contain a 5-window pattern or an end triple"
            }
            TheoremId::Prop19 => "closed form for gamma_sp(P_n o H)",
            TheoremId::Thm21 => {
                "gamma_sp(G + H) = min{n + n' - 2, n + gamma_sp(H), n' + gamma_sp(G)} for nonempty noncomplete factors"
            }
            TheoremId::Thm22 => "gamma_sp(K_n + H) = n + gamma_sp(H)",
            TheoremId::Thm23 => "gamma_sp(N_n + H) = min{n + n' - 2, n + gamma_sp(H)}",
        }
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

// ---- corpora ----------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CorpusFilter {
    All,
    Connected,
    /// Nonempty vertex set, minimum degree at least one.
    IsolateFree,
}

impl CorpusFilter {
    pub fn as_str(&self) -> &'static str {
        match self {
            CorpusFilter::All => "all",
            CorpusFilter::Connected => "connected",
            CorpusFilter::IsolateFree => "isolate-free",
        }
    }

    pub fn keep(&self, g: &Graph) -> bool {
        match self {
            CorpusFilter::All => true,
            CorpusFilter::Connected => g.is_connected(),
            CorpusFilter::IsolateFree => g.n() >= 1 && !g.has_isolated_vertex(),
        }
    }

    pub fn parse(s: &str) -> Result<CorpusFilter> {
        match s {
            "all" => Ok(CorpusFilter::All),
            "connected" => Ok(CorpusFilter::Connected),
            "isolate-free" => Ok(CorpusFilter::IsolateFree),
            other => Err(Error::InvalidArgument(format!("unknown filter `{other}`"))),
        }
    }
}

/// A deterministic stream of graphs: exhaustive labeled enumeration (edge
/// masks ascending, sizes ascending) or an explicit list, e.g. the lines of
/// a graph6 file.
#[derive(Clone, Debug)]
pub struct Corpus {
    id: String,
    filter: CorpusFilter,
    kind: CorpusKind,
}

#[derive(Clone, Debug)]
enum CorpusKind {
    Enumerated { sizes: Vec<usize> },
    Explicit { graphs: Vec<Graph> },
}

/// Decodes an edge mask into the labeled graph it indexes: bit `b` of the
/// mask is the vertex pair at position `b` in column-major order (the same
/// order graph6 uses). Needs all vertex pairs to fit the mask word, i.e.
/// `n <= 11`.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    debug_assert!(pair_count(n) <= 64, "edge mask too small for n = {n}");
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if (mask >> bit) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("mask within range")
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Corpus {
    /// Every labeled graph on exactly `n` vertices.
    pub fn enumerated(n: usize, filter: CorpusFilter) -> Result<Corpus> {
        if n > ENUMERATION_CAP {
            return Err(Error::InvalidArgument(format!(
                "exhaustive enumeration capped at n = {ENUMERATION_CAP}, got {n}"
            )));
        }
        Ok(Corpus {
            id: format!("labeled(n={n}, {})", filter.as_str()),
            filter,
            kind: CorpusKind::Enumerated { sizes: vec![n] },
        })
    }

    /// Every labeled graph with `lo <= n <= hi`.
    pub fn enumerated_range(lo: usize, hi: usize, filter: CorpusFilter) -> Result<Corpus> {
        if hi > ENUMERATION_CAP {
            return Err(Error::InvalidArgument(format!(
                "exhaustive enumeration capped at n = {ENUMERATION_CAP}, got {hi}"
            )));
        }
        Ok(Corpus {
            id: format!("labeled({lo}<=n<={hi}, {})", filter.as_str()),
            filter,
            kind: CorpusKind::Enumerated {
                sizes: (lo..=hi).collect(),
            },
        })
    }

    /// One graph6 line per graph; blank lines skipped.
    pub fn from_graph6_text(
        id: impl Into<String>,
        text: &str,
        filter: CorpusFilter,
    ) -> Result<Corpus> {
        let mut graphs = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            graphs.push(Graph::parse_graph6(line)?);
        }
        Ok(Corpus {
            id: id.into(),
            filter,
            kind: CorpusKind::Explicit { graphs },
        })
    }

    pub fn from_graphs(id: impl Into<String>, graphs: Vec<Graph>, filter: CorpusFilter) -> Corpus {
        Corpus {
            id: id.into(),
            filter,
            kind: CorpusKind::Explicit { graphs },
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Materializes the corpus. Fine for the pair sweeps (their factor
    /// corpora are small); the single-graph sweeps stream through chunks
    /// instead.
    pub fn collect(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        for chunk in self.chunks() {
            chunk.for_each(self.filter, |g| out.push(g.clone()));
        }
        out
    }

    fn chunks(&self) -> Vec<Chunk> {
        const MASKS_PER_CHUNK: u64 = 1 << 14;
        match &self.kind {
            CorpusKind::Enumerated { sizes } => {
                let mut chunks = Vec::new();
                for &n in sizes {
                    let total = 1u64 << pair_count(n);
                    let mut start = 0;
                    while start < total {
                        let end = (start + MASKS_PER_CHUNK).min(total);
                        chunks.push(Chunk::Masks { n, start, end });
                        start = end;
                    }
                }
                chunks
            }
            CorpusKind::Explicit { graphs } => vec![Chunk::Slice {
                graphs: graphs.clone(),
            }],
        }
    }
}

#[derive(Clone)]
enum Chunk {
    Masks { n: usize, start: u64, end: u64 },
    Slice { graphs: Vec<Graph> },
}

impl Chunk {
    fn for_each(&self, filter: CorpusFilter, mut f: impl FnMut(&Graph)) {
        match self {
            Chunk::Masks { n, start, end } => {
                for mask in *start..*end {
                    let g = graph_from_edge_mask(*n, mask);
                    if filter.keep(&g) {
                        f(&g);
                    }
                }
            }
            Chunk::Slice { graphs } => {
                for g in graphs {
                    if filter.keep(g) {
                        f(g);
                    }
                }
            }
        }
    }
}

// ---- worker pool --------------------------------------------------------------

static WORKER_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Pins the pool size from code (tests exercising determinism across worker
/// counts); `None` restores the `SUPERDOM_WORKERS` / autodetect behaviour.
pub fn set_worker_override(workers: Option<usize>) {
    WORKER_OVERRIDE.store(workers.unwrap_or(0), Ordering::SeqCst);
}

fn worker_count() -> usize {
    let pinned = WORKER_OVERRIDE.load(Ordering::SeqCst);
    if pinned >= 1 {
        return pinned;
    }
    std::env::var("SUPERDOM_WORKERS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&w| w >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Order-preserving parallel map: items are claimed from a shared counter
/// and results land in their original slots, so the output is independent
/// of scheduling.
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = worker_count().min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(&f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<R>>> = items.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                *slots[i].lock().expect("slot poisoned") = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().expect("slot poisoned").expect("slot filled"))
        .collect()
}

// ---- outcomes and tallies --------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    /// graph6 of the instance (one entry per factor), replayable via the CLI.
    pub graphs: Vec<String>,
    pub expected: String,
    pub got: String,
}

enum Outcome {
    Pass,
    Skip,
    Fail { expected: String, got: String },
}

#[derive(Default)]
struct Tally {
    instances: u64,
    passes: u64,
    skipped: u64,
    failed: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn record(&mut self, outcome: Outcome, graphs: impl FnOnce() -> Vec<String>) {
        self.instances += 1;
        match outcome {
            Outcome::Pass => self.passes += 1,
            Outcome::Skip => self.skipped += 1,
            Outcome::Fail { expected, got } => {
                self.failed += 1;
                if self.failures.len() < FAILURE_SAMPLE_CAP {
                    self.failures.push(Failure {
                        graphs: graphs(),
                        expected,
                        got,
                    });
                }
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.passes += other.passes;
        self.skipped += other.skipped;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < FAILURE_SAMPLE_CAP {
                self.failures.push(f);
            }
        }
    }
}

/// Outcome record of checking one theorem over one corpus.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub theorem_id: TheoremId,
    pub corpus_id: String,
    pub instances: u64,
    pub passes: u64,
    pub skipped: u64,
    pub failed: u64,
    /// At most [`FAILURE_SAMPLE_CAP`] records; `failed` is the exact count.
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// `instances = passes + failed + skipped`.
    pub fn accounted(&self) -> bool {
        self.instances == self.passes + self.failed + self.skipped
    }

    fn from_tally(id: TheoremId, corpus_id: String, tally: Tally, started: Instant) -> Self {
        TheoremCheck {
            theorem_id: id,
            corpus_id,
            instances: tally.instances,
            passes: tally.passes,
            skipped: tally.skipped,
            failed: tally.failed,
            failures: tally.failures,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

// ---- sweep parameters ---------------------------------------------------------

/// Sizes for the default corpora behind [`verify`]. The closed-formula
/// families keep fixed first factors; the generic sweeps scale with `max_n`.
#[derive(Clone, Debug)]
pub struct VerifyParams {
    /// Largest order in single-graph sweeps.
    pub max_n: usize,
    /// Largest order of the first factor in the generic product sweep.
    pub product_g_max: usize,
    /// Largest order of the second factor in the generic product sweep.
    pub product_h_max: usize,
    /// Product-order cap for the generic sweep.
    pub product_cap: usize,
    /// Largest order in the reduction demo.
    pub reduction_max_n: usize,
    /// Cycle orders for the subset-pattern check.
    pub cycle_range: (usize, usize),
    /// Path orders for the subset-pattern check.
    pub path_range: (usize, usize),
    /// Largest factor order in the join sweep.
    pub join_max: usize,
    /// Largest second-factor order in the closed-formula sweeps.
    pub formula_h_max: usize,
}

impl VerifyParams {
    pub fn for_max_n(max_n: usize) -> VerifyParams {
        let scaled = max_n.saturating_sub(2).clamp(2, 4);
        VerifyParams {
            max_n,
            product_g_max: scaled,
            product_h_max: scaled,
            product_cap: 16,
            reduction_max_n: scaled.min(4),
            cycle_range: (5, 12),
            path_range: (4, 12),
            join_max: scaled,
            formula_h_max: scaled,
        }
    }
}

// ---- single-graph checks ---------------------------------------------------------

fn fail(expected: impl Into<String>, got: impl Into<String>) -> Outcome {
    Outcome::Fail {
        expected: expected.into(),
        got: got.into(),
    }
}

fn check_single(id: TheoremId, g: &Graph) -> Outcome {
    match id {
        TheoremId::Thm1 => {
            let n = g.n();
            let v = gamma_sp(g).value;
            let is_k1_or_k2 = (1..=2).contains(&n) && g.is_complete();
            if (v == 1) != is_k1_or_k2 {
                return fail(
                    "gamma_sp = 1 exactly on K1 and K2",
                    format!("gamma_sp = {v}, n = {n}"),
                );
            }
            if (v == n) != g.is_edgeless() {
                return fail(
                    "gamma_sp = n exactly on edgeless graphs",
                    format!("gamma_sp = {v}, n = {n}"),
                );
            }
            if v < n.div_ceil(2) {
                return fail(
                    format!("gamma_sp >= {}", n.div_ceil(2)),
                    format!("gamma_sp = {v}"),
                );
            }
            Outcome::Pass
        }
        TheoremId::Eq2Chain => {
            if g.n() == 0 || g.has_isolated_vertex() {
                return Outcome::Skip;
            }
            let n = g.n();
            let gam = gamma(g).value;
            let sp = gamma_sp(g).value;
            let half = n.div_ceil(2);
            if 1 <= gam && gam <= half && half <= sp && sp < n {
                Outcome::Pass
            } else {
                fail(
                    format!("1 <= gamma <= {half} <= gamma_sp <= {}", n - 1),
                    format!("gamma = {gam}, gamma_sp = {sp}"),
                )
            }
        }
        TheoremId::Gallai => {
            let a = alpha(g).value;
            let t = tau(g).value;
            if a + t == g.n() {
                Outcome::Pass
            } else {
                fail(format!("alpha + tau = {}", g.n()), format!("{a} + {t}"))
            }
        }
        TheoremId::Thm7FamilyF => {
            if g.n() < 2 || !g.is_connected() {
                return Outcome::Skip;
            }
            let dec = match family::recognize(g) {
                Ok(d) => d,
                Err(e) => return fail("recognizer runs", format!("error: {e}")),
            };
            let exact = gamma_sp(g).value == g.n() - 1;
            match (&dec, exact) {
                (Some(d), true) => {
                    if d.validate(g) && d.satisfies_neighbourhood_laws(g) {
                        Outcome::Pass
                    } else {
                        fail(
                            "accepted decomposition satisfies the layer laws",
                            "violation",
                        )
                    }
                }
                (None, false) => Outcome::Pass,
                (Some(_), false) => fail("member implies gamma_sp = n-1", "gamma_sp < n-1"),
                (None, true) => fail("gamma_sp = n-1 implies member", "not recognized"),
            }
        }
        TheoremId::Lemma2 => {
            if g.n() < 2 || !g.is_connected() || gamma_sp(g).value != g.n() - 1 {
                return Outcome::Skip;
            }
            let (p4, c4) = has_induced_p4_or_c4(g);
            if p4 {
                fail("no induced 4-path", "induced P4 present")
            } else if c4 {
                fail("no induced 4-cycle", "induced C4 present")
            } else {
                Outcome::Pass
            }
        }
        TheoremId::Lemma3 => {
            if g.n() < 2 || !g.is_connected() || gamma_sp(g).value != g.n() - 1 {
                return Outcome::Skip;
            }
            if (0..g.n()).any(|v| g.degree(v) == g.n() - 1) {
                Outcome::Pass
            } else {
                fail("a universal vertex exists", "none")
            }
        }
        _ => unreachable!("not a single-graph check: {id:?}"),
    }
}

/// Scans all 4-subsets for an induced path or cycle via degree profiles.
fn has_induced_p4_or_c4(g: &Graph) -> (bool, bool) {
    let n = g.n();
    let (mut p4, mut c4) = (false, false);
    if n < 4 {
        return (p4, c4);
    }
    for mask in subsets_lex(n, 4) {
        let verts: Vec<usize> = bits_of(mask).collect();
        let mut degs = [0usize; 4];
        let mut edges = 0;
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if g.has_edge(u, v) {
                    degs[a] += 1;
                    degs[b] += 1;
                    edges += 1;
                }
            }
        }
        let mut sorted = degs;
        sorted.sort_unstable();
        if edges == 3 && sorted == [1, 1, 2, 2] {
            p4 = true;
        }
        if edges == 4 && sorted == [2, 2, 2, 2] {
            c4 = true;
        }
        if p4 && c4 {
            break;
        }
    }
    (p4, c4)
}

/// Exhaustive check of one theorem over a single-graph corpus.
pub fn verify_single(id: TheoremId, corpus: &Corpus) -> TheoremCheck {
    let started = Instant::now();
    let chunks = corpus.chunks();
    let parts = parallel_map(&chunks, |chunk| {
        let mut tally = Tally::default();
        chunk.for_each(corpus.filter, |g| {
            tally.record(check_single(id, g), || vec![g.to_graph6()]);
        });
        tally
    });
    let mut tally = Tally::default();
    for p in parts {
        tally.merge(p);
    }
    TheoremCheck::from_tally(id, corpus.id().to_string(), tally, started)
}

// ---- pair checks -------------------------------------------------------------------

fn product_sp(g: &Graph, h: &Graph) -> usize {
    gamma_sp(
        lex_product(g, std::slice::from_ref(h))
            .expect("pair within cap")
            .base(),
    )
    .value
}

fn exact_vs(predicted: usize, exact: usize) -> Outcome {
    if exact == predicted {
        Outcome::Pass
    } else {
        fail(predicted.to_string(), exact.to_string())
    }
}

fn check_lex_pair(id: TheoremId, g: &Graph, h: &Graph, cap: usize) -> Outcome {
    let (n, np) = (g.n(), h.n());
    if n == 0 || np == 0 || n * np > cap {
        return Outcome::Skip;
    }
    match id {
        TheoremId::Thm10 => {
            if h.is_edgeless() {
                return Outcome::Skip;
            }
            let mb = formulas::bound_main_upper(g, h).expect("nonempty H");
            let exact = product_sp(g, h);
            if exact > mb.general {
                return fail(format!("exact <= {}", mb.general), exact.to_string());
            }
            if let Some(sharp) = mb.sharpened {
                if exact > sharp {
                    return fail(format!("exact <= sharpened {sharp}"), exact.to_string());
                }
                if sharp > mb.general {
                    return fail(
                        format!("sharpened {sharp} <= general {}", mb.general),
                        "sharpened exceeds general",
                    );
                }
            }
            Outcome::Pass
        }
        TheoremId::Thm11 => {
            if n < 2 || h.is_edgeless() {
                return Outcome::Skip;
            }
            let bound = formulas::bound_trivial_lower(g, h).expect("hypotheses met");
            let exact = product_sp(g, h);
            if exact < bound {
                return fail(format!("exact >= {bound}"), exact.to_string());
            }
            // the equality characterization concerns connected first factors
            if g.is_connected() {
                let predicted = formulas::equality_trivial_lower(g, h).expect("hypotheses met");
                if predicted != (exact == bound) {
                    return fail(
                        format!("equality predicate {predicted}"),
                        format!("exact = {exact}, bound = {bound}"),
                    );
                }
            }
            Outcome::Pass
        }
        TheoremId::Thm12 => {
            if n < 2 || np < 2 {
                return Outcome::Skip;
            }
            let bound = formulas::bound_min_upper(g, h).expect("hypotheses met");
            let exact = product_sp(g, h);
            if exact <= bound {
                Outcome::Pass
            } else {
                fail(format!("exact <= {bound}"), exact.to_string())
            }
        }
        TheoremId::Thm13 => {
            if !h.is_edgeless() || np < 2 || g.is_edgeless() {
                return Outcome::Skip;
            }
            let bound = formulas::bound_empty_upper(g, np).expect("hypotheses met");
            let exact = product_sp(g, h);
            if exact <= bound {
                Outcome::Pass
            } else {
                fail(format!("exact <= {bound}"), exact.to_string())
            }
        }
        TheoremId::ThmEquality => match formulas::exact_lex(&LexFamily::LargeGap { g }, h) {
            Err(_) => Outcome::Skip,
            Ok(predicted) => exact_vs(predicted, product_sp(g, h)),
        },
        TheoremId::LemmaImportant => {
            if h.is_edgeless() {
                return Outcome::Skip;
            }
            let product = lex_product(g, std::slice::from_ref(h)).expect("within cap");
            let solved = gamma_sp(product.base());
            let Witness::SuperDom(w) = &solved.witness else {
                return fail("super domination witness", "missing");
            };
            let sp_h = gamma_sp(h).value;
            for i in 0..n {
                let size = product.project(&w.dom_set, i).expect("copy index").len();
                if size < sp_h {
                    return fail(
                        format!("every copy keeps >= {sp_h}"),
                        format!("copy {i} keeps {size}"),
                    );
                }
            }
            Outcome::Pass
        }
        TheoremId::LemmaAdjacent => {
            let product = lex_product(g, std::slice::from_ref(h)).expect("within cap");
            let solved = gamma_sp(product.base());
            let Witness::SuperDom(w) = &solved.witness else {
                return fail("super domination witness", "missing");
            };
            for (x, xp) in g.edges() {
                let dx = np - product.project(&w.dom_set, x).expect("copy").len();
                let dxp = np - product.project(&w.dom_set, xp).expect("copy").len();
                if dx >= 1 && dxp >= 1 && (dx != 1 || dxp != 1) {
                    return fail(
                        "adjacent nonfull copies have deficit 1",
                        format!("deficits {dx} and {dxp} on edge ({x},{xp})"),
                    );
                }
            }
            Outcome::Pass
        }
        TheoremId::RemarkComponents => {
            let product = lex_product(g, std::slice::from_ref(h)).expect("within cap");
            let comps_g = connected_components(g);
            let comps_p = connected_components(product.base());
            // a multi-vertex component of G yields one product component; a
            // lone vertex carries a bare copy of H
            let h_comps = connected_components(h).len();
            let expected: usize = comps_g
                .iter()
                .map(|c| if c.len() >= 2 { 1 } else { h_comps })
                .sum();
            if comps_p.len() != expected {
                return fail(
                    format!("{expected} components"),
                    format!("{} components", comps_p.len()),
                );
            }
            if g.is_connected() && g.n() >= 2 && comps_p.len() != 1 {
                return fail("connected product", format!("{} components", comps_p.len()));
            }
            // additivity, with an independent route on the whole product
            let whole = match gamma_sp_oracle(product.base()) {
                Ok(v) => v.value,
                Err(_) => return Outcome::Skip,
            };
            let summed: usize = comps_p
                .iter()
                .map(|comp| gamma_sp(&product.base().induced_subgraph(comp)).value)
                .sum();
            if whole == summed {
                Outcome::Pass
            } else {
                fail(
                    format!("component sum {summed}"),
                    format!("whole-product oracle {whole}"),
                )
            }
        }
        TheoremId::Prop14 => {
            if !g.is_complete() || n < 2 {
                return Outcome::Skip;
            }
            match formulas::exact_lex(&LexFamily::Complete { n }, h) {
                Err(_) => Outcome::Skip,
                Ok(predicted) => exact_vs(predicted, product_sp(g, h)),
            }
        }
        TheoremId::Prop15 => {
            let Some((r, t)) = formulas::as_complete_bipartite(g) else {
                return Outcome::Skip;
            };
            match formulas::exact_lex(&LexFamily::CompleteBipartite { r, t }, h) {
                Err(_) => Outcome::Skip,
                Ok(predicted) => exact_vs(predicted, product_sp(g, h)),
            }
        }
        TheoremId::Prop17 => {
            if !formulas::is_cycle(g) {
                return Outcome::Skip;
            }
            match formulas::exact_lex(&LexFamily::Cycle { n }, h) {
                Err(_) => Outcome::Skip,
                Ok(predicted) => exact_vs(predicted, product_sp(g, h)),
            }
        }
        TheoremId::Prop19 => {
            if !formulas::is_path(g) {
                return Outcome::Skip;
            }
            match formulas::exact_lex(&LexFamily::Path { n }, h) {
                Err(_) => Outcome::Skip,
                Ok(predicted) => exact_vs(predicted, product_sp(g, h)),
            }
        }
        _ => unreachable!("not a lex-product check: {id:?}"),
    }
}

fn check_join_pair(id: TheoremId, g: &Graph, h: &Graph, cap: usize) -> Outcome {
    if g.n() == 0 || h.n() == 0 || g.n() + h.n() > cap {
        return Outcome::Skip;
    }
    let Ok((predicted, case)) = formulas::exact_join(g, h) else {
        return Outcome::Skip;
    };
    let wanted = match id {
        TheoremId::Thm21 => formulas::JoinCase::General,
        TheoremId::Thm22 => formulas::JoinCase::CompleteGeneral,
        TheoremId::Thm23 => formulas::JoinCase::EmptyGeneral,
        _ => unreachable!("not a join check: {id:?}"),
    };
    if case != wanted {
        return Outcome::Skip;
    }
    let exact = gamma_sp(join(g, h).expect("within cap").base()).value;
    exact_vs(predicted, exact)
}

/// Largest product order a sweep will solve; also the oracle's reach.
pub const SWEEP_CAP: usize = 24;

/// Applies each theorem to every `(G, H)` pair of the two corpora; pairs
/// outside a theorem's hypotheses (or whose product exceeds `cap` vertices)
/// count as skipped, not passed. Caps beyond [`SWEEP_CAP`] are clamped.
pub fn product_sweep(
    g_corpus: &Corpus,
    h_corpus: &Corpus,
    ids: &[TheoremId],
    cap: usize,
) -> Vec<TheoremCheck> {
    let cap = cap.min(SWEEP_CAP);
    let gs = g_corpus.collect();
    let hs = h_corpus.collect();
    let mut pairs = Vec::with_capacity(gs.len() * hs.len());
    for g in &gs {
        for h in &hs {
            pairs.push((g.clone(), h.clone()));
        }
    }
    let corpus_id = format!("{} x {} (product <= {cap})", g_corpus.id(), h_corpus.id());
    ids.iter()
        .map(|&id| {
            let started = Instant::now();
            let join_style = matches!(id, TheoremId::Thm21 | TheoremId::Thm22 | TheoremId::Thm23);
            let outcomes = parallel_map(&pairs, |(g, h)| {
                if join_style {
                    check_join_pair(id, g, h, cap)
                } else {
                    check_lex_pair(id, g, h, cap)
                }
            });
            let mut tally = Tally::default();
            for ((g, h), outcome) in pairs.iter().zip(outcomes) {
                tally.record(outcome, || vec![g.to_graph6(), h.to_graph6()]);
            }
            TheoremCheck::from_tally(id, corpus_id.clone(), tally, started)
        })
        .collect()
}

// ---- subset-pattern lemmas --------------------------------------------------------

fn cycle_pattern_present(n: usize, mask: u64) -> bool {
    let has = |v: usize| (mask >> (v % n)) & 1 == 1;
    for i in 0..n {
        if has(i) && has(i + 2) && has(i + 3) && has(i + 4) {
            return true; // skip-second window (covers the full window too)
        }
        if has(i) && has(i + 1) && has(i + 2) && has(i + 4) {
            return true; // skip-fourth window
        }
    }
    false
}

fn path_pattern_present(n: usize, mask: u64) -> bool {
    let has = |v: usize| (mask >> v) & 1 == 1;
    if (has(0) && has(1) && has(2)) || (n >= 3 && has(n - 3) && has(n - 2) && has(n - 1)) {
        return true;
    }
    if n >= 5 {
        for i in 0..=n - 5 {
            if has(i) && has(i + 4) {
                let skip_second = has(i + 2) && has(i + 3);
                let skip_fourth = has(i + 1) && has(i + 2);
                if skip_second || skip_fourth {
                    return true;
                }
            }
        }
    }
    false
}

fn verify_subset_lemma(id: TheoremId, range: (usize, usize)) -> TheoremCheck {
    let started = Instant::now();
    let cycle_style = id == TheoremId::Lemma15;
    let sizes: Vec<usize> = (range.0..=range.1).collect();
    let parts = parallel_map(&sizes, |&n| {
        let mut tally = Tally::default();
        let size = if cycle_style {
            2 * n / 3 + 1
        } else {
            (2 * n).div_ceil(3) + 1
        };
        let graph6 = if cycle_style {
            Graph::cycle(n).expect("n >= 3").to_graph6()
        } else {
            Graph::path(n).expect("n >= 1").to_graph6()
        };
        for mask in subsets_lex(n, size) {
            let ok = if cycle_style {
                cycle_pattern_present(n, mask)
            } else {
                path_pattern_present(n, mask)
            };
            tally.record(
                if ok {
                    Outcome::Pass
                } else {
                    Outcome::Fail {
                        expected: "a required window pattern inside the subset".into(),
                        got: format!("subset mask {mask:#b} has none"),
                    }
                },
                || vec![graph6.clone()],
            );
        }
        tally
    });
    let mut tally = Tally::default();
    for p in parts {
        tally.merge(p);
    }
    let kind = if cycle_style { "cycles" } else { "paths" };
    TheoremCheck::from_tally(
        id,
        format!("{kind}(n={}..{})", range.0, range.1),
        tally,
        started,
    )
}

// ---- reduction sweep -----------------------------------------------------------------

fn verify_reduction(max_n: usize) -> Result<TheoremCheck> {
    let started = Instant::now();
    let corpus = Corpus::enumerated_range(1, max_n, CorpusFilter::Connected)?;
    let graphs = corpus.collect();
    let outcomes = parallel_map(&graphs, |g| match formulas::alpha_via_reduction(g) {
        Err(e) => fail("reduction runs", format!("error: {e}")),
        Ok(trace) => {
            let direct = alpha(g).value;
            if trace.alpha == direct {
                Outcome::Pass
            } else {
                fail(
                    format!("alpha = {direct}"),
                    format!("alpha = {}", trace.alpha),
                )
            }
        }
    });
    let mut tally = Tally::default();
    for (g, outcome) in graphs.iter().zip(outcomes) {
        tally.record(outcome, || vec![g.to_graph6()]);
    }
    Ok(TheoremCheck::from_tally(
        TheoremId::CorNphardReduction,
        corpus.id().to_string(),
        tally,
        started,
    ))
}

// ---- dispatch --------------------------------------------------------------------------

fn singles_corpus(id: TheoremId, params: &VerifyParams) -> Result<Corpus> {
    let filter = match id {
        TheoremId::Eq2Chain => CorpusFilter::IsolateFree,
        TheoremId::Thm1 | TheoremId::Gallai => CorpusFilter::All,
        _ => CorpusFilter::Connected,
    };
    Corpus::enumerated_range(0, params.max_n, filter)
}

fn complete_family(max: usize) -> Vec<Graph> {
    (2..=max)
        .map(|n| Graph::complete(n).expect("small"))
        .collect()
}

fn bipartite_family() -> Vec<Graph> {
    [(1, 2), (1, 3), (2, 2), (2, 3)]
        .iter()
        .map(|&(r, t)| Graph::complete_bipartite(r, t).expect("small"))
        .collect()
}

fn matched_edges(t: usize) -> Graph {
    let k2 = Graph::complete(2).expect("small");
    Graph::disjoint_union(&vec![k2; t]).expect("small")
}

/// Runs one theorem over its default corpus for the given sizes.
pub fn verify(id: TheoremId, params: &VerifyParams) -> Result<TheoremCheck> {
    match id {
        TheoremId::Thm1
        | TheoremId::Eq2Chain
        | TheoremId::Gallai
        | TheoremId::Thm7FamilyF
        | TheoremId::Lemma2
        | TheoremId::Lemma3 => Ok(verify_single(id, &singles_corpus(id, params)?)),

        TheoremId::Thm10
        | TheoremId::Thm11
        | TheoremId::Thm12
        | TheoremId::Thm13
        | TheoremId::LemmaImportant
        | TheoremId::LemmaAdjacent => {
            let g_corpus =
                Corpus::enumerated_range(2, params.product_g_max, CorpusFilter::Connected)?;
            let h_corpus = Corpus::enumerated_range(1, params.product_h_max, CorpusFilter::All)?;
            Ok(product_sweep(&g_corpus, &h_corpus, &[id], params.product_cap).remove(0))
        }

        TheoremId::RemarkComponents => {
            let g_corpus = Corpus::enumerated_range(1, 3, CorpusFilter::All)?;
            let h_corpus = Corpus::enumerated_range(1, 3, CorpusFilter::All)?;
            Ok(product_sweep(&g_corpus, &h_corpus, &[id], 20).remove(0))
        }

        TheoremId::ThmEquality => {
            let g_corpus = Corpus::enumerated_range(1, 3, CorpusFilter::All)?;
            let hs: Vec<Graph> = (2..=4).map(matched_edges).collect();
            let h_corpus = Corpus::from_graphs("matched-edges(t=2..4)", hs, CorpusFilter::All);
            Ok(product_sweep(&g_corpus, &h_corpus, &[id], 24).remove(0))
        }

        TheoremId::CorNphardReduction => verify_reduction(params.reduction_max_n),

        TheoremId::Prop14 => {
            let g_corpus =
                Corpus::from_graphs("complete(n=2..4)", complete_family(4), CorpusFilter::All);
            let h_corpus = Corpus::enumerated_range(1, params.formula_h_max, CorpusFilter::All)?;
            Ok(product_sweep(&g_corpus, &h_corpus, &[id], 24).remove(0))
        }

        TheoremId::Prop15 => {
            let g_corpus = Corpus::from_graphs(
                "complete-bipartite(r<=t<=3)",
                bipartite_family(),
                CorpusFilter::All,
            );
            let h_corpus =
                Corpus::enumerated_range(1, params.formula_h_max.min(3), CorpusFilter::All)?;
            Ok(product_sweep(&g_corpus, &h_corpus, &[id], 24).remove(0))
        }

        TheoremId::Prop17 => {
            let g_corpus = Corpus::from_graphs(
                "cycles(n=4..5)",
                vec![Graph::cycle(4)?, Graph::cycle(5)?],
                CorpusFilter::All,
            );
            let h_corpus = Corpus::enumerated_range(1, params.formula_h_max, CorpusFilter::All)?;
            Ok(product_sweep(&g_corpus, &h_corpus, &[id], 24).remove(0))
        }

        TheoremId::Prop19 => {
            let g_corpus = Corpus::from_graphs(
                "paths(n=2..5)",
                (2..=5).map(|n| Graph::path(n).expect("small")).collect(),
                CorpusFilter::All,
            );
            let h_corpus = Corpus::enumerated_range(1, params.formula_h_max, CorpusFilter::All)?;
            Ok(product_sweep(&g_corpus, &h_corpus, &[id], 24).remove(0))
        }

        TheoremId::Lemma15 => Ok(verify_subset_lemma(id, params.cycle_range)),
        TheoremId::Lemma18 => Ok(verify_subset_lemma(id, params.path_range)),

        TheoremId::Thm21 | TheoremId::Thm22 | TheoremId::Thm23 => {
            let corpus = Corpus::enumerated_range(1, params.join_max, CorpusFilter::All)?;
            Ok(product_sweep(&corpus, &corpus, &[id], 2 * params.join_max).remove(0))
        }
    }
}

// ---- campaigns and reports -----------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct Campaign {
    pub max_n: usize,
    pub checks: Vec<TheoremCheck>,
}

impl Campaign {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(TheoremCheck::passed)
    }
}

/// Runs every theorem check at the given sizes, in enum order.
pub fn run_campaign(params: &VerifyParams) -> Result<Campaign> {
    let mut checks = Vec::with_capacity(ALL_THEOREMS.len());
    for id in ALL_THEOREMS {
        checks.push(verify(id, params)?);
    }
    Ok(Campaign {
        max_n: params.max_n,
        checks,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<ReportFormat> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" => Ok(ReportFormat::Markdown),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Renders checks with stable field order; `include_timing = false` zeroes
/// the elapsed column so two runs compare byte-for-byte.
pub fn report(checks: &[TheoremCheck], format: ReportFormat, include_timing: bool) -> String {
    let mut checks = checks.to_vec();
    if !include_timing {
        for c in &mut checks {
            c.elapsed_ms = 0;
        }
    }
    match format {
        ReportFormat::Json => {
            serde_json::to_string_pretty(&checks).expect("checks serialize") + "\n"
        }
        ReportFormat::Csv => {
            let mut out = String::from("theorem_id,corpus,instances,failures,elapsed_ms\r\n");
            for c in &checks {
                out.push_str(&format!(
                    "{},{},{},{},{}\r\n",
                    csv_quote(c.theorem_id.as_str()),
                    csv_quote(&c.corpus_id),
                    c.instances,
                    c.failed,
                    c.elapsed_ms
                ));
            }
            out
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            out.push_str(
                "| theorem | statement | corpus | instances | passes | skipped | failures | elapsed_ms |\n",
            );
            out.push_str("|---|---|---|---:|---:|---:|---:|---:|\n");
            for c in &checks {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    c.theorem_id.as_str(),
                    c.theorem_id.statement(),
                    c.corpus_id,
                    c.instances,
                    c.passes,
                    c.skipped,
                    c.failed,
                    c.elapsed_ms
                ));
            }
            out
        }
    }
}

/// Campaign JSON with stable key order (timing optional, for comparisons).
pub fn campaign_json(campaign: &Campaign, include_timing: bool) -> String {
    let mut c = campaign.clone();
    if !include_timing {
        for check in &mut c.checks {
            check.elapsed_ms = 0;
        }
    }
    serde_json::to_string_pretty(&c).expect("campaign serializes") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            Corpus::enumerated(3, CorpusFilter::All)
                .unwrap()
                .collect()
                .len(),
            8
        );
        assert_eq!(
            Corpus::enumerated(4, CorpusFilter::Connected)
                .unwrap()
                .collect()
                .len(),
            38
        );
        assert_eq!(
            Corpus::enumerated(0, CorpusFilter::All)
                .unwrap()
                .collect()
                .len(),
            1
        );
        assert!(Corpus::enumerated(8, CorpusFilter::All).is_err());
    }

    #[test]
    fn enumeration_is_mask_ascending() {
        let graphs = Corpus::enumerated(3, CorpusFilter::All).unwrap().collect();
        assert!(graphs[0].is_edgeless());
        assert!(graphs[7].is_complete());
        assert_eq!(graphs[1].edge_count(), 1);
    }

    #[test]
    fn theorem_ids_round_trip() {
        for id in ALL_THEOREMS {
            assert_eq!(TheoremId::parse(id.as_str()).unwrap(), id);
            assert!(!id.statement().is_empty());
        }
        assert!(TheoremId::parse("thm99").is_err());
        assert_eq!(ALL_THEOREMS.len(), 24);
    }

    #[test]
    fn thm1_gallai_chain_pass_small() {
        let params = VerifyParams::for_max_n(4);
        for id in [TheoremId::Thm1, TheoremId::Gallai, TheoremId::Eq2Chain] {
            let check = verify(id, &params).unwrap();
            assert!(check.passed(), "{:?}: {:?}", id, check.failures);
            assert!(check.accounted());
            assert!(check.instances > 0);
        }
    }

    #[test]
    fn family_equivalence_passes_small() {
        let params = VerifyParams::for_max_n(5);
        let check = verify(TheoremId::Thm7FamilyF, &params).unwrap();
        assert!(check.passed(), "{:?}", check.failures);
        // the n = 0 and n = 1 graphs are skipped
        assert!(check.skipped >= 2);
    }

    #[test]
    fn product_bounds_pass_tiny() {
        let mut params = VerifyParams::for_max_n(4);
        params.product_g_max = 3;
        params.product_h_max = 3;
        for id in [
            TheoremId::Thm10,
            TheoremId::Thm11,
            TheoremId::Thm12,
            TheoremId::Thm13,
            TheoremId::LemmaImportant,
            TheoremId::LemmaAdjacent,
            TheoremId::RemarkComponents,
            TheoremId::ThmEquality,
        ] {
            let check = verify(id, &params).unwrap();
            assert!(check.passed(), "{id:?}: {:?}", check.failures);
            assert!(check.accounted(), "{id:?}");
            assert!(check.passes > 0, "{id:?} checked nothing");
        }
    }

    #[test]
    fn subset_lemmas_small_ranges() {
        let mut params = VerifyParams::for_max_n(4);
        params.cycle_range = (5, 8);
        params.path_range = (4, 8);
        let c = verify(TheoremId::Lemma15, &params).unwrap();
        assert!(c.passed(), "{:?}", c.failures);
        let p = verify(TheoremId::Lemma18, &params).unwrap();
        assert!(p.passed(), "{:?}", p.failures);
        // C(5,4) + C(6,5) + C(7,5) + C(8,6) subsets
        assert_eq!(c.instances, 5 + 6 + 21 + 28);
    }

    #[test]
    fn join_sweeps_pass_tiny() {
        let mut params = VerifyParams::for_max_n(4);
        params.join_max = 3;
        for id in [TheoremId::Thm21, TheoremId::Thm22, TheoremId::Thm23] {
            let check = verify(id, &params).unwrap();
            assert!(check.passed(), "{id:?}: {:?}", check.failures);
            assert!(check.passes > 0, "{id:?} checked nothing");
        }
    }

    #[test]
    fn reduction_sweep_tiny() {
        let mut params = VerifyParams::for_max_n(4);
        params.reduction_max_n = 3;
        let check = verify(TheoremId::CorNphardReduction, &params).unwrap();
        assert!(check.passed(), "{:?}", check.failures);
        assert_eq!(check.instances, 1 + 1 + 4); // connected labeled, n = 1..3
    }

    #[test]
    fn explicit_corpus_runs() {
        let corpus = Corpus::from_graphs(
            "handful",
            vec![Graph::path(3).unwrap(), Graph::cycle(4).unwrap()],
            CorpusFilter::All,
        );
        let check = verify_single(TheoremId::Gallai, &corpus);
        assert!(check.passed());
        assert_eq!(check.instances, 2);
        assert_eq!(check.corpus_id, "handful");
    }

    #[test]
    fn graph6_corpus_parses() {
        let corpus = Corpus::from_graph6_text("two", "Bw\n\nA_\n", CorpusFilter::All).unwrap();
        assert_eq!(corpus.collect().len(), 2);
        assert!(Corpus::from_graph6_text("bad", "!!\n", CorpusFilter::All).is_err());
    }

    #[test]
    fn report_formats() {
        let corpus = Corpus::enumerated(3, CorpusFilter::All).unwrap();
        let checks = vec![verify_single(TheoremId::Thm1, &corpus)];
        let json = report(&checks, ReportFormat::Json, false);
        assert!(json.contains("\"theorem_id\": \"thm1\""));
        assert!(json.contains("\"elapsed_ms\": 0"));
        let csv = report(&checks, ReportFormat::Csv, false);
        assert!(csv.starts_with("theorem_id,corpus,instances,failures,elapsed_ms\r\n"));
        assert!(csv.contains("thm1,"));
        let md = report(&checks, ReportFormat::Markdown, true);
        assert!(md.contains("| thm1 |"));
        // header-only documents for empty input
        assert_eq!(report(&[], ReportFormat::Csv, true).lines().count(), 1);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_quote("plain"), "plain");
        assert_eq!(csv_quote("a,b"), "\"a,b\"");
        assert_eq!(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn campaign_small_deterministic() {
        let params = VerifyParams::for_max_n(3);
        let one = run_campaign(&params).unwrap();
        let two = run_campaign(&params).unwrap();
        assert_eq!(campaign_json(&one, false), campaign_json(&two, false));
        assert!(one.passed());
        assert_eq!(one.checks.len(), 24);
    }
}
