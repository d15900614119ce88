//! Executable bounds and closed formulas for the super domination number of
//! lexicographic products and joins, in terms of invariants of the factors.
//!
//! Every operation checks its hypotheses and answers `Inapplicable` instead
//! of extrapolating; dichotomies are dispatched on solver-computed values of
//! the second factor, never on caller claims. Arithmetic is integer-exact.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::{connected_components, lex_product};
use crate::solvers::{alpha, alpha_2, gamma_sp, rho};
use serde::Serialize;

/// A formula declined because its hypotheses do not hold.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("inapplicable: {0}")]
pub struct Inapplicable(pub String);

pub type FormulaResult<T = usize> = std::result::Result<T, Inapplicable>;

fn sp(g: &Graph) -> usize {
    gamma_sp(g).value
}

// ---- general product bounds ------------------------------------------------

/// Both upper bounds on `gamma_sp(G o H)` built from an independence-style
/// set of `G`: the general form uses a maximum independent set, the
/// sharpened form (available when `gamma_sp(H) = n' - 1` and `H` is not
/// complete) uses a maximum 2-independent set.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MainUpperBound {
    pub general: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpened: Option<usize>,
}

impl MainUpperBound {
    /// The binding value: the sharpened variant when it applies.
    pub fn binding(&self) -> usize {
        self.sharpened.unwrap_or(self.general)
    }
}

pub fn bound_main_upper(g: &Graph, h: &Graph) -> FormulaResult<MainUpperBound> {
    if h.is_edgeless() {
        return Err(Inapplicable("second factor must be nonempty".into()));
    }
    let (n, np) = (g.n(), h.n());
    let a = alpha(g).value;
    let sp_h = sp(h);
    let general = a * sp_h + (n - a) * np;
    let sharpened = (sp_h == np - 1 && !h.is_complete()).then(|| n * np - alpha_2(g).value);
    Ok(MainUpperBound { general, sharpened })
}

/// The lower bound `n * gamma_sp(H)`.
pub fn bound_trivial_lower(g: &Graph, h: &Graph) -> FormulaResult {
    if g.n() < 2 {
        return Err(Inapplicable("first factor needs order >= 2".into()));
    }
    if h.is_edgeless() {
        return Err(Inapplicable("second factor must be nonempty".into()));
    }
    Ok(g.n() * sp(h))
}

/// Whether the lower bound above is attained: exactly when `G` is a single
/// edge and `H` is a noncomplete graph with `gamma_sp(H) = n' - 1`.
pub fn equality_trivial_lower(g: &Graph, h: &Graph) -> FormulaResult<bool> {
    bound_trivial_lower(g, h)?;
    Ok(g.n() == 2 && g.is_complete() && sp(h) == h.n() - 1 && !h.is_complete())
}

/// `min { n(n'-1) + gamma_sp(G), n'(n-1) + gamma_sp(H) }`.
pub fn bound_min_upper(g: &Graph, h: &Graph) -> FormulaResult {
    let (n, np) = (g.n(), h.n());
    if n < 2 || np < 2 {
        return Err(Inapplicable("both factors need order >= 2".into()));
    }
    Ok((n * (np - 1) + sp(g)).min(np * (n - 1) + sp(h)))
}

/// Upper bound for a product with an edgeless second factor:
/// `n * n' - 2 * rho(L(G))`, via a maximum 2-packing of the line graph.
pub fn bound_empty_upper(g: &Graph, nprime: usize) -> FormulaResult {
    if nprime < 2 {
        return Err(Inapplicable("second factor needs order >= 2".into()));
    }
    if g.is_edgeless() {
        return Err(Inapplicable(
            "first factor needs an edge (line graph would be empty)".into(),
        ));
    }
    let (line, _) = g
        .line_graph()
        .map_err(|e| Inapplicable(format!("line graph unavailable: {e}")))?;
    Ok(g.n() * nprime - 2 * rho(&line).value)
}

// ---- closed formulas for fixed first factors ---------------------------------

/// First factors with a closed product formula.
#[derive(Clone, Debug)]
pub enum LexFamily<'a> {
    Complete {
        n: usize,
    },
    CompleteBipartite {
        r: usize,
        t: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Any first factor, provided `n' - gamma_sp(H)` exceeds its maximum
    /// degree plus one.
    LargeGap {
        g: &'a Graph,
    },
}

/// Exact `gamma_sp` of the product of the given family member with `H`.
/// The case split keys on the computed `gamma_sp(H)`; hypotheses outside
/// the covered dichotomies yield `Inapplicable`, never a number.
pub fn exact_lex(family: &LexFamily<'_>, h: &Graph) -> FormulaResult {
    let np = h.n();
    let sp_h = sp(h);
    match *family {
        LexFamily::Complete { n } => {
            if n < 2 {
                return Err(Inapplicable("complete factor needs n >= 2".into()));
            }
            if h.is_complete() {
                return Err(Inapplicable("second factor must not be complete".into()));
            }
            if sp_h == np - 1 {
                Ok(n * np - 2)
            } else if sp_h <= np.saturating_sub(2) {
                Ok(np * (n - 1) + sp_h)
            } else {
                Err(Inapplicable(
                    "edgeless second factor is outside the dichotomy".into(),
                ))
            }
        }
        LexFamily::CompleteBipartite { r, t } => {
            if r < 1 || r > t || t < 2 {
                return Err(Inapplicable(
                    "sides must satisfy 1 <= r <= t, t >= 2".into(),
                ));
            }
            if h.is_edgeless() {
                return Err(Inapplicable("second factor must be nonempty".into()));
            }
            Ok(t * sp_h + r * np)
        }
        LexFamily::Cycle { n } => {
            if n < 4 {
                return Err(Inapplicable("cycle factor needs n >= 4".into()));
            }
            if h.is_edgeless() {
                return Err(Inapplicable("second factor must be nonempty".into()));
            }
            if sp_h == np - 1 && !h.is_complete() {
                Ok(n * np - 2 * n / 3)
            } else if sp_h <= np.saturating_sub(2) {
                Ok((n / 2) * sp_h + np * n.div_ceil(2))
            } else {
                Err(Inapplicable(
                    "complete second factor is outside the dichotomy".into(),
                ))
            }
        }
        LexFamily::Path { n } => {
            if n < 2 {
                return Err(Inapplicable("path factor needs n >= 2".into()));
            }
            if h.is_edgeless() {
                return Err(Inapplicable("second factor must be nonempty".into()));
            }
            if sp_h == np - 1 && !h.is_complete() {
                Ok(n * np - (2 * n).div_ceil(3))
            } else if sp_h <= np.saturating_sub(2) {
                Ok(n.div_ceil(2) * sp_h + np * (n / 2))
            } else {
                Err(Inapplicable(
                    "complete second factor is outside the dichotomy".into(),
                ))
            }
        }
        LexFamily::LargeGap { g } => {
            let gap = np - sp_h;
            if gap <= g.max_degree() + 1 {
                return Err(Inapplicable(format!(
                    "gap n' - gamma_sp(H) = {gap} does not exceed max degree + 1"
                )));
            }
            let a = alpha(g).value;
            Ok(a * sp_h + (g.n() - a) * np)
        }
    }
}

// ---- joins -----------------------------------------------------------------

/// How a join instance was classified; a one-vertex factor counts as
/// complete.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JoinCase {
    BothComplete,
    CompleteEmpty,
    BothEmpty,
    CompleteGeneral,
    EmptyGeneral,
    General,
}

impl JoinCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            JoinCase::BothComplete => "join-complete-complete",
            JoinCase::CompleteEmpty => "join-complete-empty",
            JoinCase::BothEmpty => "join-empty-empty",
            JoinCase::CompleteGeneral => "thm22",
            JoinCase::EmptyGeneral => "thm23",
            JoinCase::General => "thm21",
        }
    }
}

/// Exact `gamma_sp(G + H)`, total over the complete/empty/general
/// classification of the two factors:
/// two completes give a complete graph (`n + n' - 1`), complete plus empty
/// is a family member (`n + n' - 1`), two empties give a complete bipartite
/// graph (`n + n' - 2` once both sides have two vertices), and the three
/// remaining cases follow the join formulas.
pub fn exact_join(g: &Graph, h: &Graph) -> FormulaResult<(usize, JoinCase)> {
    let (n, np) = (g.n(), h.n());
    if n == 0 || np == 0 {
        return Err(Inapplicable("join factors need at least one vertex".into()));
    }
    let value = match (
        g.is_complete(),
        h.is_complete(),
        g.is_edgeless(),
        h.is_edgeless(),
    ) {
        (true, true, _, _) => (n + np - 1, JoinCase::BothComplete),
        (true, false, _, true) | (false, true, true, _) => (n + np - 1, JoinCase::CompleteEmpty),
        (true, false, _, false) => (n + sp(h), JoinCase::CompleteGeneral),
        (false, true, false, _) => (np + sp(g), JoinCase::CompleteGeneral),
        // singleton factors are classified complete, so both sides here
        // have at least two vertices
        (false, false, true, true) => (n + np - 2, JoinCase::BothEmpty),
        (false, false, true, false) => ((n + np - 2).min(n + sp(h)), JoinCase::EmptyGeneral),
        (false, false, false, true) => ((n + np - 2).min(np + sp(g)), JoinCase::EmptyGeneral),
        (false, false, false, false) => (
            (n + np - 2).min(n + sp(h)).min(np + sp(g)),
            JoinCase::General,
        ),
    };
    Ok(value)
}

// ---- hardness reduction demo --------------------------------------------------

/// Record of one run of the independence-number-from-products reduction.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionTrace {
    pub n: usize,
    pub max_degree: usize,
    pub t: usize,
    pub h_order: usize,
    pub product_order: usize,
    pub gamma_sp_h: usize,
    pub gamma_sp_product: usize,
    pub alpha: usize,
}

/// Recovers the independence number of `g` from one super domination value:
/// with `t = max_degree + 2` and `H` a disjoint union of `t` edges,
/// `gamma_sp(G o H) = t * (2n - alpha(G))`. The choice of `t` is the
/// smallest making the large-gap hypothesis hold, since
/// `n' - gamma_sp(H) = 2t - t = t`.
pub fn alpha_via_reduction(g: &Graph) -> Result<ReductionTrace> {
    let n = g.n();
    if n == 0 || n > 6 {
        return Err(Error::InvalidArgument(
            "reduction demo supports 1 <= n <= 6".into(),
        ));
    }
    let t = g.max_degree() + 2;
    let k2 = Graph::complete(2)?;
    let h = Graph::disjoint_union(&vec![k2; t])?;
    let gamma_sp_h = sp(&h);
    if h.n() - gamma_sp_h != t {
        return Err(Error::InternalInconsistency(format!(
            "gamma_sp of {t} disjoint edges is {gamma_sp_h}, expected {t}"
        )));
    }
    let product = lex_product(g, std::slice::from_ref(&h))?;
    let s = sp(product.base());
    if !s.is_multiple_of(t) {
        return Err(Error::InternalInconsistency(format!(
            "gamma_sp {s} of the product is not divisible by t = {t}"
        )));
    }
    let quotient = s / t;
    if quotient > 2 * n {
        return Err(Error::InternalInconsistency(format!(
            "quotient {quotient} exceeds 2n = {}",
            2 * n
        )));
    }
    Ok(ReductionTrace {
        n,
        max_degree: g.max_degree(),
        t,
        h_order: h.n(),
        product_order: product.base().n(),
        gamma_sp_h,
        gamma_sp_product: s,
        alpha: 2 * n - quotient,
    })
}

// ---- shape detection ------------------------------------------------------------

/// Sides `(r, t)` with `r <= t` when `g` is complete bipartite.
pub fn as_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    if g.n() < 2 {
        return None;
    }
    let comp = g.complement();
    let parts = connected_components(&comp);
    if parts.len() != 2 {
        return None;
    }
    for p in &parts {
        if !comp.induced_subgraph(p).is_complete() {
            return None;
        }
    }
    let (a, b) = (parts[0].len(), parts[1].len());
    Some((a.min(b), a.max(b)))
}

pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

pub fn is_path(g: &Graph) -> bool {
    g.n() >= 1 && g.is_connected() && g.edge_count() + 1 == g.n() && g.max_degree() <= 2
}

// ---- bound reports -----------------------------------------------------------------

#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub theorem: String,
    pub kind: BoundKind,
    pub value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<&'static str>,
}

/// Every applicable bound and formula for one product or join instance,
/// next to the solver's exact value when the instance is small enough.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub n: usize,
    pub n_prime: usize,
    pub applicable: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_sp_exact: Option<usize>,
}

impl BoundReport {
    /// Lower bounds at most the exact value, upper bounds at least it, and
    /// exact entries equal to it (vacuous without an exact value).
    pub fn consistent(&self) -> bool {
        let Some(exact) = self.gamma_sp_exact else {
            return true;
        };
        self.applicable.iter().all(|e| match e.kind {
            BoundKind::Lower => e.value <= exact,
            BoundKind::Upper => e.value >= exact,
            BoundKind::Exact => e.value == exact,
        })
    }
}

fn entry(theorem: &str, kind: BoundKind, value: usize) -> BoundEntry {
    BoundEntry {
        theorem: theorem.into(),
        kind,
        value,
        variant: None,
    }
}

/// Assembles the report for `G o H`, computing the exact value with the
/// solver when the product has at most `exact_cap` vertices.
pub fn bound_report_lex(g: &Graph, h: &Graph, exact_cap: usize) -> Result<BoundReport> {
    let (n, np) = (g.n(), h.n());
    let mut applicable = Vec::new();

    if let Ok(mb) = bound_main_upper(g, h) {
        applicable.push(entry("thm10", BoundKind::Upper, mb.general));
        if let Some(sharp) = mb.sharpened {
            applicable.push(BoundEntry {
                theorem: "thm10".into(),
                kind: BoundKind::Upper,
                value: sharp,
                variant: Some("sharpened"),
            });
        }
    }
    if let Ok(v) = bound_trivial_lower(g, h) {
        applicable.push(entry("thm11", BoundKind::Lower, v));
    }
    if let Ok(v) = bound_min_upper(g, h) {
        applicable.push(entry("thm12", BoundKind::Upper, v));
    }
    if h.is_edgeless() {
        if let Ok(v) = bound_empty_upper(g, np) {
            applicable.push(entry("thm13", BoundKind::Upper, v));
        }
    }
    if g.is_complete() {
        if let Ok(v) = exact_lex(&LexFamily::Complete { n }, h) {
            applicable.push(entry("prop14", BoundKind::Exact, v));
        }
    }
    if let Some((r, t)) = as_complete_bipartite(g) {
        if let Ok(v) = exact_lex(&LexFamily::CompleteBipartite { r, t }, h) {
            applicable.push(entry("prop15", BoundKind::Exact, v));
        }
    }
    if is_cycle(g) {
        if let Ok(v) = exact_lex(&LexFamily::Cycle { n }, h) {
            applicable.push(entry("prop17", BoundKind::Exact, v));
        }
    }
    if is_path(g) {
        if let Ok(v) = exact_lex(&LexFamily::Path { n }, h) {
            applicable.push(entry("prop19", BoundKind::Exact, v));
        }
    }
    if let Ok(v) = exact_lex(&LexFamily::LargeGap { g }, h) {
        applicable.push(entry("thmEquality", BoundKind::Exact, v));
    }

    let gamma_sp_exact = if n * np <= exact_cap {
        Some(sp(lex_product(g, std::slice::from_ref(h))?.base()))
    } else {
        None
    };
    Ok(BoundReport {
        graph_id: format!(
            "{} o {}",
            g.label().unwrap_or(&g.to_graph6()),
            h.label().unwrap_or(&h.to_graph6())
        ),
        n,
        n_prime: np,
        applicable,
        gamma_sp_exact,
    })
}

/// Assembles the report for `G + H`.
pub fn bound_report_join(g: &Graph, h: &Graph, exact_cap: usize) -> Result<BoundReport> {
    let (n, np) = (g.n(), h.n());
    let mut applicable = Vec::new();
    if let Ok((v, case)) = exact_join(g, h) {
        applicable.push(entry(case.as_str(), BoundKind::Exact, v));
    }
    let gamma_sp_exact = if n + np <= exact_cap {
        Some(sp(crate::products::join(g, h)?.base()))
    } else {
        None
    };
    Ok(BoundReport {
        graph_id: format!(
            "{} + {}",
            g.label().unwrap_or(&g.to_graph6()),
            h.label().unwrap_or(&h.to_graph6())
        ),
        n,
        n_prime: np,
        applicable,
        gamma_sp_exact,
    })
}
