//! Exact minimum conversion-set / dynamo search, and greedy
//! minimalization of a given conversion set.
//!
//! The search enumerates candidate seed sets by cardinality, starting at
//! the forced vertices (which every conversion set must contain), and
//! within each cardinality in lexicographic order of the sorted id
//! tuples, so the first success is both a true minimum and the
//! lexicographically least witness of that size.

use thiserror::Error;

use crate::engine::{self, Rule};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Hard cap on instance size: subsets are machine-word bit masks.
pub const MAX_SOLVER_LIMIT: usize = 64;

/// Default cap on `|V|` for the exhaustive search.
pub const DEFAULT_SOLVER_LIMIT: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices, above the solver limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("solver limit {limit} exceeds the hard cap {MAX_SOLVER_LIMIT}")]
    LimitTooLarge { limit: usize },
    #[error("the given set does not convert the graph")]
    NotConversionSet,
}

/// Search configuration.
#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Reject graphs with more vertices than this.
    pub max_vertices: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { max_vertices: DEFAULT_SOLVER_LIMIT }
    }
}

/// A certified minimum conversion set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Minimum cardinality over all converting sets.
    pub size: usize,
    /// The lexicographically least converting set of that size.
    pub witness: VertexSet,
    /// Number of candidate sets simulated.
    pub explored: u64,
}

/// Outcome of a (possibly budget-capped) search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(SolveResult),
    /// No converting set of cardinality `<= budget` exists.
    BudgetExhausted { budget: usize, explored: u64 },
}

impl SolveOutcome {
    /// The result, if one was found.
    pub fn found(self) -> Option<SolveResult> {
        match self {
            SolveOutcome::Found(r) => Some(r),
            SolveOutcome::BudgetExhausted { .. } => None,
        }
    }
}

/// Vertices that belong to every converting seed set: under k-threshold
/// all vertices of degree below `k`, under majority the isolated ones.
pub fn forced_vertices(g: &Graph, rule: Rule) -> VertexSet {
    let mut forced = VertexSet::new(g.vertex_count());
    for v in 0..g.vertex_count() {
        if rule.threshold(g.degree(v)).is_none() {
            forced.insert(v);
        }
    }
    forced
}

struct MaskSim {
    n: usize,
    adj: Vec<u64>,
    thresholds: Vec<Option<u32>>,
    full: u64,
}

impl MaskSim {
    fn new(g: &Graph, rule: Rule) -> MaskSim {
        let n = g.vertex_count();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let thresholds = (0..n)
            .map(|v| rule.threshold(g.degree(v)).map(|t| t as u32))
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        MaskSim { n, adj, thresholds, full }
    }

    fn converts(&self, seed: u64) -> bool {
        let mut black = seed;
        loop {
            if black == self.full {
                return true;
            }
            let mut next = black;
            for v in 0..self.n {
                if black >> v & 1 == 0 {
                    if let Some(t) = self.thresholds[v] {
                        if (self.adj[v] & black).count_ones() >= t {
                            next |= 1 << v;
                        }
                    }
                }
            }
            if next == black {
                return false;
            }
            black = next;
        }
    }
}

/// Exact minimum conversion set under `rule`, with an optional cap on
/// the cardinality searched.
pub fn min_conversion(
    g: &Graph,
    rule: Rule,
    budget: Option<usize>,
    opts: &SolverOptions,
) -> Result<SolveOutcome, SolveError> {
    if opts.max_vertices > MAX_SOLVER_LIMIT {
        return Err(SolveError::LimitTooLarge { limit: opts.max_vertices });
    }
    let n = g.vertex_count();
    if n > opts.max_vertices {
        return Err(SolveError::SizeLimitExceeded { n, limit: opts.max_vertices });
    }

    let sim = MaskSim::new(g, rule);
    let forced = forced_vertices(g, rule);
    let forced_mask = forced.iter().fold(0u64, |m, v| m | 1 << v);
    let free: Vec<usize> = (0..n).filter(|&v| !forced.contains(v)).collect();

    let cap = budget.unwrap_or(n).min(n);
    let mut explored = 0u64;
    for size in forced.len()..=cap {
        let extra = size - forced.len();
        let mut found = None;
        for_each_combination(&free, extra, &mut |combo_mask| {
            explored += 1;
            if sim.converts(forced_mask | combo_mask) {
                found = Some(forced_mask | combo_mask);
                true
            } else {
                false
            }
        });
        if let Some(mask) = found {
            let mut witness = VertexSet::new(n);
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    witness.insert(v);
                }
            }
            debug_assert!(engine::is_conversion_set(g, rule, &witness).is_some());
            return Ok(SolveOutcome::Found(SolveResult { size, witness, explored }));
        }
    }
    Ok(SolveOutcome::BudgetExhausted { budget: cap, explored })
}

/// Calls `f` with the bit mask of every `r`-subset of `items`, in
/// lexicographic order of the chosen id tuples. Stops early when `f`
/// returns true.
fn for_each_combination(items: &[usize], r: usize, f: &mut impl FnMut(u64) -> bool) {
    if r > items.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << items[i]);
        if f(mask) {
            return;
        }
        // Rightmost position that can still advance; none means done.
        let Some(i) = (0..r).rev().find(|&i| idx[i] != i + items.len() - r) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Shrinks a converting set to a minimal one: scans ids in increasing
/// order, deletes the first vertex whose removal keeps the set
/// converting, and restarts the scan after every deletion.
pub fn shrink_to_minimal(g: &Graph, rule: Rule, set: &VertexSet) -> Result<VertexSet, SolveError> {
    if engine::is_conversion_set(g, rule, set).is_none() {
        return Err(SolveError::NotConversionSet);
    }
    let mut current = set.clone();
    'restart: loop {
        for v in current.clone().iter() {
            let mut smaller = current.clone();
            smaller.remove(v);
            if engine::is_conversion_set(g, rule, &smaller).is_some() {
                current = smaller;
                continue 'restart;
            }
        }
        return Ok(current);
    }
}
