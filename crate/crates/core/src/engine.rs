//! Synchronous simulation of irreversible conversion processes.
//!
//! A white vertex turns permanently black at step `t` when its black
//! neighborhood at step `t-1` reaches its threshold: the fixed `k` under
//! the k-threshold rule, or `ceil(deg/2)` under the majority rule. All
//! eligible vertices flip simultaneously.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("k-threshold rule requires k >= 1")]
    ZeroThreshold,
    #[error("the given set does not convert the graph")]
    NotConversionSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RuleKind {
    KThreshold(usize),
    Majority,
}

/// A conversion rule: `k`-threshold with `k >= 1`, or majority.
///
/// Under majority, a vertex of degree `d >= 1` has threshold
/// `ceil(d/2)`; isolated vertices never convert under either rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule(RuleKind);

impl Rule {
    /// The k-threshold rule. `k = 0` is rejected: spontaneous conversion
    /// is not a conversion process.
    pub fn k_threshold(k: usize) -> Result<Rule, EngineError> {
        if k == 0 {
            return Err(EngineError::ZeroThreshold);
        }
        Ok(Rule(RuleKind::KThreshold(k)))
    }

    pub fn majority() -> Rule {
        Rule(RuleKind::Majority)
    }

    pub fn is_majority(&self) -> bool {
        matches!(self.0, RuleKind::Majority)
    }

    /// The fixed k of a k-threshold rule, if that is what this is.
    pub fn fixed_threshold(&self) -> Option<usize> {
        match self.0 {
            RuleKind::KThreshold(k) => Some(k),
            RuleKind::Majority => None,
        }
    }

    /// Conversion threshold for a vertex of the given degree, or `None`
    /// if such a vertex can never convert.
    ///
    /// A degree-`d` vertex under k-threshold with `d < k` can never see
    /// `k` black neighbors, so `None` is returned for it as well; this
    /// makes "forced" vertices directly visible to callers.
    pub fn threshold(&self, degree: usize) -> Option<usize> {
        match self.0 {
            RuleKind::KThreshold(k) => (degree >= k).then_some(k),
            RuleKind::Majority => (degree >= 1).then(|| degree.div_ceil(2)),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            RuleKind::KThreshold(k) => write!(f, "k:{k}"),
            RuleKind::Majority => write!(f, "majority"),
        }
    }
}

/// Record of one simulated process until fixpoint.
///
/// `waves[t-1]` holds the vertices newly colored at step `t`; waves are
/// nonempty, pairwise disjoint, and disjoint from the seed. The process
/// reaches its fixpoint after `steps = waves.len() <= |V|` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub seed: VertexSet,
    pub waves: Vec<VertexSet>,
    pub converted: bool,
    pub steps: usize,
}

impl Trace {
    /// Union of the seed and all waves: the final black set.
    pub fn final_black(&self) -> VertexSet {
        let mut black = self.seed.clone();
        for w in &self.waves {
            black.union_with(w);
        }
        black
    }
}

/// Per-vertex conversion times: `Some(0)` for seed vertices, `Some(t)`
/// for vertices colored at step `t`, `None` for vertices never colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionTimes {
    times: Vec<Option<usize>>,
}

impl ConversionTimes {
    pub fn time(&self, v: usize) -> Option<usize> {
        self.times[v]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.times
    }

    /// Largest finite conversion time, when every vertex converts.
    pub fn max_time(&self) -> Option<usize> {
        self.times.iter().copied().collect::<Option<Vec<_>>>()?.into_iter().max()
    }
}

fn thresholds(g: &Graph, rule: Rule) -> Vec<Option<usize>> {
    (0..g.vertex_count()).map(|v| rule.threshold(g.degree(v))).collect()
}

/// One synchronous update: returns `black` together with every white
/// vertex whose black neighborhood meets its threshold. The input is
/// untouched and the result is always a superset of it.
pub fn step(g: &Graph, rule: Rule, black: &VertexSet) -> VertexSet {
    assert_eq!(black.universe(), g.vertex_count(), "seed set universe mismatch");
    step_with(g, &thresholds(g, rule), black)
}

fn step_with(g: &Graph, thresholds: &[Option<usize>], black: &VertexSet) -> VertexSet {
    let mut next = black.clone();
    for (v, &threshold) in thresholds.iter().enumerate() {
        if black.contains(v) {
            continue;
        }
        if let Some(t) = threshold {
            let black_neighbors = g.neighbors(v).iter().filter(|&&w| black.contains(w)).count();
            if black_neighbors >= t {
                next.insert(v);
            }
        }
    }
    next
}

/// Runs the process from `seed` until the first step that colors nothing.
pub fn run(g: &Graph, rule: Rule, seed: &VertexSet) -> Trace {
    assert_eq!(seed.universe(), g.vertex_count(), "seed set universe mismatch");
    let thresholds = thresholds(g, rule);
    let mut black = seed.clone();
    let mut waves = Vec::new();
    loop {
        let next = step_with(g, &thresholds, &black);
        let wave = next.difference(&black);
        if wave.is_empty() {
            break;
        }
        waves.push(wave);
        black = next;
    }
    Trace {
        seed: seed.clone(),
        converted: black.len() == g.vertex_count(),
        steps: waves.len(),
        waves,
    }
}

/// `Some(T)` when `seed` converts the whole graph in `T` steps,
/// `None` when the process stalls before full conversion.
pub fn is_conversion_set(g: &Graph, rule: Rule, seed: &VertexSet) -> Option<usize> {
    let trace = run(g, rule, seed);
    trace.converted.then_some(trace.steps)
}

/// Time step at which each vertex turns black, consistent with the
/// waves of [`run`].
pub fn conversion_times(g: &Graph, rule: Rule, seed: &VertexSet) -> ConversionTimes {
    let trace = run(g, rule, seed);
    let mut times = vec![None; g.vertex_count()];
    for v in seed.iter() {
        times[v] = Some(0);
    }
    for (i, wave) in trace.waves.iter().enumerate() {
        for v in wave.iter() {
            times[v] = Some(i + 1);
        }
    }
    ConversionTimes { times }
}

/// Whether `set` is a minimal conversion set: it converts, and removing
/// any single vertex breaks conversion. Errors if `set` does not convert
/// in the first place.
pub fn is_minimal(g: &Graph, rule: Rule, set: &VertexSet) -> Result<bool, EngineError> {
    if is_conversion_set(g, rule, set).is_none() {
        return Err(EngineError::NotConversionSet);
    }
    for v in set.iter() {
        let mut smaller = set.clone();
        smaller.remove(v);
        if is_conversion_set(g, rule, &smaller).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, Family};

    fn c4() -> Graph {
        generate(&Family::Cycle(4)).unwrap()
    }

    fn ids(universe: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(universe, ids)
    }

    #[test]
    fn rule_thresholds() {
        let k2 = Rule::k_threshold(2).unwrap();
        assert_eq!(k2.threshold(5), Some(2));
        assert_eq!(k2.threshold(1), None, "degree below k never converts");
        assert_eq!(Rule::k_threshold(0).unwrap_err(), EngineError::ZeroThreshold);
        let maj = Rule::majority();
        assert_eq!(maj.threshold(0), None, "isolated vertices never convert");
        assert_eq!(maj.threshold(1), Some(1));
        assert_eq!(maj.threshold(4), Some(2));
        assert_eq!(maj.threshold(5), Some(3));
    }

    #[test]
    fn step_c4_majority_from_single() {
        let g = c4();
        let black = ids(4, &[0]);
        let next = step(&g, Rule::majority(), &black);
        assert_eq!(next.to_vec(), vec![0, 1, 3]);
        assert_eq!(black.to_vec(), vec![0], "input untouched");
    }

    #[test]
    fn step_at_full_is_identity() {
        let g = c4();
        let full = VertexSet::full(4);
        assert_eq!(step(&g, Rule::majority(), &full), full);
        assert_eq!(step(&g, Rule::k_threshold(2).unwrap(), &full), full);
    }

    #[test]
    fn step_p3_k2_middle_flips() {
        let g = generate(&Family::Path(3)).unwrap();
        let next = step(&g, Rule::k_threshold(2).unwrap(), &ids(3, &[0, 2]));
        assert_eq!(next.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn run_c4_majority_from_single() {
        let g = c4();
        let trace = run(&g, Rule::majority(), &ids(4, &[0]));
        assert!(trace.converted);
        assert_eq!(trace.steps, 2);
        assert_eq!(trace.waves.len(), 2);
        assert_eq!(trace.waves[0].to_vec(), vec![1, 3]);
        assert_eq!(trace.waves[1].to_vec(), vec![2]);
    }

    #[test]
    fn run_p4_k2_endpoints_stall() {
        let g = generate(&Family::Path(4)).unwrap();
        let trace = run(&g, Rule::k_threshold(2).unwrap(), &ids(4, &[0, 3]));
        assert!(!trace.converted);
        assert!(trace.waves.is_empty());
    }

    #[test]
    fn run_empty_graph_trivially_converts() {
        let g = Graph::edgeless(0);
        let trace = run(&g, Rule::majority(), &VertexSet::new(0));
        assert!(trace.converted);
        assert_eq!(trace.steps, 0);
    }

    #[test]
    fn conversion_set_checks_on_c4() {
        let g = c4();
        assert_eq!(is_conversion_set(&g, Rule::majority(), &ids(4, &[0])), Some(2));
        let k2 = Rule::k_threshold(2).unwrap();
        assert_eq!(is_conversion_set(&g, k2, &ids(4, &[0, 2])), Some(1));
        assert_eq!(is_conversion_set(&g, k2, &ids(4, &[0, 1])), None);
    }

    #[test]
    fn times_c4_majority() {
        let g = c4();
        let times = conversion_times(&g, Rule::majority(), &ids(4, &[0]));
        assert_eq!(times.as_slice(), &[Some(0), Some(1), Some(2), Some(1)]);
        assert_eq!(times.max_time(), Some(2));
    }

    #[test]
    fn times_full_seed_all_zero() {
        let g = c4();
        let times = conversion_times(&g, Rule::majority(), &VertexSet::full(4));
        assert!(times.as_slice().iter().all(|&t| t == Some(0)));
    }

    #[test]
    fn times_never_for_unreachable() {
        let g = generate(&Family::Path(2)).unwrap();
        let times = conversion_times(&g, Rule::k_threshold(2).unwrap(), &ids(2, &[0]));
        assert_eq!(times.as_slice(), &[Some(0), None]);
        assert_eq!(times.max_time(), None);
    }

    #[test]
    fn minimality_on_c4() {
        let g = c4();
        assert_eq!(is_minimal(&g, Rule::majority(), &ids(4, &[0])), Ok(true));
        assert_eq!(is_minimal(&g, Rule::majority(), &ids(4, &[0, 1])), Ok(false));
        // Non-converting input is a precondition violation.
        let k2 = Rule::k_threshold(2).unwrap();
        assert_eq!(is_minimal(&g, k2, &ids(4, &[0, 1])), Err(EngineError::NotConversionSet));
    }

    #[test]
    fn minimality_forced_pair_on_k2() {
        let g = generate(&Family::Path(2)).unwrap();
        let k2 = Rule::k_threshold(2).unwrap();
        assert_eq!(is_minimal(&g, k2, &ids(2, &[0, 1])), Ok(true));
    }
}
