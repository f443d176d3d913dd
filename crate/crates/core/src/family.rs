//! Named graph families and the seeded random generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

/// Sizes of the partite sets of a complete multipartite graph, held in
/// non-increasing order.
///
/// The id layout is normative: part `i` occupies the contiguous id block
/// `[p_1 + ... + p_{i-1}, p_1 + ... + p_i)`. Every multipartite witness
/// construction depends on this layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    /// Validates and normalizes part sizes: at least two parts, all
    /// positive, sorted into non-increasing order.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, GraphError> {
        let mut parts = parts.into();
        if parts.len() < 2 {
            return Err(GraphError::InvalidFamily {
                family: "multipartite",
                reason: format!("need at least 2 parts, got {}", parts.len()),
            });
        }
        if parts.contains(&0) {
            return Err(GraphError::InvalidFamily {
                family: "multipartite",
                reason: "part sizes must be positive".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MultipartiteSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Vertex ids of part `i` (0-based part index).
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.parts[..i].iter().sum();
        start..start + self.parts[i]
    }

    /// The part containing vertex `v`.
    pub fn part_of(&self, v: usize) -> usize {
        assert!(v < self.vertex_count());
        let mut end = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            end += p;
            if v < end {
                return i;
            }
        }
        unreachable!()
    }

    /// Degree of any vertex in part `i`: everything outside its own part.
    pub fn part_degree(&self, i: usize) -> usize {
        self.vertex_count() - self.parts[i]
    }
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Path on `n >= 1` vertices: edges `i - (i+1)`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Star on `n >= 2` vertices: center 0, leaves `1..n`.
    Star(usize),
    /// Complete multipartite graph in the normative block id layout.
    CompleteMultipartite(MultipartiteSpec),
    /// Erdős–Rényi graph, reproducible from the seed. Each unordered pair
    /// `(u, v)` with `u < v`, taken in ascending `(u, v)` order, receives
    /// an edge with probability `p_num / p_den`, drawing one decision per
    /// pair from a ChaCha8 stream seeded with `seed`.
    Gnp { n: usize, p_num: u32, p_den: u32, seed: u64 },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidFamily { family, reason: reason.into() }
}

/// Builds the named graph with canonical vertex ids.
pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::Path(n) => {
            if n < 1 {
                return Err(invalid("path", "need n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle", format!("need n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(invalid("complete", "need n >= 1"));
            }
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Star(n) => {
            if n < 2 {
                return Err(invalid("star", format!("need n >= 2, got {n}")));
            }
            let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::CompleteMultipartite(ref spec) => {
            let n = spec.vertex_count();
            let mut edges = Vec::new();
            for i in 0..spec.part_count() {
                for j in i + 1..spec.part_count() {
                    for u in spec.block_range(i) {
                        for v in spec.block_range(j) {
                            edges.push((u, v));
                        }
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Gnp { n, p_num, p_den, seed } => {
            if p_den == 0 {
                return Err(invalid("gnp", "probability denominator must be positive"));
            }
            if p_num > p_den {
                return Err(invalid("gnp", format!("probability {p_num}/{p_den} exceeds 1")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_ratio(p_num, p_den) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
    }
}

/// Uniform random labelled tree on `n >= 1` vertices, decoded from a
/// seeded random Prüfer sequence. Deterministic in `seed`.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 1 {
        return Graph::edgeless(n);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();

    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Standard Prüfer decoding with a pointer/leaf scan.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in &seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, &edges).unwrap()
}
