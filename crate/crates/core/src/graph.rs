//! Simple undirected graphs and the two product constructions.

use thiserror::Error;

use crate::vset::VertexSet;

/// Errors raised while building graphs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("invalid {family} parameters: {reason}")]
    InvalidFamily { family: &'static str, reason: String },
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// No self-loops, no parallel edges; adjacency lists are sorted and
/// symmetric (`v ∈ adj(u)` iff `u ∈ adj(v)`).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected with the index of the offending pair.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices of degree zero.
    pub fn isolated_vertices(&self) -> VertexSet {
        let mut s = VertexSet::new(self.vertex_count());
        for v in 0..self.vertex_count() {
            if self.adj[v].is_empty() {
                s.insert(v);
            }
        }
        s
    }

    /// The subgraph induced by `keep`, with vertices renumbered to
    /// `0..keep.len()` in ascending id order. The second component maps
    /// each new id back to its original id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(keep.universe(), self.vertex_count());
        let old_ids = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in old_ids.iter().enumerate() {
            new_id[old] = new;
        }
        let adj = old_ids
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter(|&&w| keep.contains(w))
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        (Graph { adj }, old_ids)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges()
        )
    }
}

/// Flattened id of the product vertex `(g, h)`: `g * |V(H)| + h`.
///
/// This layout is normative for every product witness this crate emits.
pub fn product_id(g: usize, h_count: usize, h: usize) -> usize {
    g * h_count + h
}

/// Inverse of [`product_id`].
pub fn product_coords(id: usize, h_count: usize) -> (usize, usize) {
    (id / h_count, id % h_count)
}

/// Cartesian product `G □ H`: `(u,u') ~ (v,v')` iff `u = v` and `u' ~ v'`
/// in `H`, or `u' = v'` and `u ~ v` in `G`.
///
/// `deg(u,v) = deg_G(u) + deg_H(v)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut adj = vec![Vec::new(); ng * nh];
    for u in 0..ng {
        for v in 0..nh {
            let id = product_id(u, nh, v);
            let list = &mut adj[id];
            list.reserve(g.degree(u) + h.degree(v));
            for &w in g.neighbors(u) {
                list.push(product_id(w, nh, v));
            }
            for &w in h.neighbors(v) {
                list.push(product_id(u, nh, w));
            }
            list.sort_unstable();
        }
    }
    Graph { adj }
}

/// Tensor product `G × H`: `(u,u') ~ (v,v')` iff `u ~ v` in `G` and
/// `u' ~ v'` in `H`.
///
/// `deg(u,v) = deg_G(u) * deg_H(v)`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut adj = vec![Vec::new(); ng * nh];
    for u in 0..ng {
        for v in 0..nh {
            let id = product_id(u, nh, v);
            let list = &mut adj[id];
            list.reserve(g.degree(u) * h.degree(v));
            for &w in g.neighbors(u) {
                for &x in h.neighbors(v) {
                    list.push(product_id(w, nh, x));
                }
            }
            list.sort_unstable();
        }
    }
    Graph { adj }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_k2() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!((g.degree(0), g.degree(1)), (1, 1));
    }

    #[test]
    fn from_edges_allows_empty() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.isolated_vertices().len(), 3);
    }

    #[test]
    fn from_edges_builds_c4() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn from_edges_rejects_self_loop_with_index() {
        let err = Graph::from_edges(3, &[(0, 1), (2, 2)]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { index: 1, vertex: 2 });
    }

    #[test]
    fn from_edges_rejects_out_of_range_with_index() {
        let err = Graph::from_edges(2, &[(0, 5)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { index: 0, vertex: 5, n: 2 });
    }

    #[test]
    fn from_edges_merges_duplicates_and_reversals() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn cartesian_k2_k2_is_c4() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = cartesian_product(&k2, &k2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 4);
        assert!((0..4).all(|v| p.degree(v) == 2));
    }

    #[test]
    fn cartesian_p3_k2_counts_and_degrees() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = cartesian_product(&p3, &k2);
        assert_eq!(p.vertex_count(), 6);
        // |E_G||V_H| + |E_H||V_G| = 2*2 + 1*3
        assert_eq!(p.edge_count(), 7);
        // Hand enumeration under the g*|V(H)|+h layout: ids 0..6 are
        // (0,0),(0,1),(1,0),(1,1),(2,0),(2,1).
        let degs: Vec<usize> = (0..6).map(|v| p.degree(v)).collect();
        assert_eq!(degs, vec![2, 2, 3, 3, 2, 2]);
        for v in 0..6 {
            let (gc, hc) = product_coords(v, 2);
            assert_eq!(p.degree(v), p3.degree(gc) + k2.degree(hc));
        }
    }

    #[test]
    fn tensor_k2_k2_is_two_disjoint_k2() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = tensor_product(&k2, &k2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 2);
        assert!(p.has_edge(0, 3)); // (0,0)-(1,1)
        assert!(p.has_edge(1, 2)); // (0,1)-(1,0)
    }

    #[test]
    fn tensor_c3_k2_is_c6() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = tensor_product(&c3, &k2);
        assert_eq!(p.vertex_count(), 6);
        assert_eq!(p.edge_count(), 6);
        assert!((0..6).all(|v| p.degree(v) == 2));
        // Walk the 6-cycle from (0,0).
        let mut seen = [false; 6];
        let (mut prev, mut cur) = (usize::MAX, 0usize);
        for _ in 0..6 {
            seen[cur] = true;
            let next = *p.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        assert_eq!(cur, 0, "walk closes after six steps");
        assert!(seen.iter().all(|&s| s), "walk visits every vertex: connected C6");
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = Graph::from_edges(5, &[(0, 2), (2, 4), (1, 3)]).unwrap();
        let keep = VertexSet::from_ids(5, &[0, 2, 4]);
        let (sub, old) = g.induced_subgraph(&keep);
        assert_eq!(old, vec![0, 2, 4]);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
    }
}
