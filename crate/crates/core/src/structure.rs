//! Structural analysis: degrees, components, bipartiteness certificates.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Result of the bipartiteness check, always carrying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A valid 2-coloring, one side flag per vertex.
    Bipartite { coloring: Vec<bool> },
    /// An odd cycle: consecutive vertices (cyclically) are adjacent and
    /// the length is odd.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// Structural facts about a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub degrees: Vec<usize>,
    pub isolated: VertexSet,
    /// Connected components, each sorted ascending, ordered by least id.
    pub components: Vec<Vec<usize>>,
    pub bipartiteness: Bipartiteness,
}

/// Computes degrees, isolated vertices, connected components, and a
/// bipartiteness certificate in one pass of BFS traversals.
pub fn analyze(g: &Graph) -> StructureReport {
    let n = g.vertex_count();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let isolated = g.isolated_vertices();

    let mut components = Vec::new();
    let mut coloring = vec![false; n];
    let mut visited = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut odd_cycle = None;

    for root in 0..n {
        if visited[root] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::new();
        visited[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    coloring[w] = !coloring[u];
                    queue.push_back(w);
                } else if coloring[w] == coloring[u] && odd_cycle.is_none() {
                    odd_cycle = Some(extract_odd_cycle(u, w, &parent, &depth));
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }

    let bipartiteness = match odd_cycle {
        Some(cycle) => Bipartiteness::OddCycle { cycle },
        None => Bipartiteness::Bipartite { coloring },
    };
    StructureReport { degrees, isolated, components, bipartiteness }
}

/// Joins the BFS-tree paths from the endpoints of a monochromatic edge
/// `(u, w)` at their lowest common ancestor. Both endpoints sit at equal
/// color, hence equal depth parity, so the resulting cycle is odd.
fn extract_odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut from_u = vec![a];
    let mut from_w = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_w.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_u.push(a);
        from_w.push(b);
    }
    // from_u ends at the LCA; append the w-side path back down, excluding
    // the LCA itself.
    from_u.extend(from_w.into_iter().rev().skip(1));
    from_u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, Family};

    fn check_odd_cycle(g: &Graph, cycle: &[usize]) {
        assert!(cycle.len() >= 3, "cycle too short: {cycle:?}");
        assert_eq!(cycle.len() % 2, 1, "cycle not odd: {cycle:?}");
        for i in 0..cycle.len() {
            let j = (i + 1) % cycle.len();
            assert!(g.has_edge(cycle[i], cycle[j]), "non-edge in cycle {cycle:?}");
        }
        let mut sorted = cycle.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), cycle.len(), "repeated vertex in {cycle:?}");
    }

    #[test]
    fn c4_is_connected_bipartite() {
        let g = generate(&Family::Cycle(4)).unwrap();
        let rep = analyze(&g);
        assert_eq!(rep.components.len(), 1);
        assert!(rep.isolated.is_empty());
        match rep.bipartiteness {
            Bipartiteness::Bipartite { ref coloring } => {
                for (u, v) in g.edges() {
                    assert_ne!(coloring[u], coloring[v]);
                }
            }
            _ => panic!("C4 should be bipartite"),
        }
    }

    #[test]
    fn c3_yields_length_3_certificate() {
        let g = generate(&Family::Cycle(3)).unwrap();
        let rep = analyze(&g);
        match rep.bipartiteness {
            Bipartiteness::OddCycle { ref cycle } => {
                assert_eq!(cycle.len(), 3);
                check_odd_cycle(&g, cycle);
            }
            _ => panic!("C3 is not bipartite"),
        }
    }

    #[test]
    fn odd_cycles_certified_across_sizes() {
        for n in [5, 7, 9, 11] {
            let g = generate(&Family::Cycle(n)).unwrap();
            match analyze(&g).bipartiteness {
                Bipartiteness::OddCycle { ref cycle } => check_odd_cycle(&g, cycle),
                _ => panic!("C{n} is not bipartite"),
            }
        }
    }

    #[test]
    fn isolated_vertices_form_components() {
        let g = Graph::edgeless(3);
        let rep = analyze(&g);
        assert_eq!(rep.components, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(rep.isolated.len(), 3);
        assert!(rep.bipartiteness.is_bipartite());
    }

    #[test]
    fn empty_graph() {
        let rep = analyze(&Graph::edgeless(0));
        assert!(rep.components.is_empty());
        assert!(rep.bipartiteness.is_bipartite());
    }

    #[test]
    fn two_component_mixed() {
        // Triangle 0-1-2 plus path 3-4.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let rep = analyze(&g);
        assert_eq!(rep.components, vec![vec![0, 1, 2], vec![3, 4]]);
        match rep.bipartiteness {
            Bipartiteness::OddCycle { ref cycle } => check_odd_cycle(&g, cycle),
            _ => panic!("triangle component makes it non-bipartite"),
        }
    }
}
