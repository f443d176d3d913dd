//! Cross-validation of the engine and solver against a deliberately
//! naive reference implementation, plus frozen hand-checked values.

use std::collections::HashSet;

use spreadlab::engine::{self, Rule};
use spreadlab::family::{generate, Family, MultipartiteSpec};
use spreadlab::graph::Graph;
use spreadlab::multipartite;
use spreadlab::solver::{self, SolverOptions};
use spreadlab::vset::VertexSet;

/// Reference simulator: hash sets and edge scans, no bit tricks, no
/// shared code with the engine.
fn reference_run(n: usize, edges: &[(usize, usize)], rule: Rule, seed: &[usize]) -> Vec<Vec<usize>> {
    let degree = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    let threshold = |v: usize| -> Option<usize> {
        match rule.fixed_threshold() {
            Some(k) => Some(k),
            None => {
                let d = degree(v);
                (d > 0).then_some(d / 2 + d % 2)
            }
        }
    };
    let mut black: HashSet<usize> = seed.iter().copied().collect();
    let mut waves = Vec::new();
    loop {
        let mut wave: Vec<usize> = (0..n)
            .filter(|&v| !black.contains(&v))
            .filter(|&v| {
                let black_nbrs = edges
                    .iter()
                    .filter(|&&(a, b)| {
                        (a == v && black.contains(&b)) || (b == v && black.contains(&a))
                    })
                    .count();
                threshold(v).is_some_and(|t| black_nbrs >= t)
            })
            .collect();
        if wave.is_empty() {
            return waves;
        }
        wave.sort_unstable();
        black.extend(wave.iter().copied());
        waves.push(wave);
    }
}

fn reference_converts(n: usize, edges: &[(usize, usize)], rule: Rule, seed: &[usize]) -> bool {
    let waves = reference_run(n, edges, rule, seed);
    let total: usize = seed.len() + waves.iter().map(Vec::len).sum::<usize>();
    total == n
}

/// Reference minimum: enumerate all subsets in increasing popcount and,
/// within a popcount, increasing numeric mask order. Numeric mask order
/// within one cardinality equals colexicographic order, which has the
/// same least element as lexicographic order only sometimes — so this
/// checks the SIZE, not the witness identity.
fn reference_min_size(n: usize, edges: &[(usize, usize)], rule: Rule) -> usize {
    assert!(n <= 16, "reference oracle is for small graphs");
    for size in 0..=n {
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != size {
                continue;
            }
            let seed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if reference_converts(n, edges, rule, &seed) {
                return size;
            }
        }
    }
    unreachable!("the full vertex set always converts");
}

fn cases() -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut graphs: Vec<(usize, Vec<(usize, usize)>)> = vec![
        (0, vec![]),
        (1, vec![]),
        (3, vec![]),
        (2, vec![(0, 1)]),
        (4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
        (4, vec![(0, 1), (1, 2), (2, 3)]),
        (5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]),
        (6, vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
        // K4 minus an edge, and a triangle with a pendant.
        (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        (4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]),
    ];
    for seed in 0..6 {
        let g = generate(&Family::Gnp { n: 7, p_num: 1, p_den: 2, seed }).unwrap();
        graphs.push((7, g.edges()));
    }
    graphs
}

fn rules() -> Vec<Rule> {
    vec![
        Rule::majority(),
        Rule::k_threshold(1).unwrap(),
        Rule::k_threshold(2).unwrap(),
        Rule::k_threshold(3).unwrap(),
    ]
}

#[test]
fn engine_matches_reference_on_catalog() {
    for (n, edges) in cases() {
        let g = Graph::from_edges(n, &edges).unwrap();
        for rule in rules() {
            // A few deterministic seed patterns per graph.
            let seeds: Vec<Vec<usize>> = vec![
                vec![],
                (0..n).collect(),
                (0..n).step_by(2).collect(),
                (0..n.min(2)).collect(),
            ];
            for seed in seeds {
                let vs = VertexSet::from_ids(n, &seed);
                let trace = engine::run(&g, rule, &vs);
                let expected = reference_run(n, &edges, rule, &seed);
                let got: Vec<Vec<usize>> = trace.waves.iter().map(|w| w.to_vec()).collect();
                assert_eq!(got, expected, "waves differ on n={n} rule={rule} seed={seed:?}");
                assert_eq!(
                    trace.converted,
                    reference_converts(n, &edges, rule, &seed),
                    "conversion flag differs on n={n} rule={rule} seed={seed:?}"
                );
            }
        }
    }
}

#[test]
fn solver_matches_reference_minimum() {
    for (n, edges) in cases() {
        let g = Graph::from_edges(n, &edges).unwrap();
        for rule in rules() {
            let res = solver::min_conversion(&g, rule, None, &SolverOptions::default())
                .unwrap()
                .found()
                .unwrap();
            assert_eq!(
                res.size,
                reference_min_size(n, &edges, rule),
                "minimum differs on n={n} rule={rule} edges={edges:?}"
            );
            assert!(engine::is_conversion_set(&g, rule, &res.witness).is_some());
        }
    }
}

/// All converting sets of the minimum size, by full enumeration; the
/// solver's witness must be the least under sorted-tuple order.
#[test]
fn solver_witness_is_lexicographically_least() {
    for (n, edges) in cases() {
        if n > 8 {
            continue;
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        for rule in rules() {
            let res = solver::min_conversion(&g, rule, None, &SolverOptions::default())
                .unwrap()
                .found()
                .unwrap();
            let mut best: Option<Vec<usize>> = None;
            for mask in 0u32..1 << n {
                if mask.count_ones() as usize != res.size {
                    continue;
                }
                let seed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if reference_converts(n, &edges, rule, &seed) && best.as_ref().is_none_or(|b| seed < *b)
                {
                    best = Some(seed);
                }
            }
            assert_eq!(
                res.witness.to_vec(),
                best.expect("some set of the minimum size converts"),
                "witness not lexicographically least on n={n} rule={rule}"
            );
        }
    }
}

#[test]
fn solver_size_invariant_under_relabeling() {
    // Deterministic permutations: rotate and reverse, plus a seeded shuffle.
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for (n, edges) in cases() {
        if n == 0 {
            continue;
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let mut perms: Vec<Vec<usize>> = vec![
            (0..n).map(|v| (v + 1) % n).collect(),
            (0..n).rev().collect(),
        ];
        let mut shuffled: Vec<usize> = (0..n).collect();
        shuffled.shuffle(&mut rng);
        perms.push(shuffled);
        for rule in rules() {
            let base = solver::min_conversion(&g, rule, None, &SolverOptions::default())
                .unwrap()
                .found()
                .unwrap()
                .size;
            for perm in &perms {
                let relabeled: Vec<(usize, usize)> =
                    edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
                let rg = Graph::from_edges(n, &relabeled).unwrap();
                let rsize = solver::min_conversion(&rg, rule, None, &SolverOptions::default())
                    .unwrap()
                    .found()
                    .unwrap()
                    .size;
                assert_eq!(base, rsize, "relabeling changed the minimum on n={n} rule={rule}");
            }
        }
    }
}

#[test]
fn forced_vertices_lie_in_every_witness() {
    for (n, edges) in cases() {
        let g = Graph::from_edges(n, &edges).unwrap();
        for rule in rules() {
            let forced = solver::forced_vertices(&g, rule);
            let res = solver::min_conversion(&g, rule, None, &SolverOptions::default())
                .unwrap()
                .found()
                .unwrap();
            assert!(forced.is_subset_of(&res.witness));
            // Dropping any forced vertex from any witness breaks conversion.
            for v in forced.iter() {
                let mut broken = res.witness.clone();
                broken.remove(v);
                assert!(
                    engine::is_conversion_set(&g, rule, &broken).is_none(),
                    "witness survived losing forced vertex {v}"
                );
            }
        }
    }
}

#[test]
fn closed_forms_match_solver_on_small_specs() {
    // Small spot sweep; the full acceptance sweep covers n <= 8 / 9.
    let specs = [vec![2, 1], vec![2, 2], vec![3, 2, 1], vec![3, 3], vec![2, 2, 2], vec![4, 1]];
    for parts in specs {
        let spec = MultipartiteSpec::new(parts.clone()).unwrap();
        let g = generate(&Family::CompleteMultipartite(spec.clone())).unwrap();
        let n = spec.vertex_count();
        for k in 1..=n + 2 {
            let rule = Rule::k_threshold(k).unwrap();
            let solved = solver::min_conversion(&g, rule, None, &SolverOptions::default())
                .unwrap()
                .found()
                .unwrap();
            assert_eq!(
                multipartite::multipartite_min_k(&spec, k).unwrap(),
                solved.size,
                "min_k mismatch on {parts:?} k={k}"
            );
            let ans = multipartite::multipartite_min_k_witness(&spec, k).unwrap();
            let steps = engine::is_conversion_set(&g, rule, &ans.witness).unwrap();
            assert!(steps <= ans.predicted_steps);
        }
        let solved = solver::min_conversion(&g, Rule::majority(), None, &SolverOptions::default())
            .unwrap()
            .found()
            .unwrap();
        let ans = multipartite::multipartite_dynamo(&spec);
        assert_eq!(ans.value, solved.size, "min_D mismatch on {parts:?}");
        let steps = engine::is_conversion_set(&g, Rule::majority(), &ans.witness).unwrap();
        assert!(steps <= ans.predicted_steps);
    }
}
