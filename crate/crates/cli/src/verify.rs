//! Verification sweeps: every closed form and bound construction is
//! checked against the exact solver and the simulation engine over
//! enumerated families, catalog product pairs, and seeded random graphs.
//!
//! Each sweep builds its case list deterministically up front, then fans
//! the checks out over a fixed-stride worker pool; results are reported
//! in case order, so the output is byte-identical for any worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use spreadlab::bounds::{
    cartesian_dynamo_witness, cartesian_dynamo_witness_reduced, cartesian_k_witness,
    tensor_dynamo_witness, tensor_general, tensor_k_witness,
};
use spreadlab::engine::{self, Rule};
use spreadlab::family::{generate, random_tree, Family, MultipartiteSpec};
use spreadlab::graph::{cartesian_product, tensor_product, Graph};
use spreadlab::multipartite::{multipartite_dynamo, multipartite_min_k, multipartite_min_k_witness};
use spreadlab::solver::{self, SolveResult, SolverOptions};
use spreadlab::structure::{analyze, Bipartiteness};
use spreadlab::vset::VertexSet;

use crate::parse::family_label;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

/// Outcome of one sweep: counts plus the first counterexample, in
/// canonical case order.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub scope: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

type Check = Box<dyn Fn() -> Result<(), String> + Send + Sync>;

struct Case {
    key: String,
    check: Check,
}

impl Case {
    fn new(key: impl Into<String>, check: impl Fn() -> Result<(), String> + Send + Sync + 'static) -> Case {
        Case { key: key.into(), check: Box::new(check) }
    }
}

fn run_cases(scope: &str, cases: Vec<Case>, workers: usize) -> Summary {
    let workers = workers.max(1).min(cases.len().max(1));
    let mut results: Vec<(usize, Option<Failure>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let cases = &cases;
                s.spawn(move || {
                    let mut out = Vec::new();
                    let mut i = w;
                    while i < cases.len() {
                        let failure = (cases[i].check)().err().map(|detail| Failure {
                            case: cases[i].key.clone(),
                            detail,
                        });
                        out.push((i, failure));
                        i += workers;
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verify worker panicked"))
            .collect()
    });
    results.sort_by_key(|&(i, _)| i);
    let failed = results.iter().filter(|(_, f)| f.is_some()).count();
    Summary {
        scope: scope.to_string(),
        total: cases.len(),
        passed: cases.len() - failed,
        failed,
        first_failure: results.into_iter().find_map(|(_, f)| f),
    }
}

fn solve_min(g: &Graph, rule: Rule, limit: usize) -> Result<SolveResult, String> {
    solver::min_conversion(g, rule, None, &SolverOptions { max_vertices: limit })
        .map_err(|e| e.to_string())?
        .found()
        .ok_or_else(|| "unbudgeted search returned no set".to_string())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

/// Non-increasing partitions of `n` into at least two positive parts,
/// in descending lexicographic order.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn parts_key(parts: &[usize]) -> String {
    let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("multipartite:{}", parts.join(","))
}

/// Closed-form minimum k-conversion values and witnesses versus the
/// exact solver, over every multipartite spec with `n <= max_n` and
/// every `k` in `[1, n+2]`.
pub fn sweep_multipartite_threshold(max_n: usize, limit: usize, workers: usize) -> Summary {
    let mut cases = Vec::new();
    for n in 2..=max_n {
        for parts in partitions(n) {
            for k in 1..=n + 2 {
                let key = format!("min_k {} k={k}", parts_key(&parts));
                let parts = parts.clone();
                cases.push(Case::new(key, move || {
                    let spec = MultipartiteSpec::new(parts.clone()).expect("valid partition");
                    let g = generate(&Family::CompleteMultipartite(spec.clone()))
                        .map_err(|e| e.to_string())?;
                    let rule = Rule::k_threshold(k).map_err(|e| e.to_string())?;
                    let formula = multipartite_min_k(&spec, k).map_err(|e| e.to_string())?;
                    let solved = solve_min(&g, rule, limit)?;
                    expect_eq("closed form vs solver", formula, solved.size)?;
                    let ans = multipartite_min_k_witness(&spec, k).map_err(|e| e.to_string())?;
                    expect_eq("witness size", ans.witness.len(), formula)?;
                    let steps = engine::is_conversion_set(&g, rule, &ans.witness)
                        .ok_or("witness does not convert")?;
                    if steps > ans.predicted_steps || steps > 2 {
                        return Err(format!(
                            "witness took {steps} steps, predicted {}",
                            ans.predicted_steps
                        ));
                    }
                    Ok(())
                }));
            }
        }
    }
    run_cases("multipartite-threshold", cases, workers)
}

/// Closed-form minimum dynamo values and witnesses versus the exact
/// solver, over every multipartite spec with `n <= max_n`.
pub fn sweep_multipartite_dynamo(max_n: usize, limit: usize, workers: usize) -> Summary {
    let mut cases = Vec::new();
    for n in 2..=max_n {
        for parts in partitions(n) {
            let key = format!("min_D {}", parts_key(&parts));
            cases.push(Case::new(key, move || {
                let spec = MultipartiteSpec::new(parts.clone()).expect("valid partition");
                let g = generate(&Family::CompleteMultipartite(spec.clone()))
                    .map_err(|e| e.to_string())?;
                let ans = multipartite_dynamo(&spec);
                let solved = solve_min(&g, Rule::majority(), limit)?;
                expect_eq("closed form vs solver", ans.value, solved.size)?;
                expect_eq("witness size", ans.witness.len(), ans.value)?;
                let steps = engine::is_conversion_set(&g, Rule::majority(), &ans.witness)
                    .ok_or("witness does not convert")?;
                if steps > 2 {
                    return Err(format!("witness took {steps} steps, predicted at most 2"));
                }
                Ok(())
            }));
        }
    }
    run_cases("multipartite-dynamo", cases, workers)
}

/// The product catalog: small paths, cycles, completes, K_{2,2}, and a star.
fn catalog() -> Vec<(String, Graph)> {
    let mut fams: Vec<Family> = Vec::new();
    fams.extend((2..=5).map(Family::Path));
    fams.extend((3..=6).map(Family::Cycle));
    fams.push(Family::Complete(3));
    fams.push(Family::Complete(4));
    fams.push(Family::CompleteMultipartite(MultipartiteSpec::new(vec![2, 2]).unwrap()));
    fams.push(Family::Star(4));
    fams.into_iter()
        .map(|f| (family_label(&f), generate(&f).expect("catalog families are valid")))
        .collect()
}

struct ProductCase {
    left_label: String,
    left: Graph,
    right_label: String,
    right: Graph,
    oracle_cap: usize,
    limit: usize,
}

impl ProductCase {
    fn oracle_check(&self, product: &Graph, rule: Rule, bound: usize) -> Result<(), String> {
        if product.vertex_count() > self.oracle_cap {
            return Ok(());
        }
        let exact = solve_min(product, rule, self.limit.max(self.oracle_cap))?;
        if exact.size > bound {
            return Err(format!(
                "exact minimum {} exceeds claimed bound {bound}",
                exact.size
            ));
        }
        Ok(())
    }
}

/// Catalog sweep of the product bound constructions, by construction id
/// (3, 4, 5 Cartesian; 6, 7 tensor). Factor witnesses are exact minima.
/// Wherever the product fits under `oracle_cap`, the exact solver
/// confirms `minimum <= bound`.
pub fn sweep_products(
    theorems: &[u8],
    max_product: usize,
    oracle_cap: usize,
    limit: usize,
    workers: usize,
) -> Summary {
    let catalog = catalog();
    let mut cases = Vec::new();
    for i in 0..catalog.len() {
        for j in i..catalog.len() {
            let (gl, g) = &catalog[i];
            let (hl, h) = &catalog[j];
            if g.vertex_count() * h.vertex_count() > max_product {
                continue;
            }
            for &theorem in theorems {
                let ks: &[usize] = match theorem {
                    3 | 6 => &[1, 2, 3],
                    _ => &[0],
                };
                for &k in ks {
                    let pc = ProductCase {
                        left_label: gl.clone(),
                        left: g.clone(),
                        right_label: hl.clone(),
                        right: h.clone(),
                        oracle_cap,
                        limit,
                    };
                    let key = match theorem {
                        3 | 6 => format!("thm{theorem} {gl} * {hl} k={k}"),
                        _ => format!("thm{theorem} {gl} * {hl}"),
                    };
                    cases.push(Case::new(key, move || check_product_case(&pc, theorem, k)));
                }
            }
        }
    }
    let scope = if theorems.iter().all(|t| *t <= 5) {
        "products-cartesian"
    } else if theorems.iter().all(|t| *t >= 6) {
        "products-tensor"
    } else {
        "products"
    };
    run_cases(scope, cases, workers)
}

fn check_product_case(pc: &ProductCase, theorem: u8, k: usize) -> Result<(), String> {
    let (g, h) = (&pc.left, &pc.right);
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    match theorem {
        3 => {
            let rule = Rule::k_threshold(k).map_err(|e| e.to_string())?;
            let sg = solve_min(g, rule, pc.limit)?;
            let sh = solve_min(h, rule, pc.limit)?;
            let rep = cartesian_k_witness(g, &sg.witness, h, &sh.witness, k)
                .map_err(|e| e.to_string())?;
            expect_eq("thm3 formula", rep.bound, sg.size * sh.size)?;
            pc.oracle_check(&cartesian_product(g, h), rule, rep.bound)
        }
        4 => {
            let rule = Rule::majority();
            let dg = solve_min(g, rule, pc.limit)?;
            let dh = solve_min(h, rule, pc.limit)?;
            let rep = cartesian_dynamo_witness(g, &dg.witness, h, &dh.witness)
                .map_err(|e| e.to_string())?;
            expect_eq(
                "thm4 formula",
                rep.bound,
                dg.size * nh + dh.size * ng - dg.size * dh.size,
            )?;
            pc.oracle_check(&cartesian_product(g, h), rule, rep.bound)
        }
        5 => {
            let rule = Rule::majority();
            let dg = solve_min(g, rule, pc.limit)?;
            let dh = solve_min(h, rule, pc.limit)?;
            let rep = cartesian_dynamo_witness_reduced(g, &dg.witness, h, &dh.witness)
                .map_err(|e| e.to_string())?;
            let thm4 = dg.size * nh + dh.size * ng - dg.size * dh.size;
            expect_eq("thm5 formula", rep.bound, thm4 - dg.size * dh.size)?;
            if rep.bound == 0 {
                return Err("reduced witness is empty".into());
            }
            pc.oracle_check(&cartesian_product(g, h), rule, rep.bound)
        }
        6 => {
            let rule = Rule::k_threshold(k).map_err(|e| e.to_string())?;
            let sg = solve_min(g, rule, pc.limit)?;
            let sh = solve_min(h, rule, pc.limit)?;
            let rep =
                tensor_k_witness(g, &sg.witness, h, &sh.witness, k).map_err(|e| e.to_string())?;
            expect_eq("thm6 formula", rep.bound, (sg.size * nh).min(sh.size * ng))?;
            pc.oracle_check(&tensor_product(g, h), rule, rep.bound)
        }
        7 => {
            let rule = Rule::majority();
            let dg = solve_min(g, rule, pc.limit)?;
            let dh = solve_min(h, rule, pc.limit)?;
            let rep =
                tensor_dynamo_witness(g, &dg.witness, h, &dh.witness).map_err(|e| e.to_string())?;
            expect_eq("thm7 formula", rep.bound, (dg.size * nh).min(dh.size * ng))?;
            pc.oracle_check(&tensor_product(g, h), rule, rep.bound)
        }
        other => Err(format!(
            "unknown construction {other} for {} * {}",
            pc.left_label, pc.right_label
        )),
    }
}

/// Tensor bounds for factors with isolated vertices: the general
/// construction must seed every isolated product vertex and add
/// `i_G|V(H)| + i_H|V(G)| - i_G i_H` to the isolated-free core bound.
pub fn sweep_tensor_isolated(limit: usize, workers: usize) -> Summary {
    // (label, graph) pairs with deliberate isolated vertices.
    let k2_iso = ("complete:2+iso1", Graph::from_edges(3, &[(0, 1)]).unwrap());
    let p3_iso2 = ("path:3+iso2", Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap());
    let k2 = ("complete:2", generate(&Family::Complete(2)).unwrap());
    let p3 = ("path:3", generate(&Family::Path(3)).unwrap());
    let edgeless2 = ("edgeless:2", Graph::edgeless(2));
    let edgeless3 = ("edgeless:3", Graph::edgeless(3));

    let rules = [("majority", Rule::majority()), ("k:1", Rule::k_threshold(1).unwrap())];
    let pairs = [
        (k2_iso.clone(), k2.clone()),
        (p3_iso2.clone(), p3.clone()),
        (k2.clone(), p3_iso2.clone()),
        (edgeless2.clone(), edgeless3.clone()),
        (p3.clone(), k2.clone()), // no isolated: must equal the core op
    ];
    let mut cases = Vec::new();
    for ((gl, g), (hl, h)) in pairs {
        for (rl, rule) in rules {
            let key = format!("tensor-general {gl} * {hl} rule={rl}");
            let (g, h) = (g.clone(), h.clone());
            cases.push(Case::new(key, move || {
                let mut provider = |core: &Graph, rule: Rule| {
                    Ok(solve_min(core, rule, limit)
                        .map_err(|_| spreadlab::solver::SolveError::SizeLimitExceeded {
                            n: core.vertex_count(),
                            limit,
                        })?
                        .witness)
                };
                let rep =
                    tensor_general(&g, &h, rule, &mut provider).map_err(|e| e.to_string())?;
                let (ig, ih) = (g.isolated_vertices().len(), h.isolated_vertices().len());
                let (ng, nh) = (g.vertex_count(), h.vertex_count());
                let adjustment = ig * nh + ih * ng - ig * ih;

                // Recompute the core bound independently.
                let (core_g, _) = g.induced_subgraph(&g.isolated_vertices().complement());
                let (core_h, _) = h.induced_subgraph(&h.isolated_vertices().complement());
                let sg = solve_min(&core_g, rule, limit)?;
                let sh = solve_min(&core_h, rule, limit)?;
                let core_bound =
                    (sg.size * core_h.vertex_count()).min(sh.size * core_g.vertex_count());
                expect_eq("general bound", rep.bound, core_bound + adjustment)?;

                // Every isolated product vertex must be in the witness.
                let product = tensor_product(&g, &h);
                if !product.isolated_vertices().is_subset_of(&rep.witness) {
                    return Err("isolated product vertices missing from witness".into());
                }
                if ig == 0 && ih == 0 {
                    let core_rep = match rule.fixed_threshold() {
                        Some(k) => tensor_k_witness(&g, &sg.witness, &h, &sh.witness, k),
                        None => tensor_dynamo_witness(&g, &sg.witness, &h, &sh.witness),
                    }
                    .map_err(|e| e.to_string())?;
                    expect_eq("reduces to core op", rep, core_rep)?;
                }
                Ok(())
            }));
        }
    }
    run_cases("tensor-isolated", cases, workers)
}

/// Double-cover tightness: for connected bipartite `G` and `H = K2`,
/// the exact values double (`min_k(G x K2) = 2 min_k(G)` and likewise
/// for dynamos) and both equal the tensor bounds computed from minimum
/// factor witnesses. Structural copy checks ride along.
pub fn sweep_double_cover(
    trees: usize,
    tree_max_n: usize,
    rng_seed: u64,
    limit: usize,
    workers: usize,
) -> Summary {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 2..=6 {
        graphs.push((format!("path:{n}"), generate(&Family::Path(n)).unwrap()));
    }
    for n in [4, 6] {
        graphs.push((format!("cycle:{n}"), generate(&Family::Cycle(n)).unwrap()));
    }
    for n in 3..=5 {
        graphs.push((format!("star:{n}"), generate(&Family::Star(n)).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for t in 0..trees {
        let n = rng.random_range(2..=tree_max_n.max(2));
        let seed = rng.random::<u64>();
        graphs.push((format!("tree[{t}]:n={n},seed={seed}"), random_tree(n, seed)));
    }

    let k2 = generate(&Family::Complete(2)).unwrap();
    let mut cases = Vec::new();
    for (label, g) in graphs {
        let key = format!("double-cover {label}");
        let k2 = k2.clone();
        cases.push(Case::new(key, move || {
            let rep = analyze(&g);
            if rep.components.len() != 1 {
                return Err("test graph is not connected".into());
            }
            if !matches!(rep.bipartiteness, Bipartiteness::Bipartite { .. }) {
                return Err("test graph is not bipartite".into());
            }
            let cover = tensor_product(&g, &k2);
            let cover_rep = analyze(&cover);
            expect_eq("cover component count", cover_rep.components.len(), 2)?;
            let mut gdeg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
            gdeg.sort_unstable();
            for comp in &cover_rep.components {
                expect_eq("copy vertex count", comp.len(), g.vertex_count())?;
                let mut cdeg: Vec<usize> = comp.iter().map(|&v| cover.degree(v)).collect();
                cdeg.sort_unstable();
                expect_eq("copy degree multiset", cdeg, gdeg.clone())?;
                let degree_sum: usize = comp.iter().map(|&v| cover.degree(v)).sum();
                expect_eq("copy edge count", degree_sum, 2 * g.edge_count())?;
            }

            for k in 1..=3usize {
                let rule = Rule::k_threshold(k).map_err(|e| e.to_string())?;
                let factor = solve_min(&g, rule, limit)?;
                let doubled = solve_min(&cover, rule, limit)?;
                expect_eq(&format!("min_{k} doubles"), doubled.size, 2 * factor.size)?;
                let s_h = solve_min(&k2, rule, limit)?;
                let bound = tensor_k_witness(&g, &factor.witness, &k2, &s_h.witness, k)
                    .map_err(|e| e.to_string())?;
                expect_eq(&format!("thm6 tight at k={k}"), bound.bound, doubled.size)?;
            }
            let factor = solve_min(&g, Rule::majority(), limit)?;
            let doubled = solve_min(&cover, Rule::majority(), limit)?;
            expect_eq("min_D doubles", doubled.size, 2 * factor.size)?;
            let d_h = solve_min(&k2, Rule::majority(), limit)?;
            let bound = tensor_dynamo_witness(&g, &factor.witness, &k2, &d_h.witness)
                .map_err(|e| e.to_string())?;
            expect_eq("thm7 tight", bound.bound, doubled.size)?;
            Ok(())
        }));
    }
    run_cases("double-cover", cases, workers)
}

/// Minimal-dynamo complement behavior and the half bound, on seeded
/// isolated-free random graphs: shrinking `V(G)` yields a minimal
/// dynamo whose complement converts by step 1, and the exact minimum
/// dynamo never exceeds `|V|/2`.
pub fn sweep_lemmas(
    trials: usize,
    max_n: usize,
    rng_seed: u64,
    limit: usize,
    workers: usize,
) -> Summary {
    let max_n = max_n.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut cases = Vec::new();
    for t in 0..trials {
        // Rejection-sample an isolated-free G(n, 1/2).
        let (n, seed, g) = loop {
            let n = rng.random_range(2..=max_n);
            let seed = rng.random::<u64>();
            let g = generate(&Family::Gnp { n, p_num: 1, p_den: 2, seed })
                .expect("gnp parameters are valid");
            if g.isolated_vertices().is_empty() {
                break (n, seed, g);
            }
        };
        let key = format!("lemmas trial[{t}] gnp:{n},1/2,{seed}");
        cases.push(Case::new(key, move || {
            let rule = Rule::majority();
            let minimal = solver::shrink_to_minimal(&g, rule, &VertexSet::full(g.vertex_count()))
                .map_err(|e| e.to_string())?;
            if engine::is_minimal(&g, rule, &minimal) != Ok(true) {
                return Err("shrink did not reach a minimal dynamo".into());
            }
            let complement = minimal.complement();
            if complement.is_empty() {
                return Err("minimal dynamo is the whole vertex set".into());
            }
            let steps = engine::is_conversion_set(&g, rule, &complement)
                .ok_or("complement of minimal dynamo does not convert")?;
            if steps > 1 {
                return Err(format!("complement took {steps} steps, expected at most 1"));
            }
            let exact = solve_min(&g, rule, limit)?;
            if 2 * exact.size > g.vertex_count() {
                return Err(format!(
                    "min dynamo {} exceeds half of {}",
                    exact.size,
                    g.vertex_count()
                ));
            }
            Ok(())
        }));
    }
    run_cases("lemmas", cases, workers)
}

/// Randomized engine invariants: monotone accumulation, wave structure,
/// fixpoint within `|V|` steps, stability at the fixpoint, superset
/// closure, and agreement between waves and per-vertex times.
pub fn sweep_engine(trials: usize, rng_seed: u64, workers: usize) -> Summary {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut cases = Vec::new();
    for t in 0..trials {
        let n = rng.random_range(1..=12usize);
        let p_num = rng.random_range(1..=3u32);
        let seed = rng.random::<u64>();
        let g = generate(&Family::Gnp { n, p_num, p_den: 4, seed }).expect("valid gnp");
        let rule = match rng.random_range(0..4u8) {
            0 => Rule::majority(),
            k => Rule::k_threshold(k as usize).unwrap(),
        };
        let mut seed_set = VertexSet::new(n);
        let mut extra = VertexSet::new(n);
        for v in 0..n {
            if rng.random_ratio(1, 3) {
                seed_set.insert(v);
            }
            if rng.random_ratio(1, 3) {
                extra.insert(v);
            }
        }
        let key = format!("engine trial[{t}] gnp:{n},{p_num}/4,{seed} rule={rule}");
        cases.push(Case::new(key, move || {
            let trace = engine::run(&g, rule, &seed_set);
            if trace.steps > n {
                return Err(format!("fixpoint after {} steps on {n} vertices", trace.steps));
            }
            let mut black = seed_set.clone();
            for wave in &trace.waves {
                if wave.is_empty() {
                    return Err("empty wave stored".into());
                }
                if !wave.is_disjoint_from(&black) {
                    return Err("wave recolors an already-black vertex".into());
                }
                let stepped = engine::step(&g, rule, &black);
                if stepped != black.union(wave) {
                    return Err("wave does not match a synchronous step".into());
                }
                black.union_with(wave);
            }
            if engine::step(&g, rule, &black) != black {
                return Err("fixpoint is not stable".into());
            }
            expect_eq("converted flag", trace.converted, black.len() == n)?;

            let times = engine::conversion_times(&g, rule, &seed_set);
            for v in 0..n {
                let expected = if seed_set.contains(v) {
                    Some(0)
                } else {
                    trace.waves.iter().position(|w| w.contains(v)).map(|i| i + 1)
                };
                expect_eq(&format!("time of vertex {v}"), times.time(v), expected)?;
            }

            if let Some(t1) = engine::is_conversion_set(&g, rule, &seed_set) {
                let bigger = seed_set.union(&extra);
                match engine::is_conversion_set(&g, rule, &bigger) {
                    Some(t2) if t2 <= t1 => {}
                    Some(t2) => return Err(format!("superset slower: {t2} > {t1}")),
                    None => return Err("superset of a conversion set stalls".into()),
                }
            }
            Ok(())
        }));
    }
    run_cases("engine", cases, workers)
}

/// Frozen spot values, brute-force confirmed.
pub fn sweep_spot_values(limit: usize, workers: usize) -> Summary {
    struct Spot {
        key: &'static str,
        family: Family,
        rule: Rule,
        expected: usize,
    }
    let k321 = MultipartiteSpec::new(vec![3, 2, 1]).unwrap();
    let spots = vec![
        Spot { key: "min_D(C4)=1", family: Family::Cycle(4), rule: Rule::majority(), expected: 1 },
        Spot {
            key: "min_2(P4)=3",
            family: Family::Path(4),
            rule: Rule::k_threshold(2).unwrap(),
            expected: 3,
        },
        Spot {
            key: "min_D(K5)=2",
            family: Family::Complete(5),
            rule: Rule::majority(),
            expected: 2,
        },
        Spot {
            key: "min_4(K_{3,2,1})=4",
            family: Family::CompleteMultipartite(k321.clone()),
            rule: Rule::k_threshold(4).unwrap(),
            expected: 4,
        },
        Spot {
            key: "min_D(K_{3,2,1})=2",
            family: Family::CompleteMultipartite(k321),
            rule: Rule::majority(),
            expected: 2,
        },
    ];
    let cases = spots
        .into_iter()
        .map(|spot| {
            Case::new(spot.key, move || {
                let g = generate(&spot.family).map_err(|e| e.to_string())?;
                let solved = solve_min(&g, spot.rule, limit)?;
                expect_eq("spot value", solved.size, spot.expected)
            })
        })
        .collect();
    run_cases("spot-values", cases, workers)
}

/// The CLI-facing verify scopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Multipartite,
    Cartesian,
    Tensor,
    Lemmas,
    All,
}

impl Scope {
    pub fn parse(s: &str) -> Option<Scope> {
        match s {
            "multipartite" => Some(Scope::Multipartite),
            "cartesian" => Some(Scope::Cartesian),
            "tensor" => Some(Scope::Tensor),
            "lemmas" => Some(Scope::Lemmas),
            "all" => Some(Scope::All),
            _ => None,
        }
    }
}

/// Knobs of a verify run, with the CLI defaults.
#[derive(Debug, Clone, Copy)]
pub struct VerifyParams {
    pub scope: Scope,
    pub max_n: usize,
    pub max_product: usize,
    pub trials: usize,
    pub rng_seed: u64,
    pub workers: usize,
    pub solver_limit: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            scope: Scope::All,
            max_n: 8,
            max_product: 36,
            trials: 200,
            rng_seed: 1,
            workers: 1,
            solver_limit: solver::DEFAULT_SOLVER_LIMIT,
        }
    }
}

/// Runs every sweep the scope selects, in canonical order.
pub fn run_scope(p: &VerifyParams) -> Vec<Summary> {
    let oracle_cap = p.solver_limit.min(20);
    let mut out = Vec::new();
    if matches!(p.scope, Scope::Multipartite | Scope::All) {
        out.push(sweep_multipartite_threshold(p.max_n, p.solver_limit, p.workers));
        out.push(sweep_multipartite_dynamo(p.max_n, p.solver_limit, p.workers));
    }
    if matches!(p.scope, Scope::Cartesian | Scope::All) {
        out.push(sweep_products(&[3, 4, 5], p.max_product, oracle_cap, p.solver_limit, p.workers));
    }
    if matches!(p.scope, Scope::Tensor | Scope::All) {
        out.push(sweep_products(&[6, 7], p.max_product, oracle_cap, p.solver_limit, p.workers));
        out.push(sweep_tensor_isolated(p.solver_limit, p.workers));
        out.push(sweep_double_cover(20, 8, p.rng_seed, p.solver_limit, p.workers));
    }
    if matches!(p.scope, Scope::Lemmas | Scope::All) {
        out.push(sweep_lemmas(p.trials, p.max_n.max(2), p.rng_seed, p.solver_limit, p.workers));
    }
    out
}
