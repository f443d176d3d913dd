//! Exact minimum conversion sets and dynamos of complete multipartite
//! graphs, with deterministic witness constructions.
//!
//! With parts `p_1 >= ... >= p_m` summing to `n`, every vertex of part
//! `i` has degree `n - p_i`, so the low-degree set `X` under k-threshold
//! is a union of whole parts, and because the parts are sorted it is a
//! prefix of the id space.

use thiserror::Error;

use crate::engine::{EngineError, Rule};
use crate::family::MultipartiteSpec;
use crate::vset::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error(transparent)]
    Rule(#[from] EngineError),
}

/// Exact value plus a witness achieving it, with the claimed worst-case
/// coloring time of that witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteAnswer {
    pub value: usize,
    /// Witness in the normative multipartite id layout; `|witness| = value`.
    pub witness: VertexSet,
    /// The witness colors the graph in at most this many steps.
    pub predicted_steps: usize,
}

/// Ids of the vertices with degree below `k`: the union of the parts
/// with `n - p_i < k`, which is a prefix block of the id space.
fn low_degree_prefix(spec: &MultipartiteSpec, k: usize) -> usize {
    let n = spec.vertex_count();
    let mut end = 0;
    for i in 0..spec.part_count() {
        if n - spec.parts()[i] < k {
            end = spec.block_range(i).end;
        } else {
            break;
        }
    }
    end
}

/// Minimum size of a k-conversion set: `n` when `n <= k`, otherwise
/// `max(|X|, k)` with `X` the set of vertices of degree below `k`.
pub fn multipartite_min_k(spec: &MultipartiteSpec, k: usize) -> Result<usize, ClosedFormError> {
    Rule::k_threshold(k)?;
    let n = spec.vertex_count();
    if n <= k {
        return Ok(n);
    }
    Ok(low_degree_prefix(spec, k).max(k))
}

/// Minimum k-conversion set with its witness.
///
/// The witness is the deterministic form of the generic construction:
/// all of `X`, then whole parts in block order while they fit the
/// remaining budget `k - |X|`, then a proper prefix of the first part
/// that does not fit. Since `X` is an id prefix, the witness is always
/// the first `min_k` ids.
pub fn multipartite_min_k_witness(
    spec: &MultipartiteSpec,
    k: usize,
) -> Result<MultipartiteAnswer, ClosedFormError> {
    Rule::k_threshold(k)?;
    let n = spec.vertex_count();
    if n <= k {
        return Ok(MultipartiteAnswer {
            value: n,
            witness: VertexSet::full(n),
            predicted_steps: 0,
        });
    }
    let x_len = low_degree_prefix(spec, k);
    if k <= x_len {
        // X itself converts: every vertex outside X sees all |X| >= k of
        // its neighbors in X by step 1.
        let witness = VertexSet::from_ids(n, &(0..x_len).collect::<Vec<_>>());
        return Ok(MultipartiteAnswer { value: x_len, witness, predicted_steps: 1 });
    }
    // n > k > |X|: extend X with whole parts in block order, then a
    // proper prefix of the first part that does not fit. All chosen ids
    // are contiguous from 0, so the witness is {0, .., k-1}.
    let mut picked = x_len;
    let mut remaining = k - x_len;
    for i in 0..spec.part_count() {
        let block = spec.block_range(i);
        if block.start < x_len {
            continue; // part of X
        }
        let size = block.len();
        if size <= remaining {
            picked += size;
            remaining -= size;
            if remaining == 0 {
                break;
            }
        } else {
            picked += remaining;
            break;
        }
    }
    debug_assert_eq!(picked, k);
    let witness = VertexSet::from_ids(n, &(0..k).collect::<Vec<_>>());
    Ok(MultipartiteAnswer { value: k, witness, predicted_steps: 2 })
}

/// Minimum dynamo: `ceil((n - p_1) / 2)` vertices taken outside the
/// largest part. The witness takes the first ids after part 1.
///
/// Part 1 turns black at step 1 (its vertices have the fewest
/// neighbors), after which every remaining vertex has at least half of
/// its neighbors black by step 2.
pub fn multipartite_dynamo(spec: &MultipartiteSpec) -> MultipartiteAnswer {
    let n = spec.vertex_count();
    let p1 = spec.parts()[0];
    let value = (n - p1).div_ceil(2);
    let ids: Vec<usize> = (p1..p1 + value).collect();
    MultipartiteAnswer {
        value,
        witness: VertexSet::from_ids(n, &ids),
        predicted_steps: 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine;
    use crate::family::{generate, Family};

    fn spec(parts: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(parts.to_vec()).unwrap()
    }

    fn verify(answer: &MultipartiteAnswer, spec: &MultipartiteSpec, rule: Rule) {
        let g = generate(&Family::CompleteMultipartite(spec.clone())).unwrap();
        assert_eq!(answer.witness.len(), answer.value);
        let steps = engine::is_conversion_set(&g, rule, &answer.witness)
            .expect("witness must convert");
        assert!(
            steps <= answer.predicted_steps,
            "took {steps} steps, predicted at most {}",
            answer.predicted_steps
        );
    }

    #[test]
    fn value_examples() {
        assert_eq!(multipartite_min_k(&spec(&[3, 2, 1]), 4).unwrap(), 4);
        assert_eq!(multipartite_min_k(&spec(&[2, 2]), 5).unwrap(), 4, "n <= k forces all");
        assert_eq!(multipartite_min_k(&spec(&[3, 3]), 3).unwrap(), 3, "X empty");
        assert!(multipartite_min_k(&spec(&[2, 2]), 0).is_err());
    }

    #[test]
    fn witness_321_k4() {
        let s = spec(&[3, 2, 1]);
        let ans = multipartite_min_k_witness(&s, 4).unwrap();
        // X = the size-3 part, plus the first vertex of the size-2 part.
        assert_eq!(ans.witness.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(ans.predicted_steps, 2);
        verify(&ans, &s, Rule::k_threshold(4).unwrap());
    }

    #[test]
    fn witness_22_k2_is_whole_first_block() {
        let s = spec(&[2, 2]);
        let ans = multipartite_min_k_witness(&s, 2).unwrap();
        assert_eq!(ans.witness.to_vec(), vec![0, 1]);
        verify(&ans, &s, Rule::k_threshold(2).unwrap());
    }

    #[test]
    fn witness_all_when_n_at_most_k() {
        let s = spec(&[1, 1]);
        let ans = multipartite_min_k_witness(&s, 2).unwrap();
        assert_eq!(ans.value, 2);
        assert_eq!(ans.witness.len(), 2);
        assert_eq!(ans.predicted_steps, 0);
        verify(&ans, &s, Rule::k_threshold(2).unwrap());
    }

    #[test]
    fn witness_x_dominates() {
        // [4,1]: n=5, k=2: part 1 has degree 1 < 2 so X is the whole
        // size-4 block and |X| = 4 > k.
        let s = spec(&[4, 1]);
        let ans = multipartite_min_k_witness(&s, 2).unwrap();
        assert_eq!(ans.value, 4);
        assert_eq!(ans.witness.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(ans.predicted_steps, 1);
        verify(&ans, &s, Rule::k_threshold(2).unwrap());
    }

    #[test]
    fn dynamo_examples() {
        let s = spec(&[3, 2, 1]);
        let ans = multipartite_dynamo(&s);
        assert_eq!(ans.value, 2);
        assert_eq!(ans.witness.to_vec(), vec![3, 4], "first two ids of part 2");
        verify(&ans, &s, Rule::majority());

        assert_eq!(multipartite_dynamo(&spec(&[1, 1])).value, 1);
        assert_eq!(multipartite_dynamo(&spec(&[2, 2])).value, 1);
        verify(&multipartite_dynamo(&spec(&[2, 2])), &spec(&[2, 2]), Rule::majority());
    }

    #[test]
    fn min_k_monotone_in_k() {
        for parts in [&[3, 2, 1][..], &[4, 4], &[2, 2, 2], &[5, 1]] {
            let s = spec(parts);
            let n = s.vertex_count();
            let mut prev = 0;
            for k in 1..=n + 2 {
                let v = multipartite_min_k(&s, k).unwrap();
                assert!(v >= prev, "min_k not monotone at k={k} for {parts:?}");
                prev = v;
            }
        }
    }
}
