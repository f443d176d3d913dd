//! Parsers for the CLI value grammars: graph families, rules, and
//! vertex-id sets.
//!
//! Family grammar: `path:N`, `cycle:N`, `complete:N`, `star:N`,
//! `multipartite:P1,P2,...`, `gnp:N,NUM/DEN,SEED`.
//! Rule grammar: `majority` or `k:K`.
//! Id-set grammar: comma list of ids, ranges `a-b` allowed (`0,2,5-7`).

use thiserror::Error;

use spreadlab::engine::Rule;
use spreadlab::family::{Family, MultipartiteSpec};
use spreadlab::vset::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid family \"{input}\": {reason}")]
    Family { input: String, reason: String },
    #[error("invalid rule \"{input}\": expected \"majority\" or \"k:<K>\"")]
    Rule { input: String },
    #[error("invalid seed set \"{input}\": {reason}")]
    IdSet { input: String, reason: String },
}

fn family_err(input: &str, reason: impl Into<String>) -> ParseError {
    ParseError::Family { input: input.into(), reason: reason.into() }
}

/// Parses the family grammar.
pub fn parse_family(input: &str) -> Result<Family, ParseError> {
    let (name, params) = input
        .split_once(':')
        .ok_or_else(|| family_err(input, "expected \"name:params\""))?;
    let single = |params: &str| -> Result<usize, ParseError> {
        params
            .parse()
            .map_err(|_| family_err(input, format!("\"{params}\" is not a count")))
    };
    match name {
        "path" => Ok(Family::Path(single(params)?)),
        "cycle" => Ok(Family::Cycle(single(params)?)),
        "complete" => Ok(Family::Complete(single(params)?)),
        "star" => Ok(Family::Star(single(params)?)),
        "multipartite" => {
            let parts: Vec<usize> = params
                .split(',')
                .map(|p| p.parse().map_err(|_| family_err(input, format!("bad part \"{p}\""))))
                .collect::<Result<_, _>>()?;
            let spec = MultipartiteSpec::new(parts)
                .map_err(|e| family_err(input, e.to_string()))?;
            Ok(Family::CompleteMultipartite(spec))
        }
        "gnp" => {
            let fields: Vec<&str> = params.split(',').collect();
            let [n, prob, seed] = fields.as_slice() else {
                return Err(family_err(input, "expected gnp:N,NUM/DEN,SEED"));
            };
            let (num, den) = prob
                .split_once('/')
                .ok_or_else(|| family_err(input, "probability must be NUM/DEN"))?;
            Ok(Family::Gnp {
                n: n.parse().map_err(|_| family_err(input, format!("bad count \"{n}\"")))?,
                p_num: num.parse().map_err(|_| family_err(input, format!("bad numerator \"{num}\"")))?,
                p_den: den.parse().map_err(|_| family_err(input, format!("bad denominator \"{den}\"")))?,
                seed: seed.parse().map_err(|_| family_err(input, format!("bad seed \"{seed}\"")))?,
            })
        }
        other => Err(family_err(input, format!("unknown family \"{other}\""))),
    }
}

/// Parses the rule grammar. `k:0` is rejected downstream by the engine;
/// here it only has to be a number.
pub fn parse_rule(input: &str) -> Result<Rule, ParseError> {
    if input == "majority" {
        return Ok(Rule::majority());
    }
    if let Some(k) = input.strip_prefix("k:") {
        if let Ok(k) = k.parse::<usize>() {
            return Rule::k_threshold(k).map_err(|_| ParseError::Rule { input: input.into() });
        }
    }
    Err(ParseError::Rule { input: input.into() })
}

/// Parses the id-set grammar against a universe of `n` vertices. The
/// empty string is the empty set.
pub fn parse_id_set(input: &str, n: usize) -> Result<VertexSet, ParseError> {
    let err = |reason: String| ParseError::IdSet { input: input.into(), reason };
    let mut set = VertexSet::new(n);
    if input.trim().is_empty() {
        return Ok(set);
    }
    for piece in input.split(',') {
        let piece = piece.trim();
        let (lo, hi) = match piece.split_once('-') {
            Some((a, b)) => {
                let lo: usize = a.trim().parse().map_err(|_| err(format!("bad id \"{a}\"")))?;
                let hi: usize = b.trim().parse().map_err(|_| err(format!("bad id \"{b}\"")))?;
                if lo > hi {
                    return Err(err(format!("empty range \"{piece}\"")));
                }
                (lo, hi)
            }
            None => {
                let v: usize = piece.parse().map_err(|_| err(format!("bad id \"{piece}\"")))?;
                (v, v)
            }
        };
        for v in lo..=hi {
            if v >= n {
                return Err(err(format!("id {v} out of range (n = {n})")));
            }
            set.insert(v);
        }
    }
    Ok(set)
}

/// Renders a family back into its grammar string.
pub fn family_label(family: &Family) -> String {
    match family {
        Family::Path(n) => format!("path:{n}"),
        Family::Cycle(n) => format!("cycle:{n}"),
        Family::Complete(n) => format!("complete:{n}"),
        Family::Star(n) => format!("star:{n}"),
        Family::CompleteMultipartite(spec) => {
            let parts: Vec<String> = spec.parts().iter().map(usize::to_string).collect();
            format!("multipartite:{}", parts.join(","))
        }
        Family::Gnp { n, p_num, p_den, seed } => format!("gnp:{n},{p_num}/{p_den},{seed}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_round_trip() {
        for s in ["path:4", "cycle:6", "complete:3", "star:5", "multipartite:3,2,1", "gnp:8,1/2,7"] {
            let fam = parse_family(s).unwrap();
            assert_eq!(family_label(&fam), s);
        }
    }

    #[test]
    fn family_errors() {
        assert!(parse_family("path").is_err());
        assert!(parse_family("blob:3").is_err());
        assert!(parse_family("cycle:x").is_err());
        assert!(parse_family("gnp:8,0.5,7").is_err());
        assert!(parse_family("multipartite:3,0").is_err());
    }

    #[test]
    fn rules() {
        assert_eq!(parse_rule("majority").unwrap(), Rule::majority());
        assert_eq!(parse_rule("k:2").unwrap(), Rule::k_threshold(2).unwrap());
        assert!(parse_rule("k:0").is_err());
        assert!(parse_rule("k:").is_err());
        assert!(parse_rule("threshold").is_err());
    }

    #[test]
    fn id_sets() {
        assert_eq!(parse_id_set("0,2,5-7", 10).unwrap().to_vec(), vec![0, 2, 5, 6, 7]);
        assert_eq!(parse_id_set("", 4).unwrap().to_vec(), Vec::<usize>::new());
        assert_eq!(parse_id_set("3-3", 4).unwrap().to_vec(), vec![3]);
        assert!(parse_id_set("5", 4).is_err());
        assert!(parse_id_set("3-1", 9).is_err());
        assert!(parse_id_set("a", 4).is_err());
    }
}
