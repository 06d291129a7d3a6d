//! Toy evaluator of the combinatorial occurrence criterion for
//! `V_λ(SL_{d²})` in the coordinate ring of the permanent's orbit closure,
//! `|λ| = ℓd`: there must be `μ, ν ⊢ ℓd` with at most `d` parts such that
//!
//! 1. `g(λ, μ, ν) > 0`, and when `μ = ν` even `S^λ ⊗ Sym²S^μ` has an invariant;
//! 2. both `μ` and `ν` occur in `Sym^d(Sym^ℓ C^d)`.
//!
//! Only the criterion is evaluated; nothing geometric is computed.

use serde::{Deserialize, Serialize};

use crate::characters::{kronecker, symmetric_kronecker};
use crate::error::{domain, Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfunc::plethysm_coefficient_with_limit;

/// Largest `ℓd` the checker accepts.
pub const MAX_GCT_DEGREE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GctQuery {
    pub lambda: Partition,
    pub d: usize,
    pub ell: usize,
}

impl GctQuery {
    pub fn new(lambda: Partition, d: usize, ell: usize) -> Result<Self> {
        if d == 0 || ell == 0 {
            return domain("d and ℓ must be positive");
        }
        if lambda.size() != ell * d {
            return domain(format!("|λ| = {} but ℓ·d = {}", lambda.size(), ell * d));
        }
        Ok(GctQuery { lambda, d, ell })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub mu: Partition,
    pub nu: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GctOutcome {
    pub occurs: bool,
    /// First witness pair in enumeration order.
    pub witness: Option<Witness>,
    pub pairs_examined: usize,
}

/// Scans unordered pairs `μ ≤ ν` (enumeration order, decreasing lex) and
/// returns the first pair meeting both conditions. `search_limit` bounds the
/// number of pairs examined; running out before a decision is a resource error.
pub fn perorbit_occurs(query: &GctQuery, search_limit: usize) -> Result<GctOutcome> {
    let GctQuery { lambda, d, ell } = query;
    let total = ell * d;
    if total > MAX_GCT_DEGREE {
        return Err(Error::Resource(format!(
            "ℓ·d = {total} exceeds the character-table limit {MAX_GCT_DEGREE}"
        )));
    }
    let candidates = enumerate_partitions(total, *d);
    let in_plethysm: Vec<bool> = candidates
        .iter()
        .map(|mu| Ok(plethysm_coefficient_with_limit(mu, *d, *ell, MAX_GCT_DEGREE)? > 0))
        .collect::<Result<_>>()?;
    let mut examined = 0;
    for i in 0..candidates.len() {
        for j in i..candidates.len() {
            if examined == search_limit {
                return Err(Error::Resource(format!(
                    "search limit {search_limit} reached before a decision"
                )));
            }
            examined += 1;
            if !(in_plethysm[i] && in_plethysm[j]) {
                continue;
            }
            let (mu, nu) = (&candidates[i], &candidates[j]);
            let ok = if i == j {
                kronecker(lambda, mu, mu)? > 0 && symmetric_kronecker(lambda, mu)? > 0
            } else {
                kronecker(lambda, mu, nu)? > 0
            };
            if ok {
                return Ok(GctOutcome {
                    occurs: true,
                    witness: Some(Witness {
                        mu: mu.clone(),
                        nu: nu.clone(),
                    }),
                    pairs_examined: examined,
                });
            }
        }
    }
    Ok(GctOutcome {
        occurs: false,
        witness: None,
        pairs_examined: examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_row_occurs_with_trivial_witness() {
        let q = GctQuery::new(p(&[4]), 2, 2).unwrap();
        let out = perorbit_occurs(&q, usize::MAX).unwrap();
        assert!(out.occurs);
        assert_eq!(
            out.witness,
            Some(Witness {
                mu: p(&[4]),
                nu: p(&[4])
            })
        );
        assert_eq!(out.pairs_examined, 1);
    }

    #[test]
    fn size_mismatch() {
        assert!(GctQuery::new(p(&[3, 2]), 2, 2).is_err());
    }

    #[test]
    fn degree_guard() {
        let q = GctQuery::new(Partition::row(12), 3, 4).unwrap();
        assert!(matches!(perorbit_occurs(&q, 100), Err(Error::Resource(_))));
    }

    #[test]
    fn limit_zero_cannot_decide() {
        let q = GctQuery::new(p(&[4]), 2, 2).unwrap();
        assert!(matches!(perorbit_occurs(&q, 0), Err(Error::Resource(_))));
    }
}
