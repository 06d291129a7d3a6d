//! Central idempotents of `Q[S_q]` acting on `V^{⊗q}`.
//!
//! `P_λ = (f^λ/q!) Σ_π χ^λ(π) π`. Summing over `S_q` once per basis word
//! costs `q!·|support|`; instead the projector is evaluated one weight class
//! at a time. For a class with sorted representative `x_0` let
//! `K(z) = Σ_{π: π·x_0 = z} χ^λ(π)`. If `τ·x_0 = x`, conjugating by `τ`
//! shows `P_λ|x⟩ = (f^λ/q!) Σ_z K(z) |τ·z⟩`, so one pass over `S_q` per
//! class suffices.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::characters::{classes, factorial, mn_character, CycleType};
use crate::error::{domain, Error, Result};
use crate::partitions::Partition;
use crate::Rational;

use super::ket::SparseKet;
use super::perm::{cycle_type_of, permute_letters, stable_matching_images};
use super::word::Word;

/// Largest `q` for which [`isotypic_project`] will sum over `S_q`.
pub const MAX_PROJECTOR_DEGREE: usize = 8;

/// Projection of `v` onto the isotypic component of type `λ`.
pub fn isotypic_project(lambda: &Partition, v: &SparseKet) -> Result<SparseKet> {
    let q = v.q();
    if lambda.size() != q {
        return domain(format!(
            "isotypic type {lambda} has size {}, vector has degree {q}",
            lambda.size()
        ));
    }
    if q > MAX_PROJECTOR_DEGREE {
        return Err(Error::Resource(format!(
            "projector sums over S_{q}; limit is q ≤ {MAX_PROJECTOR_DEGREE}"
        )));
    }
    let chi: HashMap<Partition, i64> = classes(q)
        .into_iter()
        .map(|c| Ok((c.partition().clone(), mn_character(lambda, &c)?)))
        .collect::<Result<_>>()?;
    let group: Vec<(Vec<usize>, i64)> = (0..q)
        .permutations(q)
        .filter_map(|p| {
            let c = chi[&cycle_type_of(&p)];
            (c != 0).then_some((p, c))
        })
        .collect();

    let mut by_class: BTreeMap<Vec<u8>, Vec<(&Word, &Rational)>> = BTreeMap::new();
    for (w, c) in v.terms() {
        let mut base = w.letters().to_vec();
        base.sort_unstable();
        by_class.entry(base).or_default().push((w, c));
    }

    let partial: Vec<SparseKet> = by_class
        .into_par_iter()
        .map(|(base, members)| {
            let mut kernel: HashMap<Vec<u8>, i64> = HashMap::new();
            for (p, c) in &group {
                *kernel.entry(permute_letters(p, &base)).or_insert(0) += c;
            }
            let kernel: Vec<(Vec<u8>, BigInt)> = kernel
                .into_iter()
                .filter(|(_, k)| *k != 0)
                .map(|(z, k)| (z, BigInt::from(k)))
                .collect();
            let mut out = SparseKet::zero(v.d(), q);
            for (x, c) in members {
                let tau = stable_matching_images(&base, x.letters())
                    .expect("word is a rearrangement of its sorted letters");
                for (z, k) in &kernel {
                    let y = Word::from_letters(permute_letters(&tau, z));
                    out.add_term(y, c * k);
                }
            }
            out
        })
        .collect();

    let mut total = SparseKet::zero(v.d(), q);
    for part in &partial {
        total = total.add(part)?;
    }
    let dim = mn_character(lambda, &CycleType::identity(q))?;
    let scale = Rational::new(BigInt::from(dim), BigInt::from(factorial(q)));
    Ok(total.scaled(&scale))
}
