use itertools::Itertools;
use num_traits::One;

use crate::error::{domain, Result};
use crate::partitions::Partition;
use crate::Rational;

use super::ket::SparseKet;
use super::word::{Weight, Word};

/// The Slater vector `v_k = Σ_{π∈S_k} sgn(π) π|12⋯k⟩` in `V^{⊗k}`.
pub fn slater(k: usize, d: usize) -> Result<SparseKet> {
    if k > d {
        return domain(format!("Slater vector v_{k} needs k ≤ d = {d}"));
    }
    let mut out = SparseKet::zero(d, k);
    for perm in (1..=k as u8).permutations(k) {
        let inversions = perm
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        let sign = if inversions % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        out.add_term(Word::from_letters(perm), sign);
    }
    Ok(out)
}

/// `v_λ = v_{λ'_1} ⊗ v_{λ'_2} ⊗ ⋯`, one Slater factor per column of `λ`,
/// leftmost column first.
pub fn highest_weight_vector(lambda: &Partition, d: usize) -> Result<SparseKet> {
    if lambda.length() > d {
        return domain(format!("λ = {lambda} has more than d = {d} parts"));
    }
    let mut out = SparseKet::basis(d, Word::from_letters(Vec::new()))?;
    for &col in lambda.conjugate().parts() {
        out = out.tensor(&slater(col, d)?)?;
    }
    Ok(out)
}

/// `E_{i,i+1}` acting as a derivation: the sum over positions of the
/// operator sending letter `i+1` to `i` at that position.
pub fn raising_apply(i: usize, v: &SparseKet) -> Result<SparseKet> {
    if i == 0 || i >= v.d() {
        return domain(format!("raising operator index {i} outside 1..{}", v.d()));
    }
    let (from, to) = (i as u8 + 1, i as u8);
    let mut out = SparseKet::zero(v.d(), v.q());
    for (w, c) in v.terms() {
        for (pos, &l) in w.letters().iter().enumerate() {
            if l == from {
                let mut letters = w.letters().to_vec();
                letters[pos] = to;
                out.add_term(Word::from_letters(letters), c.clone());
            }
        }
    }
    Ok(out)
}

/// A nonzero weight vector of dominant weight killed by every raising
/// operator. Returns its weight.
pub fn is_highest_weight_vector(v: &SparseKet) -> Result<Option<Weight>> {
    let Some(weight) = v.weight() else {
        return Ok(None);
    };
    for i in 1..v.d() {
        if !raising_apply(i, v)?.is_zero() {
            return Ok(None);
        }
    }
    Ok(weight.is_dominant().then_some(weight))
}
