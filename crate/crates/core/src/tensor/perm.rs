use std::fmt;

use crate::error::{domain, Result};
use crate::partitions::Partition;

use super::word::Word;

/// A bijection of tensor positions, acting on words by
/// `(π·w)_{π(i)} = w_i`, i.e. `(π·w)_j = w_{π⁻¹(j)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationMap {
    images: Vec<usize>,
}

impl PermutationMap {
    pub fn identity(q: usize) -> Self {
        PermutationMap {
            images: (0..q).collect(),
        }
    }

    /// From 1-based position images `(π(1), …, π(q))`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let q = images.len();
        let mut seen = vec![false; q];
        for &i in images {
            if i == 0 || i > q || seen[i - 1] {
                return domain(format!("{images:?} is not a permutation of 1..={q}"));
            }
            seen[i - 1] = true;
        }
        Ok(PermutationMap {
            images: images.iter().map(|i| i - 1).collect(),
        })
    }

    /// The lexicographically least `π` with `π·from = to`: the `t`-th
    /// occurrence of each letter in `from` goes to its `t`-th occurrence in `to`.
    pub fn stable_matching(from: &Word, to: &Word) -> Result<Self> {
        match stable_matching_images(from.letters(), to.letters()) {
            Some(images) => Ok(PermutationMap { images }),
            None => domain(format!("{to} is not a rearrangement of {from}")),
        }
    }

    /// The interleaving `(1, 3, 5, …, q−1, 2, 4, …, q)` for even `q`: the
    /// first half of the positions goes to the odd slots, the second half to
    /// the even slots.
    pub fn interleave(q: usize) -> Result<Self> {
        if !q.is_multiple_of(2) {
            return domain(format!("interleaving needs an even degree, got {q}"));
        }
        let half = q / 2;
        let images = (0..q)
            .map(|i| if i < half { 2 * i } else { 2 * (i - half) + 1 })
            .collect();
        Ok(PermutationMap { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn inverse(&self) -> PermutationMap {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        PermutationMap { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationMap) -> Result<PermutationMap> {
        if self.degree() != other.degree() {
            return domain("composing permutations of different degree");
        }
        Ok(PermutationMap {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// `π·w` for a word of matching length.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.len() != self.degree() {
            return domain(format!(
                "permutation of degree {} applied to word of length {}",
                self.degree(),
                w.len()
            ));
        }
        Ok(Word::from_letters(permute_letters(
            &self.images,
            w.letters(),
        )))
    }

    pub fn cycle_type(&self) -> Partition {
        cycle_type_of(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }
}

pub(crate) fn stable_matching_images(from: &[u8], to: &[u8]) -> Option<Vec<usize>> {
    if from.len() != to.len() {
        return None;
    }
    let max = from.iter().chain(to).copied().max().unwrap_or(0) as usize;
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
    for (j, &l) in to.iter().enumerate().rev() {
        slots[l as usize].push(j);
    }
    from.iter()
        .map(|&l| slots[l as usize].pop())
        .collect::<Option<Vec<_>>>()
        .filter(|_| slots.iter().all(Vec::is_empty))
}

pub(crate) fn permute_letters(images: &[usize], letters: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; letters.len()];
    for (i, &l) in letters.iter().enumerate() {
        out[images[i]] = l;
    }
    out
}

pub(crate) fn cycle_type_of(images: &[usize]) -> Partition {
    let mut seen = vec![false; images.len()];
    let mut cycles = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        cycles.push(len);
    }
    Partition::from_unsorted(cycles)
}

impl fmt::Display for PermutationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}
