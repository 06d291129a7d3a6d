use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A computational-basis label `|i_1 i_2 ⋯ i_q⟩`, letters in `1..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u8>);

impl Word {
    /// Checks that every letter lies in `1..=d`.
    pub fn new(letters: Vec<u8>, d: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l as usize > d) {
            return domain(format!("letter {bad} outside 1..={d}"));
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    /// Concatenation, i.e. the basis tensor `|self⟩ ⊗ |other⟩`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `i_1^{⊗n} i_2^{⊗n} ⋯`: each letter repeated `n` times.
    pub fn blocks(letters: &[u8], n: usize) -> Word {
        Word(
            letters
                .iter()
                .flat_map(|&l| std::iter::repeat_n(l, n))
                .collect(),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l < 10) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", s.join("."))
        }
    }
}

/// Letter multiplicities `(μ_1, …, μ_d)`; the torus acts on a word of this
/// weight by `t_1^{μ_1} ⋯ t_d^{μ_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<usize>);

impl Weight {
    pub fn new(entries: Vec<usize>) -> Self {
        Weight(entries)
    }

    /// `(n, …, n, 0, …, 0)` with `k` copies of `n`, padded to length `d`.
    pub fn rectangle(n: usize, k: usize, d: usize) -> Result<Self> {
        if k > d {
            return domain(format!("rectangle with {k} rows does not fit in d = {d}"));
        }
        let mut v = vec![n; k];
        v.resize(d, 0);
        Ok(Weight(v))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        let len = self.0.len().max(rhs.0.len());
        Weight(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&0) + rhs.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }
}

/// Letter-multiplicity vector of `w`, of length `d`.
pub fn weight_of(w: &Word, d: usize) -> Weight {
    let mut counts = vec![0usize; d.max(w.max_letter())];
    for &l in w.letters() {
        counts[l as usize - 1] += 1;
    }
    Weight(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(
            weight_of(&Word::new(vec![1, 1, 2, 2], 2).unwrap(), 2).entries(),
            &[2, 2]
        );
        assert_eq!(
            weight_of(&Word::new(vec![1, 1, 1], 3).unwrap(), 3).entries(),
            &[3, 0, 0]
        );
        assert_eq!(
            weight_of(&Word::new(vec![1, 2, 3], 3).unwrap(), 3).entries(),
            &[1, 1, 1]
        );
    }

    #[test]
    fn letters_are_range_checked() {
        assert!(Word::new(vec![1, 3], 2).is_err());
        assert!(Word::new(vec![0], 2).is_err());
    }

    #[test]
    fn block_words() {
        assert_eq!(Word::blocks(&[1, 2, 3], 2).letters(), &[1, 1, 2, 2, 3, 3]);
        assert_eq!(Word::blocks(&[2, 1], 1).to_string(), "21");
    }

    #[test]
    fn rectangle_weight() {
        assert_eq!(Weight::rectangle(2, 2, 3).unwrap().entries(), &[2, 2, 0]);
        assert!(Weight::rectangle(1, 3, 2).is_err());
    }
}
