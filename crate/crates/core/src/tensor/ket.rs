use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::{parse_rational, Rational};

use super::matrix::RationalMatrix;
use super::perm::PermutationMap;
use super::word::{weight_of, Weight, Word};

/// Largest `d^q` for which [`apply_matrix`] will materialize `a^{⊗q} v`.
pub const DENSE_LIMIT: u128 = 59_049; // 3^10

/// An exact sparse vector in `(Q^d)^{⊗q}`, keyed by basis words in
/// lexicographic order. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseKet {
    d: usize,
    q: usize,
    terms: BTreeMap<Word, Rational>,
}

impl SparseKet {
    pub fn zero(d: usize, q: usize) -> Self {
        SparseKet {
            d,
            q,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `|w⟩`.
    pub fn basis(d: usize, w: Word) -> Result<Self> {
        SparseKet::from_terms(d, w.len(), [(w, Rational::one())])
    }

    pub fn from_terms(
        d: usize,
        q: usize,
        terms: impl IntoIterator<Item = (Word, Rational)>,
    ) -> Result<Self> {
        let mut out = SparseKet::zero(d, q);
        for (w, c) in terms {
            out.check_word(&w)?;
            out.add_term(w, c);
        }
        Ok(out)
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.q {
            return domain(format!(
                "word {w} has length {}, expected {}",
                w.len(),
                self.q
            ));
        }
        if w.max_letter() > self.d || w.letters().contains(&0) {
            return domain(format!("word {w} has letters outside 1..={}", self.d));
        }
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of stored (nonzero) coefficients.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_same_space(&self, other: &SparseKet) -> Result<()> {
        if (self.d, self.q) != (other.d, other.q) {
            return domain(format!(
                "vectors live in different spaces: (d, q) = ({}, {}) vs ({}, {})",
                self.d, self.q, other.d, other.q
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &SparseKet) -> Result<SparseKet> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SparseKet) -> Result<SparseKet> {
        self.add(&other.scaled(&-Rational::one()))
    }

    pub fn scaled(&self, c: &Rational) -> SparseKet {
        if c.is_zero() {
            return SparseKet::zero(self.d, self.q);
        }
        SparseKet {
            d: self.d,
            q: self.q,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `|self⟩ ⊗ |other⟩` in `V^{⊗(p+q)}`.
    pub fn tensor(&self, other: &SparseKet) -> Result<SparseKet> {
        if self.d != other.d {
            return domain(format!("tensor of d = {} and d = {}", self.d, other.d));
        }
        let mut out = SparseKet::zero(self.d, self.q + other.q);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.terms.insert(a.concat(b), ca * cb);
            }
        }
        Ok(out)
    }

    /// `Some(μ)` if every word in the support has weight `μ`; `None` for the
    /// zero vector or a mixture of weights.
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys().map(|w| weight_of(w, self.d));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

/// `π·v`, with `(π·w)_j = w_{π⁻¹(j)}` on basis words.
pub fn permute(pi: &PermutationMap, v: &SparseKet) -> Result<SparseKet> {
    if pi.degree() != v.q {
        return domain(format!(
            "permutation of degree {} on a vector of degree {}",
            pi.degree(),
            v.q
        ));
    }
    let mut out = SparseKet::zero(v.d, v.q);
    for (w, c) in &v.terms {
        out.terms.insert(pi.apply(w)?, c.clone());
    }
    Ok(out)
}

/// `a^{⊗q} v`, materialized. Guarded by [`DENSE_LIMIT`]; large-degree
/// callers should use [`overlap_with_matrix`] instead.
pub fn apply_matrix(a: &RationalMatrix, v: &SparseKet) -> Result<SparseKet> {
    if a.dim() != v.d {
        return domain(format!(
            "{0}×{0} matrix on a vector with d = {1}",
            a.dim(),
            v.d
        ));
    }
    let dense = (v.d as u128).checked_pow(v.q as u32).unwrap_or(u128::MAX);
    if dense > DENSE_LIMIT {
        return Err(Error::Resource(format!(
            "d^q = {}^{} exceeds the dense limit {DENSE_LIMIT}",
            v.d, v.q
        )));
    }
    // column j of a: nonzero (i, a_ij)
    let columns: Vec<Vec<(u8, Rational)>> = (0..a.dim())
        .map(|j| {
            (0..a.dim())
                .filter(|&i| !a.get(i, j).is_zero())
                .map(|i| (i as u8 + 1, a.get(i, j).clone()))
                .collect()
        })
        .collect();
    let mut out = SparseKet::zero(v.d, v.q);
    let mut letters = Vec::with_capacity(v.q);
    for (w, c) in &v.terms {
        expand_word(&columns, w.letters(), c.clone(), &mut letters, &mut out);
    }
    Ok(out)
}

fn expand_word(
    columns: &[Vec<(u8, Rational)>],
    rest: &[u8],
    coef: Rational,
    letters: &mut Vec<u8>,
    out: &mut SparseKet,
) {
    let Some((&z, tail)) = rest.split_first() else {
        out.add_term(Word::from_letters(letters.clone()), coef);
        return;
    };
    for (x, a) in &columns[z as usize - 1] {
        letters.push(*x);
        expand_word(columns, tail, &coef * a, letters, out);
        letters.pop();
    }
}

/// `⟨u|v⟩ = Σ_w u(w) v(w)`; coefficients are real so no conjugation.
pub fn inner(u: &SparseKet, v: &SparseKet) -> Result<Rational> {
    u.check_same_space(v)?;
    let (small, big) = if u.terms.len() <= v.terms.len() {
        (u, v)
    } else {
        (v, u)
    };
    let mut acc = Rational::zero();
    for (w, c) in &small.terms {
        if let Some(x) = big.terms.get(w) {
            acc += c * x;
        }
    }
    Ok(acc)
}

/// Restriction of `v` to the words of weight `mu`.
pub fn weight_component(v: &SparseKet, mu: &Weight) -> Result<SparseKet> {
    if mu.d() != v.d {
        return domain(format!(
            "weight {:?} has length {}, expected d = {}",
            mu.entries(),
            mu.d(),
            v.d
        ));
    }
    let mut out = SparseKet::zero(v.d, v.q);
    for (w, c) in &v.terms {
        if &weight_of(w, v.d) == mu {
            out.terms.insert(w.clone(), c.clone());
        }
    }
    Ok(out)
}

/// `⟨x| a^{⊗q} |v⟩ = Σ_z v(z) Π_j a_{x_j z_j}`, without materializing `a^{⊗q} v`.
pub fn overlap_with_matrix(v: &SparseKet, a: &RationalMatrix, x: &Word) -> Result<Rational> {
    if a.dim() != v.d {
        return domain(format!(
            "{0}×{0} matrix on a vector with d = {1}",
            a.dim(),
            v.d
        ));
    }
    v.check_word(x)?;
    let xs = x.letters();
    let mut acc = Rational::zero();
    'terms: for (z, c) in &v.terms {
        let mut prod = c.clone();
        for (&xi, &zi) in xs.iter().zip(z.letters()) {
            let e = a.get(xi as usize - 1, zi as usize - 1);
            if e.is_zero() {
                continue 'terms;
            }
            prod *= e;
        }
        acc += prod;
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: Vec<u8>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct KetRepr {
    d: usize,
    q: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SparseKet {
    /// `{"d":2,"q":2,"terms":[{"word":[1,2],"coef":"-1/2"}, …]}`, words in
    /// lexicographic order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KetRepr {
            d: self.d,
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermRepr {
                    word: w.letters().to_vec(),
                    coef: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparseKet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = KetRepr::deserialize(de)?;
        let terms = repr
            .terms
            .into_iter()
            .map(|t| Ok((Word::from_letters(t.word), parse_rational(&t.coef)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SparseKet::from_terms(repr.d, repr.q, terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn w(letters: &[u8]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    fn ket(d: usize, terms: &[(&[u8], i64)]) -> SparseKet {
        let q = terms.first().map_or(0, |t| t.0.len());
        SparseKet::from_terms(d, q, terms.iter().map(|(l, c)| (w(l), r(*c)))).unwrap()
    }

    #[test]
    fn permute_examples() {
        let abcd = ket(4, &[(&[1, 2, 3, 4], 1)]);
        let sigma = PermutationMap::interleave(4).unwrap();
        assert_eq!(
            permute(&sigma, &abcd).unwrap(),
            ket(4, &[(&[1, 3, 2, 4], 1)])
        );
        let v = ket(2, &[(&[1, 2], 3), (&[2, 2], -1)]);
        assert_eq!(permute(&PermutationMap::identity(2), &v).unwrap(), v);
        let swap = PermutationMap::from_images(&[2, 1]).unwrap();
        assert_eq!(
            permute(&swap, &ket(2, &[(&[1, 2], 1)])).unwrap(),
            ket(2, &[(&[2, 1], 1)])
        );
        assert!(permute(&swap, &abcd).is_err());
    }

    #[test]
    fn apply_matrix_examples() {
        let v = ket(2, &[(&[1, 2], 1), (&[2, 1], -1)]);
        assert_eq!(apply_matrix(&RationalMatrix::identity(2), &v).unwrap(), v);
        let t = RationalMatrix::diagonal(&[r(3), r(5)]);
        assert_eq!(
            apply_matrix(&t, &ket(2, &[(&[1, 2], 1)])).unwrap(),
            ket(2, &[(&[1, 2], 15)])
        );
        let swap = RationalMatrix::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            apply_matrix(&swap, &ket(2, &[(&[1, 1], 1)])).unwrap(),
            ket(2, &[(&[2, 2], 1)])
        );
    }

    #[test]
    fn apply_matrix_resource_guard() {
        let big = SparseKet::basis(3, w(&[1; 11])).unwrap();
        assert!(matches!(
            apply_matrix(&RationalMatrix::identity(3), &big),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn inner_examples() {
        let a = ket(2, &[(&[1, 2], 1)]);
        let b = ket(2, &[(&[2, 1], 1)]);
        assert_eq!(inner(&a, &a).unwrap(), r(1));
        assert_eq!(inner(&a, &b).unwrap(), r(0));
        let v2 = ket(2, &[(&[1, 2], 1), (&[2, 1], -1)]);
        assert_eq!(inner(&v2, &v2).unwrap(), r(2));
        assert_eq!(inner(&v2, &SparseKet::zero(2, 2)).unwrap(), r(0));
        assert!(inner(&v2, &SparseKet::zero(3, 2)).is_err());
    }

    #[test]
    fn weight_component_examples() {
        let v = ket(2, &[(&[1, 2], 1), (&[2, 1], -1)])
            .tensor(&ket(2, &[(&[1], 1)]))
            .unwrap();
        assert_eq!(weight_component(&v, &Weight::new(vec![2, 1])).unwrap(), v);
        assert!(
            weight_component(&ket(2, &[(&[1, 1], 1)]), &Weight::new(vec![1, 1]))
                .unwrap()
                .is_zero()
        );
        let a = RationalMatrix::from_integers(&[vec![1, 0], vec![1, 1]]).unwrap();
        let moved = apply_matrix(&a, &ket(2, &[(&[1, 1], 1)])).unwrap();
        assert_eq!(
            weight_component(&moved, &Weight::new(vec![1, 1])).unwrap(),
            ket(2, &[(&[1, 2], 1), (&[2, 1], 1)])
        );
    }

    #[test]
    fn overlap_examples() {
        let v2 = ket(2, &[(&[1, 2], 1), (&[2, 1], -1)]);
        let id = RationalMatrix::identity(2);
        assert_eq!(overlap_with_matrix(&v2, &id, &w(&[1, 2])).unwrap(), r(1));
        assert_eq!(overlap_with_matrix(&v2, &id, &w(&[1, 1])).unwrap(), r(0));
        let upper = RationalMatrix::from_integers(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(overlap_with_matrix(&v2, &upper, &w(&[1, 2])).unwrap(), r(1));
        assert!(overlap_with_matrix(&v2, &id, &w(&[1, 2, 1])).is_err());
    }

    #[test]
    fn json_shape() {
        let v = SparseKet::from_terms(
            2,
            2,
            [
                (w(&[2, 1]), Rational::new((-1).into(), 2.into())),
                (w(&[1, 2]), r(3)),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"d":2,"q":2,"terms":[{"word":[1,2],"coef":"3"},{"word":[2,1],"coef":"-1/2"}]}"#
        );
        let back: SparseKet = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<SparseKet>(
            r#"{"d":2,"q":2,"terms":[{"word":[1,3],"coef":"1"}]}"#
        )
        .is_err());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let v = ket(2, &[(&[1, 2], 1)]);
        assert!(v.sub(&v).unwrap().is_zero());
        assert!(v.scaled(&r(0)).is_zero());
    }
}
