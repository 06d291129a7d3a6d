//! Symmetric functions in the power-sum basis.
//!
//! The plethysm `h_k[h_m]` is expanded with `p_r[p_s] = p_{rs}` and
//! `h_n = Σ_{μ⊢n} p_μ / z_μ`; Schur coefficients are read off with the
//! symmetric-group characters, `⟨f, s_λ⟩ = Σ_μ f_μ χ^λ(μ)`.
//!
//! [`brute_force_decomposition`] is an independent route: it expands the
//! character of `Sym^k(Sym^m C^d)` as a polynomial in `d` variables and peels
//! off Schur polynomials using Kostka numbers. It shares no code with the
//! power-sum engine beyond partition enumeration.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::characters::{mn_character, CycleType};
use crate::error::{domain, Error, Result};
use crate::partitions::{enumerate_partitions, partitions_of, Partition};
use crate::tableaux::kostka;
use crate::Rational;

/// Default bound on `k·m` for [`plethysm_h`].
pub const DEFAULT_DEGREE_LIMIT: usize = 16;

/// Maximum number of degree-`k` multisets of monomials the brute-force
/// oracle will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 5_000_000;

/// A homogeneous symmetric function `Σ_μ c_μ p_μ` with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PExpr {
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl PExpr {
    pub fn zero(degree: usize) -> Self {
        PExpr {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The power-sum monomial `p_μ`.
    pub fn power_sum(mu: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = mu.size();
        terms.insert(mu, Rational::one());
        PExpr { degree, terms }
    }

    /// Builds from `(μ, c_μ)` pairs; all `μ` must have the same size.
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut out = PExpr::zero(degree);
        for (mu, c) in terms {
            if mu.size() != degree {
                return domain(format!("p_{mu} does not have degree {degree}"));
            }
            out.add_term(mu, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mu: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
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

    pub fn scaled(&self, c: &Rational) -> PExpr {
        if c.is_zero() {
            return PExpr::zero(self.degree);
        }
        PExpr {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

impl Add for &PExpr {
    type Output = PExpr;

    fn add(self, rhs: &PExpr) -> PExpr {
        assert_eq!(self.degree, rhs.degree, "adding PExprs of different degree");
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl Mul for &PExpr {
    type Output = PExpr;

    /// `p_μ p_ν = p_{μ ∪ ν}`.
    fn mul(self, rhs: &PExpr) -> PExpr {
        let mut out = PExpr::zero(self.degree + rhs.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(merge_parts(a, b), ca * cb);
            }
        }
        out
    }
}

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let (a, b) = (a.parts(), b.parts());
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] >= b[j]) {
            merged.push(a[i]);
            i += 1;
        } else {
            merged.push(b[j]);
            j += 1;
        }
    }
    Partition::new(merged).expect("merge of partitions is a partition")
}

fn inverse_z(mu: &Partition) -> Rational {
    let z = CycleType::new(mu.clone()).z_order();
    Rational::new(BigInt::one(), BigInt::from(z))
}

/// `h_m = Σ_{μ⊢m} p_μ / z_μ`.
pub fn h_in_p(m: usize) -> PExpr {
    let mut out = PExpr::zero(m);
    for mu in partitions_of(m) {
        let c = inverse_z(&mu);
        out.add_term(mu, c);
    }
    out
}

/// `p_r[f]`: multiplies every part of every index partition by `r`.
pub fn plethysm_p_into(r: usize, f: &PExpr) -> PExpr {
    PExpr {
        degree: f.degree * r,
        terms: f
            .terms
            .iter()
            .map(|(mu, c)| (mu.scale(r), c.clone()))
            .collect(),
    }
}

/// `h_k[h_m]` in the power-sum basis, with the default degree limit.
pub fn plethysm_h(k: usize, m: usize) -> Result<PExpr> {
    plethysm_h_with_limit(k, m, DEFAULT_DEGREE_LIMIT)
}

/// `h_k[h_m] = Σ_{ν⊢k} (1/z_ν) Π_{r∈ν} p_r[h_m]`.
pub fn plethysm_h_with_limit(k: usize, m: usize, degree_limit: usize) -> Result<PExpr> {
    if k == 0 || m == 0 {
        return domain("plethysm h_k[h_m] needs k, m ≥ 1");
    }
    if k * m > degree_limit {
        return Err(Error::Resource(format!(
            "degree k·m = {} exceeds the limit {degree_limit}",
            k * m
        )));
    }
    let hm = h_in_p(m);
    let inner: Vec<PExpr> = (1..=k).map(|r| plethysm_p_into(r, &hm)).collect();
    let mut total = PExpr::zero(k * m);
    for nu in partitions_of(k) {
        let mut prod = PExpr::power_sum(Partition::empty());
        for &r in nu.parts() {
            prod = &prod * &inner[r - 1];
        }
        total = &total + &prod.scaled(&inverse_z(&nu));
    }
    Ok(total)
}

/// Coefficient of `s_λ` in the Schur expansion of `f`.
pub fn schur_coefficient(f: &PExpr, lambda: &Partition) -> Result<Rational> {
    if lambda.size() != f.degree {
        return domain(format!(
            "s_{lambda} has degree {}, expression has degree {}",
            lambda.size(),
            f.degree
        ));
    }
    let mut acc = Rational::zero();
    for (mu, c) in &f.terms {
        let chi = mn_character(lambda, &CycleType::new(mu.clone()))?;
        acc += c * Rational::from_integer(BigInt::from(chi));
    }
    Ok(acc)
}

fn as_multiplicity(value: Rational, what: impl FnOnce() -> String) -> Result<u64> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Invariant(format!(
            "{} is {value}, not a nonnegative integer",
            what()
        )));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Invariant(format!("{} = {value} overflows u64", what())))
}

/// Multiplicity of the Weyl module `λ` in `Sym^k(Sym^m C^d)` for `d ≥ ℓ(λ)`.
pub fn plethysm_coefficient(lambda: &Partition, k: usize, m: usize) -> Result<u64> {
    plethysm_coefficient_with_limit(lambda, k, m, DEFAULT_DEGREE_LIMIT)
}

pub fn plethysm_coefficient_with_limit(
    lambda: &Partition,
    k: usize,
    m: usize,
    degree_limit: usize,
) -> Result<u64> {
    if lambda.size() != k * m {
        return domain(format!(
            "λ = {lambda} has size {}, expected k·m = {}",
            lambda.size(),
            k * m
        ));
    }
    let f = plethysm_h_with_limit(k, m, degree_limit)?;
    let c = schur_coefficient(&f, lambda)?;
    as_multiplicity(c, || {
        format!("plethysm coefficient of {lambda} in h_{k}[h_{m}]")
    })
}

/// Schur expansion of `f`, nonzero terms only, in decreasing lexicographic
/// order (a linear extension of decreasing dominance).
pub fn schur_expansion(f: &PExpr) -> Result<Vec<(Partition, Rational)>> {
    let mut out = Vec::new();
    for lambda in partitions_of(f.degree) {
        let c = schur_coefficient(f, &lambda)?;
        if !c.is_zero() {
            out.push((lambda, c));
        }
    }
    Ok(out)
}

/// Full decomposition of `Sym^k(Sym^m)` as `(λ, multiplicity)` pairs.
pub fn plethysm_decomposition(
    k: usize,
    m: usize,
    degree_limit: usize,
) -> Result<Vec<(Partition, u64)>> {
    let f = plethysm_h_with_limit(k, m, degree_limit)?;
    schur_expansion(&f)?
        .into_iter()
        .map(|(lambda, c)| {
            let mult = as_multiplicity(c, || format!("coefficient of {lambda} in h_{k}[h_{m}]"))?;
            Ok((lambda, mult))
        })
        .collect()
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the Weyl module `λ` over `C^d` by the hook-content formula.
pub fn weyl_dim(lambda: &Partition, d: usize) -> u128 {
    if lambda.length() > d {
        return 0;
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = d + j - i;
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            num *= content;
            den *= hook;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q.to_u128().expect("Weyl dimension fits in u128")
}

/// Decomposition of `Sym^k(Sym^m C^d)` by explicit character expansion.
///
/// Enumerates all multisets of `k` degree-`m` monomials in `d` variables,
/// keeps the dominant exponent vectors of their products, then repeatedly
/// removes the lexicographically largest remaining weight `μ` together with
/// `K_{μν}` copies of every lower weight `ν`.
pub fn brute_force_decomposition(k: usize, m: usize, d: usize) -> Result<BTreeMap<Partition, u64>> {
    if k == 0 || m == 0 || d == 0 {
        return domain("brute-force plethysm needs k, m, d ≥ 1");
    }
    let n_monomials = binomial((m + d - 1) as u128, (d - 1) as u128);
    let n_multisets = binomial(n_monomials + k as u128 - 1, k as u128);
    if n_multisets > BRUTE_FORCE_LIMIT {
        return Err(Error::Resource(format!(
            "{n_multisets} monomial multisets exceed the limit {BRUTE_FORCE_LIMIT}"
        )));
    }
    let monomials = compositions(m, d);
    let mut weights: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    let mut acc = vec![0usize; d];
    collect_multisets(&monomials, 0, k, &mut acc, &mut weights);

    let mut remaining: BTreeMap<Partition, i64> = enumerate_partitions(k * m, d)
        .into_iter()
        .map(|mu| {
            let count = weights
                .get(&mu.padded(d).expect("≤ d parts"))
                .copied()
                .unwrap_or(0);
            (mu, count)
        })
        .collect();
    let order = enumerate_partitions(k * m, d);
    let mut out = BTreeMap::new();
    for (idx, mu) in order.iter().enumerate() {
        let c = remaining[mu];
        if c < 0 {
            return Err(Error::Invariant(format!(
                "negative residual {c} at weight {mu} while peeling Schur polynomials"
            )));
        }
        if c == 0 {
            continue;
        }
        out.insert(mu.clone(), c as u64);
        for nu in &order[idx..] {
            let kmn = kostka(mu, nu.parts())? as i64;
            if kmn != 0 {
                *remaining.get_mut(nu).expect("present") -= c * kmn;
            }
        }
    }
    Ok(out)
}

/// Multiplicity of `λ` in `Sym^k(Sym^m C^d)` from [`brute_force_decomposition`].
pub fn brute_force_plethysm(lambda: &Partition, k: usize, m: usize, d: usize) -> Result<u64> {
    if lambda.length() > d {
        return domain(format!("λ = {lambda} has more than d = {d} parts"));
    }
    if lambda.size() != k * m {
        return domain(format!(
            "λ = {lambda} has size {}, expected {}",
            lambda.size(),
            k * m
        ));
    }
    Ok(brute_force_decomposition(k, m, d)?
        .get(lambda)
        .copied()
        .unwrap_or(0))
}

/// Exponent vectors of length `d` summing to `m`.
fn compositions(m: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(left - e, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, d, &mut Vec::with_capacity(d), &mut out);
    out
}

fn collect_multisets(
    monomials: &[Vec<usize>],
    start: usize,
    left: usize,
    acc: &mut [usize],
    weights: &mut BTreeMap<Vec<usize>, i64>,
) {
    if left == 0 {
        if acc.windows(2).all(|w| w[0] >= w[1]) {
            *weights.entry(acc.to_vec()).or_insert(0) += 1;
        }
        return;
    }
    for i in start..monomials.len() {
        for (a, e) in acc.iter_mut().zip(&monomials[i]) {
            *a += e;
        }
        collect_multisets(monomials, i, left - 1, acc, weights);
        for (a, e) in acc.iter_mut().zip(&monomials[i]) {
            *a -= e;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn h_in_p_small() {
        assert_eq!(
            h_in_p(1),
            PExpr::from_terms(1, [(p(&[1]), q(1, 1))]).unwrap()
        );
        assert_eq!(
            h_in_p(2),
            PExpr::from_terms(2, [(p(&[1, 1]), q(1, 2)), (p(&[2]), q(1, 2))]).unwrap()
        );
        for m in 1..=8 {
            assert_eq!(h_in_p(m).coefficient(&Partition::row(m)), q(1, m as i64));
        }
    }

    #[test]
    fn plethysm_p_into_examples() {
        let p1 = PExpr::power_sum(p(&[1]));
        assert_eq!(plethysm_p_into(2, &p1), PExpr::power_sum(p(&[2])));
        let h3 = h_in_p(3);
        assert_eq!(plethysm_p_into(1, &h3), h3);
        assert_eq!(
            plethysm_p_into(2, &h_in_p(2)),
            PExpr::from_terms(4, [(p(&[2, 2]), q(1, 2)), (p(&[4]), q(1, 2))]).unwrap()
        );
    }

    #[test]
    fn plethysm_identity_and_small_cases() {
        for m in 1..=5 {
            assert_eq!(plethysm_h(1, m).unwrap(), h_in_p(m));
        }
        let dec = plethysm_decomposition(2, 2, DEFAULT_DEGREE_LIMIT).unwrap();
        assert_eq!(dec, vec![(p(&[4]), 1), (p(&[2, 2]), 1)]);
        let dec = plethysm_decomposition(2, 3, DEFAULT_DEGREE_LIMIT).unwrap();
        assert_eq!(dec, vec![(p(&[6]), 1), (p(&[4, 2]), 1)]);
    }

    #[test]
    fn degree_limit_is_enforced() {
        assert!(matches!(plethysm_h(4, 5), Err(Error::Resource(_))));
        assert!(plethysm_h_with_limit(4, 5, 20).is_ok());
    }

    #[test]
    fn schur_coefficients_of_p1_squared() {
        let f = PExpr::power_sum(p(&[1, 1]));
        assert_eq!(schur_coefficient(&f, &p(&[2])).unwrap(), q(1, 1));
        assert_eq!(schur_coefficient(&f, &p(&[1, 1])).unwrap(), q(1, 1));
        assert!(schur_coefficient(&f, &p(&[3])).is_err());
        for m in 1..=7 {
            assert_eq!(
                schur_coefficient(&h_in_p(m), &Partition::row(m)).unwrap(),
                q(1, 1)
            );
        }
    }

    #[test]
    fn plethysm_coefficient_examples() {
        assert_eq!(plethysm_coefficient(&p(&[4]), 2, 2).unwrap(), 1);
        assert_eq!(plethysm_coefficient(&p(&[3, 1]), 2, 2).unwrap(), 0);
        assert_eq!(plethysm_coefficient(&p(&[2, 2]), 2, 2).unwrap(), 1);
        assert!(plethysm_coefficient(&p(&[2, 2]), 2, 3).is_err());
    }

    #[test]
    fn weyl_dim_examples() {
        for m in 0..6 {
            for d in 1..5 {
                assert_eq!(
                    weyl_dim(&Partition::row(m), d),
                    binomial((m + d - 1) as u128, (d - 1) as u128)
                );
            }
        }
        assert_eq!(weyl_dim(&p(&[1, 1]), 2), 1);
        assert_eq!(weyl_dim(&p(&[2, 2]), 2), 1);
        assert_eq!(weyl_dim(&p(&[2, 1]), 3), 8);
        assert_eq!(weyl_dim(&p(&[1, 1, 1]), 2), 0);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_plethysm(&p(&[4]), 2, 2, 2).unwrap(), 1);
        assert_eq!(brute_force_plethysm(&p(&[2, 2]), 2, 2, 2).unwrap(), 1);
        assert_eq!(brute_force_plethysm(&p(&[2, 1, 1]), 2, 2, 3).unwrap(), 0);
        assert_eq!(brute_force_plethysm(&p(&[3, 1]), 2, 2, 4).unwrap(), 0);
    }

    #[test]
    fn brute_force_resource_guard() {
        assert!(matches!(
            brute_force_decomposition(6, 4, 10),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn product_merges_parts() {
        let a = PExpr::power_sum(p(&[3, 1]));
        let b = PExpr::power_sum(p(&[2, 1]));
        assert_eq!(&a * &b, PExpr::power_sum(p(&[3, 2, 1, 1])));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = PExpr::power_sum(p(&[2]));
        let b = a.scaled(&q(-1, 1));
        assert!((&a + &b).is_zero());
    }
}
