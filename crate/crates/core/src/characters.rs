//! Irreducible characters of the symmetric group and the coefficients built
//! from them.
//!
//! Characters are evaluated with the Murnaghan–Nakayama rule on beta-sets:
//! removing a border strip of length `r` from `λ` is the same as moving one
//! bead of the beta-set down by `r`, with sign `(-1)^{height}` where the
//! height is the number of beads jumped over.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::partitions::{partitions_of, Partition};

/// A conjugacy class of `S_q`, labelled by the cycle lengths of its elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        CycleType(cycles)
    }

    /// The identity class `1^q`.
    pub fn identity(q: usize) -> Self {
        CycleType(Partition::rectangle(1, q))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// Centralizer order `z_μ = Π_r r^{m_r} m_r!`.
    pub fn z_order(&self) -> u128 {
        self.0
            .multiplicities()
            .into_iter()
            .map(|(r, m)| (r as u128).pow(m as u32) * factorial(m))
            .product()
    }

    /// Number of permutations in the class, `q!/z_μ`.
    pub fn class_size(&self) -> u128 {
        factorial(self.degree()) / self.z_order()
    }

    /// Class of `g²` for `g` in this class. An odd `r`-cycle squares to an
    /// `r`-cycle; an even one splits into two `r/2`-cycles.
    pub fn square(&self) -> CycleType {
        let mut parts = Vec::with_capacity(2 * self.0.length());
        for &r in self.0.parts() {
            if r % 2 == 1 {
                parts.push(r);
            } else {
                parts.push(r / 2);
                parts.push(r / 2);
            }
        }
        CycleType(Partition::from_unsorted(parts))
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Centralizer order of the class `μ`.
pub fn z_order(mu: &CycleType) -> u128 {
    mu.z_order()
}

/// All conjugacy classes of `S_q`.
pub fn classes(q: usize) -> Vec<CycleType> {
    partitions_of(q).into_iter().map(CycleType).collect()
}

/// `(shape, remaining cycles) -> χ`.
type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

thread_local! {
    static MN_MEMO: RefCell<MnMemo> = RefCell::new(HashMap::new());
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.degree() {
        return domain(format!(
            "character needs equal sizes, got shape {lambda} and class {}",
            mu.partition()
        ));
    }
    Ok(mn_rec(lambda.parts(), mu.partition().parts()))
}

fn mn_rec(shape: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    if shape.len() == 1 {
        // trivial character
        return 1;
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(v) = MN_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let len = shape.len();
    // beta-set, strictly decreasing
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let n = moved.len();
        let new_shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (n - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&new_shape, rest);
    }
    MN_MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

fn check_sizes(ps: &[&Partition]) -> Result<usize> {
    let q = ps[0].size();
    if ps.iter().any(|p| p.size() != q) {
        let sizes: Vec<usize> = ps.iter().map(|p| p.size()).collect();
        return domain(format!("arguments must have equal sizes, got {sizes:?}"));
    }
    Ok(q)
}

fn exact_quotient(num: BigInt, den: BigInt, what: &str) -> Result<u64> {
    let (quo, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "{what} is not an integer: {num}/{den}"
        )));
    }
    quo.to_u64()
        .ok_or_else(|| Error::Invariant(format!("{what} is negative or too large: {quo}")))
}

/// Kronecker coefficient `g(λ, μ, ν)`: multiplicity of the trivial
/// representation in `S^λ ⊗ S^μ ⊗ S^ν`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let q = check_sizes(&[lambda, mu, nu])?;
    let mut sum = BigInt::zero();
    for rho in classes(q) {
        let v = mn_character(lambda, &rho)? * mn_character(mu, &rho)? * mn_character(nu, &rho)?;
        sum += BigInt::from(v) * BigInt::from(rho.class_size());
    }
    exact_quotient(sum, BigInt::from(factorial(q)), "Kronecker coefficient")
}

/// Multiplicity of the trivial representation in `S^λ ⊗ Sym²(S^μ)`.
///
/// Uses the symmetric-square character `(χ(g)² + χ(g²))/2`.
pub fn symmetric_kronecker(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let q = check_sizes(&[lambda, mu])?;
    let mut sum = BigInt::zero();
    for rho in classes(q) {
        let chi_mu = mn_character(mu, &rho)?;
        let sym2 = chi_mu * chi_mu + mn_character(mu, &rho.square())?;
        let v = mn_character(lambda, &rho)? * sym2;
        sum += BigInt::from(v) * BigInt::from(rho.class_size());
    }
    exact_quotient(
        sum,
        BigInt::from(2u8) * BigInt::from(factorial(q)),
        "symmetrized Kronecker coefficient",
    )
}
