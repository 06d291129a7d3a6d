//! Sum-of-squares certificates that the even Weyl module `2λ` occurs in
//! `Sym^k(Sym^{2n} C^d)`.
//!
//! For `λ ⊢ kn` with at most `k ≤ d` parts, let `v_λ` be the explicit
//! highest weight vector, `a` an invertible rational matrix and `π` a
//! position permutation, and put `w = π⁻¹·(a^{⊗kn} v_λ)`. Then
//! `v = σ(w ⊗ w)` lies in the `2λ`-isotypic component of `V^{⊗2kn}`, and
//! against `ψ = φ^{⊗k}`, `φ = Σ_i |i⟩^{⊗2n}`,
//!
//! ```text
//! ⟨v|ψ⟩ = Σ_{i ∈ [d]^k} ⟨a·v_λ | π·(i_1^n ⋯ i_k^n)⟩²
//! ```
//!
//! which is strictly positive as soon as one overlap is nonzero. The search
//! looks for `(a, x)` with `⟨a·v_λ | x⟩ ≠ 0` where `x` ranges over the
//! distinct rearrangements of `1^n 2^n ⋯ k^n`; two permutations with the same
//! image word give the same overlap, so `π` is only needed up to that image.
//!
//! Searching directly over `a` (rather than `g` with `a = gᵀ`) avoids any
//! inversion: every overlap is evaluated lazily with
//! [`overlap_with_matrix`].

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::symfunc::{plethysm_coefficient_with_limit, DEFAULT_DEGREE_LIMIT};
use crate::tensor::{
    apply_matrix, highest_weight_vector, inner, isotypic_project, overlap_with_matrix, permute,
    PermutationMap, RationalMatrix, SparseKet, Word, DENSE_LIMIT, MAX_PROJECTOR_DEGREE,
};
use crate::Rational;

/// Random matrix entries are drawn uniformly from `-ENTRY_BOUND..=ENTRY_BOUND`.
pub const ENTRY_BOUND: i64 = 3;

/// `(λ, k, n, d)` with `λ ⊢ kn`, `ℓ(λ) ≤ k ≤ d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub lambda: Partition,
    pub k: usize,
    pub n: usize,
    pub d: usize,
}

impl Case {
    pub fn new(lambda: Partition, k: usize, n: usize, d: usize) -> Result<Self> {
        let case = Case { lambda, k, n, d };
        case.validate()?;
        Ok(case)
    }

    fn validate(&self) -> Result<()> {
        let Case { lambda, k, n, d } = self;
        if *k == 0 || *n == 0 || *d == 0 {
            return domain("k, n and d must be positive");
        }
        if lambda.size() != k * n {
            return domain(format!(
                "λ = {lambda} has size {}, expected k·n = {}",
                lambda.size(),
                k * n
            ));
        }
        if lambda.length() > *k {
            return domain(format!("λ = {lambda} has more than k = {k} parts"));
        }
        if k > d {
            return domain(format!("k = {k} exceeds d = {d}"));
        }
        if *d > u8::MAX as usize {
            return domain(format!("d = {d} is too large"));
        }
        Ok(())
    }

    /// The even weight `2λ` being certified.
    pub fn doubled(&self) -> Partition {
        self.lambda.scale(2)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "λ=({}) k={} n={} d={}",
            self.lambda, self.k, self.n, self.d
        )
    }
}

/// The base word `1^n 2^n ⋯ k^n`.
pub fn base_word(k: usize, n: usize) -> Word {
    let letters: Vec<u8> = (1..=k as u8).collect();
    Word::blocks(&letters, n)
}

/// All distinct rearrangements of `1^n 2^n ⋯ k^n` in lexicographic order;
/// the base word comes first.
pub fn arrangement_words(k: usize, n: usize) -> Vec<Word> {
    fn rec(counts: &mut [usize], cur: &mut Vec<u8>, total: usize, out: &mut Vec<Word>) {
        if cur.len() == total {
            out.push(Word::blocks(cur, 1));
            return;
        }
        for l in 0..counts.len() {
            if counts[l] == 0 {
                continue;
            }
            counts[l] -= 1;
            cur.push(l as u8 + 1);
            rec(counts, cur, total, out);
            cur.pop();
            counts[l] += 1;
        }
    }
    let mut out = Vec::new();
    let mut counts = vec![n; k];
    rec(&mut counts, &mut Vec::with_capacity(k * n), k * n, &mut out);
    out
}

/// The position map sending the base word to `arrangement`, matching equal
/// letters in order.
pub fn canonical_pi(arrangement: &Word, k: usize, n: usize) -> Result<PermutationMap> {
    PermutationMap::stable_matching(&base_word(k, n), arrangement)
}

fn check_shapes(case: &Case, a: &RationalMatrix, pi: &PermutationMap) -> Result<()> {
    if a.dim() != case.d {
        return domain(format!(
            "matrix is {0}×{0}, expected d = {1}",
            a.dim(),
            case.d
        ));
    }
    if pi.degree() != case.k * case.n {
        return domain(format!(
            "permutation has degree {}, expected k·n = {}",
            pi.degree(),
            case.k * case.n
        ));
    }
    Ok(())
}

/// `Σ_{i ∈ [d]^k} ⟨a·v_λ | π·(i_1^n ⋯ i_k^n)⟩²`.
pub fn sum_of_squares(case: &Case, a: &RationalMatrix, pi: &PermutationMap) -> Result<Rational> {
    case.validate()?;
    check_shapes(case, a, pi)?;
    let v = highest_weight_vector(&case.lambda, case.d)?;
    sum_of_squares_for(&v, case, a, pi)
}

fn sum_of_squares_for(
    v: &SparseKet,
    case: &Case,
    a: &RationalMatrix,
    pi: &PermutationMap,
) -> Result<Rational> {
    let mut acc = Rational::zero();
    let mut tuple = vec![1u8; case.k];
    loop {
        let x = pi.apply(&Word::blocks(&tuple, case.n))?;
        let ov = overlap_with_matrix(v, a, &x)?;
        if !ov.is_zero() {
            acc += &ov * &ov;
        }
        // odometer over [d]^k
        let mut pos = case.k;
        loop {
            if pos == 0 {
                return Ok(acc);
            }
            pos -= 1;
            if (tuple[pos] as usize) < case.d {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
        }
    }
}

/// A witness that `⟨v|ψ⟩ > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub case: Case,
    pub a: RationalMatrix,
    pub arrangement: Word,
    pub pi: PermutationMap,
    /// `⟨a·v_λ | arrangement⟩`, nonzero.
    pub overlap: Rational,
    /// The full sum of squares, `≥ overlap²`.
    pub sum_of_squares: Rational,
    /// Number of matrices tried, including the successful one.
    pub attempts: usize,
}

impl Certificate {
    /// Re-checks the stored invariants from scratch.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.a.determinant().is_zero() {
            return Err("certificate matrix is singular".into());
        }
        if self.overlap.is_zero() {
            return Err("certificate overlap is zero".into());
        }
        if !self.sum_of_squares.is_positive() {
            return Err(format!(
                "sum of squares {} is not positive",
                self.sum_of_squares
            ));
        }
        if self.sum_of_squares < &self.overlap * &self.overlap {
            return Err("sum of squares is smaller than the witnessed term".into());
        }
        let base = base_word(self.case.k, self.case.n);
        match self.pi.apply(&base) {
            Ok(w) if w == self.arrangement => {}
            _ => return Err("π does not map the base word to the arrangement".into()),
        }
        let v = highest_weight_vector(&self.case.lambda, self.case.d).map_err(|e| e.to_string())?;
        let ov = overlap_with_matrix(&v, &self.a, &self.arrangement).map_err(|e| e.to_string())?;
        if ov != self.overlap {
            return Err(format!(
                "recomputed overlap {ov} differs from {}",
                self.overlap
            ));
        }
        let sos =
            sum_of_squares_for(&v, &self.case, &self.a, &self.pi).map_err(|e| e.to_string())?;
        if sos != self.sum_of_squares {
            return Err(format!("recomputed sum of squares {sos} differs"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Box<Certificate>),
    /// No certificate within the budget. This indicts the budget, not the
    /// mathematics.
    Exhausted {
        attempts: usize,
    },
}

fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..d)
            .map(|_| {
                (0..d)
                    .map(|_| rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND))
                    .collect()
            })
            .collect();
        let a = RationalMatrix::from_integers(&rows).expect("square by construction");
        if a.is_invertible() {
            return a;
        }
    }
}

/// Searches for `(a, x)` with `⟨a·v_λ | x⟩ ≠ 0`.
///
/// Attempt 1 uses the identity; later attempts draw invertible integer
/// matrices from a ChaCha8 stream seeded with `seed`. Each matrix scans the
/// arrangement words in order and stops at the first nonzero overlap.
pub fn find_certificate(case: &Case, seed: u64, budget: usize) -> Result<SearchOutcome> {
    case.validate()?;
    let v = highest_weight_vector(&case.lambda, case.d)?;
    let words = arrangement_words(case.k, case.n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..budget {
        let a = if attempt == 0 {
            RationalMatrix::identity(case.d)
        } else {
            random_invertible(&mut rng, case.d)
        };
        for x in &words {
            let overlap = overlap_with_matrix(&v, &a, x)?;
            if overlap.is_zero() {
                continue;
            }
            let pi = canonical_pi(x, case.k, case.n)?;
            let sum_of_squares = sum_of_squares_for(&v, case, &a, &pi)?;
            return Ok(SearchOutcome::Found(Box::new(Certificate {
                case: case.clone(),
                a,
                arrangement: x.clone(),
                pi,
                overlap,
                sum_of_squares,
                attempts: attempt + 1,
            })));
        }
    }
    Ok(SearchOutcome::Exhausted { attempts: budget })
}

/// `φ^{⊗k}` with `φ = Σ_i |i⟩^{⊗2n}`.
pub fn symmetric_probe(k: usize, n: usize, d: usize) -> Result<SparseKet> {
    let phi = SparseKet::from_terms(
        d,
        2 * n,
        (1..=d as u8).map(|i| (Word::blocks(&[i], 2 * n), Rational::from_integer(1.into()))),
    )?;
    let mut psi = SparseKet::basis(d, Word::blocks(&[], 0))?;
    for _ in 0..k {
        psi = psi.tensor(&phi)?;
    }
    Ok(psi)
}

/// `σ(w ⊗ w)` with `w = π⁻¹·(a^{⊗kn} v_λ)`, materialized.
pub fn doubled_coherent_state(cert: &Certificate) -> Result<SparseKet> {
    let case = &cert.case;
    let v = highest_weight_vector(&case.lambda, case.d)?;
    let w = permute(&cert.pi.inverse(), &apply_matrix(&cert.a, &v)?)?;
    let sigma = PermutationMap::interleave(2 * case.k * case.n)?;
    permute(&sigma, &w.tensor(&w)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseStatus {
    Verified,
    Exhausted,
    /// A cross-check disagreed; indicts the implementation.
    Failed(String),
}

impl CaseStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CaseStatus::Verified => "verified",
            CaseStatus::Exhausted => "exhausted",
            CaseStatus::Failed(_) => "failed",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub case: Case,
    pub status: CaseStatus,
    pub certificate: Option<Certificate>,
    /// Multiplicity of `2λ` in `Sym^k(Sym^{2n})` from the symmetric-function engine.
    pub oracle_multiplicity: u64,
    /// `Some(true)` if the materialized isotypic and inner-product checks ran and passed.
    pub projector_check: Option<bool>,
    /// Matrices tried.
    pub attempts: usize,
    pub elapsed: Duration,
}

/// Options for [`verify_case`] and [`sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub budget: usize,
    pub check_projector: bool,
    pub degree_limit: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            budget: 64,
            check_projector: false,
            degree_limit: DEFAULT_DEGREE_LIMIT,
        }
    }
}

/// Whether the materialized projector check is affordable for this case.
pub fn projector_check_feasible(case: &Case) -> bool {
    let q = 2 * case.k * case.n;
    let dense = (case.d as u128).checked_pow((case.k * case.n) as u32);
    q <= MAX_PROJECTOR_DEGREE && dense.is_some_and(|x| x <= DENSE_LIMIT)
}

fn projector_check(cert: &Certificate) -> Result<std::result::Result<(), String>> {
    let case = &cert.case;
    let v = doubled_coherent_state(cert)?;
    let projected = isotypic_project(&case.doubled(), &v)?;
    if projected != v {
        return Ok(Err(format!(
            "σ(w⊗w) is not fixed by the {} isotypic projector",
            case.doubled()
        )));
    }
    let psi = symmetric_probe(case.k, case.n, case.d)?;
    let value = inner(&v, &psi)?;
    if value != cert.sum_of_squares {
        return Ok(Err(format!(
            "⟨v|ψ⟩ = {value} but the lazy sum of squares is {}",
            cert.sum_of_squares
        )));
    }
    Ok(Ok(()))
}

/// Runs the search and every cross-check for one case.
pub fn verify_case(case: &Case, config: &SearchConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    case.validate()?;
    let oracle_multiplicity =
        plethysm_coefficient_with_limit(&case.doubled(), case.k, 2 * case.n, config.degree_limit)?;
    let outcome = find_certificate(case, config.seed, config.budget)?;
    let mut report = VerificationReport {
        case: case.clone(),
        status: CaseStatus::Exhausted,
        certificate: None,
        oracle_multiplicity,
        projector_check: None,
        attempts: config.budget,
        elapsed: Duration::ZERO,
    };
    if let SearchOutcome::Found(cert) = outcome {
        report.attempts = cert.attempts;
        report.status = match cert.check() {
            Err(msg) => CaseStatus::Failed(msg),
            Ok(()) if oracle_multiplicity == 0 => CaseStatus::Failed(format!(
                "certificate found but {} has multiplicity 0 in the plethysm",
                case.doubled()
            )),
            Ok(()) => CaseStatus::Verified,
        };
        if config.check_projector && projector_check_feasible(case) {
            let passed = projector_check(&cert)?;
            report.projector_check = Some(passed.is_ok());
            if let (Err(msg), CaseStatus::Verified) = (passed, &report.status) {
                report.status = CaseStatus::Failed(msg);
            }
        }
        report.certificate = Some(*cert);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Every case with `k ≤ d ≤ d_max`, `k ≤ k_max`, `n ≤ n_max`,
/// `λ ⊢ kn` with at most `k` parts, ordered by `k`, then `d`, then `n`, then
/// `λ` in decreasing lexicographic order.
pub fn sweep_cases(k_max: usize, n_max: usize, d_max: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for k in 1..=k_max {
        for d in k..=d_max {
            for n in 1..=n_max {
                for lambda in enumerate_partitions(k * n, k) {
                    cases.push(Case { lambda, k, n, d });
                }
            }
        }
    }
    cases
}

/// Verifies `cases` in parallel; reports come back in input order. A case
/// whose verification errors out is reported as failed and the sweep continues.
pub fn verify_cases(cases: &[Case], config: &SearchConfig) -> Result<Vec<VerificationReport>> {
    if let Some(c) = cases.iter().find(|c| 2 * c.k * c.n > config.degree_limit) {
        return Err(Error::Resource(format!(
            "case {c} needs degree 2kn = {} > {}",
            2 * c.k * c.n,
            config.degree_limit
        )));
    }
    for c in cases {
        c.validate()?;
    }
    Ok(cases
        .par_iter()
        .map(|case| {
            verify_case(case, config).unwrap_or_else(|e| VerificationReport {
                case: case.clone(),
                status: CaseStatus::Failed(e.to_string()),
                certificate: None,
                oracle_multiplicity: 0,
                projector_check: None,
                attempts: 0,
                elapsed: Duration::ZERO,
            })
        })
        .collect())
}

pub fn sweep(
    k_max: usize,
    n_max: usize,
    d_max: usize,
    config: &SearchConfig,
) -> Result<Vec<VerificationReport>> {
    verify_cases(&sweep_cases(k_max, n_max, d_max), config)
}

/// Flat, serializable view of a [`VerificationReport`]. Rationals are exact
/// fraction strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub lambda: Partition,
    pub k: usize,
    pub n: usize,
    pub d: usize,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<RationalMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<Word>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub overlap: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sum_of_squares: Option<String>,
    pub oracle_multiplicity: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projector_check: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<&VerificationReport> for CaseRecord {
    fn from(r: &VerificationReport) -> Self {
        let cert = r.certificate.as_ref();
        CaseRecord {
            lambda: r.case.lambda.clone(),
            k: r.case.k,
            n: r.case.n,
            d: r.case.d,
            status: r.status.label().to_string(),
            a: cert.map(|c| c.a.clone()),
            arrangement: cert.map(|c| c.arrangement.clone()),
            overlap: cert.map(|c| c.overlap.to_string()),
            sum_of_squares: cert.map(|c| c.sum_of_squares.to_string()),
            oracle_multiplicity: r.oracle_multiplicity,
            projector_check: r.projector_check,
            detail: match &r.status {
                CaseStatus::Failed(msg) => Some(msg.clone()),
                _ => None,
            },
        }
    }
}
