//! Exact plethysm decompositions of `Sym^k(Sym^m C^d)` and explicit
//! highest-weight-vector certificates for the even components `2λ` of
//! `Sym^k(Sym^{2n} C^d)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: integer partitions, conjugation, dominance, enumeration.
//! * [`tableaux`]: semistandard Young tableaux and Kostka numbers.
//! * [`characters`]: symmetric-group characters (Murnaghan–Nakayama),
//!   centralizer orders, Kronecker and symmetrized Kronecker coefficients.
//! * [`symfunc`]: power-sum symmetric functions, the plethysm `h_k[h_m]`,
//!   Schur extraction, and a brute-force monomial oracle.
//! * [`tensor`]: exact sparse vectors in `V^{⊗q}` with the commuting
//!   `GL_d` and `S_q` actions, Slater vectors, highest weight vectors and
//!   isotypic projectors.
//! * [`certificate`]: the sum-of-squares certificate search and its
//!   cross-checks.
//! * [`gct`]: a toy evaluator of the Kronecker/plethysm occurrence criterion
//!   for the permanent orbit closure.
//!
//! All arithmetic is exact (`i64`/`u128` for counts, [`num_rational::BigRational`]
//! for everything that can leave the integers).

pub mod certificate;
pub mod characters;
mod error;
pub mod gct;
pub mod partitions;
pub mod symfunc;
pub mod tableaux;
pub mod tensor;

pub use error::{Error, Result};
pub use partitions::Partition;

/// Arbitrary-precision rational used for every exact coefficient.
pub type Rational = num_rational::BigRational;

/// Parses `"3"`, `"-1/2"` or `"7/3"` into an exact rational. The minus sign
/// may also be U+2212.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .replace('\u{2212}', "-")
        .parse::<Rational>()
        .map_err(|_| Error::Domain(format!("malformed rational {s:?}")))
}
