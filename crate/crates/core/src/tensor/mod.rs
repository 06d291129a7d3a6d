//! Exact sparse vectors in `V^{⊗q}`, `V = Q^d`, with the commuting actions
//! of `GL_d` (diagonal `a^{⊗q}`) and `S_q` (position permutations).
//!
//! Coefficients are rationals. The adjoint of a real matrix is its
//! transpose, so the standard inner product needs no conjugation.

mod hwv;
mod isotypic;
mod ket;
mod matrix;
mod perm;
mod word;

pub use hwv::{highest_weight_vector, is_highest_weight_vector, raising_apply, slater};
pub use isotypic::{isotypic_project, MAX_PROJECTOR_DEGREE};
pub use ket::{
    apply_matrix, inner, overlap_with_matrix, permute, weight_component, SparseKet, DENSE_LIMIT,
};
pub use matrix::RationalMatrix;
pub use perm::PermutationMap;
pub use word::{weight_of, Weight, Word};
