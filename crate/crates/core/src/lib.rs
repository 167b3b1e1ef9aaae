//! Multilevel (block) Toeplitz matrices over the complex numbers and the
//! unitary transforms that make them symmetric.
//!
//! A p-level Toeplitz matrix is a Toeplitz arrangement of blocks that are
//! themselves (p-1)-level Toeplitz, stored here as the compact tensor of its
//! `prod(2*n_i - 1)` distinct coefficients ([`MultilevelToeplitz`]). Every
//! such matrix is unitarily similar to a complex symmetric matrix, and the
//! similarity factors into one small unitary block per level
//! ([`TransitionPlan`]), which keeps the transform cheap to apply without
//! ever materializing the full operator.
//!
//! The crate provides:
//!
//! - dense complex kernels and structure checks ([`linalg`]);
//! - the compact representation with expansion, extraction and structure
//!   detection ([`toeplitz`]);
//! - the two families of symmetrizing transitions, dense or matrix-free
//!   ([`symmetrize`](mod@symmetrize));
//! - the inverse direction for 2^p-sided matrices: deciding whether a
//!   symmetric matrix is the image of a Toeplitz one and recovering it
//!   ([`converse`]).

pub mod converse;
pub mod error;
pub mod linalg;
pub mod symmetrize;
pub mod toeplitz;

pub use converse::{
    build_u_p, desymmetrize, has_constant_antidiagonals_all_levels,
    has_q_level_constant_antidiagonals, AntiDiagReport,
};
pub use error::{Error, Result};
pub use linalg::{scaled_tol, ComplexMatrix, StructureVerdict, DEFAULT_TOL};
pub use symmetrize::{
    build_level_factor, build_transition, build_u, build_v, symmetrize,
    symmetrize_1level_direct, symmetrize_intermediate, Side, TransitionKind, TransitionPlan,
};
pub use toeplitz::{is_multilevel_toeplitz, LevelDims, MultilevelToeplitz};
