//! Canonical bases of higher-level Fock spaces for `U_q(sl_e^)`.
//!
//! The crate computes the canonical basis vectors `G^s(mu)` of the module
//! `M^{(s_1)} ⊗ ... ⊗ M^{(s_r)}` sitting inside the level-`r` Fock space
//! `F^s`, for every `e`-multiregular multipartition `mu`. The fast route is
//! a recursive LLT-type algorithm ([`canonical`]); a slow but independent
//! route builds Uglov's bar involution from semi-infinite wedges
//! ([`wedge`]) and is used to check the fast one.
//!
//! ```
//! use higher_llt::{canonical_vector, Charge, Multipartition};
//!
//! let s = Charge::new(2, [0, 0]).unwrap();
//! let mu: Multipartition = "2,1|1".parse().unwrap();
//! let g = canonical_vector(&mu, &s).unwrap();
//! assert_eq!(g.vector().len(), 6);
//! ```
//!
//! Modules, bottom-up:
//!
//! - [`combinat`]: partitions, multipartitions, nodes, residues, ladders.
//! - [`laurent`]: exact arithmetic in `Z[q, q^-1]`.
//! - [`fock`]: the Fock space and the operators `f_i`, `e_i`, `f_i^(m)`.
//! - [`llt`]: the classical level-one LLT algorithm.
//! - [`canonical`]: the higher-level recursion, batch driver, `e = ∞` mode.
//! - [`wedge`]: wedge straightening, Uglov's bar involution, oracle bases.
//! - [`cli`]: configuration, report rendering and JSON schema for the binary.

pub mod canonical;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod llt;
mod strip;
pub mod wedge;

pub use canonical::{
    canonical_basis_up_to, canonical_vector, canonical_vector_einf, decomposition_matrix,
    CanonicalBasis, CanonicalBasisEntry, DecompositionMatrix, TieBreak,
};
pub use combinat::{Charge, Ladder, Multipartition, Node, Partition};
pub use error::{Error, Result};
pub use fock::{FockVector, WeightData};
pub use laurent::{BarSymmetric, LaurentPoly};
pub use llt::{auxiliary_vector, llt_canonical, LevelOne};
pub use wedge::{Multicharge, WedgeOracle};
