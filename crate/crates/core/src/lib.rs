//! Permutation module categories over Deligne powers of a modular tensor
//! category.
//!
//! For a finite G-set X and a group element g, the category `C^{⊠O_g}` is a
//! module category over `C^{⊠X}`: a multi-index object acts on the factor of
//! a `<g>`-orbit by the tensor product of its entries in the order
//! `x_o, g^-1 x_o, g^-2 x_o, ..`, and the associator is a shuffle braid. This
//! crate builds these braid words, evaluates them on fusion-tree bases of a
//! numerically given anyon model, verifies the module axioms and the
//! naturality of the transformation `α⁺(U) ⇒ α⁻(ᵍU)`, and constructs the
//! permutation modular invariant `Z_{ī,j̄} = δ_{j̄, gī}`.

pub mod alpha;
pub mod category;
pub mod cli;
pub mod error;
pub mod group_action;
pub mod permutation_module;
pub mod sweep;

pub use error::{Error, Result};
