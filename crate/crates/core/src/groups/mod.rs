//! Concrete groups and their arithmetic.

pub mod affine;
pub mod heisenberg;
pub mod perm;
pub mod redpow;
pub mod word;

pub use affine::Affine;
pub use heisenberg::Triple;
pub use perm::FinitePermutation;
pub use redpow::{FiniteGroup, Reduced};
pub use word::Word;
pub mod fc;
pub mod hom;

pub use fc::{fc_oracle, icc_witness, Escape};
pub use hom::Homomorphism;
