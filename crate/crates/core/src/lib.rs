//! Computable groups, exhaustions, conjugacy tools and finite-scale
//! witness constructions for ultrafilter combinatorics on countable groups.

pub mod classify;
pub mod conjugacy;
pub mod dtc;
pub mod error;
pub mod group;
pub mod groups;
pub mod num;
pub mod witness;

pub use error::{Error, Result};
