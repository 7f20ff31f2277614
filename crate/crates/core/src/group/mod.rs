//! Group handles, finite subsets, exhaustions and set oracles.

mod element;
mod exhaustion;
mod handle;
mod oracle;
mod spec;
mod subset;

pub use element::Element;
pub use exhaustion::{Exhaustion, Schedule, DEFAULT_PRODUCT_BUDGET};
pub use handle::Group;
pub use oracle::{SetOracle, SetSpec};
pub use spec::GroupSpec;
pub use subset::{FiniteSubset, Side};
