//! Exact m-closures and ordered-partition closures of finite permutation
//! groups at desk scale, product-action constructions, and a verifier for
//! the closure formula of wreath products in product action.
//!
//! Groups are held as fully enumerated element sets. Points are 0-based
//! internally; cycle notation and every other user-facing format is
//! 1-based. Composition is a right action: `x^(gh) = (x^g)^h`.

pub mod actions;
pub mod catalog;
pub mod closures;
pub mod error;
pub mod exec;
pub mod group;
pub mod groupspec;
pub mod perm;
pub mod verifier;

pub use actions::{OrbitColoring, OrderedPartition, PointTuple, WreathElement};
pub use closures::{m_closure, partition_closure, ClosureKind, ClosureResult};
pub use error::{Error, Result};
pub use exec::{Budget, Config, Exec};
pub use group::{NamedGroup, PermGroup};
pub use groupspec::GroupSpec;
pub use perm::{Permutation, Point};
