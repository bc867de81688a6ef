//! Action operads: groups `Λ(n)` over the symmetric groups with block sum and
//! diagonal operations, verification of their laws, and the constructions
//! built on them (Borel construction, clubs, multicategories, presentations).

pub mod borel;
pub mod braid;
pub mod cactus;
pub mod club;
pub mod fincat;
pub mod multicat;
pub mod operad;
pub mod perm;
pub mod presentation;
pub mod profunctor;
pub mod rewrite;

pub use braid::Braid;
pub use cactus::Cactus;
pub use fincat::FinCat;
pub use operad::{ActionOperad, OperadError, Symmetric, Trivial, Verdict};
pub use perm::{Perm, PermError};
