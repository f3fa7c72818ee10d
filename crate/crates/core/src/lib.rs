pub mod braid;
pub mod checks;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod knot;
pub mod poly;
pub mod semigroup;
pub mod signature;

pub use error::{Error, Result};
pub use knot::{KnotPair, TorusKnot};
