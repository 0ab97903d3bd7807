//! Exact revealed-preference testing against theories encoded as groups of
//! transformations.
//!
//! The engine is generic over an exact [`Scalar`] field; [`Rational`] and the
//! `Q*` aliases fix it to arbitrary precision rationals.

pub mod axioms;
pub mod behavioral;
pub mod closure;
pub mod data;
pub mod error;
pub mod json;
pub mod oracle;
pub mod relation;
pub mod scalar;
pub mod theory;
pub mod universe;
pub mod verdict;

pub use error::{Error, Result};
pub use relation::Relation;
pub use scalar::Scalar;
pub use universe::{Alternative, Universe};

/// Arbitrary precision rational numbers.
pub type Rational = num_rational::BigRational;
pub type QAlternative = Alternative<Rational>;
pub type QUniverse = Universe<Rational>;
