//! Free pre-Lie and free Lie algebras over graded decorated rooted trees.
//!
//! The library works with four carriers of the same story:
//!
//! * planar decorated rooted trees with the left Butcher product `∘↘` and
//!   left grafting `↘` ([`products::left_butcher`], [`products::left_graft`]),
//! * non-planar decorated rooted trees with the Butcher product `⊳` (NAP)
//!   and pre-Lie grafting `→` ([`products::butcher`], [`products::graft`]),
//! * decorated planar binary trees, i.e. the free magma, with `∨` and the
//!   rescaled product `∗` ([`magma`]),
//! * noncommutative polynomials modelling the enveloping algebra, hosting
//!   the free Lie algebra via commutators ([`lie`]).
//!
//! On top of the carriers sit a family of monomial well-orders ([`order`]),
//! homogeneous ideal spanning/echelonization with Mora-style canonical
//! forms ([`ideal`]), the monomial-basis map Ψ̃ for the free pre-Lie
//! algebra ([`psi`]), and monomial bases of free Lie algebras obtained by
//! pushing the complement O(I) through the morphism Φ ([`lie`]).
//!
//! All coefficients are exact rationals; nothing here floats.

pub mod alphabet;
pub mod echelon;
pub mod enumerate;
pub mod error;
pub mod ideal;
pub mod lie;
pub mod magma;
pub mod order;
pub mod parse;
pub mod poly;
pub mod products;
pub mod psi;
pub mod tree;
pub mod verify;

pub use alphabet::{Alphabet, GenId, Generator};
pub use error::Error;
pub use poly::{Coeff, LinCombo};
pub use tree::{BinaryTree, PlanarTree, Tree};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
