//! Exact generalized inverses and EP-type classification in finite rings
//! with involution.
//!
//! The crate builds small `*`-rings ([`ring`]), solves the defining equation
//! systems of generalized inverses by exhaustive search ([`solver`]), derives
//! the named inverses from those solutions ([`inverse`]) and classifies
//! elements as EP, central EP or `*`-DMP through several independent
//! characterizations ([`classify`]). [`theorem`] runs whole-ring checks of
//! those characterizations.

pub mod classify;
pub mod counterexample;
pub mod error;
pub mod inverse;
pub mod parse;
pub mod report;
pub mod ring;
pub mod solver;
pub mod survey;
pub mod theorem;

pub use error::{Error, Result};
pub use parse::{parse_elem, parse_ring};
pub use ring::{make_gauss, make_matrix_ring, make_zn, Elem, Involution, StarRing};
pub use solver::{check_witness, solve, SystemId, Witness};
