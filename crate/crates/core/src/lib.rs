//! Reconstruction and list-reconstruction of integer vectors transmitted
//! over a channel with limited-magnitude errors.
//!
//! A transmitted vector `x ∈ Zⁿ` is received many times; each read has at
//! most `t` entries increased by at most `k+` or decreased by at most `k−`.
//! The crate provides
//!
//! * exact error-ball combinatorics ([`combinatorics`]),
//! * the two limited-magnitude distances ([`distances`]),
//! * lattice codes defined by splitter vectors over finite Abelian groups
//!   ([`lattice`]),
//! * min-based, majority-based and Sauer–Shelah list reconstruction
//!   ([`reconstruction`]),
//! * a seeded channel simulator ([`channel`]),
//! * min-based reconstruction over the simplex for tandem duplications
//!   ([`tandem`]),
//! * the text formats used by the CLI ([`textfmt`]).
//!
//! Every closed form in this crate is cross-checked in the test suite against
//! a brute-force enumeration.

pub mod channel;
pub mod code;
pub mod combinatorics;
pub mod distances;
mod error;
pub mod lattice;
pub mod params;
pub mod reconstruction;
pub mod tandem;
pub mod textfmt;
pub mod vector;

pub use code::{brute_force_decode, Code, ExplicitCode, WholeSpace};
pub use error::{Error, Result};
pub use params::ChannelParams;
pub use vector::{vector_add, EstimateWord, IntegerVector};
