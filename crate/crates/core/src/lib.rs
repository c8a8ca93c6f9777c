//! Exact free graded Lie algebra arithmetic with a truncated
//! Baker-Campbell-Hausdorff kernel, DGLA models of cells, and the symmetric
//! model of the triangle and of `k`-gons.
//!
//! Elements live in a free graded associative algebra truncated by word
//! length ([`Space`]); Lie elements are represented by their graded-commutator
//! expansions. All coefficients are exact rationals.

pub mod action;
pub mod bch;
pub mod bernoulli;
pub mod certificate;
pub mod cell;
pub mod element;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod lyndon;
pub mod random;
pub mod rational;
pub mod serial;
pub mod substitution;
pub mod suites;
pub mod symmetric;
pub mod verify;

pub use action::SignedPermutationAction;
pub use bch::{bch, bch_coefficient_table, bch_list};
pub use cell::{CellModel, Orientation, Realisation, Rule};
pub use element::{Element, Word};
pub use error::{Error, Result};
pub use generators::{Generator, GeneratorTable, Space};
pub use lyndon::{is_lie_element, lyndon_coordinates, LyndonMonomial};
pub use rational::Rational;
pub use substitution::Substitution;
