//! Exact symbolic algebra for vertex operators, W-type operators and tau
//! functions on Schur functions and Schur Q-functions.

pub mod cli;
pub mod error;
pub mod identities;
pub mod inner;
pub mod json;
pub mod lincomb;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod straighten;
pub mod tau;
pub mod verify;
pub mod vertex;
pub mod wops;

pub use error::{Error, Result};
pub use lincomb::{Basis, LinComb};
pub use partition::{IntVector, Partition, StrictPartition};
pub use poly::{Monomial, Poly};
pub use rational::Rational;
