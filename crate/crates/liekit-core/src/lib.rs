//! Exact computations in the representation theory of finite-dimensional and
//! non-twisted affine Lie algebras.
//!
//! Everything is expressed through weights in an orthogonal ambient basis
//! (extended by level and grade coordinates in the affine case) and works in
//! exact rational arithmetic:
//!
//! * [`root_system`]: simple series A–G, direct sums, affine extensions and
//!   explicitly specified systems, with Cartan matrices, fundamental weights,
//!   Weyl vectors, marks and comarks.
//! * [`weyl`]: reflections, Weyl words, orbits and dominant-chamber
//!   normalisation with parity.
//! * [`formal`]: the algebra of formal exponents used for characters.
//! * [`modules`]: irreducible, Verma and parabolic Verma modules; weight
//!   multiplicities by the Weyl-character recurrence and by Freudenthal's
//!   formula; characters and the Weyl dimension formula.
//! * [`branching`]: branching coefficients driven by the injection fan, and
//!   tensor-product decomposition through diagonal embeddings.
//! * [`series`]: string and branching functions of affine modules as
//!   truncated power series.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod branching;
pub mod formal;
pub mod linalg;
pub mod modules;
pub mod root_system;
pub mod series;
pub mod weight;
pub mod weyl;

pub use branching::{Fan, OrthogonalDecomposition, SubalgebraSpec};
pub use formal::FormalElement;
pub use modules::{HighestWeightModule, ModuleDescriptor, ModuleKind};
pub use root_system::{RootSystem, Series};
pub use series::QSeries;
pub use weight::{Rational, Weight};
pub use weyl::{DominantResult, WeylWord};

use alloc::string::String;

/// Integer type used for multiplicities and branching coefficients.
pub type Multiplicity = num_bigint::BigInt;

/// Errors reported by every fallible operation of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two weights of different kind or ambient dimension were combined.
    #[error("weight mismatch: {0}")]
    Mismatch(String),
    /// The arguments are well-formed but outside the domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// The operation is not supported for this kind of input.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
