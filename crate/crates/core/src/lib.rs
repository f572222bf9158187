//! Exact cylindrical algebraic decomposition.
//!
//! Builds sign- and truth-invariant decompositions of real space by
//! projection and lifting, including layered sub-decompositions (top
//! dimension layers only) and variety sub-decompositions (cells on an
//! equational constraint). All arithmetic is exact: rational coefficients,
//! real algebraic sample coordinates.

pub mod analysis;
pub mod arith;
pub mod error;
pub mod interval;
pub mod lifting;
pub mod parse;
pub mod point;
pub mod poly;
pub mod projection;
pub mod rat;
pub mod realalg;
pub mod unipoly;
pub mod var;

pub use error::{CadError, Result};
pub use poly::MultiPoly;
pub use rat::Rational;
pub use realalg::{AlgebraicNumber, SamplePoint};
pub use unipoly::UniPoly;
pub use var::{Var, VarOrder};
