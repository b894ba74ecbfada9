//! Exact symbolic engine for the universal enveloping algebra of osp(1|2).
//!
//! The crate rewrites elements of U(osp(1|2)) and its tensor powers to a PBW
//! normal form with exact rational coefficients, constructs the universal
//! R-matrix and the braided conjugation action of the symmetric group, builds
//! the intermediate Casimir elements attached to arbitrary subsets of tensor
//! legs, and mechanically certifies that they centralize the diagonal action
//! and satisfy the Bannai-Ito structure relations. A concrete 3-dimensional
//! matrix representation provides an independent numeric cross-check of every
//! symbolic identity via Kronecker products.

pub mod bi;
pub mod casimir;
pub mod error;
pub mod expr;
pub mod parse;
pub mod pbw;
pub mod perm;
pub mod repnum;
pub mod rmatrix;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use pbw::{casimir, BracketKind, Generator, PbwElement, PbwMonomial};
pub use scalar::Scalar;
pub use tensor::{TensorElement, TensorMonomial};
