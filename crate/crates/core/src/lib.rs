//! Exact computation of Schur, symplectic and orthogonal Schur functions,
//! their skew versions, and machine checks of the identities relating them.

pub mod cli;
pub mod error;
pub mod genfunc;
pub mod identity;
pub mod laurent;
pub mod partition;
pub mod skew_bcd;
pub mod skew_schur;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, RationalFn};
pub use partition::{GTChain, GeneralizedPartition};
