//! Exact arithmetic kernel: rational coefficients, sparse Laurent
//! polynomials in several variables, exact division and determinants.

mod det;
mod json;
mod poly;
mod ratfn;

pub use det::{det, det_bareiss, det_cofactor, COFACTOR_MAX};
pub use json::PolyJson;
pub use poly::{Coeff, LaurentPoly, Monomial, PolyDisplay};
pub use ratfn::RationalFn;
