//! Exact "bosonic" (q,p)-number calculus and the Alexander, Jones, and HOMFLY
//! polynomials of the torus knots T(2m+1,2) and torus links L(2m,2).

pub mod azform;
pub mod error;
pub mod expr;
pub mod laurent;
pub mod output;
pub mod qp;
pub mod skein;
pub mod substitutions;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{rat, LaurentPoly, Monomial, Rational, SubstitutionMap, Var};
