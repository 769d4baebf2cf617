//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every [`Polynomial`] carries a shared [`VariableTable`]; arithmetic between
//! polynomials over different tables is rejected. Terms are kept sorted in
//! graded reverse lexicographic order with no zero coefficients, so structural
//! equality is mathematical equality.

mod accum;
mod grading;
mod matrix;
mod monomial;
mod parse;
mod poly;
pub mod random;
mod subst;
mod table;

pub use accum::TermAccumulator;
pub use grading::{weighted_degree, Grading, Homogeneity};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::{poly_arith, ArithKind, Coeff, Polynomial};
pub use subst::{substitute, SubstitutionDocument, SubstitutionSpec};
pub use table::{make_ambient_ring, VariableTable};
