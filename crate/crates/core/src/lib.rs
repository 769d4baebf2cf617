//! Exact construction and verification of the type II_1 unprojection.
//!
//! * [`ring`]: sparse multivariate polynomials over the rationals, gradings,
//!   substitutions and small polynomial matrices.
//! * [`exterior`]: wedge powers of free modules, Koszul differentials and
//!   alternating products of module maps.
//! * [`unprojection`]: the data `f_p, u_1, u_2`, the connecting maps, the
//!   linear relations for every `n >= 2` and the quadratic relation for
//!   `n = 2, 3`.
//! * [`verify`]: exact verification suites producing [`verify::CheckReport`]s.

pub mod error;
pub mod exterior;
pub mod ring;
pub mod specs;
pub mod unprojection;
pub mod verify;

pub use error::{Error, Result};
pub use exterior::{ExteriorElement, LinearForm, ModuleMap, WedgeIndex};
pub use ring::{Grading, Homogeneity, Monomial, PolyMatrix, Polynomial, SubstitutionSpec, VariableTable};
pub use unprojection::{ideal_generators, QuadraticStatus, RelationSet, UnprojectionData};
pub use verify::{CheckReport, Verdict};
