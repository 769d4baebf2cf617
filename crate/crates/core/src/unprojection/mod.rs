//! The data of the type II_1 unprojection: original relations, the maps
//! `u1, u2`, the connecting maps `T_p`, the linear relations for every
//! `n >= 2` and the quadratic relation for `n = 2, 3`.

mod connecting;
mod data;
mod quadratic;
mod reid;
mod relations;

pub use connecting::{connecting_map, AltTerm, ConnectingMap};
pub use data::{build_data, UnprojectionData};
pub use quadratic::{
    adjugate3, double_adjoint, quad_a, quad_a_from, quad_b, quad_coefficients, quad_coefficients_from, quadratic_q,
    quadratic_q_from, IntegralityAudit, QuadCoefficients, QuadInputs,
};
pub use reid::{pfaffians_5x5, reid_n2, ReidData};
pub(crate) use relations::linear_relations_from;
pub use relations::{
    ideal_generators, linear_relations, sigma, sigma_with, QuadraticStatus, RelationSet, SigmaSign, SigmaTable,
};
