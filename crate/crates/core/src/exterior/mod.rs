//! Exterior powers of free modules, Koszul differentials and alternating
//! products of module maps.

mod binomial;
mod complex;
mod maps;
mod wedge;

pub use binomial::{alternating_binomial_sum, binomial, expected_rank};
pub use complex::{phi_map, SecondComplex};
pub use maps::{alt_apply, alt_term, anticommutator_check, anticommutator_with, induced_wedge, koszul_coefficient, koszul_diff, LinearForm, ModuleMap};
pub use wedge::{ExteriorElement, WedgeIndex, MAX_RANK};
