//! Exact verification suites.
//!
//! Every check compares two polynomial expressions term by term over `Q`
//! and returns a [`CheckReport`]. A failing report carries a [`Witness`]:
//! the location of the first nonzero difference and its leading terms.
//! [`run_suite`] and [`run_all`] return reports sorted by suite name and
//! parameters, so transcripts are reproducible for a fixed seed.

mod adjugate;
mod bigcheck;
mod complex;
mod diagram;
mod grading;
mod reid;
mod report;
mod sl3;
mod suite;

pub use adjugate::{check_adjugate, ADJUGATE};
pub use bigcheck::{check_bigcheck, check_bigcheck_with, phi3, BigCheckOptions, BigCheckScaffold, BIGCHECK};
pub use complex::{
    check_anticommutation, check_binomial_rp, check_eta, check_koszul_d2, check_phi_complex, second_complex_of_rank,
    ANTICOMMUTATION, BINOMIAL_RP, ETA, KOSZUL_D2, PHI_COMPLEX,
};
pub use diagram::{
    check_alt_identities, check_alt_identities_upto, check_basic_formula, check_basic_formula_on, check_big_diagram, check_big_diagram_on,
    check_big_diagram_with, check_first_square, check_first_square_on, generic_maps, ALT_IDENTITIES, BASIC_FORMULA,
    BIG_DIAGRAM, FIRST_SQUARE,
};
pub use grading::{audit_homogeneity, check_grading, check_spec_grading, expected_degree, GRADING};
pub use reid::{check_reid_consistency, check_reid_consistency_with, REID};
pub use report::{reports_to_json, sort_reports, CheckReport, Params, Verdict, Witness, WITNESS_TERMS};
pub use sl3::{check_sl3_invariance, det3, random_transvection_product, transvection, IntMatrix3, IDENTITY3, SL3};
pub use suite::{
    run_all, run_suite, sl3_matrices, Perturbation, Suite, ALT_IDENTITIES_MAX_PQ, BASIC_FORMULA_MAX_PQ, BINOMIAL_MAX_N, COMPLEX_MAX_RANK,
    ETA_MIN_N_MAX, NEGATIVE_CONTROLS, SL3_MAX_FACTORS, SL3_SAMPLES,
};
