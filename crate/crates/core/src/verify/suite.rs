use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::adjugate::check_adjugate;
use super::bigcheck::{check_bigcheck, check_bigcheck_with, BigCheckOptions};
use super::complex::{check_anticommutation, check_binomial_rp, check_eta, check_koszul_d2, check_phi_complex};
use super::diagram::{
    check_alt_identities_upto, check_basic_formula_on, check_big_diagram_on, check_big_diagram_with, check_first_square_on,
    generic_maps,
};
use super::grading::{check_grading, check_spec_grading};
use super::reid::{check_reid_consistency, check_reid_consistency_with};
use super::report::{sort_reports, CheckReport, Params, Witness};
use super::sl3::{check_sl3_invariance, random_transvection_product, transvection, IDENTITY3};
use crate::error::{Error, Result};
use crate::specs;
use crate::unprojection::{build_data, ConnectingMap, SigmaSign};

/// Largest module rank for the generic complex suites.
pub const COMPLEX_MAX_RANK: usize = 6;
/// Largest `n` for the binomial identities.
pub const BINOMIAL_MAX_N: u64 = 12;
/// Largest `p + q` for the basic formula.
pub const BASIC_FORMULA_MAX_PQ: usize = 4;
/// Largest `p + q` for the alternating-product identities.
pub const ALT_IDENTITIES_MAX_PQ: usize = 3;
/// Smallest upper bound on `n` for the η suite.
pub const ETA_MIN_N_MAX: usize = 6;
pub const SL3_SAMPLES: usize = 10;
pub const SL3_MAX_FACTORS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    KoszulD2,
    Anticommutation,
    PhiComplex,
    FirstSquare,
    BigDiagram,
    BasicFormula,
    AltIdentities,
    Grading,
    Eta,
    BinomialRp,
    Bigcheck,
    Sl3,
    Reid,
    Adjugate,
    NegativeControls,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::KoszulD2,
        Suite::Anticommutation,
        Suite::PhiComplex,
        Suite::FirstSquare,
        Suite::BigDiagram,
        Suite::BasicFormula,
        Suite::AltIdentities,
        Suite::Grading,
        Suite::Eta,
        Suite::BinomialRp,
        Suite::Bigcheck,
        Suite::Sl3,
        Suite::Reid,
        Suite::Adjugate,
        Suite::NegativeControls,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::KoszulD2 => super::complex::KOSZUL_D2,
            Suite::Anticommutation => super::complex::ANTICOMMUTATION,
            Suite::PhiComplex => super::complex::PHI_COMPLEX,
            Suite::FirstSquare => super::diagram::FIRST_SQUARE,
            Suite::BigDiagram => super::diagram::BIG_DIAGRAM,
            Suite::BasicFormula => super::diagram::BASIC_FORMULA,
            Suite::AltIdentities => super::diagram::ALT_IDENTITIES,
            Suite::Grading => super::grading::GRADING,
            Suite::Eta => super::complex::ETA,
            Suite::BinomialRp => super::complex::BINOMIAL_RP,
            Suite::Bigcheck => super::bigcheck::BIGCHECK,
            Suite::Sl3 => super::sl3::SL3,
            Suite::Reid => super::reid::REID,
            Suite::Adjugate => super::adjugate::ADJUGATE,
            Suite::NegativeControls => NEGATIVE_CONTROLS,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::ParameterRange(format!("unknown suite `{s}`")))
    }
}

pub const NEGATIVE_CONTROLS: &str = "negative_controls";

/// Documented ways of breaking a hypothesis or a formula. Each must make
/// its suite fail with a nonzero witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perturbation {
    /// Reads `σ` with the opposite sign convention.
    SigmaSignFlip,
    /// Drops the factor 2 on the left of the big check identity.
    DropFactorTwo,
    /// Raises the z-power of the second summand of `T_2^1` by one, at `n = 3`.
    PerturbedTp,
    /// Replaces `u1, u2` by seeded random maps, at `n = 3`.
    GenericMaps { seed: u64 },
    /// Doubles `u2`, at `n = 3`.
    ScaledU2,
    /// Uses a transposition matrix, of determinant `-1`, for the `SL3` check.
    DeterminantMinusOne,
}

impl Perturbation {
    pub fn all(seed: u64) -> [Perturbation; 6] {
        [
            Perturbation::SigmaSignFlip,
            Perturbation::DropFactorTwo,
            Perturbation::PerturbedTp,
            Perturbation::GenericMaps { seed },
            Perturbation::ScaledU2,
            Perturbation::DeterminantMinusOne,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Perturbation::SigmaSignFlip => "sigma_sign_flip",
            Perturbation::DropFactorTwo => "drop_factor_two",
            Perturbation::PerturbedTp => "perturbed_tp",
            Perturbation::GenericMaps { .. } => "generic_maps",
            Perturbation::ScaledU2 => "scaled_u2",
            Perturbation::DeterminantMinusOne => "det_minus_one",
        }
    }

    /// The perturbed check itself; an error means it was rejected up front.
    pub fn run(self) -> Result<CheckReport> {
        match self {
            Perturbation::SigmaSignFlip => Ok(check_reid_consistency_with(SigmaSign::Flipped)),
            Perturbation::DropFactorTwo => Ok(check_bigcheck_with(BigCheckOptions { drop_factor_two: true }, None)),
            Perturbation::PerturbedTp => {
                let data = build_data(3)?;
                let tp = ConnectingMap::formal(2).with_z_power_shift(1, 1, 1)?;
                check_big_diagram_with(&data, 2, &tp, &ConnectingMap::formal(1))
            }
            Perturbation::GenericMaps { seed } => check_basic_formula_on(&generic_maps(&build_data(3)?, seed)?, 1, 1),
            Perturbation::ScaledU2 => {
                let data = build_data(3)?;
                let two = crate::ring::Polynomial::integer(data.table(), 2);
                let broken = data.with_maps(data.u1().clone(), data.u2().scale(&two))?;
                Ok(check_first_square_on(&broken))
            }
            Perturbation::DeterminantMinusOne => check_sl3_invariance(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        }
    }

    /// Passes iff the perturbed check fails with a nonzero witness, or is
    /// rejected at its precondition when that is the documented outcome.
    pub fn control(self) -> CheckReport {
        let params = Params::new().with("control", self.name());
        match (self.run(), self) {
            (Err(Error::Precondition(msg)), Perturbation::DeterminantMinusOne) => {
                CheckReport::pass(NEGATIVE_CONTROLS, params).with_note(format!("rejected: {msg}"))
            }
            (Err(e), _) => CheckReport::fail(NEGATIVE_CONTROLS, params, Witness::message("control", e.to_string())),
            (Ok(r), _) => match &r.witness {
                Some(w) if !r.passed() && w.term_count > 0 => {
                    let note = format!("{} fails at {}: {} terms", r.suite, w.location, w.term_count);
                    CheckReport::pass(NEGATIVE_CONTROLS, params).with_note(note)
                }
                _ => CheckReport::fail(
                    NEGATIVE_CONTROLS,
                    params,
                    Witness::message(r.suite.clone(), "perturbed check did not fail with a nonzero witness"),
                ),
            },
        }
    }
}

fn or_report(suite: Suite, params: Params, r: Result<CheckReport>) -> CheckReport {
    r.unwrap_or_else(|e| CheckReport::fail(suite.name(), params, Witness::message("setup", e.to_string())))
}

/// Seeds for the `SL3` samples: the identity, one transvection and
/// [`SL3_SAMPLES`] seeded transvection products.
pub fn sl3_matrices(seed: u64) -> Vec<super::sl3::IntMatrix3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![IDENTITY3, transvection(0, 1, 1)];
    out.extend((0..SL3_SAMPLES).map(|_| random_transvection_product(&mut rng, SL3_MAX_FACTORS)));
    out
}

/// Runs one suite for `2 <= n <= n_max`; suites tied to a fixed `n` or rank
/// range ignore `n_max`.
pub fn run_suite(suite: Suite, n_max: usize, seed: u64) -> Vec<CheckReport> {
    let ns = 2..=n_max;
    let with_data = |n: usize, f: &dyn Fn(&crate::unprojection::UnprojectionData) -> Vec<CheckReport>| -> Vec<CheckReport> {
        match build_data(n) {
            Ok(d) => f(&d),
            Err(e) => vec![CheckReport::fail(suite.name(), Params::new().with("n", n), Witness::message("build", e.to_string()))],
        }
    };
    let mut out = match suite {
        Suite::KoszulD2 => (1..=COMPLEX_MAX_RANK).map(check_koszul_d2).collect(),
        Suite::Anticommutation => (1..=COMPLEX_MAX_RANK).map(check_anticommutation).collect(),
        Suite::PhiComplex => (1..=COMPLEX_MAX_RANK).map(check_phi_complex).collect(),
        Suite::FirstSquare => ns.flat_map(|n| with_data(n, &|d| vec![check_first_square_on(d)])).collect(),
        Suite::BigDiagram => ns
            .filter(|&n| n >= 3)
            .flat_map(|n| {
                with_data(n, &|d| {
                    (2..n)
                        .map(|p| or_report(suite, Params::new().with("n", n).with("p", p), check_big_diagram_on(d, p)))
                        .collect()
                })
            })
            .collect(),
        Suite::BasicFormula => ns
            .flat_map(|n| {
                with_data(n, &|d| {
                    let max = n.min(BASIC_FORMULA_MAX_PQ);
                    let mut v = Vec::new();
                    for p in 1..max {
                        for q in 1..=max - p {
                            let params = Params::new().with("n", n).with("p", p).with("q", q);
                            v.push(or_report(suite, params, check_basic_formula_on(d, p, q)));
                        }
                    }
                    v
                })
            })
            .collect(),
        Suite::AltIdentities => {
            ns.map(|n| or_report(suite, Params::new().with("n", n), check_alt_identities_upto(n, ALT_IDENTITIES_MAX_PQ)))
                .collect()
        }
        Suite::Grading => {
            let mut v: Vec<CheckReport> =
                ns.map(|n| or_report(suite, Params::new().with("n", n), check_grading(n))).collect();
            for (name, text) in specs::SHIPPED {
                let r = crate::ring::SubstitutionDocument::from_json(text).and_then(|doc| check_spec_grading(name, &doc));
                v.push(or_report(suite, Params::new().with("spec", name), r));
            }
            v
        }
        Suite::Eta => (2..=n_max.max(ETA_MIN_N_MAX)).map(check_eta).collect(),
        Suite::BinomialRp => vec![check_binomial_rp(BINOMIAL_MAX_N)],
        Suite::Bigcheck => {
            let mut v = vec![check_bigcheck()];
            let appendix = specs::shipped("appendix_n3").expect("shipped").and_then(|doc| doc.build());
            v.push(match appendix {
                Ok((spec, _)) => check_bigcheck_with(BigCheckOptions::default(), Some(("appendix_n3", &spec))),
                Err(e) => CheckReport::fail(suite.name(), Params::new(), Witness::message("setup", e.to_string())),
            });
            v
        }
        Suite::Sl3 => sl3_matrices(seed)
            .iter()
            .map(|p| or_report(suite, Params::new().with("P", json!(p)), check_sl3_invariance(p)))
            .collect(),
        Suite::Reid => vec![check_reid_consistency()],
        Suite::Adjugate => vec![check_adjugate()],
        Suite::NegativeControls => Perturbation::all(seed).into_iter().map(Perturbation::control).collect(),
    };
    sort_reports(&mut out);
    out
}

/// Every suite, reports ordered by suite name and then parameters.
pub fn run_all(n_max: usize, seed: u64) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = Suite::ALL.into_iter().flat_map(|s| run_suite(s, n_max, seed)).collect();
    sort_reports(&mut out);
    out
}
