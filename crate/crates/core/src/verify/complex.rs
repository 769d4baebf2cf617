//! Suites for the Koszul and `L*` complexes, binomial counts and the η
//! specialization.

use std::sync::Arc;

use super::report::{element_difference, poly_difference, CheckReport, Params, Witness};
use crate::exterior::{
    alternating_binomial_sum, anticommutator_with, binomial, expected_rank, koszul_diff, phi_map, ExteriorElement,
    LinearForm, SecondComplex, WedgeIndex,
};
use crate::ring::{random::scratch_table, substitute, Polynomial, SubstitutionSpec, VariableTable};
use crate::unprojection::build_data;

pub const KOSZUL_D2: &str = "koszul_d2";
pub const ANTICOMMUTATION: &str = "anticommutation";
pub const PHI_COMPLEX: &str = "phi_complex";
pub const BINOMIAL_RP: &str = "binomial_rp";
pub const ETA: &str = "eta";

fn generic_form(table: &Arc<VariableTable>, offset: usize, rank: usize) -> LinearForm {
    let coeffs = (0..rank).map(|i| Polynomial::var(table, offset + i)).collect();
    LinearForm::new(table, coeffs).expect("rank within cap")
}

fn basis_elements(table: &Arc<VariableTable>, rank: usize, degree: usize) -> impl Iterator<Item = ExteriorElement> + '_ {
    WedgeIndex::all(rank, degree).into_iter().map(move |k| ExteriorElement::basis(table, rank, k))
}

/// `d^(p-1) h ∘ d^p h = 0` on every basis wedge, for a linear form with
/// independent indeterminate coefficients on a module of the given rank.
pub fn check_koszul_d2(rank: usize) -> CheckReport {
    let t = scratch_table(rank.max(1));
    let h = generic_form(&t, 0, rank);
    let zero_at = |p: usize| -> Option<Witness> {
        let zero = ExteriorElement::zero(&t, rank, p - 2);
        basis_elements(&t, rank, p).find_map(|v| {
            let dd = koszul_diff(&h, p - 1, &koszul_diff(&h, p, &v).expect("degree matches")).expect("degree matches");
            let at = format!("p={p}, on {}", v.first_nonzero().expect("basis").0);
            element_difference(&at, &dd, &zero)
        })
    };
    let outcome = (2..=rank).find_map(zero_at);
    CheckReport::from_outcome(KOSZUL_D2, Params::new().with("rank", rank), outcome)
}

/// `d^(p-1) h1 ∘ d^p h2 + d^(p-1) h2 ∘ d^p h1 = 0` for two generic forms.
pub fn check_anticommutation(rank: usize) -> CheckReport {
    let t = scratch_table((2 * rank).max(1));
    let (h1, h2) = (generic_form(&t, 0, rank), generic_form(&t, rank, rank));
    let mut outcome = None;
    'outer: for p in 2..=rank {
        for v in basis_elements(&t, rank, p) {
            let s = anticommutator_with(koszul_diff, &h1, &h2, p, &v).expect("well-formed input");
            let zero = ExteriorElement::zero(&t, rank, p - 2);
            let at = format!("p={p}, on {}", v.first_nonzero().expect("basis").0);
            if let Some(w) = element_difference(&at, &s, &zero) {
                outcome = Some(w);
                break 'outer;
            }
        }
    }
    CheckReport::from_outcome(ANTICOMMUTATION, Params::new().with("rank", rank), outcome)
}

/// The forms `h1..h4` over the polynomial ring in `x1..xr, y1..yr, z`.
pub fn second_complex_of_rank(rank: usize) -> SecondComplex {
    let names: Vec<String> = (1..=rank)
        .map(|i| format!("x{i}"))
        .chain((1..=rank).map(|i| format!("y{i}")))
        .chain(["z".to_string()])
        .collect();
    let t = Arc::new(VariableTable::new(names).expect("distinct names"));
    let x: Vec<_> = (0..rank).map(|i| Polynomial::var(&t, i)).collect();
    let y: Vec<_> = (0..rank).map(|i| Polynomial::var(&t, rank + i)).collect();
    SecondComplex::new(&t, &x, &y, &Polynomial::var(&t, 2 * rank)).expect("equal lengths")
}

/// `φ_(p-1) ∘ φ_p = 0` on every basis pair `(e_I, 0)` and `(0, e_I)`.
pub fn check_phi_complex(rank: usize) -> CheckReport {
    let c = second_complex_of_rank(rank);
    let t = c.h1.table().clone();
    let mut outcome = None;
    'outer: for p in 2..=rank {
        let zero_p = ExteriorElement::zero(&t, rank, p);
        let zero_out = ExteriorElement::zero(&t, rank, p - 2);
        for v in basis_elements(&t, rank, p) {
            let idx = v.first_nonzero().expect("basis").0;
            for (slot, pair) in [("first", (&v, &zero_p)), ("second", (&zero_p, &v))] {
                let (a, b) = phi_map(p, pair, &c).expect("valid degree");
                let (r1, r2) = phi_map(p - 1, (&a, &b), &c).expect("valid degree");
                let at = |row: usize| format!("p={p}, {idx} in the {slot} summand, row {row}");
                if let Some(w) = element_difference(&at(1), &r1, &zero_out).or_else(|| element_difference(&at(2), &r2, &zero_out)) {
                    outcome = Some(w);
                    break 'outer;
                }
            }
        }
    }
    CheckReport::from_outcome(PHI_COMPLEX, Params::new().with("rank", rank), outcome)
}

/// `Σ_{j=p}^n (-1)^(j-p) C(n,j) = C(n-1,p-1)` and `r_p = 2 C(n-1,p-1)` for
/// `1 <= p <= n <= n_max`.
pub fn check_binomial_rp(n_max: u64) -> CheckReport {
    let mut outcome = None;
    'outer: for n in 1..=n_max {
        for p in 1..=n {
            let want = binomial(n - 1, p - 1) as i128;
            let (sum, rank) = (alternating_binomial_sum(n, p), expected_rank(n, p));
            if sum != want || rank != 2 * want {
                outcome = Some(Witness::message(
                    format!("n={n}, p={p}"),
                    format!("alternating sum {sum}, r_p {rank}, expected C(n-1,p-1) = {want}"),
                ));
                break 'outer;
            }
        }
    }
    CheckReport::from_outcome(BINOMIAL_RP, Params::new().with("n_max", n_max), outcome)
}

/// `η(f_p) = B^p_pp y_p^2` where `η` sends `z`, every `A` and every `B^p_lm`
/// other than `B^p_pp` to zero.
pub fn check_eta(n: usize) -> CheckReport {
    let params = Params::new().with("n", n);
    let data = match build_data(n) {
        Ok(d) => d,
        Err(e) => return CheckReport::fail(ETA, params, Witness::message("build", e.to_string())),
    };
    let t = data.table();
    let zero = || Polynomial::zero(t);
    let mut assign = vec![(t.z(), zero())];
    for p in 1..n {
        for i in 1..=n {
            for j in i..=n {
                if i < j {
                    assign.push((t.a(p, i, j), zero()));
                }
                if !(i == p && j == p) {
                    assign.push((t.b(p, i, j), zero()));
                }
            }
        }
    }
    let eta = SubstitutionSpec::new(t, t, assign).expect("indices from the table");
    let outcome = (1..n).find_map(|p| {
        let got = substitute(&data.f()[p - 1], &eta).expect("same table");
        let want = Polynomial::var(t, t.b(p, p, p)) * data.yi(p) * data.yi(p);
        poly_difference(&format!("f{p}"), &got, &want)
    });
    CheckReport::from_outcome(ETA, params, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks_pass() {
        for r in 1..=4 {
            assert!(check_koszul_d2(r).passed());
            assert!(check_anticommutation(r).passed());
            assert!(check_phi_complex(r).passed());
        }
        assert!(check_binomial_rp(8).passed());
        assert!(check_eta(3).passed());
    }
}
