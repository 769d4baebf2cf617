//! Suites for the maps `u1, u2`, the alternating products and the connecting
//! maps `T_p`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::{element_difference, poly_difference, CheckReport, Params, Witness};
use crate::error::{Error, Result};
use crate::exterior::{alt_apply, alt_term, binomial, induced_wedge, koszul_coefficient, koszul_diff, ExteriorElement, LinearForm, ModuleMap, WedgeIndex};
use crate::ring::{random::random_polynomial, PolyMatrix, Polynomial, TermAccumulator};
use crate::unprojection::{build_data, ConnectingMap, UnprojectionData};

pub const FIRST_SQUARE: &str = "first_square";
pub const BASIC_FORMULA: &str = "basic_formula";
pub const BIG_DIAGRAM: &str = "big_diagram";
pub const ALT_IDENTITIES: &str = "alt_identities";

fn basis_of(data: &UnprojectionData, rank: usize, degree: usize) -> Vec<ExteriorElement> {
    WedgeIndex::all(rank, degree).into_iter().map(|k| ExteriorElement::basis(data.table(), rank, k)).collect()
}

fn forms_difference(context: &str, lhs: &LinearForm, rhs: &LinearForm) -> Option<Witness> {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .find_map(|(j, (a, b))| poly_difference(&format!("{context} on basis vector {}", j + 1), a, b))
}

/// `ψ = h1∘u1 + z h2∘u2` and `0 = h1∘u2 + h2∘u1` as forms on `N`.
pub fn check_first_square_on(data: &UnprojectionData) -> CheckReport {
    let c = data.second_complex();
    let (u1, u2) = (data.u1(), data.u2());
    let compose = |h: &LinearForm, u: &ModuleMap| h.compose(u).expect("u maps into L");
    let first = compose(&c.h1, u1).try_add(&compose(&c.h2, u2).scale(data.z())).expect("same rank");
    let second = compose(&c.h1, u2).try_add(&compose(&c.h2, u1)).expect("same rank");
    let zero = LinearForm::new(data.table(), vec![Polynomial::zero(data.table()); data.n() - 1]).expect("rank within cap");
    let outcome = forms_difference("psi = h1 u1 + z h2 u2", &first, &data.psi())
        .or_else(|| forms_difference("0 = h1 u2 + h2 u1", &second, &zero));
    CheckReport::from_outcome(FIRST_SQUARE, Params::new().with("n", data.n()), outcome)
}

pub fn check_first_square(n: usize) -> Result<CheckReport> {
    Ok(check_first_square_on(&build_data(n)?))
}

/// Both sides of the basic formula on one element `v ∈ ∧^(p+q-1) N`.
fn basic_formula_sides(
    data: &UnprojectionData,
    p: usize,
    q: usize,
    v: &ExteriorElement,
) -> Result<(ExteriorElement, ExteriorElement)> {
    let c = data.second_complex();
    let (u1, u2) = (data.u1(), data.u2());
    let (pi, qi) = (p as isize, q as isize);
    let k = p + q - 1;
    let lhs = koszul_diff(&c.h2, k, &alt_term(u1, u2, pi, qi - 1, v)?)?
        .try_add(&koszul_diff(&c.h1, k, &alt_term(u1, u2, pi - 1, qi, v)?)?)?;
    let h1u1 = c.h1.compose(u1)?;
    let h2u2 = c.h2.compose(u2)?;
    let rhs = alt_term(u1, u2, pi - 2, qi, &koszul_diff(&h1u1, k, v)?)?
        .try_add(&alt_term(u1, u2, pi, qi - 2, &koszul_diff(&h2u2, k, v)?)?)?;
    Ok((lhs, rhs))
}

/// The basic formula for given `p, q` on every basis wedge of `∧^(p+q-1) N`.
pub fn check_basic_formula_on(data: &UnprojectionData, p: usize, q: usize) -> Result<CheckReport> {
    let n = data.n();
    if p == 0 || q == 0 || p + q - 1 > n - 1 {
        return Err(Error::ParameterRange(format!("basic formula needs p, q >= 1 and p + q <= {n}, got p={p}, q={q}")));
    }
    let mut outcome = None;
    for v in basis_of(data, n - 1, p + q - 1) {
        let (lhs, rhs) = basic_formula_sides(data, p, q, &v)?;
        let at = format!("on {}", v.first_nonzero().expect("basis").0);
        if let Some(w) = element_difference(&at, &lhs, &rhs) {
            outcome = Some(w);
            break;
        }
    }
    Ok(CheckReport::from_outcome(BASIC_FORMULA, Params::new().with("n", n).with("p", p).with("q", q), outcome))
}

pub fn check_basic_formula(n: usize, p: usize, q: usize) -> Result<CheckReport> {
    check_basic_formula_on(&build_data(n)?, p, q)
}

/// Replaces `u1, u2` by maps with seeded random entries in `x, y`; these
/// violate `h1∘u2 + h2∘u1 = 0`.
pub fn generic_maps(data: &UnprojectionData, seed: u64) -> Result<UnprojectionData> {
    let t = data.table();
    let n = data.n();
    let vars: Vec<usize> = (1..=n).flat_map(|i| [t.x(i), t.y(i)]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_map = || {
        let m = PolyMatrix::from_fn(t, n, n - 1, |_, _| random_polynomial(&mut rng, t, &vars, 3, 2, 3));
        ModuleMap::from_matrix(&m)
    };
    let (u1, u2) = (random_map()?, random_map()?);
    data.with_maps(u1, u2)
}

/// `φ_p ∘ T_p = T_(p-1) ∘ d^p ψ` on every basis wedge of `∧^p N`, with the
/// given connecting maps. The images are compared one coefficient of
/// `∧^(p-1) L` at a time, which bounds memory at `n = 5`.
pub fn check_big_diagram_with(
    data: &UnprojectionData,
    p: usize,
    tp: &ConnectingMap,
    tp_prev: &ConnectingMap,
) -> Result<CheckReport> {
    let n = data.n();
    if p < 2 || p > n - 1 {
        return Err(Error::ParameterRange(format!("big diagram needs 2 <= p <= {}, got {p}", n - 1)));
    }
    let c = data.second_complex();
    let psi = data.psi();
    let params = Params::new().with("n", n).with("p", p);
    for v in basis_of(data, n - 1, p) {
        let idx = v.first_nonzero().expect("basis").0;
        let (a, b) = tp.apply(data, &v)?;
        let images = koszul_diff(&psi, p, &v)?
            .terms()
            .map(|(k, ck)| Ok((ck.clone(), tp_prev.apply(data, &ExteriorElement::basis(data.table(), n - 1, k))?)))
            .collect::<Result<Vec<_>>>()?;
        for j in WedgeIndex::all(n, p - 1) {
            for row in 1..=2 {
                let (ha, hb) = if row == 1 { (&c.h1, &c.h3) } else { (&c.h2, &c.h4) };
                let lhs = koszul_coefficient(ha, &a, j)? + koszul_coefficient(hb, &b, j)?;
                let mut acc = TermAccumulator::new(data.table());
                for (ck, (r1, r2)) in &images {
                    if let Some(t) = if row == 1 { r1 } else { r2 }.get(j) {
                        acc.add_product(ck, t, false);
                    }
                }
                let location = format!("row {row} on {idx}, coefficient of {j}");
                if let Some(w) = poly_difference(&location, &lhs, &acc.finish()) {
                    return Ok(CheckReport::fail(BIG_DIAGRAM, params, w));
                }
            }
        }
    }
    Ok(CheckReport::pass(BIG_DIAGRAM, params))
}

pub fn check_big_diagram_on(data: &UnprojectionData, p: usize) -> Result<CheckReport> {
    check_big_diagram_with(data, p, &ConnectingMap::formal(p), &ConnectingMap::formal(p.saturating_sub(1).max(1)))
}

pub fn check_big_diagram(n: usize, p: usize) -> Result<CheckReport> {
    check_big_diagram_on(&build_data(n)?, p)
}

/// Identities between alternating products on `N` at parameter `n`:
/// the recursive expansion `alt(u1^p, u2^q)(c ∧ c1)`, its version composed with
/// `d ψ`, exchange symmetry, `alt(u^p, u^q) = C(p+q, p) ∧^(p+q) u`, and
/// `d^(p-1) h ∘ ∧^(p-1) u = ∧^(p-2) u ∘ d^(p-1)(h∘u)`.
pub fn check_alt_identities(n: usize) -> Result<CheckReport> {
    check_alt_identities_upto(n, n - 1)
}

/// [`check_alt_identities`] restricted to wedge degrees `p + q <= max_pq`.
pub fn check_alt_identities_upto(n: usize, max_pq: usize) -> Result<CheckReport> {
    let data = build_data(n)?;
    let rank = n - 1;
    let top = rank.min(max_pq);
    let (u1, u2) = (data.u1(), data.u2());
    let psi = data.psi();
    let h1 = data.second_complex().h1;
    let t = data.table();
    let e = |i: usize| ExteriorElement::basis(t, rank, WedgeIndex::single(i));
    let alt = |p: isize, q: isize, v: &ExteriorElement| alt_term(u1, u2, p, q, v).expect("shapes match");
    let wedge = |a: &ExteriorElement, b: &ExteriorElement| a.wedge(b).expect("same rank");

    let mut found: Option<Witness> = None;
    let mut check = |label: String, lhs: ExteriorElement, rhs: ExteriorElement| {
        if found.is_none() {
            found = element_difference(&label, &lhs, &rhs);
        }
    };

    for p in 1..=top {
        for q in 1..=top - p {
            let (pi, qi) = (p as isize, q as isize);
            for i in 0..rank {
                for c1 in basis_of(&data, rank, p + q - 1) {
                    let k = c1.first_nonzero().expect("basis").0;
                    let lhs = alt(pi, qi, &wedge(&e(i), &c1));
                    let rhs = wedge(u1.column(i), &alt(pi - 1, qi, &c1)).try_add(&wedge(u2.column(i), &alt(pi, qi - 1, &c1)))?;
                    check(format!("expansion p={p} q={q} on e[{}]^{k}", i + 1), lhs, rhs);
                }
                if p + q + 1 > rank {
                    continue;
                }
                for c1 in basis_of(&data, rank, p + q) {
                    let k = c1.first_nonzero().expect("basis").0;
                    let c = wedge(&e(i), &c1);
                    let lhs = alt(pi, qi, &koszul_diff(&psi, p + q + 1, &c)?);
                    let dc1 = koszul_diff(&psi, p + q, &c1)?;
                    let rhs = alt(pi, qi, &c1)
                        .scale(psi.coeff(i))
                        .try_sub(&wedge(u1.column(i), &alt(pi - 1, qi, &dc1)))?
                        .try_sub(&wedge(u2.column(i), &alt(pi, qi - 1, &dc1)))?;
                    check(format!("composed expansion p={p} q={q} on e[{}]^{k}", i + 1), lhs, rhs);
                }
            }
            for v in basis_of(&data, rank, p + q) {
                let k = v.first_nonzero().expect("basis").0;
                let swapped = alt_apply(u2, u1, q, p, &v)?;
                check(format!("symmetry p={p} q={q} on {k}"), alt(pi, qi, &v), swapped);
                let same = alt_apply(u1, u1, p, q, &v)?;
                let c = Polynomial::integer(t, binomial((p + q) as u64, p as u64) as i64);
                check(format!("binomial multiple p={p} q={q} on {k}"), same, induced_wedge(u1, p + q, &v)?.scale(&c));
            }
        }
    }
    let h1u1 = h1.compose(u1)?;
    for p in 2..=top + 1 {
        for v in basis_of(&data, rank, p - 1) {
            let k = v.first_nonzero().expect("basis").0;
            let lhs = koszul_diff(&h1, p - 1, &induced_wedge(u1, p - 1, &v)?)?;
            let rhs = induced_wedge(u1, p - 2, &koszul_diff(&h1u1, p - 1, &v)?)?;
            check(format!("single map p={p} on {k}"), lhs, rhs);
        }
    }
    let mut params = Params::new().with("n", n);
    if top < rank {
        params = params.with("max_pq", top);
    }
    Ok(CheckReport::from_outcome(ALT_IDENTITIES, params, found))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_passes() {
        assert!(check_first_square(3).unwrap().passed());
        assert!(check_basic_formula(3, 1, 1).unwrap().passed());
        assert!(check_basic_formula(3, 2, 1).unwrap().passed());
        assert!(check_big_diagram(3, 2).unwrap().passed());
        assert!(check_alt_identities(3).unwrap().passed());
    }

    #[test]
    fn ranges_are_enforced() {
        assert!(check_basic_formula(3, 2, 2).is_err());
        assert!(check_basic_formula(3, 0, 1).is_err());
        assert!(check_big_diagram(3, 1).is_err());
        assert!(check_big_diagram(3, 3).is_err());
    }

    #[test]
    fn generic_maps_break_the_hypothesis() {
        let d = generic_maps(&build_data(3).unwrap(), 7).unwrap();
        assert!(!check_first_square_on(&d).passed());
        let r = check_basic_formula_on(&d, 1, 1).unwrap();
        assert!(!r.passed());
        assert!(r.witness.unwrap().term_count > 0);
    }
}
