use super::report::{poly_difference, CheckReport, Params, Witness};
use crate::error::Result;
use crate::unprojection::{build_data, connecting_map, pfaffians_5x5, reid_n2, sigma_with, SigmaSign};

pub const REID: &str = "reid";

/// The general construction at `n = 2` against the closed-form equations:
/// the linear relations agree termwise, `f = y2 l1 - y1 l2 + z x2 l3 - z x1 l4`,
/// and the submaximal Pfaffians of the skew matrix are
/// `(-q, -l2, -l1, -l4, -l3)`.
pub fn check_reid_consistency_with(sign: SigmaSign) -> CheckReport {
    let mut params = Params::new().with("n", 2);
    if sign == SigmaSign::Flipped {
        params = params.with("perturbation", "sigma_sign_flip");
    }
    match reid_difference(sign) {
        Ok(outcome) => CheckReport::from_outcome(REID, params, outcome),
        Err(e) => CheckReport::fail(REID, params, Witness::message("setup", e.to_string())),
    }
}

pub fn check_reid_consistency() -> CheckReport {
    check_reid_consistency_with(SigmaSign::Alternating)
}

fn reid_difference(sign: SigmaSign) -> Result<Option<Witness>> {
    let data = build_data(2)?;
    let sigma = sigma_with(&data, &connecting_map(&data, 1)?, sign)?;
    let derived = crate::unprojection::linear_relations_from(&data, sigma);
    let r = reid_n2();
    for (i, (got, want)) in derived.linears.iter().zip(&r.l).enumerate() {
        if let Some(w) = poly_difference(&format!("l{}", i + 1), got, want) {
            return Ok(Some(w));
        }
    }
    let t = &r.table;
    let v = |idx: usize| crate::ring::Polynomial::var(t, idx);
    let (x1, x2, y1, y2, z) = (v(t.x(1)), v(t.x(2)), v(t.y(1)), v(t.y(2)), v(t.z()));
    let combo = &y2 * &r.l[0] - &y1 * &r.l[1] + &z * &x2 * &r.l[2] - &z * &x1 * &r.l[3];
    if let Some(w) = poly_difference("f - (y2 l1 - y1 l2 + z x2 l3 - z x1 l4)", &r.f, &combo) {
        return Ok(Some(w));
    }
    let pf = pfaffians_5x5(&r.skew)?;
    let expected = [(-&r.q, "-q"), (-&r.l[1], "-l2"), (-&r.l[0], "-l1"), (-&r.l[3], "-l4"), (-&r.l[2], "-l3")];
    for (k, (got, (want, name))) in pf.iter().zip(&expected).enumerate() {
        if let Some(w) = poly_difference(&format!("Pfaffian {} vs {name}", k + 1), got, want) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
