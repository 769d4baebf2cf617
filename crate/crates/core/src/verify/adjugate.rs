use super::report::{poly_difference, CheckReport, Params, Witness};
use crate::error::Result;
use crate::ring::PolyMatrix;
use crate::unprojection::{adjugate3, build_data, double_adjoint};

pub const ADJUGATE: &str = "adjugate";

fn matrix_difference(context: &str, lhs: &PolyMatrix, rhs: &PolyMatrix) -> Option<Witness> {
    (0..lhs.rows())
        .flat_map(|i| (0..lhs.cols()).map(move |j| (i, j)))
        .find_map(|(i, j)| poly_difference(&format!("{context}, entry ({}, {})", i + 1, j + 1), lhs.get(i, j), rhs.get(i, j)))
}

/// On the generic symmetric `B^1, B^2` of `n = 3`: the explicit adjugate
/// formula matches the cofactor adjugate, `B ad B = det(B) I`, and
/// `ad(B^1 + B^2) = ad B^1 + ad B^2 + ad B^{1,2}`.
pub fn check_adjugate() -> CheckReport {
    let params = Params::new().with("n", 3);
    match adjugate_difference() {
        Ok(outcome) => CheckReport::from_outcome(ADJUGATE, params, outcome),
        Err(e) => CheckReport::fail(ADJUGATE, params, Witness::message("setup", e.to_string())),
    }
}

fn adjugate_difference() -> Result<Option<Witness>> {
    let data = build_data(3)?;
    let t = data.table();
    let (b1, b2) = (data.b(1), data.b(2));
    let (ad1, ad2, ad12) = (adjugate3(b1)?, adjugate3(b2)?, double_adjoint(b1, b2)?);
    if let Some(w) = matrix_difference("explicit vs cofactor adjugate of B1", &ad1, &b1.adjugate()?) {
        return Ok(Some(w));
    }
    let det_i = PolyMatrix::identity(t, 3).scale(&b1.det()?);
    if let Some(w) = matrix_difference("B1 ad B1 - det(B1) I", &b1.try_mul(&ad1)?, &det_i) {
        return Ok(Some(w));
    }
    let sum = adjugate3(&b1.try_add(b2)?)?;
    let parts = ad1.try_add(&ad2)?.try_add(&ad12)?;
    Ok(matrix_difference("ad(B1 + B2) - (ad B1 + ad B2 + ad B12)", &sum, &parts))
}
