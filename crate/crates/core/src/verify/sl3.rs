//! `SL3(Z)` invariance of the coefficients `a`, `b` of the quadratic relation.

use rand::Rng;
use serde_json::json;

use super::report::{poly_difference, CheckReport, Params};
use crate::error::{Error, Result};
use crate::ring::{PolyMatrix, Polynomial};
use crate::unprojection::{build_data, quad_coefficients_from, QuadInputs};

pub const SL3: &str = "sl3";

pub type IntMatrix3 = [[i64; 3]; 3];

pub fn det3(p: &IntMatrix3) -> i64 {
    p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) - p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0])
        + p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0])
}

/// Transpose of the inverse of a determinant-one matrix, i.e. its cofactor matrix.
fn inverse_transpose(p: &IntMatrix3) -> IntMatrix3 {
    let m = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        p[rows[0]][cols[0]] * p[rows[1]][cols[1]] - p[rows[0]][cols[1]] * p[rows[1]][cols[0]]
    };
    std::array::from_fn(|r| std::array::from_fn(|c| if (r + c) % 2 == 0 { m(r, c) } else { -m(r, c) }))
}

fn mul3(a: &IntMatrix3, b: &IntMatrix3) -> IntMatrix3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()))
}

pub const IDENTITY3: IntMatrix3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// `I + λ E_ij` with `i ≠ j`.
pub fn transvection(i: usize, j: usize, lambda: i64) -> IntMatrix3 {
    assert!(i != j && i < 3 && j < 3);
    let mut m = IDENTITY3;
    m[i][j] = lambda;
    m
}

/// A product of between one and `max_factors` random transvections with
/// nonzero multipliers in `[-3, 3]`, redrawn until it is not the identity.
pub fn random_transvection_product<R: Rng + ?Sized>(rng: &mut R, max_factors: usize) -> IntMatrix3 {
    loop {
        let k = rng.random_range(1..=max_factors.max(1));
        let p = (0..k).fold(IDENTITY3, |acc, _| {
            let i = rng.random_range(0..3);
            let j = (i + rng.random_range(1..3)) % 3;
            let lambda = rng.random_range(1..=3) * if rng.random_bool(0.5) { 1 } else { -1 };
            mul3(&acc, &transvection(i, j, lambda))
        });
        if p != IDENTITY3 {
            return p;
        }
    }
}

/// Rebuilds `a`, `b` from `x̃ = x P^-t`, `ỹ = y P^-t`, `Ã^j = P^t A^j P`,
/// `B̃^j = P^t B^j P`, `z̃ = z` and compares with the originals.
pub fn check_sl3_invariance(p: &IntMatrix3) -> Result<CheckReport> {
    let det = det3(p);
    if det != 1 {
        return Err(Error::Precondition(format!("det P must be 1, got {det}")));
    }
    let data = build_data(3)?;
    let t = data.table();
    let lift = |m: &IntMatrix3| PolyMatrix::from_fn(t, 3, 3, |i, j| Polynomial::integer(t, m[i][j]));
    let (pm, pt, pit) = (lift(p), lift(p).transpose(), lift(&inverse_transpose(p)));
    let congruent = |m: &PolyMatrix| pt.mul(m).mul(&pm);
    let orig = QuadInputs::from_data(&data)?;
    let tilde = QuadInputs {
        x: orig.x.mul(&pit),
        y: orig.y.mul(&pit),
        z: orig.z.clone(),
        a1: congruent(&orig.a1),
        a2: congruent(&orig.a2),
        b1: congruent(&orig.b1),
        b2: congruent(&orig.b2),
    };
    let before = quad_coefficients_from(&orig)?;
    let after = quad_coefficients_from(&tilde)?;
    let outcome = poly_difference("a~ - a", &after.a, &before.a).or_else(|| poly_difference("b~ - b", &after.b, &before.b));
    Ok(CheckReport::from_outcome(SL3, Params::new().with("P", json!(p)), outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn inverse_transpose_is_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let p = random_transvection_product(&mut rng, 6);
            assert_eq!(det3(&p), 1);
            let it = inverse_transpose(&p);
            let pt: IntMatrix3 = std::array::from_fn(|i| std::array::from_fn(|j| p[j][i]));
            assert_eq!(mul3(&pt, &it), IDENTITY3);
        }
    }

    #[test]
    fn determinant_minus_one_is_rejected() {
        let swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]];
        assert!(matches!(check_sl3_invariance(&swap), Err(Error::Precondition(_))));
    }

    #[test]
    fn elementary_transvection_passes() {
        assert!(check_sl3_invariance(&transvection(0, 1, 1)).unwrap().passed());
    }
}
