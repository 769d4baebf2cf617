//! The identity `2(x1+x2+x3) q = -w̃ + g̃1 f1 + g̃2 f2 - 2 s0 (l1+l2+l3) + 2 s1 (l4+l5+l6)`
//! for `n = 3`, which reduces the quadratic relation to ideal membership.

use super::report::{poly_difference, CheckReport, Params, Witness};
use crate::error::Result;
use crate::ring::{substitute, PolyMatrix, Polynomial, SubstitutionSpec};
use crate::unprojection::{
    adjugate3, build_data, linear_relations, quad_coefficients, quadratic_q, IntegralityAudit, UnprojectionData,
};

pub const BIGCHECK: &str = "bigcheck";

/// `φ̃3(a, b, c, d) = (a1(d3-d2) + a2(d1-d3) + a3(d2-d1)) - (c1(b3-b2) + c2(b1-b3) + c3(b2-b1))`.
pub fn phi3(a: [&Polynomial; 3], b: [&Polynomial; 3], c: [&Polynomial; 3], d: [&Polynomial; 3]) -> Polynomial {
    let cyc = |u: [&Polynomial; 3], v: [&Polynomial; 3]| {
        u[0] * &(v[2] - v[1]) + u[1] * &(v[0] - v[2]) + u[2] * &(v[1] - v[0])
    };
    cyc(a, d) - cyc(c, b)
}

fn row3(m: &PolyMatrix, i: usize) -> [&Polynomial; 3] {
    [m.get(i, 0), m.get(i, 1), m.get(i, 2)]
}

/// The auxiliary polynomials and matrices of the identity.
#[derive(Clone, Debug)]
pub struct BigCheckScaffold {
    pub g1: Polynomial,
    pub g2: Polynomial,
    pub m1: PolyMatrix,
    pub m2: PolyMatrix,
    pub l1: PolyMatrix,
    pub l2: PolyMatrix,
    pub w: Polynomial,
}

impl BigCheckScaffold {
    /// Built from the `n = 3` data and its six linear relations.
    pub fn new(data: &UnprojectionData, linears: &[Polynomial]) -> Result<Self> {
        let t = data.table();
        let (a1, a2, b1, b2) = (data.a(1), data.a(2), data.b(1), data.b(2));
        let (ad1, ad2) = (adjugate3(b1)?, adjugate3(b2)?);
        let ones = PolyMatrix::from_fn(t, 3, 1, |_, _| Polynomial::one(t));
        let g1 = data.x().try_mul(b1)?.try_mul(&ad2)?.try_mul(&ones)?.scalar()?;
        let g2 = data.x().try_mul(b2)?.try_mul(&ad1)?.try_mul(&ones)?.scalar()?;
        let m1 = PolyMatrix::from_fn(t, 3, 3, |i, j| phi3(row3(b1, i), row3(b1, j), row3(b2, i), row3(b2, j)));
        let m2 = PolyMatrix::from_fn(t, 3, 3, |i, j| {
            phi3(row3(a1, i), row3(a1, i), row3(b2, j), row3(b2, j))
                - phi3(row3(a2, i), row3(a2, i), row3(b1, j), row3(b1, j))
        });
        let l1 = PolyMatrix::row_vector(t, linears[0..3].to_vec());
        let l2 = PolyMatrix::row_vector(t, linears[3..6].to_vec());
        let form = |v: &PolyMatrix, m: &PolyMatrix, l: &PolyMatrix| -> Result<Polynomial> {
            v.try_mul(m)?.try_mul(&l.transpose())?.scalar()
        };
        let w = form(data.x(), &m1, &l1)? + form(data.y(), &m1, &l2)? + form(data.x(), &m2, &l2)?;
        Ok(Self { g1, g2, m1, m2, l1, l2, w })
    }
}

/// Deliberate changes that must make the identity fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BigCheckOptions {
    /// Uses `(x1+x2+x3) q` on the left instead of `2 (x1+x2+x3) q`.
    pub drop_factor_two: bool,
}

/// The identity in all variables of the `n = 3` ring.
///
/// The report notes whether `b` has integer coefficients.
pub fn check_bigcheck() -> CheckReport {
    let report = check_bigcheck_with(BigCheckOptions::default(), None);
    match build_data(3).and_then(|d| quad_coefficients(&d)) {
        Ok(c) => match c.integrality {
            IntegralityAudit::Integral => report.with_note("b has integer coefficients"),
            IntegralityAudit::NonIntegral { count, example } => {
                report.with_note(format!("b has {count} non-integer coefficients, e.g. {example}"))
            }
        },
        Err(_) => report,
    }
}

/// The identity, optionally after applying a ring map to every ingredient.
pub fn check_bigcheck_with(options: BigCheckOptions, specialize: Option<(&str, &SubstitutionSpec)>) -> CheckReport {
    let mut params = Params::new().with("n", 3);
    if options.drop_factor_two {
        params = params.with("perturbation", "drop_factor_two");
    }
    if let Some((label, _)) = specialize {
        params = params.with("specialization", label);
    }
    match bigcheck_difference(options, specialize.map(|(_, s)| s)) {
        Ok(outcome) => CheckReport::from_outcome(BIGCHECK, params, outcome),
        Err(e) => CheckReport::fail(BIGCHECK, params, Witness::message("setup", e.to_string())),
    }
}

fn bigcheck_difference(options: BigCheckOptions, spec: Option<&SubstitutionSpec>) -> Result<Option<Witness>> {
    let data = build_data(3)?;
    let rel = linear_relations(&data);
    let q = quadratic_q(&data)?;
    let sc = BigCheckScaffold::new(&data, &rel.linears)?;
    let (f1, f2) = (data.f()[0].clone(), data.f()[1].clone());
    let mut parts = vec![q, sc.w, sc.g1, sc.g2, f1, f2, data.s0(), data.s1()];
    parts.extend(rel.linears.iter().cloned());
    parts.extend((1..=3).map(|i| data.xi(i).clone()));
    if let Some(spec) = spec {
        parts = parts.iter().map(|p| substitute(p, spec)).collect::<Result<_>>()?;
    }
    let [q, w, g1, g2, f1, f2, s0, s1, l1, l2, l3, l4, l5, l6, x1, x2, x3] =
        <[Polynomial; 17]>::try_from(parts).expect("seventeen ingredients");
    let factor = if options.drop_factor_two { 1 } else { 2 };
    let lhs = (x1 + x2 + x3).scale_int(factor) * q;
    let rhs = -w + g1 * f1 + g2 * f2 - (s0 * (l1 + l2 + l3)).scale_int(2) + (s1 * (l4 + l5 + l6)).scale_int(2);
    Ok(poly_difference("2(x1+x2+x3) q - right-hand side", &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::random::scratch_table;

    #[test]
    fn phi3_is_alternating_in_the_paired_slots() {
        let t = scratch_table(12);
        let v: Vec<Polynomial> = (0..12).map(|i| Polynomial::var(&t, i)).collect();
        let s = |k: usize| [&v[k], &v[k + 1], &v[k + 2]];
        assert!(phi3(s(0), s(3), s(0), s(3)).is_zero());
        let p = phi3(s(0), s(3), s(6), s(9));
        assert_eq!(p.len(), 12);
    }
}
