//! The quadratic relation for `n = 3`: `q = s1^2 - z s0^2 - a s0 + b`.

use std::sync::Arc;

use super::data::UnprojectionData;
use crate::error::{Error, Result};
use crate::ring::{Coeff, PolyMatrix, Polynomial, VariableTable};

fn check_sym3(m: &PolyMatrix) -> Result<()> {
    if (m.rows(), m.cols()) != (3, 3) {
        return Err(Error::Shape(format!("expected 3x3, got {}x{}", m.rows(), m.cols())));
    }
    if !m.is_symmetric() {
        return Err(Error::Shape("matrix is not symmetric".into()));
    }
    Ok(())
}

/// The two indices of `{0, 1, 2}` other than `k`, increasing.
fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn signed(k: usize, l: usize, v: Polynomial) -> Polynomial {
    if (k + l) % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Adjugate of a symmetric 3x3 matrix,
/// `(ad B)_kl = (-1)^(k+l) (B_ij B_mn - B_in B_mj)` with
/// `{i,k,m} = {j,l,n} = {1,2,3}`, `i < m`, `j < n`.
pub fn adjugate3(b: &PolyMatrix) -> Result<PolyMatrix> {
    check_sym3(b)?;
    Ok(PolyMatrix::from_fn(b.table(), 3, 3, |k, l| {
        let ((i, m), (j, n)) = (others(k), others(l));
        signed(k, l, b.get(i, j) * b.get(m, n) - b.get(i, n) * b.get(m, j))
    }))
}

/// Polarized adjugate `ad B^{1,2}`,
/// `(-1)^(k+l) (B1_ij B2_mn + B2_ij B1_mn - B1_in B2_mj - B2_in B1_mj)`.
pub fn double_adjoint(b1: &PolyMatrix, b2: &PolyMatrix) -> Result<PolyMatrix> {
    check_sym3(b1)?;
    check_sym3(b2)?;
    Ok(PolyMatrix::from_fn(b1.table(), 3, 3, |k, l| {
        let ((i, m), (j, n)) = (others(k), others(l));
        let v = b1.get(i, j) * b2.get(m, n) + b2.get(i, j) * b1.get(m, n)
            - b1.get(i, n) * b2.get(m, j)
            - b2.get(i, n) * b1.get(m, j);
        signed(k, l, v)
    }))
}

/// Inputs of the `a`, `b` formulas. Taken from [`UnprojectionData`] or built
/// directly for specializations.
#[derive(Clone, Debug)]
pub struct QuadInputs {
    pub x: PolyMatrix,
    pub y: PolyMatrix,
    pub z: Polynomial,
    pub a1: PolyMatrix,
    pub a2: PolyMatrix,
    pub b1: PolyMatrix,
    pub b2: PolyMatrix,
}

impl QuadInputs {
    pub fn from_data(data: &UnprojectionData) -> Result<Self> {
        if data.n() != 3 {
            return Err(Error::Unsupported(format!("the quadratic formula needs n = 3, got n = {}", data.n())));
        }
        Ok(Self {
            x: data.x().clone(),
            y: data.y().clone(),
            z: data.z().clone(),
            a1: data.a(1).clone(),
            a2: data.a(2).clone(),
            b1: data.b(1).clone(),
            b2: data.b(2).clone(),
        })
    }

    fn table(&self) -> &Arc<VariableTable> {
        self.x.table()
    }

    /// The same inputs with superscripts 1 and 2 exchanged.
    pub fn swapped(&self) -> Self {
        Self { a1: self.a2.clone(), a2: self.a1.clone(), b1: self.b2.clone(), b2: self.b1.clone(), ..self.clone() }
    }
}

/// Outcome of checking that `b` has integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralityAudit {
    Integral,
    /// `count` terms have non-integer coefficients; `example` is one of them.
    NonIntegral { count: usize, example: String },
}

/// `a`, `b` and the adjugates they are built from.
#[derive(Clone, Debug)]
pub struct QuadCoefficients {
    pub a: Polynomial,
    pub b: Polynomial,
    pub ad_b1: PolyMatrix,
    pub ad_b2: PolyMatrix,
    pub ad_b12: PolyMatrix,
    /// The summands inside the bracket of `b`, before halving.
    pub summands: Vec<(&'static str, Polynomial)>,
    pub integrality: IntegralityAudit,
}

/// `a = det [[x1, x2, x3], [A1_23, -A1_13, A1_12], [A2_23, -A2_13, A2_12]]`.
pub fn quad_a_from(inp: &QuadInputs) -> Result<Polynomial> {
    let row = |a: &PolyMatrix| vec![a.get(1, 2).clone(), -a.get(0, 2), a.get(0, 1).clone()];
    let m = PolyMatrix::from_rows(inp.table(), vec![inp.x.row(0), row(&inp.a1), row(&inp.a2)])?;
    m.det()
}

fn quad_form(left: &PolyMatrix, mid: &[&PolyMatrix], right: &PolyMatrix) -> Result<Polynomial> {
    let mut acc = left.clone();
    for m in mid {
        acc = acc.try_mul(m)?;
    }
    acc.try_mul(&right.transpose())?.scalar()
}

/// `Σ_{i<j} A_ij (x_i y_j - x_j y_i)`.
fn skew_pairing(a: &PolyMatrix, x: &PolyMatrix, y: &PolyMatrix) -> Polynomial {
    let mut acc = Polynomial::zero(a.table());
    for i in 0..3 {
        for j in i + 1..3 {
            acc.add_assign_ref(&(a.get(i, j) * &(x.get(0, i) * y.get(0, j) - x.get(0, j) * y.get(0, i))));
        }
    }
    acc
}

/// `Σ_{i,j} B_ij C_ij`.
fn frobenius(b: &PolyMatrix, c: &PolyMatrix) -> Polynomial {
    let mut acc = Polynomial::zero(b.table());
    for i in 0..3 {
        for j in 0..3 {
            acc.add_assign_ref(&(b.get(i, j) * c.get(i, j)));
        }
    }
    acc
}

pub fn quad_coefficients_from(inp: &QuadInputs) -> Result<QuadCoefficients> {
    let (x, y, z) = (&inp.x, &inp.y, &inp.z);
    let (a1, a2, b1, b2) = (&inp.a1, &inp.a2, &inp.b1, &inp.b2);
    let ad_b1 = adjugate3(b1)?;
    let ad_b2 = adjugate3(b2)?;
    let ad_b12 = double_adjoint(b1, b2)?;
    let (a1t, a2t) = (a1.transpose(), a2.transpose());

    let summands: Vec<(&'static str, Polynomial)> = vec![
        ("y B1 adB2 B1 y^t", quad_form(y, &[b1, &ad_b2, b1], y)?),
        ("y B2 adB1 B2 y^t", quad_form(y, &[b2, &ad_b1, b2], y)?),
        ("2 x A1 adB2 A1^t x^t", quad_form(x, &[a1, &ad_b2, &a1t], x)?.scale_int(2)),
        ("2 x A2 adB1 A2^t x^t", quad_form(x, &[a2, &ad_b1, &a2t], x)?.scale_int(2)),
        ("-2 x A1 adB12 A2^t x^t", quad_form(x, &[a1, &ad_b12, &a2t], x)?.scale_int(-2)),
        ("-z x B1 adB2 B1 x^t", -(z * &quad_form(x, &[b1, &ad_b2, b1], x)?)),
        ("-z x B2 adB1 B2 x^t", -(z * &quad_form(x, &[b2, &ad_b1, b2], x)?)),
        ("4 y B1 adB2 A1^t x^t", quad_form(y, &[b1, &ad_b2, &a1t], x)?.scale_int(4)),
        ("4 y B2 adB1 A2^t x^t", quad_form(y, &[b2, &ad_b1, &a2t], x)?.scale_int(4)),
        ("-F(A1) <B1, adB2>", -(skew_pairing(a1, x, y) * frobenius(b1, &ad_b2))),
        ("-F(A2) <B2, adB1>", -(skew_pairing(a2, x, y) * frobenius(b2, &ad_b1))),
    ];
    let mut bracket = Polynomial::zero(inp.table());
    for (_, s) in &summands {
        bracket.add_assign_ref(s);
    }
    let b = bracket.scale(&Coeff::new(1.into(), 2.into()));
    let integrality = audit_integrality(&b);
    Ok(QuadCoefficients { a: quad_a_from(inp)?, b, ad_b1, ad_b2, ad_b12, summands, integrality })
}

fn audit_integrality(p: &Polynomial) -> IntegralityAudit {
    let bad: Vec<_> = p.terms().filter(|(_, c)| !c.is_integer()).collect();
    match bad.first() {
        None => IntegralityAudit::Integral,
        Some((m, c)) => IntegralityAudit::NonIntegral {
            count: bad.len(),
            example: Polynomial::monomial(p.table(), (*m).clone(), (*c).clone()).to_string(),
        },
    }
}

pub fn quad_coefficients(data: &UnprojectionData) -> Result<QuadCoefficients> {
    quad_coefficients_from(&QuadInputs::from_data(data)?)
}

pub fn quad_a(data: &UnprojectionData) -> Result<Polynomial> {
    quad_a_from(&QuadInputs::from_data(data)?)
}

pub fn quad_b(data: &UnprojectionData) -> Result<Polynomial> {
    Ok(quad_coefficients(data)?.b)
}

/// `q = s1^2 - z s0^2 - a s0 + b`.
pub fn quadratic_q(data: &UnprojectionData) -> Result<Polynomial> {
    let c = quad_coefficients(data)?;
    Ok(quadratic_q_from(data, &c.a, &c.b))
}

pub fn quadratic_q_from(data: &UnprojectionData, a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (s0, s1) = (data.s0(), data.s1());
    &s1 * &s1 - data.z() * &s0 * &s0 - a * &s0 + b
}
