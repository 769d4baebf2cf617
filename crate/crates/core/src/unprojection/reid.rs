//! The closed-form `n = 2` equations and their 5x5 Pfaffian format.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{make_ambient_ring, parse_polynomial, PolyMatrix, Polynomial, VariableTable};

const F: &str = "A1p12*(x1*y2-x2*y1) + B1p11*(y1^2-z*x1^2) + 2*B1p12*(y1*y2-z*x1*x2) + B1p22*(y2^2-z*x2^2)";
const L: [&str; 4] = [
    "z*x1*s0 + y1*s1 + (x1*A1p12 + y1*B1p12 + y2*B1p22)",
    "z*x2*s0 + y2*s1 + (x2*A1p12 - y1*B1p11 - y2*B1p12)",
    "y1*s0 + x1*s1 + (-x1*B1p12 - x2*B1p22)",
    "y2*s0 + x2*s1 + (x1*B1p11 + x2*B1p12)",
];
const Q: &str = "s1^2 - z*s0^2 - A1p12*s0 - B1p12^2 + B1p11*B1p22";
/// Upper triangle of the skew matrix, row by row.
const SKEW_UPPER: [&str; 10] =
    ["x1", "x2", "y1", "y2", "-s0", "-B1p22", "s1 + B1p12", "-s1 + B1p12", "-B1p11", "-z*s0 - A1p12"];

/// The published `n = 2` generators and skew matrix, in the ambient ring of `n = 2`.
#[derive(Clone, Debug)]
pub struct ReidData {
    pub table: Arc<VariableTable>,
    pub f: Polynomial,
    pub l: [Polynomial; 4],
    pub q: Polynomial,
    pub skew: PolyMatrix,
}

pub(crate) fn reid_quadratic(table: &Arc<VariableTable>) -> Polynomial {
    parse_polynomial(table, Q).expect("constant formula")
}

pub fn reid_n2() -> ReidData {
    let table = make_ambient_ring(2).expect("n = 2 is valid");
    let p = |s: &str| parse_polynomial(&table, s).expect("constant formula");
    let mut skew = PolyMatrix::zeros(&table, 5, 5);
    let mut k = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            let v = p(SKEW_UPPER[k]);
            skew.set(j, i, -&v);
            skew.set(i, j, v);
            k += 1;
        }
    }
    ReidData { f: p(F), l: L.map(p), q: p(Q), skew, table }
}

/// The five submaximal Pfaffians of a 5x5 skew matrix: entry `i` is the
/// Pfaffian `m_ab m_cd - m_ac m_bd + m_ad m_bc` of the principal submatrix on
/// the indices `a < b < c < d` other than `i`.
pub fn pfaffians_5x5(m: &PolyMatrix) -> Result<[Polynomial; 5]> {
    if (m.rows(), m.cols()) != (5, 5) {
        return Err(Error::Shape(format!("expected 5x5, got {}x{}", m.rows(), m.cols())));
    }
    if !m.is_skew() {
        return Err(Error::Shape("matrix is not skew-symmetric".into()));
    }
    Ok(std::array::from_fn(|i| {
        let k: Vec<usize> = (0..5).filter(|&r| r != i).collect();
        let e = |r: usize, c: usize| m.get(k[r], k[c]);
        e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2)
    }))
}
