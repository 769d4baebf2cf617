use std::collections::BTreeMap;
use std::sync::Arc;

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::table::VariableTable;
use crate::error::{Error, Result};

/// A nonnegative integer weight for every variable of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    table: Arc<VariableTable>,
    weights: Vec<u32>,
}

impl Grading {
    pub fn new(table: &Arc<VariableTable>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != table.len() {
            return Err(Error::Shape(format!(
                "grading has {} weights for {} variables",
                weights.len(),
                table.len()
            )));
        }
        Ok(Self { table: table.clone(), weights })
    }

    pub fn uniform(table: &Arc<VariableTable>, w: u32) -> Self {
        Self { table: table.clone(), weights: vec![w; table.len()] }
    }

    /// Builds a grading from named weights; every variable must be listed.
    pub fn from_named(table: &Arc<VariableTable>, weights: &BTreeMap<String, u32>) -> Result<Self> {
        for name in weights.keys() {
            if table.position(name).is_none() {
                return Err(Error::UnknownVariable(name.clone()));
            }
        }
        let weights = table
            .names()
            .iter()
            .map(|n| weights.get(n).copied().ok_or_else(|| Error::Spec(format!("no degree given for `{n}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { table: table.clone(), weights })
    }

    /// The ambient grading for parameter `n`: `A:2, B:1, x:1, y:2, z:2`,
    /// `s0: 3n-6`, `s1: 3n-5`. For `n = 3` this is `{6:2, 12:1, 3:2, 3:1, 2, 3, 4}`
    /// in the order `A, B, y, x, z, s0, s1`.
    pub fn ambient(table: &Arc<VariableTable>) -> Result<Self> {
        let n = table
            .ambient_n()
            .ok_or_else(|| Error::Unsupported("ambient grading needs an ambient table".into()))?;
        let mut weights = vec![0; table.len()];
        for i in 1..=n {
            weights[table.x(i)] = 1;
            weights[table.y(i)] = 2;
        }
        weights[table.z()] = 2;
        for p in 1..n {
            for i in 1..=n {
                for j in i..=n {
                    if i < j {
                        weights[table.a(p, i, j)] = 2;
                    }
                    weights[table.b(p, i, j)] = 1;
                }
            }
        }
        let n = n as u32;
        weights[table.s0()] = 3 * n - 6;
        weights[table.s1()] = 3 * n - 5;
        Ok(Self { table: table.clone(), weights })
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_of(&self, idx: usize) -> u32 {
        self.weights[idx]
    }

    pub fn monomial_weight(&self, m: &Monomial) -> u64 {
        m.support().map(|(i, e)| u64::from(self.weights[i]) * u64::from(e)).sum()
    }
}

/// Result of a homogeneity audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(u64),
    /// Two terms of different weight, rendered as single-term polynomials.
    Inhomogeneous { first: (String, u64), second: (String, u64) },
}

impl Homogeneity {
    pub fn degree(&self) -> Option<u64> {
        match self {
            Homogeneity::Homogeneous(d) => Some(*d),
            Homogeneity::Inhomogeneous { .. } => None,
        }
    }
}

pub fn weighted_degree(p: &Polynomial, g: &Grading) -> Result<Homogeneity> {
    if **p.table() != *g.table {
        return Err(Error::IncompatibleRing);
    }
    let mut terms = p.terms();
    let Some((m0, c0)) = terms.next() else {
        return Err(Error::ZeroDegree);
    };
    let d0 = g.monomial_weight(m0);
    for (m, c) in terms {
        let d = g.monomial_weight(m);
        if d != d0 {
            let render = |m: &Monomial, c| Polynomial::monomial(p.table(), m.clone(), c).to_string();
            return Ok(Homogeneity::Inhomogeneous {
                first: (render(m0, c0.clone()), d0),
                second: (render(m, c.clone()), d),
            });
        }
    }
    Ok(Homogeneity::Homogeneous(d0))
}
