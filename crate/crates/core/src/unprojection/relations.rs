use std::sync::Arc;

use super::connecting::{connecting_map, ConnectingMap};
use super::data::{build_data, UnprojectionData};
use super::quadratic::quadratic_q;
use super::reid::reid_quadratic;
use crate::error::Result;
use crate::exterior::{ExteriorElement, WedgeIndex};
use crate::ring::{substitute, Grading, Polynomial, SubstitutionSpec, VariableTable};

/// The coefficients `σ_i^j` defined by
/// `T_(n-1)^j(ẽ_1 ∧ ... ∧ ẽ_(n-1)) = Σ_i (-1)^(i-1) σ_i^j e_1 ∧ ... ê_i ... ∧ e_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    rows: [Vec<Polynomial>; 2],
}

impl SigmaTable {
    /// `σ_i^j`, 1-based `i` and `j`.
    pub fn get(&self, j: usize, i: usize) -> &Polynomial {
        &self.rows[j - 1][i - 1]
    }

    pub fn row(&self, j: usize) -> &[Polynomial] {
        &self.rows[j - 1]
    }
}

/// How the sign `(-1)^(i-1)` is applied when reading off `σ`. `Flipped` exists
/// only as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SigmaSign {
    #[default]
    Alternating,
    Flipped,
}

pub fn sigma(data: &UnprojectionData) -> SigmaTable {
    let t = connecting_map(data, data.n() - 1).expect("n - 1 is always in range");
    sigma_with(data, &t, SigmaSign::Alternating).expect("T_(n-1) is well formed")
}

/// `σ` read off an arbitrary `T_(n-1)` with a chosen sign convention.
pub fn sigma_with(data: &UnprojectionData, t: &ConnectingMap, sign: SigmaSign) -> Result<SigmaTable> {
    let n = data.n();
    let top = ExteriorElement::basis(data.table(), n - 1, WedgeIndex::top(n - 1));
    let (r1, r2) = t.apply(data, &top)?;
    let extract = |img: &ExteriorElement| -> Vec<Polynomial> {
        (0..n)
            .map(|i| {
                let c = img.coefficient(WedgeIndex::top(n).without(i));
                let negate = (i % 2 == 1) ^ (sign == SigmaSign::Flipped);
                if negate {
                    -c
                } else {
                    c
                }
            })
            .collect()
    };
    Ok(SigmaTable { rows: [extract(&r1), extract(&r2)] })
}

/// State of the quadratic generator in a [`RelationSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticStatus {
    Computed(Polynomial),
    /// Not requested by the caller.
    Omitted,
    /// No formula is known for this `n`.
    Open,
}

impl QuadraticStatus {
    pub fn polynomial(&self) -> Option<&Polynomial> {
        match self {
            QuadraticStatus::Computed(q) => Some(q),
            _ => None,
        }
    }
}

/// Generators of `I_Y = (f_1..f_(n-1)) + (l_1..l_2n) + (q)` together with
/// the `σ` table and the grading they are homogeneous for.
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub n: usize,
    pub originals: Vec<Polynomial>,
    pub linears: Vec<Polynomial>,
    pub quadratic: QuadraticStatus,
    pub sigma: SigmaTable,
    pub grading: Grading,
}

impl RelationSet {
    pub fn table(&self) -> &Arc<VariableTable> {
        self.grading.table()
    }

    /// Named generators in the order `f1.., l1..l2n, q`.
    pub fn generators(&self) -> Vec<(String, Polynomial)> {
        let mut out: Vec<(String, Polynomial)> =
            self.originals.iter().enumerate().map(|(i, f)| (format!("f{}", i + 1), f.clone())).collect();
        out.extend(self.linears.iter().enumerate().map(|(i, l)| (format!("l{}", i + 1), l.clone())));
        if let QuadraticStatus::Computed(q) = &self.quadratic {
            out.push(("q".to_string(), q.clone()));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.originals.len() + self.linears.len() + usize::from(self.quadratic.polynomial().is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Applies a ring map to every generator; `grading` must live on the target.
    pub fn specialize(&self, spec: &SubstitutionSpec, grading: Grading) -> Result<RelationSet> {
        let map = |v: &[Polynomial]| v.iter().map(|p| substitute(p, spec)).collect::<Result<Vec<_>>>();
        let quadratic = match &self.quadratic {
            QuadraticStatus::Computed(q) => QuadraticStatus::Computed(substitute(q, spec)?),
            other => other.clone(),
        };
        let sigma = SigmaTable { rows: [map(self.sigma.row(1))?, map(self.sigma.row(2))?] };
        Ok(RelationSet {
            n: self.n,
            originals: map(&self.originals)?,
            linears: map(&self.linears)?,
            quadratic,
            sigma,
            grading,
        })
    }
}

/// `l_i = z x_i s0 + y_i s1 + σ_i^1` and `l_(n+i) = y_i s0 + x_i s1 + σ_i^2`.
pub fn linear_relations(data: &UnprojectionData) -> RelationSet {
    linear_relations_from(data, sigma(data))
}

pub(crate) fn linear_relations_from(data: &UnprojectionData, sigma: SigmaTable) -> RelationSet {
    let n = data.n();
    let (s0, s1, z) = (data.s0(), data.s1(), data.z());
    let mut linears = Vec::with_capacity(2 * n);
    for i in 1..=n {
        linears.push(z * data.xi(i) * &s0 + data.yi(i) * &s1 + sigma.get(1, i));
    }
    for i in 1..=n {
        linears.push(data.yi(i) * &s0 + data.xi(i) * &s1 + sigma.get(2, i));
    }
    RelationSet {
        n,
        originals: data.f().to_vec(),
        linears,
        quadratic: QuadraticStatus::Omitted,
        sigma,
        grading: Grading::ambient(data.table()).expect("ambient table"),
    }
}

/// The full generator set of `I_Y`. The quadratic comes from the closed formula
/// for `n = 2` and from `s1^2 - z s0^2 - a s0 + b` for `n = 3`; for `n >= 4` it
/// is marked [`QuadraticStatus::Open`].
pub fn ideal_generators(n: usize) -> Result<RelationSet> {
    let data = build_data(n)?;
    let mut set = linear_relations(&data);
    set.quadratic = match n {
        2 => QuadraticStatus::Computed(reid_quadratic(data.table())),
        3 => QuadraticStatus::Computed(quadratic_q(&data)?),
        _ => QuadraticStatus::Open,
    };
    Ok(set)
}
