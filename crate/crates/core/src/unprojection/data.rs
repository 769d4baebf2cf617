use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exterior::{LinearForm, ModuleMap, SecondComplex};
use crate::ring::{make_ambient_ring, PolyMatrix, Polynomial, VariableTable};

/// Generic input data of the type II_1 unprojection for parameter `n`.
///
/// Holds the skew matrices `A^1..A^(n-1)`, the symmetric matrices
/// `B^1..B^(n-1)`, the row vectors `x, y`, the `2 x 2n` matrix `M`, the
/// original relations `f_p = x A^p y^t + y B^p y^t - z x B^p x^t` and the
/// module maps `u1, u2: N -> L` with `j`-th columns `-A^j x^t + B^j y^t` and
/// `-B^j x^t`.
#[derive(Clone, Debug)]
pub struct UnprojectionData {
    n: usize,
    table: Arc<VariableTable>,
    a: Vec<PolyMatrix>,
    b: Vec<PolyMatrix>,
    x: PolyMatrix,
    y: PolyMatrix,
    z: Polynomial,
    m: PolyMatrix,
    f: Vec<Polynomial>,
    u1: ModuleMap,
    u2: ModuleMap,
}

pub fn build_data(n: usize) -> Result<UnprojectionData> {
    let table = make_ambient_ring(n)?;
    let t = &table;
    let var = |idx: usize| Polynomial::var(t, idx);
    let x = PolyMatrix::row_vector(t, (1..=n).map(|i| var(t.x(i))).collect());
    let y = PolyMatrix::row_vector(t, (1..=n).map(|i| var(t.y(i))).collect());
    let z = var(t.z());

    let a: Vec<PolyMatrix> = (1..n)
        .map(|p| {
            PolyMatrix::from_fn(t, n, n, |i, j| match (i + 1).cmp(&(j + 1)) {
                std::cmp::Ordering::Less => var(t.a(p, i + 1, j + 1)),
                std::cmp::Ordering::Greater => -var(t.a(p, j + 1, i + 1)),
                std::cmp::Ordering::Equal => Polynomial::zero(t),
            })
        })
        .collect();
    let b: Vec<PolyMatrix> = (1..n)
        .map(|p| PolyMatrix::from_fn(t, n, n, |i, j| var(t.b(p, i.min(j) + 1, i.max(j) + 1))))
        .collect();

    let m = PolyMatrix::from_fn(t, 2, 2 * n, |r, c| match (r, c < n) {
        (0, true) => y.get(0, c).clone(),
        (0, false) => &z * x.get(0, c - n),
        (_, true) => x.get(0, c).clone(),
        (_, false) => y.get(0, c - n).clone(),
    });

    let (xt, yt) = (x.transpose(), y.transpose());
    let f = (0..n - 1)
        .map(|p| {
            let v = x.mul(&a[p]).mul(&yt).scalar()? + y.mul(&b[p]).mul(&yt).scalar()?
                - &z * &x.mul(&b[p]).mul(&xt).scalar()?;
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;

    let u1_cols: Vec<PolyMatrix> = (0..n - 1).map(|p| a[p].mul(&xt).neg().try_add(&b[p].mul(&yt))).collect::<Result<_>>()?;
    let u2_cols: Vec<PolyMatrix> = (0..n - 1).map(|p| b[p].mul(&xt).neg()).collect();
    let u1 = ModuleMap::from_matrix(&hconcat(t, &u1_cols))?;
    let u2 = ModuleMap::from_matrix(&hconcat(t, &u2_cols))?;

    Ok(UnprojectionData { n, table, a, b, x, y, z, m, f, u1, u2 })
}

fn hconcat(t: &Arc<VariableTable>, cols: &[PolyMatrix]) -> PolyMatrix {
    let rows = cols[0].rows();
    PolyMatrix::from_fn(t, rows, cols.len(), |i, j| cols[j].get(i, 0).clone())
}

impl UnprojectionData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    /// `A^p`, 1-based `p`.
    pub fn a(&self, p: usize) -> &PolyMatrix {
        &self.a[p - 1]
    }

    /// `B^p`, 1-based `p`.
    pub fn b(&self, p: usize) -> &PolyMatrix {
        &self.b[p - 1]
    }

    pub fn x(&self) -> &PolyMatrix {
        &self.x
    }

    pub fn y(&self) -> &PolyMatrix {
        &self.y
    }

    /// `x_i`, 1-based.
    pub fn xi(&self, i: usize) -> &Polynomial {
        self.x.get(0, i - 1)
    }

    /// `y_i`, 1-based.
    pub fn yi(&self, i: usize) -> &Polynomial {
        self.y.get(0, i - 1)
    }

    pub fn z(&self) -> &Polynomial {
        &self.z
    }

    pub fn s0(&self) -> Polynomial {
        Polynomial::var(&self.table, self.table.s0())
    }

    pub fn s1(&self) -> Polynomial {
        Polynomial::var(&self.table, self.table.s1())
    }

    pub fn m(&self) -> &PolyMatrix {
        &self.m
    }

    /// The original relations `f_1..f_(n-1)`.
    pub fn f(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn u1(&self) -> &ModuleMap {
        &self.u1
    }

    pub fn u2(&self) -> &ModuleMap {
        &self.u2
    }

    /// `F_ij = x_i y_j - x_j y_i`.
    pub fn f_minor(&self, i: usize, j: usize) -> Polynomial {
        self.xi(i) * self.yi(j) - self.xi(j) * self.yi(i)
    }

    /// `ψ: N -> R`, `ψ(ẽ_p) = f_p`.
    pub fn psi(&self) -> LinearForm {
        LinearForm::new(&self.table, self.f.clone()).expect("rank within cap")
    }

    pub fn second_complex(&self) -> SecondComplex {
        let x = self.x.row(0);
        let y = self.y.row(0);
        SecondComplex::new(&self.table, &x, &y, &self.z).expect("x and y have length n")
    }

    /// Copy with `u1`, `u2` replaced, for controls that break the hypotheses.
    pub fn with_maps(&self, u1: ModuleMap, u2: ModuleMap) -> Result<Self> {
        let shape = (self.n - 1, self.n);
        if (u1.source_rank(), u1.target_rank()) != shape || (u2.source_rank(), u2.target_rank()) != shape {
            return Err(Error::Shape("replacement maps must be N -> L".into()));
        }
        Ok(Self { u1, u2, ..self.clone() })
    }
}
