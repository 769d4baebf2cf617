use std::sync::Arc;

use super::wedge::{ExteriorAccumulator, ExteriorElement, WedgeIndex, MAX_RANK};
use crate::error::{Error, Result};
use crate::ring::{PolyMatrix, Polynomial, TermAccumulator, VariableTable};

/// A homomorphism `h: R^rank -> R`, given by `h(e_i) = coeffs[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    table: Arc<VariableTable>,
    coeffs: Vec<Polynomial>,
}

impl LinearForm {
    pub fn new(table: &Arc<VariableTable>, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.len() > MAX_RANK {
            return Err(Error::Shape(format!("rank {} exceeds cap {MAX_RANK}", coeffs.len())));
        }
        if coeffs.iter().any(|c| **c.table() != **table) {
            return Err(Error::IncompatibleRing);
        }
        Ok(Self { table: table.clone(), coeffs })
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Polynomial {
        &self.coeffs[i]
    }

    /// Evaluates on a degree-1 element.
    pub fn apply(&self, v: &ExteriorElement) -> Result<Polynomial> {
        if v.degree() != 1 || v.rank() != self.rank() {
            return Err(Error::Shape(format!(
                "linear form of rank {} applied to ∧^{} of rank {}",
                self.rank(),
                v.degree(),
                v.rank()
            )));
        }
        let mut acc = Polynomial::zero(&self.table);
        for (idx, c) in v.terms() {
            let i = idx.positions().next().expect("degree one");
            acc.add_assign_ref(&(&self.coeffs[i] * c));
        }
        Ok(acc)
    }

    /// The composite `self ∘ u`, a form on the source of `u`.
    pub fn compose(&self, u: &ModuleMap) -> Result<LinearForm> {
        if u.target_rank() != self.rank() {
            return Err(Error::Shape(format!(
                "cannot compose a form of rank {} with a map into rank {}",
                self.rank(),
                u.target_rank()
            )));
        }
        let coeffs = u.columns.iter().map(|col| self.apply(col)).collect::<Result<Vec<_>>>()?;
        Ok(Self { table: self.table.clone(), coeffs })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::Shape(format!("forms of rank {} and {}", self.rank(), other.rank())));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { table: self.table.clone(), coeffs })
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self { table: self.table.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }
}

/// A homomorphism `R^source_rank -> R^target_rank`, stored by the images of
/// the source basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    table: Arc<VariableTable>,
    source_rank: usize,
    target_rank: usize,
    columns: Vec<ExteriorElement>,
}

impl ModuleMap {
    /// Column `j` of the matrix is the image of the `j`-th source basis vector.
    pub fn from_matrix(m: &PolyMatrix) -> Result<Self> {
        if m.rows() > MAX_RANK || m.cols() > MAX_RANK {
            return Err(Error::Shape(format!("{}x{} exceeds rank cap {MAX_RANK}", m.rows(), m.cols())));
        }
        let columns = (0..m.cols()).map(|j| ExteriorElement::vector(m.table(), &m.column(j))).collect();
        Ok(Self { table: m.table().clone(), source_rank: m.cols(), target_rank: m.rows(), columns })
    }

    pub fn identity(table: &Arc<VariableTable>, rank: usize) -> Self {
        Self::from_matrix(&PolyMatrix::identity(table, rank)).expect("identity within rank cap")
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn column(&self, j: usize) -> &ExteriorElement {
        &self.columns[j]
    }

    pub fn to_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.table, self.target_rank, self.source_rank, |i, j| {
            self.columns[j].coefficient(WedgeIndex::single(i))
        })
    }

    /// Image of a degree-1 element.
    pub fn apply(&self, v: &ExteriorElement) -> Result<ExteriorElement> {
        induced_wedge(self, 1, v)
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self { columns: self.columns.iter().map(|col| col.scale(c)).collect(), ..self.clone() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let columns = self.columns.iter().zip(&other.columns).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(Self { columns, ..self.clone() })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.source_rank, self.target_rank) != (other.source_rank, other.target_rank) {
            return Err(Error::Shape(format!(
                "maps {}->{} and {}->{}",
                self.source_rank, self.target_rank, other.source_rank, other.target_rank
            )));
        }
        Ok(())
    }
}

fn check_element(v: &ExteriorElement, degree: usize, rank: usize) -> Result<()> {
    if v.degree() != degree || v.rank() != rank {
        return Err(Error::Shape(format!(
            "expected ∧^{degree} of rank {rank}, got ∧^{} of rank {}",
            v.degree(),
            v.rank()
        )));
    }
    Ok(())
}

/// Koszul differential `d^p h: ∧^p L -> ∧^(p-1) L`,
/// `v_1 ∧ ... ∧ v_p ↦ Σ (-1)^(i+1) h(v_i) v_1 ∧ ... v̂_i ... ∧ v_p`.
pub fn koszul_diff(h: &LinearForm, p: usize, v: &ExteriorElement) -> Result<ExteriorElement> {
    if p == 0 {
        return Err(Error::Shape("Koszul differential needs p >= 1".into()));
    }
    check_element(v, p, h.rank())?;
    let mut out = ExteriorAccumulator::new(h.table(), h.rank(), p - 1);
    for (idx, c) in v.terms() {
        for (k, i) in idx.positions().enumerate() {
            out.add_scaled(idx.without(i), h.coeff(i), c, k % 2 == 1);
        }
    }
    Ok(out.finish())
}

/// The coefficient of `e_index` in `d h (v)`, computed without forming the
/// rest of the image.
pub fn koszul_coefficient(h: &LinearForm, v: &ExteriorElement, index: WedgeIndex) -> Result<Polynomial> {
    check_element(v, index.degree() + 1, h.rank())?;
    let mut acc = TermAccumulator::new(h.table());
    for i in (0..h.rank()).filter(|&i| !index.contains(i)) {
        let (source, _) = index.merge(WedgeIndex::single(i)).expect("disjoint");
        if let Some(c) = v.get(source) {
            let before = index.positions().filter(|&j| j < i).count();
            acc.add_product(h.coeff(i), c, before % 2 == 1);
        }
    }
    Ok(acc.finish())
}

/// `d^(p-1) h1 ∘ d^p h2 + d^(p-1) h2 ∘ d^p h1` applied to `v`, for any choice
/// of differential.
pub fn anticommutator_with<D>(diff: D, h1: &LinearForm, h2: &LinearForm, p: usize, v: &ExteriorElement) -> Result<ExteriorElement>
where
    D: Fn(&LinearForm, usize, &ExteriorElement) -> Result<ExteriorElement>,
{
    if p < 2 {
        return Err(Error::Shape("anticommutator needs p >= 2".into()));
    }
    if h1.rank() != h2.rank() {
        return Err(Error::Shape(format!("forms of rank {} and {}", h1.rank(), h2.rank())));
    }
    let a = diff(h1, p - 1, &diff(h2, p, v)?)?;
    let b = diff(h2, p - 1, &diff(h1, p, v)?)?;
    a.try_add(&b)
}

/// True iff `d^(p-1) h1 ∘ d^p h2 + d^(p-1) h2 ∘ d^p h1` vanishes on `v`.
pub fn anticommutator_check(h1: &LinearForm, h2: &LinearForm, p: usize, v: &ExteriorElement) -> Result<bool> {
    Ok(anticommutator_with(koszul_diff, h1, h2, p, v)?.is_zero())
}

/// `∧^p a`, sending `c_1 ∧ ... ∧ c_p` to `a(c_1) ∧ ... ∧ a(c_p)`; the
/// identity on scalars when `p = 0`.
pub fn induced_wedge(a: &ModuleMap, p: usize, v: &ExteriorElement) -> Result<ExteriorElement> {
    check_element(v, p, a.source_rank)?;
    let mut out = ExteriorAccumulator::new(&a.table, a.target_rank, p);
    for (idx, c) in v.terms() {
        let positions: Vec<usize> = idx.positions().collect();
        let mut prod = ExteriorElement::scalar(c.clone(), a.target_rank);
        let Some((&last, init)) = positions.split_last() else {
            out.add(&prod);
            continue;
        };
        for &j in init {
            prod = prod.wedge(&a.columns[j])?;
            if prod.is_zero() {
                break;
            }
        }
        out.add_wedge(&prod, &a.columns[last]);
    }
    Ok(out.finish())
}

/// `alt(a1^p, a2^q)`: the sum over all placements of `p` copies of `a1` and
/// `q` copies of `a2` across the factors of a `(p+q)`-fold wedge.
///
/// Each basis wedge `c_1 ∧ ... ∧ c_(p+q)` is expanded directly, so the result
/// does not rely on any recursive identity between alternating products.
pub fn alt_apply(a1: &ModuleMap, a2: &ModuleMap, p: usize, q: usize, v: &ExteriorElement) -> Result<ExteriorElement> {
    a1.check_same_shape(a2)?;
    check_element(v, p + q, a1.source_rank)?;
    let mut out = ExteriorAccumulator::new(&a1.table, a1.target_rank, p + q);
    for (idx, c) in v.terms() {
        let positions: Vec<usize> = idx.positions().collect();
        let start = ExteriorElement::scalar(c.clone(), a1.target_rank);
        place(a1, a2, &positions, p, q, start, &mut out)?;
    }
    Ok(out.finish())
}

fn place(
    a1: &ModuleMap,
    a2: &ModuleMap,
    rest: &[usize],
    p: usize,
    q: usize,
    partial: ExteriorElement,
    out: &mut ExteriorAccumulator,
) -> Result<()> {
    let Some((&j, tail)) = rest.split_first() else {
        out.add(&partial);
        return Ok(());
    };
    if tail.is_empty() {
        if p > 0 {
            out.add_wedge(&partial, &a1.columns[j]);
        }
        if q > 0 {
            out.add_wedge(&partial, &a2.columns[j]);
        }
        return Ok(());
    }
    if p > 0 {
        let next = partial.wedge(&a1.columns[j])?;
        if !next.is_zero() {
            place(a1, a2, tail, p - 1, q, next, out)?;
        }
    }
    if q > 0 {
        let next = partial.wedge(&a2.columns[j])?;
        if !next.is_zero() {
            place(a1, a2, tail, p, q - 1, next, out)?;
        }
    }
    Ok(())
}

/// `alt(a1^p, a2^q)` with the convention that a negative exponent gives the
/// zero map.
pub fn alt_term(a1: &ModuleMap, a2: &ModuleMap, p: isize, q: isize, v: &ExteriorElement) -> Result<ExteriorElement> {
    if p < 0 || q < 0 {
        return Ok(ExteriorElement::zero(&a1.table, a1.target_rank, v.degree()));
    }
    alt_apply(a1, a2, p as usize, q as usize, v)
}
