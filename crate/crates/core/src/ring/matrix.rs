use std::fmt;
use std::sync::Arc;

use super::poly::Polynomial;
use super::table::VariableTable;
use crate::error::{Error, Result};

/// Dense row-major matrix of polynomials over one table.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    table: Arc<VariableTable>,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(table: &Arc<VariableTable>, rows: usize, cols: usize) -> Self {
        Self { rows, cols, table: table.clone(), data: vec![Polynomial::zero(table); rows * cols] }
    }

    pub fn identity(table: &Arc<VariableTable>, n: usize) -> Self {
        Self::from_fn(table, n, n, |i, j| if i == j { Polynomial::one(table) } else { Polynomial::zero(table) })
    }

    pub fn from_fn(
        table: &Arc<VariableTable>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, table: table.clone(), data }
    }

    pub fn from_rows(table: &Arc<VariableTable>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, table: table.clone(), data: rows.into_iter().flatten().collect() })
    }

    pub fn row_vector(table: &Arc<VariableTable>, entries: Vec<Polynomial>) -> Self {
        let cols = entries.len();
        Self { rows: 1, cols, table: table.clone(), data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "matrix index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        assert!(i < self.rows && j < self.cols, "matrix index ({i}, {j}) out of range");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.table, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(&self.table, self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(&self.table, self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j)))
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(&self.table, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.table);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc.add_assign_ref(&(a * b));
                }
            }
            acc
        }))
    }

    /// Panicking product, for shapes fixed by construction.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix shape mismatch")
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self::from_fn(&self.table, self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(&self.table, self.rows, self.cols, |i, j| -self.get(i, j))
    }

    /// The single entry of a 1x1 matrix.
    pub fn scalar(&self) -> Result<Polynomial> {
        if (self.rows, self.cols) != (1, 1) {
            return Err(Error::Shape(format!("expected 1x1, got {}x{}", self.rows, self.cols)));
        }
        Ok(self.data[0].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.table, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor_det(&all, &all))
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        match rows.len() {
            0 => Polynomial::one(&self.table),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                self.get(rows[0], cols[0]) * self.get(rows[1], cols[1])
                    - self.get(rows[0], cols[1]) * self.get(rows[1], cols[0])
            }
            _ => {
                let mut acc = Polynomial::zero(&self.table);
                let sub_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry * self.minor_det(sub_rows, &sub_cols);
                    acc = if k % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Classical adjugate: entry `(k, l)` is `(-1)^(k+l)` times the minor
    /// obtained by deleting row `l` and column `k`.
    pub fn adjugate(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!("adjugate of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        Ok(Self::from_fn(&self.table, n, n, |k, l| {
            let rows: Vec<usize> = (0..n).filter(|&r| r != l).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != k).collect();
            let m = self.minor_det(&rows, &cols);
            if (k + l) % 2 == 0 {
                m
            } else {
                -m
            }
        }))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i)))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ambient_ring, parse_polynomial};

    fn generic(t: &Arc<VariableTable>, names: [&str; 9]) -> PolyMatrix {
        PolyMatrix::from_fn(t, 3, 3, |i, j| parse_polynomial(t, names[3 * i + j]).unwrap())
    }

    #[test]
    fn adjugate_times_matrix_is_det_identity() {
        let t = make_ambient_ring(3).unwrap();
        let m = generic(&t, ["x1", "x2", "x3", "y1", "y2", "y3", "z", "A1p12", "B1p11"]);
        let det = m.det().unwrap();
        let expected = PolyMatrix::identity(&t, 3).scale(&det);
        assert_eq!(m.mul(&m.adjugate().unwrap()), expected);
        assert_eq!(m.adjugate().unwrap().mul(&m), expected);
    }

    #[test]
    fn det_is_multiplicative() {
        let t = make_ambient_ring(3).unwrap();
        let a = generic(&t, ["x1", "1", "x3", "0", "y2", "2", "z", "A1p12", "-1"]);
        let b = generic(&t, ["y1", "x2", "0", "1", "B1p12", "y3", "s0", "0", "s1"]);
        assert_eq!(a.mul(&b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn shape_errors() {
        let t = make_ambient_ring(2).unwrap();
        let a = PolyMatrix::zeros(&t, 2, 3);
        assert!(a.det().is_err());
        assert!(a.try_mul(&a).is_err());
        assert!(a.try_mul(&a.transpose()).is_ok());
    }
}
