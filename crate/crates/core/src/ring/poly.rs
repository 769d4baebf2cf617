use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::accum::TermAccumulator;
use super::monomial::Monomial;
use super::table::VariableTable;
use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// A normalized sparse polynomial with exact rational coefficients.
///
/// Terms are stored in strictly decreasing monomial order and no stored
/// coefficient is zero.
#[derive(Clone)]
pub struct Polynomial {
    table: Arc<VariableTable>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn same_table(a: &Arc<VariableTable>, b: &Arc<VariableTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; fails when the operands live over different tables.
pub fn poly_arith(p: &Polynomial, q: &Polynomial, kind: ArithKind) -> Result<Polynomial> {
    if !same_table(&p.table, &q.table) {
        return Err(Error::IncompatibleRing);
    }
    Ok(match kind {
        ArithKind::Add => p.add_ref(q),
        ArithKind::Sub => p.sub_ref(q),
        ArithKind::Mul => p.mul_ref(q),
    })
}

impl Polynomial {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        Self { table: table.clone(), terms: Vec::new() }
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::constant(table, Coeff::one())
    }

    pub fn constant(table: &Arc<VariableTable>, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(table);
        }
        Self { table: table.clone(), terms: vec![(Monomial::one(), c)] }
    }

    pub fn integer(table: &Arc<VariableTable>, c: i64) -> Self {
        Self::constant(table, Coeff::from_integer(BigInt::from(c)))
    }

    pub fn var(table: &Arc<VariableTable>, idx: usize) -> Self {
        assert!(idx < table.len(), "variable index {idx} out of range");
        Self { table: table.clone(), terms: vec![(Monomial::var(idx, 1), Coeff::one())] }
    }

    pub fn var_named(table: &Arc<VariableTable>, name: &str) -> Result<Self> {
        let idx = table.position(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(table, idx))
    }

    pub fn monomial(table: &Arc<VariableTable>, m: Monomial, c: Coeff) -> Self {
        assert!(m.span() <= table.len(), "monomial does not fit the table");
        if c.is_zero() {
            return Self::zero(table);
        }
        Self { table: table.clone(), terms: vec![(m, c)] }
    }

    /// Normalizes an arbitrary term list: merges duplicates, drops zeros, sorts.
    pub fn from_terms(table: &Arc<VariableTable>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: FxHashMap<Monomial, Coeff> = FxHashMap::default();
        for (m, c) in terms {
            assert!(m.span() <= table.len(), "monomial does not fit the table");
            match acc.get_mut(&m) {
                Some(slot) => *slot += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_accumulator(table, acc)
    }

    fn from_accumulator(table: &Arc<VariableTable>, acc: FxHashMap<Monomial, Coeff>) -> Self {
        Self::from_distinct(table, acc.into_iter().filter(|(_, c)| !c.is_zero()))
    }

    /// Sorts terms whose monomials are already distinct and coefficients nonzero.
    pub(crate) fn from_distinct(table: &Arc<VariableTable>, terms: impl Iterator<Item = (Monomial, Coeff)>) -> Self {
        let mut terms: Vec<_> = terms.collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self { table: table.clone(), terms }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Coeff::zero())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Indices of variables occurring with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.table.len()];
        for (m, _) in &self.terms {
            for (i, _) in m.support() {
                seen[i] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.total_degree())
    }

    fn check_table(&self, other: &Self) {
        assert!(same_table(&self.table, &other.table), "polynomials belong to different variable tables");
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.check_table(other);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let signed = |c: &Coeff| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((b[j].0.clone(), signed(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        terms.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(a[i..].iter().cloned());
        terms.extend(b[j..].iter().map(|(m, c)| (m.clone(), signed(c))));
        Self { table: self.table.clone(), terms }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.check_table(other);
            self.terms = other.terms.clone();
            return;
        }
        *self = self.merge(other, false);
    }

    pub fn neg_ref(&self) -> Self {
        Self { table: self.table.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        Self { table: self.table.clone(), terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Coeff::from_integer(BigInt::from(c)))
    }

    /// Multiplies by a single term; monomial multiplication preserves the order.
    fn mul_term(&self, m: &Monomial, c: &Coeff) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), if c.is_one() { d.clone() } else { d * c }))
            .collect();
        Self { table: self.table.clone(), terms }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_table(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.table);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc = TermAccumulator::with_capacity(&self.table, self.terms.len().max(other.terms.len()) * 2);
        acc.add_product(self, other, false);
        acc.finish()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut result = Self::one(&self.table);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }

    /// Moves the polynomial onto an equal table held by a different `Arc`.
    pub fn with_table(&self, table: &Arc<VariableTable>) -> Result<Self> {
        if !same_table(&self.table, table) {
            return Err(Error::IncompatibleRing);
        }
        Ok(Self { table: table.clone(), terms: self.terms.clone() })
    }

    /// Renders at most `max_terms` terms followed by an elision marker.
    pub fn truncated_display(&self, max_terms: usize) -> String {
        if self.terms.len() <= max_terms {
            return self.to_string();
        }
        let head = Self { table: self.table.clone(), terms: self.terms[..max_terms].to_vec() };
        format!("{head} + ... ({} terms total)", self.terms.len())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, table: &VariableTable, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, e) in m.support() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(table.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical form: `3/2*x1^2*y1 - x2 + 1`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.table, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}
