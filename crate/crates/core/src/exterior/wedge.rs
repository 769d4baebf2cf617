use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Polynomial, TermAccumulator, VariableTable};

/// Maximum module rank representable by a [`WedgeIndex`].
pub const MAX_RANK: usize = 64;

/// A strictly increasing set of basis indices `i_1 < ... < i_p`, stored as a
/// bitmask over 0-based positions and displayed 1-based as `e[1,3,4]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WedgeIndex(u64);

impl WedgeIndex {
    pub const EMPTY: WedgeIndex = WedgeIndex(0);

    /// From 0-based basis positions; fails on repeats or out-of-range entries.
    pub fn new(positions: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &i in positions {
            if i >= MAX_RANK {
                return Err(Error::Shape(format!("basis index {i} exceeds rank cap {MAX_RANK}")));
            }
            if bits & (1 << i) != 0 {
                return Err(Error::Shape(format!("repeated basis index {i}")));
            }
            bits |= 1 << i;
        }
        Ok(Self(bits))
    }

    /// From 1-based indices, the convention used in displays.
    pub fn one_based(indices: &[usize]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::Shape("1-based wedge index contains 0".into()));
        }
        Self::new(&indices.iter().map(|i| i - 1).collect::<Vec<_>>())
    }

    pub fn single(i: usize) -> Self {
        assert!(i < MAX_RANK);
        Self(1 << i)
    }

    /// The top wedge `e_1 ∧ ... ∧ e_rank`.
    pub fn top(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        if rank == MAX_RANK {
            Self(u64::MAX)
        } else {
            Self((1u64 << rank) - 1)
        }
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_RANK && self.0 & (1 << i) != 0
    }

    /// Highest position plus one; zero for the empty index.
    pub fn span(self) -> usize {
        MAX_RANK - self.0.leading_zeros() as usize
    }

    /// 0-based positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn without(self, i: usize) -> Self {
        Self(self.0 & !(1 << i))
    }

    /// `e_self ∧ e_other = sign * e_(self ∪ other)`, or `None` if they overlap.
    pub fn merge(self, other: WedgeIndex) -> Option<(WedgeIndex, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        for j in other.positions() {
            // entries of self that lie to the right of j once sorted
            swaps += (self.0 >> j).count_ones();
        }
        Some((WedgeIndex(self.0 | other.0), swaps % 2 == 1))
    }

    /// All indices of the given degree inside a module of the given rank, in
    /// lexicographic order.
    pub fn all(rank: usize, degree: usize) -> Vec<WedgeIndex> {
        fn rec(start: usize, rank: usize, left: usize, bits: u64, out: &mut Vec<WedgeIndex>) {
            if left == 0 {
                out.push(WedgeIndex(bits));
                return;
            }
            for i in start..=rank - left {
                rec(i + 1, rank, left - 1, bits | (1 << i), out);
            }
        }
        let mut out = Vec::new();
        if degree <= rank {
            rec(0, rank, degree, 0, &mut out);
        }
        out
    }
}

impl Ord for WedgeIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.positions().cmp(other.positions())
    }
}

impl PartialOrd for WedgeIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.positions().map(|i| (i + 1).to_string()).collect();
        write!(f, "e[{}]", parts.join(","))
    }
}

impl fmt::Debug for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of `∧^degree` of a free module of the given rank, with
/// polynomial coefficients on the standard basis wedges.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    table: Arc<VariableTable>,
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<WedgeIndex, Polynomial>,
}

impl ExteriorElement {
    pub fn zero(table: &Arc<VariableTable>, rank: usize, degree: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds cap {MAX_RANK}");
        Self { table: table.clone(), rank, degree, coeffs: BTreeMap::new() }
    }

    pub fn scalar(value: Polynomial, rank: usize) -> Self {
        let mut e = Self::zero(value.table(), rank, 0);
        e.add_term(WedgeIndex::EMPTY, value);
        e
    }

    pub fn basis(table: &Arc<VariableTable>, rank: usize, index: WedgeIndex) -> Self {
        assert!(index.span() <= rank, "{index} does not fit in rank {rank}");
        let mut e = Self::zero(table, rank, index.degree());
        e.add_term(index, Polynomial::one(table));
        e
    }

    /// Degree-1 element `Σ entries[i] e_(i+1)`.
    pub fn vector(table: &Arc<VariableTable>, entries: &[Polynomial]) -> Self {
        let mut e = Self::zero(table, entries.len(), 1);
        for (i, c) in entries.iter().enumerate() {
            e.add_term(WedgeIndex::single(i), c.clone());
        }
        e
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (WedgeIndex, &Polynomial)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, index: WedgeIndex) -> Polynomial {
        self.coeffs.get(&index).cloned().unwrap_or_else(|| Polynomial::zero(&self.table))
    }

    /// The stored coefficient, `None` when it is zero.
    pub fn get(&self, index: WedgeIndex) -> Option<&Polynomial> {
        self.coeffs.get(&index)
    }

    /// Coefficient of a degree-0 element.
    pub fn scalar_value(&self) -> Polynomial {
        debug_assert_eq!(self.degree, 0);
        self.coefficient(WedgeIndex::EMPTY)
    }

    pub fn add_term(&mut self, index: WedgeIndex, c: Polynomial) {
        assert_eq!(index.degree(), self.degree, "wedge index {index} has the wrong degree");
        assert!(index.span() <= self.rank, "{index} does not fit in rank {}", self.rank);
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&index) {
            Some(slot) => {
                slot.add_assign_ref(&c);
                if slot.is_zero() {
                    self.coeffs.remove(&index);
                }
            }
            None => {
                self.coeffs.insert(index, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank || self.degree != other.degree {
            return Err(Error::Shape(format!(
                "cannot combine ∧^{} of rank {} with ∧^{} of rank {}",
                self.degree, self.rank, other.degree, other.rank
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(*k, v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.check_compatible(other).expect("exterior shape mismatch");
        for (k, v) in &other.coeffs {
            self.add_term(*k, v.clone());
        }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(k, v)| (*k, -v)).collect();
        Self { table: self.table.clone(), rank: self.rank, degree: self.degree, coeffs }
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        let mut out = Self::zero(&self.table, self.rank, self.degree);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.coeffs {
            out.add_term(*k, v * c);
        }
        out
    }

    /// Exterior product over a common rank.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::Shape(format!("wedge of ranks {} and {}", self.rank, other.rank)));
        }
        let mut acc = ExteriorAccumulator::new(&self.table, self.rank, self.degree + other.degree);
        acc.add_wedge(self, other);
        Ok(acc.finish())
    }

    /// First nonzero coefficient, used as a failure witness.
    pub fn first_nonzero(&self) -> Option<(WedgeIndex, &Polynomial)> {
        self.coeffs.iter().next().map(|(k, v)| (*k, v))
    }
}

/// Unordered sum of exterior terms; avoids re-merging sorted coefficient
/// lists when many products land on the same basis wedges.
pub(crate) struct ExteriorAccumulator {
    table: Arc<VariableTable>,
    rank: usize,
    degree: usize,
    slots: BTreeMap<WedgeIndex, TermAccumulator>,
}

impl ExteriorAccumulator {
    pub(crate) fn new(table: &Arc<VariableTable>, rank: usize, degree: usize) -> Self {
        Self { table: table.clone(), rank, degree, slots: BTreeMap::new() }
    }

    fn slot(&mut self, k: WedgeIndex) -> &mut TermAccumulator {
        let table = &self.table;
        self.slots.entry(k).or_insert_with(|| TermAccumulator::new(table))
    }

    pub(crate) fn add(&mut self, v: &ExteriorElement) {
        debug_assert_eq!((v.rank, v.degree), (self.rank, self.degree));
        for (k, c) in &v.coeffs {
            self.slot(*k).add(c, false);
        }
    }

    /// Adds `±a·b` to the coefficient of `k`.
    pub(crate) fn add_scaled(&mut self, k: WedgeIndex, a: &Polynomial, b: &Polynomial, negate: bool) {
        self.slot(k).add_product(a, b, negate);
    }

    /// Adds `a ∧ b`; the caller guarantees matching ranks and total degree.
    pub(crate) fn add_wedge(&mut self, a: &ExteriorElement, b: &ExteriorElement) {
        debug_assert_eq!(a.degree + b.degree, self.degree);
        for (i, x) in &a.coeffs {
            for (j, y) in &b.coeffs {
                if let Some((k, negative)) = i.merge(*j) {
                    self.slot(k).add_product(x, y, negative);
                }
            }
        }
    }

    pub(crate) fn finish(self) -> ExteriorElement {
        let coeffs = self
            .slots
            .into_iter()
            .map(|(k, acc)| (k, acc.finish()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        ExteriorElement { table: self.table, rank: self.rank, degree: self.degree, coeffs }
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(k, v)| format!("({v})*{k}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∧^{}(rank {}) {}", self.degree, self.rank, self)
    }
}
