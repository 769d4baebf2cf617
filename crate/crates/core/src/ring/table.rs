use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

/// An ordered list of uniquely named variables.
///
/// Tables built by [`make_ambient_ring`] additionally remember the parameter
/// `n` and expose index helpers for the named families of variables.
#[derive(Clone)]
pub struct VariableTable {
    names: Vec<String>,
    index: FxHashMap<String, usize>,
    ambient_n: Option<usize>,
}

impl PartialEq for VariableTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VariableTable {}

impl fmt::Debug for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VariableTable")
            .field("names", &self.names)
            .field("ambient_n", &self.ambient_n)
            .finish()
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl VariableTable {
    /// Builds a table from an explicit list of names.
    ///
    /// Names must be ASCII identifiers (a letter followed by letters or digits)
    /// and pairwise distinct.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = FxHashMap::default();
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::Spec(format!("invalid variable name `{name}`")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Spec(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(Self { names, index, ambient_n: None })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// The parameter `n` when this is an ambient table.
    pub fn ambient_n(&self) -> Option<usize> {
        self.ambient_n
    }

    fn n(&self) -> usize {
        self.ambient_n.expect("index helper used on a non-ambient variable table")
    }

    /// Index of `x_i`, 1-based `i`.
    pub fn x(&self, i: usize) -> usize {
        let n = self.n();
        assert!((1..=n).contains(&i), "x index {i} out of range");
        i - 1
    }

    /// Index of `y_i`, 1-based `i`.
    pub fn y(&self, i: usize) -> usize {
        let n = self.n();
        assert!((1..=n).contains(&i), "y index {i} out of range");
        n + i - 1
    }

    pub fn z(&self) -> usize {
        2 * self.n()
    }

    /// Index of `A^p_{ij}` with `i < j`.
    pub fn a(&self, p: usize, i: usize, j: usize) -> usize {
        let n = self.n();
        assert!((1..n).contains(&p) && 1 <= i && i < j && j <= n, "A^{p}_{i}{j} out of range");
        let per = n * (n - 1) / 2;
        2 * n + 1 + (p - 1) * per + strict_pair_offset(n, i, j)
    }

    /// Index of `B^p_{lm}` with `l <= m`.
    pub fn b(&self, p: usize, l: usize, m: usize) -> usize {
        let n = self.n();
        assert!((1..n).contains(&p) && 1 <= l && l <= m && m <= n, "B^{p}_{l}{m} out of range");
        let a_count = (n - 1) * n * (n - 1) / 2;
        let per = n * (n + 1) / 2;
        2 * n + 1 + a_count + (p - 1) * per + weak_pair_offset(n, l, m)
    }

    pub fn s0(&self) -> usize {
        self.len() - 2
    }

    pub fn s1(&self) -> usize {
        self.len() - 1
    }
}

/// Rank of `(i, j)`, `i < j`, among strictly increasing pairs in lexicographic order.
fn strict_pair_offset(n: usize, i: usize, j: usize) -> usize {
    (1..i).map(|r| n - r).sum::<usize>() + (j - i - 1)
}

/// Rank of `(l, m)`, `l <= m`, among weakly increasing pairs in lexicographic order.
fn weak_pair_offset(n: usize, l: usize, m: usize) -> usize {
    (1..l).map(|r| n - r + 1).sum::<usize>() + (m - l)
}

/// Number of variables of the ambient table for parameter `n`.
pub(crate) fn ambient_variable_count(n: usize) -> usize {
    2 * n + 1 + (n - 1) * n * (n - 1) / 2 + (n - 1) * n * (n + 1) / 2 + 2
}

/// The ambient polynomial ring for parameter `n`, extended by `s0, s1`.
///
/// Variable order: `x1..xn, y1..yn, z`, then `A{p}p{i}{j}` by `p` and
/// lexicographic `(i, j)`, then `B{p}p{l}{m}` likewise, then `s0, s1`.
pub fn make_ambient_ring(n: usize) -> Result<Arc<VariableTable>> {
    if n < 2 {
        return Err(Error::ParameterRange(format!("n must be at least 2, got {n}")));
    }
    if n > 9 {
        // two-digit indices would make names like A1p112 ambiguous
        return Err(Error::ParameterRange(format!("n must be at most 9, got {n}")));
    }
    let mut names = Vec::with_capacity(ambient_variable_count(n));
    names.extend((1..=n).map(|i| format!("x{i}")));
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.push("z".to_string());
    for p in 1..n {
        for i in 1..=n {
            for j in i + 1..=n {
                names.push(format!("A{p}p{i}{j}"));
            }
        }
    }
    for p in 1..n {
        for l in 1..=n {
            for m in l..=n {
                names.push(format!("B{p}p{l}{m}"));
            }
        }
    }
    names.push("s0".to_string());
    names.push("s1".to_string());
    let mut table = VariableTable::new(names)?;
    table.ambient_n = Some(n);
    debug_assert_eq!(table.len(), ambient_variable_count(n));
    Ok(Arc::new(table))
}
