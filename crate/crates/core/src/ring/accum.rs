use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::poly::{Coeff, Polynomial};
use super::table::VariableTable;

/// Accumulator slot: machine integers until a value stops fitting.
#[derive(Clone, Debug)]
enum Slot {
    Small(i128),
    Big(Coeff),
}

impl Slot {
    fn add(&mut self, v: Slot) {
        match (&mut *self, v) {
            (Slot::Small(a), Slot::Small(b)) => match a.checked_add(b) {
                Some(s) => *a = s,
                None => *self = Slot::Big(Coeff::from_integer(BigInt::from(*a) + BigInt::from(b))),
            },
            (Slot::Big(a), v) => *a += v.into_coeff(),
            (Slot::Small(a), Slot::Big(b)) => *self = Slot::Big(b + Coeff::from_integer(BigInt::from(*a))),
        }
    }

    fn into_coeff(self) -> Coeff {
        match self {
            Slot::Small(a) => Coeff::from_integer(BigInt::from(a)),
            Slot::Big(c) => c,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Slot::Small(a) => *a == 0,
            Slot::Big(c) => c.is_zero(),
        }
    }
}

fn small(c: &Coeff) -> Option<i64> {
    if c.is_integer() {
        c.numer().to_i64()
    } else {
        None
    }
}

/// Unordered sum of terms, for building a polynomial from many products.
pub struct TermAccumulator {
    table: Arc<VariableTable>,
    map: FxHashMap<Monomial, Slot>,
    scratch: Vec<u32>,
}

impl TermAccumulator {
    pub fn new(table: &Arc<VariableTable>) -> Self {
        Self::with_capacity(table, 0)
    }

    pub fn with_capacity(table: &Arc<VariableTable>, cap: usize) -> Self {
        Self {
            table: table.clone(),
            map: FxHashMap::with_capacity_and_hasher(cap, Default::default()),
            scratch: Vec::with_capacity(16),
        }
    }

    fn push_scratch(&mut self, v: Slot) {
        match self.map.get_mut(&self.scratch[..]) {
            Some(slot) => slot.add(v),
            None => {
                self.map.insert(Monomial::from_words(&self.scratch), v);
            }
        }
    }

    fn push(&mut self, m: &Monomial, v: Slot) {
        match self.map.get_mut(m) {
            Some(slot) => slot.add(v),
            None => {
                self.map.insert(m.clone(), v);
            }
        }
    }

    /// Adds `±p`.
    pub fn add(&mut self, p: &Polynomial, negate: bool) {
        for (m, c) in p.terms() {
            let v = match small(c) {
                Some(a) => Slot::Small(if negate { -i128::from(a) } else { i128::from(a) }),
                None => Slot::Big(if negate { -c } else { c.clone() }),
            };
            self.push(m, v);
        }
    }

    /// Adds `±a·b`.
    pub fn add_product(&mut self, a: &Polynomial, b: &Polynomial, negate: bool) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let bs: Vec<(&Monomial, &Coeff, Option<i64>)> = b.terms().map(|(m, c)| (m, c, small(c))).collect();
        self.map.reserve(a.len().max(b.len()));
        for (m1, c1) in a.terms() {
            let s1 = small(c1);
            for &(m2, c2, s2) in &bs {
                m1.mul_into(m2, &mut self.scratch);
                let v = match (s1, s2) {
                    (Some(x), Some(y)) => {
                        let p = i128::from(x) * i128::from(y);
                        Slot::Small(if negate { -p } else { p })
                    }
                    _ => {
                        let p = c1 * c2;
                        Slot::Big(if negate { -p } else { p })
                    }
                };
                self.push_scratch(v);
            }
        }
    }

    pub fn finish(self) -> Polynomial {
        let terms = self.map.into_iter().filter(|(_, v)| !v.is_zero()).map(|(m, v)| (m, v.into_coeff()));
        Polynomial::from_distinct(&self.table, terms)
    }
}
