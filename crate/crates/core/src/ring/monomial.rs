use std::borrow::Borrow;
use std::cmp::Ordering;

/// Sparse exponent vector: one packed word `(variable << 16) | exponent` per
/// variable with positive exponent, in increasing variable order.
///
/// `Ord` is graded reverse lexicographic with respect to the table order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

fn pack(var: usize, exp: u16) -> u32 {
    let var = u16::try_from(var).expect("variable index fits in 16 bits");
    (u32::from(var) << 16) | u32::from(exp)
}

fn var_of(w: u32) -> usize {
    (w >> 16) as usize
}

fn exp_of(w: u32) -> u16 {
    w as u16
}

impl Monomial {
    pub fn one() -> Self {
        Self(Box::new([]))
    }

    /// From a dense exponent vector.
    pub fn from_exponents(exps: &[u16]) -> Self {
        Self(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| pack(i, e)).collect())
    }

    pub fn var(idx: usize, exp: u16) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self(Box::new([pack(idx, exp)]))
    }

    pub fn exponent(&self, idx: usize) -> u16 {
        self.0.binary_search_by(|w| var_of(*w).cmp(&idx)).map_or(0, |k| exp_of(self.0[k]))
    }

    /// One past the largest variable index that occurs.
    pub fn span(&self) -> usize {
        self.0.last().map_or(0, |w| var_of(*w) + 1)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&w| u32::from(exp_of(w))).sum()
    }

    /// Variables with positive exponent, as `(index, exponent)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.0.iter().map(|&w| (var_of(w), exp_of(w)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        self.mul_into(other, &mut out);
        Self(out.into_boxed_slice())
    }

    /// Writes the packed words of `self * other` into `out`.
    pub(crate) fn mul_into(&self, other: &Self, out: &mut Vec<u32>) {
        out.clear();
        let (a, b) = (&self.0[..], &other.0[..]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (wa, wb) = (a[i], b[j]);
            match (wa >> 16).cmp(&(wb >> 16)) {
                Ordering::Less => {
                    out.push(wa);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(wb);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = exp_of(wa).checked_add(exp_of(wb)).expect("exponent overflow");
                    out.push((wa & 0xffff_0000) | u32::from(e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
    }

    pub(crate) fn from_words(words: &[u32]) -> Self {
        Self(words.into())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.support().all(|(v, e)| e <= other.exponent(v))
    }
}

impl Borrow<[u32]> for Monomial {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // grevlex: the larger monomial has the smaller exponent in the last differing variable
        let (a, b) = (&self.0[..], &other.0[..]);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            let (wa, wb) = (a[i - 1], b[j - 1]);
            match (wa >> 16).cmp(&(wb >> 16)) {
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => match exp_of(wa).cmp(&exp_of(wb)) {
                    Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                    ord => return ord.reverse(),
                },
            }
        }
        match (i, j) {
            (0, 0) => Ordering::Equal,
            (0, _) => Ordering::Greater,
            _ => Ordering::Less,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        // x, y, z with x > y > z
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        // degree dominates
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // x*z^... grevlex: x y^2 ... classic example: x^2 z < x y^2 in grevlex
        assert!(m(&[1, 2, 0]) > m(&[2, 0, 1]));
        assert_eq!(m(&[1, 1, 1]).cmp(&m(&[1, 1, 1])), Ordering::Equal);
    }

    #[test]
    fn multiply_and_divide() {
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 1]);
        assert_eq!(a.mul(&b), m(&[1, 3, 3]));
        assert!(a.divides(&a.mul(&b)));
        assert!(!b.divides(&a));
        assert_eq!(a.exponent(2), 2);
        assert_eq!(a.exponent(1), 0);
        assert_eq!(a.span(), 3);
        assert!(Monomial::one().is_one());
    }

    #[test]
    fn grevlex_matches_dense_comparison() {
        let dense = |a: &[u16], b: &[u16]| {
            let (da, db): (u32, u32) = (a.iter().map(|&e| u32::from(e)).sum(), b.iter().map(|&e| u32::from(e)).sum());
            da.cmp(&db).then_with(|| {
                a.iter().zip(b).rev().find(|(x, y)| x != y).map_or(Ordering::Equal, |(x, y)| y.cmp(x))
            })
        };
        let cases: [[u16; 4]; 6] = [[1, 0, 2, 0], [0, 0, 3, 0], [2, 1, 0, 0], [0, 1, 1, 1], [3, 0, 0, 0], [0, 0, 0, 3]];
        for a in &cases {
            for b in &cases {
                assert_eq!(m(a).cmp(&m(b)), dense(a, b), "{a:?} {b:?}");
            }
        }
    }
}
