use std::sync::Arc;

use super::maps::{koszul_diff, LinearForm};
use super::wedge::ExteriorElement;
use crate::error::{Error, Result};
use crate::ring::{Polynomial, VariableTable};

/// The four forms `h1(e_i) = y_i`, `h2(e_i) = x_i`, `h3(e_i) = z x_i`,
/// `h4(e_i) = y_i` on a free module `L` of rank `n`.
#[derive(Clone, Debug)]
pub struct SecondComplex {
    pub h1: LinearForm,
    pub h2: LinearForm,
    pub h3: LinearForm,
    pub h4: LinearForm,
}

impl SecondComplex {
    pub fn new(table: &Arc<VariableTable>, x: &[Polynomial], y: &[Polynomial], z: &Polynomial) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::Shape(format!("x has {} entries, y has {}", x.len(), y.len())));
        }
        let h1 = LinearForm::new(table, y.to_vec())?;
        let h2 = LinearForm::new(table, x.to_vec())?;
        let h3 = h2.scale(z);
        let h4 = h1.clone();
        Ok(Self { h1, h2, h3, h4 })
    }

    pub fn rank(&self) -> usize {
        self.h1.rank()
    }
}

/// `φ_p(a, b) = (d^p h1(a) + d^p h3(b), d^p h2(a) + d^p h4(b))`.
pub fn phi_map(
    p: usize,
    pair: (&ExteriorElement, &ExteriorElement),
    complex: &SecondComplex,
) -> Result<(ExteriorElement, ExteriorElement)> {
    let n = complex.rank();
    if p == 0 || p > n {
        return Err(Error::Shape(format!("φ_p needs 1 <= p <= {n}, got {p}")));
    }
    let (a, b) = pair;
    let first = koszul_diff(&complex.h1, p, a)?.try_add(&koszul_diff(&complex.h3, p, b)?)?;
    let second = koszul_diff(&complex.h2, p, a)?.try_add(&koszul_diff(&complex.h4, p, b)?)?;
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::WedgeIndex;
    use crate::ring::make_ambient_ring;

    #[test]
    fn n2_first_basis_vector() {
        let t = make_ambient_ring(2).unwrap();
        let x: Vec<_> = (1..=2).map(|i| Polynomial::var(&t, t.x(i))).collect();
        let y: Vec<_> = (1..=2).map(|i| Polynomial::var(&t, t.y(i))).collect();
        let c = SecondComplex::new(&t, &x, &y, &Polynomial::var(&t, t.z())).unwrap();
        let e1 = ExteriorElement::basis(&t, 2, WedgeIndex::single(0));
        let zero = ExteriorElement::zero(&t, 2, 1);
        let (a, b) = phi_map(1, (&e1, &zero), &c).unwrap();
        assert_eq!(a.scalar_value(), y[0]);
        assert_eq!(b.scalar_value(), x[0]);
        let (za, zb) = phi_map(1, (&zero, &zero), &c).unwrap();
        assert!(za.is_zero() && zb.is_zero());
    }
}
