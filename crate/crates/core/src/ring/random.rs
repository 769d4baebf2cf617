//! Seeded random polynomials for randomized identity checks.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use super::monomial::Monomial;
use super::poly::{Coeff, Polynomial};
use super::table::VariableTable;

/// A random polynomial with at most `terms` terms of total degree at most
/// `max_degree` in the variables `vars`, with integer coefficients in
/// `[-bound, bound]`.
pub fn random_polynomial<R: Rng + ?Sized>(
    rng: &mut R,
    table: &Arc<VariableTable>,
    vars: &[usize],
    terms: usize,
    max_degree: u16,
    bound: i64,
) -> Polynomial {
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let mut exps = vec![0u16; table.len()];
        let deg = rng.random_range(0..=max_degree);
        for _ in 0..deg {
            if vars.is_empty() {
                break;
            }
            exps[vars[rng.random_range(0..vars.len())]] += 1;
        }
        let c = rng.random_range(-bound..=bound);
        out.push((Monomial::from_exponents(&exps), Coeff::from_integer(BigInt::from(c))));
    }
    Polynomial::from_terms(table, out)
}

/// A table `t1..tk`, used as coefficients for generic random data.
pub fn scratch_table(k: usize) -> Arc<VariableTable> {
    Arc::new(VariableTable::new((1..=k).map(|i| format!("t{i}"))).expect("valid names"))
}
