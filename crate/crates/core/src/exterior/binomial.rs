/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc is C(n, i) times (n - i) / (i + 1)
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// `Σ_{j=p}^{n} (-1)^(j-p) C(n, j)`.
pub fn alternating_binomial_sum(n: u64, p: u64) -> i128 {
    (p..=n)
        .map(|j| {
            let c = binomial(n, j) as i128;
            if (j - p) % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum()
}

/// Expected rank `r_p` of the image of `φ_p` in the complex `L*` over a free
/// module of rank `n`: the alternating sum of `rank(∧^j L ⊕ ∧^j L) = 2 C(n, j)`
/// for `j = p..=n`.
pub fn expected_rank(n: u64, p: u64) -> i128 {
    2 * alternating_binomial_sum(n, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(alternating_binomial_sum(4, 2), 6 - 4 + 1);
        assert_eq!(expected_rank(3, 1), 2);
    }
}
