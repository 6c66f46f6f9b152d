//! Exact binomial coefficients for the moment-space expansions.

/// Binomial coefficient as an exact integer. Panics on overflow, which
/// cannot happen for the representation sizes this crate supports
/// (`two_j <= 64` keeps every value well inside i128).
pub fn binomial_i128(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(i128::from(n - i))
            .expect("binomial overflow");
        acc /= i128::from(i + 1);
    }
    acc
}

/// Binomial coefficient in f64. Exact while the value fits in 53 bits,
/// which holds for every `n <= 56`.
pub fn binomial(n: u32, k: u32) -> f64 {
    binomial_i128(n, k) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial_i128(0, 0), 1);
        assert_eq!(binomial_i128(4, 2), 6);
        assert_eq!(binomial_i128(10, 3), 120);
        assert_eq!(binomial_i128(3, 5), 0);
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40u32 {
            for k in 1..n {
                assert_eq!(
                    binomial_i128(n, k),
                    binomial_i128(n - 1, k - 1) + binomial_i128(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn central_binomial_exact_in_f64() {
        assert_eq!(binomial(40, 20), 137_846_528_820.0);
    }
}
