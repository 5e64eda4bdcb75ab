use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` with the conventions `C(a, b) = 0` when `b < 0` or `a < b`, and
/// `C(a, 0) = 1` for `a >= 0`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc *= a - k;
        acc /= k + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(1, 2), BigInt::zero());
        assert_eq!(binomial(4, 1), BigInt::from(4));
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn pascal_with_boundaries() {
        for a in 1..40 {
            for b in -3..a + 3 {
                assert_eq!(
                    binomial(a, b),
                    binomial(a - 1, b - 1) + binomial(a - 1, b),
                    "C({a},{b})"
                );
            }
        }
    }
}
