use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// `C(n, k)` by the multiplicative product formula; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // the running product is C(n - k + i, i), so the division is exact
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// The polynomial `C(n + r, r) = (n + r)(n + r - 1)...(n + 1) / r!` in `n`.
pub fn binomial_rising(r: i64) -> Result<Polynomial> {
    if r < 1 {
        return Err(Error::InvalidArgument(format!(
            "binomial_rising needs r >= 1, got {r}"
        )));
    }
    let mut p = Polynomial::one();
    let mut factorial = BigInt::one();
    for j in 1..=r {
        p = &p * &Polynomial::new(vec![Rational::from(j), Rational::one()]);
        factorial *= BigInt::from(j);
    }
    Ok(p.scale(&Rational::one().checked_div(&Rational::from(factorial))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn subsets_of_size(n: u32, k: u32) -> u64 {
        (0u32..(1 << n)).filter(|s| s.count_ones() == k).count() as u64
    }

    #[test]
    fn matches_subset_enumeration() {
        assert_eq!(subsets_of_size(6, 4), 15);
        assert_eq!(subsets_of_size(10, 4), 210);
        assert_eq!(binomial(6, 4), BigInt::from(15));
        assert_eq!(binomial(10, 4), BigInt::from(210));
        for n in 0..=12u32 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n as u64, k as i64),
                    BigInt::from(subsets_of_size(n, k))
                );
            }
        }
    }

    #[test]
    fn out_of_range_is_zero() {
        for m in 0..20 {
            assert_eq!(binomial(m, 0), BigInt::one());
            assert_eq!(binomial(m, -1), BigInt::zero());
            assert_eq!(binomial(m, m as i64 + 1), BigInt::zero());
        }
        assert_eq!(binomial(3, 4), BigInt::zero());
    }

    #[test]
    fn pascal_identity() {
        for n in 1..=64u64 {
            for k in 1..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn rising_polynomials() {
        let r4 = binomial_rising(4).unwrap();
        let expected = Polynomial::new(vec![
            rat(24, 1),
            rat(50, 1),
            rat(35, 1),
            rat(10, 1),
            rat(1, 1),
        ])
        .scale(&rat(1, 24));
        assert_eq!(r4, expected);
        assert_eq!(
            binomial_rising(1).unwrap(),
            Polynomial::new(vec![rat(1, 1), rat(1, 1)])
        );
        // (n + 2)(n + 1) / 2 expands to (n^2 + 3n + 2) / 2
        assert_eq!(
            binomial_rising(2).unwrap(),
            Polynomial::new(vec![rat(1, 1), rat(3, 2), rat(1, 2)])
        );
        assert!(binomial_rising(0).is_err());
        assert!(binomial_rising(-3).is_err());
    }

    #[test]
    fn rising_agrees_with_binomial() {
        for r in 1..=6i64 {
            let p = binomial_rising(r).unwrap();
            for j in 0..=50u64 {
                assert_eq!(
                    p.evaluate(&Rational::from(j)),
                    Rational::from(binomial(j + r as u64, r))
                );
            }
        }
    }
}
