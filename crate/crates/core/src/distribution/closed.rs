use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::numbers::{binomial, catalan, motzkin};
use super::table::trim_row;
use super::Pattern;
use crate::error::{Error, Result};

fn exact_div(num: BigInt, den: i64, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!(
            "{what}: division by {den} leaves remainder {r}"
        )));
    }
    Ok(q)
}

fn non_negative(v: BigInt, what: &str) -> Result<BigUint> {
    match v.sign() {
        Sign::Minus => Err(Error::Inconsistency(format!("{what} evaluated to {v}"))),
        _ => Ok(v.magnitude().clone()),
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// `2^(n-2k-1) C_k binom(n-1, 2k)`
fn ddu_coefficient(n: usize, k: usize) -> BigUint {
    if 2 * k > n - 1 {
        return BigUint::zero();
    }
    pow2(n - 2 * k - 1) * catalan(k) * binomial(n as i64 - 1, 2 * k as i64).magnitude()
}

/// `1/(n+1) Σ_j (-1)^(k-j) binom(n+j, n) binom(n+1, k-j) Σ_i binom(n+j+1-k, i+1) binom(n-i, i-j)`,
/// `0 <= j <= k`, `j <= i <= floor((n+j)/2)`.
fn ddd_coefficient(n: usize, k: usize) -> Result<BigUint> {
    let (n, k) = (n as i64, k as i64);
    let mut total = BigInt::zero();
    for j in 0..=k {
        let inner: BigInt = (j..=(n + j) / 2)
            .map(|i| binomial(n + j + 1 - k, i + 1) * binomial(n - i, i - j))
            .sum();
        let term = binomial(n + j, n) * binomial(n + 1, k - j) * inner;
        if (k - j) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let what = format!("321 closed form at n={n}, k={k}");
    non_negative(exact_div(total, n + 1, &what)?, &what)
}

/// `Σ_{j=k}^{floor((n-1)/2)} (-1)^(j-k)/(n-j) binom(j, k) binom(n-j, j) binom(2n-3j, n-j+1)`
fn dudd_coefficient(n: usize, k: usize) -> Result<BigUint> {
    let (n, k) = (n as i64, k as i64);
    let what = format!("231 closed form at n={n}, k={k}");
    let mut total = BigInt::zero();
    for j in k..=(n - 1) / 2 {
        let numerator = binomial(j, k) * binomial(n - j, j) * binomial(2 * n - 3 * j, n - j + 1);
        let term = exact_div(numerator, n - j, &what)?;
        if (j - k) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    non_negative(total, &what)
}

/// `a(n, k)` from the closed-form coefficient formulas. Defined for `n >= 1`;
/// 123 shares the 321 formula and 132 shares the 231 formula.
pub fn closed_form(pattern: Pattern, n: usize, k: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfDomain(
            "closed forms are defined for n >= 1; the n = 0 row is a(0, 0) = 1".into(),
        ));
    }
    match pattern.representative() {
        Pattern::P213 => Ok(ddu_coefficient(n, k)),
        Pattern::P321 => ddd_coefficient(n, k),
        _ => dudd_coefficient(n, k),
    }
}

/// Full row `a(n, 0..=kmax)`, with the row for `n = 0` seeded as `[1]`.
pub fn closed_row(pattern: Pattern, n: usize) -> Result<Vec<BigUint>> {
    if n == 0 {
        return Ok(vec![BigUint::one()]);
    }
    let row = (0..=n)
        .map(|k| closed_form(pattern, n, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(trim_row(row))
}

/// `Σ_{j=0}^{floor((n-1)/2)} (-1)^j/(n-j) binom(n-j, j) binom(2n-3j, n-j+1)`
pub fn dudd_free_count(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfDomain("the avoider sum is defined for n >= 1".into()));
    }
    let n = n as i64;
    let what = format!("231-avoider sum at n={n}");
    let mut total = BigInt::zero();
    for j in 0..=(n - 1) / 2 {
        let numerator = binomial(n - j, j) * binomial(2 * n - 3 * j, n - j + 1);
        let term = exact_div(numerator, n - j, &what)?;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    non_negative(total, &what)
}

/// `|S_n(3-1-2, τ)|` for the consecutive pattern `τ`, `n >= 1`.
pub fn avoider_count(pattern: Pattern, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfDomain("avoider counts are defined for n >= 1".into()));
    }
    match pattern.representative() {
        Pattern::P213 => Ok(pow2(n - 1)),
        Pattern::P321 => Ok(motzkin(n)),
        _ => dudd_free_count(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn n3_rows() {
        for p in Pattern::ALL {
            assert_eq!(closed_row(p, 3).unwrap(), row(&[4, 1]), "{p}");
        }
        assert_eq!(closed_row(Pattern::P213, 4).unwrap(), row(&[8, 6]));
        assert_eq!(closed_form(Pattern::P213, 4, 2).unwrap(), BigUint::zero());
    }

    #[test]
    fn n0_is_out_of_formula_domain() {
        assert!(matches!(closed_form(Pattern::P213, 0, 0), Err(Error::OutOfDomain(_))));
        assert_eq!(closed_row(Pattern::P321, 0).unwrap(), row(&[1]));
        assert!(avoider_count(Pattern::P213, 0).is_err());
    }

    #[test]
    fn avoider_examples() {
        assert_eq!(avoider_count(Pattern::P213, 5).unwrap(), BigUint::from(16u32));
        assert_eq!(avoider_count(Pattern::P321, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(avoider_count(Pattern::P123, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(avoider_count(Pattern::P231, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(avoider_count(Pattern::P123, 8).unwrap(), BigUint::from(323u32));
    }

    #[test]
    fn row_sums_are_catalan() {
        for p in [Pattern::P213, Pattern::P321, Pattern::P231] {
            for n in 1..=30 {
                let sum: BigUint = closed_row(p, n).unwrap().iter().sum();
                assert_eq!(sum, catalan(n), "{p} n={n}");
            }
        }
    }

    #[test]
    fn zero_columns_are_avoider_counts() {
        for p in Pattern::ALL {
            for n in 1..=30 {
                assert_eq!(closed_form(p, n, 0).unwrap(), avoider_count(p, n).unwrap());
            }
        }
    }
}
