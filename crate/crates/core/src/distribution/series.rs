//! Truncated power series in `t` whose coefficients are polynomials in `z`
//! over the rationals.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Pattern;
use crate::error::{Error, Result};

/// Dense polynomial in `z`, no trailing zeros; the zero polynomial is empty.
pub type ZPoly = Vec<BigRational>;

fn normalize(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        *o += c;
    }
    normalize(out)
}

fn poly_neg(a: &ZPoly) -> ZPoly {
    a.iter().map(|c| -c).collect()
}

fn poly_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    normalize(out)
}

/// `a / b` when `b` divides `a` exactly in `Q[z]`.
fn poly_div_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let lead = b.last()?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
    for d in (0..quot.len()).rev() {
        let c = &rem[d + b.len() - 1] / lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[d + j] -= &c * bj;
            }
        }
        quot[d] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| normalize(quot))
}

/// `Σ_n c_n(z) t^n`, known for `n < precision`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateSeries {
    coeffs: Vec<ZPoly>,
}

impl BivariateSeries {
    /// Series with integer coefficients: `terms[n][k]` multiplies `t^n z^k`.
    pub fn from_integer_terms(terms: &[&[i64]], precision: usize) -> Self {
        let coeffs = (0..precision)
            .map(|n| {
                let poly = terms.get(n).copied().unwrap_or(&[]);
                normalize(
                    poly.iter()
                        .map(|&c| BigRational::from_integer(BigInt::from(c)))
                        .collect(),
                )
            })
            .collect();
        BivariateSeries { coeffs }
    }

    pub fn one(precision: usize) -> Self {
        Self::from_integer_terms(&[&[1]], precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `t^n` as a polynomial in `z`.
    pub fn coefficient(&self, n: usize) -> &ZPoly {
        &self.coeffs[n]
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(precision, Vec::new());
        BivariateSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        BivariateSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| poly_add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        BivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| poly_add(a, &poly_neg(b)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.precision().min(other.precision());
        let coeffs = (0..p)
            .map(|n| {
                (0..=n).fold(Vec::new(), |acc, i| {
                    poly_add(&acc, &poly_mul(&self.coeffs[i], &other.coeffs[n - i]))
                })
            })
            .collect();
        BivariateSeries { coeffs }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        BivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|p| normalize(p.iter().map(|c| c * factor).collect()))
                .collect(),
        }
    }

    /// Exact division by `t`; loses one term of precision.
    pub fn div_t(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if c.is_empty() => Ok(BivariateSeries {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => Err(Error::Inconsistency("series has a nonzero t^0 term; cannot divide by t".into())),
            None => Err(Error::Inconsistency("series has no known terms".into())),
        }
    }

    /// Exact division by `z`, coefficientwise.
    pub fn div_z(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| match p.first() {
                Some(c) if !c.is_zero() => Err(Error::Inconsistency(format!(
                    "coefficient of t^{n} has a nonzero z^0 term; cannot divide by z"
                ))),
                _ => Ok(p.iter().skip(1).cloned().collect()),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BivariateSeries { coeffs })
    }

    /// `self / divisor`, each step an exact division by the divisor's
    /// `t^0` coefficient in `Q[z]`.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let p = self.precision().min(divisor.precision());
        let lead = divisor.coeffs.first().filter(|c| !c.is_empty()).ok_or_else(|| {
            Error::Inconsistency("divisor has a zero t^0 coefficient".into())
        })?;
        let mut quot: Vec<ZPoly> = Vec::with_capacity(p);
        for n in 0..p {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                acc = poly_add(&acc, &poly_neg(&poly_mul(&divisor.coeffs[i], &quot[n - i])));
            }
            let q = poly_div_exact(&acc, lead).ok_or_else(|| {
                Error::Inconsistency(format!("coefficient of t^{n} is not divisible by the leading term"))
            })?;
            quot.push(q);
        }
        Ok(BivariateSeries { coeffs: quot })
    }

    /// Square root with constant term 1, by Newton iteration
    /// `X <- (X + S/X) / 2` at doubling precision.
    pub fn sqrt(&self) -> Result<Self> {
        let target = self.precision();
        let unit: ZPoly = vec![BigRational::one()];
        if target == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0] != unit {
            return Err(Error::Inconsistency("radicand must have constant term 1".into()));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut root = BivariateSeries::one(1);
        let mut known = 1;
        while known < target {
            known = (2 * known).min(target);
            let x = root.truncate(known);
            let s = self.truncate(known);
            root = x.add(&s.div(&x)?).scale(&half);
        }
        Ok(root)
    }

    /// Coefficients as non-negative integers, `rows[n][k]` for `t^n z^k`.
    pub fn integer_rows(&self) -> Result<Vec<Vec<BigUint>>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, poly)| {
                let row: Vec<BigUint> = poly
                    .iter()
                    .enumerate()
                    .map(|(k, c)| {
                        if !c.is_integer() || c.numer().sign() == Sign::Minus {
                            return Err(Error::Inconsistency(format!(
                                "coefficient of t^{n} z^{k} is {c}, not a non-negative integer"
                            )));
                        }
                        Ok(c.numer().magnitude().clone())
                    })
                    .collect::<Result<_>>()?;
                Ok(super::table::trim_row(row))
            })
            .collect()
    }
}

/// Expansion of the bivariate generating function of `pattern` through `t^order`.
pub fn gf_series(pattern: Pattern, order: usize) -> Result<BivariateSeries> {
    // one extra term is consumed by the division by t
    let p = order + 2;
    let series = |terms: &[&[i64]]| BivariateSeries::from_integer_terms(terms, p);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));

    let result = match pattern.representative() {
        Pattern::P213 => {
            // (1 - 2t + 2tz - sqrt((1-2t)^2 - 4t^2 z)) / (2tz)
            let radicand = series(&[&[1], &[-4], &[4, -4]]);
            let numerator = series(&[&[1], &[-2, 2]]).sub(&radicand.sqrt()?);
            numerator.div_t()?.scale(&half).div_z()?
        }
        Pattern::P321 => {
            // (1 - t + tz - sqrt(1 - 2t - 3t^2 + tz(tz + 2t - 2))) / (2t(t + z - tz))
            let radicand = series(&[&[1], &[-2, -2], &[-3, 2, 1]]);
            let numerator = series(&[&[1], &[-1, 1]]).sub(&radicand.sqrt()?);
            let denominator = series(&[&[0, 1], &[1, -1]]);
            numerator.div_t()?.scale(&half).div(&denominator)?
        }
        _ => {
            // (1 - (1-z)t^2 - sqrt(((1-z)t^2 + 1)^2 - 4t)) / (2t(1 - (1-z)t))
            let radicand = series(&[&[1], &[-4], &[2, -2], &[], &[1, -2, 1]]);
            let numerator = series(&[&[1], &[], &[-1, 1]]).sub(&radicand.sqrt()?);
            let denominator = series(&[&[1], &[-1, 1]]);
            numerator.div_t()?.scale(&half).div(&denominator)?
        }
    };
    Ok(result.truncate(order + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn sqrt_squares_back() {
        let s = BivariateSeries::from_integer_terms(&[&[1], &[-4], &[4, -4]], 12);
        let r = s.sqrt().unwrap();
        assert_eq!(r.mul(&r), s);
    }

    #[test]
    fn sqrt_rejects_non_unit_constant() {
        let s = BivariateSeries::from_integer_terms(&[&[4]], 3);
        assert!(s.sqrt().is_err());
    }

    #[test]
    fn inexact_divisions_are_errors() {
        let s = BivariateSeries::from_integer_terms(&[&[1], &[1]], 3);
        assert!(s.div_t().is_err());
        assert!(s.div_z().is_err());
        let by_z = BivariateSeries::from_integer_terms(&[&[0, 1]], 3);
        assert!(s.div(&by_z).is_err());
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = BivariateSeries::from_integer_terms(&[&[1, 2], &[0, -1, 3], &[5]], 8);
        let b = BivariateSeries::from_integer_terms(&[&[0, 1], &[1, -1]], 8);
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    #[test]
    fn low_order_coefficients() {
        for p in Pattern::ALL {
            let rows = gf_series(p, 4).unwrap().integer_rows().unwrap();
            assert_eq!(rows[0], row(&[1]), "{p}");
            assert_eq!(rows[1], row(&[1]));
            assert_eq!(rows[2], row(&[2]));
            assert_eq!(rows[3], row(&[4, 1]));
        }
        let rows = gf_series(Pattern::P213, 4).unwrap().integer_rows().unwrap();
        assert_eq!(rows[4], row(&[8, 6]));
    }
}
