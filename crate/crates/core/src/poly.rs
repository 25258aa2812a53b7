//! Exact univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A polynomial with big-rational coefficients, indexed by degree.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Ordinary binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Binomial coefficient with a signed upper argument, `C(n, k)` for `n < 0` via
/// the falling factorial.
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    generalized_binomial(&rat(n), k).to_integer()
}

/// `C(alpha, j) = alpha (alpha - 1) ... (alpha - j + 1) / j!`.
pub fn generalized_binomial(alpha: &BigRational, j: u64) -> BigRational {
    let mut num = BigRational::one();
    for i in 0..j {
        num *= alpha - rat(i as i64);
    }
    num / BigRational::from_integer(factorial(j).into())
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Writes a rational as `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `q`.
    pub fn variable() -> Self {
        Self::from_integers(&[0, 1])
    }

    /// `c q^d`.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// `a q + b`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_int(&self, q: i64) -> BigRational {
        self.eval(&rat(q))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Coefficient list low degree first, `;`-separated, rationals as `p/q`.
    pub fn to_csv_cell(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs.iter().map(format_rational).collect::<Vec<_>>().join(";")
    }

    pub fn from_csv_cell(cell: &str) -> Option<Self> {
        let coeffs: Option<Vec<_>> = cell.split(';').map(parse_rational).collect();
        Some(Self::new(coeffs?))
    }

    /// `C(self, j)` as a polynomial: `self (self - 1) ... (self - j + 1) / j!`.
    pub fn binomial(&self, j: u64) -> Self {
        let mut acc = Self::one();
        for i in 0..j {
            acc = &acc * &(self - &Self::constant(rat(i as i64)));
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial(j).into()))
    }

    /// The unique polynomial of degree `< points.len()` through the given points.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        // Newton divided differences
        let n = points.len();
        let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
        let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let denom = xs[i] - xs[i - level];
                table[i] = (&table[i] - &table[i - 1]) / denom;
            }
        }
        let mut result = Self::zero();
        for i in (0..n).rev() {
            let factor = Self::linear(BigRational::one(), -xs[i].clone());
            result = &(&result * &factor) + &Self::constant(table[i].clone());
        }
        result
    }

    /// Interpolates through `values[i]` at `q = i + 1`, expecting degree at most
    /// `max_degree`. The first `max_degree + 1` values determine the polynomial;
    /// the remaining values are checks.
    pub fn interpolate_checked(values: &[BigInt], max_degree: usize) -> Result<Self> {
        if values.len() < max_degree + 1 {
            return Err(Error::InterpolationInconsistent(format!(
                "{} values cannot determine degree {max_degree}",
                values.len()
            )));
        }
        let points: Vec<_> = values[..=max_degree]
            .iter()
            .enumerate()
            .map(|(i, v)| (rat(i as i64 + 1), BigRational::from_integer(v.clone())))
            .collect();
        let poly = Self::interpolate(&points);
        for (i, v) in values.iter().enumerate().skip(max_degree + 1) {
            let got = poly.eval_int(i as i64 + 1);
            if got != BigRational::from_integer(v.clone()) {
                return Err(Error::InterpolationInconsistent(format!(
                    "value at q={} is {v}, polynomial gives {}",
                    i + 1,
                    format_rational(&got)
                )));
            }
        }
        Ok(poly)
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect())
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

impl fmt::Display for ExactPolynomial {
    /// Human-readable form in the variable `q`, low degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            let show_coeff = d == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&abs))?;
            }
            match d {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPolynomial({self})")
    }
}

/// Converts a nonnegative integer rational to `u64`, if it fits.
pub fn rational_to_u64(r: &BigRational) -> Option<u64> {
    if r.is_integer() {
        r.to_integer().to_u64()
    } else {
        None
    }
}

/// Rising product `(k+1)(k+2)...(2k)`.
pub fn rising_half(k: u64) -> BigUint {
    (k + 1..=2 * k).fold(BigUint::one(), |acc, i| acc * i)
}

/// Exact quotient `a / b`, `None` unless `b` divides `a`.
pub fn exact_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if b.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 2), BigUint::from(36u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial_signed(-3, 2), BigInt::from(6));
        assert_eq!(generalized_binomial(&rat_frac(1, 2), 2), rat_frac(-1, 8));
        assert_eq!(generalized_binomial(&rat(7), 0), rat(1));
    }

    #[test]
    fn arithmetic() {
        let a = ExactPolynomial::from_integers(&[1, 1]);
        let b = ExactPolynomial::from_integers(&[-1, 1]);
        assert_eq!(&a * &b, ExactPolynomial::from_integers(&[-1, 0, 1]));
        assert_eq!(&a - &a, ExactPolynomial::zero());
        assert_eq!((&a - &a).degree(), None);
        assert_eq!((&a + &b).to_string(), "2q");
        assert_eq!(ExactPolynomial::from_integers(&[3, 0, 8, 0, 1]).to_string(), "3 + 8q^2 + q^4");
        assert_eq!(ExactPolynomial::from_integers(&[0, -1]).to_string(), "-q");
    }

    #[test]
    fn csv_cells() {
        let p = ExactPolynomial::new(vec![rat_frac(1, 2), rat(0), rat(-3)]);
        assert_eq!(p.to_csv_cell(), "1/2;0;-3");
        assert_eq!(ExactPolynomial::from_csv_cell("1/2;0;-3").unwrap(), p);
        assert_eq!(ExactPolynomial::zero().to_csv_cell(), "0");
    }

    #[test]
    fn polynomial_binomial_matches_pointwise() {
        // C(5q - 3, 2) evaluated at q = 2 is C(7, 2)
        let alpha = ExactPolynomial::from_integers(&[-3, 5]);
        let c = alpha.binomial(2);
        assert_eq!(c.eval_int(2), rat(21));
        assert_eq!(c.eval_int(-1), generalized_binomial(&rat(-8), 2));
    }

    #[test]
    fn interpolation_recovers_and_checks() {
        let values: Vec<BigInt> = (1..=6).map(|q| BigInt::from(q * (5 * q - 3) / 2)).collect();
        let z = ExactPolynomial::interpolate_checked(&values, 2).unwrap();
        assert_eq!(z, ExactPolynomial::new(vec![rat(0), rat_frac(-3, 2), rat_frac(5, 2)]));
        let mut bad = values.clone();
        bad[5] += 1;
        assert!(matches!(
            ExactPolynomial::interpolate_checked(&bad, 2),
            Err(Error::InterpolationInconsistent(_))
        ));
    }

    #[test]
    fn rising() {
        assert_eq!(rising_half(1), BigUint::from(2u32));
        assert_eq!(rising_half(2), BigUint::from(12u32));
        assert_eq!(rising_half(0), BigUint::one());
    }

    proptest! {
        #[test]
        fn interpolation_roundtrip(coeffs in prop::collection::vec(-20i64..20, 0..6)) {
            let p = ExactPolynomial::from_integers(&coeffs);
            let pts: Vec<_> = (0..coeffs.len().max(1) as i64)
                .map(|x| (rat(x * 2 - 3), p.eval_int(x * 2 - 3)))
                .collect();
            prop_assert_eq!(ExactPolynomial::interpolate(&pts), p);
        }

        #[test]
        fn eval_is_ring_homomorphism(a in prop::collection::vec(-9i64..9, 0..5),
                                     b in prop::collection::vec(-9i64..9, 0..5),
                                     x in -5i64..5) {
            let (pa, pb) = (ExactPolynomial::from_integers(&a), ExactPolynomial::from_integers(&b));
            prop_assert_eq!((&pa * &pb).eval_int(x), pa.eval_int(x) * pb.eval_int(x));
            prop_assert_eq!((&pa + &pb).eval_int(x), pa.eval_int(x) + pb.eval_int(x));
        }
    }
}
