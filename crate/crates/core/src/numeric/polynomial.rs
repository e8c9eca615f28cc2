//! Dense univariate polynomials over [`Rational`], ascending coefficient order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{binomial, Rational};
use crate::error::{Error, Result};

/// Degree of a polynomial; the zero polynomial sits below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

/// `coeffs[i]` is the coefficient of `x^i`; the last entry is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Rational>", from = "Vec<Rational>")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Polynomial::new(vec![c.into()])
    }

    /// `c * x^k`
    pub fn monomial(c: impl Into<Rational>, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c.into());
        Polynomial::new(coeffs)
    }

    /// Builds from integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// `q(x) = p(x + shift)`, expanded through the binomial theorem.
    pub fn compose_shift(&self, shift: &Rational) -> Polynomial {
        let n = self.coeffs.len();
        let powers: Vec<Rational> =
            std::iter::successors(Some(Rational::one()), |p| Some(p * shift))
                .take(n)
                .collect();
        let out = (0..n)
            .map(|j| {
                (j..n)
                    .map(|i| {
                        &self.coeffs[i]
                            * Rational::from(binomial(i as u64, j as i64))
                            * &powers[i - j]
                    })
                    .sum()
            })
            .collect();
        Polynomial::new(out)
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].checked_div(lead)?;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Divides by `(x - root)`, returning quotient and remainder `p(root)`.
    pub fn synthetic_division(&self, root: &Rational) -> (Polynomial, Rational) {
        if self.coeffs.is_empty() {
            return (Polynomial::zero(), Rational::zero());
        }
        let mut quot = Vec::with_capacity(self.coeffs.len() - 1);
        let mut carry = Rational::zero();
        for c in self.coeffs.iter().rev() {
            carry = carry * root + c;
            quot.push(carry.clone());
        }
        let rem = quot.pop().unwrap_or_else(Rational::zero);
        quot.reverse();
        (Polynomial::new(quot), rem)
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn common_denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients of `common_denominator() * self`.
    pub fn integer_numerator(&self) -> Vec<BigInt> {
        let d = Rational::from(self.common_denominator());
        self.coeffs
            .iter()
            .map(|c| (c * &d).to_integer().expect("cleared denominator"))
            .collect()
    }

    /// Human form in the given variable, e.g. `(m^4 - 6m^3 + 23m^2 - 18m + 24)/24`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let den = self.common_denominator();
        let body = format_integer_poly(&self.integer_numerator(), var);
        if den.is_one() {
            body
        } else if self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 {
            format!("{body}/{den}")
        } else {
            format!("({body})/{den}")
        }
    }
}

fn format_integer_poly(coeffs: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if i == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{i}")),
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.display_in("x"))
    }
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Rational> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down. Only used to
/// give containers a deterministic order.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

fn zip_with(
    a: &Polynomial,
    b: &Polynomial,
    f: impl Fn(Rational, Rational) -> Rational,
) -> Polynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    Polynomial::new((0..n).map(|i| f(a.coeff(i), b.coeff(i))).collect())
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
