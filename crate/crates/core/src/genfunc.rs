//! Ordinary generating functions of linear recurrences, their partial
//! fraction decomposition over powers of `(1 - r x)`, and coefficient
//! extraction back to a closed form.
//!
//! Denominators are kept factored from the start: the reciprocal of the
//! characteristic polynomial factors through its rational roots, and a
//! polynomial forcing term contributes a power of `(1 - x)`. No general
//! factorization is ever needed.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::difference::{LinearRecurrence, Sequence};
use crate::error::{Error, Result};
use crate::numeric::{binomial_rising, Degree, Polynomial, Rational};
use crate::solver::{
    characteristic_polynomial, gaussian_solve, rational_roots, ClosedForm, ExactMatrix, Method,
};

/// `numerator / prod (1 - root x)^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    /// Ascending by root, merged, powers >= 1, never a zero root.
    denominator_factors: Vec<(Rational, u32)>,
}

/// `1 - r x`
fn linear_factor(r: &Rational) -> Polynomial {
    Polynomial::new(vec![Rational::one(), -r])
}

fn factor_text(r: &Rational) -> String {
    if r.is_one() {
        "(1 - x)".into()
    } else if (-r).is_one() {
        "(1 + x)".into()
    } else if r.is_negative() {
        format!("(1 + {}x)", fmt_coeff(&r.abs()))
    } else {
        format!("(1 - {}x)", fmt_coeff(r))
    }
}

fn fmt_coeff(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("({r})")
    }
}

fn power_text(r: &Rational, p: u32) -> String {
    if p == 1 {
        factor_text(r)
    } else {
        format!("{}^{p}", factor_text(r))
    }
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, factors: impl IntoIterator<Item = (Rational, u32)>) -> Self {
        let mut merged: BTreeMap<Rational, u32> = BTreeMap::new();
        for (r, p) in factors {
            // 1 - 0x is the unit
            if p > 0 && !r.is_zero() {
                *merged.entry(r).or_insert(0) += p;
            }
        }
        RationalFunction {
            numerator,
            denominator_factors: merged.into_iter().collect(),
        }
    }

    pub fn polynomial(numerator: Polynomial) -> Self {
        RationalFunction::new(numerator, [])
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator_factors(&self) -> &[(Rational, u32)] {
        &self.denominator_factors
    }

    /// The expanded denominator; its constant term is always 1.
    pub fn denominator(&self) -> Polynomial {
        self.denominator_factors
            .iter()
            .fold(Polynomial::one(), |acc, (r, p)| {
                acc * linear_factor(r).pow(*p)
            })
    }

    pub fn denominator_degree(&self) -> usize {
        self.denominator_factors
            .iter()
            .map(|(_, p)| *p as usize)
            .sum()
    }

    /// Cancels every denominator factor that also divides the numerator.
    pub fn reduce(&self) -> RationalFunction {
        let mut numerator = self.numerator.clone();
        let mut factors = Vec::new();
        for (r, p) in &self.denominator_factors {
            let mut p = *p;
            let zero = r.recip().expect("zero roots are never stored");
            while p > 0 && !numerator.is_zero() {
                let (q, rem) = numerator.synthetic_division(&zero);
                if !rem.is_zero() {
                    break;
                }
                // N = q (x - 1/r) = q (1 - r x) * (-1/r)
                numerator = q.scale(&-&zero);
                p -= 1;
            }
            factors.push((r.clone(), p));
        }
        if numerator.is_zero() {
            factors.clear();
        }
        RationalFunction::new(numerator, factors)
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let mut common: BTreeMap<Rational, u32> = BTreeMap::new();
        for (r, p) in self
            .denominator_factors
            .iter()
            .chain(&other.denominator_factors)
        {
            let e = common.entry(r.clone()).or_insert(0);
            *e = (*e).max(*p);
        }
        let lift = |f: &RationalFunction| {
            common.iter().fold(f.numerator.clone(), |acc, (r, p)| {
                let have = f
                    .denominator_factors
                    .iter()
                    .find(|(s, _)| s == r)
                    .map_or(0, |(_, q)| *q);
                acc * linear_factor(r).pow(p - have)
            })
        };
        let numerator = &lift(self) + &lift(other);
        RationalFunction::new(numerator, common)
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        RationalFunction::new(self.numerator.scale(c), self.denominator_factors.clone())
    }

    pub fn negate(&self) -> RationalFunction {
        self.scale(&-Rational::one())
    }

    /// Equality as rational functions, by cross multiplication.
    pub fn equivalent(&self, other: &RationalFunction) -> bool {
        &self.numerator * &other.denominator() == &other.numerator * &self.denominator()
    }

    pub fn series(&self, depth: usize) -> Result<Sequence> {
        series_expand(self, depth)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.display_in("x");
        if self.denominator_factors.is_empty() {
            return f.write_str(&num);
        }
        let den: Vec<String> = self
            .denominator_factors
            .iter()
            .map(|(r, p)| power_text(r, *p))
            .collect();
        let num = if self
            .numerator
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .count()
            > 1
        {
            format!("({num})")
        } else {
            num
        };
        write!(f, "{num}/{}", den.join(""))
    }
}

#[derive(Serialize)]
struct FactorRepr<'a> {
    root: &'a Rational,
    power: u32,
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            numerator: &'a Polynomial,
            denominator_factors: Vec<FactorRepr<'a>>,
            text: String,
        }
        Repr {
            numerator: &self.numerator,
            denominator_factors: self
                .denominator_factors
                .iter()
                .map(|(root, power)| FactorRepr {
                    root,
                    power: *power,
                })
                .collect(),
            text: self.to_string(),
        }
        .serialize(s)
    }
}

/// `coefficient / (1 - root x)^power`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialFractionTerm {
    pub root: Rational,
    pub power: u32,
    pub coefficient: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractionForm {
    /// Quotient of the division of numerator by denominator; nonzero only for
    /// improper inputs, and only affects the first few coefficients.
    pub polynomial_part: Polynomial,
    /// Ascending root, then descending power; zero coefficients are omitted.
    pub terms: Vec<PartialFractionTerm>,
}

impl PartialFractionForm {
    pub fn to_rational_function(&self) -> RationalFunction {
        self.terms.iter().fold(
            RationalFunction::polynomial(self.polynomial_part.clone()),
            |acc, t| {
                acc.add(&RationalFunction::new(
                    Polynomial::constant(t.coefficient.clone()),
                    [(t.root.clone(), t.power)],
                ))
            },
        )
    }

    /// Coefficient of `1 / (1 - root x)^power`, zero if absent.
    pub fn coefficient(&self, root: &Rational, power: u32) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.root == root && t.power == power)
            .map_or_else(Rational::zero, |t| t.coefficient.clone())
    }
}

impl fmt::Display for PartialFractionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.polynomial_part.is_zero() {
            out.push_str(&self.polynomial_part.display_in("x"));
        }
        for t in &self.terms {
            let neg = t.coefficient.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&format!(
                "{}/{}",
                t.coefficient.abs(),
                power_text(&t.root, t.power)
            ));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl Serialize for PartialFractionForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            polynomial_part: &'a Polynomial,
            terms: &'a [PartialFractionTerm],
            text: String,
        }
        Repr {
            polynomial_part: &self.polynomial_part,
            terms: &self.terms,
            text: self.to_string(),
        }
        .serialize(s)
    }
}

/// Writes a polynomial sequence in the basis `C(n + j, j)`, whose generating
/// functions are `1 / (1 - x)^(j + 1)`.
fn rising_basis_coefficients(p: &Polynomial) -> Result<Vec<Rational>> {
    let q = match p.degree() {
        Degree::NegInfinity => return Ok(Vec::new()),
        Degree::Finite(q) => q,
    };
    let basis = (0..=q)
        .map(|j| {
            if j == 0 {
                Ok(Polynomial::one())
            } else {
                binomial_rising(j as i64)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = (0..=q)
        .map(|i| basis.iter().map(|b| b.coeff(i)).collect())
        .collect();
    let target: Vec<Rational> = (0..=q).map(|i| p.coeff(i)).collect();
    gaussian_solve(&ExactMatrix::new(rows)?, &target)
}

/// The two pieces that make up the generating function before they are
/// combined: the initial-condition part `N(x) / Q(x)`, with `Q` the reciprocal
/// characteristic polynomial, and the shifted forcing part `x^d R(x) / Q(x)`.
#[derive(Debug, Clone)]
pub struct OgfParts {
    pub initial: RationalFunction,
    pub forcing: RationalFunction,
}

pub fn ogf_parts(rec: &LinearRecurrence) -> Result<OgfParts> {
    let roots = rational_roots(&characteristic_polynomial(rec))?;
    if roots.residual_degree() > 0 {
        return Err(Error::UnsupportedRoots {
            residual: roots.residual,
        });
    }
    let d = rec.order();
    let char_factors: Vec<(Rational, u32)> = roots
        .roots
        .iter()
        .map(|r| (r.root.clone(), r.multiplicity as u32))
        .collect();

    // sum_k c_k x^(d-k) (a_0 + ... + a_(k-1) x^(k-1))
    let init = rec.initial_conditions();
    let mut initial_num = Polynomial::zero();
    for k in 1..=d {
        let head = Polynomial::new(init[..k].to_vec());
        initial_num = &initial_num
            + &(head * Polynomial::monomial(rec.coefficient_of_shift(k).clone(), d - k));
    }
    let initial = RationalFunction::new(initial_num, char_factors.clone());

    let beta = rising_basis_coefficients(rec.rhs())?;
    let forcing = beta.iter().enumerate().fold(
        RationalFunction::polynomial(Polynomial::zero()),
        |acc, (j, b)| {
            let mut factors = char_factors.clone();
            factors.push((Rational::one(), j as u32 + 1));
            acc.add(&RationalFunction::new(
                Polynomial::monomial(b.clone(), d),
                factors,
            ))
        },
    );
    Ok(OgfParts { initial, forcing })
}

/// The generating function `sum a_n x^n` of the recurrence's solution, with
/// common factors cancelled.
pub fn build_ogf(rec: &LinearRecurrence) -> Result<RationalFunction> {
    let parts = ogf_parts(rec)?;
    Ok(parts.initial.add(&parts.forcing).reduce())
}

/// Decomposes into `polynomial part + sum c / (1 - r x)^p`; the coefficients
/// come from an exact linear solve on the cleared numerator.
pub fn partial_fractions(rf: &RationalFunction) -> Result<PartialFractionForm> {
    let den = rf.denominator();
    let (polynomial_part, rem) = rf.numerator().div_rem(&den)?;
    let size = rf.denominator_degree();

    let mut unknowns = Vec::with_capacity(size);
    let mut columns = Vec::with_capacity(size);
    for (r, p) in rf.denominator_factors() {
        let others = rf
            .denominator_factors()
            .iter()
            .filter(|(s, _)| s != r)
            .fold(Polynomial::one(), |acc, (s, q)| {
                acc * linear_factor(s).pow(*q)
            });
        for j in 1..=*p {
            unknowns.push((r.clone(), j));
            columns.push(&others * &linear_factor(r).pow(p - j));
        }
    }
    let rows = (0..size)
        .map(|i| columns.iter().map(|c| c.coeff(i)).collect())
        .collect();
    let target: Vec<Rational> = (0..size).map(|i| rem.coeff(i)).collect();
    let coefficients = if size == 0 {
        Vec::new()
    } else {
        gaussian_solve(&ExactMatrix::new(rows)?, &target)?
    };

    let mut terms: Vec<PartialFractionTerm> = unknowns
        .into_iter()
        .zip(coefficients)
        .filter(|(_, c)| !c.is_zero())
        .map(|((root, power), coefficient)| PartialFractionTerm {
            root,
            power,
            coefficient,
        })
        .collect();
    terms.sort_by(|a, b| a.root.cmp(&b.root).then(b.power.cmp(&a.power)));
    Ok(PartialFractionForm {
        polynomial_part,
        terms,
    })
}

/// Each `c / (1 - r x)^p` contributes `c C(n + p - 1, p - 1) r^n`.
pub fn extract_coefficient_formula(pf: &PartialFractionForm) -> Result<ClosedForm> {
    let terms = pf
        .terms
        .iter()
        .map(|t| {
            let poly = if t.power == 1 {
                Polynomial::one()
            } else {
                binomial_rising(t.power as i64 - 1)?
            };
            Ok((t.root.clone(), poly.scale(&t.coefficient)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClosedForm::new(
        terms,
        pf.polynomial_part.coeffs().to_vec(),
        Method::Genfunc,
    ))
}

/// First `depth` Maclaurin coefficients by recursive division.
pub fn series_expand(rf: &RationalFunction, depth: usize) -> Result<Sequence> {
    if depth < 1 {
        return Err(Error::InvalidArgument(
            "series depth must be at least 1".into(),
        ));
    }
    let den = rf.denominator();
    let d = den.coeffs();
    let mut out: Vec<Rational> = Vec::with_capacity(depth);
    for n in 0..depth {
        let mut a = rf.numerator().coeff(n);
        for k in 1..d.len().min(n + 1) {
            a -= &d[k] * &out[n - k];
        }
        // d[0] == 1
        out.push(a);
    }
    Ok(Sequence::new(out))
}

/// Generating-function route end to end.
pub fn solve_genfunc(rec: &LinearRecurrence) -> Result<ClosedForm> {
    extract_coefficient_formula(&partial_fractions(&build_ogf(rec)?)?)
}
