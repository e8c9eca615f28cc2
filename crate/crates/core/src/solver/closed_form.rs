use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{Polynomial, Rational};

/// How a closed form was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Charpoly,
    Genfunc,
    Binomial,
    Euler,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Charpoly => "charpoly",
            Method::Genfunc => "genfunc",
            Method::Binomial => "binomial",
            Method::Euler => "euler",
        })
    }
}

/// `value(v) = sum_r poly_r(v) * r^(v - offset) + corrections[v - offset]`.
///
/// With offset 0 the variable is the sequence index `n`. `corrections` holds
/// finitely many adjustments at the first indices; they come from a zero
/// characteristic root or from the polynomial part of a generating function.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    terms: BTreeMap<Rational, Polynomial>,
    corrections: Vec<Rational>,
    pub method: Method,
    pub variable_offset: i64,
}

impl ClosedForm {
    pub fn new(
        terms: impl IntoIterator<Item = (Rational, Polynomial)>,
        corrections: Vec<Rational>,
        method: Method,
    ) -> Self {
        let mut map: BTreeMap<Rational, Polynomial> = BTreeMap::new();
        for (root, poly) in terms {
            let merged = match map.remove(&root) {
                Some(p) => &p + &poly,
                None => poly,
            };
            if !merged.is_zero() {
                map.insert(root, merged);
            }
        }
        let mut corrections = corrections;
        while corrections.last().is_some_and(Rational::is_zero) {
            corrections.pop();
        }
        ClosedForm {
            terms: map,
            corrections,
            method,
            variable_offset: 0,
        }
    }

    /// A closed form that is a single polynomial in the index.
    pub fn from_polynomial(poly: Polynomial, method: Method) -> Self {
        ClosedForm::new([(Rational::one(), poly)], Vec::new(), method)
    }

    pub fn terms(&self) -> &BTreeMap<Rational, Polynomial> {
        &self.terms
    }

    pub fn corrections(&self) -> &[Rational] {
        &self.corrections
    }

    /// The polynomial when the form has no exponential part and no corrections.
    pub fn polynomial(&self) -> Option<Polynomial> {
        if !self.corrections.is_empty() {
            return None;
        }
        match self.terms.len() {
            0 => Some(Polynomial::zero()),
            1 => self.terms.get(&Rational::one()).cloned(),
            _ => None,
        }
    }

    pub fn evaluate(&self, v: i64) -> Result<Rational> {
        let n = v - self.variable_offset;
        let x = Rational::from(v);
        let mut total = Rational::zero();
        for (root, poly) in &self.terms {
            total += poly.evaluate(&x) * root.pow(n)?;
        }
        if let Some(c) = usize::try_from(n)
            .ok()
            .and_then(|i| self.corrections.get(i))
        {
            total += c;
        }
        Ok(total)
    }

    /// Re-expresses the form in a variable `v` with `n = v - offset`.
    pub fn shift_variable(&self, offset: i64) -> Result<ClosedForm> {
        let poly = self.polynomial().ok_or(Error::NotPolynomial)?;
        let mut out =
            ClosedForm::from_polynomial(poly.compose_shift(&Rational::from(-offset)), self.method);
        out.variable_offset = self.variable_offset + offset;
        Ok(out)
    }

    /// Equality as functions of the variable, ignoring the method tag.
    pub fn same_function(&self, other: &ClosedForm) -> bool {
        self.terms == other.terms
            && self.corrections == other.corrections
            && self.variable_offset == other.variable_offset
    }

    fn variable_name(&self) -> &'static str {
        if self.variable_offset == 0 {
            "n"
        } else {
            "m"
        }
    }

    /// Human-readable rendering, e.g. `(n^4 - 2n^3 + 11n^2 + 14n + 24)/24`.
    pub fn render(&self) -> String {
        let var = self.variable_name();
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(root, poly)| {
                let p = poly.display_in(var);
                if root.is_one() {
                    p
                } else {
                    let exp = if self.variable_offset == 0 {
                        var.to_string()
                    } else {
                        format!("({var} - {})", self.variable_offset)
                    };
                    let base = if root.is_integer() && !root.is_negative() {
                        root.to_string()
                    } else {
                        format!("({root})")
                    };
                    let coeff = if poly.is_constant() {
                        p
                    } else {
                        format!("({p})")
                    };
                    format!("{coeff}*{base}^{exp}")
                }
            })
            .collect();
        for (i, c) in self.corrections.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{c}*[n = {i}]"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    root: &'a Rational,
    polynomial: &'a Polynomial,
}

#[derive(Serialize)]
struct ClosedFormRepr<'a> {
    method: Method,
    variable: &'static str,
    variable_offset: i64,
    terms: Vec<TermRepr<'a>>,
    corrections: &'a [Rational],
    text: String,
}

impl Serialize for ClosedForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ClosedFormRepr {
            method: self.method,
            variable: self.variable_name(),
            variable_offset: self.variable_offset,
            terms: self
                .terms
                .iter()
                .map(|(root, polynomial)| TermRepr { root, polynomial })
                .collect(),
            corrections: &self.corrections,
            text: self.render(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn merges_roots_and_drops_zeros() {
        let cf = ClosedForm::new(
            [
                (rat(2, 1), Polynomial::constant(1)),
                (rat(2, 1), Polynomial::constant(-1)),
                (rat(1, 1), Polynomial::constant(3)),
            ],
            vec![rat(0, 1)],
            Method::Charpoly,
        );
        assert_eq!(cf.terms().len(), 1);
        assert!(cf.corrections().is_empty());
        assert_eq!(cf.polynomial(), Some(Polynomial::constant(3)));
    }

    #[test]
    fn evaluates_exponential_terms_and_corrections() {
        let cf = ClosedForm::new(
            [(rat(2, 1), Polynomial::constant(1))],
            vec![rat(5, 1)],
            Method::Genfunc,
        );
        assert_eq!(cf.evaluate(0).unwrap(), rat(6, 1));
        assert_eq!(cf.evaluate(3).unwrap(), rat(8, 1));
        assert_eq!(cf.polynomial(), None);
        assert_eq!(cf.shift_variable(1).unwrap_err(), Error::NotPolynomial);
    }

    #[test]
    fn comparison_ignores_method() {
        let a = ClosedForm::from_polynomial(Polynomial::from_ints(&[1, 2]), Method::Charpoly);
        let b = ClosedForm::from_polynomial(Polynomial::from_ints(&[1, 2]), Method::Genfunc);
        assert!(a.same_function(&b));
        assert!(!a.same_function(&a.shift_variable(1).unwrap()));
    }

    #[test]
    fn renders_exponential_terms() {
        let cf = ClosedForm::new(
            [
                (rat(2, 1), Polynomial::constant(3)),
                (rat(-1, 2), Polynomial::from_ints(&[1, 1])),
            ],
            vec![],
            Method::Charpoly,
        );
        assert_eq!(cf.render(), "(n + 1)*(-1/2)^n + 3*2^n");
    }
}
