//! Successive-differences tables, next-term prediction, and inference of
//! the constant-coefficient recurrence a polynomial sequence satisfies.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{binomial, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sequence {
    pub terms: Vec<Rational>,
    /// Index of the first term.
    pub offset: i64,
}

impl Sequence {
    pub fn new(terms: Vec<Rational>) -> Self {
        Sequence { terms, offset: 0 }
    }

    pub fn from_ints(terms: &[i64]) -> Self {
        Sequence::new(terms.iter().map(|&t| Rational::from(t)).collect())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parses comma- or whitespace-separated integers and `p/q` rationals.
    pub fn parse(input: &str) -> Result<Self> {
        let terms = input
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Rational>>>()?;
        if terms.is_empty() {
            return Err(Error::Parse {
                what: "sequence",
                input: input.to_string(),
            });
        }
        Ok(Sequence::new(terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceTable {
    /// `rows[0]` is the input; `rows[k][i] = rows[k-1][i+1] - rows[k-1][i]`.
    pub rows: Vec<Vec<Rational>>,
    /// First row that is constant with at least two entries.
    pub constant_depth: Option<usize>,
}

fn is_constant_row(row: &[Rational]) -> bool {
    row.len() >= 2 && row.windows(2).all(|w| w[0] == w[1])
}

/// Default depth limit: the deepest row that still has two entries.
pub fn default_max_depth(seq: &Sequence) -> usize {
    seq.len().saturating_sub(2).max(1)
}

pub fn build_difference_table(seq: &Sequence, max_depth: usize) -> Result<DifferenceTable> {
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            required: 2,
        });
    }
    if max_depth < 1 {
        return Err(Error::InvalidArgument(
            "max_depth must be at least 1".into(),
        ));
    }
    let mut rows = vec![seq.terms.clone()];
    let mut constant_depth = None;
    loop {
        let k = rows.len() - 1;
        if is_constant_row(&rows[k]) {
            constant_depth = Some(k);
            break;
        }
        // a further row would hold fewer than two entries
        if k >= max_depth || rows[k].len() < 3 {
            break;
        }
        let next = rows[k].windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    Ok(DifferenceTable {
        rows,
        constant_depth,
    })
}

impl DifferenceTable {
    pub fn input(&self) -> &[Rational] {
        &self.rows[0]
    }

    pub fn predict_next(&self) -> Result<Rational> {
        predict_next(self)
    }

    pub fn infer_recurrence(&self) -> Result<LinearRecurrence> {
        infer_recurrence(self)
    }
}

/// Sum of the last entry of every row from the constant row back up to the input.
pub fn predict_next(table: &DifferenceTable) -> Result<Rational> {
    let d = table.constant_depth.ok_or(Error::NoConstantRow)?;
    Ok(table.rows[..=d]
        .iter()
        .map(|row| row.last().expect("rows are nonempty"))
        .sum())
}

/// `c_d a_{n+d} + ... + c_0 a_n = rhs(n)` with `c_d = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearRecurrence {
    order: usize,
    /// Highest shift first: `(c_d, ..., c_0)`.
    coefficients: Vec<Rational>,
    rhs: Polynomial,
    initial_conditions: Vec<Rational>,
}

impl LinearRecurrence {
    /// Takes coefficients highest shift first and divides through by the
    /// leading one so the stored form is monic.
    pub fn new(
        coefficients: Vec<Rational>,
        rhs: Polynomial,
        initial_conditions: Vec<Rational>,
    ) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::InvalidArgument(
                "a recurrence needs at least two coefficients".into(),
            ));
        }
        let order = coefficients.len() - 1;
        if initial_conditions.len() != order {
            return Err(Error::InvalidArgument(format!(
                "order {order} recurrence needs {order} initial conditions, got {}",
                initial_conditions.len()
            )));
        }
        let lead = coefficients[0].clone();
        if lead.is_zero() {
            return Err(Error::InvalidArgument("leading coefficient is zero".into()));
        }
        let coefficients = coefficients
            .iter()
            .map(|c| c.checked_div(&lead))
            .collect::<Result<Vec<_>>>()?;
        let rhs = rhs.scale(&lead.recip()?);
        Ok(LinearRecurrence {
            order,
            coefficients,
            rhs,
            initial_conditions,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `(c_d, ..., c_0)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `a_{n+k}`.
    pub fn coefficient_of_shift(&self, k: usize) -> &Rational {
        &self.coefficients[self.order - k]
    }

    pub fn rhs(&self) -> &Polynomial {
        &self.rhs
    }

    pub fn initial_conditions(&self) -> &[Rational] {
        &self.initial_conditions
    }

    pub fn iterate(&self, count: usize) -> Result<Sequence> {
        iterate_recurrence(self, count)
    }

    /// Left-hand side minus right-hand side at index `n` for a candidate sequence.
    pub fn residual(&self, terms: &[Rational], n: usize) -> Rational {
        let lhs: Rational = (0..=self.order)
            .map(|k| self.coefficient_of_shift(k) * &terms[n + k])
            .sum();
        lhs - self.rhs.evaluate(&Rational::from(n))
    }
}

/// `a(n+4) - 4a(n+3) + 6a(n+2) - 4a(n+1) + a(n) = 1`
impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let shift = self.order - i;
            let term = if shift == 0 {
                "a(n)".to_string()
            } else {
                format!("a(n+{shift})")
            };
            let mag = c.abs();
            let body = if mag.is_one() {
                term
            } else {
                format!("{mag}{term}")
            };
            if out.is_empty() {
                out = if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                };
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        write!(f, "{out} = {}", self.rhs.display_in("n"))
    }
}

/// Order-`d` recurrence read off a table whose row `d` is constant.
pub fn infer_recurrence(table: &DifferenceTable) -> Result<LinearRecurrence> {
    let d = table.constant_depth.ok_or(Error::NoConstantRow)?;
    let input = table.input();
    if d == 0 {
        // a constant sequence: a_{n+1} - a_n = 0
        return LinearRecurrence::new(
            vec![Rational::one(), -Rational::one()],
            Polynomial::zero(),
            vec![input[0].clone()],
        );
    }
    if input.len() < d + 1 {
        return Err(Error::SequenceTooShort {
            len: input.len(),
            required: d + 1,
        });
    }
    let coefficients = (0..=d)
        .map(|k| {
            let c = Rational::from(binomial(d as u64, k as i64));
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let rhs = Polynomial::constant(table.rows[d][0].clone());
    LinearRecurrence::new(coefficients, rhs, input[..d].to_vec())
}

/// Forward iteration from the initial conditions.
pub fn iterate_recurrence(rec: &LinearRecurrence, count: usize) -> Result<Sequence> {
    let d = rec.order();
    if count < d {
        return Err(Error::InvalidArgument(format!(
            "count {count} is below the recurrence order {d}"
        )));
    }
    let mut terms = rec.initial_conditions().to_vec();
    while terms.len() < count {
        let n = terms.len() - d;
        let mut next = rec.rhs().evaluate(&Rational::from(n));
        for k in 0..d {
            next -= rec.coefficient_of_shift(k) * &terms[n + k];
        }
        terms.push(next);
    }
    Ok(Sequence::new(terms))
}
