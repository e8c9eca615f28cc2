//! Closed-form solution of linear constant-coefficient recurrences through
//! the characteristic polynomial: rational roots and their multiplicities give
//! the homogeneous basis, undetermined coefficients give a particular
//! solution, and an exact linear solve fits the initial conditions.

mod closed_form;
mod matrix;

pub use closed_form::{ClosedForm, Method};
pub use matrix::{gaussian_solve, ExactMatrix};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::difference::{LinearRecurrence, Sequence};
use crate::error::{Error, Result};
use crate::numeric::{Degree, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootMultiplicity {
    pub root: Rational,
    pub multiplicity: usize,
}

/// Rational roots of a polynomial and whatever is left after deflating them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots {
    /// Ascending by root.
    pub roots: Vec<RootMultiplicity>,
    /// `p / prod (x - root)^multiplicity`; constant iff every root is rational.
    pub residual: Polynomial,
}

impl RationalRoots {
    pub fn residual_degree(&self) -> usize {
        match self.residual.degree() {
            Degree::Finite(d) => d,
            Degree::NegInfinity => 0,
        }
    }

    pub fn multiplicity_of(&self, root: &Rational) -> usize {
        self.roots
            .iter()
            .find(|r| &r.root == root)
            .map_or(0, |r| r.multiplicity)
    }
}

/// `sum_k c_k r^k` where `c_k` multiplies `a_{n+k}`.
pub fn characteristic_polynomial(rec: &LinearRecurrence) -> Polynomial {
    Polynomial::new(rec.coefficients().iter().rev().cloned().collect())
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            let q = &n / &i;
            if q != i {
                large.push(q);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Finds every rational root with its multiplicity by the rational-root
/// theorem and repeated synthetic division.
pub fn rational_roots(p: &Polynomial) -> Result<RationalRoots> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero polynomial has no finite root set".into(),
        ));
    }
    let mut roots = Vec::new();
    let mut residual = p.clone();

    let zero_mult = residual.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        residual = Polynomial::new(residual.coeffs()[zero_mult..].to_vec());
        roots.push(RootMultiplicity {
            root: Rational::zero(),
            multiplicity: zero_mult,
        });
    }

    let ints = residual.integer_numerator();
    let trailing = ints.first().expect("nonzero");
    let leading = ints.last().expect("nonzero");
    let mut candidates = Vec::new();
    for u in positive_divisors(trailing) {
        for v in positive_divisors(leading) {
            let c = Rational::new(u.clone(), v)?;
            candidates.push(-&c);
            candidates.push(c);
        }
    }
    candidates.sort();
    candidates.dedup();

    for c in candidates {
        let mut multiplicity = 0;
        while !residual.is_constant() {
            let (q, rem) = residual.synthetic_division(&c);
            if !rem.is_zero() {
                break;
            }
            residual = q;
            multiplicity += 1;
        }
        if multiplicity > 0 {
            roots.push(RootMultiplicity {
                root: c,
                multiplicity,
            });
        }
    }
    roots.sort_by(|a, b| a.root.cmp(&b.root));
    Ok(RationalRoots { roots, residual })
}

/// Applies the recurrence operator to a polynomial sequence:
/// `L[f](n) = sum_k c_k f(n + k)`.
pub fn apply_operator(rec: &LinearRecurrence, f: &Polynomial) -> Polynomial {
    (0..=rec.order()).fold(Polynomial::zero(), |acc, k| {
        &acc + &f
            .compose_shift(&Rational::from(k))
            .scale(rec.coefficient_of_shift(k))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParticularSolution {
    /// The full particular solution `n^s q(n)`, a polynomial in `n`.
    pub polynomial: Polynomial,
    /// `s`, the multiplicity of the characteristic root 1.
    pub shift_power: usize,
}

/// Undetermined coefficients for a polynomial right-hand side: the ansatz is
/// `n^s (A_0 + A_1 n + ... + A_q n^q)` with `q = deg rhs` and `s` the
/// multiplicity of root 1.
pub fn particular_solution(
    rec: &LinearRecurrence,
    roots: &RationalRoots,
) -> Result<ParticularSolution> {
    let s = roots.multiplicity_of(&Rational::one());
    let q = match rec.rhs().degree() {
        Degree::NegInfinity => {
            return Ok(ParticularSolution {
                polynomial: Polynomial::zero(),
                shift_power: s,
            })
        }
        Degree::Finite(q) => q,
    };
    let images: Vec<Polynomial> = (0..=q)
        .map(|j| apply_operator(rec, &Polynomial::monomial(1, s + j)))
        .collect();
    let rows = (0..=q)
        .map(|i| images.iter().map(|img| img.coeff(i)).collect())
        .collect();
    let matrix = ExactMatrix::new(rows)?;
    let target: Vec<Rational> = (0..=q).map(|i| rec.rhs().coeff(i)).collect();
    let a = gaussian_solve(&matrix, &target)?;
    let polynomial = Polynomial::new(
        std::iter::repeat_with(Rational::zero)
            .take(s)
            .chain(a)
            .collect(),
    );
    // images of degree above q would make the square system incomplete
    if &apply_operator(rec, &polynomial) != rec.rhs() {
        return Err(Error::SingularMatrix {
            rank: q,
            size: q + 1,
        });
    }
    Ok(ParticularSolution {
        polynomial,
        shift_power: s,
    })
}

/// One homogeneous basis function: `n^power * root^n`, or the indicator of
/// `n = power` when the root is zero.
#[derive(Debug, Clone)]
struct BasisFunction {
    root: Rational,
    power: usize,
}

impl BasisFunction {
    fn at(&self, n: usize) -> Result<Rational> {
        if self.root.is_zero() {
            return Ok(if n == self.power {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        Ok(Rational::from(n).pow(self.power as i64)? * self.root.pow(n as i64)?)
    }
}

/// General solution via the characteristic polynomial. Every characteristic
/// root must be rational.
pub fn solve_charpoly(rec: &LinearRecurrence) -> Result<ClosedForm> {
    let roots = rational_roots(&characteristic_polynomial(rec))?;
    if roots.residual_degree() > 0 {
        return Err(Error::UnsupportedRoots {
            residual: roots.residual.clone(),
        });
    }
    let particular = particular_solution(rec, &roots)?;

    let basis: Vec<BasisFunction> = roots
        .roots
        .iter()
        .flat_map(|r| {
            (0..r.multiplicity).map(|power| BasisFunction {
                root: r.root.clone(),
                power,
            })
        })
        .collect();
    debug_assert_eq!(basis.len(), rec.order());

    let d = rec.order();
    let mut rows = Vec::with_capacity(d);
    let mut target = Vec::with_capacity(d);
    for n in 0..d {
        rows.push(basis.iter().map(|b| b.at(n)).collect::<Result<Vec<_>>>()?);
        target.push(
            &rec.initial_conditions()[n] - particular.polynomial.evaluate(&Rational::from(n)),
        );
    }
    let constants = gaussian_solve(&ExactMatrix::new(rows)?, &target)?;

    let mut terms = vec![(Rational::one(), particular.polynomial)];
    let mut corrections = Vec::new();
    for (b, c) in basis.iter().zip(constants) {
        if b.root.is_zero() {
            if corrections.len() <= b.power {
                corrections.resize(b.power + 1, Rational::zero());
            }
            corrections[b.power] = c;
        } else {
            terms.push((b.root.clone(), Polynomial::monomial(c, b.power)));
        }
    }
    Ok(ClosedForm::new(terms, corrections, Method::Charpoly))
}

/// Re-expresses a polynomial closed form in the point count `m = n + 1`.
pub fn to_moser_variable(cf: &ClosedForm) -> Result<ClosedForm> {
    cf.shift_variable(1)
}

/// Smallest-order homogeneous recurrence
/// `a_{n+d} = c_{d-1} a_{n+d-1} + ... + c_0 a_n` that the whole sequence satisfies, found by solving on the first
/// `2d` terms and checking the rest. At least one term must be left over for
/// the check, so `d` runs up to `(len - 1) / 2`. Used for sequences whose
/// differences never become constant.
pub fn fit_homogeneous_recurrence(seq: &Sequence) -> Option<LinearRecurrence> {
    let a = &seq.terms;
    for d in 1..=a.len().saturating_sub(1) / 2 {
        let rows: Vec<Vec<Rational>> = (0..d).map(|n| a[n..n + d].to_vec()).collect();
        let target: Vec<Rational> = (0..d).map(|n| a[n + d].clone()).collect();
        let Ok(c) = ExactMatrix::new(rows).and_then(|m| gaussian_solve(&m, &target)) else {
            continue;
        };
        // highest shift first, monic
        let mut coefficients = vec![Rational::one()];
        coefficients.extend(c.iter().rev().map(|x| -x));
        let Ok(rec) = LinearRecurrence::new(coefficients, Polynomial::zero(), a[..d].to_vec())
        else {
            continue;
        };
        if (0..a.len() - d).all(|n| rec.residual(a, n).is_zero()) {
            return Some(rec);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::difference::{build_difference_table, infer_recurrence, iterate_recurrence};
    use crate::numeric::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn rec(coeffs: &[i64], rhs: Polynomial, init: &[i64]) -> LinearRecurrence {
        LinearRecurrence::new(ints(coeffs), rhs, ints(init)).unwrap()
    }

    fn moser_rec() -> LinearRecurrence {
        rec(&[1, -4, 6, -4, 1], Polynomial::constant(1), &[1, 2, 4, 8])
    }

    fn check_against_iteration(r: &LinearRecurrence, cf: &ClosedForm, count: usize) {
        let seq = iterate_recurrence(r, count).unwrap();
        for (n, t) in seq.terms.iter().enumerate() {
            assert_eq!(&cf.evaluate(n as i64).unwrap(), t, "index {n}");
        }
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(
            characteristic_polynomial(&moser_rec()),
            Polynomial::from_ints(&[1, -4, 6, -4, 1])
        );
        assert_eq!(
            characteristic_polynomial(&rec(&[1, -1], Polynomial::zero(), &[0])),
            Polynomial::from_ints(&[-1, 1])
        );
        assert_eq!(
            characteristic_polynomial(&rec(&[1, -5, 6], Polynomial::zero(), &[0, 1])),
            Polynomial::from_ints(&[6, -5, 1])
        );
    }

    #[test]
    fn roots() {
        let r = rational_roots(&Polynomial::from_ints(&[1, -4, 6, -4, 1])).unwrap();
        assert_eq!(
            r.roots,
            vec![RootMultiplicity {
                root: rat(1, 1),
                multiplicity: 4
            }]
        );
        assert_eq!(r.residual_degree(), 0);

        let r = rational_roots(&Polynomial::from_ints(&[6, -5, 1])).unwrap();
        let found: Vec<_> = r
            .roots
            .iter()
            .map(|x| (x.root.clone(), x.multiplicity))
            .collect();
        assert_eq!(found, vec![(rat(2, 1), 1), (rat(3, 1), 1)]);

        let r = rational_roots(&Polynomial::from_ints(&[-1, -1, 1])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.residual_degree(), 2);

        // x^2 (2x - 1)^2 (3x + 1): zero and fractional roots
        let p = Polynomial::from_ints(&[-1, 2]).pow(2)
            * Polynomial::from_ints(&[1, 3])
            * Polynomial::monomial(1, 2);
        let r = rational_roots(&p).unwrap();
        let found: Vec<_> = r
            .roots
            .iter()
            .map(|x| (x.root.clone(), x.multiplicity))
            .collect();
        assert_eq!(found, vec![(rat(-1, 3), 1), (rat(0, 1), 2), (rat(1, 2), 2)]);
    }

    #[test]
    fn roots_reconstruct_polynomial() {
        let polys = [
            Polynomial::from_ints(&[1, -4, 6, -4, 1]),
            Polynomial::from_ints(&[-1, -1, 1]) * Polynomial::from_ints(&[-2, 1]).pow(2),
            Polynomial::from_ints(&[3, 0, 0, 5, -7]),
            Polynomial::new(vec![rat(1, 6), rat(-5, 6), rat(1, 1)]),
        ];
        for p in polys {
            let r = rational_roots(&p).unwrap();
            let rebuilt = r.roots.iter().fold(r.residual.clone(), |acc, rm| {
                acc * Polynomial::new(vec![-&rm.root, Rational::one()]).pow(rm.multiplicity as u32)
            });
            assert_eq!(rebuilt, p);
        }
        assert!(rational_roots(&Polynomial::zero()).is_err());
    }

    #[test]
    fn particular_solutions() {
        let r = moser_rec();
        let roots = rational_roots(&characteristic_polynomial(&r)).unwrap();
        let p = particular_solution(&r, &roots).unwrap();
        assert_eq!(p.polynomial, Polynomial::monomial(rat(1, 24), 4));
        assert_eq!(p.shift_power, 4);

        let r = rec(&[1, -2], Polynomial::constant(1), &[0]);
        let roots = rational_roots(&characteristic_polynomial(&r)).unwrap();
        let p = particular_solution(&r, &roots).unwrap();
        assert_eq!(p.polynomial, Polynomial::constant(-1));
        assert_eq!(p.shift_power, 0);

        let r = rec(&[1, -2, 1], Polynomial::constant(2), &[0, 1]);
        let roots = rational_roots(&characteristic_polynomial(&r)).unwrap();
        let p = particular_solution(&r, &roots).unwrap();
        assert_eq!(p.polynomial, Polynomial::monomial(1, 2));
        assert_eq!(p.shift_power, 2);
    }

    #[test]
    fn moser_closed_form() {
        let cf = solve_charpoly(&moser_rec()).unwrap();
        let expected = Polynomial::new(vec![
            rat(1, 1),
            rat(14, 24),
            rat(11, 24),
            rat(-2, 24),
            rat(1, 24),
        ]);
        assert_eq!(cf.polynomial(), Some(expected.clone()));
        // substituting back is an identity in n
        assert_eq!(
            apply_operator(&moser_rec(), &expected),
            Polynomial::constant(1)
        );
        check_against_iteration(&moser_rec(), &cf, 60);

        let in_m = to_moser_variable(&cf).unwrap();
        assert_eq!(
            in_m.polynomial(),
            Some(Polynomial::from_ints(&[24, -18, 23, -6, 1]).scale(&rat(1, 24)))
        );
        assert_eq!(in_m.variable_offset, 1);
        assert_eq!(in_m.evaluate(7).unwrap(), rat(57, 1));
    }

    #[test]
    fn trivial_and_unsupported() {
        let cf = solve_charpoly(&rec(&[1, -1], Polynomial::zero(), &[3])).unwrap();
        assert_eq!(cf.polynomial(), Some(Polynomial::constant(3)));
        assert_eq!(
            to_moser_variable(&cf).unwrap().polynomial(),
            Some(Polynomial::constant(3))
        );

        let fib = rec(&[1, -1, -1], Polynomial::zero(), &[1, 1]);
        match solve_charpoly(&fib) {
            Err(Error::UnsupportedRoots { residual }) => {
                assert_eq!(residual, Polynomial::from_ints(&[-1, -1, 1]))
            }
            other => panic!("expected unsupported roots, got {other:?}"),
        }

        let sq = ClosedForm::from_polynomial(Polynomial::monomial(1, 2), Method::Charpoly);
        assert_eq!(
            to_moser_variable(&sq).unwrap().polynomial(),
            Some(Polynomial::from_ints(&[1, -2, 1]))
        );
    }

    #[test]
    fn corpus_matches_iteration() {
        let corpus = vec![
            moser_rec(),
            rec(&[1, -5, 6], Polynomial::zero(), &[0, 1]),
            rec(&[1, -5, 6], Polynomial::from_ints(&[1, 1]), &[2, -1]),
            rec(&[1, -2], Polynomial::constant(1), &[0]),
            rec(&[1, -2, 1], Polynomial::constant(2), &[0, 1]),
            rec(
                &[1, -3, 3, -1],
                Polynomial::from_ints(&[0, 0, 1]),
                &[1, 0, 2],
            ),
            rec(&[1, 1], Polynomial::from_ints(&[0, 1]), &[4]),
            rec(&[1, -4, 4], Polynomial::constant(3), &[1, 1]),
            LinearRecurrence::new(
                vec![rat(1, 1), rat(-5, 6), rat(1, 6)],
                Polynomial::constant(1),
                vec![rat(1, 2), rat(1, 3)],
            )
            .unwrap(),
            // zero characteristic root: a_{n+2} = 2 a_{n+1}
            rec(&[1, -2, 0], Polynomial::zero(), &[7, 1]),
            rec(&[1, -1, 0, 0], Polynomial::constant(1), &[5, -2, 9]),
        ];
        for r in &corpus {
            let cf = solve_charpoly(r).unwrap();
            check_against_iteration(r, &cf, 60);
        }
    }

    #[test]
    fn inferred_square_recurrence() {
        let seq = Sequence::from_ints(&[0, 1, 4, 9, 16]);
        let r = infer_recurrence(&build_difference_table(&seq, 3).unwrap()).unwrap();
        let cf = solve_charpoly(&r).unwrap();
        assert_eq!(cf.polynomial(), Some(Polynomial::monomial(1, 2)));
    }

    #[test]
    fn homogeneous_fit() {
        let fib = fit_homogeneous_recurrence(&Sequence::from_ints(&[1, 1, 2, 3, 5, 8])).unwrap();
        assert_eq!(fib.coefficients(), ints(&[1, -1, -1]).as_slice());
        match solve_charpoly(&fib) {
            Err(Error::UnsupportedRoots { residual }) => {
                assert_eq!(residual, Polynomial::from_ints(&[-1, -1, 1]));
            }
            other => panic!("expected unsupported roots, got {other:?}"),
        }
        let pow2 = fit_homogeneous_recurrence(&Sequence::from_ints(&[3, 6, 12, 24])).unwrap();
        assert_eq!(pow2.order(), 1);
        // too short to confirm anything of order 2
        assert!(fit_homogeneous_recurrence(&Sequence::from_ints(&[1, 1, 2, 3])).is_none());
        assert!(fit_homogeneous_recurrence(&Sequence::from_ints(&[1, 5, 2, 9, 4])).is_none());
    }
}
