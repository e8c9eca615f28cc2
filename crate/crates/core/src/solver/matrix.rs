use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Rational;

/// Dense rectangular matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactMatrix {
    rows: Vec<Vec<Rational>>,
    cols: usize,
}

impl ExactMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument(
                "matrix rows differ in length".into(),
            ));
        }
        Ok(ExactMatrix { rows, cols })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        ExactMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        ExactMatrix { rows, cols: n }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }
}

/// Solves `m x = rhs` exactly by Gauss-Jordan elimination, taking the first
/// nonzero entry of each column as pivot. A rank-deficient `m` is reported
/// together with its rank.
pub fn gaussian_solve(m: &ExactMatrix, rhs: &[Rational]) -> Result<Vec<Rational>> {
    let (n, cols) = m.shape();
    if n != cols {
        return Err(Error::InvalidArgument(format!(
            "matrix is {n}x{cols}, not square"
        )));
    }
    if rhs.len() != n {
        return Err(Error::InvalidArgument(format!(
            "right-hand side has {} entries for {n} equations",
            rhs.len()
        )));
    }
    let mut a: Vec<Vec<Rational>> = m
        .rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip()?;
        for x in a[rank].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    if rank < n {
        return Err(Error::SingularMatrix { rank, size: n });
    }
    Ok(a.into_iter()
        .map(|mut r| r.pop().expect("augmented column"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn solves_initial_condition_system() {
        let m = ExactMatrix::from_ints(&[&[1, 1, 1], &[2, 4, 8], &[3, 9, 27]]).unwrap();
        let x = gaussian_solve(&m, &[rat(23, 24), rat(56, 24), rat(87, 24)]).unwrap();
        assert_eq!(x, vec![rat(14, 24), rat(11, 24), rat(-2, 24)]);
    }

    #[test]
    fn identity_returns_rhs() {
        let v = vec![rat(1, 2), rat(-3, 1), rat(0, 1), rat(5, 7)];
        assert_eq!(gaussian_solve(&ExactMatrix::identity(4), &v).unwrap(), v);
    }

    #[test]
    fn needs_row_swap() {
        let m = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(
            gaussian_solve(&m, &[rat(3, 1), rat(4, 1)]).unwrap(),
            vec![rat(4, 1), rat(3, 1)]
        );
    }

    #[test]
    fn singular_reports_rank() {
        let m = ExactMatrix::from_ints(&[&[1, 1], &[2, 2]]).unwrap();
        assert_eq!(
            gaussian_solve(&m, &[rat(1, 1), rat(2, 1)]),
            Err(Error::SingularMatrix { rank: 1, size: 2 })
        );
        let z = ExactMatrix::from_ints(&[&[0, 0], &[0, 0]]).unwrap();
        assert_eq!(
            gaussian_solve(&z, &[rat(0, 1), rat(0, 1)]),
            Err(Error::SingularMatrix { rank: 0, size: 2 })
        );
    }

    #[test]
    fn shape_errors() {
        assert!(ExactMatrix::from_ints(&[&[1, 2], &[3]]).is_err());
        let m = ExactMatrix::from_ints(&[&[1, 2]]).unwrap();
        assert!(gaussian_solve(&m, &[rat(1, 1)]).is_err());
        assert!(gaussian_solve(&ExactMatrix::identity(2), &[rat(1, 1)]).is_err());
    }
}
