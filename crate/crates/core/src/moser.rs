//! Region counts for `m` points on a circle joined pairwise by chords, no
//! three chords concurrent inside the circle.

use num_bigint::BigInt;
use serde::Serialize;

use crate::difference::{LinearRecurrence, Sequence};
use crate::error::{Error, Result};
use crate::numeric::{binomial, rat, Polynomial, Rational};

fn check_m(m: u64) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidArgument(
            "need at least one point (m >= 1)".into(),
        ));
    }
    Ok(())
}

/// `C(m, 2)`
pub fn chord_count(m: u64) -> Result<BigInt> {
    check_m(m)?;
    Ok(binomial(m, 2))
}

/// `C(m, 4)`: every four points give exactly one crossing.
pub fn intersection_count(m: u64) -> Result<BigInt> {
    check_m(m)?;
    Ok(binomial(m, 4))
}

/// `1 + C(m, 2) + C(m, 4)`
pub fn regions_binomial(m: u64) -> Result<BigInt> {
    check_m(m)?;
    Ok(1 + binomial(m, 2) + binomial(m, 4))
}

/// `(m^4 - 6m^3 + 23m^2 - 18m + 24) / 24` as a polynomial in `m`.
pub fn regions_poly() -> Polynomial {
    Polynomial::from_ints(&[24, -18, 23, -6, 1]).scale(&rat(1, 24))
}

pub fn regions_polynomial(m: u64) -> Result<BigInt> {
    check_m(m)?;
    let v = regions_poly().evaluate(&Rational::from(m));
    Ok(v.to_integer()
        .expect("the region polynomial is integer valued"))
}

/// `sum_{j=0}^{4} C(m - 1, j)`. Summing up to `m` instead would give `2^(m-1)`.
pub fn regions_binomial_sum(m: u64) -> Result<BigInt> {
    check_m(m)?;
    Ok((0..=4).map(|j| binomial(m - 1, j)).sum())
}

/// Vertex, edge and face counts of the chord diagram as a planar graph.
/// Faces include the one outside the circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerCounts {
    pub m: u64,
    #[serde(serialize_with = "crate::report::big_as_number")]
    pub vertices: BigInt,
    #[serde(serialize_with = "crate::report::big_as_number")]
    pub edges: BigInt,
    #[serde(serialize_with = "crate::report::big_as_number")]
    pub faces: BigInt,
}

impl EulerCounts {
    pub fn characteristic(&self) -> BigInt {
        &self.vertices - &self.edges + &self.faces
    }

    /// Regions inside the circle.
    pub fn regions(&self) -> BigInt {
        &self.faces - 1
    }
}

/// `V = m + C(m,4)`, `E = m + C(m,2) + 2 C(m,4)`, `F = f(m) + 1`. For `m = 1`
/// the graph is one point with a loop arc, which the same formulas cover.
pub fn euler_counts(m: u64) -> Result<EulerCounts> {
    check_m(m)?;
    let vertices = BigInt::from(m) + binomial(m, 4);
    let edges = BigInt::from(m) + binomial(m, 2) + 2 * binomial(m, 4);
    let faces = regions_binomial(m)? + 1;
    Ok(EulerCounts {
        m,
        vertices,
        edges,
        faces,
    })
}

/// Regions recovered from Euler's formula alone: `F = 2 - V + E`, minus the
/// outer face.
pub fn regions_euler(m: u64) -> Result<BigInt> {
    check_m(m)?;
    let vertices = BigInt::from(m) + binomial(m, 4);
    let edges = BigInt::from(m) + binomial(m, 2) + 2 * binomial(m, 4);
    Ok(2 - vertices + edges - 1)
}

/// The first `count` region counts `f(1), ..., f(count)`.
pub fn moser_sequence(count: usize) -> Result<Sequence> {
    let terms = (1..=count as u64)
        .map(|m| regions_binomial(m).map(Rational::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(Sequence::new(terms))
}

/// `a_{n+4} - 4a_{n+3} + 6a_{n+2} - 4a_{n+1} + a_n = 1`, `a_0..a_3 = 1, 2, 4, 8`,
/// with `a_n = f(n + 1)`.
pub fn moser_recurrence() -> LinearRecurrence {
    let ints = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect();
    LinearRecurrence::new(
        ints(&[1, -4, 6, -4, 1]),
        Polynomial::constant(1),
        ints(&[1, 2, 4, 8]),
    )
    .expect("well-formed recurrence")
}
