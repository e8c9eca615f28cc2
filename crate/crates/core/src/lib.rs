//! Exact inference and closed-form solution of linear recurrences with
//! constant coefficients, cross-checked against the circle-division problem.

pub mod cli;
pub mod difference;
pub mod error;
pub mod genfunc;
pub mod geometry;
pub mod moser;
pub mod numeric;
pub mod report;
pub mod solver;

pub use error::{Error, Result};
pub use numeric::{binomial, binomial_rising, rat, Degree, Polynomial, Rational};
