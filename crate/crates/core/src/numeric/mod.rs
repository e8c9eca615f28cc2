//! Exact scalars and polynomials shared by every other module.

mod binomial;
mod polynomial;
mod rational;

pub use binomial::{binomial, binomial_rising};
pub use polynomial::{Degree, Polynomial};
pub use rational::{rat, Rational};
