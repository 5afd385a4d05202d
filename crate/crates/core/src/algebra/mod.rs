//! Exact arithmetic layer: rationals, exponent vectors, polynomials in the
//! ambient variables `x_0..x_n`, and polynomials in the stratum coordinates.

mod exponent;
mod rational;
mod tpoly;
mod xpoly;

pub use exponent::Exponent;
pub use rational::{parse_rational, Rational};
pub use tpoly::{Homogeneity, Point, TMonomial, TPolynomial, VarId};
pub use xpoly::XPolynomial;
