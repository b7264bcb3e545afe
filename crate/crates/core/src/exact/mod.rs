//! Exact arithmetic: rationals, sparse commutative and noncommutative
//! polynomials, and dense linear algebra over the rationals.

mod linalg;
mod ncpoly;
mod poly;
mod rational;

pub use linalg::{
    in_span, kernel, normalize_primitive, rank, rref, same_span, span_basis, RowEchelon,
};
pub use ncpoly::{nc_bracket, Letter, NcPoly, NcWord};
pub use poly::{Monomial, Monomial2, Monomial3, Poly, Poly2, Poly3};
pub use rational::{binomial, int, rat, Rational};
