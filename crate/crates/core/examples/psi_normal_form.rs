//! Normal forms of two-variable polynomials modulo the relation subspace.

use grt2::exact::{Monomial2, Poly2};
use grt2::theta::{psi, theta_relation};
use grt2::Rational;

fn main() -> grt2::Result<()> {
    for (a, b) in [(3, 4), (3, 6), (5, 4), (3, 8)] {
        println!("x^{a} y^{b} (-x-y)^{a} -> {}", theta_relation(a, b)?);
    }
    let p = Poly2::from_terms([
        (Monomial2([9, 1]), Rational::from_integer(2.into())),
        (Monomial2([1, 9]), Rational::from_integer(2.into())),
    ]);
    println!("{p} -> {}", psi(&p)?);
    Ok(())
}
