use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::rational::{binomial, Rational};

/// A monomial key of a sparse polynomial ring. Multiplication need not be
/// commutative (words multiply by concatenation).
pub trait Monomial: Clone + Ord + Hash + fmt::Debug {
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn degree(&self) -> u32;
}

/// `x^{k1} y^{k2} z^{k3}`, also used for `alpha^u beta^v gamma^w`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial3(pub [u32; 3]);

/// `x^a y^b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial2(pub [u32; 2]);

impl Monomial for Monomial3 {
    fn one() -> Self {
        Monomial3([0; 3])
    }

    fn mul(&self, other: &Self) -> Self {
        let [a, b, c] = self.0;
        let [d, e, f] = other.0;
        Monomial3([a + d, b + e, c + f])
    }

    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Monomial for Monomial2 {
    fn one() -> Self {
        Monomial2([0; 2])
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial2([self.0[0] + other.0[0], self.0[1] + other.0[1]])
    }

    fn degree(&self) -> u32 {
        self.0[0] + self.0[1]
    }
}

/// Sparse polynomial: a finite map from monomials to nonzero rationals.
///
/// Keys are kept in a `BTreeMap`, so two polynomials are equal exactly when
/// their term maps are equal and iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<M: Monomial> {
    terms: BTreeMap<M, Rational>,
}

pub type Poly3 = Poly<Monomial3>;
pub type Poly2 = Poly<Monomial2>;

impl<M: Monomial> Default for Poly<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial> Poly<M> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(M::one(), Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(M::one(), c)
    }

    pub fn term(m: M, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, Rational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &M) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m`, dropping the key if the coefficient cancels.
    pub fn add_term(&mut self, m: M, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&M) -> bool) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of a map on monomials.
    pub fn map_linear<N: Monomial>(&self, mut f: impl FnMut(&M) -> Poly<N>) -> Poly<N> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out += &f(m).scale(c);
        }
        out
    }

    pub fn even_part(&self) -> Self {
        self.filter(|m| m.degree() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|m| m.degree() % 2 == 1)
    }

    /// Highest total degree of a stored monomial, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(M::degree).max()
    }
}

impl Poly3 {
    pub fn x() -> Self {
        Self::term(Monomial3([1, 0, 0]), Rational::one())
    }

    pub fn y() -> Self {
        Self::term(Monomial3([0, 1, 0]), Rational::one())
    }

    pub fn z() -> Self {
        Self::term(Monomial3([0, 0, 1]), Rational::one())
    }

    pub fn monomial(k1: u32, k2: u32, k3: u32) -> Self {
        Self::term(Monomial3([k1, k2, k3]), Rational::one())
    }

    /// `x + y + z`.
    pub fn xyz_sum() -> Self {
        Self::x() + Self::y() + Self::z()
    }

    /// The ring map `x -> x, y -> y, z -> -x-y`, which identifies
    /// `Q[x,y,z]/(x+y+z)` with `Q[x,y]`.
    pub fn substitute_phi(&self) -> Poly2 {
        self.map_linear(|m| {
            let [a, b, c] = m.0;
            let sign = if c % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            Poly2::from_terms(
                (0..=c).map(|j| (Monomial2([a + j, b + c - j]), &sign * binomial(c, j))),
            )
        })
    }

    pub fn eval(&self, point: [&Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in point.iter().zip(m.0) {
                t *= num_traits::pow((*v).clone(), e as usize);
            }
            acc += t;
        }
        acc
    }
}

impl Poly2 {
    pub fn x() -> Self {
        Self::term(Monomial2([1, 0]), Rational::one())
    }

    pub fn y() -> Self {
        Self::term(Monomial2([0, 1]), Rational::one())
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(Monomial2([a, b]), Rational::one())
    }

    pub fn eval(&self, point: [&Rational; 2]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in point.iter().zip(m.0) {
                t *= num_traits::pow((*v).clone(), e as usize);
            }
            acc += t;
        }
        acc
    }
}

impl<M: Monomial> AddAssign<&Poly<M>> for Poly<M> {
    fn add_assign(&mut self, rhs: &Poly<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<M: Monomial> SubAssign<&Poly<M>> for Poly<M> {
    fn sub_assign(&mut self, rhs: &Poly<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<M: Monomial> Add for &Poly<M> {
    type Output = Poly<M>;
    fn add(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: Monomial> Add for Poly<M> {
    type Output = Poly<M>;
    fn add(mut self, rhs: Poly<M>) -> Poly<M> {
        self += &rhs;
        self
    }
}

impl<M: Monomial> Sub for &Poly<M> {
    type Output = Poly<M>;
    fn sub(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<M: Monomial> Sub for Poly<M> {
    type Output = Poly<M>;
    fn sub(mut self, rhs: Poly<M>) -> Poly<M> {
        self -= &rhs;
        self
    }
}

impl<M: Monomial> Neg for &Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<M: Monomial> Neg for Poly<M> {
    type Output = Poly<M>;
    fn neg(self) -> Poly<M> {
        -&self
    }
}

impl<M: Monomial> Mul for &Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: &Poly<M>) -> Poly<M> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl<M: Monomial> Mul for Poly<M> {
    type Output = Poly<M>;
    fn mul(self, rhs: Poly<M>) -> Poly<M> {
        &self * &rhs
    }
}

impl<M: Monomial> fmt::Debug for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

fn fmt_terms<M: Monomial>(
    p: &Poly<M>,
    f: &mut fmt::Formatter<'_>,
    mut write_mono: impl FnMut(&M, &mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    // highest degree first reads more naturally
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c < &Rational::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let is_one = m.degree() == 0;
        if !abs.is_one() || is_one {
            write!(f, "{abs}")?;
            if !is_one {
                write!(f, "*")?;
            }
        }
        if !is_one {
            write_mono(m, f)?;
        }
    }
    Ok(())
}

fn fmt_powers(names: &[&str], exps: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (n, &e) in names.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{n}")?;
        } else {
            write!(f, "{n}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self, f, |m, f| fmt_powers(&["x", "y", "z"], &m.0, f))
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self, f, |m, f| fmt_powers(&["x", "y"], &m.0, f))
    }
}
