use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::canon::{canonicalize, Canonical};
use super::core::Graph;
use crate::exact::Rational;
use crate::Result;

/// A graph in canonical form; two graphs are isomorphic (respecting edge
/// order up to sign) iff their classes are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GraphClass(Graph);

impl GraphClass {
    /// Canonical class of `g` and the sign `g = sign * class`, or `None`
    /// when `g` is zero.
    pub fn of(g: &Graph) -> Result<Option<(GraphClass, Rational)>> {
        Ok(match canonicalize(g)? {
            Canonical::Zero => None,
            Canonical::Class { canonical, odd } => {
                let sign = if odd { -Rational::one() } else { Rational::one() };
                Some((GraphClass(canonical), sign))
            }
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }
}

/// A finite linear combination of nonzero graph classes.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct GraphSum {
    terms: BTreeMap<GraphClass, Rational>,
}

impl GraphSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        let mut s = Self::zero();
        s.add_graph(g, &Rational::one())?;
        Ok(s)
    }

    pub fn from_class(class: GraphClass) -> Self {
        let mut s = Self::zero();
        s.add_class(class, Rational::one());
        s
    }

    pub fn add_class(&mut self, class: GraphClass, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(class);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * g` after canonicalization.
    pub fn add_graph(&mut self, g: &Graph, c: &Rational) -> Result<()> {
        if let Some((class, sign)) = GraphClass::of(g)? {
            self.add_class(class, sign * c);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GraphClass, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (GraphClass, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, class: &GraphClass) -> Rational {
        self.terms.get(class).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_class(k.clone(), v * c);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&Graph) -> bool) -> Self {
        GraphSum {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k.graph()))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn add_sum(&mut self, other: &GraphSum) {
        for (k, v) in &other.terms {
            self.add_class(k.clone(), v.clone());
        }
    }

    /// `Some(lambda)` with `self = lambda * other`, when `other` is nonzero
    /// and the two are proportional.
    pub fn ratio_to(&self, other: &GraphSum) -> Option<Rational> {
        let (k, v) = other.terms.iter().next()?;
        let lambda = self.coeff(k) / v;
        if *self == other.scale(&lambda) {
            Some(lambda)
        } else {
            None
        }
    }
}

impl Add for &GraphSum {
    type Output = GraphSum;
    fn add(self, rhs: &GraphSum) -> GraphSum {
        let mut out = self.clone();
        out.add_sum(rhs);
        out
    }
}

impl Sub for &GraphSum {
    type Output = GraphSum;
    fn sub(self, rhs: &GraphSum) -> GraphSum {
        let mut out = self.clone();
        out.add_sum(&-rhs);
        out
    }
}

impl Neg for &GraphSum {
    type Output = GraphSum;
    fn neg(self) -> GraphSum {
        self.scale(&-Rational::one())
    }
}

impl FromIterator<(GraphClass, Rational)> for GraphSum {
    fn from_iter<I: IntoIterator<Item = (GraphClass, Rational)>>(iter: I) -> Self {
        let mut out = GraphSum::zero();
        for (k, v) in iter {
            out.add_class(k, v);
        }
        out
    }
}

impl fmt::Display for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} * {:?}", k.graph().edges())?;
        }
        Ok(())
    }
}
