use std::fmt;

use num_traits::One;

use super::poly::{Monomial, Poly};
use super::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

/// A word in the free monoid on `{x, y}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NcWord(pub Vec<Letter>);

impl NcWord {
    /// Parses a string over the alphabet `x`, `y`. Other characters are
    /// rejected with `None`.
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|ch| match ch {
                'x' => Some(Letter::X),
                'y' => Some(Letter::Y),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(NcWord)
    }

    /// Number of `y` letters.
    pub fn depth(&self) -> u32 {
        self.0.iter().filter(|&&l| l == Letter::Y).count() as u32
    }

    pub fn weight(&self) -> u32 {
        self.0.len() as u32
    }

    /// Lengths of the maximal `x`-runs separated by the `y` letters:
    /// `x^{i1} y x^{i2} y ... y x^{i_{d+1}}` gives `[i1, ..., i_{d+1}]`.
    pub fn x_runs(&self) -> Vec<u32> {
        let mut runs = vec![0];
        for l in &self.0 {
            match l {
                Letter::X => *runs.last_mut().unwrap() += 1,
                Letter::Y => runs.push(0),
            }
        }
        runs
    }
}

impl Monomial for NcWord {
    fn one() -> Self {
        NcWord(Vec::new())
    }

    fn mul(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        NcWord(v)
    }

    fn degree(&self) -> u32 {
        self.weight()
    }
}

impl fmt::Debug for NcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(
                f,
                "{}",
                match l {
                    Letter::X => 'x',
                    Letter::Y => 'y',
                }
            )?;
        }
        Ok(())
    }
}

/// Noncommutative polynomials in `x`, `y`.
pub type NcPoly = Poly<NcWord>;

impl NcPoly {
    pub fn letter(l: Letter) -> Self {
        Poly::term(NcWord(vec![l]), Rational::one())
    }

    pub fn word(w: &str) -> Self {
        Poly::term(NcWord::parse(w).expect("word over x, y"), Rational::one())
    }

    /// Minimal number of `y` over all terms; undefined (`None`) for zero.
    pub fn depth(&self) -> Option<u32> {
        self.terms().map(|(w, _)| w.depth()).min()
    }

    /// Terms whose word has exactly `d` letters `y`.
    pub fn depth_component(&self, d: u32) -> Self {
        self.filter(|w| w.depth() == d)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{w}")?;
        }
        Ok(())
    }
}

/// Commutator `ab - ba`.
pub fn nc_bracket(a: &NcPoly, b: &NcPoly) -> NcPoly {
    &(a * b) - &(b * a)
}
