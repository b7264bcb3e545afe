//! Depth-two computations in the free associative algebra `Q<x, y>`.
//!
//! Brackets `{sigma_{2i+1}, sigma_{2j+1}}` are read modulo depth three
//! through their leading terms `ad_x^{2i}(y)`, since the Ihara bracket adds
//! depths. A depth-two word `x^u y x^v y x^w` is encoded as the commutative
//! monomial `alpha^u beta^v gamma^w`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::{
    binomial, int, kernel, nc_bracket, Letter, Monomial3, NcPoly, NcWord, Poly, Poly3, Rational,
};
use crate::sym::{plain_action, PermS3};
use crate::theta::{canonical_relation_basis, reduced_len, RelationVector};
use crate::{Error, Result};

/// `ad_x^n(y) = sum_u (-1)^u C(n,u) x^{n-u} y x^u`.
pub fn ad_power(n: u32) -> NcPoly {
    let mut out = NcPoly::zero();
    for u in 0..=n {
        let mut w = vec![Letter::X; (n - u) as usize];
        w.push(Letter::Y);
        w.extend(std::iter::repeat_n(Letter::X, u as usize));
        let c = if u % 2 == 0 {
            binomial(n, u)
        } else {
            -binomial(n, u)
        };
        out.add_term(NcWord(w), c);
    }
    out
}

/// The derivation `D_psi` with `x -> 0`, `y -> [y, psi]`, applied to `w`.
pub fn apply_derivation(psi: &NcPoly, w: &NcPoly) -> NcPoly {
    let image = nc_bracket(&NcPoly::letter(Letter::Y), psi);
    let mut out = NcPoly::zero();
    for (word, c) in w.terms() {
        for (pos, l) in word.0.iter().enumerate() {
            if *l != Letter::Y {
                continue;
            }
            let prefix = NcWord(word.0[..pos].to_vec());
            let suffix = NcWord(word.0[pos + 1..].to_vec());
            for (mid, m) in image.terms() {
                let mut v = prefix.0.clone();
                v.extend_from_slice(&mid.0);
                v.extend_from_slice(&suffix.0);
                out.add_term(NcWord(v), c * m);
            }
        }
    }
    out
}

/// `{a, b} = D_a b - D_b a + [a, b]`.
pub fn ihara_bracket(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = apply_derivation(a, b);
    out -= &apply_derivation(b, a);
    out += &nc_bracket(a, b);
    out
}

/// Depth-two part of an element of `Q<x,y>`, as a polynomial in
/// `alpha, beta, gamma` (stored in the variables of [`Poly3`]).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Depth2Encoding(Poly3);

impl Depth2Encoding {
    pub fn value(&self) -> &Poly3 {
        &self.0
    }

    pub fn into_inner(self) -> Poly3 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Keeps the words with exactly two `y` and reads off the three `x`-runs.
pub fn depth2_encode(p: &NcPoly) -> Depth2Encoding {
    let mut out = Poly3::zero();
    for (w, c) in p.terms() {
        if w.depth() != 2 {
            continue;
        }
        let runs = w.x_runs();
        out.add_term(Monomial3([runs[0], runs[1], runs[2]]), c.clone());
    }
    Depth2Encoding(out)
}

/// `sum_i a_i (alpha-beta)^{2i} (beta-gamma)^{k-2-2i}` over the full index
/// range `1 <= i <= (k-4)/2`.
pub fn schneps_polynomial(k: u32, full: &[Rational]) -> Poly3 {
    let d = Poly3::x() - Poly3::y();
    let e = Poly3::y() - Poly3::z();
    let mut g = Poly3::zero();
    for (idx, a) in full.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let i = idx as u32 + 1;
        g += &(&d.pow(2 * i) * &e.pow(k - 2 - 2 * i)).scale(a);
    }
    g
}

/// Extends reduced coefficients by `a_i = -a_{k/2-1-i}`; the middle index,
/// present when `k = 2 mod 4`, gets `0`.
pub fn extend_antisymmetric(r: &RelationVector) -> Vec<Rational> {
    let k = r.weight();
    let full_len = ((k - 4) / 2) as usize;
    let mut full = vec![Rational::zero(); full_len];
    for (idx, a) in r.coefficients().iter().enumerate() {
        let i = idx + 1;
        let mirror = (k / 2 - 1) as usize - i;
        full[i - 1] = a.clone();
        full[mirror - 1] = -a.clone();
    }
    full
}

fn schneps_conditions(g: &Poly3) -> bool {
    let first = g + &plain_action(PermS3::transposition(1, 3), g);
    if !first.is_zero() {
        return false;
    }
    let mut second = g.clone();
    second += &plain_action(PermS3::cycle_123(), g);
    second += &plain_action(PermS3::cycle_132(), g);
    second.is_zero()
}

/// Whether the bracket combination `r` satisfies `G + (13).G = 0` and
/// `G + (123).G + (132).G = 0`.
pub fn schneps_check(r: &RelationVector) -> bool {
    let full = extend_antisymmetric(r);
    schneps_conditions(&schneps_polynomial(r.weight(), &full))
}

/// [`schneps_check`] on coefficients given over the full range
/// `1 <= i <= (k-4)/2` without imposing antisymmetry.
pub fn schneps_check_full(k: u32, full: &[Rational]) -> Result<bool> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k));
    }
    if k < 6 {
        return Err(Error::WeightTooSmall(k, 6));
    }
    let expected = ((k - 4) / 2) as usize;
    if full.len() != expected {
        return Err(Error::RelationLength {
            weight: k,
            got: full.len(),
            expected,
        });
    }
    Ok(schneps_conditions(&schneps_polynomial(k, full)))
}

/// Depth-two encodings of `{ad^{2i}(y), ad^{k-2-2i}(y)}` for the reduced
/// index range.
pub fn bracket_encodings(k: u32) -> Vec<Depth2Encoding> {
    (1..=reduced_len(k) as u32)
        .map(|i| depth2_encode(&ihara_bracket(&ad_power(2 * i), &ad_power(k - 2 - 2 * i))))
        .collect()
}

/// Linear relations among the depth-two parts of the brackets of weight `k`.
pub fn bracket_kernel(k: u32) -> Result<Vec<RelationVector>> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k));
    }
    if k < 8 {
        return Err(Error::WeightTooSmall(k, 8));
    }
    let encodings = bracket_encodings(k);
    let mut index: BTreeMap<Monomial3, usize> = BTreeMap::new();
    for e in &encodings {
        for (m, _) in e.value().terms() {
            let n = index.len();
            index.entry(*m).or_insert(n);
        }
    }
    let n = encodings.len();
    let mut rows = vec![vec![Rational::zero(); n]; index.len()];
    for (col, e) in encodings.iter().enumerate() {
        for (m, c) in e.value().terms() {
            rows[index[m]][col] = c.clone();
        }
    }
    Ok(canonical_relation_basis(k, &kernel(&rows, n)))
}

/// Sum of `c * w` for `(c, word)` pairs; shorthand for building examples.
pub fn nc_from(terms: &[(i64, &str)]) -> NcPoly {
    Poly::from_terms(
        terms
            .iter()
            .map(|&(c, w)| (NcWord::parse(w).expect("word over x, y"), int(c))),
    )
}

/// `y`, used as the depth-one generator.
pub fn y() -> NcPoly {
    NcPoly::term(NcWord(vec![Letter::Y]), Rational::one())
}
