//! Dense Gaussian elimination over the rationals.
//!
//! Matrices are slices of rows. The slices met in this crate stay in the low
//! hundreds, so dense storage with exact fractions is adequate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Reduced row echelon form together with the pivot columns.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

/// Reduced row echelon form of `rows`; every row must have length `ncols`.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> RowEchelon {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        if prow == m.len() {
            break;
        }
        let Some(sel) = (prow..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(prow, sel);
        let inv = m[prow][col].recip();
        for x in m[prow].iter_mut().skip(col) {
            *x *= &inv;
        }
        let pivot_row = m[prow].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == prow || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    m.truncate(prow);
    RowEchelon {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rref(rows, ncols).rank()
}

/// Basis of the right null space `{v : M v = 0}` of the matrix with the
/// given rows.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let e = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Canonical basis (nonzero rows of the reduced echelon form) of the span
/// of `vectors`.
pub fn span_basis(vectors: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    rref(vectors, ncols).rows
}

pub fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>], ncols: usize) -> bool {
    span_basis(a, ncols)
        .iter()
        .zip(span_basis(b, ncols).iter())
        .all(|(x, y)| x == y)
        && rank(a, ncols) == rank(b, ncols)
}

pub fn in_span(v: &[Rational], basis: &[Vec<Rational>]) -> bool {
    rref(basis, v.len()).contains(v)
}

/// Rescales to coprime integers with a positive leading nonzero entry.
pub fn normalize_primitive(v: &[Rational]) -> Vec<BigInt> {
    let Some(lead) = v.iter().find(|c| !c.is_zero()) else {
        return vec![BigInt::zero(); v.len()];
    };
    let mut denom_lcm = BigInt::one();
    for c in v {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if lead.is_negative() {
        g = -g;
    }
    ints.into_iter().map(|c| c / &g).collect()
}
