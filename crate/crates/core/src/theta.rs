//! The polynomial model of the two-loop part of `ICG(1)`.
//!
//! A theta graph whose three main strands carry `k1`, `k2`, `k3` hairs is the
//! monomial `x^{k1} y^{k2} z^{k3}`. Grade `g` graphs carry `2 - g` extra hairs
//! at the junctions, so
//!
//! ```text
//! C0 = (Q[x,y,z]^odd)_S3        weight = degree + 2
//! C1 =  Q[x,y,z]_S3             weight = degree + 1
//! C2 = (Q[x,y,z]^even_>0)_S3    weight = degree
//! ```
//!
//! with `d0 p = 2(x+y+z) p` on `C0` and `d0 p = [(x+y+z) p]_even` on `C1`.
//! Coinvariants are stored in the strictly decreasing monomial basis.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{
    binomial, int, kernel, normalize_primitive, span_basis, Monomial2, Monomial3, Poly2, Poly3,
    Rational,
};
use crate::sym::{sign_coinvariant_normal_form, strictly_decreasing_triples};
use crate::{Error, Result};

/// An element of `C0`, `C1` or `C2`, kept in coinvariant normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaElement {
    grade: u8,
    value: Poly3,
}

fn degree_allowed(grade: u8, degree: u32) -> bool {
    match grade {
        0 => degree % 2 == 1,
        1 => true,
        _ => degree.is_multiple_of(2) && degree > 0,
    }
}

impl ThetaElement {
    /// Normalizes `value` and checks the parity condition of the grade.
    pub fn new(grade: u8, value: &Poly3) -> Result<Self> {
        if grade > 2 {
            return Err(Error::BadGrade(grade));
        }
        let value = sign_coinvariant_normal_form(value);
        for (m, _) in value.terms() {
            let [a, b, c] = m.0;
            if !degree_allowed(grade, a + b + c) {
                return Err(Error::GradeParity(a, b, c, grade));
            }
        }
        Ok(ThetaElement { grade, value })
    }

    pub fn zero(grade: u8) -> Self {
        ThetaElement {
            grade,
            value: Poly3::zero(),
        }
    }

    pub fn grade(&self) -> u8 {
        self.grade
    }

    pub fn value(&self) -> &Poly3 {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Weight of a homogeneous element; `None` for zero or mixed weights.
    pub fn weight(&self) -> Option<u32> {
        let mut w = None;
        for (m, _) in self.value.terms() {
            let here = m.0.iter().sum::<u32>() + 2 - self.grade as u32;
            match w {
                None => w = Some(here),
                Some(prev) if prev != here => return None,
                _ => {}
            }
        }
        w
    }
}

impl fmt::Display for ThetaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[{}]", self.grade, self.value)
    }
}

/// The differential `C0 -> C1 -> C2`.
pub fn d0_theta(e: &ThetaElement) -> Result<ThetaElement> {
    let s = Poly3::xyz_sum();
    let value = match e.grade {
        0 => (&s * &e.value).scale(&int(2)),
        1 => (&s * &e.value).even_part(),
        g => return Err(Error::TopOfComplex(g)),
    };
    ThetaElement::new(e.grade + 1, &value)
}

/// Strictly decreasing exponent triples spanning the weight-`k` slice of
/// grade `grade`, in descending lexicographic order.
pub fn weight_slice_basis(grade: u8, k: u32) -> Vec<Monomial3> {
    let shift = 2 - grade.min(2) as u32;
    if grade > 2 || k < shift {
        return Vec::new();
    }
    let degree = k - shift;
    if !degree_allowed(grade, degree) {
        return Vec::new();
    }
    strictly_decreasing_triples(degree)
        .into_iter()
        .map(Monomial3)
        .collect()
}

fn coordinates(p: &Poly3, basis: &[Monomial3]) -> Vec<Rational> {
    let index: HashMap<&Monomial3, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut v = vec![Rational::zero(); basis.len()];
    for (m, c) in p.terms() {
        let i = index
            .get(m)
            .copied()
            .expect("polynomial outside the slice basis");
        v[i] = c.clone();
    }
    v
}

/// Images of the slice basis of `C_grade` at weight `k`, in coordinates of
/// the target slice. One row per source basis monomial.
pub fn d0_images(grade: u8, k: u32) -> Vec<Vec<Rational>> {
    let source = weight_slice_basis(grade, k);
    let target = weight_slice_basis(grade + 1, k);
    source
        .iter()
        .map(|m| {
            let e = ThetaElement::new(grade, &Poly3::term(*m, Rational::one()))
                .expect("basis element");
            coordinates(d0_theta(&e).expect("grade below 2").value(), &target)
        })
        .collect()
}

/// `dim H^i` of the weight-`k` slice, by exact ranks.
pub fn cohomology_dim(i: u8, k: u32) -> usize {
    if i > 2 {
        return 0;
    }
    let here = weight_slice_basis(i, k).len();
    let rank_out = if i < 2 {
        crate::exact::rank(&d0_images(i, k), weight_slice_basis(i + 1, k).len())
    } else {
        0
    };
    let rank_in = if i > 0 {
        crate::exact::rank(&d0_images(i - 1, k), here)
    } else {
        0
    };
    here - rank_out - rank_in
}

/// The closed form for the cohomology dimensions: `floor(k/6)` in degree 1
/// for odd `k` and in degree 2 for even `k`, zero otherwise.
pub fn expected_dim(i: u8, k: u32) -> usize {
    match i {
        1 if k % 2 == 1 => (k / 6) as usize,
        2 if k.is_multiple_of(2) => (k / 6) as usize,
        _ => 0,
    }
}

/// An element of `A = span(x^a y^b | 0 <= a <= b even)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ANormalForm(Poly2);

impl ANormalForm {
    pub fn value(&self) -> &Poly2 {
        &self.0
    }

    pub fn into_inner(self) -> Poly2 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for ANormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Memoized evaluation of the recursive map `psi` on monomials.
#[derive(Default)]
pub struct Psi {
    memo: HashMap<(u32, u32), Poly2>,
}

impl Psi {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(&mut self, a: u32, b: u32) -> Poly2 {
        if let Some(p) = self.memo.get(&(a, b)) {
            return p.clone();
        }
        let out = self.compute(a, b);
        self.memo.insert((a, b), out.clone());
        out
    }

    fn compute(&mut self, a: u32, b: u32) -> Poly2 {
        debug_assert!((a + b).is_multiple_of(2));
        if a == 0 || b == 0 {
            return Poly2::zero();
        }
        if a > b {
            return -self.monomial(b, a);
        }
        if a.is_multiple_of(2) {
            return Poly2::monomial(a, b);
        }
        // x^a y^a with a odd falls under both the odd branch and the
        // antisymmetry rule psi(x^a y^b) = -psi(x^b y^a); the latter forces 0.
        // The odd branch would return an element of B instead.
        if a == b {
            return Poly2::zero();
        }
        let n = a + b;
        let mut acc = self.monomial(a + 1, b - 1);
        for j in (2..=a + 1).step_by(2) {
            acc += &self.monomial(j, n - j).scale(&binomial(a + 1, j));
        }
        for j in (1..a.saturating_sub(1)).step_by(2) {
            acc += &self.monomial(j, n - j).scale(&binomial(a + 1, j));
        }
        acc.scale(&-Rational::new(BigInt::one(), BigInt::from(a + 1)))
    }

    pub fn apply(&mut self, p: &Poly2) -> Result<ANormalForm> {
        let mut out = Poly2::zero();
        for (m, c) in p.terms() {
            let [a, b] = m.0;
            if (a + b) % 2 == 1 {
                return Err(Error::OddMonomial(a, b));
            }
            out += &self.monomial(a, b).scale(c);
        }
        Ok(ANormalForm(out))
    }
}

/// The projection `psi : Q[x,y]^even -> A`.
pub fn psi(p: &Poly2) -> Result<ANormalForm> {
    Psi::new().apply(p)
}

/// `psi(x^a y^b (-x-y)^a)`, the image of the vanishing class `x^a y^b z^a`.
pub fn theta_relation(a: u32, b: u32) -> Result<ANormalForm> {
    theta_relation_with(&mut Psi::new(), a, b)
}

fn theta_relation_with(psi: &mut Psi, a: u32, b: u32) -> Result<ANormalForm> {
    let p = Poly3::monomial(a, b, a).substitute_phi();
    psi.apply(&p)
}

/// Grade-1 element `x^{2i} y^{2j}` in normal form (the graph `theta_{2i,2j}`).
pub fn theta_generator(i: u32, j: u32) -> ThetaElement {
    ThetaElement::new(1, &Poly3::monomial(2 * i, 2 * j, 0)).expect("grade 1 accepts all degrees")
}

/// Coefficients `(a_1, ..., a_n)`, `n = floor((k-4)/4)`, of a linear
/// combination `sum a_i {sigma_{2i+1}, sigma_{k-1-2i}}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationVector {
    weight: u32,
    coefficients: Vec<Rational>,
}

/// Number of brackets `{sigma_{2i+1}, sigma_{k-1-2i}}` with `2i+1 < k-1-2i`.
pub fn reduced_len(k: u32) -> usize {
    (k.saturating_sub(4) / 4) as usize
}

/// `floor((k-4)/4) - floor((k-2)/6)`, the expected number of relations.
pub fn expected_relation_count(k: u32) -> usize {
    reduced_len(k) - ((k - 2) / 6) as usize
}

fn check_weight(k: u32) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k));
    }
    if k < 8 {
        return Err(Error::WeightTooSmall(k, 8));
    }
    Ok(())
}

impl RelationVector {
    pub fn new(weight: u32, coefficients: Vec<Rational>) -> Result<Self> {
        check_weight(weight)?;
        let expected = reduced_len(weight);
        if coefficients.len() != expected {
            return Err(Error::RelationLength {
                weight,
                got: coefficients.len(),
                expected,
            });
        }
        Ok(RelationVector {
            weight,
            coefficients,
        })
    }

    pub fn from_integers(weight: u32, coefficients: &[i64]) -> Result<Self> {
        Self::new(weight, coefficients.iter().map(|&c| int(c)).collect())
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Rescaled to coprime integers with a positive leading entry.
    pub fn normalized(&self) -> Self {
        RelationVector {
            weight: self.weight,
            coefficients: self
                .integer_coefficients()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    pub fn integer_coefficients(&self) -> Vec<BigInt> {
        normalize_primitive(&self.coefficients)
    }

    /// Reads the coefficients of `x^{2i} y^{k-2-2i}` from an element of `A`
    /// of degree `k - 2`. Diagonal terms `x^a y^a` are zero in `A/B` and
    /// are ignored.
    pub fn from_a_normal_form(k: u32, p: &ANormalForm) -> Result<Self> {
        check_weight(k)?;
        let n = reduced_len(k);
        let mut coefficients = vec![Rational::zero(); n];
        for (m, c) in p.value().terms() {
            let [a, b] = m.0;
            if a + b != k - 2 || a % 2 == 1 || a > b {
                return Err(Error::Usage(format!(
                    "x^{a} y^{b} is not a theta generator of weight {k}"
                )));
            }
            if a == b {
                continue;
            }
            coefficients[(a / 2 - 1) as usize] = c.clone();
        }
        Self::new(k, coefficients)
    }
}

impl fmt::Display for RelationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Canonical basis of a span of coefficient vectors: reduced echelon rows,
/// each rescaled to primitive integers.
pub fn canonical_relation_basis(k: u32, vectors: &[Vec<Rational>]) -> Vec<RelationVector> {
    span_basis(vectors, reduced_len(k))
        .into_iter()
        .map(|row| {
            RelationVector::new(k, row)
                .expect("length matches")
                .normalized()
        })
        .collect()
}

/// Relations among the brackets of grt weight `k`, as the kernel of
/// `a -> sum a_i [x^{2i} y^{k-2-2i}]` into the weight `k-1` slice of `H^1`.
pub fn relation_space(k: u32) -> Result<Vec<RelationVector>> {
    check_weight(k)?;
    let n = reduced_len(k);
    let target = weight_slice_basis(1, k - 1);
    let mut columns: Vec<Vec<Rational>> = (1..=n as u32)
        .map(|i| coordinates(theta_generator(i, (k - 2) / 2 - i).value(), &target))
        .collect();
    columns.extend(d0_images(0, k - 1));
    let ncols = columns.len();
    let rows: Vec<Vec<Rational>> = (0..target.len())
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let projected: Vec<Vec<Rational>> = kernel(&rows, ncols)
        .into_iter()
        .map(|v| v[..n].to_vec())
        .collect();
    Ok(canonical_relation_basis(k, &projected))
}

/// Relations produced by `theta_relation(a, k-2-2a)` for every seed
/// `a >= 1` with `k-2-2a >= 1`.
pub fn psi_relation_vectors(k: u32) -> Result<Vec<RelationVector>> {
    check_weight(k)?;
    let mut psi = Psi::new();
    let mut out = Vec::new();
    let mut a = 1;
    while 2 * a < k - 2 {
        let b = k - 2 - 2 * a;
        let rel = theta_relation_with(&mut psi, a, b)?;
        out.push(RelationVector::from_a_normal_form(k, &rel)?);
        a += 1;
    }
    Ok(out)
}

/// Span of [`psi_relation_vectors`] in canonical form.
pub fn psi_relation_space(k: u32) -> Result<Vec<RelationVector>> {
    let raw: Vec<Vec<Rational>> = psi_relation_vectors(k)?
        .into_iter()
        .map(|r| r.coefficients)
        .collect();
    Ok(canonical_relation_basis(k, &raw))
}

/// Monomials `x^a y^b` of total degree `d`.
pub fn two_variable_monomials(d: u32) -> Vec<Monomial2> {
    (0..=d).map(|a| Monomial2([a, d - a])).collect()
}
