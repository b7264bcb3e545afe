//! The three `S3` actions: the signed permutation of exponents on
//! `Q[x,y,z]`, the plain permutation on `Q[alpha,beta,gamma]`, and the action
//! `sigma_*` it induces on `Q[x,y]` through `z -> -x-y`. Coinvariants of the
//! signed action get a canonical monomial basis.

use std::fmt;
use std::ops::Mul;

use num_traits::One;

use crate::exact::{Monomial3, Poly2, Poly3, Rational};

/// A permutation of `{1, 2, 3}`, stored 0-based.
///
/// All actions below send a monomial with exponent vector `k` to the one with
/// exponents `(k[sigma(1)], k[sigma(2)], k[sigma(3)])`. The product is
/// defined by `(sigma * tau)(i) = tau(sigma(i))`, which is the convention
/// under which `(sigma * tau).p = sigma.(tau.p)` holds for these actions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermS3([u8; 3]);

impl PermS3 {
    pub const IDENTITY: PermS3 = PermS3([0, 1, 2]);

    /// From 1-based images `[sigma(1), sigma(2), sigma(3)]`.
    pub fn from_images(images: [u8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        let mut out = [0u8; 3];
        for (i, &im) in images.iter().enumerate() {
            if !(1..=3).contains(&im) || seen[(im - 1) as usize] {
                return None;
            }
            seen[(im - 1) as usize] = true;
            out[i] = im - 1;
        }
        Some(PermS3(out))
    }

    /// The transposition `(a b)`, 1-based.
    pub fn transposition(a: u8, b: u8) -> Self {
        assert!(a != b && (1..=3).contains(&a) && (1..=3).contains(&b));
        let mut im = [1, 2, 3];
        im.swap((a - 1) as usize, (b - 1) as usize);
        Self::from_images(im).unwrap()
    }

    /// `(123)`: 1 -> 2 -> 3 -> 1.
    pub fn cycle_123() -> Self {
        PermS3([1, 2, 0])
    }

    /// `(132)`: 1 -> 3 -> 2 -> 1.
    pub fn cycle_132() -> Self {
        PermS3([2, 0, 1])
    }

    pub fn all() -> [PermS3; 6] {
        [
            PermS3([0, 1, 2]),
            PermS3([1, 0, 2]),
            PermS3([0, 2, 1]),
            PermS3([2, 1, 0]),
            PermS3([1, 2, 0]),
            PermS3([2, 0, 1]),
        ]
    }

    /// 1-based image of `i`.
    pub fn image(&self, i: u8) -> u8 {
        self.0[(i - 1) as usize] + 1
    }

    pub fn is_odd(&self) -> bool {
        let p = self.0;
        let inversions = (0..3)
            .flat_map(|i| ((i + 1)..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2 == 1
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> Rational {
        if self.is_odd() {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    pub fn inverse(&self) -> Self {
        let mut out = [0u8; 3];
        for i in 0..3 {
            out[self.0[i] as usize] = i as u8;
        }
        PermS3(out)
    }

    fn permute(&self, k: [u32; 3]) -> [u32; 3] {
        [
            k[self.0[0] as usize],
            k[self.0[1] as usize],
            k[self.0[2] as usize],
        ]
    }
}

impl Mul for PermS3 {
    type Output = PermS3;
    fn mul(self, rhs: PermS3) -> PermS3 {
        PermS3([
            rhs.0[self.0[0] as usize],
            rhs.0[self.0[1] as usize],
            rhs.0[self.0[2] as usize],
        ])
    }
}

impl fmt::Debug for PermS3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {} {}]", self.0[0] + 1, self.0[1] + 1, self.0[2] + 1)
    }
}

/// `sigma.(x^{k1} y^{k2} z^{k3}) = (-1)^{|sigma|} x^{k_sigma(1)} y^{k_sigma(2)} z^{k_sigma(3)}`.
pub fn sign_action(sigma: PermS3, p: &Poly3) -> Poly3 {
    let s = sigma.sign();
    Poly3::from_terms(
        p.terms()
            .map(|(m, c)| (Monomial3(sigma.permute(m.0)), c * &s)),
    )
}

/// Exponent permutation without sign, on `Q[alpha, beta, gamma]`.
pub fn plain_action(sigma: PermS3, p: &Poly3) -> Poly3 {
    Poly3::from_terms(
        p.terms()
            .map(|(m, c)| (Monomial3(sigma.permute(m.0)), c.clone())),
    )
}

/// `sigma_*(x^a y^b) = phi(sigma.(x^a y^b z^0))`.
pub fn induced_action(sigma: PermS3, p: &Poly2) -> Poly2 {
    sign_action(sigma, &lift_z0(p)).substitute_phi()
}

/// `x^a y^b -> x^a y^b z^0`.
pub fn lift_z0(p: &Poly2) -> Poly3 {
    Poly3::from_terms(
        p.terms()
            .map(|(m, c)| (Monomial3([m.0[0], m.0[1], 0]), c.clone())),
    )
}

/// Sorts an exponent triple into strictly decreasing order. Returns `None`
/// when two exponents coincide, otherwise the sorted triple and whether the
/// sorting permutation is odd.
pub fn sort_exponents(k: [u32; 3]) -> Option<([u32; 3], bool)> {
    let [a, b, c] = k;
    if a == b || b == c || a == c {
        return None;
    }
    let mut v = k;
    let mut odd = false;
    // three-element bubble sort, counting swaps
    for (i, j) in [(0, 1), (1, 2), (0, 1)] {
        if v[i] < v[j] {
            v.swap(i, j);
            odd = !odd;
        }
    }
    Some((v, odd))
}

/// Canonical representative in the coinvariants `Q[x,y,z]_{S3}` of the signed
/// action: each monomial moves to its strictly decreasing rearrangement with
/// the sign of the sorting permutation; monomials with a repeated exponent
/// are identified with their own negative and vanish.
pub fn sign_coinvariant_normal_form(p: &Poly3) -> Poly3 {
    let mut out = Poly3::zero();
    for (m, c) in p.terms() {
        if let Some((sorted, odd)) = sort_exponents(m.0) {
            out.add_term(Monomial3(sorted), if odd { -c.clone() } else { c.clone() });
        }
    }
    out
}

pub fn is_strictly_decreasing(k: [u32; 3]) -> bool {
    k[0] > k[1] && k[1] > k[2]
}

/// Strictly decreasing exponent triples of total degree `d`.
pub fn strictly_decreasing_triples(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for k3 in 0..=d {
        for k2 in (k3 + 1)..=d {
            let used = k2 + k3;
            if used > d {
                break;
            }
            let k1 = d - used;
            if k1 > k2 {
                out.push([k1, k2, k3]);
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rank, Monomial2};
    use proptest::prelude::*;

    fn poly3(max_deg: u32) -> impl Strategy<Value = Poly3> {
        prop::collection::vec(((0..=max_deg), (0..=max_deg), (0..=max_deg), -4i64..=4), 0..5)
            .prop_map(|ts| {
                Poly3::from_terms(ts.into_iter().map(|(a, b, c, k)| (Monomial3([a, b, c]), int(k))))
            })
    }

    fn poly2(max_deg: u32) -> impl Strategy<Value = Poly2> {
        prop::collection::vec(((0..=max_deg), (0..=max_deg), -4i64..=4), 0..5).prop_map(|ts| {
            Poly2::from_terms(ts.into_iter().map(|(a, b, k)| (Monomial2([a, b]), int(k))))
        })
    }

    #[test]
    fn permutation_basics() {
        assert!(!PermS3::IDENTITY.is_odd());
        assert!(PermS3::transposition(1, 2).is_odd());
        assert!(!PermS3::cycle_123().is_odd());
        assert_eq!(PermS3::cycle_123().image(1), 2);
        assert_eq!(PermS3::cycle_123().inverse(), PermS3::cycle_132());
        assert_eq!(PermS3::cycle_123() * PermS3::cycle_132(), PermS3::IDENTITY);
        assert!(PermS3::from_images([1, 1, 2]).is_none());
        for s in PermS3::all() {
            for t in PermS3::all() {
                assert_eq!((s * t).is_odd(), s.is_odd() != t.is_odd());
            }
        }
    }

    #[test]
    fn sign_action_examples() {
        let m = Poly3::monomial(2, 3, 4);
        assert_eq!(sign_action(PermS3::IDENTITY, &m), m);
        assert_eq!(
            sign_action(PermS3::transposition(1, 2), &m),
            -Poly3::monomial(3, 2, 4)
        );
        let xyz = Poly3::monomial(1, 1, 1);
        assert_eq!(sign_action(PermS3::cycle_123(), &xyz), xyz);
    }

    #[test]
    fn plain_action_examples() {
        let s13 = PermS3::transposition(1, 3);
        assert_eq!(plain_action(s13, &Poly3::monomial(2, 0, 4)), Poly3::monomial(4, 0, 2));
        assert_eq!(
            plain_action(PermS3::cycle_123(), &Poly3::monomial(1, 2, 3)),
            Poly3::monomial(2, 3, 1)
        );
        // (13) on (a-b)^2 (b-c)^4 is (c-b)^2 (b-a)^4
        let (a, b, c) = (Poly3::x(), Poly3::y(), Poly3::z());
        let lhs = plain_action(s13, &(&(&a - &b).pow(2) * &(&b - &c).pow(4)));
        let rhs = &(&c - &b).pow(2) * &(&b - &a).pow(4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_action_examples() {
        let m = Poly2::monomial(2, 4);
        assert_eq!(induced_action(PermS3::IDENTITY, &m), m);
        assert_eq!(
            induced_action(PermS3::transposition(1, 2), &m),
            -Poly2::monomial(4, 2)
        );
        // (13)_* x^4 y^4 = -(-x-y)^4 y^4
        let lhs = induced_action(PermS3::transposition(1, 3), &Poly2::monomial(4, 4));
        let minus_x_minus_y = -(Poly2::x() + Poly2::y());
        let rhs = -(&minus_x_minus_y.pow(4) * &Poly2::monomial(0, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_examples() {
        assert!(sign_coinvariant_normal_form(&Poly3::monomial(2, 2, 1)).is_zero());
        assert_eq!(
            sign_coinvariant_normal_form(&Poly3::monomial(2, 3, 0)),
            -Poly3::monomial(3, 2, 0)
        );
        let m = Poly3::monomial(4, 2, 0);
        assert_eq!(sign_coinvariant_normal_form(&m), m);
    }

    #[test]
    fn decreasing_triples() {
        assert_eq!(
            strictly_decreasing_triples(6),
            vec![[5, 1, 0], [4, 2, 0], [3, 2, 1]]
        );
        assert!(strictly_decreasing_triples(1).is_empty());
        assert!(strictly_decreasing_triples(2).is_empty());
    }

    fn all_monomials(d: u32) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        for a in 0..=d {
            for b in 0..=(d - a) {
                out.push([a, b, d - a - b]);
            }
        }
        out
    }

    /// The normal form kills exactly `span{p - sigma.p}`: in each degree the
    /// span of the relations has dimension `#monomials - #decreasing`, and
    /// every relation normalizes to zero.
    #[test]
    fn normal_form_kernel_is_relation_span() {
        for d in 0..=10 {
            let monos = all_monomials(d);
            let idx = |k: [u32; 3]| monos.iter().position(|&m| m == k).unwrap();
            let mut rows = Vec::new();
            for &k in &monos {
                let p = Poly3::monomial(k[0], k[1], k[2]);
                for s in PermS3::all() {
                    let rel = &p - &sign_action(s, &p);
                    assert!(sign_coinvariant_normal_form(&rel).is_zero());
                    let mut row = vec![int(0); monos.len()];
                    for (m, c) in rel.terms() {
                        row[idx(m.0)] = c.clone();
                    }
                    rows.push(row);
                }
            }
            let expected = monos.len() - strictly_decreasing_triples(d).len();
            assert_eq!(rank(&rows, monos.len()), expected, "degree {d}");
        }
    }

    proptest! {
        #[test]
        fn normal_form_idempotent(p in poly3(5)) {
            let n = sign_coinvariant_normal_form(&p);
            prop_assert_eq!(sign_coinvariant_normal_form(&n), n);
        }

        #[test]
        fn action_laws(p in poly3(4), q in poly2(6)) {
            prop_assert_eq!(sign_action(PermS3::IDENTITY, &p), p.clone());
            prop_assert_eq!(plain_action(PermS3::IDENTITY, &p), p.clone());
            prop_assert_eq!(induced_action(PermS3::IDENTITY, &q), q.clone());
            for s in PermS3::all() {
                for t in PermS3::all() {
                    prop_assert_eq!(sign_action(s * t, &p), sign_action(s, &sign_action(t, &p)));
                    prop_assert_eq!(plain_action(s * t, &p), plain_action(s, &plain_action(t, &p)));
                    prop_assert_eq!(
                        induced_action(s * t, &q),
                        induced_action(s, &induced_action(t, &q))
                    );
                }
            }
        }

        #[test]
        fn phi_is_equivariant(p in poly3(8)) {
            for s in PermS3::all() {
                prop_assert_eq!(
                    induced_action(s, &p.substitute_phi()),
                    sign_action(s, &p).substitute_phi()
                );
            }
        }

        #[test]
        fn induced_action_independent_of_lift(q in poly2(5)) {
            // lifting with an extra multiple of (x+y+z) changes nothing
            let lift = &lift_z0(&q) + &(&Poly3::xyz_sum() * &Poly3::monomial(1, 0, 2));
            for s in PermS3::all() {
                prop_assert_eq!(induced_action(s, &q), sign_action(s, &lift).substitute_phi());
            }
        }
    }
}
