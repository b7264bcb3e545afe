//! Canonical labeling by individualization and refinement.
//!
//! Every leaf of the search tree is visited (no automorphism pruning), so
//! all leaves carrying the minimal certificate are found. Two of them with
//! different edge-sorting parity witness an automorphism acting by an odd
//! permutation on the edges, which makes the class zero.

use std::cmp::Ordering;

use super::core::{Graph, VertexKind};
use crate::{Error, Result};

/// Outcome of canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canonical {
    /// The graph is zero modulo the edge-order sign relation.
    Zero,
    /// `graph = (-1)^odd * canonical`.
    Class { canonical: Graph, odd: bool },
}

/// Relabelled kinds, sorted relabelled edges, and whether sorting them was odd.
type Certificate = (Vec<VertexKind>, Vec<(usize, usize)>, bool);

struct Search<'a> {
    graph: &'a Graph,
    adj: Vec<Vec<usize>>,
    best: Option<Certificate>,
    conflict: bool,
}

/// Rank-compress `keys` into colors `0..`, preserving their order.
fn rank<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut uniq: Vec<K> = keys.to_vec();
    uniq.sort();
    uniq.dedup();
    let colors = keys
        .iter()
        .map(|k| uniq.binary_search(k).unwrap() as u32)
        .collect();
    (colors, uniq.len())
}

impl<'a> Search<'a> {
    fn refine(&self, colors: &mut Vec<u32>) {
        let mut count = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        loop {
            let keys: Vec<(u32, Vec<u32>)> = (0..colors.len())
                .map(|v| {
                    let mut nb: Vec<u32> = self.adj[v].iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let (next, n) = rank(&keys);
            *colors = next;
            if n == count {
                return;
            }
            count = n;
        }
    }

    fn visit(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        for &v in &cell {
            let next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| {
                    if c as usize == target && w != v {
                        2 * c + 1
                    } else {
                        2 * c
                    }
                })
                .collect();
            self.visit(next);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut kinds = vec![VertexKind::Internal; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            kinds[p] = self.graph.kind(v);
        }
        let relabeled: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut order: Vec<usize> = (0..relabeled.len()).collect();
        order.sort_by_key(|&i| relabeled[i]);
        let odd = permutation_is_odd(&order);
        let sorted: Vec<(usize, usize)> = order.iter().map(|&i| relabeled[i]).collect();
        match &self.best {
            None => self.best = Some((kinds, sorted, odd)),
            Some((bk, be, bodd)) => match (kinds.as_slice(), sorted.as_slice()).cmp(&(bk.as_slice(), be.as_slice())) {
                Ordering::Less => {
                    self.best = Some((kinds, sorted, odd));
                    self.conflict = false;
                }
                Ordering::Equal => {
                    if odd != *bodd {
                        self.conflict = true;
                    }
                }
                Ordering::Greater => {}
            },
        }
    }
}

pub(crate) fn permutation_is_odd(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut odd = false;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// Canonical representative of `g` modulo vertex relabeling (external
/// vertices keep their labels) and the edge-order sign relation.
///
/// Simple loops and internal vertices of valence below three are rejected.
/// A double edge is rejected when `g` has external vertices; in a graph
/// without external vertices it makes the class zero, since exchanging the
/// two parallel edges is an odd symmetry.
pub fn canonicalize(g: &Graph) -> Result<Canonical> {
    g.check_local()?;
    if g.has_double_edge() {
        if g.has_external() {
            return Err(Error::Inadmissible("double edge".into()));
        }
        return Ok(Canonical::Zero);
    }
    let initial: Vec<(u8, u32)> = g
        .kinds()
        .iter()
        .map(|k| match k {
            VertexKind::External(l) => (0, *l),
            VertexKind::Internal => (1, 0),
        })
        .collect();
    let (colors, _) = rank(&initial);
    let mut search = Search {
        graph: g,
        adj: g.adjacency(),
        best: None,
        conflict: false,
    };
    search.visit(colors);
    let (kinds, edges, odd) = search.best.expect("at least one leaf");
    if search.conflict {
        return Ok(Canonical::Zero);
    }
    Ok(Canonical::Class {
        canonical: Graph::new(kinds, edges),
        odd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k4() -> Graph {
        Graph::internal(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])
    }

    fn class(g: &Graph) -> (Graph, bool) {
        match canonicalize(g).unwrap() {
            Canonical::Class { canonical, odd } => (canonical, odd),
            Canonical::Zero => panic!("unexpected zero"),
        }
    }

    #[test]
    fn transposed_edges_flip_sign() {
        let g = k4();
        let mut order: Vec<usize> = (0..6).collect();
        order.swap(0, 1);
        let h = g.reorder_edges(&order);
        let (cg, og) = class(&g);
        let (ch, oh) = class(&h);
        assert_eq!(cg, ch);
        assert_ne!(og, oh);
    }

    #[test]
    fn parity() {
        assert!(!permutation_is_odd(&[0, 1, 2]));
        assert!(permutation_is_odd(&[1, 0, 2]));
        assert!(!permutation_is_odd(&[1, 2, 0]));
    }

    #[test]
    fn even_wheel_vanishes() {
        // w4: reflection through two opposite rim vertices is odd on edges
        let w4 = Graph::internal(
            5,
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
        );
        assert_eq!(canonicalize(&w4).unwrap(), Canonical::Zero);
    }

    #[test]
    fn inadmissible_rejected() {
        let g = Graph::new(
            vec![VertexKind::External(1), VertexKind::Internal],
            vec![(0, 1)],
        );
        assert!(canonicalize(&g).is_err());
        let doubled = Graph::internal(4, vec![(0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]);
        assert_eq!(canonicalize(&doubled).unwrap(), Canonical::Zero);
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        // cubic-ish graphs: a cycle plus chords, so every vertex has valence >= 3
        (5usize..9).prop_flat_map(|n| {
            let chords = prop::collection::vec((0..n, 0..n), n..(2 * n));
            chords.prop_map(move |ch| {
                let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                for (a, b) in ch {
                    let e = (a.min(b), a.max(b));
                    if a != b && !edges.iter().any(|&(u, v)| (u.min(v), u.max(v)) == e) {
                        edges.push(e);
                    }
                }
                Graph::internal(n, edges)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn invariant_under_relabeling(g in random_graph(), seed in any::<u64>()) {
            prop_assume!(g.check_local().is_ok());
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..g.num_vertices()).collect();
            perm.shuffle(&mut rng);
            let mut order: Vec<usize> = (0..g.num_edges()).collect();
            order.shuffle(&mut rng);
            let h = g.relabel(&perm).reorder_edges(&order);
            let flip = permutation_is_odd(&order);
            match (canonicalize(&g).unwrap(), canonicalize(&h).unwrap()) {
                (Canonical::Zero, Canonical::Zero) => {}
                (Canonical::Class { canonical: a, odd: oa }, Canonical::Class { canonical: b, odd: ob }) => {
                    prop_assert_eq!(a, b);
                    prop_assert_eq!(oa != ob, flip);
                }
                _ => prop_assert!(false, "zero status differs"),
            }
        }

        #[test]
        fn idempotent(g in random_graph()) {
            prop_assume!(g.check_local().is_ok());
            if let Canonical::Class { canonical, .. } = canonicalize(&g).unwrap() {
                prop_assert_eq!(
                    canonicalize(&canonical).unwrap(),
                    Canonical::Class { canonical: canonical.clone(), odd: false }
                );
            }
        }
    }
}
