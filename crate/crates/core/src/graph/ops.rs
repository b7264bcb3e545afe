//! Vertex splitting, operadic insertion, wheels, bowties and marking.

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::core::{Graph, VertexKind};
use super::sum::{GraphClass, GraphSum};
use crate::exact::Rational;
use crate::{Error, Result};

/// Moves the edges `moved` (indices) from `v` to a new internal vertex and
/// appends the edge `(v, new)` last.
fn split_with(g: &Graph, v: usize, moved: &[usize]) -> Graph {
    let w = g.num_vertices();
    let mut kinds = g.kinds().to_vec();
    kinds.push(VertexKind::Internal);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            if moved.contains(&i) {
                if a == v {
                    (w, b)
                } else {
                    (a, w)
                }
            } else {
                (a, b)
            }
        })
        .collect();
    edges.push((v, w));
    Graph::new(kinds, edges)
}

/// Raw terms of splitting vertex `v`, each with coefficient `+1`.
///
/// An internal vertex splits into two internal vertices, each keeping at
/// least two of the old edges; every unordered partition is taken once. An
/// external vertex keeps any subset of its edges and hands the rest, at
/// least two, to the new internal vertex.
pub fn vertex_splittings(g: &Graph, v: usize) -> Vec<Graph> {
    let incident = g.incident_edges(v);
    let n = incident.len();
    let mut out = Vec::new();
    if n >= 64 {
        panic!("vertex of valence {n} is out of range");
    }
    let external = g.is_external(v);
    for mask in 0u64..(1u64 << n) {
        let moved: Vec<usize> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| incident[i])
            .collect();
        let kept = n - moved.len();
        if moved.len() < 2 {
            continue;
        }
        if !external && (kept < 2 || mask & 1 == 1) {
            // the first incident edge always stays, so each unordered
            // partition is seen once
            continue;
        }
        out.push(split_with(g, v, &moved));
    }
    out
}

fn sum_par<T: Sync>(
    items: &[T],
    f: impl Fn(&T, &mut GraphSum) -> Result<()> + Sync + Send,
) -> Result<GraphSum> {
    items
        .par_iter()
        .try_fold(GraphSum::zero, |mut acc, item| {
            f(item, &mut acc)?;
            Ok(acc)
        })
        .try_reduce(GraphSum::zero, |mut a, b| {
            a.add_sum(&b);
            Ok(a)
        })
}

/// The vertex-splitting differential of `ICG(n)`. With `loop_preserving`,
/// only terms with as many internal loops as their source are kept (the
/// part `d0`).
pub fn icg_differential(s: &GraphSum, loop_preserving: bool) -> Result<GraphSum> {
    let terms: Vec<(&GraphClass, &Rational)> = s.terms().collect();
    sum_par(&terms, |(class, c), acc| {
        let g = class.graph();
        let loops = g.internal_loop_count();
        for v in 0..g.num_vertices() {
            for h in vertex_splittings(g, v) {
                if !h.is_internally_connected() {
                    continue;
                }
                if loop_preserving && h.internal_loop_count() > loops {
                    continue;
                }
                acc.add_graph(&h, c)?;
            }
        }
        Ok(())
    })
}

/// The vertex-splitting differential of `GC2`.
pub fn gc2_differential(s: &GraphSum) -> Result<GraphSum> {
    let terms: Vec<(&GraphClass, &Rational)> = s.terms().collect();
    sum_par(&terms, |(class, c), acc| {
        let g = class.graph();
        for v in 0..g.num_vertices() {
            for h in vertex_splittings(g, v) {
                acc.add_graph(&h, c)?;
            }
        }
        Ok(())
    })
}

/// `g1 o_j g2` for one reconnection: edge `i` of the loose edges at `j`
/// (in edge order) goes to vertex `targets[i]` of `g2`. Edges of `g1` come
/// first, then those of `g2`.
pub fn insert_with(g1: &Graph, j: usize, g2: &Graph, targets: &[usize]) -> Graph {
    let n1 = g1.num_vertices();
    let shift = |x: usize| if x > j { x - 1 } else { x };
    let offset = n1 - 1;
    let mut kinds: Vec<VertexKind> = (0..n1).filter(|&x| x != j).map(|x| g1.kind(x)).collect();
    kinds.extend_from_slice(g2.kinds());
    let mut edges = Vec::with_capacity(g1.num_edges() + g2.num_edges());
    let mut loose = 0;
    for &(a, b) in g1.edges() {
        if a == j || b == j {
            let other = if a == j { b } else { a };
            edges.push((shift(other), offset + targets[loose]));
            loose += 1;
        } else {
            edges.push((shift(a), shift(b)));
        }
    }
    for &(a, b) in g2.edges() {
        edges.push((offset + a, offset + b));
    }
    Graph::new(kinds, edges)
}

/// Filtration value of `insert_with(g1, j, g2, targets)` without building
/// the graph.
fn insertion_filtration(
    val1: &[usize],
    j: usize,
    val2: &[usize],
    neighbors: usize,
    targets: &[usize],
) -> i64 {
    let mut extra = vec![0usize; val2.len()];
    for &t in &targets[..neighbors] {
        extra[t] += 1;
    }
    let max1 = val1
        .iter()
        .enumerate()
        .filter(|&(x, _)| x != j)
        .map(|(_, &v)| v)
        .max()
        .unwrap_or(0);
    let max2 = val2.iter().zip(&extra).map(|(a, b)| a + b).max().unwrap_or(0);
    (val1.len() + val2.len() - 1) as i64 - max1.max(max2) as i64
}

/// `sum_j g1 o_j g2`, keeping only terms whose filtration value is at most
/// `max_level` (all terms when `None`). Truncation happens before
/// canonicalization.
pub fn pre_lie_graph(g1: &Graph, g2: &Graph, max_level: Option<i64>) -> Result<GraphSum> {
    let val1 = g1.valences();
    let val2 = g2.valences();
    let n2 = g2.num_vertices();
    let jobs: Vec<(usize, usize)> = (0..g1.num_vertices())
        .flat_map(|j| {
            let total = n2.pow(val1[j] as u32);
            (0..total).step_by(4096).map(move |start| (j, start))
        })
        .collect();
    sum_par(&jobs, |&(j, start), acc| {
        let d = val1[j];
        let total = n2.pow(d as u32);
        let mut targets = vec![0usize; d];
        for idx in start..total.min(start + 4096) {
            let mut r = idx;
            for t in targets.iter_mut() {
                *t = r % n2;
                r /= n2;
            }
            if let Some(cap) = max_level {
                if insertion_filtration(&val1, j, &val2, d, &targets) > cap {
                    continue;
                }
            }
            acc.add_graph(&insert_with(g1, j, g2, &targets), &Rational::one())?;
        }
        Ok(())
    })
}

/// Bilinear extension of [`pre_lie_graph`].
pub fn pre_lie(a: &GraphSum, b: &GraphSum, max_level: Option<i64>) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (ca, xa) in a.terms() {
        for (cb, xb) in b.terms() {
            let part = pre_lie_graph(ca.graph(), cb.graph(), max_level)?;
            out.add_sum(&part.scale(&(xa * xb)));
        }
    }
    Ok(out)
}

/// `[a, b] = a o b - (-1)^{deg a deg b} b o a` in `GC2`, extended
/// bilinearly over homogeneous terms.
pub fn gc2_bracket(a: &GraphSum, b: &GraphSum) -> Result<GraphSum> {
    gc2_bracket_truncated(a, b, None)
}

/// [`gc2_bracket`] keeping only terms of filtration value at most
/// `max_level`. Since the bracket respects the filtration, the result is
/// the bracket in the quotient by `F^{max_level + 1}`.
pub fn gc2_bracket_truncated(a: &GraphSum, b: &GraphSum, max_level: Option<i64>) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (ca, xa) in a.terms() {
        for (cb, xb) in b.terms() {
            let (ga, gb) = (ca.graph(), cb.graph());
            let c = xa * xb;
            out.add_sum(&pre_lie_graph(ga, gb, max_level)?.scale(&c));
            let odd = (ga.gc2_degree() * gb.gc2_degree()).rem_euclid(2) == 1;
            let sign = if odd { c } else { -c };
            out.add_sum(&pre_lie_graph(gb, ga, max_level)?.scale(&sign));
        }
    }
    Ok(out)
}

/// Hub `0` joined to the cycle `1..=n`; spokes first, then the rim.
pub fn wheel_graph(spokes: usize) -> Result<Graph> {
    if spokes < 3 || spokes.is_multiple_of(2) {
        return Err(Error::EvenWheel(spokes));
    }
    let mut edges: Vec<(usize, usize)> = (1..=spokes).map(|i| (0, i)).collect();
    edges.extend((1..=spokes).map(|i| (i, i % spokes + 1)));
    Ok(Graph::internal(spokes + 1, edges))
}

/// The canonical class of the wheel with `spokes` spokes.
pub fn wheel(spokes: usize) -> Result<GraphClass> {
    let g = wheel_graph(spokes)?;
    Ok(GraphClass::of(&g)?
        .expect("odd wheels are nonzero")
        .0)
}

/// The bowtie `w_p o_hub w_q` in which the first `p - 1` spokes of `w_p`
/// are reattached to the hub of `w_q` and the last one to a rim vertex.
/// Its hub is adjacent to all of the `q`-cycle and to `p - 1` vertices of
/// the `p`-cycle; the remaining vertex of the `p`-cycle is bridged to the
/// `q`-cycle. With `p + q + 1` vertices and hub valence `p + q - 1` it has
/// filtration value 2.
pub fn bowtie(p: usize, q: usize) -> Result<Graph> {
    let wp = wheel_graph(p)?;
    let wq = wheel_graph(q)?;
    let mut targets = vec![0usize; p];
    targets[p - 1] = 1;
    Ok(insert_with(&wp, 0, &wq, &targets))
}

/// `bowtie(p, q) - bowtie(q, p)` as a canonical sum.
pub fn bowtie_difference(p: usize, q: usize) -> Result<GraphSum> {
    let a = GraphSum::from_graph(&bowtie(p, q)?)?;
    let b = GraphSum::from_graph(&bowtie(q, p)?)?;
    Ok(&a - &b)
}

/// Terms of filtration value exactly `level`.
pub fn filtration_part(s: &GraphSum, level: i64) -> GraphSum {
    s.filter(|g| g.filtration_value() == level)
}

/// Terms with exactly `loops` internal loops.
pub fn loop_part(s: &GraphSum, loops: usize) -> GraphSum {
    s.filter(|g| g.internal_loop_count() == loops)
}

/// `(-)_1`: the sum over all vertices of the graph with that vertex made
/// external (label 1). Terms that are not internally connected are dropped.
pub fn mark_one_external(s: &GraphSum) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (class, c) in s.terms() {
        let g = class.graph();
        for v in 0..g.num_vertices() {
            let h = g.with_kind(v, VertexKind::External(1));
            if h.check_icg().is_ok() {
                out.add_graph(&h, c)?;
            }
        }
    }
    Ok(out)
}

/// Minimum filtration value over the terms, `None` for the zero sum.
pub fn min_filtration(s: &GraphSum) -> Option<i64> {
    s.terms().map(|(c, _)| c.graph().filtration_value()).min()
}

/// Whether every term lies at filtration value at least `level`.
pub fn all_at_least(s: &GraphSum, level: i64) -> bool {
    s.terms().all(|(c, _)| c.graph().filtration_value() >= level)
}

/// Sum of the coefficients' absolute values, a cheap size measure used in
/// reports.
pub fn l1_norm(s: &GraphSum) -> Rational {
    s.terms().fold(Rational::zero(), |acc, (_, c)| {
        acc + if *c < Rational::zero() { -c.clone() } else { c.clone() }
    })
}
