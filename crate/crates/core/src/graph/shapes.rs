//! Hairy θ-graphs in `ICG(1)` and their polynomial encoding.
//!
//! A θ-shape has two junctions joined by three strands; every other
//! internal vertex sits on a strand and carries one hair to the external
//! vertex. Grade `2 - #(haired junctions)` places it in `C0`, `C1` or `C2`.

use num_traits::Zero;

use super::core::{Graph, VertexKind};
use super::sum::{GraphClass, GraphSum};
use crate::exact::{Monomial3, Poly3, Rational};
use crate::theta::ThetaElement;
use crate::{Error, Result};

const EXTERNAL: usize = 0;
const LEFT: usize = 1;
const RIGHT: usize = 2;

/// The θ-graph with `hairs[s]` hairs on strand `s`, in the reference edge
/// order: the left junction hair (grades 0 and 1), then the strands in turn,
/// each read from left to right as segment, hair, segment, ..., segment,
/// then the right junction hair (grade 0).
pub fn theta_graph(grade: u8, hairs: [u32; 3]) -> Result<Graph> {
    if grade > 2 {
        return Err(Error::BadGrade(grade));
    }
    if hairs.iter().filter(|&&k| k == 0).count() > 1 {
        return Err(Error::Inadmissible(format!(
            "θ-graph with hairs {hairs:?} has a double edge"
        )));
    }
    let mut kinds = vec![VertexKind::External(1), VertexKind::Internal, VertexKind::Internal];
    let mut edges = Vec::new();
    if grade <= 1 {
        edges.push((EXTERNAL, LEFT));
    }
    for &k in &hairs {
        let mut prev = LEFT;
        for _ in 0..k {
            let h = kinds.len();
            kinds.push(VertexKind::Internal);
            edges.push((prev, h));
            edges.push((EXTERNAL, h));
            prev = h;
        }
        edges.push((prev, RIGHT));
    }
    if grade == 0 {
        edges.push((EXTERNAL, RIGHT));
    }
    Ok(Graph::new(kinds, edges))
}

/// Grade and strand hair counts of a θ-shape, or `None` if `g` is not one.
/// For grade 1 the strands are read from the haired junction; otherwise
/// their order is unspecified.
pub fn theta_shape(g: &Graph) -> Option<(u8, [u32; 3])> {
    if g.check_icg().is_err() {
        return None;
    }
    let ext: Vec<usize> = (0..g.num_vertices()).filter(|&v| g.is_external(v)).collect();
    if ext.len() != 1 || g.internal_loop_count() != 2 {
        return None;
    }
    let e = ext[0];
    let adj = g.adjacency();
    let inner = |v: usize| -> Vec<usize> { adj[v].iter().copied().filter(|&w| w != e).collect() };
    let haired = |v: usize| adj[v].contains(&e);
    let junctions: Vec<usize> = (0..g.num_vertices())
        .filter(|&v| v != e && inner(v).len() == 3)
        .collect();
    if junctions.len() != 2 {
        return None;
    }
    for v in 0..g.num_vertices() {
        if v != e && !junctions.contains(&v) && (inner(v).len() != 2 || !haired(v)) {
            return None;
        }
    }
    let (mut a, mut b) = (junctions[0], junctions[1]);
    let haired_count = junctions.iter().filter(|&&j| haired(j)).count();
    if haired_count == 1 && !haired(a) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut hairs = [0u32; 3];
    for (s, &start) in inner(a).iter().enumerate() {
        let (mut prev, mut cur, mut count) = (a, start, 0);
        while cur != b {
            if cur == a {
                return None;
            }
            count += 1;
            let next = inner(cur).into_iter().find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        hairs[s] = count;
    }
    Some((2 - haired_count as u8, hairs))
}

fn sort_desc(hairs: [u32; 3]) -> [u32; 3] {
    let mut m = hairs;
    m.sort_unstable_by(|x, y| y.cmp(x));
    m
}

/// The polynomial element represented by `g`, sign included.
pub fn theta_graph_encode(g: &Graph) -> Result<ThetaElement> {
    let (grade, hairs) =
        theta_shape(g).ok_or_else(|| Error::NotTheta(format!("{:?}", g.edges())))?;
    let Some((class, sign_g)) = GraphClass::of(g)? else {
        return Ok(ThetaElement::zero(grade));
    };
    let m = sort_desc(hairs);
    if m[0] == m[1] || m[1] == m[2] {
        return Err(Error::NotTheta(format!(
            "θ-graph with repeated strand hair counts {m:?} is nonzero"
        )));
    }
    let reference = theta_graph(grade, m)?;
    let (ref_class, sign_ref) = GraphClass::of(&reference)?
        .ok_or_else(|| Error::NotTheta(format!("reference θ-graph {m:?} vanishes")))?;
    debug_assert_eq!(ref_class, class);
    let value = Poly3::term(Monomial3(m), sign_g * sign_ref);
    ThetaElement::new(grade, &value)
}

/// Encodes a sum of θ-shapes of one grade.
pub fn theta_sum_encode(grade: u8, s: &GraphSum) -> Result<ThetaElement> {
    let mut value = Poly3::zero();
    for (class, c) in s.terms() {
        let e = theta_graph_encode(class.graph())?;
        if e.grade() != grade {
            return Err(Error::NotTheta(format!(
                "grade {} term in a grade {grade} sum",
                e.grade()
            )));
        }
        for (m, x) in e.value().terms() {
            value.add_term(*m, x * c);
        }
    }
    ThetaElement::new(grade, &value)
}

/// The graph sum represented by a polynomial element.
pub fn theta_graph_decode(e: &ThetaElement) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (m, c) in e.value().terms() {
        out.add_graph(&theta_graph(e.grade(), m.0)?, c)?;
    }
    Ok(out)
}

/// Ordered strand hair triples with total at most `max_degree` and at most
/// one bare strand, the θ-shapes that form admissible graphs.
pub fn theta_hair_triples(max_degree: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for a in 0..=d {
            for b in 0..=d - a {
                let t = [a, b, d - a - b];
                if t.iter().filter(|&&k| k == 0).count() <= 1 {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Sign applied to the figure-eight graphs so that `d0 E` has θ coefficient
/// `+4`.
const FIGURE_EIGHT_SIGN: i64 = 1;

/// `E_{a,b}`: a haired center carrying two loops with `a` and `b` haired
/// vertices. Edges: the center hair, then loop A and loop B, each read from
/// the center as segment, hair, ..., segment.
pub fn figure_eight_graph(a: u32, b: u32) -> Result<Graph> {
    if a < 2 || b < 2 {
        return Err(Error::Inadmissible(format!(
            "figure-eight loops need at least two vertices, got ({a}, {b})"
        )));
    }
    let center = 1;
    let mut kinds = vec![VertexKind::External(1), VertexKind::Internal];
    let mut edges = vec![(EXTERNAL, center)];
    for k in [a, b] {
        let mut prev = center;
        for _ in 0..k {
            let h = kinds.len();
            kinds.push(VertexKind::Internal);
            edges.push((prev, h));
            edges.push((EXTERNAL, h));
            prev = h;
        }
        edges.push((prev, center));
    }
    Ok(Graph::new(kinds, edges))
}

/// `E_{a,b}` as a sum, with the global sign pinned by the `d0 E` identity.
pub fn figure_eight(a: u32, b: u32) -> Result<GraphSum> {
    let g = figure_eight_graph(a, b)?;
    let sign = Rational::from_integer(FIGURE_EIGHT_SIGN.into());
    let mut s = GraphSum::zero();
    s.add_graph(&g, &sign)?;
    Ok(s)
}

/// Two loops joined by a bridge, the shape of the marked bowties.
pub fn is_dumbbell(g: &Graph) -> bool {
    let internal: Vec<usize> = (0..g.num_vertices()).filter(|&v| !g.is_external(v)).collect();
    if g.internal_loop_count() != 2 {
        return false;
    }
    // a bridge between two cycles: some internal edge whose removal leaves
    // two internal components each with one loop
    g.edges().iter().enumerate().any(|(i, &(u, v))| {
        if g.is_external(u) || g.is_external(v) {
            return false;
        }
        let order: Vec<usize> = (0..g.num_edges()).filter(|&j| j != i).collect();
        let kept: Vec<(usize, usize)> = order.iter().map(|&j| g.edges()[j]).collect();
        let h = Graph::new(g.kinds().to_vec(), kept);
        !h.is_internally_connected() && internal.len() > 1
    })
}

/// Splits `s` into its θ-shape part and the rest.
pub fn split_theta_part(s: &GraphSum) -> (GraphSum, GraphSum) {
    (
        s.filter(|g| theta_shape(g).is_some()),
        s.filter(|g| theta_shape(g).is_none()),
    )
}

/// `theta_{2i,2j}` as a graph sum.
pub fn theta_generator_graph(i: u32, j: u32) -> Result<GraphSum> {
    GraphSum::from_graph(&theta_graph(1, [2 * i, 2 * j, 0])?)
}

/// Coefficient `lambda` with `s = lambda * t`, for a single-class `t`.
pub fn coefficient_of(s: &GraphSum, t: &GraphSum) -> Option<Rational> {
    let (class, c) = t.terms().next()?;
    if t.len() != 1 || c.is_zero() {
        return None;
    }
    Some(s.coeff(class) / c)
}
