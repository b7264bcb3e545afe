//! Graph property suites behind `grt2 graphs`.
//!
//! The size cap bounds the number of internal vertices of the largest graph
//! a suite constructs.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::report::CheckLine;
use crate::exact::{int, Poly3, Rational};
use crate::graph::{
    bowtie_difference, coefficient_of, figure_eight, filtration_part, gc2_bracket, gc2_bracket_truncated,
    gc2_differential, icg_differential, is_dumbbell, loop_part, mark_one_external, min_filtration,
    split_theta_part, theta_generator_graph, theta_graph, theta_graph_decode, theta_graph_encode,
    theta_hair_triples, theta_sum_encode, wheel, GraphClass, GraphSum, VertexKind,
};
use crate::sym::strictly_decreasing_triples;
use crate::theta::{d0_theta, ThetaElement};
use crate::Result;

/// Upper bound accepted for `--size-cap`.
pub const MAX_SIZE_CAP: usize = 12;

fn degree(t: &[u32; 3]) -> u32 {
    t.iter().sum()
}

fn wheel_sum(p: usize) -> Result<GraphSum> {
    Ok(GraphSum::from_class(wheel(p)?))
}

fn odd_spokes(max_vertices: usize) -> Vec<usize> {
    (3..max_vertices).step_by(2).collect()
}

/// Per (grade, degree): number of shapes checked and the failing ones.
type Outcomes = BTreeMap<(u8, u32), (usize, Vec<[u32; 3]>)>;

/// Groups per-shape outcomes into one line per grade and degree.
fn grouped(
    label: &str,
    outcomes: Outcomes,
) -> Vec<CheckLine> {
    outcomes
        .into_iter()
        .map(|((grade, d), (count, failed))| {
            let detail = if failed.is_empty() {
                format!("{count} shapes")
            } else {
                format!("{count} shapes, failing {failed:?}")
            };
            CheckLine::new(
                format!("{label} on grade-{grade} theta shapes of degree {d}"),
                failed.is_empty(),
                detail,
            )
        })
        .collect()
}

pub fn d_squared(cap: usize) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let mut outcomes = BTreeMap::new();
    for grade in [0u8, 1] {
        for t in theta_hair_triples((cap as u32).saturating_sub(4)) {
            let g = GraphSum::from_graph(&theta_graph(grade, t)?)?;
            let dd = icg_differential(&icg_differential(&g, false)?, false)?;
            let entry = outcomes
                .entry((grade, degree(&t)))
                .or_insert((0, Vec::new()));
            entry.0 += 1;
            if !dd.is_zero() {
                entry.1.push(t);
            }
        }
    }
    out.extend(grouped("d^2 = 0", outcomes));
    for p in [3usize, 5, 7].into_iter().filter(|p| p + 2 <= cap) {
        let marked = mark_one_external(&wheel_sum(p)?)?;
        let dd = icg_differential(&icg_differential(&marked, false)?, false)?;
        out.push(CheckLine::new(
            format!("d^2 = 0 on (w{p})_1"),
            dd.is_zero(),
            format!("{} classes", marked.len()),
        ));
    }
    for p in [3usize, 5, 7].into_iter().filter(|p| p + 3 <= cap) {
        let dd = gc2_differential(&gc2_differential(&wheel_sum(p)?)?)?;
        out.push(CheckLine::new(format!("d^2 = 0 on w{p} in GC2"), dd.is_zero(), ""));
    }
    Ok(out)
}

pub fn encoding(cap: usize) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let mut natural = BTreeMap::new();
    for grade in [0u8, 1] {
        for t in theta_hair_triples((cap as u32).saturating_sub(3)) {
            let g = theta_graph(grade, t)?;
            let e = theta_graph_encode(&g)?;
            let dg = icg_differential(&GraphSum::from_graph(&g)?, true)?;
            let ok = theta_sum_encode(grade + 1, &dg)? == d0_theta(&e)?;
            let entry = natural.entry((grade, degree(&t))).or_insert((0, Vec::new()));
            entry.0 += 1;
            if !ok {
                entry.1.push(t);
            }
        }
    }
    out.extend(grouped("encode(d0 g) = d0(encode g)", natural));

    let mut signs = BTreeMap::new();
    for grade in [0u8, 1, 2] {
        for t in theta_hair_triples((cap as u32).saturating_sub(2)) {
            let g = theta_graph(grade, t)?;
            let expected = ThetaElement::new(grade, &Poly3::monomial(t[0], t[1], t[2]))
                .unwrap_or_else(|_| ThetaElement::zero(grade));
            let ok = match GraphClass::of(&g)? {
                None => expected.is_zero(),
                Some(_) => theta_graph_encode(&g).map(|e| e == expected).unwrap_or(false),
            };
            let entry = signs.entry((grade, degree(&t))).or_insert((0, Vec::new()));
            entry.0 += 1;
            if !ok {
                entry.1.push(t);
            }
        }
    }
    out.extend(grouped("graph signs match the polynomial relations", signs));

    let mut failed = Vec::new();
    let mut count = 0;
    for d in 0..=10u32.min((cap as u32).saturating_sub(2)) {
        for m in strictly_decreasing_triples(d) {
            let e = ThetaElement::new(1, &Poly3::monomial(m[0], m[1], m[2]))?;
            count += 1;
            if theta_sum_encode(1, &theta_graph_decode(&e)?)? != e {
                failed.push(m);
            }
        }
    }
    out.push(CheckLine::new(
        "decode then encode is the identity on grade-1 monomials",
        failed.is_empty(),
        format!("{count} monomials{}", if failed.is_empty() { String::new() } else { format!(", failing {failed:?}") }),
    ));
    Ok(out)
}

fn mark_max_valence(s: &GraphSum) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (class, c) in s.terms() {
        let g = class.graph();
        let val = g.valences();
        let top = g.max_valence();
        for v in (0..g.num_vertices()).filter(|&v| val[v] == top) {
            let h = g.with_kind(v, VertexKind::External(1));
            if h.check_icg().is_ok() {
                out.add_graph(&h, c)?;
            }
        }
    }
    Ok(out)
}

pub fn bowtie(cap: usize) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let spokes = odd_spokes(cap);
    for (a, &p) in spokes.iter().enumerate() {
        for &q in &spokes[a + 1..] {
            if p + q + 1 > cap {
                continue;
            }
            let bracket = gc2_bracket_truncated(&wheel_sum(p)?, &wheel_sum(q)?, Some(2))?;
            let level2 = filtration_part(&bracket, 2);
            let diff = bowtie_difference(p, q)?;
            let ratio = level2.ratio_to(&diff);
            out.push(CheckLine::new(
                format!("[w{p}, w{q}] at level 2 is a multiple of the bowtie difference"),
                matches!(&ratio, Some(r) if !r.is_zero()),
                match &ratio {
                    Some(r) => format!("factor {r}"),
                    None => "not proportional".into(),
                },
            ));
            let two_loop = loop_part(&mark_one_external(&level2)?, 2);
            let at_max = loop_part(&mark_max_valence(&level2)?, 2);
            out.push(CheckLine::new(
                format!("two-loop part of ([w{p}, w{q}] at level 2)_1 comes from the max-valence vertex"),
                !two_loop.is_zero() && two_loop == at_max,
                format!("{} classes", two_loop.len()),
            ));
        }
    }
    Ok(out)
}

pub fn filtration(cap: usize) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let spokes = odd_spokes(cap);
    for &p in &spokes {
        let w = wheel(p)?;
        let f = w.graph().filtration_value();
        out.push(CheckLine::new(format!("filtration of w{p} is 1"), f == 1, format!("{f}")));
    }
    for (a, &p) in spokes.iter().enumerate() {
        for &q in &spokes[a..] {
            if p + q + 1 > cap {
                continue;
            }
            let (wp, wq) = (wheel_sum(p)?, wheel_sum(q)?);
            let pq = gc2_bracket(&wp, &wq)?;
            if p == q {
                out.push(CheckLine::new(format!("[w{p}, w{p}] = 0"), pq.is_zero(), ""));
                continue;
            }
            let min = min_filtration(&pq);
            out.push(CheckLine::new(
                format!("every term of [w{p}, w{q}] has filtration at least 2"),
                !pq.is_zero() && min.is_some_and(|m| m >= 2),
                format!("{} terms, minimum {}", pq.len(), min.map_or("-".into(), |m| m.to_string())),
            ));
            let qp = gc2_bracket(&wq, &wp)?;
            out.push(CheckLine::new(format!("[w{q}, w{p}] = -[w{p}, w{q}]"), qp == -&pq, ""));
        }
    }
    if 12 <= cap {
        let level = Some(3);
        let (w3, w5) = (wheel_sum(3)?, wheel_sum(5)?);
        let br = |a: &GraphSum, b: &GraphSum| gc2_bracket_truncated(a, b, level);
        let jacobi = &(&br(&w3, &br(&w3, &w5)?)? + &br(&w3, &br(&w5, &w3)?)?) + &br(&w5, &br(&w3, &w3)?)?;
        out.push(CheckLine::new(
            "Jacobi identity on (w3, w3, w5) modulo filtration 4",
            jacobi.is_zero(),
            "",
        ));
    }
    Ok(out)
}

pub fn theta_identity(cap: usize) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for j in 2u32.. {
        if 2 + 2 * j + 2 > cap as u32 {
            break;
        }
        for i in 1..j {
            if 2 * i + 2 * j + 2 > cap as u32 {
                continue;
            }
            let (a, b) = (2 * i, 2 * j);
            let de = icg_differential(&figure_eight(a, b)?, true)?;
            let (theta, rest) = split_theta_part(&de);
            let generator = theta_generator_graph(i, j)?;
            let four = theta == generator.scale(&int(4));
            let marked = loop_part(&mark_one_external(&bowtie_difference(a as usize + 1, b as usize + 1)?)?, 2);
            let sign = rest.ratio_to(&marked);
            let dumbbells = rest.terms().all(|(c, _)| is_dumbbell(c.graph()));
            let unit = matches!(&sign, Some(s) if *s == Rational::one() || *s == -Rational::one());
            out.push(CheckLine::new(
                format!("d0 E_{{{a},{b}}} = D_{{{},{}}} + 4 theta_{{{a},{b}}}", a + 1, b + 1),
                four && dumbbells && unit && !rest.is_zero(),
                format!(
                    "theta coefficient {}, D = {} * (bowtie difference)_1",
                    coefficient_of(&theta, &generator).map_or("-".into(), |c| c.to_string()),
                    sign.map_or("-".into(), |s| s.to_string()),
                ),
            ));
        }
    }
    Ok(out)
}
