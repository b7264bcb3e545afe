//! Line-oriented graph interchange format.
//!
//! ```text
//! V 3 E 2
//! v 0 ext
//! v 1 int
//! v 2 ext 2
//! e 0 0 1
//! e 1 1 2
//! ```
//!
//! External vertices with a label other than 1 carry it after `ext`. The
//! rank of an edge line is its position in the edge order; edge lines may
//! appear in any order. A sum is written as `S <terms>` followed, per term,
//! by `c <coefficient>` and a graph block. Blank lines and lines starting
//! with `#` are ignored.

use std::fmt::Write as _;

use super::core::{Graph, VertexKind};
use super::sum::GraphSum;
use crate::exact::Rational;
use crate::{Error, Result};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    write_graph_into(g, &mut out);
    out
}

fn write_graph_into(g: &Graph, out: &mut String) {
    let _ = writeln!(out, "V {} E {}", g.num_vertices(), g.num_edges());
    for (i, k) in g.kinds().iter().enumerate() {
        match k {
            VertexKind::External(1) => {
                let _ = writeln!(out, "v {i} ext");
            }
            VertexKind::External(l) => {
                let _ = writeln!(out, "v {i} ext {l}");
            }
            VertexKind::Internal => {
                let _ = writeln!(out, "v {i} int");
            }
        }
    }
    for (r, (u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "e {r} {u} {v}");
    }
}

pub fn write_sum(s: &GraphSum) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "S {}", s.len());
    for (class, c) in s.terms() {
        let _ = writeln!(out, "c {c}");
        write_graph_into(class.graph(), &mut out);
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            self.last = i + 1;
            return Some((i + 1, line.split_whitespace().collect()));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let last = self.last;
        self.next().ok_or_else(|| Error::GraphText {
            line: last + 1,
            msg: format!("unexpected end of input, expected {what}"),
        })
    }
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::GraphText {
        line,
        msg: msg.into(),
    }
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| bad(line, format!("bad number `{s}`")))
}

fn read_graph_from(lines: &mut Lines) -> Result<Graph> {
    let (ln, head) = lines.expect("header `V <n> E <m>`")?;
    if head.len() != 4 || head[0] != "V" || head[2] != "E" {
        return Err(bad(ln, "expected header `V <n> E <m>`"));
    }
    let n: usize = num(ln, head[1])?;
    let m: usize = num(ln, head[3])?;
    let mut kinds = vec![None; n];
    let mut edges = vec![None; m];
    for _ in 0..n + m {
        let (ln, f) = lines.expect("vertex or edge line")?;
        match f.first().copied() {
            Some("v") => {
                let i: usize = num(ln, f.get(1).copied().unwrap_or(""))?;
                let kind = match (f.get(2).copied(), f.len()) {
                    (Some("int"), 3) => VertexKind::Internal,
                    (Some("ext"), 3) => VertexKind::External(1),
                    (Some("ext"), 4) => VertexKind::External(num(ln, f[3])?),
                    _ => return Err(bad(ln, "expected `v <index> ext|int`")),
                };
                let slot = kinds.get_mut(i).ok_or_else(|| bad(ln, format!("vertex {i} out of range")))?;
                if slot.replace(kind).is_some() {
                    return Err(bad(ln, format!("vertex {i} given twice")));
                }
            }
            Some("e") if f.len() == 4 => {
                let r: usize = num(ln, f[1])?;
                let (u, v): (usize, usize) = (num(ln, f[2])?, num(ln, f[3])?);
                if u >= n || v >= n {
                    return Err(bad(ln, format!("edge endpoint out of range for {n} vertices")));
                }
                let slot = edges.get_mut(r).ok_or_else(|| bad(ln, format!("edge rank {r} out of range")))?;
                if slot.replace((u, v)).is_some() {
                    return Err(bad(ln, format!("edge rank {r} given twice")));
                }
            }
            _ => return Err(bad(ln, "expected `v ...` or `e <rank> <u> <v>`")),
        }
    }
    // every slot was filled exactly once, since n + m lines were read and
    // duplicates are rejected
    Ok(Graph::new(
        kinds.into_iter().map(Option::unwrap).collect(),
        edges.into_iter().map(Option::unwrap).collect(),
    ))
}

fn finish(lines: &mut Lines) -> Result<()> {
    match lines.next() {
        Some((ln, _)) => Err(bad(ln, "trailing content")),
        None => Ok(()),
    }
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let g = read_graph_from(&mut lines)?;
    finish(&mut lines)?;
    Ok(g)
}

/// Reads a sum; graphs are canonicalized on the way in.
pub fn read_sum(text: &str) -> Result<GraphSum> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.expect("header `S <terms>`")?;
    if head.len() != 2 || head[0] != "S" {
        return Err(bad(ln, "expected header `S <terms>`"));
    }
    let count: usize = num(ln, head[1])?;
    let mut out = GraphSum::zero();
    for _ in 0..count {
        let (ln, f) = lines.expect("coefficient line `c <p/q>`")?;
        if f.len() != 2 || f[0] != "c" {
            return Err(bad(ln, "expected `c <coefficient>`"));
        }
        let c: Rational = num(ln, f[1])?;
        let g = read_graph_from(&mut lines)?;
        out.add_graph(&g, &c)?;
    }
    finish(&mut lines)?;
    Ok(out)
}
