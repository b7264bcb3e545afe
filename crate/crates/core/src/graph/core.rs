use std::collections::BTreeSet;

use crate::{Error, Result};

/// External vertices carry a label; internal ones are anonymous.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VertexKind {
    External(u32),
    Internal,
}

impl VertexKind {
    pub fn is_external(&self) -> bool {
        matches!(self, VertexKind::External(_))
    }
}

/// An undirected graph with an ordered edge list. Edges are stored as
/// `(min, max)` vertex pairs; their position in the list is the edge order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Graph {
    kinds: Vec<VertexKind>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(kinds: Vec<VertexKind>, edges: Vec<(usize, usize)>) -> Self {
        let n = kinds.len();
        let edges = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} vertices");
                (u.min(v), u.max(v))
            })
            .collect();
        Graph { kinds, edges }
    }

    /// A graph with only internal vertices, as used in `GC2`.
    pub fn internal(n: usize, edges: Vec<(usize, usize)>) -> Self {
        Self::new(vec![VertexKind::Internal; n], edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_external(&self, v: usize) -> bool {
        self.kinds[v].is_external()
    }

    pub fn num_internal(&self) -> usize {
        self.kinds.iter().filter(|k| !k.is_external()).count()
    }

    pub fn has_external(&self) -> bool {
        self.kinds.iter().any(VertexKind::is_external)
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.num_vertices()];
        for &(u, v) in &self.edges {
            val[u] += 1;
            val[v] += 1;
        }
        val
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_valence(&self) -> usize {
        self.valences().into_iter().max().unwrap_or(0)
    }

    /// Indices of the edges at `v`, in edge order.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].0 == v || self.edges[i].1 == v)
            .collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The other endpoint of edge `e` seen from `v`.
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `1 - #edges + 2 #internal`, the degree in `ICG(n)`.
    pub fn icg_degree(&self) -> i64 {
        1 - self.num_edges() as i64 + 2 * self.num_internal() as i64
    }

    /// `-2 - #edges + 2 #vertices`, the degree in `GC2`.
    pub fn gc2_degree(&self) -> i64 {
        -2 - self.num_edges() as i64 + 2 * self.num_vertices() as i64
    }

    /// Number of edges at the external vertices.
    pub fn hair_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| self.is_external(u) || self.is_external(v))
            .count()
    }

    pub fn has_simple_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn has_double_edge(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().any(|e| !seen.insert(*e))
    }

    fn components_among(&self, keep: impl Fn(usize) -> bool) -> usize {
        let n = self.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            if keep(u) && keep(v) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
        (0..n).filter(|&v| keep(v) && find(&mut parent, v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.components_among(|_| true) <= 1
    }

    /// Connected after deleting the external vertices (and nonempty).
    pub fn is_internally_connected(&self) -> bool {
        self.components_among(|v| !self.is_external(v)) == 1
    }

    /// First Betti number of the subgraph spanned by internal vertices.
    pub fn internal_loop_count(&self) -> usize {
        let internal_edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !self.is_external(u) && !self.is_external(v))
            .count();
        let components = self.components_among(|v| !self.is_external(v));
        internal_edges + components - self.num_internal()
    }

    /// `#vertices - max valence`.
    pub fn filtration_value(&self) -> i64 {
        self.num_vertices() as i64 - self.max_valence() as i64
    }

    /// The graph without `v` and its edges; edge order is kept.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let mut kinds = self.kinds.clone();
        kinds.remove(v);
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph::new(kinds, edges)
    }

    /// Connected after removing any single vertex. Graphs with at most two
    /// vertices count as irreducible.
    pub fn is_one_vertex_irreducible(&self) -> bool {
        (0..self.num_vertices()).all(|v| self.delete_vertex(v).is_connected())
    }

    /// The same graph with edges listed in `order` (a permutation of edge
    /// indices: new position `i` holds old edge `order[i]`).
    pub fn reorder_edges(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.edges.len());
        Graph {
            kinds: self.kinds.clone(),
            edges: order.iter().map(|&i| self.edges[i]).collect(),
        }
    }

    /// Vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut kinds = vec![VertexKind::Internal; self.num_vertices()];
        for (v, &p) in perm.iter().enumerate() {
            kinds[p] = self.kinds[v];
        }
        Graph::new(
            kinds,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        )
    }

    /// The same graph with vertex `v` flagged external with label `label`.
    pub fn with_kind(&self, v: usize, kind: VertexKind) -> Graph {
        let mut g = self.clone();
        g.kinds[v] = kind;
        g
    }

    /// Conditions shared by `ICG(n)` and `GC2` that make a graph
    /// meaningful at all: no simple loops, internal vertices at least
    /// trivalent.
    pub fn check_local(&self) -> Result<()> {
        if let Some(&(u, _)) = self.edges.iter().find(|&&(u, v)| u == v) {
            return Err(Error::Inadmissible(format!("simple loop at vertex {u}")));
        }
        for (v, val) in self.valences().into_iter().enumerate() {
            if !self.is_external(v) && val < 3 {
                return Err(Error::Inadmissible(format!(
                    "internal vertex {v} has valence {val} < 3"
                )));
            }
        }
        Ok(())
    }

    /// Admissible and internally connected.
    pub fn check_icg(&self) -> Result<()> {
        self.check_local()?;
        if self.has_double_edge() {
            return Err(Error::Inadmissible("double edge".into()));
        }
        if !self.has_external() {
            return Err(Error::Inadmissible("no external vertex".into()));
        }
        if !self.is_internally_connected() {
            return Err(Error::Inadmissible("not internally connected".into()));
        }
        Ok(())
    }

    /// Connected, no external vertices, all vertices at least trivalent.
    pub fn check_gc2(&self) -> Result<()> {
        if self.has_external() {
            return Err(Error::Inadmissible("GC2 graphs have no external vertices".into()));
        }
        self.check_local()?;
        if !self.is_connected() {
            return Err(Error::Inadmissible("not connected".into()));
        }
        Ok(())
    }
}
