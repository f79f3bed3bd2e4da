//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

mod canon;
mod cliques;
mod enumerate;
pub mod families;
mod graph6;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

pub use canon::{are_isomorphic, canonical_form, canonical_graph, canonical_labeling, CanonicalForm, MAX_CANON_N};
pub use cliques::{for_each_maximal_clique, maximal_cliques};
pub use enumerate::{enumerate_canonical_forms, enumerate_graphs, MAX_ENUMERATION_N};
pub use families::family;
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Iterates the indices of the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices `0..n` of some graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn all(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} out of range");
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    pub fn complement_in(self, n: usize) -> Self {
        VertexSet(full_mask(n) & !self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics if `n > MAX_VERTICES`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        Ok(Graph::new(n))
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range endpoints.
    /// Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::try_new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge {u}-{v} has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::Unsupported(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        let all = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 || row >> v & 1 == 1 {
                return Err(Error::Input(format!("invalid adjacency row for vertex {v}")));
            }
            for u in bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Input(format!("adjacency not symmetric at {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices without neighbours.
    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet((0..self.n).filter(|&v| self.adj[v] == 0).fold(0, |m, v| m | 1 << v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced on `keep`, relabelled by increasing original index.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph> {
        if keep.mask() & !self.vertex_mask() != 0 {
            return Err(Error::Input(format!(
                "vertex set {keep:?} is not contained in 0..{}",
                self.n
            )));
        }
        Ok(self.induced_on_mask(keep.mask()))
    }

    pub(crate) fn induced_on_mask(&self, keep: u64) -> Graph {
        let verts: Vec<usize> = bits(keep).collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    #[inline]
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Number of connected components of the subgraph induced on `within`.
    pub fn component_count_in(&self, within: u64) -> usize {
        let mut rest = within;
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.reach(v, within);
            count += 1;
        }
        count
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertex_mask();
        let mut parts = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, rest);
            rest &= !comp;
            parts.push(VertexSet(comp));
        }
        parts
    }

    pub fn component_count(&self) -> usize {
        self.component_count_in(self.vertex_mask())
    }

    /// The empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::try_new(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, v + self.n);
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Erdős–Rényi graph with edge probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
