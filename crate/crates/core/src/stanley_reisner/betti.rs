use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::complex::flag_faces;
use super::homology::{homology_from_faces, Field};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{is_chordal, is_chordal_star, vertex_connectivity};

/// Largest `n` for which Betti numbers are computed (the sweep visits `2^n` subsets).
pub const MAX_BETTI_N: usize = 16;

/// Graded Betti numbers `beta_{i,j}` of `S / I(G^c)`, with `0 <= i, j <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: Field,
    entries: Vec<u64>,
}

impl BettiTable {
    fn zero(n: usize, field: Field) -> Self {
        BettiTable { n, field, entries: vec![0; (n + 1) * (n + 1)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `beta_{i,j}`; zero outside the table.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if i > self.n || j > self.n {
            return 0;
        }
        self.entries[i * (self.n + 1) + j]
    }

    fn add(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * (self.n + 1) + j] += v;
    }

    /// Non-zero entries as `(i, j, beta)`, ordered by `i` then `j`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        let w = self.n + 1;
        self.entries.iter().enumerate().filter(|(_, &b)| b != 0).map(move |(k, &b)| (k / w, k % w, b))
    }

    /// `beta_{i,i+1}` for `i = 1..n-1`.
    pub fn linear_strand(&self) -> Vec<u64> {
        (1..self.n).map(|i| self.get(i, i + 1)).collect()
    }

    pub fn proj_dim(&self) -> usize {
        self.nonzero().map(|(i, _, _)| i).max().unwrap_or(0)
    }

    pub fn has_linear_resolution(&self) -> bool {
        self.nonzero().all(|(i, j, _)| i == 0 || j == i + 1)
    }

    fn merge(mut self, other: BettiTable) -> BettiTable {
        for (a, b) in self.entries.iter_mut().zip(other.entries) {
            *a += b;
        }
        self
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[u64; 3]> = self.nonzero().map(|(i, j, b)| [i as u64, j as u64, b]).collect();
        let mut st = s.serialize_struct("BettiTable", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("projdim", &self.proj_dim())?;
        st.serialize_field("linear_resolution", &self.has_linear_resolution())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

pub fn proj_dim(t: &BettiTable) -> usize {
    t.proj_dim()
}

pub fn has_linear_resolution(t: &BettiTable) -> bool {
    t.has_linear_resolution()
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_BETTI_N {
        return Err(Error::Unsupported(format!(
            "Betti numbers are limited to {MAX_BETTI_N} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// The full Betti table of `S / I(G^c)` by Hochster's formula:
/// `beta_{i,j} = sum_{|W| = j} rank H_{j-i-1}(Delta(G)|_W)`.
pub fn betti_table_hochster(g: &Graph, field: Field) -> Result<BettiTable> {
    check_size(g)?;
    let n = g.n();
    let mut table = (1..1u64 << n)
        .into_par_iter()
        .fold(
            || BettiTable::zero(n, field),
            |mut t, w| {
                let j = w.count_ones() as usize;
                let h = homology_from_faces(&flag_faces(g, w), field);
                for (k, r) in h.ranks() {
                    if r > 0 {
                        let i = j as isize - k - 1;
                        debug_assert!(i >= 1, "top-dimensional homology of a non-empty flag complex vanishes");
                        t.add(i as usize, j, r as u64);
                    }
                }
                t
            },
        )
        .reduce(|| BettiTable::zero(n, field), BettiTable::merge);
    table.add(0, 0, 1);
    Ok(table)
}

/// `beta_{i,i+1}` for `i = 1..n-1` on a chordal graph, where every induced
/// clique complex has homology only in degree zero:
/// `beta_{i,i+1} = sum_{|W| = i+1} (c(G[W]) - 1)`.
pub fn linear_strand_chordal(g: &Graph) -> Result<Vec<u64>> {
    check_size(g)?;
    if !is_chordal(g) {
        return Err(Error::Precondition("the linear-strand shortcut needs a chordal graph".into()));
    }
    let n = g.n();
    let strand = (1..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, w| {
                acc[w.count_ones() as usize] += g.component_count_in(w) as u64 - 1;
                acc
            },
        )
        .reduce(|| vec![0u64; n + 1], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    Ok((1..n).map(|i| strand[i + 1]).collect())
}

/// Largest `i` with `strand[i - 1] != 0`, or `0` if the strand vanishes.
pub fn proj_dim_from_strand(strand: &[u64]) -> usize {
    strand.iter().rposition(|&b| b != 0).map_or(0, |p| p + 1)
}

/// Largest `i` in `0..n` with `beta_{n-i, n-i+1} = 0`.
pub fn kappa_from_betti(t: &BettiTable) -> usize {
    let n = t.n();
    (0..n).rev().find(|&i| t.get(n - i, n - i + 1) == 0).unwrap_or(0)
}

fn require_chordal_star(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Precondition(format!("need at least two vertices, got {}", g.n())));
    }
    if !is_chordal_star(g) {
        return Err(Error::Precondition("the Betti characterization of kappa needs a chordal* graph".into()));
    }
    Ok(())
}

/// Vertex connectivity read off the linear strand of a chordal* graph.
pub fn kappa_via_betti(g: &Graph) -> Result<usize> {
    require_chordal_star(g)?;
    let n = g.n();
    let strand = linear_strand_chordal(g)?;
    let beta = |i: usize| if (1..n).contains(&i) { strand[i - 1] } else { 0 };
    Ok((0..n).rev().find(|&i| beta(n - i) == 0).unwrap_or(0))
}

/// Both sides of `n - kappa = projdim + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProjdimIdentity {
    pub n: usize,
    pub kappa: usize,
    pub projdim: usize,
    pub field: Field,
    pub n_minus_kappa: usize,
    pub projdim_plus_one: usize,
    pub holds: bool,
}

/// Compares max-flow connectivity with the projective dimension of the full
/// Hochster table over `field`.
pub fn check_projdim_kappa_identity(g: &Graph, field: Field) -> Result<ProjdimIdentity> {
    require_chordal_star(g)?;
    let table = betti_table_hochster(g, field)?;
    let kappa = vertex_connectivity(g)?;
    let projdim = table.proj_dim();
    let n = g.n();
    Ok(ProjdimIdentity {
        n,
        kappa,
        projdim,
        field,
        n_minus_kappa: n - kappa,
        projdim_plus_one: projdim + 1,
        holds: n - kappa == projdim + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Three triangles glued around a central one.
    fn sun() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 0), (0, 4)]).unwrap()
    }

    #[test]
    fn path_table() {
        for field in [Field::Gf2, Field::Q] {
            let t = betti_table_hochster(&path(4), field).unwrap();
            assert_eq!(t.get(0, 0), 1);
            assert_eq!(t.get(1, 2), 3);
            assert_eq!(t.get(2, 3), 2);
            assert_eq!(t.get(3, 4), 0);
            assert_eq!(t.proj_dim(), 2);
            assert!(t.has_linear_resolution());
            assert_eq!(t.nonzero().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
        }
    }

    #[test]
    fn strands() {
        assert_eq!(linear_strand_chordal(&path(4)).unwrap(), vec![3, 2, 0]);
        assert_eq!(linear_strand_chordal(&complete(4)).unwrap(), vec![0, 0, 0]);
        let split = path(3).disjoint_union(&complete(1)).unwrap();
        assert_eq!(linear_strand_chordal(&split).unwrap()[2], 1);
        assert!(matches!(linear_strand_chordal(&cycle(5).unwrap()), Err(Error::Precondition(_))));
    }

    #[test]
    fn complete_graph_has_zero_ideal() {
        let t = betti_table_hochster(&complete(4), Field::Gf2).unwrap();
        assert_eq!(t.proj_dim(), 0);
        assert_eq!(t.nonzero().count(), 1);
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa_via_betti(&path(4)).unwrap(), 1);
        assert_eq!(kappa_via_betti(&sun()).unwrap(), 2);
        let g = clique_with_pendants(3, &[2, 2, 2]).unwrap().complement();
        assert_eq!(kappa_via_betti(&g).unwrap(), 4);
        assert!(kappa_via_betti(&complete(4)).is_err());
        assert!(kappa_via_betti(&cycle(6).unwrap()).is_err());
        assert_eq!(kappa_from_betti(&betti_table_hochster(&g, Field::Gf2).unwrap()), 4);
    }

    #[test]
    fn identity_examples() {
        for (g, kappa, projdim) in [(path(4), 1, 2), (sun(), 2, 3), (path_power(6, 2), 2, 3)] {
            let id = check_projdim_kappa_identity(&g, Field::Gf2).unwrap();
            assert_eq!((id.kappa, id.projdim), (kappa, projdim));
            assert!(id.holds);
        }
        assert!(check_projdim_kappa_identity(&cycle(6).unwrap(), Field::Q).is_err());
    }

    #[test]
    fn first_syzygies_count_complement_edges() {
        for g in [cycle(6).unwrap(), h_graph(7).unwrap(), path_power(8, 3)] {
            let t = betti_table_hochster(&g, Field::Gf2).unwrap();
            assert_eq!(t.get(1, 2), g.complement().edge_count() as u64);
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(betti_table_hochster(&path(17), Field::Gf2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn serializes_nonzero_entries() {
        let t = betti_table_hochster(&path(4), Field::Q).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["projdim"], 2);
        assert_eq!(v["field"], "q");
        assert_eq!(v["entries"], serde_json::json!([[0, 0, 1], [1, 2, 3], [2, 3, 2]]));
    }
}
