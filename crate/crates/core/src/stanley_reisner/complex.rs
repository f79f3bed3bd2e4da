use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, maximal_cliques, Graph};

/// A simplicial complex on `0..n`, stored by its facets (as vertex masks).
///
/// The void complex has no facets. The complex `{∅}` has the single facet `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps only inclusion-maximal generators; faces are all their subsets.
    pub fn from_generators(n: usize, generators: &[u64]) -> Result<Self> {
        if n > 64 {
            return Err(Error::Unsupported(format!("complexes are limited to 64 vertices, got {n}")));
        }
        if let Some(bad) = generators.iter().find(|&&f| f & !full_mask(n) != 0) {
            return Err(Error::Input(format!("face {bad:#b} has a vertex outside 0..{n}")));
        }
        let mut facets: Vec<u64> = generators
            .iter()
            .copied()
            .filter(|&f| !generators.iter().any(|&h| h != f && h & f == f))
            .collect();
        facets.sort_unstable();
        facets.dedup();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `-1` for `{∅}`; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    /// The subcomplex of faces contained in `within`.
    pub fn restrict(&self, within: u64) -> SimplicialComplex {
        let gens: Vec<u64> = self.facets.iter().map(|f| f & within).collect();
        SimplicialComplex::from_generators(self.n, &gens).expect("restriction stays in range")
    }

    /// Faces grouped by dimension: entry `d + 1` lists the `d`-faces, sorted.
    pub fn faces_by_dimension(&self) -> Vec<Vec<u64>> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut levels: Vec<Vec<u64>> = vec![Vec::new(); (dim + 2) as usize];
        for &facet in &self.facets {
            // Every submask of the facet, including 0 and the facet itself.
            let mut sub = facet;
            loop {
                levels[sub.count_ones() as usize].push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        for level in &mut levels {
            level.sort_unstable();
            level.dedup();
        }
        levels
    }

    /// Number of faces in each dimension, starting at `-1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }
}

/// The clique complex: faces are the cliques of `g`, facets its maximal cliques.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex { n: g.n(), facets: maximal_cliques(g) }
}

/// Faces of the clique complex of the subgraph induced on `within`, grouped
/// by dimension as in [`SimplicialComplex::faces_by_dimension`].
pub(crate) fn flag_faces(g: &Graph, within: u64) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    loop {
        let last = levels.last().expect("non-empty");
        let mut next = Vec::new();
        for &c in last {
            let common = bits(c).fold(within, |m, v| m & g.neighbors(v));
            let above = if c == 0 { common } else { common & !full_mask(64 - c.leading_zeros() as usize) };
            for v in bits(above) {
                next.push(c | 1 << v);
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        levels.push(next);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, path};

    #[test]
    fn clique_complex_examples() {
        assert_eq!(clique_complex(&complete(3)).facets(), &[0b111]);
        assert_eq!(clique_complex(&path(4)).facets(), &[0b0011, 0b0110, 0b1100]);
    }

    #[test]
    fn generators_are_reduced_to_facets() {
        let c = SimplicialComplex::from_generators(4, &[0b0011, 0b0001, 0b0111, 0b1000]).unwrap();
        assert_eq!(c.facets(), &[0b0111, 0b1000]);
        assert_eq!(c.f_vector(), vec![1, 4, 3, 1]);
        assert!(SimplicialComplex::from_generators(2, &[0b100]).is_err());
    }

    #[test]
    fn degenerate_complexes() {
        let void = SimplicialComplex::void(3);
        assert!(void.faces_by_dimension().is_empty());
        assert_eq!(void.dimension(), None);
        let empty_face = clique_complex(&Graph::new(0));
        assert_eq!(empty_face.facets(), &[0]);
        assert_eq!(empty_face.dimension(), Some(-1));
        assert_eq!(empty_face.f_vector(), vec![1]);
    }

    #[test]
    fn flag_faces_match_facet_expansion() {
        let g = crate::graph::families::path_power(7, 2);
        for within in [0b1111111u64, 0b1010101, 0b0110110, 0] {
            let direct = flag_faces(&g, within);
            let via_facets = clique_complex(&g).restrict(within).faces_by_dimension();
            assert_eq!(direct, via_facets, "within {within:#b}");
        }
    }
}
