//! Combinatorial and spectral invariants: universal vertices, chordality,
//! gap-freeness, vertex connectivity, maximum minimal vertex covers and the
//! algebraic connectivity.

mod chordal;
mod connectivity;
mod cover;
mod spectral;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use chordal::{
    chordality, find_chordless_cycle, is_chordal, is_chordless_cycle, is_perfect_elimination_ordering, lex_bfs,
    ChordalityWitness,
};
pub use connectivity::{
    local_vertex_connectivity, vertex_connectivity, vertex_connectivity_bruteforce, BRUTE_FORCE_MAX_N,
};
pub use cover::{
    is_minimal_vertex_cover, is_vertex_cover, maximal_independent_sets, tau_max, tau_max_with_budget,
    MaxMinimalCover, DEFAULT_MIS_BUDGET,
};
pub use spectral::{algebraic_connectivity, laplacian, laplacian_spectrum, symmetric_eigenvalues, JACOBI_TOLERANCE};

/// `ceil(2 sqrt(n) - 2)` in exact integer arithmetic: the least `m` with
/// `m + 2 >= 0` and `(m + 2)^2 >= 4n`.
pub fn ceil_two_sqrt_minus_two(n: usize) -> i64 {
    let four_n = 4 * n as u128;
    let mut r = four_n.isqrt();
    if r * r < four_n {
        r += 1;
    }
    r as i64 - 2
}

/// Upper bound on the connectivity of a chordal* graph on `n >= 1` vertices:
/// `(n - 1) - ceil(2 sqrt(n) - 2)`. Never negative for `n >= 1`; `0` for `n = 0`.
pub fn kappa_bound(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let b = (n as i64 - 1) - ceil_two_sqrt_minus_two(n);
    debug_assert!(b >= 0);
    b as usize
}

/// True iff `v` is adjacent to every other vertex. The only vertex of `K_1`
/// counts as universal.
pub fn is_universal(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.n() {
        return Err(Error::Input(format!("vertex {v} out of range 0..{}", g.n())));
    }
    Ok(g.degree(v) + 1 == g.n())
}

pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) + 1 == g.n()).collect()
}

pub fn has_universal_vertex(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.degree(v) + 1 == g.n())
}

/// Chordal with no universal vertex.
pub fn is_chordal_star(g: &Graph) -> bool {
    !has_universal_vertex(g) && is_chordal(g)
}

/// Connected, and any two disjoint edges are joined by a third edge.
pub fn is_gapfree(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let reach = g.neighbors(a) | g.neighbors(b);
        for &(c, d) in &edges[i + 1..] {
            if c == a || c == b || d == a || d == b {
                continue;
            }
            if reach & (1 << c | 1 << d) == 0 {
                return false;
            }
        }
    }
    true
}

/// Deletes universal vertices (lowest index first) until none remains or a
/// single vertex is left. Satisfies `kappa(g) = kappa(core) + stripped`.
pub fn universal_vertex_reduction(g: &Graph) -> Result<(Graph, usize)> {
    if g.n() == 0 {
        return Err(Error::Input("universal vertex reduction needs at least one vertex".into()));
    }
    let mut core = g.clone();
    let mut stripped = 0;
    while core.n() > 1 {
        match universal_vertices(&core).first() {
            Some(&v) => {
                core = core.induced_on_mask(core.vertex_mask() & !(1 << v));
                stripped += 1;
            }
            None => break,
        }
    }
    Ok((core, stripped))
}

/// Per-graph bundle of the invariants used throughout the crate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub kappa: usize,
    pub tau_max_self: usize,
    pub tau_max_complement: usize,
    /// `None` for `n < 2`, where the Fiedler value is undefined.
    pub alg_connectivity: Option<f64>,
    pub is_chordal: bool,
    pub has_universal_vertex: bool,
    pub is_chordal_star: bool,
    pub is_gapfree: bool,
    pub kappa_bound: usize,
}

pub fn invariant_record(g: &Graph) -> Result<InvariantRecord> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Input("invariants need at least one vertex".into()));
    }
    let chordal = is_chordal(g);
    let universal = has_universal_vertex(g);
    Ok(InvariantRecord {
        n,
        kappa: vertex_connectivity(g)?,
        tau_max_self: tau_max(g)?.size,
        tau_max_complement: tau_max(&g.complement())?.size,
        alg_connectivity: if n >= 2 { Some(algebraic_connectivity(g)?) } else { None },
        is_chordal: chordal,
        has_universal_vertex: universal,
        is_chordal_star: chordal && !universal,
        is_gapfree: is_gapfree(g),
        kappa_bound: kappa_bound(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn ceiling_matches_float_away_from_squares() {
        for n in 1..20_000usize {
            let m = ceil_two_sqrt_minus_two(n);
            let r = (m + 2) as u128;
            assert!(r * r >= 4 * n as u128);
            assert!(m + 1 < 0 || ((m + 1) as u128).pow(2) < 4 * n as u128);
            let f = (2.0 * (n as f64).sqrt() - 2.0).ceil() as i64;
            assert_eq!(m, f, "n = {n}");
        }
        assert_eq!(ceil_two_sqrt_minus_two(0), -2);
    }

    #[test]
    fn bounds_from_examples() {
        assert_eq!(kappa_bound(4), 1);
        assert_eq!(kappa_bound(6), 2);
        assert_eq!(kappa_bound(9), 4);
        assert_eq!(kappa_bound(16), 9);
        assert_eq!(kappa_bound(1), 0);
    }

    #[test]
    fn universal_examples() {
        assert!(is_universal(&complete(4), 2).unwrap());
        assert!(!is_universal(&path(4), 1).unwrap());
        assert!(is_universal(&path(3), 1).unwrap());
        assert!(is_universal(&complete(1), 0).unwrap());
        assert!(is_universal(&path(3), 3).is_err());
    }

    #[test]
    fn chordal_star_examples() {
        assert!(is_chordal_star(&path(4)));
        assert!(!is_chordal_star(&complete(4)));
        assert!(!is_chordal_star(&cycle(5).unwrap()));
        assert!(!is_chordal_star(&complete(1)));
    }

    #[test]
    fn gapfree_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_gapfree(&two_k2));
        assert!(is_gapfree(&complete(4)));
        assert!(is_gapfree(&clique_with_pendants(3, &[2, 2, 2]).unwrap()));
        assert!(!is_gapfree(&path(5)));
        assert!(is_gapfree(&path(4)));
    }

    #[test]
    fn reduction_examples() {
        let (core, k) = universal_vertex_reduction(&complete(4)).unwrap();
        assert_eq!((core, k), (complete(1), 3));
        assert_eq!(universal_vertex_reduction(&path(4)).unwrap(), (path(4), 0));
        let cone = complete(1).join(&path(4)).unwrap();
        let (core, k) = universal_vertex_reduction(&cone).unwrap();
        assert_eq!((core.clone(), k), (path(4), 1));
        let brute = vertex_connectivity_bruteforce(&cone).unwrap();
        assert_eq!(brute, 2);
        assert_eq!(brute, vertex_connectivity(&core).unwrap() + k);
    }

    #[test]
    fn record_for_cycle() {
        let r = invariant_record(&cycle(6).unwrap()).unwrap();
        assert_eq!(r.kappa, 2);
        assert_eq!(r.tau_max_complement, 4);
        assert!(!r.is_chordal && !r.is_chordal_star);
        assert_eq!(r.kappa_bound, 2);
        assert!(invariant_record(&Graph::new(0)).is_err());
        let k1 = invariant_record(&complete(1)).unwrap();
        assert_eq!(k1.alg_connectivity, None);
        assert!(k1.is_chordal && k1.has_universal_vertex && !k1.is_chordal_star);
    }
}
