//! Chordality via lexicographic breadth-first search.

use crate::graph::{bits, Graph};

/// Certificate returned by [`chordality`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityWitness {
    /// Each vertex's neighbours later in the order form a clique.
    PerfectEliminationOrdering(Vec<usize>),
    /// An induced cycle of length at least four, in cyclic order.
    ChordlessCycle(Vec<usize>),
}

impl ChordalityWitness {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityWitness::PerfectEliminationOrdering(_))
    }
}

/// LexBFS visiting order; ties go to the smallest vertex index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let mut classes: Vec<u64> = vec![g.vertex_mask()];
    let mut order = Vec::with_capacity(g.n());
    while let Some(pos) = classes.iter().position(|&c| c != 0) {
        let v = classes[pos].trailing_zeros() as usize;
        classes[pos] &= !(1 << v);
        order.push(v);
        let nv = g.neighbors(v);
        let mut next = Vec::with_capacity(classes.len() * 2);
        for &c in &classes[pos..] {
            let inside = c & nv;
            let outside = c & !nv;
            if inside != 0 {
                next.push(inside);
            }
            if outside != 0 {
                next.push(outside);
            }
        }
        classes = next;
    }
    order
}

/// Checks that every vertex's later neighbours form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut later = g.vertex_mask();
    let mut seen = 0u64;
    for &v in order {
        if v >= g.n() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
        later &= !(1 << v);
        let nbrs = g.neighbors(v) & later;
        if bits(nbrs).any(|w| nbrs & !(1 << w) & !g.neighbors(w) != 0) {
            return false;
        }
    }
    true
}

/// Shortest path from `from` to `to` using only vertices in `within`.
fn shortest_path(g: &Graph, from: usize, to: usize, within: u64) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = 1u64 << from;
    let mut frontier = vec![from];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &u in &frontier {
            for w in bits(g.neighbors(u) & within & !seen) {
                seen |= 1 << w;
                parent[w] = u;
                if w == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                next.push(w);
            }
        }
        frontier = next;
    }
    None
}

/// Finds an induced cycle of length >= 4, if one exists.
///
/// For a centre `v` with non-adjacent neighbours `x`, `y`, a shortest
/// `x`-`y` path avoiding the rest of `N[v]` closes an induced cycle through `v`.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nv = g.neighbors(v);
        for x in bits(nv) {
            for y in bits(nv & !g.neighbors(x) & !((1u64 << x) | ((1u64 << x) - 1))) {
                let within = g.vertex_mask() & !(nv | 1 << v) | 1 << x | 1 << y;
                if let Some(path) = shortest_path(g, x, y, within) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn chordality(g: &Graph) -> ChordalityWitness {
    let mut order = lex_bfs(g);
    order.reverse();
    if is_perfect_elimination_ordering(g, &order) {
        ChordalityWitness::PerfectEliminationOrdering(order)
    } else {
        ChordalityWitness::ChordlessCycle(
            find_chordless_cycle(g).expect("a graph without a perfect elimination ordering has a chordless cycle"),
        )
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order)
}

/// True when `cycle` lists an induced cycle of `g` with at least four vertices.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mask = cycle.iter().fold(0u64, |m, &v| m | 1 << v);
    if mask.count_ones() as usize != k {
        return false;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        let expected = 1u64 << cycle[(i + 1) % k] | 1u64 << cycle[(i + k - 1) % k];
        g.neighbors(v) & mask == expected
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{clique_with_pendants, complete, cycle, path, path_power};

    #[test]
    fn four_cycle_is_not_chordal() {
        let c4 = cycle(4).unwrap();
        match chordality(&c4) {
            ChordalityWitness::ChordlessCycle(c) => {
                assert_eq!(c.len(), 4);
                assert!(is_chordless_cycle(&c4, &c));
            }
            w => panic!("unexpected {w:?}"),
        }
    }

    #[test]
    fn trees_and_cliques_are_chordal() {
        for g in [path(7), complete(5), clique_with_pendants(3, &[2, 2, 2]).unwrap(), path_power(9, 3)] {
            match chordality(&g) {
                ChordalityWitness::PerfectEliminationOrdering(o) => assert!(is_perfect_elimination_ordering(&g, &o)),
                w => panic!("{g:?} gave {w:?}"),
            }
        }
    }

    #[test]
    fn long_cycle_witness() {
        let mut g = cycle(8).unwrap();
        g.add_edge(0, 2);
        let c = find_chordless_cycle(&g).unwrap();
        assert!(is_chordless_cycle(&g, &c));
        assert_eq!(c.len(), 7);
    }

    #[test]
    fn peo_checker_rejects_bad_orders() {
        let p = path(3);
        assert!(!is_perfect_elimination_ordering(&p, &[1, 0, 2]));
        assert!(is_perfect_elimination_ordering(&p, &[0, 1, 2]));
        assert!(!is_perfect_elimination_ordering(&p, &[0, 0, 2]));
    }
}
