//! Vertex connectivity.
//!
//! Conventions: `kappa(K_n) = n - 1`, `kappa(K_1) = 0`, and any disconnected
//! graph has `kappa = 0` since the empty set already disconnects it.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest `n` accepted by [`vertex_connectivity_bruteforce`].
pub const BRUTE_FORCE_MAX_N: usize = 10;

/// Unit vertex capacities on the split digraph: vertex `v` becomes
/// `in(v) = 2v -> out(v) = 2v + 1`, and each edge `{u, w}` becomes
/// `out(u) -> in(w)` and `out(w) -> in(u)` with unbounded capacity.
struct SplitFlow<'a> {
    g: &'a Graph,
    size: usize,
    residual: Vec<i32>,
}

/// Nodes adjacent to `x` in the split digraph, in either direction.
fn arcs(g: &Graph, x: usize) -> impl Iterator<Item = usize> {
    let v = x / 2;
    // in-nodes reach out-nodes of neighbours only through reverse residuals, and vice versa.
    let across = bits(g.neighbors(v)).map(move |w| if x % 2 == 0 { 2 * w + 1 } else { 2 * w });
    std::iter::once(x ^ 1).chain(across)
}

impl<'a> SplitFlow<'a> {
    fn new(g: &'a Graph, s: usize, t: usize) -> Self {
        let size = 2 * g.n();
        let inf = g.n() as i32;
        let mut residual = vec![0; size * size];
        for v in 0..g.n() {
            let c = if v == s || v == t { inf } else { 1 };
            residual[2 * v * size + 2 * v + 1] = c;
            for w in bits(g.neighbors(v)) {
                residual[(2 * v + 1) * size + 2 * w] = inf;
            }
        }
        SplitFlow { g, size, residual }
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut parent = vec![usize::MAX; self.size];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        let g = self.g;
        while let Some(x) = queue.pop_front() {
            for y in arcs(g, x) {
                if parent[y] == usize::MAX && self.residual[x * self.size + y] > 0 {
                    parent[y] = x;
                    if y == sink {
                        let mut cur = sink;
                        while cur != source {
                            let p = parent[cur];
                            self.residual[p * self.size + cur] -= 1;
                            self.residual[cur * self.size + p] += 1;
                            cur = p;
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s != t`, stopping once `cap` paths are found.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "s and t must be distinct and non-adjacent");
    let mut flow = SplitFlow::new(g, s, t);
    let mut paths = 0;
    while paths < cap && flow.augment(2 * s + 1, 2 * t) {
        paths += 1;
    }
    paths
}

/// Exact vertex connectivity by Menger's theorem.
///
/// Pairs are scanned in Even's order: a minimum separator misses one of the
/// first `kappa + 1` vertices, so sources beyond the running minimum are skipped.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Input("vertex connectivity needs at least one vertex".into()));
    }
    if n == 1 || !g.is_connected() {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut best = g.min_degree().expect("n >= 2");
    let mut s = 0;
    while s <= best && s < n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
        s += 1;
    }
    Ok(best)
}

/// Definitional oracle: the smallest removal set leaving a disconnected
/// graph on at least two vertices, or `n - 1` if none exists.
pub fn vertex_connectivity_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Input("vertex connectivity needs at least one vertex".into()));
    }
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::Unsupported(format!(
            "brute-force connectivity is limited to {BRUTE_FORCE_MAX_N} vertices, got {n}"
        )));
    }
    let all = g.vertex_mask();
    for k in 0..n.saturating_sub(1) {
        for removed in (0..1u64 << n).filter(|w| w.count_ones() as usize == k) {
            let rest = all & !removed;
            if rest.count_ones() >= 2 && g.component_count_in(rest) >= 2 {
                return Ok(k);
            }
        }
    }
    Ok(n - 1)
}
