//! Canonical labelling for graphs on at most 16 vertices.
//!
//! The canonical form is the minimum adjacency bit string (upper triangle,
//! column-major like graph6) over all vertex orders reachable by an
//! individualisation-refinement search. Refinement is iterated degree
//! refinement against the current ordered partition, which is
//! label-invariant, so isomorphic graphs reach the same set of leaf codes.
//! Interchangeable twin vertices (`N(u) \ {v} == N(v) \ {u}`) are only
//! individualised once per cell, since swapping them is an automorphism.

use std::fmt;

use crate::error::{Error, Result};

use super::Graph;

pub const MAX_CANON_N: usize = 16;

/// Isomorphism-class identifier: the vertex count and the minimal code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Upper-triangle bits, first bit most significant.
    pub fn code(&self) -> u128 {
        self.code
    }

    /// Byte string: the vertex count followed by the code bits, left-aligned
    /// and zero-padded to whole bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.n as usize;
        let bits = n * n.saturating_sub(1) / 2;
        let mut out = vec![self.n];
        if bits > 0 {
            let aligned = self.code << (128 - bits);
            out.extend_from_slice(&aligned.to_be_bytes()[..bits.div_ceil(8)]);
        }
        out
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let bits = n * n.saturating_sub(1) / 2;
        let mut g = Graph::new(n);
        let mut k = bits;
        for j in 1..n {
            for i in 0..j {
                k -= 1;
                if self.code >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub(crate) fn from_parts(n: usize, code: u128) -> Self {
        CanonicalForm { n: n as u8, code }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in self.to_bytes() {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u16; MAX_CANON_N],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_CANON_N];
        let len = if n == 0 {
            0
        } else {
            cells[0] = ((1u32 << n) - 1) as u16;
            1
        };
        Partition { cells, len }
    }

    #[inline]
    fn push(&mut self, cell: u16) {
        self.cells[self.len] = cell;
        self.len += 1;
    }

    /// Splits `v` out of cell `at` into a singleton placed first.
    fn individualize(&self, at: usize, v: usize) -> Self {
        let mut out = Partition { cells: [0; MAX_CANON_N], len: 0 };
        for (i, &c) in self.cells[..self.len].iter().enumerate() {
            if i == at {
                out.push(1 << v);
                out.push(c & !(1 << v));
            } else {
                out.push(c);
            }
        }
        out
    }
}

pub(crate) struct Canonizer {
    n: usize,
    adj: [u16; MAX_CANON_N],
    twins: [u16; MAX_CANON_N],
    best: Option<(u128, [u8; MAX_CANON_N])>,
}

impl Canonizer {
    pub(crate) fn new(n: usize, adj: [u16; MAX_CANON_N]) -> Self {
        debug_assert!(n <= MAX_CANON_N);
        let mut twins = [0u16; MAX_CANON_N];
        for u in 0..n {
            for v in 0..n {
                if u != v && adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                    twins[u] |= 1 << v;
                }
            }
        }
        Canonizer { n, adj, twins, best: None }
    }

    fn refine(&self, p: &mut Partition) {
        while p.len < self.n {
            let mut out = Partition { cells: [0; MAX_CANON_N], len: 0 };
            for ci in 0..p.len {
                let cell = p.cells[ci];
                if cell & cell.wrapping_sub(1) == 0 {
                    out.push(cell);
                    continue;
                }
                // Neighbour counts into every cell, 4 bits each, first cell most significant.
                let mut items = [(0u64, 0u8); MAX_CANON_N];
                let mut m = 0;
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let row = self.adj[v];
                    let mut sig = 0u64;
                    for &c in &p.cells[..p.len] {
                        sig = sig << 4 | (row & c).count_ones() as u64;
                    }
                    items[m] = (sig, v as u8);
                    m += 1;
                }
                let items = &mut items[..m];
                items.sort_unstable();
                let mut group = 1u16 << items[0].1;
                for w in 1..m {
                    if items[w].0 != items[w - 1].0 {
                        out.push(group);
                        group = 0;
                    }
                    group |= 1 << items[w].1;
                }
                out.push(group);
            }
            if out.len == p.len {
                break;
            }
            *p = out;
        }
    }

    fn leaf(&mut self, p: &Partition) {
        let mut order = [0u8; MAX_CANON_N];
        for (i, &c) in p.cells[..self.n].iter().enumerate() {
            order[i] = c.trailing_zeros() as u8;
        }
        let mut code = 0u128;
        for j in 1..self.n {
            let col = self.adj[order[j] as usize];
            for &oi in &order[..j] {
                code = code << 1 | (col >> oi & 1) as u128;
            }
        }
        match self.best {
            Some((b, _)) if b <= code => {}
            _ => self.best = Some((code, order)),
        }
    }

    fn search(&mut self, mut p: Partition) {
        self.refine(&mut p);
        if p.len == self.n {
            self.leaf(&p);
            return;
        }
        let at = p.cells[..p.len]
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = p.cells[at];
        let mut tried = 0u16;
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            self.search(p.individualize(at, v));
        }
    }

    /// Returns the minimal code and the vertex order realising it.
    pub(crate) fn run(mut self) -> (u128, [u8; MAX_CANON_N]) {
        if self.n == 0 {
            return (0, [0; MAX_CANON_N]);
        }
        self.search(Partition::unit(self.n));
        self.best.expect("search reaches at least one leaf")
    }
}

fn packed(g: &Graph) -> Result<[u16; MAX_CANON_N]> {
    if g.n() > MAX_CANON_N {
        return Err(Error::Unsupported(format!(
            "canonical forms are limited to {MAX_CANON_N} vertices, got {}",
            g.n()
        )));
    }
    let mut adj = [0u16; MAX_CANON_N];
    for (v, row) in adj.iter_mut().enumerate().take(g.n()) {
        *row = g.neighbors(v) as u16;
    }
    Ok(adj)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let adj = packed(g)?;
    let (code, _) = Canonizer::new(g.n(), adj).run();
    Ok(CanonicalForm::from_parts(g.n(), code))
}

/// The canonical form together with `order`, where `order[i]` is the
/// original vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let adj = packed(g)?;
    let (code, order) = Canonizer::new(g.n(), adj).run();
    Ok((
        CanonicalForm::from_parts(g.n(), code),
        order[..g.n()].iter().map(|&v| v as usize).collect(),
    ))
}

pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, cycle, path};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: minimum code over all n! vertex orders.
    fn brute_force_code(g: &Graph) -> u128 {
        fn rec(g: &Graph, order: &mut Vec<usize>, used: u64, best: &mut u128) {
            let n = g.n();
            if order.len() == n {
                let mut code = 0u128;
                for j in 1..n {
                    for i in 0..j {
                        code = code << 1 | g.has_edge(order[i], order[j]) as u128;
                    }
                }
                *best = (*best).min(code);
                return;
            }
            for v in 0..n {
                if used >> v & 1 == 0 {
                    order.push(v);
                    rec(g, order, used | 1 << v, best);
                    order.pop();
                }
            }
        }
        let mut best = u128::MAX;
        rec(g, &mut Vec::new(), 0, &mut best);
        if g.n() < 2 {
            0
        } else {
            best
        }
    }

    fn graph_from_index(n: usize, idx: u64) -> Graph {
        let mut g = Graph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if idx >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = path(4);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn four_vertex_classes() {
        let mut forms = std::collections::BTreeSet::new();
        let mut oracle = std::collections::BTreeSet::new();
        for idx in 0..64 {
            let g = graph_from_index(4, idx);
            forms.insert(canonical_form(&g).unwrap());
            oracle.insert(brute_force_code(&g));
        }
        assert_eq!(oracle.len(), 11);
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn classes_match_brute_force_on_five_vertices() {
        // Canonical form and the brute-force minimum must induce the same partition.
        let mut by_form = std::collections::HashMap::new();
        let mut by_oracle = std::collections::HashMap::new();
        for idx in 0..1024 {
            let g = graph_from_index(5, idx);
            let form = canonical_form(&g).unwrap();
            let oracle = brute_force_code(&g);
            assert_eq!(*by_form.entry(form).or_insert(oracle), oracle, "{g:?}");
            assert_eq!(*by_oracle.entry(oracle).or_insert(form), form, "{g:?}");
        }
        assert_eq!(by_form.len(), 34);
    }

    #[test]
    fn labeling_reproduces_canonical_graph() {
        let g = cycle(7).unwrap();
        let (form, order) = canonical_labeling(&g).unwrap();
        let mut pos = vec![0; 7];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        assert_eq!(g.permuted(&pos), form.to_graph());
        assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }

    #[test]
    fn bytes_and_limits() {
        assert_eq!(canonical_form(&Graph::new(0)).unwrap().to_bytes(), vec![0]);
        let k3 = canonical_form(&complete(3)).unwrap();
        assert_eq!(k3.to_bytes(), vec![3, 0b1110_0000]);
        assert!(matches!(canonical_form(&Graph::new(17)), Err(Error::Unsupported(_))));
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(seed in any::<u64>(), n in 0usize..=16, p in 0.0f64..1.0) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::random(n, p, &mut rng);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }

        #[test]
        fn agrees_with_brute_force_on_seven(seed in any::<u64>(), p in 0.0f64..1.0) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::random(7, p, &mut rng);
            let h = Graph::random(7, p, &mut rng);
            let same = brute_force_code(&g) == brute_force_code(&h);
            prop_assert_eq!(are_isomorphic(&g, &h).unwrap(), same);
        }
    }
}
