//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting) over bitsets.

use crate::error::{Error, Result};

use super::{bits, Graph};

struct Bk<'a, F> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    emit: F,
}

impl<F: FnMut(u64) -> bool> Bk<'_, F> {
    /// Returns `Ok(false)` when the callback asked to stop.
    fn expand(&mut self, r: u64, mut p: u64, mut x: u64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget(format!(
                "maximal clique enumeration exceeded {} search nodes",
                self.budget
            )));
        }
        if p == 0 {
            if x == 0 {
                return Ok((self.emit)(r));
            }
            return Ok(true);
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| (p & self.g.neighbors(u)).count_ones())
            .expect("p is non-empty");
        for v in bits(p & !self.g.neighbors(pivot)) {
            let nv = self.g.neighbors(v);
            if !self.expand(r | 1 << v, p & nv, x & nv)? {
                return Ok(false);
            }
            p &= !(1 << v);
            x |= 1 << v;
        }
        Ok(true)
    }
}

/// Calls `emit` with every maximal clique of the subgraph induced on `within`
/// (as a vertex mask). `emit` returns `false` to stop early. The induced
/// subgraph on an empty `within` has the single maximal clique `{}`.
pub fn for_each_maximal_clique<F: FnMut(u64) -> bool>(
    g: &Graph,
    within: u64,
    budget: u64,
    emit: F,
) -> Result<()> {
    let mut bk = Bk { g, budget, nodes: 0, emit };
    bk.expand(0, within & g.vertex_mask(), 0)?;
    Ok(())
}

/// All maximal cliques of `g`, sorted by mask value.
pub fn maximal_cliques(g: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_maximal_clique(g, g.vertex_mask(), u64::MAX, |c| {
        out.push(c);
        true
    })
    .expect("unbounded budget");
    out.sort_unstable();
    out
}
