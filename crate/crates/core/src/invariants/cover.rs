//! Maximum size of an inclusion-minimal vertex cover.
//!
//! Minimal vertex covers are exactly the complements of maximal independent
//! sets, so `tau_max(G) = n - i(G)` where `i(G)` is the smallest size of a
//! maximal independent set (the independent domination number).

use serde::Serialize;

use crate::error::Result;
use crate::graph::{for_each_maximal_clique, Graph, VertexSet};

/// Search-node budget for maximal independent set enumeration.
pub const DEFAULT_MIS_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaxMinimalCover {
    pub size: usize,
    #[serde(serialize_with = "serialize_set")]
    pub cover: VertexSet,
}

fn serialize_set<S: serde::Serializer>(set: &VertexSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

/// Every maximal independent set of `g`, sorted by mask.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let comp = g.complement();
    let mut out = Vec::new();
    for_each_maximal_clique(&comp, comp.vertex_mask(), DEFAULT_MIS_BUDGET, |c| {
        out.push(VertexSet::from_mask(c));
        true
    })?;
    out.sort_unstable();
    Ok(out)
}

pub fn tau_max(g: &Graph) -> Result<MaxMinimalCover> {
    tau_max_with_budget(g, DEFAULT_MIS_BUDGET)
}

/// Like [`tau_max`] with an explicit search-node budget.
pub fn tau_max_with_budget(g: &Graph, budget: u64) -> Result<MaxMinimalCover> {
    let comp = g.complement();
    let mut smallest: Option<u64> = None;
    for_each_maximal_clique(&comp, comp.vertex_mask(), budget, |mis| {
        if smallest.is_none_or(|s| mis.count_ones() < s.count_ones()) {
            smallest = Some(mis);
        }
        true
    })?;
    let mis = smallest.expect("every graph has a maximal independent set");
    let cover = VertexSet::from_mask(g.vertex_mask() & !mis);
    Ok(MaxMinimalCover { size: cover.len(), cover })
}

pub fn is_vertex_cover(g: &Graph, set: VertexSet) -> bool {
    g.edges().all(|(u, v)| set.contains(u) || set.contains(v))
}

/// A cover is minimal iff every member has a neighbour outside the cover.
pub fn is_minimal_vertex_cover(g: &Graph, set: VertexSet) -> bool {
    is_vertex_cover(g, set) && set.iter().all(|v| g.neighbors(v) & !set.mask() != 0)
}
