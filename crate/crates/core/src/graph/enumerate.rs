//! Isomorph-free enumeration of all graphs on `n <= 9` vertices.
//!
//! Level `k` is built from level `k - 1` by adding one vertex whose degree
//! does not exceed the minimum degree of the result. Every graph arises this
//! way (delete a minimum-degree vertex), and duplicates are removed by
//! canonical form.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::canon::{CanonicalForm, Canonizer, MAX_CANON_N};
use super::Graph;

pub const MAX_ENUMERATION_N: usize = 9;

fn decode(k: usize, code: u128) -> [u16; MAX_CANON_N] {
    let mut adj = [0u16; MAX_CANON_N];
    let mut bit = k * k.saturating_sub(1) / 2;
    for j in 1..k {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Canonical codes of all one-vertex extensions of the `(k-1)`-vertex parent.
fn children(k: usize, parent: u128) -> Vec<u128> {
    let base = decode(k - 1, parent);
    let new = k - 1;
    let mut out = Vec::new();
    for s in 0u16..(1 << new) {
        let size = s.count_ones();
        let admissible = (0..new).all(|v| base[v].count_ones() + (s >> v & 1) as u32 >= size);
        if !admissible {
            continue;
        }
        let mut adj = base;
        for (v, row) in adj.iter_mut().enumerate().take(new) {
            *row |= (s >> v & 1) << new;
        }
        adj[new] = s;
        out.push(Canonizer::new(k, adj).run().0);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Canonical forms of every graph on `n` vertices, sorted ascending.
pub fn enumerate_canonical_forms(n: usize) -> Result<Vec<CanonicalForm>> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::Unsupported(format!(
            "built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_N}, got {n}; ingest larger corpora as graph6"
        )));
    }
    let mut level: Vec<u128> = vec![0];
    for k in 2..=n {
        let batches: Vec<Vec<u128>> = level.par_iter().map(|&p| children(k, p)).collect();
        let mut seen: HashSet<u128> = HashSet::with_capacity(batches.iter().map(Vec::len).sum());
        for batch in batches {
            seen.extend(batch);
        }
        level = seen.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level.into_iter().map(|c| CanonicalForm::from_parts(n, c)).collect())
}

/// One representative per isomorphism class, in canonical-form order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_canonical_forms(n)?.iter().map(CanonicalForm::to_graph).collect())
}
