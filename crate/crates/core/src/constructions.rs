//! Chordal* graphs with prescribed vertex connectivity.
//!
//! [`construct_chordal_star`] walks a fixed ladder of families and returns the
//! first candidate that passes verification (chordal, no universal vertex,
//! exact max-flow connectivity):
//!
//! 1. `kappa = 0`: a path on `n - 1` vertices plus an isolated vertex.
//! 2. `kappa <= (n - 2) / 2`: the path power `P_n^kappa`.
//! 3. The complement of a clique with pendants, for `m = 2, 3, ...` hubs.
//!    That complement is a split graph with connectivity `n - m - max p_i`.
//! 4. Seeded local search over chordal* graphs.
//!
//! With `m` near `sqrt(n)` and balanced pendant counts, rung 3 reaches the
//! upper bound `(n - 1) - ceil(2 sqrt(n) - 2)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::families::{clique_with_pendants, path, path_power};
use crate::graph::{Graph, MAX_VERTICES};
use crate::invariants::{is_chordal_star, kappa_bound, vertex_connectivity};

/// Seed used by the local-search rung unless overridden.
pub const DEFAULT_SEED: u64 = 0x6b61_7070_61;
/// Edge toggles attempted by one local search.
pub const DEFAULT_SEARCH_STEPS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecipeFamily {
    /// `params = [n - 1]`.
    DisconnectedPath,
    /// `params = [n, kappa]`.
    PathPower,
    /// `params = [m, p_1, ..., p_m]`.
    ComplementCliquePendants,
    /// `params = [seed, steps]`.
    Searched,
}

/// Enough information to rebuild a construction from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecipe {
    pub family: RecipeFamily,
    pub params: Vec<usize>,
    pub target_n: usize,
    pub target_kappa: usize,
}

impl ConstructionRecipe {
    /// Rebuilds the graph and verifies it against the recipe's targets.
    pub fn realize(&self) -> Result<Graph> {
        let g = match self.family {
            RecipeFamily::DisconnectedPath => {
                let [len] = self.params[..] else { return Err(self.bad_params()) };
                path(len).disjoint_union(&Graph::new(1))?
            }
            RecipeFamily::PathPower => {
                let [n, k] = self.params[..] else { return Err(self.bad_params()) };
                path_power(n, k)
            }
            RecipeFamily::ComplementCliquePendants => {
                let (&m, pendants) = self.params.split_first().ok_or_else(|| self.bad_params())?;
                if pendants.len() != m {
                    return Err(self.bad_params());
                }
                clique_with_pendants(m, pendants)?.complement()
            }
            RecipeFamily::Searched => {
                let [seed, steps] = self.params[..] else { return Err(self.bad_params()) };
                local_search(self.target_n, self.target_kappa, seed as u64, steps)?
                    .ok_or(Error::ConstructionFailed { n: self.target_n, kappa: self.target_kappa })?
            }
        };
        if verifies(&g, self.target_n, self.target_kappa)? {
            Ok(g)
        } else {
            Err(Error::ConstructionFailed { n: self.target_n, kappa: self.target_kappa })
        }
    }

    fn bad_params(&self) -> Error {
        Error::Input(format!("malformed parameters {:?} for {:?}", self.params, self.family))
    }
}

/// A verified graph together with its recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub recipe: ConstructionRecipe,
}

fn verifies(g: &Graph, n: usize, kappa: usize) -> Result<bool> {
    Ok(g.n() == n && is_chordal_star(g) && vertex_connectivity(g)? == kappa)
}

fn check_admissible(n: usize, kappa: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::Domain(format!("constructions need n >= 4, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::Unsupported(format!("constructions are limited to {MAX_VERTICES} vertices, got {n}")));
    }
    let bound = kappa_bound(n);
    if kappa > bound {
        return Err(Error::Domain(format!("kappa = {kappa} exceeds the chordal* bound {bound} for n = {n}")));
    }
    Ok(())
}

pub fn construct_chordal_star(n: usize, kappa: usize) -> Result<Construction> {
    construct_chordal_star_with_seed(n, kappa, DEFAULT_SEED)
}

/// Like [`construct_chordal_star`], with the seed used if the ladder reaches local search.
pub fn construct_chordal_star_with_seed(n: usize, kappa: usize, seed: u64) -> Result<Construction> {
    check_admissible(n, kappa)?;
    let recipe = |family, params| ConstructionRecipe { family, params, target_n: n, target_kappa: kappa };
    let mut candidates = Vec::new();
    if kappa == 0 {
        candidates.push(recipe(RecipeFamily::DisconnectedPath, vec![n - 1]));
    }
    if kappa >= 1 && kappa <= (n - 2) / 2 {
        candidates.push(recipe(RecipeFamily::PathPower, vec![n, kappa]));
    }
    for m in 2..=n / 2 {
        let Some(largest) = (n - m).checked_sub(kappa) else { continue };
        if let Some(parts) = pendant_vector(n - m, m, largest) {
            let mut params = vec![m];
            params.extend(parts);
            candidates.push(recipe(RecipeFamily::ComplementCliquePendants, params));
        }
    }
    for r in candidates {
        if let Ok(graph) = r.realize() {
            return Ok(Construction { graph, recipe: r });
        }
    }
    let r = recipe(RecipeFamily::Searched, vec![seed as usize, DEFAULT_SEARCH_STEPS]);
    let graph = r.realize()?;
    Ok(Construction { graph, recipe: r })
}

/// The lexicographically smallest non-increasing split of `total` into
/// `parts` positive parts whose largest part is exactly `largest`.
fn pendant_vector(total: usize, parts: usize, largest: usize) -> Option<Vec<usize>> {
    if parts == 0 || largest == 0 || total < parts || largest > total - (parts - 1) {
        return None;
    }
    let rest = total - largest;
    if rest > largest * (parts - 1) {
        return None;
    }
    let mut v = vec![largest];
    if parts > 1 {
        let (q, r) = (rest / (parts - 1), rest % (parts - 1));
        v.extend((0..parts - 1).map(|i| if i < r { q + 1 } else { q }));
    }
    Some(v)
}

/// Hill climbing by single edge toggles from the path `P_n`, keeping every
/// state chordal* and never moving away from the target connectivity.
pub fn local_search(n: usize, kappa: usize, seed: u64, steps: usize) -> Result<Option<Graph>> {
    check_admissible(n, kappa)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = path(n);
    let mut gap = vertex_connectivity(&g)?.abs_diff(kappa);
    for _ in 0..steps {
        if gap == 0 {
            return Ok(Some(g));
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let had = g.has_edge(u, v);
        if had {
            g.remove_edge(u, v);
        } else {
            g.add_edge(u, v);
        }
        let next = if is_chordal_star(&g) { Some(vertex_connectivity(&g)?.abs_diff(kappa)) } else { None };
        match next {
            Some(d) if d <= gap => gap = d,
            _ => {
                if had {
                    g.add_edge(u, v);
                } else {
                    g.remove_edge(u, v);
                }
            }
        }
    }
    Ok((gap == 0).then_some(g))
}

/// For `n = s^2`, the complement of a clique on `s` vertices with `s - 1`
/// pendants at each vertex. It attains the connectivity bound `(s - 1)^2`.
pub fn extremal_candidate(n: usize) -> Result<Graph> {
    let s = n.isqrt();
    if s * s != n || s < 2 {
        return Err(Error::Domain(format!("extremal candidates need a perfect square n >= 4, got {n}")));
    }
    if n > MAX_VERTICES {
        return Err(Error::Unsupported(format!("n = {n} exceeds {MAX_VERTICES} vertices")));
    }
    let g = clique_with_pendants(s, &vec![s - 1; s])?.complement();
    if !verifies(&g, n, kappa_bound(n))? {
        return Err(Error::ConstructionFailed { n, kappa: kappa_bound(n) });
    }
    Ok(g)
}

/// One verified construction for every admissible connectivity, plus any failures.
#[derive(Debug, Clone)]
pub struct KappaSpectrum {
    pub n: usize,
    pub rows: Vec<Construction>,
    pub failures: Vec<(usize, Error)>,
}

impl KappaSpectrum {
    pub fn achieved(&self) -> Vec<usize> {
        self.rows.iter().map(|c| c.recipe.target_kappa).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty() && self.rows.len() == kappa_bound(self.n) + 1
    }
}

pub fn kappa_spectrum(n: usize) -> Result<KappaSpectrum> {
    check_admissible(n, 0)?;
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for kappa in 0..=kappa_bound(n) {
        match construct_chordal_star(n, kappa) {
            Ok(c) => rows.push(c),
            Err(e) => failures.push((kappa, e)),
        }
    }
    Ok(KappaSpectrum { n, rows, failures })
}
