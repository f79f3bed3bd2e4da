//! Verification drivers: single-graph analysis, corpus checks, extremal
//! classification and the connectivity spectrum.

mod checks;
mod corpus;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

pub use checks::{recheck, CheckId, CheckState, FIEDLER_TOLERANCE};
pub use corpus::{
    classify_extremal, verify_corpus, CheckReport, CheckStatus, CorpusReport, CorpusSource, Counterexample,
    KappaCount, Totals, VerifyOptions, REPORT_VERSION,
};

use crate::constructions::{kappa_spectrum, ConstructionRecipe};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, write_graph6, Graph, MAX_ENUMERATION_N};
use crate::invariants::{
    invariant_record, is_chordal_star, kappa_bound, vertex_connectivity, vertex_connectivity_bruteforce,
    InvariantRecord, BRUTE_FORCE_MAX_N,
};
use crate::stanley_reisner::{
    betti_table_hochster, check_projdim_kappa_identity, kappa_via_betti, BettiTable, Field, ProjdimIdentity,
    MAX_BETTI_N,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub graph6: String,
    pub edges: usize,
    #[serde(flatten)]
    pub record: InvariantRecord,
    pub kappa_plus_tau_complement: usize,
    /// `kappa + tau_max(G^c) <= n - 1`.
    pub kappa_tau_inequality_holds: bool,
    /// Chordal* with connectivity equal to the bound.
    pub at_bound: bool,
    pub exceeds_bound: bool,
    /// `a(G) <= kappa` up to [`FIEDLER_TOLERANCE`].
    pub fiedler_within_kappa: Option<bool>,
    pub kappa_via_betti: Option<usize>,
    pub projdim_identity: Option<ProjdimIdentity>,
    pub betti: Option<BettiTable>,
}

/// All invariants of one graph. Chordal* graphs with at most
/// [`MAX_BETTI_N`] vertices also get the Betti-side connectivity checks.
pub fn analyze(g: &Graph, with_betti: bool, field: Field) -> Result<AnalysisReport> {
    let n = g.n();
    if with_betti && n > MAX_BETTI_N {
        return Err(Error::Unsupported(format!("Betti tables are limited to {MAX_BETTI_N} vertices, got {n}")));
    }
    let record = invariant_record(g)?;
    let sum = record.kappa + record.tau_max_complement;
    let star_betti = record.is_chordal_star && n <= MAX_BETTI_N;
    Ok(AnalysisReport {
        graph6: write_graph6(g),
        edges: g.edge_count(),
        kappa_plus_tau_complement: sum,
        kappa_tau_inequality_holds: sum < n,
        at_bound: record.is_chordal_star && record.kappa == kappa_bound(n),
        exceeds_bound: record.kappa > kappa_bound(n),
        fiedler_within_kappa: if g.is_complete() {
            None
        } else {
            record.alg_connectivity.map(|a| a <= record.kappa as f64 + FIEDLER_TOLERANCE)
        },
        kappa_via_betti: if star_betti { Some(kappa_via_betti(g)?) } else { None },
        projdim_identity: if star_betti { Some(check_projdim_kappa_identity(g, field)?) } else { None },
        betti: if with_betti { Some(betti_table_hochster(g, field)?) } else { None },
        record,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumRow {
    pub kappa: usize,
    pub recipe: ConstructionRecipe,
    pub graph6: String,
    /// Definitional re-check of connectivity; `None` above the brute-force limit.
    pub bruteforce_verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumFailure {
    pub kappa: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub bound: usize,
    pub rows: Vec<SpectrumRow>,
    pub failures: Vec<SpectrumFailure>,
    /// Connectivities found among all chordal* graphs on `n` vertices, when enumerable.
    pub corpus_kappas: Option<Vec<usize>>,
    pub matches_corpus: Option<bool>,
}

impl SpectrumReport {
    pub fn achieved(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.kappa).collect()
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
            && self.achieved() == (0..=self.bound).collect::<Vec<_>>()
            && self.rows.iter().all(|r| r.bruteforce_verified != Some(false))
            && self.matches_corpus != Some(false)
    }
}

/// The set of connectivities over every chordal* graph on `n <= 9` vertices.
pub fn corpus_kappa_set(n: usize) -> Result<BTreeSet<usize>> {
    let graphs = enumerate_graphs(n)?;
    graphs
        .par_iter()
        .filter(|g| is_chordal_star(g))
        .map(vertex_connectivity)
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

pub fn spectrum(n: usize) -> Result<SpectrumReport> {
    let spec = kappa_spectrum(n)?;
    let rows = spec
        .rows
        .iter()
        .map(|c| {
            Ok(SpectrumRow {
                kappa: c.recipe.target_kappa,
                recipe: c.recipe.clone(),
                graph6: write_graph6(&c.graph),
                bruteforce_verified: if n <= BRUTE_FORCE_MAX_N {
                    Some(vertex_connectivity_bruteforce(&c.graph)? == c.recipe.target_kappa)
                } else {
                    None
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let corpus = if n <= MAX_ENUMERATION_N { Some(corpus_kappa_set(n)?) } else { None };
    let achieved: BTreeSet<usize> = rows.iter().map(|r| r.kappa).collect();
    Ok(SpectrumReport {
        n,
        bound: kappa_bound(n),
        matches_corpus: corpus.as_ref().map(|c| *c == achieved),
        corpus_kappas: corpus.map(|c| c.into_iter().collect()),
        failures: spec.failures.iter().map(|(kappa, e)| SpectrumFailure { kappa: *kappa, error: e.to_string() }).collect(),
        rows,
    })
}
