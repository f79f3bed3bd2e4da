use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::Value;

use super::checks::{CheckId, CheckState, Facts};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_canonical_forms, parse_graph6_lines, write_graph6, Graph, MAX_CANON_N};
use crate::invariants::{is_chordal_star, kappa_bound, vertex_connectivity};
use crate::stanley_reisner::Field;

/// Bumped whenever the report layout changes.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// Every graph on `n` vertices up to isomorphism.
    Builtin(usize),
    /// Graphs read from a graph6 file.
    Graph6File(Vec<Graph>),
}

impl CorpusSource {
    pub fn tag(&self) -> &'static str {
        match self {
            CorpusSource::Builtin(_) => "builtin_enumeration",
            CorpusSource::Graph6File(_) => "graph6_file",
        }
    }

    /// Reads a graph6 file; parse errors name the line.
    pub fn from_graph6_file(path: &Path) -> Result<CorpusSource> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Ok(CorpusSource::Graph6File(parse_graph6_lines(&text)?))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub field: Field,
    /// Record wall-clock seconds in the report (makes output run-dependent).
    pub timing: bool,
}

/// Corpus graphs in canonical order: by size, then canonical code, then
/// graph6 for graphs too large to canonize.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct SortKey {
    n: usize,
    canon: Option<u128>,
    graph6: String,
}

struct Entry {
    key: SortKey,
    graph: Graph,
}

fn load(source: &CorpusSource) -> Result<Vec<Entry>> {
    let mut entries: Vec<Entry> = match source {
        CorpusSource::Builtin(n) => enumerate_canonical_forms(*n)?
            .into_iter()
            .map(|c| {
                let graph = c.to_graph();
                Entry { key: SortKey { n: *n, canon: Some(c.code()), graph6: write_graph6(&graph) }, graph }
            })
            .collect(),
        CorpusSource::Graph6File(graphs) => graphs
            .par_iter()
            .map(|g| {
                let canon = if g.n() <= MAX_CANON_N { Some(canonical_form(g)?.code()) } else { None };
                Ok(Entry { key: SortKey { n: g.n(), canon, graph6: write_graph6(g) }, graph: g.clone() })
            })
            .collect::<Result<_>>()?,
    };
    entries.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(entries)
}

/// Serialized as `"passed"`, `"failed"` or `"skipped"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub check: CheckId,
    pub observed: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: CheckId,
    pub description: &'static str,
    pub applicable: u64,
    pub passed: u64,
    /// Applicable graphs left unchecked because they exceed the Betti size limit.
    pub skipped: u64,
    pub status: CheckStatus,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub graphs: u64,
    pub chordal: u64,
    pub chordal_star: u64,
    pub isolated_free: u64,
    pub non_complete: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaCount {
    pub kappa: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub version: u32,
    /// The common vertex count, or `None` for a file with mixed sizes.
    pub n: Option<usize>,
    pub source: &'static str,
    pub field: Field,
    pub totals: Totals,
    pub checks: Vec<CheckReport>,
    /// Chordal* graphs at the connectivity bound, canonical graph6, one per class.
    pub extremal: Vec<String>,
    /// Connectivity histogram over the chordal* graphs.
    pub spectrum: Vec<KappaCount>,
    #[serde(serialize_with = "seconds")]
    pub timing: Option<f64>,
}

fn seconds<S: Serializer>(t: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match t {
        Some(x) => s.serialize_f64((x * 1e3).round() / 1e3),
        None => s.serialize_none(),
    }
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Failed)
    }

    pub fn failing_checks(&self) -> Vec<CheckId> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed).map(|c| c.id).collect()
    }

    pub fn check(&self, id: CheckId) -> &CheckReport {
        self.checks.iter().find(|c| c.id == id).expect("every check is reported")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Per-graph results, merged in canonical order.
pub(crate) struct GraphOutcome {
    pub graph6: String,
    pub canon_graph6: Option<String>,
    pub chordal: bool,
    pub chordal_star: bool,
    pub isolated_free: bool,
    pub non_complete: bool,
    pub kappa: Option<usize>,
    pub extremal: bool,
    pub states: Vec<(CheckId, CheckState)>,
}

fn evaluate(entry: &Entry, field: Field) -> Result<GraphOutcome> {
    let g = &entry.graph;
    let facts = Facts::gather(g, field).map_err(|e| e.with_context(&format!("graph {}", entry.key.graph6)))?;
    let extremal = facts.chordal_star && facts.kappa == Some(kappa_bound(facts.n));
    let canon_graph6 = match entry.key.canon {
        Some(code) if extremal => Some(write_graph6(&crate::graph::CanonicalForm::from_parts(facts.n, code).to_graph())),
        _ => None,
    };
    Ok(GraphOutcome {
        graph6: entry.key.graph6.clone(),
        canon_graph6,
        chordal: facts.chordal,
        chordal_star: facts.chordal_star,
        isolated_free: facts.isolated_free,
        non_complete: !facts.complete,
        kappa: facts.kappa,
        extremal,
        states: CheckId::ALL.iter().map(|&id| (id, facts.check(id))).collect(),
    })
}

/// Folds per-graph outcomes (already in canonical order) into a report.
pub(crate) fn aggregate(
    outcomes: &[GraphOutcome],
    n: Option<usize>,
    source: &'static str,
    field: Field,
) -> CorpusReport {
    let mut totals = Totals::default();
    let mut checks: Vec<CheckReport> = CheckId::ALL
        .iter()
        .map(|&id| CheckReport {
            id,
            description: id.description(),
            applicable: 0,
            passed: 0,
            skipped: 0,
            status: CheckStatus::Passed,
            counterexamples: Vec::new(),
        })
        .collect();
    let mut extremal = Vec::new();
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for o in outcomes {
        totals.graphs += 1;
        totals.chordal += o.chordal as u64;
        totals.chordal_star += o.chordal_star as u64;
        totals.isolated_free += o.isolated_free as u64;
        totals.non_complete += o.non_complete as u64;
        if o.chordal_star {
            *histogram.entry(o.kappa.expect("chordal* graphs carry kappa")).or_default() += 1;
        }
        if o.extremal {
            extremal.push(o.canon_graph6.clone().unwrap_or_else(|| o.graph6.clone()));
        }
        for (report, (id, state)) in checks.iter_mut().zip(&o.states) {
            match state {
                CheckState::NotApplicable => {}
                CheckState::Skipped => report.skipped += 1,
                CheckState::Evaluated { passed, observed } => {
                    report.applicable += 1;
                    if *passed {
                        report.passed += 1;
                    } else {
                        report.counterexamples.push(Counterexample {
                            graph6: o.graph6.clone(),
                            check: *id,
                            observed: observed.clone(),
                        });
                    }
                }
            }
        }
    }
    for c in &mut checks {
        c.status = if !c.counterexamples.is_empty() {
            CheckStatus::Failed
        } else if c.applicable == 0 && c.skipped > 0 {
            CheckStatus::Skipped
        } else {
            CheckStatus::Passed
        };
    }
    extremal.dedup();
    CorpusReport {
        version: REPORT_VERSION,
        n,
        source,
        field,
        totals,
        checks,
        extremal,
        spectrum: histogram.into_iter().map(|(kappa, count)| KappaCount { kappa, count }).collect(),
        timing: None,
    }
}

fn common_n(entries: &[Entry], source: &CorpusSource) -> Option<usize> {
    match source {
        CorpusSource::Builtin(n) => Some(*n),
        CorpusSource::Graph6File(_) => {
            let first = entries.first()?.key.n;
            entries.iter().all(|e| e.key.n == first).then_some(first)
        }
    }
}

/// Runs every check over the corpus. Output is independent of thread count.
pub fn verify_corpus(source: &CorpusSource, options: VerifyOptions) -> Result<CorpusReport> {
    let start = Instant::now();
    let entries = load(source)?;
    let outcomes: Vec<GraphOutcome> = entries.par_iter().map(|e| evaluate(e, options.field)).collect::<Result<_>>()?;
    let mut report = aggregate(&outcomes, common_n(&entries, source), source.tag(), options.field);
    if options.timing {
        report.timing = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

/// Chordal* graphs meeting the connectivity bound, as canonical graph6, one
/// per isomorphism class, in canonical order.
pub fn classify_extremal(source: &CorpusSource) -> Result<Vec<String>> {
    let entries = load(source)?;
    let hits: Vec<Option<String>> = entries
        .par_iter()
        .map(|e| {
            let g = &e.graph;
            if g.n() == 0 || !is_chordal_star(g) {
                return Ok(None);
            }
            let kappa = vertex_connectivity(g).map_err(|err| err.with_context(&format!("graph {}", e.key.graph6)))?;
            if kappa != kappa_bound(g.n()) {
                return Ok(None);
            }
            Ok(Some(match e.key.canon {
                Some(code) => write_graph6(&crate::graph::CanonicalForm::from_parts(g.n(), code).to_graph()),
                None => e.key.graph6.clone(),
            }))
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<String> = hits.into_iter().flatten().collect();
    out.dedup();
    Ok(out)
}
