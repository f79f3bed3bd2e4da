use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};
use crate::invariants::{
    algebraic_connectivity, ceil_two_sqrt_minus_two, has_universal_vertex, is_chordal, kappa_bound, tau_max,
    vertex_connectivity,
};
use crate::stanley_reisner::{betti_table_hochster, BettiTable, Field, MAX_BETTI_N};

/// Slack allowed when comparing the Fiedler value against connectivity.
pub const FIEDLER_TOLERANCE: f64 = 1e-7;

/// The verified statements.
///
/// * `K1`: `kappa + tau_max(G^c) <= n - 1` (chordal*)
/// * `K2`: `kappa <= (n - 1) - ceil(2 sqrt(n) - 2)` (chordal*)
/// * `K3`: `n - kappa = projdim + 1` (chordal*)
/// * `K4`: linear resolution (chordal)
/// * `K5`: `tau_max(G) >= ceil(2 sqrt(n) - 2)` (no isolated vertex)
/// * `K6`: `projdim >= tau_max(G^c)` (chordal*)
/// * `K7`: `a(G) <= kappa` (not complete)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    K7,
}

impl CheckId {
    pub const ALL: [CheckId; 7] = [CheckId::K1, CheckId::K2, CheckId::K3, CheckId::K4, CheckId::K5, CheckId::K6, CheckId::K7];

    pub fn needs_betti(self) -> bool {
        matches!(self, CheckId::K3 | CheckId::K4 | CheckId::K6)
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckId::K1 => "kappa + tau_max(complement) <= n - 1 on chordal* graphs",
            CheckId::K2 => "kappa <= (n - 1) - ceil(2 sqrt(n) - 2) on chordal* graphs",
            CheckId::K3 => "n - kappa = projdim + 1 on chordal* graphs",
            CheckId::K4 => "linear resolution on chordal graphs",
            CheckId::K5 => "tau_max >= ceil(2 sqrt(n) - 2) on graphs without isolated vertices",
            CheckId::K6 => "projdim >= tau_max(complement) on chordal* graphs",
            CheckId::K7 => "algebraic connectivity <= kappa on non-complete graphs",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown check {s:?}")))
    }
}

/// What a check concluded for one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum CheckState {
    NotApplicable,
    /// Applicable, but the graph is too large for Betti numbers.
    Skipped,
    Evaluated { passed: bool, observed: Value },
}

/// Everything the checks need about one graph, computed only where some
/// check applies.
#[derive(Debug, Clone)]
pub(crate) struct Facts {
    pub n: usize,
    pub chordal: bool,
    pub chordal_star: bool,
    pub isolated_free: bool,
    pub complete: bool,
    pub kappa: Option<usize>,
    pub tau_self: Option<usize>,
    pub tau_complement: Option<usize>,
    pub fiedler: Option<f64>,
    pub betti: Option<BettiTable>,
}

impl Facts {
    pub fn gather(g: &Graph, field: Field) -> Result<Facts> {
        let n = g.n();
        if n == 0 {
            return Err(Error::Input("graphs must have at least one vertex".into()));
        }
        let chordal = is_chordal(g);
        let chordal_star = chordal && !has_universal_vertex(g);
        let isolated_free = g.isolated_vertices().is_empty();
        let complete = g.is_complete();
        let kappa = if chordal_star || !complete { Some(vertex_connectivity(g)?) } else { None };
        Ok(Facts {
            n,
            chordal,
            chordal_star,
            isolated_free,
            complete,
            kappa,
            tau_self: if isolated_free { Some(tau_max(g)?.size) } else { None },
            tau_complement: if chordal_star { Some(tau_max(&g.complement())?.size) } else { None },
            fiedler: if complete { None } else { Some(algebraic_connectivity(g)?) },
            betti: if chordal && n <= MAX_BETTI_N { Some(betti_table_hochster(g, field)?) } else { None },
        })
    }

    pub fn applies(&self, id: CheckId) -> bool {
        match id {
            CheckId::K1 | CheckId::K2 | CheckId::K3 | CheckId::K6 => self.chordal_star,
            CheckId::K4 => self.chordal,
            CheckId::K5 => self.isolated_free,
            CheckId::K7 => !self.complete,
        }
    }

    pub fn check(&self, id: CheckId) -> CheckState {
        if !self.applies(id) {
            return CheckState::NotApplicable;
        }
        if id.needs_betti() && self.betti.is_none() {
            return CheckState::Skipped;
        }
        let n = self.n;
        let need = "gathered for applicable checks";
        let (passed, observed) = match id {
            CheckId::K1 => {
                let (k, t) = (self.kappa.expect(need), self.tau_complement.expect(need));
                (k + t < n, json!({"kappa": k, "tau_max_complement": t, "n_minus_1": n - 1}))
            }
            CheckId::K2 => {
                let k = self.kappa.expect(need);
                (k <= kappa_bound(n), json!({"kappa": k, "bound": kappa_bound(n)}))
            }
            CheckId::K3 => {
                let (k, p) = (self.kappa.expect(need), self.betti.as_ref().expect(need).proj_dim());
                (n - k == p + 1, json!({"n_minus_kappa": n - k, "projdim_plus_one": p + 1}))
            }
            CheckId::K4 => {
                let t = self.betti.as_ref().expect(need);
                let off: Vec<[u64; 3]> = t
                    .nonzero()
                    .filter(|&(i, j, _)| i >= 1 && j != i + 1)
                    .map(|(i, j, b)| [i as u64, j as u64, b])
                    .collect();
                (off.is_empty(), json!({"off_diagonal_entries": off}))
            }
            CheckId::K5 => {
                let t = self.tau_self.expect(need);
                let required = ceil_two_sqrt_minus_two(n);
                (t as i64 >= required, json!({"tau_max": t, "required": required}))
            }
            CheckId::K6 => {
                let (p, t) = (self.betti.as_ref().expect(need).proj_dim(), self.tau_complement.expect(need));
                (p >= t, json!({"projdim": p, "tau_max_complement": t}))
            }
            CheckId::K7 => {
                let (a, k) = (self.fiedler.expect(need), self.kappa.expect(need));
                (a <= k as f64 + FIEDLER_TOLERANCE, json!({"alg_connectivity": a, "kappa": k}))
            }
        };
        CheckState::Evaluated { passed, observed }
    }
}

/// Re-runs one check on a graph given only its graph6 encoding.
pub fn recheck(graph6: &str, id: CheckId, field: Field) -> Result<CheckState> {
    let g = parse_graph6(graph6)?;
    Ok(Facts::gather(&g, field)?.check(id))
}
