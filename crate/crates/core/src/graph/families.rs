//! Named graph families.
//!
//! All constructors use 0-based labels. `G_n` (complete graph minus a perfect
//! matching) removes `{0,1}, {2,3}, ...`; `H_n` adds a vertex `n-1` to
//! `G_{n-1}` joined to every vertex except `0`.

use crate::error::{Error, Result};

use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n);
    g.add_edge(0, n - 1);
    Ok(g)
}

/// `G_n`: `K_n` without the edges `{0,1}, {2,3}, ..., {n-2,n-1}`.
pub fn complete_minus_perfect_matching(n: usize) -> Result<Graph> {
    if n % 2 != 0 {
        return Err(Error::Input(format!("G_n needs an even vertex count, got {n}")));
    }
    let mut g = complete(n);
    for k in (0..n).step_by(2) {
        g.remove_edge(k, k + 1);
    }
    Ok(g)
}

/// `H_n` for odd `n >= 3`: `G_{n-1}` plus vertex `n-1` adjacent to `1..=n-2`.
pub fn h_graph(n: usize) -> Result<Graph> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Input(format!("H_n needs an odd vertex count >= 3, got {n}")));
    }
    let base = complete_minus_perfect_matching(n - 1)?;
    let mut g = base.disjoint_union(&Graph::new(1))?;
    for v in 1..n - 1 {
        g.add_edge(v, n - 1);
    }
    Ok(g)
}

/// `P_n^k`: `i ~ j` iff `0 < |i - j| <= k`.
pub fn path_power(n: usize, k: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n.min(i + k + 1) {
            g.add_edge(i, j);
        }
    }
    g
}

/// `K_m` on vertices `0..m` where hub `i` carries `pendants[i]` leaves.
/// Leaves are numbered after the hubs, grouped by hub.
pub fn clique_with_pendants(m: usize, pendants: &[usize]) -> Result<Graph> {
    if m == 0 || pendants.len() != m {
        return Err(Error::Input(format!(
            "clique_with_pendants needs m >= 1 and exactly m pendant counts (m = {m}, got {})",
            pendants.len()
        )));
    }
    if let Some(i) = pendants.iter().position(|&p| p == 0) {
        return Err(Error::Input(format!("hub {i} has no pendant leaf")));
    }
    let n = m + pendants.iter().sum::<usize>();
    let mut g = Graph::try_new(n)?;
    for u in 0..m {
        for v in u + 1..m {
            g.add_edge(u, v);
        }
    }
    let mut next = m;
    for (hub, &p) in pendants.iter().enumerate() {
        for _ in 0..p {
            g.add_edge(hub, next);
            next += 1;
        }
    }
    Ok(g)
}

/// Looks up a family by name, e.g. `family("cycle", &[6])` or
/// `family("clique_with_pendants", &[3, 2, 2, 2])`.
pub fn family(name: &str, params: &[usize]) -> Result<Graph> {
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Input(format!("family {name} takes {k} parameter(s), got {}", params.len())))
        }
    };
    let check_n = |n: usize| -> Result<()> {
        if n > super::MAX_VERTICES {
            Err(Error::Unsupported(format!("{n} vertices exceeds the limit of {}", super::MAX_VERTICES)))
        } else {
            Ok(())
        }
    };
    match name {
        "complete" | "K" => {
            arity(1)?;
            check_n(params[0])?;
            Ok(complete(params[0]))
        }
        "empty" | "edgeless" => {
            arity(1)?;
            Graph::try_new(params[0])
        }
        "path" | "P" => {
            arity(1)?;
            check_n(params[0])?;
            Ok(path(params[0]))
        }
        "cycle" | "C" => {
            arity(1)?;
            check_n(params[0])?;
            cycle(params[0])
        }
        "complete_minus_perfect_matching" | "G" => {
            arity(1)?;
            check_n(params[0])?;
            complete_minus_perfect_matching(params[0])
        }
        "h_graph" | "H" => {
            arity(1)?;
            check_n(params[0])?;
            h_graph(params[0])
        }
        "path_power" => {
            arity(2)?;
            check_n(params[0])?;
            Ok(path_power(params[0], params[1]))
        }
        "clique_with_pendants" => {
            let (&m, rest) = params
                .split_first()
                .ok_or_else(|| Error::Input("clique_with_pendants needs m followed by m counts".into()))?;
            clique_with_pendants(m, rest)
        }
        other => Err(Error::Input(format!("unknown graph family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn g_n_edge_count() {
        let g = complete_minus_perfect_matching(8).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 24);
        assert!(!g.has_edge(0, 1) && !g.has_edge(6, 7) && g.has_edge(1, 2));
        assert!(complete_minus_perfect_matching(7).is_err());
    }

    #[test]
    fn h_n_shape() {
        let h = h_graph(9).unwrap();
        assert_eq!(h.n(), 9);
        assert_eq!(h.degree(8), 7);
        assert!(!h.has_edge(0, 8));
        assert!(h_graph(8).is_err());
    }

    #[test]
    fn clique_with_pendants_small_is_p4() {
        let g = clique_with_pendants(2, &[1, 1]).unwrap();
        assert!(are_isomorphic(&g, &path(4)).unwrap());
        assert!(clique_with_pendants(2, &[1, 0]).is_err());
        assert!(clique_with_pendants(3, &[1, 1]).is_err());
    }

    #[test]
    fn path_power_one_is_path() {
        assert_eq!(path_power(5, 1), path(5));
        assert_eq!(path_power(5, 4), complete(5));
    }

    #[test]
    fn family_lookup() {
        assert_eq!(family("cycle", &[6]).unwrap(), cycle(6).unwrap());
        assert_eq!(family("clique_with_pendants", &[2, 1, 1]).unwrap().n(), 4);
        assert!(family("petersen", &[]).is_err());
        assert!(family("path", &[1, 2]).is_err());
        assert!(matches!(family("path", &[100]), Err(Error::Unsupported(_))));
    }
}
