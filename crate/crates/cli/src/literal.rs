//! Graph literals on the command line.
//!
//! * graph6, e.g. `Ch`
//! * edge lists `u-v,u-v,...`, optionally prefixed by a vertex count: `6:0-1,1-2`
//! * family references `name:params`, e.g. `cycle:6`, `clique_with_pendants:3,2,2,2`
//! * `complement:<literal>` for the complement of any of the above

use kappa_core::graph::{family, parse_graph6};
use kappa_core::{Error, Graph, Result};

pub fn parse_graph_literal(text: &str) -> Result<Graph> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("complement:") {
        return Ok(parse_graph_literal(rest)?.complement());
    }
    match text.split_once(':') {
        Some((head, tail)) if head.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) => {
            family(head, &parse_numbers(tail)?)
        }
        Some((head, tail)) => {
            let n = head.trim().parse().map_err(|_| Error::Input(format!("bad vertex count {head:?}")))?;
            edge_list(Some(n), tail)
        }
        None if text.contains('-') => edge_list(None, text),
        None => parse_graph6(text),
    }
}

fn parse_numbers(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Input(format!("bad number {s:?}"))))
        .collect()
}

fn edge_list(n: Option<usize>, text: &str) -> Result<Graph> {
    let edges = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|e| {
            let (u, v) = e.split_once('-').ok_or_else(|| Error::Input(format!("edge {e:?} is not of the form u-v")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad vertex {s:?}")));
            Ok((parse(u)?, parse(v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}
