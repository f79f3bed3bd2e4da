//! graph6 encoding (one graph per line, printable 6-bit groups).
//!
//! Body bits list the upper triangle column by column:
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, padded with zeros to a multiple of six.

use crate::error::{Error, Result};

use super::{Graph, MAX_VERTICES};

const OPTIONAL_HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b @ 63..=126) => Ok((b - 63) as u64),
        Some(&b) => Err(Error::Graph6 { offset, reason: format!("illegal byte 0x{b:02x}") }),
        None => Err(Error::Graph6 { offset, reason: "unexpected end of input".into() }),
    }
}

/// Parses one graph6 line. A trailing `\n` (or `\r\n`) and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let (base, body) = match text.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if let Some(bad) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6 { offset: base + bad, reason: format!("illegal byte 0x{:02x}", body[bad]) });
    }
    let rebase = |e: Error| match e {
        Error::Graph6 { offset, reason } => Error::Graph6 { offset: offset + base, reason },
        other => other,
    };

    let (n, mut pos) = {
        let first = sextet(body, 0).map_err(rebase)?;
        if first < 63 {
            (first, 1)
        } else if body.get(1) == Some(&126) {
            let mut n = 0;
            for k in 2..8 {
                n = n << 6 | sextet(body, k).map_err(rebase)?;
            }
            (n, 8)
        } else {
            let mut n = 0;
            for k in 1..4 {
                n = n << 6 | sextet(body, k).map_err(rebase)?;
            }
            (n, 4)
        }
    };
    if n as usize > MAX_VERTICES {
        return Err(Error::Unsupported(format!(
            "graph6 header declares {n} vertices; at most {MAX_VERTICES} are supported"
        )));
    }
    let n = n as usize;
    let total_bits = n * n.saturating_sub(1) / 2;
    let body_len = total_bits.div_ceil(6);
    if body.len() < pos + body_len {
        return Err(Error::Graph6 {
            offset: base + body.len(),
            reason: format!("body too short: expected {body_len} bytes for n = {n}"),
        });
    }
    if body.len() > pos + body_len {
        return Err(Error::Graph6 { offset: base + pos + body_len, reason: "trailing bytes after body".into() });
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    let mut current = 0u64;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                current = sextet(body, pos).map_err(rebase)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if current >> left & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, total_bits);
    if left > 0 && current & ((1 << left) - 1) != 0 {
        return Err(Error::Graph6 { offset: base + pos - 1, reason: "non-zero padding bits".into() });
    }
    Ok(g)
}

/// Parses a multi-line graph6 document, skipping blank lines. Errors name the
/// 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| e.with_context(&format!("line {}", i + 1)))
        })
        .collect()
}
