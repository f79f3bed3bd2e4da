//! Slow, definitional oracles that share no code with the library.
#![allow(dead_code)]

use kappa_core::Graph;

/// Vertices adjacent to `v` inside `within`.
fn nbrs(g: &Graph, v: usize, within: u64) -> u64 {
    (0..g.n()).filter(|&w| w != v && g.has_edge(v, w) && within >> w & 1 == 1).fold(0, |m, w| m | 1 << w)
}

fn connected_within(g: &Graph, within: u64) -> bool {
    if within == 0 {
        return true;
    }
    let start = within.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let fresh = nbrs(g, v, within) & !seen;
        seen |= fresh;
        stack.extend((0..64).filter(|&w| fresh >> w & 1 == 1));
    }
    seen == within
}

pub fn components_within(g: &Graph, within: u64) -> usize {
    let mut left = within;
    let mut count = 0;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let fresh = nbrs(g, v, within) & !seen;
            seen |= fresh;
            stack.extend((0..64).filter(|&w| fresh >> w & 1 == 1));
        }
        left &= !seen;
        count += 1;
    }
    count
}

/// Smallest set whose removal leaves a disconnected graph on two or more
/// vertices; `n - 1` if there is none.
pub fn kappa_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    let all = (1u64 << n) - 1;
    (0..1u64 << n)
        .filter(|&s| {
            let rest = all & !s;
            rest.count_ones() >= 2 && !connected_within(g, rest)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n - 1)
}

/// Chordal iff no vertex subset of size at least four induces a cycle.
pub fn chordal_by_induced_cycles(g: &Graph) -> bool {
    let n = g.n();
    !(0..1u64 << n).any(|s| {
        s.count_ones() >= 4
            && (0..n).filter(|&v| s >> v & 1 == 1).all(|v| nbrs(g, v, s).count_ones() == 2)
            && connected_within(g, s)
    })
}

/// Number of graphs on `n` vertices up to isomorphism, by Burnside's lemma
/// over cycle types of the symmetric group.
pub fn burnside_count(n: usize) -> u128 {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            partitions(n - k, k, cur, out);
            cur.pop();
        }
    }
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    let mut total: u128 = 0;
    for p in parts {
        // Permutations with this cycle type: n! / prod(k^{m_k} m_k!).
        let mut denom: u128 = 1;
        let mut k = 0;
        while k < p.len() {
            let len = p[k];
            let mult = p.iter().filter(|&&x| x == len).count();
            denom *= (len as u128).pow(mult as u32) * fact(mult);
            k += mult;
        }
        let mut orbits = 0;
        for i in 0..p.len() {
            orbits += p[i] / 2;
            for j in i + 1..p.len() {
                orbits += gcd(p[i], p[j]);
            }
        }
        total += fact(n) / denom * (1u128 << orbits);
    }
    total / fact(n)
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes on `n <= 7` vertices: walk all `2^(n choose 2)`
/// labelled graphs and strike out each new graph's orbit under `S_n`.
pub fn count_orbits(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&(i, j)| (i, j) == (a.min(b), a.max(b))).unwrap();
    let moves: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect();
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        orbits += 1;
        for mv in &moves {
            let image = (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).fold(0, |m, k| m | 1 << mv[k]);
            seen[image] = true;
        }
    }
    orbits
}

/// Brute-force isomorphism test over all relabellings.
pub fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    n == b.n()
        && a.edge_count() == b.edge_count()
        && permutations(n).iter().any(|p| (0..n).all(|i| (0..i).all(|j| a.has_edge(i, j) == b.has_edge(p[i], p[j]))))
}

/// Rank modulo a prime by plain Gaussian elimination.
fn rank_mod(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&r| m[r][c].rem_euclid(p) != 0) else { continue };
        m.swap(rank, r);
        let inv = pow_mod(m[rank][c].rem_euclid(p), p - 2, p);
        for r in 0..m.len() {
            if r != rank {
                let f = m[r][c].rem_euclid(p) * inv % p;
                for j in 0..cols {
                    m[r][j] = (m[r][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub const LARGE_PRIME: i64 = 1_000_000_007;

/// Reduced homology ranks (index 0 is dimension -1) of the clique complex
/// of `g` restricted to `w`, modulo `p`.
pub fn homology_mod(g: &Graph, w: u64, p: i64) -> Vec<usize> {
    let is_clique = |s: u64| {
        (0..64).filter(|&a| s >> a & 1 == 1).all(|a| (0..a).filter(|&b| s >> b & 1 == 1).all(|b| g.has_edge(a, b)))
    };
    let mut faces: Vec<Vec<u64>> = vec![Vec::new(); w.count_ones() as usize + 1];
    let mut s = w;
    loop {
        if is_clique(s) {
            faces[s.count_ones() as usize].push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & w;
    }
    while faces.last().is_some_and(Vec::is_empty) {
        faces.pop();
    }
    for level in &mut faces {
        level.sort();
    }
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k >= faces.len() {
            return 0;
        }
        let rows: Vec<Vec<i64>> = faces[k]
            .iter()
            .map(|&f| {
                let verts: Vec<usize> = (0..64).filter(|&v| f >> v & 1 == 1).collect();
                let mut row = vec![0i64; faces[k - 1].len()];
                for (i, &v) in verts.iter().enumerate() {
                    let idx = faces[k - 1].iter().position(|&x| x == f & !(1 << v)).unwrap();
                    row[idx] = if i % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        rank_mod(rows, p)
    };
    (0..faces.len()).map(|k| faces[k].len() - boundary_rank(k) - boundary_rank(k + 1)).collect()
}

/// `beta[i][j]` of `S / I(G^c)` by Hochster's formula with ranks modulo `p`.
pub fn hochster_mod(g: &Graph, p: i64) -> Vec<Vec<u64>> {
    let n = g.n();
    let mut beta = vec![vec![0u64; n + 1]; n + 1];
    beta[0][0] = 1;
    for w in 1..1u64 << n {
        let j = w.count_ones() as usize;
        for (idx, &r) in homology_mod(g, w, p).iter().enumerate() {
            // idx = k + 1, so i = j - k - 1 = j - idx.
            if r > 0 {
                beta[j - idx][j] += r as u64;
            }
        }
    }
    beta
}
