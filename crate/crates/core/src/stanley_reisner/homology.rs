use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{CheckedMul, CheckedSub, One, Zero};
use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;
use crate::error::Error;

/// Coefficient field for homology and Betti numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    #[default]
    Gf2,
    Q,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Gf2 => "gf2",
            Field::Q => "q",
        })
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "gf(2)" | "f2" => Ok(Field::Gf2),
            "q" | "qq" | "rational" | "rationals" => Ok(Field::Q),
            _ => Err(Error::Input(format!("unknown field {s:?}; expected gf2 or q"))),
        }
    }
}

/// Reduced homology ranks of a complex, indexed from dimension `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyRanks {
    pub field: Field,
    ranks: Vec<usize>,
    f_vector: Vec<usize>,
}

impl HomologyRanks {
    /// Rank of reduced homology in dimension `k`; zero outside the stored range.
    pub fn rank(&self, k: isize) -> usize {
        usize::try_from(k + 1).ok().and_then(|i| self.ranks.get(i)).copied().unwrap_or(0)
    }

    /// `(dimension, rank)` pairs from `-1` up to the top dimension.
    pub fn ranks(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks.iter().enumerate().map(|(i, &r)| (i as isize - 1, r))
    }

    /// Face counts from dimension `-1` upwards.
    pub fn f_vector(&self) -> &[usize] {
        &self.f_vector
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// `sum_k (-1)^k f_k` over `k >= -1`, computed from the faces.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        alternating(&self.f_vector)
    }

    /// `sum_k (-1)^k rank H_k` over `k >= -1`.
    pub fn alternating_rank_sum(&self) -> i64 {
        alternating(&self.ranks)
    }

    pub fn euler_identity_holds(&self) -> bool {
        self.reduced_euler_characteristic() == self.alternating_rank_sum()
    }
}

/// Signs start at dimension `-1`, which carries `-1`.
fn alternating(v: &[usize]) -> i64 {
    v.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { -(x as i64) } else { x as i64 }).sum()
}

pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: Field) -> HomologyRanks {
    homology_from_faces(&complex.faces_by_dimension(), field)
}

/// Homology from faces grouped by dimension (entry `d + 1` holds the sorted
/// `d`-faces). An empty slice is the void complex.
pub(crate) fn homology_from_faces(levels: &[Vec<u64>], field: Field) -> HomologyRanks {
    let f_vector: Vec<usize> = levels.iter().map(Vec::len).collect();
    // boundary_ranks[i] = rank of the map from level i to level i - 1; level 0 maps to nothing.
    let mut boundary_ranks = vec![0usize; levels.len() + 1];
    for i in 1..levels.len() {
        boundary_ranks[i] = boundary_rank(&levels[i], &levels[i - 1], field);
    }
    let ranks = (0..levels.len()).map(|i| f_vector[i] - boundary_ranks[i] - boundary_ranks[i + 1]).collect();
    HomologyRanks { field, ranks, f_vector }
}

/// Rank of the boundary map from `faces` to `lower` (faces one dimension down).
fn boundary_rank(faces: &[u64], lower: &[u64], field: Field) -> usize {
    if faces.is_empty() || lower.is_empty() {
        return 0;
    }
    let index = |f: u64| lower.binary_search(&f).expect("complex is closed under taking faces");
    match field {
        Field::Gf2 => {
            let words = lower.len().div_ceil(64);
            let mut rows: Vec<Vec<u64>> = faces
                .iter()
                .map(|&sigma| {
                    let mut row = vec![0u64; words];
                    let mut rest = sigma;
                    while rest != 0 {
                        let j = index(sigma & !(rest & rest.wrapping_neg()));
                        row[j / 64] ^= 1 << (j % 64);
                        rest &= rest - 1;
                    }
                    row
                })
                .collect();
            gf2_rank(&mut rows, lower.len())
        }
        Field::Q => {
            let rows: Vec<Vec<i128>> = faces
                .iter()
                .map(|&sigma| {
                    let mut row = vec![0i128; lower.len()];
                    let mut rest = sigma;
                    let mut sign = 1;
                    while rest != 0 {
                        row[index(sigma & !(rest & rest.wrapping_neg()))] = sign;
                        sign = -sign;
                        rest &= rest - 1;
                    }
                    row
                })
                .collect();
            rational_rank(rows)
        }
    }
}

/// Rank over GF(2) of bit-packed rows with `cols` columns.
pub(crate) fn gf2_rank(rows: &mut [Vec<u64>], cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows[rank + 1..].iter_mut() {
            if row[w] & b != 0 {
                for (x, y) in row[w..].iter_mut().zip(&pivot[w..]) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the rationals of an integer matrix, exactly.
pub(crate) fn rational_rank(rows: Vec<Vec<i128>>) -> usize {
    match bareiss_rank(rows.clone()) {
        Some(r) => r,
        None => {
            let big = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            bareiss_rank(big).expect("arbitrary precision cannot overflow")
        }
    }
}

/// Fraction-free elimination; `None` signals arithmetic overflow.
fn bareiss_rank<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + for<'a> std::ops::Div<&'a T, Output = T>,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            for j in c + 1..cols {
                let v = pivot_row[c].checked_mul(&row[j])?.checked_sub(&row[c].checked_mul(&pivot_row[j])?)?;
                row[j] = v / &prev;
            }
            row[c] = T::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    Some(rank)
}
