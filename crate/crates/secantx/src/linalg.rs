//! Exact matrix rank over the rationals or a prime field.
//!
//! The rational path runs a fraction-free sparse elimination on integer rows:
//! cross-multiplied row updates followed by a gcd division keep entries integral,
//! so the computed rank is the rank over the rationals with no rounding anywhere.
//! Entries that threaten to overflow i64 trigger a restart in big integers.

use crate::field::FieldSpec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse column: (row index, nonzero entry) pairs sorted by row.
pub type SparseCol = Vec<(usize, i64)>;

pub fn rank(cols: &[SparseCol], nrows: usize, field: &FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_rational(cols, nrows),
        FieldSpec::PrimeField(2) => rank_gf2(cols, nrows),
        FieldSpec::PrimeField(p) => rank_mod_p(cols, nrows, *p),
    }
}

pub fn rank_rational(cols: &[SparseCol], nrows: usize) -> usize {
    let rows = transpose(cols, nrows);
    match rank_int_sparse_i64(rows.clone()) {
        Some(r) => r,
        None => rank_int_sparse_big(rows),
    }
}

fn transpose(cols: &[SparseCol], nrows: usize) -> Vec<Vec<(usize, i64)>> {
    let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nrows];
    for (c, col) in cols.iter().enumerate() {
        for &(r, v) in col {
            debug_assert!(r < nrows && v != 0);
            rows[r].push((c, v));
        }
    }
    rows
}

const OVERFLOW_GUARD: i64 = 1 << 40;

/// Sparse integer elimination; None when entries outgrow the i64 comfort zone.
fn rank_int_sparse_i64(mut rows: Vec<Vec<(usize, i64)>>) -> Option<usize> {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    while !rows.is_empty() {
        // pivot choice: smallest |value|, then shortest row
        let (mut pr, mut pc, mut pv) = (usize::MAX, usize::MAX, i64::MAX);
        for (i, row) in rows.iter().enumerate() {
            for &(c, v) in row {
                let a = v.abs();
                if a < pv.abs() || (a == pv.abs() && rows[i].len() < rows.get(pr).map_or(usize::MAX, |r| r.len())) {
                    pr = i;
                    pc = c;
                    pv = v;
                }
            }
            if pv.abs() == 1 && row.len() <= 2 {
                break; // good enough pivot
            }
        }
        let pivot_row = rows.swap_remove(pr);
        rank += 1;
        let mut next: Vec<Vec<(usize, i64)>> = Vec::with_capacity(rows.len());
        for row in rows.into_iter() {
            let coeff = row.iter().find(|&&(c, _)| c == pc).map(|&(_, v)| v);
            match coeff {
                None => next.push(row),
                Some(a) => {
                    let merged = row_combine(&row, pv, &pivot_row, a, pc)?;
                    if !merged.is_empty() {
                        next.push(merged);
                    }
                }
            }
        }
        rows = next;
    }
    Some(rank)
}

/// pv * row - a * pivot_row, entry at pc removed, divided by the gcd.
fn row_combine(
    row: &[(usize, i64)],
    pv: i64,
    pivot_row: &[(usize, i64)],
    a: i64,
    pc: usize,
) -> Option<Vec<(usize, i64)>> {
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    let mut g: i64 = 0;
    while i < row.len() || j < pivot_row.len() {
        let (c, v) = match (row.get(i), pivot_row.get(j)) {
            (Some(&(c1, v1)), Some(&(c2, v2))) if c1 == c2 => {
                i += 1;
                j += 1;
                (c1, (v1 as i128) * (pv as i128) - (v2 as i128) * (a as i128))
            }
            (Some(&(c1, v1)), Some(&(c2, _))) if c1 < c2 => {
                i += 1;
                (c1, (v1 as i128) * (pv as i128))
            }
            (Some(&(c1, v1)), None) => {
                i += 1;
                (c1, (v1 as i128) * (pv as i128))
            }
            (_, Some(&(c2, v2))) => {
                j += 1;
                (c2, -(v2 as i128) * (a as i128))
            }
            (None, None) => unreachable!(),
        };
        if c == pc || v == 0 {
            continue;
        }
        if v.unsigned_abs() > OVERFLOW_GUARD as u128 {
            return None;
        }
        let v = v as i64;
        g = g.gcd(&v);
        out.push((c, v));
    }
    if g > 1 {
        for e in &mut out {
            e.1 /= g;
        }
    }
    Some(out)
}

/// Same elimination with arbitrary-precision entries.
fn rank_int_sparse_big(rows64: Vec<Vec<(usize, i64)>>) -> usize {
    let mut rows: Vec<Vec<(usize, BigInt)>> = rows64
        .into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    while !rows.is_empty() {
        let (mut pr, mut pc) = (0, rows[0][0].0);
        let mut pva: BigInt = rows[0][0].1.abs();
        for (i, row) in rows.iter().enumerate() {
            for (c, v) in row {
                if v.abs() < pva {
                    pr = i;
                    pc = *c;
                    pva = v.abs();
                }
            }
        }
        let pivot_row = rows.swap_remove(pr);
        let pv = pivot_row
            .iter()
            .find(|(c, _)| *c == pc)
            .map(|(_, v)| v.clone())
            .unwrap();
        rank += 1;
        let mut next = Vec::with_capacity(rows.len());
        for row in rows.into_iter() {
            let coeff = row.iter().find(|(c, _)| *c == pc).map(|(_, v)| v.clone());
            match coeff {
                None => next.push(row),
                Some(a) => {
                    let mut out: Vec<(usize, BigInt)> = Vec::new();
                    let (mut i, mut j) = (0, 0);
                    let mut g = BigInt::zero();
                    while i < row.len() || j < pivot_row.len() {
                        let (c, v) = match (row.get(i), pivot_row.get(j)) {
                            (Some((c1, v1)), Some((c2, v2))) if c1 == c2 => {
                                i += 1;
                                j += 1;
                                (*c1, v1 * &pv - v2 * &a)
                            }
                            (Some((c1, v1)), Some((c2, _))) if c1 < c2 => {
                                i += 1;
                                (*c1, v1 * &pv)
                            }
                            (Some((c1, v1)), None) => {
                                i += 1;
                                (*c1, v1 * &pv)
                            }
                            (_, Some((c2, v2))) => {
                                j += 1;
                                (*c2, -(v2 * &a))
                            }
                            (None, None) => unreachable!(),
                        };
                        if c == pc || v.is_zero() {
                            continue;
                        }
                        g = g.gcd(&v);
                        out.push((c, v));
                    }
                    if g > BigInt::from(1) {
                        for e in &mut out {
                            e.1 = &e.1 / &g;
                        }
                    }
                    if !out.is_empty() {
                        next.push(out);
                    }
                }
            }
        }
        rows = next;
    }
    rank
}

/// Dense elimination over GF(2) on bit-packed rows.
pub fn rank_gf2(cols: &[SparseCol], nrows: usize) -> usize {
    let ncols = cols.len();
    let words = ncols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0u64; words]; nrows];
    for (c, col) in cols.iter().enumerate() {
        for &(r, v) in col {
            if v.rem_euclid(2) == 1 {
                rows[r][c / 64] ^= 1 << (c % 64);
            }
        }
    }
    let mut rank = 0;
    let mut used = vec![false; nrows];
    for c in 0..ncols {
        let (w, b) = (c / 64, c % 64);
        let pivot = (0..nrows).find(|&r| !used[r] && rows[r][w] >> b & 1 == 1);
        if let Some(p) = pivot {
            used[p] = true;
            rank += 1;
            let pivot_row = rows[p].clone();
            for r in 0..nrows {
                if r != p && rows[r][w] >> b & 1 == 1 {
                    for k in 0..words {
                        rows[r][k] ^= pivot_row[k];
                    }
                }
            }
        }
    }
    rank
}

/// Dense elimination over GF(p).
pub fn rank_mod_p(cols: &[SparseCol], nrows: usize, p: u64) -> usize {
    let ncols = cols.len();
    let mut rows: Vec<Vec<u64>> = vec![vec![0u64; ncols]; nrows];
    for (c, col) in cols.iter().enumerate() {
        for &(r, v) in col {
            rows[r][c] = v.rem_euclid(p as i64) as u64;
        }
    }
    let mut rank = 0;
    let mut used = vec![false; nrows];
    for c in 0..ncols {
        let pivot = (0..nrows).find(|&r| !used[r] && rows[r][c] != 0);
        let pr = match pivot {
            Some(pr) => pr,
            None => continue,
        };
        used[pr] = true;
        rank += 1;
        let inv = mod_inverse(rows[pr][c], p);
        let pivot_row: Vec<u64> = rows[pr].iter().map(|&x| x * inv % p).collect();
        for r in 0..nrows {
            if r != pr && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..ncols {
                    rows[r][k] = (rows[r][k] + (p - pivot_row[k] * f % p)) % p;
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};

    fn dense_to_cols(m: &[Vec<i64>]) -> (Vec<SparseCol>, usize) {
        let nrows = m.len();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut cols: Vec<SparseCol> = vec![Vec::new(); ncols];
        for (r, row) in m.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    cols[c].push((r, v));
                }
            }
        }
        (cols, nrows)
    }

    // reference: dense Gaussian elimination in exact rational arithmetic
    fn naive_rank_rational(m: &[Vec<i64>]) -> usize {
        let nrows = m.len();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut a: Vec<Vec<BigRational>> = m
            .iter()
            .map(|row| row.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
            .collect();
        let zero = BigRational::from(BigInt::from(0));
        let mut rank = 0;
        let mut row = 0;
        for col in 0..ncols {
            let pivot = (row..nrows).find(|&r| a[r][col] != zero);
            if let Some(p) = pivot {
                a.swap(row, p);
                let pv = a[row][col].clone();
                for r in 0..nrows {
                    if r != row && a[r][col] != zero {
                        let f = &a[r][col] / &pv;
                        for c in col..ncols {
                            let sub = &f * &a[row][c];
                            a[r][c] = &a[r][c] - &sub;
                        }
                    }
                }
                row += 1;
                rank += 1;
                if row == nrows {
                    break;
                }
            }
        }
        rank
    }

    fn naive_rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
        let nrows = m.len();
        let ncols = m.first().map_or(0, |r| r.len());
        let mut a: Vec<Vec<u64>> = m
            .iter()
            .map(|row| row.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..ncols {
            let pivot = (row..nrows).find(|&r| a[r][col] != 0);
            if let Some(pr) = pivot {
                a.swap(row, pr);
                let inv = mod_inverse(a[row][col], p);
                for c in 0..ncols {
                    a[row][c] = a[row][c] * inv % p;
                }
                for r in 0..nrows {
                    if r != row && a[r][col] != 0 {
                        let f = a[r][col];
                        for c in 0..ncols {
                            a[r][c] = (a[r][c] + (p - a[row][c] * f % p)) % p;
                        }
                    }
                }
                row += 1;
                rank += 1;
                if row == nrows {
                    break;
                }
            }
        }
        rank
    }

    #[test]
    fn ranks_match_reference_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _trial in 0..200 {
            let nrows = rng.gen_range(1..=12);
            let ncols = rng.gen_range(1..=12);
            let m: Vec<Vec<i64>> = (0..nrows)
                .map(|_| {
                    (0..ncols)
                        .map(|_| {
                            if rng.gen_bool(0.5) {
                                0
                            } else {
                                rng.gen_range(-3..=3)
                            }
                        })
                        .collect()
                })
                .collect();
            let (cols, nr) = dense_to_cols(&m);
            assert_eq!(
                rank(&cols, nr, &FieldSpec::Rationals),
                naive_rank_rational(&m)
            );
            assert_eq!(rank(&cols, nr, &FieldSpec::PrimeField(2)), naive_rank_mod_p(&m, 2));
            assert_eq!(rank(&cols, nr, &FieldSpec::PrimeField(5)), naive_rank_mod_p(&m, 5));
        }
    }

    #[test]
    fn big_restart_path_is_exact() {
        // a matrix engineered to overflow the i64 guard: repeated large coprime entries
        let n = 12;
        let mut m = vec![vec![0i64; n]; n];
        let mut val: i64 = 1;
        for r in 0..n {
            for c in 0..n {
                val = val.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                m[r][c] = val >> 33; // ~30-bit entries
            }
        }
        let (cols, nr) = dense_to_cols(&m);
        assert_eq!(rank_rational(&cols, nr), naive_rank_rational(&m));
    }

    #[test]
    fn rank_of_known_matrices() {
        // boundary of a hollow triangle: rank 2
        let m = vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]];
        let (cols, nr) = dense_to_cols(&m);
        for f in [
            FieldSpec::Rationals,
            FieldSpec::PrimeField(2),
            FieldSpec::PrimeField(32003),
        ] {
            assert_eq!(rank(&cols, nr, &f), 2);
        }
    }
}
