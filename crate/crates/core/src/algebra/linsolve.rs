//! Exact homogeneous linear systems and intertwiner spaces.

use super::{Field, Matrix};
use crate::error::{Error, Result};

/// Basis of `{x : A x = 0}` for `A` given by rows of length `ncols`.
///
/// Gauss–Jordan elimination over the coefficient field. Pivots are chosen by
/// the cheapest entry in the column, which for rational functions keeps the
/// intermediate degrees small.
pub fn nullspace<T: Field>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    assert!(m.iter().all(|r| r.len() == ncols), "row length must equal ncols");

    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| {
            let nnz = m[i].iter().filter(|x| !x.is_zero()).count();
            m[i][c].weight() * 4 + nnz
        }) else {
            continue;
        };
        m.swap(rank, p);
        let pinv = m[rank][c].inv().expect("pivot is nonzero");
        let support: Vec<usize> = (c..ncols).filter(|&j| !m[rank][j].is_zero()).collect();
        for &j in &support {
            m[rank][j] = m[rank][j].mul(&pinv);
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] = row[j].sub(&f.mul(&pivot_row[j]));
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }

    let mut is_pivot = vec![false; ncols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (k, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = m[k][f].neg();
            }
            v
        })
        .collect()
}

/// Basis of `{M : M A_k = B_k M for all k}`, with `M` of size
/// `target_dim x source_dim`.
///
/// The dimensions are explicit so that an empty generator list still
/// describes a problem (all matrices then intertwine).
pub fn solve_intertwiner_space<T: Field>(
    source: &[Matrix<T>],
    target: &[Matrix<T>],
    source_dim: usize,
    target_dim: usize,
) -> Result<Vec<Matrix<T>>> {
    if source.len() != target.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} source images vs {} target images",
            source.len(),
            target.len()
        )));
    }
    for a in source {
        if a.rows() != source_dim || a.cols() != source_dim {
            return Err(Error::DimensionMismatch(format!(
                "source image is {}x{}, expected {source_dim}x{source_dim}",
                a.rows(),
                a.cols()
            )));
        }
    }
    for b in target {
        if b.rows() != target_dim || b.cols() != target_dim {
            return Err(Error::DimensionMismatch(format!(
                "target image is {}x{}, expected {target_dim}x{target_dim}",
                b.rows(),
                b.cols()
            )));
        }
    }
    let (da, db) = (source_dim, target_dim);
    let unknowns = db * da;
    // m[a][b] is unknown a * da + b
    let mut equations = Vec::new();
    for (a_img, b_img) in source.iter().zip(target) {
        for a in 0..db {
            for c in 0..da {
                let mut row = vec![T::zero(); unknowns];
                // (M A)[a][c] = sum_b m[a][b] A[b][c]
                for b in 0..da {
                    let x = &a_img[(b, c)];
                    if !x.is_zero() {
                        row[a * da + b] = row[a * da + b].add(x);
                    }
                }
                // (B M)[a][c] = sum_b B[a][b] m[b][c]
                for b in 0..db {
                    let x = &b_img[(a, b)];
                    if !x.is_zero() {
                        row[b * da + c] = row[b * da + c].sub(x);
                    }
                }
                equations.push(row);
            }
        }
    }
    Ok(nullspace(&equations, unknowns)
        .into_iter()
        .map(|v| Matrix::new(db, da, v).expect("vector has db * da entries"))
        .collect())
}
