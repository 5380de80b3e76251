//! One-sided Jacobi SVD.
//!
//! The matrices in this crate are small and well-conditioned, so we trade
//! asymptotic speed for simplicity and accuracy: cyclic one-sided Jacobi
//! rotations orthogonalize the columns of the (tall) input; the column norms
//! are the singular values, the normalized columns the left vectors and the
//! accumulated rotations the right vectors.

use alloc::vec;
use alloc::vec::Vec;

use super::{RealMatrix, SpectralSummary};
use crate::error::{Error, Result};
use crate::math;

/// Column pairs count as orthogonal once their normalized inner product drops
/// below this.
const ORTHO_TOLERANCE: f64 = 1e-14;
/// Singular values below `σ_max` times this are treated as exactly zero when
/// normalizing left vectors.
const ZERO_SIGMA: f64 = 1e-12;
/// Coordinates below this threshold are skipped when locating the leading
/// nonzero entry for the sign convention.
const SIGN_EPS: f64 = 1e-12;

const MAX_SWEEPS: usize = 64;

pub(super) fn compute(m: &RealMatrix) -> Result<SpectralSummary> {
    let mut summary = if m.rows() >= m.cols() {
        compute_tall(m)?
    } else {
        // M = (Mᵀ)ᵀ, so the factors swap roles.
        let t = compute_tall(&m.transpose())?;
        SpectralSummary::from_parts(t.singular_values, t.right, t.left)
    };
    fix_signs(&mut summary);
    Ok(summary)
}

/// Jacobi iteration for `rows >= cols`.
fn compute_tall(m: &RealMatrix) -> Result<SpectralSummary> {
    let rows = m.rows();
    let k = m.cols();

    let mut a: Vec<Vec<f64>> = (0..k)
        .map(|j| (0..rows).map(|i| m.get(i, j)).collect())
        .collect();
    let mut v: Vec<Vec<f64>> = (0..k)
        .map(|j| (0..k).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    // Columns whose norm has collapsed to rounding noise belong to the kernel;
    // without this floor the relative test below would keep rotating them
    // against full-size columns indefinitely.
    let floor = f64::EPSILON * m.frobenius_norm();
    let floor_sqr = floor * floor;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..k {
            for q in (p + 1)..k {
                let (app, aqq, apq) = {
                    let cp = &a[p];
                    let cq = &a[q];
                    (dot(cp, cp), dot(cq, cq), dot(cp, cq))
                };
                if app <= floor_sqr || aqq <= floor_sqr {
                    continue;
                }
                if apq.abs() <= ORTHO_TOLERANCE * math::sqrt(app * aqq) {
                    continue;
                }
                rotated = true;
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + math::hypot(1.0, tau))
                } else {
                    -1.0 / (-tau + math::hypot(1.0, tau))
                };
                let c = 1.0 / math::hypot(1.0, t);
                let s = c * t;
                rotate_pair(&mut a, p, q, c, s);
                rotate_pair(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            context: "singular value decomposition",
        });
    }

    let mut sigma: Vec<f64> = a.iter().map(|col| math::sqrt(dot(col, col))).collect();
    let sigma_max = sigma.iter().fold(0.0_f64, |acc, s| acc.max(*s));

    // Stable order by non-increasing singular value.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| sigma[j].partial_cmp(&sigma[i]).expect("finite"));

    let mut left_cols: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut right_cols: Vec<Vec<f64>> = Vec::with_capacity(k);
    let mut sorted_sigma = Vec::with_capacity(k);
    for &j in &order {
        if sigma[j] > ZERO_SIGMA * sigma_max && sigma[j] > 0.0 {
            left_cols.push(a[j].iter().map(|x| x / sigma[j]).collect());
        } else {
            sigma[j] = 0.0;
            let u = complete_orthonormal(&left_cols, rows);
            left_cols.push(u);
        }
        sorted_sigma.push(sigma[j]);
        right_cols.push(core::mem::take(&mut v[j]));
    }

    Ok(SpectralSummary::from_parts(
        sorted_sigma,
        from_columns(rows, &left_cols),
        from_columns(k, &right_cols),
    ))
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(q);
    let cp = &mut head[p];
    let cq = &mut tail[0];
    for (xp, xq) in cp.iter_mut().zip(cq.iter_mut()) {
        let new_p = c * *xp - s * *xq;
        let new_q = s * *xp + c * *xq;
        *xp = new_p;
        *xq = new_q;
    }
}

/// Unit vector orthogonal to all `established` columns, chosen
/// deterministically: start from the canonical basis vector with the largest
/// residual, orthogonalize twice, normalize.
fn complete_orthonormal(established: &[Vec<f64>], dim: usize) -> Vec<f64> {
    let mut best_i = 0;
    let mut best_residual = -1.0;
    for i in 0..dim {
        let projected: f64 = established.iter().map(|u| u[i] * u[i]).sum();
        let residual = 1.0 - projected;
        if residual > best_residual {
            best_residual = residual;
            best_i = i;
        }
    }
    let mut w = vec![0.0; dim];
    w[best_i] = 1.0;
    for _ in 0..2 {
        for u in established {
            let overlap = dot(u, &w);
            for (wi, ui) in w.iter_mut().zip(u) {
                *wi -= overlap * ui;
            }
        }
    }
    let norm = math::sqrt(dot(&w, &w));
    for wi in &mut w {
        *wi /= norm;
    }
    w
}

fn from_columns(rows: usize, cols: &[Vec<f64>]) -> RealMatrix {
    RealMatrix::from_fn(rows, cols.len(), |i, j| cols[j][i])
}

/// Flip singular vector pairs so each left vector's first nonzero coordinate
/// is positive.
fn fix_signs(summary: &mut SpectralSummary) {
    for j in 0..summary.singular_values.len() {
        let lead = (0..summary.left.rows()).find(|&i| summary.left.get(i, j).abs() > SIGN_EPS);
        if let Some(i) = lead {
            if summary.left.get(i, j) < 0.0 {
                negate_column(&mut summary.left, j);
                negate_column(&mut summary.right, j);
            }
        }
    }
}

fn negate_column(m: &mut RealMatrix, j: usize) {
    let cols = m.cols;
    for i in 0..m.rows {
        m.entries[i * cols + j] = -m.entries[i * cols + j];
    }
}
