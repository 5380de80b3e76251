//! Cyclic Jacobi eigendecomposition for Hermitian matrices.
//!
//! Each rotation first strips the phase of the pivot entry, reducing the 2×2
//! block to a real symmetric one, then applies the classic Jacobi angle. The
//! accumulated unitary keeps the eigenvectors orthonormal to machine
//! precision.

use alloc::vec::Vec;

use super::{Complex64, ComplexMatrix, HermitianEigen};
use crate::error::{Error, Result};
use crate::math;

/// How far (relative to `max(1, ‖M‖_max)`) an input may be from Hermitian
/// symmetry before it is rejected.
const HERMITIAN_TOLERANCE: f64 = 1e-10;
/// Off-diagonal entries below this times the Frobenius norm are not rotated.
const OFF_TOLERANCE: f64 = 1e-15;

const MAX_SWEEPS: usize = 100;

pub(super) fn compute(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch {
            context: "hermitian eigendecomposition",
            expected: (m.rows(), m.rows()),
            found: (m.rows(), m.cols()),
        });
    }
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOLERANCE * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }

    let n = m.rows();
    // Work on the Hermitian average so representation noise cannot drift.
    let mut a: Vec<Complex64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push((m.get(i, j) + m.get(j, i).conj()) * 0.5);
        }
    }
    let mut q: Vec<Complex64> = (0..n * n)
        .map(|k| Complex64::new(if k % (n + 1) == 0 { 1.0 } else { 0.0 }, 0.0))
        .collect();

    // Invariant under the rotations, so computed once.
    let fnorm = math::sqrt(a.iter().map(|z| z.norm_sqr()).sum());
    let threshold = OFF_TOLERANCE * fnorm;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for pivot_q in (p + 1)..n {
                let g = a[p * n + pivot_q];
                let ag = math::hypot(g.re, g.im);
                if ag <= threshold {
                    continue;
                }
                rotated = true;
                rotate(&mut a, &mut q, n, p, pivot_q, g, ag);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            context: "hermitian eigendecomposition",
        });
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eigenvalues[j].partial_cmp(&eigenvalues[i]).expect("finite"));
    eigenvalues = order.iter().map(|&i| eigenvalues[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| q[i * n + order[j]]);

    Ok(HermitianEigen::from_parts(eigenvalues, vectors))
}

/// Unitary similarity `A ← U* A U`, `Q ← Q U`, where `U` is the identity
/// outside rows/columns `p`, `q` and
///
/// ```text
/// U[[p,q],[p,q]] = [[ c    ,  s     ],
///                   [-s·w̄ ,  c·w̄  ]]        with w = A[p][q] / |A[p][q]|,
/// ```
///
/// the angle chosen to annihilate `A[p][q]`.
fn rotate(
    a: &mut [Complex64],
    q: &mut [Complex64],
    n: usize,
    p: usize,
    qq: usize,
    g: Complex64,
    ag: f64,
) {
    let alpha = a[p * n + p].re;
    let beta = a[qq * n + qq].re;
    let w = g / ag;

    let tau = (beta - alpha) / (2.0 * ag);
    let t = if tau >= 0.0 {
        1.0 / (tau + math::hypot(1.0, tau))
    } else {
        -1.0 / (-tau + math::hypot(1.0, tau))
    };
    let c = 1.0 / math::hypot(1.0, t);
    let s = c * t;

    let ws = w * s;
    let wc = w * c;

    // columns: B ← B U
    for i in 0..n {
        let x = a[i * n + p];
        let y = a[i * n + qq];
        a[i * n + p] = x * c - y * ws.conj();
        a[i * n + qq] = x * s + y * wc.conj();
    }
    // rows: B ← U* B
    for j in 0..n {
        let x = a[p * n + j];
        let y = a[qq * n + j];
        a[p * n + j] = x * c - y * ws;
        a[qq * n + j] = x * s + y * wc;
    }
    // the pivot pair is annihilated by construction; clear the residue
    a[p * n + qq] = Complex64::new(0.0, 0.0);
    a[qq * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[qq * n + qq].im = 0.0;

    // eigenvectors: Q ← Q U
    for i in 0..n {
        let x = q[i * n + p];
        let y = q[i * n + qq];
        q[i * n + p] = x * c - y * ws.conj();
        q[i * n + qq] = x * s + y * wc.conj();
    }
}
