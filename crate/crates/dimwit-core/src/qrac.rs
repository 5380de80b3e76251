//! Random access codes.
//!
//! An `(m, n)` random access code encodes a string `x = x₁⋯x_n` of symbols
//! from `{0,…,m−1}` into a single message so that any one symbol can be
//! recovered on demand: the measurer receives `y ∈ {0,…,n−1}` and must output
//! `x_y`. As a prepare-and-measure scenario this is
//! `(|X|, |Y|, |B|) = (mⁿ, n, m)`, and the average success probability of any
//! strategy is the witness value `⟨P, F(m,n)⟩ / (n mⁿ)` of the 0/1 index
//! matrix `F`.
//!
//! Shifting `F` by the right multiple of the all-ones matrix turns it into a
//! partial isometry, which is what makes the dimension-dependent success
//! bound [`rac_bound`] tick.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::behaviour::{Behaviour, Scenario, Witness};
use crate::error::{Error, Result};
use crate::linalg::{Complex64, ComplexMatrix, RealMatrix};
use crate::math;
use crate::quantum::QuantumModel;

/// Largest allowed entry count `mⁿ · mn` for the index-matrix family.
pub const MAX_MATRIX_ENTRIES: u128 = 100_000_000;

/// Alphabet size and string length of a random access code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RacParams {
    m: usize,
    n: usize,
}

impl RacParams {
    /// Requires `m ≥ 2`, `n ≥ 1` and a resulting matrix of at most
    /// [`MAX_MATRIX_ENTRIES`] entries.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!(
                "alphabet size must be at least 2, got {m}"
            )));
        }
        if n < 1 {
            return Err(Error::Domain(alloc::string::String::from(
                "string length must be at least 1",
            )));
        }
        let strings = checked_power(m, n);
        let entries = strings.and_then(|s| s.checked_mul((m * n) as u128));
        match entries {
            Some(count) if count <= MAX_MATRIX_ENTRIES => Ok(Self { m, n }),
            other => Err(Error::SizeExceeded {
                required: other.unwrap_or(u128::MAX),
                cap: MAX_MATRIX_ENTRIES,
            }),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `mⁿ`, the number of encodable strings.
    pub fn string_count(&self) -> usize {
        let mut acc = 1usize;
        for _ in 0..self.n {
            acc *= self.m;
        }
        acc
    }

    /// The prepare-and-measure scenario `(mⁿ, n, m)`.
    pub fn scenario(&self) -> Result<Scenario> {
        Scenario::new(self.string_count(), self.n, self.m)
    }

    /// The `y`-th symbol of string `x`, with the first symbol most
    /// significant — row `x` of the index matrix encodes `x` in big-endian
    /// base `m`.
    #[inline]
    pub fn symbol(&self, x: usize, y: usize) -> usize {
        let mut shift = 1usize;
        for _ in 0..(self.n - 1 - y) {
            shift *= self.m;
        }
        (x / shift) % self.m
    }
}

fn checked_power(base: usize, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// The 0/1 index matrix `F(m,n)` with `F[x, (y,b)] = 1` iff `b = x_y`.
///
/// Every row has exactly `n` ones (one correct answer per question), and the
/// big-endian row convention makes this identical to building the matrix
/// inductively by first symbol: block `v` of `m^{n-1}` rows carries an
/// all-ones column at `(y=0, b=v)` next to a copy of `F(m, n-1)`.
pub fn rac_index_matrix(params: &RacParams) -> RealMatrix {
    let rows = params.string_count();
    RealMatrix::from_fn(rows, params.m * params.n, |x, col| {
        let y = col / params.m;
        let b = col % params.m;
        if params.symbol(x, y) == b {
            1.0
        } else {
            0.0
        }
    })
}

/// The normalized witness `G(m,n) = F(m,n) / (n mⁿ)`, whose value on any
/// behaviour is the average success probability of the code.
pub fn rac_witness(params: &RacParams) -> Result<Witness> {
    let scale = 1.0 / ((params.n * params.string_count()) as f64);
    Witness::new(params.scenario()?, rac_index_matrix(params).scale(scale))
}

/// The uniform shift making `F − a·1` a partial isometry (after rescaling):
/// `a = 1/m − 1/(m√n)`.
pub fn rac_shift_constant(m: usize, n: usize) -> f64 {
    1.0 / m as f64 - 1.0 / (m as f64 * math::sqrt(n as f64))
}

/// The partial isometry `H = (F − a·1) / √(m^{n-1})`.
///
/// `HᵀH` has eigenvalues in `{0, 1}` with `tr(HᵀH) = 1 + n(m−1)`, hence
/// `‖H‖_∞ = 1`.
pub fn rac_isometry(params: &RacParams) -> RealMatrix {
    let a = rac_shift_constant(params.m, params.n);
    let scale = 1.0 / math::sqrt(math::pow(params.m as f64, (params.n - 1) as f64));
    let f = rac_index_matrix(params);
    RealMatrix::from_fn(f.rows(), f.cols(), |i, j| scale * (f.get(i, j) - a))
}

/// The dimension-dependent success bound
///
/// ```text
/// p ≤ 1/m + (√(md) − 1) / (m√n)
/// ```
///
/// for `(m, n)` codes carried by messages of dimension `d`. The raw formula
/// value is returned even when it exceeds 1 (where the bound is vacuous).
pub fn rac_bound(m: usize, n: usize, d: usize) -> Result<f64> {
    if m < 2 || n < 1 || d < 1 {
        return Err(Error::Domain(format!(
            "rac_bound requires m >= 2, n >= 1, d >= 1, got ({m}, {n}, {d})"
        )));
    }
    let (mf, nf, df) = (m as f64, n as f64, d as f64);
    Ok(1.0 / mf + (math::sqrt(mf * df) - 1.0) / (mf * math::sqrt(nf)))
}

/// Average success probability `(1/(n mⁿ)) Σ_{x,y} P(x_y|x,y)`.
///
/// Agrees with `⟨P, G(m,n)⟩` by construction.
pub fn average_success(behaviour: &Behaviour, params: &RacParams) -> Result<f64> {
    check_scenario(behaviour, params)?;
    let mut total = 0.0;
    for x in 0..params.string_count() {
        for y in 0..params.n {
            total += behaviour.prob(x, y, params.symbol(x, y));
        }
    }
    Ok(total / ((params.n * params.string_count()) as f64))
}

/// Worst-case success probability `min_{x,y} P(x_y|x,y)`.
pub fn worst_case_success(behaviour: &Behaviour, params: &RacParams) -> Result<f64> {
    check_scenario(behaviour, params)?;
    let mut worst = f64::INFINITY;
    for x in 0..params.string_count() {
        for y in 0..params.n {
            worst = worst.min(behaviour.prob(x, y, params.symbol(x, y)));
        }
    }
    Ok(worst)
}

fn check_scenario(behaviour: &Behaviour, params: &RacParams) -> Result<()> {
    if behaviour.scenario() != params.scenario()? {
        return Err(Error::Validation(format!(
            "behaviour scenario does not match the ({}, {}) code",
            params.m, params.n
        )));
    }
    Ok(())
}

/// The qubit model attaining [`rac_bound`] for binary codes of length 2 or 3.
///
/// Preparations are pure states with Bloch vector `(±1, …, ±1)/√n`, the sign
/// of axis `k` being `+` for symbol 0; measurement `y` projects onto the `±`
/// eigenbasis of the `y`-th Bloch axis with the `+` outcome reported as
/// symbol 0. The generated behaviour has average success equal to
/// `rac_bound(2, n, 2)` and trace norm `√(2 · 2ⁿ · n)`, saturating the
/// dimension bound.
pub fn optimal_qrac_model(n: usize) -> Result<QuantumModel> {
    if n != 2 && n != 3 {
        return Err(Error::Domain(format!(
            "closed-form optimal models are implemented for n = 2 and 3, got {n}"
        )));
    }
    let params = RacParams::new(2, n)?;
    let axes = pauli_axes();
    let inv_root = 1.0 / math::sqrt(n as f64);

    let states: Vec<ComplexMatrix> = (0..params.string_count())
        .map(|x| {
            let mut rho = ComplexMatrix::identity(2).scale(Complex64::new(0.5, 0.0));
            for (k, axis) in axes.iter().take(n).enumerate() {
                let sign = if params.symbol(x, k) == 0 { 1.0 } else { -1.0 };
                rho = rho
                    .add(&axis.scale(Complex64::new(0.5 * sign * inv_root, 0.0)))
                    .expect("same shape");
            }
            rho
        })
        .collect();

    let povms: Vec<Vec<ComplexMatrix>> = axes
        .iter()
        .take(n)
        .map(|axis| {
            let half = Complex64::new(0.5, 0.0);
            let plus = ComplexMatrix::identity(2)
                .scale(half)
                .add(&axis.scale(half))
                .expect("same shape");
            let minus = ComplexMatrix::identity(2)
                .scale(half)
                .sub(&axis.scale(half))
                .expect("same shape");
            vec![plus, minus]
        })
        .collect();

    QuantumModel::new(2, states, povms)
}

fn pauli_axes() -> [ComplexMatrix; 3] {
    let z = |re: f64, im: f64| Complex64::new(re, im);
    [
        ComplexMatrix::from_fn(2, 2, |i, j| if i != j { z(1.0, 0.0) } else { z(0.0, 0.0) }),
        ComplexMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => z(0.0, -1.0),
            (1, 0) => z(0.0, 1.0),
            _ => z(0.0, 0.0),
        }),
        ComplexMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => z(1.0, 0.0),
            (1, 1) => z(-1.0, 0.0),
            _ => z(0.0, 0.0),
        }),
    ]
}
