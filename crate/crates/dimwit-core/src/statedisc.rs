//! The N-state Fourier discrimination game.
//!
//! The preparer receives `x ∈ {0,…,N−1}` and sends one of `N` Fourier states;
//! the measurer receives a pair `(y, z)` with `y < z` and must decide, with
//! output `b ∈ {+1, −1}`, whether `x = y` or `x = z`. Pairs are enumerated in
//! lexicographic order; output `+1` is stored at column offset 0 and `−1` at
//! offset 1.
//!
//! For qubit messages the pairwise Helstrom strategy admits the closed form
//! (ignoring the promise, with all labels 0-based)
//!
//! ```text
//! P(b = ±1 | x, (y,z)) = ½ (1 ∓ sin[π(2x − y − z)/N]),
//! ```
//!
//! whose matrix has rank 3 and saturates the trace-norm dimension bound at
//! `d = 2`. The associated witness separates qubit behaviours from
//! one-bit-plus-shared-randomness ones for every even `N`; the
//! classical-to-quantum value ratio tends to `½ + 4/π²`.

use alloc::format;
use alloc::vec::Vec;

use crate::behaviour::{Behaviour, Scenario, Witness};
use crate::error::{Error, Result};
use crate::linalg::{Complex64, ComplexMatrix, RealMatrix};
use crate::math;
use crate::quantum::{helstrom_measurement, QuantumModel};

/// The discrimination scenario for `N` preparations: alphabet sizes
/// `(N, N(N−1)/2, 2)` with lexicographic pair order and `+1` stored before
/// `−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscriminationScenario {
    n: usize,
}

impl DiscriminationScenario {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "the discrimination game needs at least 3 states, got {n}"
            )));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn scenario(&self) -> Result<Scenario> {
        Scenario::new(self.n, self.pair_count(), 2)
    }

    /// All pairs `(y, z)` with `y < z`, in storage order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |y| ((y + 1)..n).map(move |z| (y, z)))
    }
}

/// The `N` Fourier states `|ψ_x⟩ = (1/√d) Σ_k exp(i 2πkx/N) |k⟩` as density
/// matrices, for `1 ≤ d ≤ N`.
///
/// At `d = 2` the pairwise overlaps are `|⟨ψ_y|ψ_z⟩|² = cos²(π(y−z)/N)`.
pub fn fourier_states(n: usize, d: usize) -> Result<Vec<ComplexMatrix>> {
    if n == 0 || d == 0 || d > n {
        return Err(Error::Domain(format!(
            "fourier states need 1 <= d <= N, got d = {d}, N = {n}"
        )));
    }
    let inv_root = 1.0 / math::sqrt(d as f64);
    Ok((0..n)
        .map(|x| {
            let amplitudes: Vec<Complex64> = (0..d)
                .map(|k| {
                    let phase = 2.0 * math::PI * (k * x) as f64 / n as f64;
                    Complex64::new(math::cos(phase) * inv_root, math::sin(phase) * inv_root)
                })
                .collect();
            ComplexMatrix::from_fn(d, d, |i, j| amplitudes[i] * amplitudes[j].conj())
        })
        .collect())
}

/// The pairwise-Helstrom model: Fourier states plus, for every pair `(y, z)`,
/// the measurement optimally discriminating `ρ_y` from `ρ_z`.
///
/// Outcome `+1` carries the strictly positive eigenspace of `ρ_y − ρ_z`
/// (i.e. it is the "x = y" answer); with that labeling the generated `d = 2`
/// behaviour reproduces [`closed_form_behaviour`] cellwise.
pub fn discrimination_model(n: usize, d: usize) -> Result<QuantumModel> {
    let game = DiscriminationScenario::new(n)?;
    if d < 2 || d > n {
        return Err(Error::Domain(format!(
            "the discrimination model needs 2 <= d <= N, got d = {d}, N = {n}"
        )));
    }
    let states = fourier_states(n, d)?;
    let mut povms = Vec::with_capacity(game.pair_count());
    for (y, z) in game.pairs() {
        let (plus, minus) = helstrom_measurement(&states[y], &states[z])?;
        povms.push(alloc::vec![plus, minus]);
    }
    QuantumModel::new(d, states, povms)
}

/// The closed-form optimal qubit behaviour, tabulated over all `(x, y, z)`
/// with the promise ignored.
///
/// Its three nonzero singular values are `{N√(N−1)/2, N√(N−1)/4, N√(N−1)/4}`,
/// so `‖P‖₁ = N√(N−1)` and the dimension bound is saturated at `d = 2`.
pub fn closed_form_behaviour(n: usize) -> Result<Behaviour> {
    let game = DiscriminationScenario::new(n)?;
    let pairs: Vec<(usize, usize)> = game.pairs().collect();
    let matrix = RealMatrix::from_fn(n, 2 * pairs.len(), |x, col| {
        let (y, z) = pairs[col / 2];
        let s = game_sine(n, x, y, z);
        if col % 2 == 0 {
            0.5 * (1.0 - s)
        } else {
            0.5 * (1.0 + s)
        }
    });
    Behaviour::new(game.scenario()?, matrix)
}

/// The discrimination witness
///
/// ```text
/// G(b = ±1 | x, (y,z)) = 2/(N√(N−1)) · (½ ∓ sin[π(2x − y − z)/N]),
/// ```
///
/// a rank-3 partial isometry (`‖G‖_∞ = 1`) matching the SVD witness of the
/// closed-form behaviour.
pub fn discrimination_witness(n: usize) -> Result<Witness> {
    let game = DiscriminationScenario::new(n)?;
    let pairs: Vec<(usize, usize)> = game.pairs().collect();
    let scale = 2.0 / (n as f64 * math::sqrt((n - 1) as f64));
    let matrix = RealMatrix::from_fn(n, 2 * pairs.len(), |x, col| {
        let (y, z) = pairs[col / 2];
        let s = game_sine(n, x, y, z);
        if col % 2 == 0 {
            scale * (0.5 - s)
        } else {
            scale * (0.5 + s)
        }
    });
    Witness::new(game.scenario()?, matrix)
}

#[inline]
fn game_sine(n: usize, x: usize, y: usize, z: usize) -> f64 {
    math::sin(math::PI * (2.0 * x as f64 - y as f64 - z as f64) / n as f64)
}

/// Maximum witness value over qubit behaviours: `B_Q = N√(N−1)`.
pub fn quantum_bound(n: usize) -> Result<f64> {
    DiscriminationScenario::new(n)?;
    Ok(n as f64 * math::sqrt((n - 1) as f64))
}

/// Maximum witness value over one-bit classical behaviours, for even `N`:
///
/// ```text
/// B_C = 2/(N√(N−1)) · (N²(N−1)/4 + 2/sin(π/N) · Σ_{y<z} |cos[π(1+y+z)/N]|).
/// ```
///
/// Odd `N` is rejected: the closed form is established only for even `N`,
/// where the optimum assigns one message to `N/2` cyclically consecutive
/// inputs.
pub fn classical_bound(n: usize) -> Result<f64> {
    let game = DiscriminationScenario::new(n)?;
    if !n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "the classical bound formula covers even N only, got {n}"
        )));
    }
    // 0-based pair labels give the same sum as 1-based ones: the summand is
    // invariant under shifting all labels by one.
    let cosine_sum: f64 = game
        .pairs()
        .map(|(y, z)| math::cos(math::PI * (1 + y + z) as f64 / n as f64).abs())
        .sum();
    let nf = n as f64;
    let scale = 2.0 / (nf * math::sqrt(nf - 1.0));
    Ok(scale * (nf * nf * (nf - 1.0) / 4.0 + 2.0 / math::sin(math::PI / nf) * cosine_sum))
}

/// Witness bound for general message dimension: `N√(d(N−1)/2)`.
///
/// Reduces to [`quantum_bound`] at `d = 2`.
pub fn qd_bound(n: usize, d: usize) -> Result<f64> {
    DiscriminationScenario::new(n)?;
    if d == 0 {
        return Err(Error::Domain(alloc::string::String::from(
            "dimension must be at least 1",
        )));
    }
    let nf = n as f64;
    Ok(nf * math::sqrt(d as f64 * (nf - 1.0) / 2.0))
}

/// The quadratic and linear promise-cell statistics
///
/// ```text
/// W_N = Σ_{y<z} (P(+1|x=y) − P(+1|x=z))²,
/// V_N = Σ_{y<z}  P(+1|x=y) − P(+1|x=z),
/// ```
///
/// each read within the pair's own column block.
pub fn wn_vn(behaviour: &Behaviour, n: usize) -> Result<(f64, f64)> {
    let game = DiscriminationScenario::new(n)?;
    if behaviour.scenario() != game.scenario()? {
        return Err(Error::Validation(format!(
            "behaviour scenario does not match the N = {n} discrimination game"
        )));
    }
    let mut w = 0.0;
    let mut v = 0.0;
    for (idx, (y, z)) in game.pairs().enumerate() {
        let diff = behaviour.prob(y, idx, 0) - behaviour.prob(z, idx, 0);
        w += diff * diff;
        v += diff;
    }
    Ok((w, v))
}

/// One row of the classical-to-quantum ratio table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRow {
    pub n: usize,
    pub classical: f64,
    pub quantum: f64,
    pub ratio: f64,
}

/// `B_C`, `B_Q` and their ratio for every even `N` from 4 to `max_n`.
///
/// Formula values throughout — the brute-force cross-check lives in the test
/// suite, where it is confined to small `N`. Every ratio is below 1 and the
/// sequence approaches [`asymptotic_ratio`].
pub fn ratio_series(max_n: usize) -> Result<Vec<RatioRow>> {
    if max_n < 4 || !max_n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "the ratio series needs an even maximum N of at least 4, got {max_n}"
        )));
    }
    (4..=max_n)
        .step_by(2)
        .map(|n| {
            let classical = classical_bound(n)?;
            let quantum = quantum_bound(n)?;
            Ok(RatioRow {
                n,
                classical,
                quantum,
                ratio: classical / quantum,
            })
        })
        .collect()
}

/// The limit of the classical-to-quantum ratio: `½ + 4/π² ≈ 0.9053`.
pub fn asymptotic_ratio() -> f64 {
    0.5 + 4.0 / (math::PI * math::PI)
}
