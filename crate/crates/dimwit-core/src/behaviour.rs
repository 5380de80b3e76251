//! Behaviours, witnesses and the trace-norm dimension bound.
//!
//! A behaviour over a scenario `(|X|, |Y|, |B|)` is the probability table
//! `P(b|xy)` arranged as an `|X| × |Y||B|` matrix with column index
//! `y·|B| + b`. Its trace norm bounds the message dimension from below,
//!
//! ```text
//! d ≥ ‖P‖₁² / (|X||Y|),
//! ```
//!
//! and dually every linear functional `⟨P, G⟩` obeys
//! `⟨P, G⟩ ≤ ‖G‖_∞ √(d|X||Y|)` on dimension-`d` behaviours. Both directions
//! are implemented here, together with the shift trick along the
//! normalization directions `A_xy` and the SVD witness construction.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{RealMatrix, RANK_TOLERANCE};
use crate::math;

/// Entries may undershoot zero by at most this much before validation fails;
/// anything in `[-NEGATIVE_CLAMP, 0)` is clamped to zero on load.
pub const NEGATIVE_CLAMP: f64 = 1e-12;

/// How far each output distribution may be from summing to one.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// Slack subtracted before taking the ceiling in the integer dimension bound,
/// so exact attainment does not round up from float noise.
pub const CEILING_SLACK: f64 = 1e-9;

/// Default relative rank cutoff for [`svd_witness`].
pub const DEFAULT_RANK_TOLERANCE: f64 = RANK_TOLERANCE;

/// Alphabet sizes of a prepare-and-measure scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scenario {
    nx: usize,
    ny: usize,
    nb: usize,
}

impl Scenario {
    pub fn new(nx: usize, ny: usize, nb: usize) -> Result<Self> {
        if nx == 0 || ny == 0 || nb == 0 {
            return Err(Error::Domain(format!(
                "scenario alphabets must be nonempty, got ({nx}, {ny}, {nb})"
            )));
        }
        Ok(Self { nx, ny, nb })
    }

    /// Number of preparation inputs `|X|`.
    pub fn nx(&self) -> usize {
        self.nx
    }

    /// Number of measurement inputs `|Y|`.
    pub fn ny(&self) -> usize {
        self.ny
    }

    /// Number of outputs `|B|`.
    pub fn nb(&self) -> usize {
        self.nb
    }

    /// Column index of the `(y, b)` cell.
    #[inline]
    pub fn column(&self, y: usize, b: usize) -> usize {
        y * self.nb + b
    }

    /// Shape of the behaviour/witness matrix: `|X| × |Y||B|`.
    pub fn matrix_shape(&self) -> (usize, usize) {
        (self.nx, self.ny * self.nb)
    }
}

/// A validated probability table `P(b|xy)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Behaviour {
    scenario: Scenario,
    matrix: RealMatrix,
    max_normalization_deviation: f64,
}

impl Behaviour {
    /// Validates a probability table.
    ///
    /// Entries below `-1e-12` or output distributions off unit total by more
    /// than `1e-9` are rejected with the offending `(x, y)` named; negative
    /// entries within the tolerance are clamped to zero.
    pub fn new(scenario: Scenario, matrix: RealMatrix) -> Result<Self> {
        if matrix.shape() != scenario.matrix_shape() {
            return Err(Error::ShapeMismatch {
                context: "behaviour table",
                expected: scenario.matrix_shape(),
                found: matrix.shape(),
            });
        }
        let cols = scenario.ny * scenario.nb;
        let mut entries = matrix.entries().to_vec();
        for x in 0..scenario.nx {
            for y in 0..scenario.ny {
                for b in 0..scenario.nb {
                    let idx = x * cols + scenario.column(y, b);
                    let v = entries[idx];
                    if v < -NEGATIVE_CLAMP {
                        return Err(Error::Validation(format!(
                            "P({b}|x={x},y={y}) = {v} is negative"
                        )));
                    }
                    if v < 0.0 {
                        entries[idx] = 0.0;
                    }
                }
            }
        }
        let matrix = RealMatrix::new(scenario.nx, cols, entries)?;
        let mut max_dev: f64 = 0.0;
        for x in 0..scenario.nx {
            for y in 0..scenario.ny {
                let total: f64 = (0..scenario.nb)
                    .map(|b| matrix.get(x, scenario.column(y, b)))
                    .sum();
                let dev = (total - 1.0).abs();
                if dev > NORMALIZATION_TOLERANCE {
                    return Err(Error::Validation(format!(
                        "outputs for (x={x},y={y}) sum to {total}, not 1"
                    )));
                }
                max_dev = max_dev.max(dev);
            }
        }
        Ok(Self {
            scenario,
            matrix,
            max_normalization_deviation: max_dev,
        })
    }

    /// Validates a flat row-major table with `|X|·|Y|·|B|` entries.
    pub fn from_table(scenario: Scenario, table: Vec<f64>) -> Result<Self> {
        let (rows, cols) = scenario.matrix_shape();
        let matrix = RealMatrix::new(rows, cols, table)?;
        Self::new(scenario, matrix)
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.matrix
    }

    /// `P(b|xy)`.
    #[inline]
    pub fn prob(&self, x: usize, y: usize, b: usize) -> f64 {
        self.matrix.get(x, self.scenario.column(y, b))
    }

    /// Largest deviation of any output distribution from unit total, as
    /// measured at validation time.
    pub fn max_normalization_deviation(&self) -> f64 {
        self.max_normalization_deviation
    }

    /// The trace-norm lower bound on the message dimension.
    pub fn dimension_lower_bound(&self) -> Result<DimensionBoundReport> {
        let trace_norm = self.matrix.trace_norm()?;
        let raw_bound = trace_norm * trace_norm / ((self.scenario.nx * self.scenario.ny) as f64);
        let ceiling = math::ceil(raw_bound - CEILING_SLACK);
        let dimension_lower_bound = if ceiling < 1.0 { 1 } else { ceiling as usize };
        Ok(DimensionBoundReport {
            trace_norm,
            raw_bound,
            dimension_lower_bound,
        })
    }
}

/// Outcome of the trace-norm dimension bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionBoundReport {
    /// `‖P‖₁`.
    pub trace_norm: f64,
    /// `‖P‖₁² / (|X||Y|)`.
    pub raw_bound: f64,
    /// `⌈raw − 1e-9⌉`, clamped to at least 1.
    pub dimension_lower_bound: usize,
}

/// A linear functional `G(b|xy)` on behaviours, stored like a behaviour
/// matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    scenario: Scenario,
    matrix: RealMatrix,
}

impl Witness {
    pub fn new(scenario: Scenario, matrix: RealMatrix) -> Result<Self> {
        if matrix.shape() != scenario.matrix_shape() {
            return Err(Error::ShapeMismatch {
                context: "witness table",
                expected: scenario.matrix_shape(),
                found: matrix.shape(),
            });
        }
        Ok(Self { scenario, matrix })
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.matrix
    }

    /// `G(b|xy)`.
    #[inline]
    pub fn coefficient(&self, x: usize, y: usize, b: usize) -> f64 {
        self.matrix.get(x, self.scenario.column(y, b))
    }

    /// `⟨P, G⟩ = Σ P(b|xy) G(b|xy)`.
    pub fn evaluate(&self, behaviour: &Behaviour) -> Result<f64> {
        self.matrix.inner_product(behaviour.matrix())
    }

    /// Upper bound `‖G‖_∞ √(d·|X||Y|)` on `⟨P, G⟩` over all behaviours of
    /// message dimension `d`.
    pub fn bound(&self, d: usize) -> Result<f64> {
        if d == 0 {
            return Err(Error::Domain(alloc::string::String::from(
                "dimension must be at least 1",
            )));
        }
        let op = self.matrix.operator_norm()?;
        Ok(op * math::sqrt((d * self.scenario.nx * self.scenario.ny) as f64))
    }

    /// The shift-optimized bound
    ///
    /// ```text
    /// ‖G + Σ_{xy} α_xy A_xy‖_∞ √(d|X||Y|) − Σ_{xy} α_xy,
    /// ```
    ///
    /// where `A_xy` has ones in row `x` across the `(y, ·)` block. Since
    /// `⟨P, A_xy⟩ = 1` for every behaviour, this bounds `⟨P, G⟩` over
    /// dimension-`d` behaviours for any choice of shifts. `alpha` is indexed
    /// `x·|Y| + y`.
    pub fn shifted_bound(&self, alpha: &[f64], d: usize) -> Result<f64> {
        if d == 0 {
            return Err(Error::Domain(alloc::string::String::from(
                "dimension must be at least 1",
            )));
        }
        let scenario = self.scenario;
        if alpha.len() != scenario.nx * scenario.ny {
            return Err(Error::Validation(format!(
                "alpha has {} entries, expected |X||Y| = {}",
                alpha.len(),
                scenario.nx * scenario.ny
            )));
        }
        // A_xy is rank one; the shifted matrix is built on the fly.
        let shifted = RealMatrix::from_fn(scenario.nx, scenario.ny * scenario.nb, |x, col| {
            let y = col / scenario.nb;
            self.matrix.get(x, col) + alpha[x * scenario.ny + y]
        });
        let op = shifted.operator_norm()?;
        let total_shift: f64 = alpha.iter().sum();
        Ok(op * math::sqrt((d * scenario.nx * scenario.ny) as f64) - total_shift)
    }
}

/// The witness `G = U Vᵀ` from the reduced SVD of a behaviour.
///
/// Keeping the singular directions above `rank_tolerance · σ_max` gives a
/// partial isometry with `‖G‖_∞ = 1` and `⟨P, G⟩ = ‖P‖₁` up to the discarded
/// tail — the witness that is optimal for `P` whenever `P` saturates the
/// trace-norm dimension bound.
pub fn svd_witness(behaviour: &Behaviour, rank_tolerance: f64) -> Result<Witness> {
    let summary = behaviour.matrix().svd()?;
    let isometry = summary.partial_isometry(rank_tolerance)?;
    Witness::new(behaviour.scenario(), isometry)
}
