//! Device-independent dimension witnessing for prepare-and-measure behaviours.
//!
//! A prepare-and-measure experiment is described by a *behaviour*: the table of
//! conditional probabilities `P(b|xy)` of the measurer outputting `b` given the
//! preparer's input `x` and the measurer's input `y`. Arranged as an
//! `|X| × |Y||B|` matrix, the trace norm of this table lower-bounds the
//! dimension of the (classical or quantum) messages needed to produce it, even
//! when the two devices share randomness:
//!
//! ```text
//! d ≥ ‖P‖₁² / (|X||Y|)
//! ```
//!
//! This crate implements that bound and the machinery around it:
//!
//! - [`linalg`] — dense real/complex matrices, SVD, Hermitian
//!   eigendecomposition, Schatten norms and the Hilbert–Schmidt inner product;
//! - [`behaviour`] — behaviours, witnesses, the dimension bound, witness
//!   bounds (including shifts along the normalization directions) and
//!   SVD-derived witness construction;
//! - [`classical`] — deterministic strategies, vertex enumeration of the
//!   classical polytope, brute-force witness maximization and the block
//!   construction attaining the bound;
//! - [`quantum`] — quantum models (states + POVMs), their behaviours, support
//!   dimension and Helstrom two-state discrimination;
//! - [`qrac`] — random access codes: the index matrix `F(m,n)`, its witness,
//!   the associated partial isometry, the dimension-dependent success bound
//!   and the tight qubit models for `n = 2, 3`;
//! - [`statedisc`] — the N-state Fourier discrimination game: closed-form
//!   optimal qubit behaviour, its witness, quantum/classical bounds and the
//!   classical-to-quantum ratio series.
//!
//! The crate is `no_std` (it requires `alloc`); all types are immutable values
//! and all operations are pure functions, so everything is safe to use from
//! multiple threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod behaviour;
pub mod classical;
mod error;
pub mod linalg;
mod math;
pub mod qrac;
pub mod quantum;
pub mod statedisc;

pub use behaviour::{svd_witness, Behaviour, DimensionBoundReport, Scenario, Witness};
pub use classical::{
    classical_witness_max, enumerate_vertices, extremal_block_behaviour, DeterministicStrategy,
};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, HermitianEigen, RealMatrix, SpectralSummary};
pub use quantum::{helstrom_measurement, helstrom_success_probability, QuantumModel};
