//! Shared generators and oracles for the integration suites.

#![allow(dead_code)]

use dimwit_core::linalg::{Complex64, ComplexMatrix, RealMatrix};
use dimwit_core::{Behaviour, DeterministicStrategy, QuantumModel, Scenario};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_real_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RealMatrix {
    RealMatrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

/// Independent uniform output distributions for every `(x, y)`.
pub fn random_behaviour(rng: &mut ChaCha8Rng, scenario: Scenario) -> Behaviour {
    let mut table = Vec::with_capacity(scenario.nx() * scenario.ny() * scenario.nb());
    for _ in 0..scenario.nx() * scenario.ny() {
        let weights: Vec<f64> = (0..scenario.nb())
            .map(|_| rng.random::<f64>() + 1e-6)
            .collect();
        let total: f64 = weights.iter().sum();
        table.extend(weights.iter().map(|w| w / total));
    }
    Behaviour::from_table(scenario, table).expect("normalized rows")
}

pub fn random_strategy(
    rng: &mut ChaCha8Rng,
    scenario: Scenario,
    d: usize,
) -> DeterministicStrategy {
    let coding = (0..scenario.nx()).map(|_| rng.random_range(0..d)).collect();
    let decoding = (0..d)
        .map(|_| {
            (0..scenario.ny())
                .map(|_| rng.random_range(0..scenario.nb()))
                .collect()
        })
        .collect();
    DeterministicStrategy::new(d, coding, decoding).expect("in-range tables")
}

/// Normalized complex Gaussian vector as a pure-state density matrix.
pub fn random_pure_state(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let v: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    ComplexMatrix::projector(&v).expect("gaussian vector is nonzero")
}

/// POVM from the eigenbasis projectors of a random Hermitian matrix, each
/// eigendirection assigned to a uniformly random outcome.
pub fn random_povm(rng: &mut ChaCha8Rng, dim: usize, nb: usize) -> Vec<ComplexMatrix> {
    let gauss = ComplexMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let hermitian = gauss
        .add(&gauss.adjoint())
        .unwrap()
        .scale(Complex64::new(0.5, 0.0));
    let eig = hermitian
        .hermitian_eig()
        .expect("hermitian by construction");
    let mut elements = vec![ComplexMatrix::zeros(dim, dim); nb];
    for j in 0..dim {
        let v = eig.eigenvector(j);
        let projector = ComplexMatrix::from_fn(dim, dim, |i, k| v[i] * v[k].conj());
        let outcome = rng.random_range(0..nb);
        elements[outcome] = elements[outcome].add(&projector).unwrap();
    }
    elements
}

pub fn random_model(
    rng: &mut ChaCha8Rng,
    dim: usize,
    nx: usize,
    ny: usize,
    nb: usize,
) -> QuantumModel {
    let states = (0..nx).map(|_| random_pure_state(rng, dim)).collect();
    let povms = (0..ny).map(|_| random_povm(rng, dim, nb)).collect();
    QuantumModel::new(dim, states, povms).expect("generated parts satisfy the invariants")
}

/// The recursive construction of the random access code index matrix: blocks
/// of `m^{n-1}` rows per leading symbol, an all-ones indicator column for the
/// first question, and a copy of the `(m, n-1)` matrix for the rest.
///
/// Serves as the independent oracle for the direct elementwise definition.
pub fn inductive_rac_matrix(m: usize, n: usize) -> RealMatrix {
    if n == 1 {
        return RealMatrix::identity(m);
    }
    let sub = inductive_rac_matrix(m, n - 1);
    let block_rows = sub.rows();
    RealMatrix::from_fn(block_rows * m, m * n, |row, col| {
        let leading = row / block_rows;
        if col < m {
            if col == leading {
                1.0
            } else {
                0.0
            }
        } else {
            sub.get(row % block_rows, col - m)
        }
    })
}
