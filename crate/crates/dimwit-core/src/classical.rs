//! Deterministic strategies and the classical polytope.
//!
//! With messages of dimension `d`, a deterministic strategy is a coding
//! function `f: X → [d]` together with a decoding function `g: [d] × Y → B`;
//! the behaviours they generate are the vertices of the classical set, so a
//! linear witness attains its classical maximum on one of them. The
//! brute-force maximizer below enumerates coding functions only: once `f` is
//! fixed, the objective decouples over `(m, y)` and the optimal decoder is
//! found greedily, which shrinks the search from `d^|X| · |B|^{d|Y|}` to
//! `d^|X|` candidates.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::behaviour::{Behaviour, Scenario, Witness};
use crate::error::{Error, Result};
use crate::linalg::RealMatrix;

/// A coding/decoding pair generating one vertex of the classical polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterministicStrategy {
    d: usize,
    coding: Vec<usize>,
    decoding: Vec<Vec<usize>>,
}

impl DeterministicStrategy {
    /// Builds a strategy from `f` (one message per preparation input) and `g`
    /// (one output per message and measurement input, `decoding[m][y]`).
    pub fn new(d: usize, coding: Vec<usize>, decoding: Vec<Vec<usize>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain(alloc::string::String::from(
                "message dimension must be at least 1",
            )));
        }
        if let Some(&bad) = coding.iter().find(|&&m| m >= d) {
            return Err(Error::Validation(format!(
                "coding value {bad} out of range for d = {d}"
            )));
        }
        if decoding.len() != d {
            return Err(Error::Validation(format!(
                "decoding has {} rows, expected d = {d}",
                decoding.len()
            )));
        }
        let ny = decoding.first().map_or(0, Vec::len);
        if decoding.iter().any(|row| row.len() != ny) {
            return Err(Error::Validation(alloc::string::String::from(
                "decoding rows have inconsistent lengths",
            )));
        }
        Ok(Self {
            d,
            coding,
            decoding,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The coding function as a table over `X`.
    pub fn coding(&self) -> &[usize] {
        &self.coding
    }

    /// The decoding table, `decoding()[m][y]`.
    pub fn decoding(&self) -> &[Vec<usize>] {
        &self.decoding
    }

    /// The message sent on input `x`.
    #[inline]
    pub fn message(&self, x: usize) -> usize {
        self.coding[x]
    }

    /// The output produced on message `m` and input `y`.
    #[inline]
    pub fn output(&self, m: usize, y: usize) -> usize {
        self.decoding[m][y]
    }

    /// The vertex behaviour `P(b|xy) = 1` iff `b = g(f(x), y)`.
    pub fn behaviour(&self, scenario: Scenario) -> Result<Behaviour> {
        if self.coding.len() != scenario.nx() {
            return Err(Error::Validation(format!(
                "coding covers {} inputs, scenario has |X| = {}",
                self.coding.len(),
                scenario.nx()
            )));
        }
        if self.decoding.first().map_or(0, Vec::len) != scenario.ny() {
            return Err(Error::Validation(format!(
                "decoding covers {} measurement inputs, scenario has |Y| = {}",
                self.decoding.first().map_or(0, Vec::len),
                scenario.ny()
            )));
        }
        if let Some(&bad) = self
            .decoding
            .iter()
            .flatten()
            .find(|&&b| b >= scenario.nb())
        {
            return Err(Error::Validation(format!(
                "decoding output {bad} out of range for |B| = {}",
                scenario.nb()
            )));
        }
        let matrix = RealMatrix::from_fn(scenario.nx(), scenario.ny() * scenario.nb(), |x, col| {
            let y = col / scenario.nb();
            let b = col % scenario.nb();
            if self.output(self.message(x), y) == b {
                1.0
            } else {
                0.0
            }
        });
        Behaviour::new(scenario, matrix)
    }
}

fn checked_power(base: usize, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

/// Number of deterministic strategies, `d^|X| · |B|^{d|Y|}`, or `None` on
/// overflow.
pub fn vertex_count(scenario: Scenario, d: usize) -> Option<u128> {
    let codings = checked_power(d, scenario.nx())?;
    let decodings = checked_power(scenario.nb(), d * scenario.ny())?;
    codings.checked_mul(decodings)
}

/// Enumerates every deterministic strategy exactly once, in lexicographic
/// order of the concatenated `(f, g)` tables.
///
/// Refuses to start when the total count exceeds `cap`.
pub fn enumerate_vertices(scenario: Scenario, d: usize, cap: u64) -> Result<VertexIter> {
    if d == 0 {
        return Err(Error::Domain(alloc::string::String::from(
            "message dimension must be at least 1",
        )));
    }
    let required = vertex_count(scenario, d).unwrap_or(u128::MAX);
    if required > cap as u128 {
        return Err(Error::SizeExceeded {
            required,
            cap: cap as u128,
        });
    }
    Ok(VertexIter {
        scenario,
        d,
        coding: vec![0; scenario.nx()],
        decoding: vec![0; d * scenario.ny()],
        done: false,
    })
}

/// Iterator over the vertices of the classical polytope; see
/// [`enumerate_vertices`].
#[derive(Debug)]
pub struct VertexIter {
    scenario: Scenario,
    d: usize,
    coding: Vec<usize>,
    decoding: Vec<usize>,
    done: bool,
}

impl Iterator for VertexIter {
    type Item = DeterministicStrategy;

    fn next(&mut self) -> Option<DeterministicStrategy> {
        if self.done {
            return None;
        }
        let ny = self.scenario.ny();
        let decoding: Vec<Vec<usize>> = (0..self.d)
            .map(|m| self.decoding[m * ny..(m + 1) * ny].to_vec())
            .collect();
        let strategy = DeterministicStrategy {
            d: self.d,
            coding: self.coding.clone(),
            decoding,
        };
        // odometer: rightmost digit of (f, g) advances fastest
        if !advance(&mut self.decoding, self.scenario.nb()) && !advance(&mut self.coding, self.d) {
            self.done = true;
        }
        Some(strategy)
    }
}

/// Increments a big-endian digit string in the given base; returns false once
/// it wraps around to all zeros.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for digit in digits.iter_mut().rev() {
        *digit += 1;
        if *digit < base {
            return true;
        }
        *digit = 0;
    }
    false
}

/// Maximizes `⟨P, G⟩` over all deterministic strategies with messages of
/// dimension `d`.
///
/// For each coding function the optimal decoder is computed greedily per
/// `(m, y)` — exact, because the objective separates once `f` is fixed — with
/// ties broken toward the smallest output. Among maximizing strategies the
/// lexicographically smallest coding function is returned. Refuses to start
/// when `d^|X|` exceeds `cap`.
pub fn classical_witness_max(
    witness: &Witness,
    d: usize,
    cap: u64,
) -> Result<(f64, DeterministicStrategy)> {
    if d == 0 {
        return Err(Error::Domain(alloc::string::String::from(
            "message dimension must be at least 1",
        )));
    }
    let scenario = witness.scenario();
    let (nx, ny, nb) = (scenario.nx(), scenario.ny(), scenario.nb());
    let required = checked_power(d, nx).unwrap_or(u128::MAX);
    if required > cap as u128 {
        return Err(Error::SizeExceeded {
            required,
            cap: cap as u128,
        });
    }

    let g = witness.matrix();
    let mut coding = vec![0usize; nx];
    let mut class_sums = vec![0.0f64; d * ny * nb];
    let mut best: Option<(f64, DeterministicStrategy)> = None;

    loop {
        class_sums.iter_mut().for_each(|s| *s = 0.0);
        for (x, &m) in coding.iter().enumerate() {
            for col in 0..ny * nb {
                class_sums[m * ny * nb + col] += g.get(x, col);
            }
        }
        let mut value = 0.0;
        let mut decoding = vec![vec![0usize; ny]; d];
        for m in 0..d {
            for y in 0..ny {
                let mut best_b = 0;
                let mut best_s = class_sums[m * ny * nb + y * nb];
                for b in 1..nb {
                    let s = class_sums[m * ny * nb + y * nb + b];
                    if s > best_s {
                        best_s = s;
                        best_b = b;
                    }
                }
                decoding[m][y] = best_b;
                value += best_s;
            }
        }
        let improved = match &best {
            Some((best_value, _)) => value > *best_value,
            None => true,
        };
        if improved {
            best = Some((
                value,
                DeterministicStrategy {
                    d,
                    coding: coding.clone(),
                    decoding,
                },
            ));
        }
        if !advance(&mut coding, d) {
            break;
        }
    }
    Ok(best.expect("at least one coding function"))
}

/// The block-structured vertex attaining the trace-norm bound.
///
/// On the scenario `(|X|, |Y|, |B|) = (dn, m, d)` the behaviour answers with
/// the row-block index `⌊x/n⌋` regardless of `y`; its matrix is `d`
/// orthogonal rank-one blocks, each of norm `√(nm)`, so `‖P‖₁ = d√(nm)` and
/// the dimension bound returns exactly `d`.
pub fn extremal_block_behaviour(d: usize, n: usize, m: usize) -> Result<Behaviour> {
    let scenario = Scenario::new(d * n, m, d)?;
    let matrix = RealMatrix::from_fn(scenario.nx(), scenario.ny() * scenario.nb(), |x, col| {
        let b = col % d;
        if b == x / n {
            1.0
        } else {
            0.0
        }
    });
    Behaviour::new(scenario, matrix)
}
