//! Quantum models: preparations, POVMs, their behaviours and Helstrom
//! discrimination.

use alloc::format;
use alloc::vec::Vec;

use crate::behaviour::{Behaviour, Scenario};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, RANK_TOLERANCE};

/// Tolerance for Hermiticity, positivity, unit trace and POVM completeness of
/// model data.
pub const MODEL_TOLERANCE: f64 = 1e-10;

/// A set of preparations `ρ_x` and, per measurement input `y`, a POVM
/// `{Π_b^y}` acting on a `dim`-dimensional space.
///
/// Construction validates every invariant: states are Hermitian, positive
/// semidefinite and unit trace; POVM elements are Hermitian and positive
/// semidefinite and each measurement sums to the identity — all within
/// [`MODEL_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumModel {
    dim: usize,
    states: Vec<ComplexMatrix>,
    povms: Vec<Vec<ComplexMatrix>>,
}

impl QuantumModel {
    pub fn new(
        dim: usize,
        states: Vec<ComplexMatrix>,
        povms: Vec<Vec<ComplexMatrix>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain(alloc::string::String::from(
                "model dimension must be at least 1",
            )));
        }
        if states.is_empty() || povms.is_empty() {
            return Err(Error::Validation(alloc::string::String::from(
                "a model needs at least one state and one measurement",
            )));
        }
        let nb = povms[0].len();
        if nb == 0 {
            return Err(Error::Validation(alloc::string::String::from(
                "measurements need at least one outcome",
            )));
        }
        for (x, rho) in states.iter().enumerate() {
            check_psd_part(rho, dim, &format!("state {x}"))?;
            let tr = rho.trace();
            if (tr.re - 1.0).abs() > MODEL_TOLERANCE || tr.im.abs() > MODEL_TOLERANCE {
                return Err(Error::Validation(format!(
                    "state {x} has trace {} + {}i, expected 1",
                    tr.re, tr.im
                )));
            }
        }
        for (y, povm) in povms.iter().enumerate() {
            if povm.len() != nb {
                return Err(Error::Validation(format!(
                    "POVM for y={y} has {} outcomes, expected {nb}",
                    povm.len()
                )));
            }
            let mut total = ComplexMatrix::zeros(dim, dim);
            for (b, element) in povm.iter().enumerate() {
                check_psd_part(element, dim, &format!("POVM element (y={y}, b={b})"))?;
                total = total.add(element)?;
            }
            let deviation = total.sub(&ComplexMatrix::identity(dim))?.max_abs();
            if deviation > MODEL_TOLERANCE {
                return Err(Error::Validation(format!(
                    "POVM for y={y} sums to identity only within {deviation:e}"
                )));
            }
        }
        Ok(Self { dim, states, povms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn states(&self) -> &[ComplexMatrix] {
        &self.states
    }

    pub fn povms(&self) -> &[Vec<ComplexMatrix>] {
        &self.povms
    }

    /// The scenario this model generates: `(|X|, |Y|, |B|)` from the number
    /// of states, measurements and outcomes.
    pub fn scenario(&self) -> Result<Scenario> {
        Scenario::new(self.states.len(), self.povms.len(), self.povms[0].len())
    }

    /// The behaviour `P(b|xy) = tr(ρ_x Π_b^y)`.
    ///
    /// Real parts are taken; any imaginary residue beyond [`MODEL_TOLERANCE`]
    /// fails validation (it cannot arise from valid model data).
    pub fn behaviour(&self) -> Result<Behaviour> {
        let scenario = self.scenario()?;
        let mut table = Vec::with_capacity(scenario.nx() * scenario.ny() * scenario.nb());
        for rho in &self.states {
            for povm in &self.povms {
                for element in povm {
                    let p = rho.trace_product(element)?;
                    if p.im.abs() > MODEL_TOLERANCE {
                        return Err(Error::Validation(format!(
                            "tr(ρΠ) has imaginary part {:e}",
                            p.im
                        )));
                    }
                    table.push(p.re);
                }
            }
        }
        Behaviour::from_table(scenario, table)
    }

    /// Dimension of the joint support of all preparations: the rank of
    /// `Σ_x ρ_x` with eigenvalues below `1e-8 · λ_max` treated as zero.
    pub fn support_dimension(&self) -> Result<usize> {
        let mut total = ComplexMatrix::zeros(self.dim, self.dim);
        for rho in &self.states {
            total = total.add(rho)?;
        }
        let eig = total.hermitian_eig()?;
        let lambda_max = eig.eigenvalues().first().copied().unwrap_or(0.0);
        if lambda_max <= 0.0 {
            return Ok(0);
        }
        Ok(eig
            .eigenvalues()
            .iter()
            .filter(|&&l| l > RANK_TOLERANCE * lambda_max)
            .count())
    }
}

fn check_psd_part(m: &ComplexMatrix, dim: usize, what: &str) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::Validation(format!(
            "{what} is {}x{}, expected {dim}x{dim}",
            m.rows(),
            m.cols()
        )));
    }
    let dev = m.hermitian_deviation();
    if dev > MODEL_TOLERANCE {
        return Err(Error::Validation(format!(
            "{what} is not Hermitian (deviation {dev:e})"
        )));
    }
    let eig = m.hermitian_eig()?;
    let min = eig.eigenvalues().last().copied().unwrap_or(0.0);
    if min < -MODEL_TOLERANCE {
        return Err(Error::Validation(format!(
            "{what} is not positive semidefinite (min eigenvalue {min:e})"
        )));
    }
    Ok(())
}

/// The two-outcome measurement `(Π₊, Π₋)` optimally discriminating `rho` from
/// `sigma` under equal priors.
///
/// `Π₊` projects onto the strictly positive eigenspace of `ρ − σ`;
/// eigenvalues within `1e-10` of zero count as zero and their directions land
/// in `Π₋ = 1 − Π₊`, a fixed convention that keeps generated behaviours
/// reproducible. The success probability is `½ + ¼‖ρ − σ‖₁`.
pub fn helstrom_measurement(
    rho: &ComplexMatrix,
    sigma: &ComplexMatrix,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || !rho.is_square() {
        return Err(Error::ShapeMismatch {
            context: "state discrimination",
            expected: (rho.rows(), rho.cols()),
            found: (sigma.rows(), sigma.cols()),
        });
    }
    let n = rho.rows();
    let eig = rho.sub(sigma)?.hermitian_eig()?;
    let mut plus = ComplexMatrix::zeros(n, n);
    for (j, &lambda) in eig.eigenvalues().iter().enumerate() {
        if lambda > MODEL_TOLERANCE {
            let v = eig.eigenvector(j);
            plus = plus.add(&ComplexMatrix::from_fn(n, n, |i, k| v[i] * v[k].conj()))?;
        }
    }
    let minus = ComplexMatrix::identity(n).sub(&plus)?;
    Ok((plus, minus))
}

/// Equal-prior success probability of the Helstrom measurement,
/// `½ + ¼‖ρ − σ‖₁`.
pub fn helstrom_success_probability(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> Result<f64> {
    if rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || !rho.is_square() {
        return Err(Error::ShapeMismatch {
            context: "state discrimination",
            expected: (rho.rows(), rho.cols()),
            found: (sigma.rows(), sigma.cols()),
        });
    }
    let eig = rho.sub(sigma)?.hermitian_eig()?;
    let trace_norm: f64 = eig.eigenvalues().iter().map(|l| l.abs()).sum();
    Ok(0.5 + 0.25 * trace_norm)
}

/// `tr(ρ Π)` as a probability, for tests and callers holding raw parts.
pub fn born_probability(rho: &ComplexMatrix, effect: &ComplexMatrix) -> Result<f64> {
    Ok(rho.trace_product(effect)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Complex64 as C;
    use alloc::vec;

    fn basis_state(dim: usize, k: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(dim, dim, |i, j| {
            C::new(if i == k && j == k { 1.0 } else { 0.0 }, 0.0)
        })
    }

    fn maximally_mixed(dim: usize) -> ComplexMatrix {
        ComplexMatrix::identity(dim).scale(C::new(1.0 / dim as f64, 0.0))
    }

    #[test]
    fn uniform_behaviour_from_trivial_povm() {
        let dim = 2;
        let nb = 2;
        let trivial: Vec<ComplexMatrix> = (0..nb)
            .map(|_| ComplexMatrix::identity(dim).scale(C::new(1.0 / nb as f64, 0.0)))
            .collect();
        let model = QuantumModel::new(
            dim,
            vec![maximally_mixed(dim), maximally_mixed(dim)],
            vec![trivial.clone(), trivial],
        )
        .unwrap();
        let p = model.behaviour().unwrap();
        for x in 0..2 {
            for y in 0..2 {
                for b in 0..2 {
                    assert!((p.prob(x, y, b) - 0.5).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn support_dimension_of_repeated_state() {
        let model = QuantumModel::new(
            3,
            vec![basis_state(3, 0); 4],
            vec![vec![
                basis_state(3, 0),
                ComplexMatrix::identity(3).sub(&basis_state(3, 0)).unwrap(),
            ]],
        )
        .unwrap();
        assert_eq!(model.support_dimension().unwrap(), 1);
    }

    #[test]
    fn support_dimension_of_orthogonal_pair() {
        let model = QuantumModel::new(
            2,
            vec![basis_state(2, 0), basis_state(2, 1)],
            vec![vec![basis_state(2, 0), basis_state(2, 1)]],
        )
        .unwrap();
        assert_eq!(model.support_dimension().unwrap(), 2);
    }

    #[test]
    fn helstrom_of_equal_states_gives_up() {
        let rho = maximally_mixed(2);
        let (plus, minus) = helstrom_measurement(&rho, &rho).unwrap();
        assert!(plus.max_abs() < 1e-12);
        assert!(minus.sub(&ComplexMatrix::identity(2)).unwrap().max_abs() < 1e-12);
        assert!((helstrom_success_probability(&rho, &rho).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn helstrom_separates_orthogonal_states() {
        let rho = basis_state(2, 0);
        let sigma = basis_state(2, 1);
        let (plus, _) = helstrom_measurement(&rho, &sigma).unwrap();
        assert!(plus.sub(&rho).unwrap().max_abs() < 1e-12);
        assert!((helstrom_success_probability(&rho, &sigma).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn helstrom_outputs_form_a_povm() {
        // two non-orthogonal pure states
        let v0 = [C::new(1.0, 0.0), C::new(0.0, 0.0)];
        let v1 = [C::new(0.6, 0.0), C::new(0.8, 0.0)];
        let rho = ComplexMatrix::projector(&v0).unwrap();
        let sigma = ComplexMatrix::projector(&v1).unwrap();
        let (plus, minus) = helstrom_measurement(&rho, &sigma).unwrap();
        let model = QuantumModel::new(2, vec![rho.clone(), sigma.clone()], vec![vec![plus, minus]]);
        assert!(model.is_ok(), "{model:?}");
        // pure-state success is (1 + sqrt(1 - |<v0|v1>|^2)) / 2
        let overlap_sqr = 0.36;
        let expected = 0.5 * (1.0 + libm::sqrt(1.0 - overlap_sqr));
        let got = helstrom_success_probability(&rho, &sigma).unwrap();
        assert!((got - expected).abs() < 1e-10, "{got} vs {expected}");
    }

    #[test]
    fn validation_names_offenders() {
        // trace != 1
        let bad = basis_state(2, 0).scale(C::new(2.0, 0.0));
        let err = QuantumModel::new(
            2,
            vec![bad],
            vec![vec![basis_state(2, 0), basis_state(2, 1)]],
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::Validation(ref m) if m.contains("state 0")),
            "{err}"
        );

        // POVM not complete
        let err = QuantumModel::new(
            2,
            vec![basis_state(2, 0)],
            vec![vec![basis_state(2, 0), basis_state(2, 0)]],
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::Validation(ref m) if m.contains("y=0")),
            "{err}"
        );

        // not PSD
        let indefinite = ComplexMatrix::from_fn(2, 2, |i, j| {
            C::new(if i == j { [1.5, -0.5][i] } else { 0.0 }, 0.0)
        });
        let err = QuantumModel::new(
            2,
            vec![indefinite],
            vec![vec![basis_state(2, 0), basis_state(2, 1)]],
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::Validation(ref m) if m.contains("positive semidefinite")),
            "{err}"
        );
    }
}
