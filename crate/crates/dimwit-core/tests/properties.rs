//! Property and randomized-model invariants.

mod common;

use dimwit_core::linalg::RealMatrix;
use dimwit_core::{classical, qrac, statedisc, svd_witness, Scenario, Witness};
use proptest::prelude::*;

fn matrix_strategy(max_side: usize) -> impl Strategy<Value = RealMatrix> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(-10.0f64..10.0, rows * cols)
            .prop_map(move |data| RealMatrix::new(rows, cols, data).unwrap())
    })
}

fn matrix_pair_strategy(max_side: usize) -> impl Strategy<Value = (RealMatrix, RealMatrix)> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(rows, cols)| {
        let one = prop::collection::vec(-10.0f64..10.0, rows * cols);
        let other = prop::collection::vec(-10.0f64..10.0, rows * cols);
        (one, other).prop_map(move |(a, b)| {
            (
                RealMatrix::new(rows, cols, a).unwrap(),
                RealMatrix::new(rows, cols, b).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn schatten_norms_are_monotone_in_p(m in matrix_strategy(6)) {
        let p1 = m.schatten_norm(1.0).unwrap();
        let p2 = m.schatten_norm(2.0).unwrap();
        let pinf = m.schatten_norm(f64::INFINITY).unwrap();
        prop_assert!(p1 >= p2 - 1e-10);
        prop_assert!(p2 >= pinf - 1e-10);
    }

    #[test]
    fn trace_norm_triangle_inequality((a, b) in matrix_pair_strategy(5)) {
        let sum = a.add(&b).unwrap();
        prop_assert!(
            sum.trace_norm().unwrap()
                <= a.trace_norm().unwrap() + b.trace_norm().unwrap() + 1e-8
        );
    }

    #[test]
    fn holder_inequality((a, b) in matrix_pair_strategy(5)) {
        let inner = a.inner_product(&b).unwrap();
        prop_assert!(inner <= a.operator_norm().unwrap() * b.trace_norm().unwrap() + 1e-8);
    }

    #[test]
    fn svd_reconstructs_and_is_orthonormal(m in matrix_strategy(6)) {
        let svd = m.svd().unwrap();
        let err = svd.reconstruct().sub(&m).unwrap().frobenius_norm();
        prop_assert!(err <= 1e-9 * m.frobenius_norm().max(1.0));
        let k = svd.singular_values().len();
        let u = svd.left_vectors();
        let ugram = u.transpose().mul(u).unwrap();
        prop_assert!(ugram.sub(&RealMatrix::identity(k)).unwrap().max_abs() < 1e-10);
        let v = svd.right_vectors();
        let vgram = v.transpose().mul(v).unwrap();
        prop_assert!(vgram.sub(&RealMatrix::identity(k)).unwrap().max_abs() < 1e-10);
    }

    #[test]
    fn witness_bound_is_monotone_in_dimension(m in matrix_strategy(4)) {
        // reuse the matrix as a witness over (rows, 1, cols)
        let scenario = Scenario::new(m.rows(), 1, m.cols()).unwrap();
        let g = Witness::new(scenario, m).unwrap();
        let mut prev = 0.0;
        for d in 1..=4 {
            let bound = g.bound(d).unwrap();
            prop_assert!(bound >= prev - 1e-12);
            prev = bound;
        }
    }
}

#[test]
fn normalization_directions_score_one_on_random_behaviours() {
    let mut rng = common::rng(11);
    for trial in 0..50 {
        let scenario = Scenario::new(1 + trial % 4, 1 + (trial * 3) % 3, 2 + trial % 3).unwrap();
        let p = common::random_behaviour(&mut rng, scenario);
        for x in 0..scenario.nx() {
            for y in 0..scenario.ny() {
                let total: f64 = (0..scenario.nb()).map(|b| p.prob(x, y, b)).sum();
                assert!((total - 1.0).abs() < 1e-9);
            }
        }
        let report = p.dimension_lower_bound().unwrap();
        assert!(report.dimension_lower_bound >= 1);
        assert!(report.dimension_lower_bound <= scenario.nx());
    }
}

#[test]
fn classical_polytope_respects_the_bound() {
    // every vertex of the d = 2 polytope on (3, 2, 2) stays within dimension 2
    let scenario = Scenario::new(3, 2, 2).unwrap();
    let mut count = 0;
    for strategy in classical::enumerate_vertices(scenario, 2, 1_000_000).unwrap() {
        let p = strategy.behaviour(scenario).unwrap();
        let bound = p.dimension_lower_bound().unwrap().dimension_lower_bound;
        assert!(bound <= 2, "vertex {:?} scored {bound}", strategy.coding());
        count += 1;
    }
    assert_eq!(count, 8 * 16); // 2³ codings · 2⁴ decodings
}

#[test]
fn classical_maximum_is_below_the_quantum_bound() {
    // C_d ⊆ Q_d: the brute-force classical value respects the witness bound
    let mut rng = common::rng(23);
    for trial in 0..30 {
        let scenario = Scenario::new(2 + trial % 3, 1 + trial % 2, 2 + trial % 2).unwrap();
        let raw =
            common::random_real_matrix(&mut rng, scenario.nx(), scenario.ny() * scenario.nb());
        let op = raw.operator_norm().unwrap();
        if op < 1e-9 {
            continue;
        }
        let g = Witness::new(scenario, raw.scale(1.0 / op)).unwrap();
        for d in 1..=2 {
            let (value, _) = classical::classical_witness_max(&g, d, 1_000_000).unwrap();
            assert!(
                value <= g.bound(d).unwrap() + 1e-8,
                "trial {trial}, d={d}: {value} > {}",
                g.bound(d).unwrap()
            );
        }
    }
}

#[test]
fn shifted_bound_dominates_witness_values_for_any_shift() {
    // any choice of shifts along the normalization directions still bounds
    // ⟨P, G⟩ on dimension-d behaviours
    let mut rng = common::rng(29);
    for trial in 0..25 {
        let dim = 2 + trial % 2;
        let scenario = Scenario::new(2 + trial % 3, 1 + trial % 2, 2).unwrap();
        let g = Witness::new(
            scenario,
            common::random_real_matrix(&mut rng, scenario.nx(), scenario.ny() * scenario.nb()),
        )
        .unwrap();
        let alpha: Vec<f64> = (0..scenario.nx() * scenario.ny())
            .map(|_| rand::Rng::random_range(&mut rng, -1.0..1.0))
            .collect();
        let bound = g.shifted_bound(&alpha, dim).unwrap();
        let model = common::random_model(&mut rng, dim, scenario.nx(), scenario.ny(), 2);
        let value = g.evaluate(&model.behaviour().unwrap()).unwrap();
        assert!(
            value <= bound + 1e-8,
            "trial {trial}: ⟨P,G⟩ = {value} > shifted bound {bound}"
        );
    }
}

#[test]
fn quantum_behaviours_respect_the_trace_norm_bound() {
    let mut rng = common::rng(37);
    for trial in 0..60 {
        let dim = 2 + trial % 3;
        let nx = 1 + (trial * 7) % 5;
        let ny = 1 + trial % 3;
        let nb = 2 + trial % 3;
        let model = common::random_model(&mut rng, dim, nx, ny, nb);
        let p = model.behaviour().unwrap();
        let tn = p.matrix().trace_norm().unwrap();
        assert!(
            tn * tn <= (model.support_dimension().unwrap() * nx * ny) as f64 + 1e-6,
            "trial {trial}: ‖P‖₁² = {} too large",
            tn * tn
        );
    }
}

#[test]
fn helstrom_success_matches_the_pure_state_formula() {
    let mut rng = common::rng(41);
    for _ in 0..40 {
        let dim = 2 + rand::Rng::random_range(&mut rng, 0..3);
        let rho = common::random_pure_state(&mut rng, dim);
        let sigma = common::random_pure_state(&mut rng, dim);
        let overlap = rho.trace_product(&sigma).unwrap().re.clamp(0.0, 1.0);
        let expect = 0.5 * (1.0 + (1.0 - overlap).sqrt());
        let got = dimwit_core::helstrom_success_probability(&rho, &sigma).unwrap();
        assert!((got - expect).abs() < 1e-10, "{got} vs {expect}");
        // the two projectors always form a valid measurement
        let (plus, minus) = dimwit_core::helstrom_measurement(&rho, &sigma).unwrap();
        let sum_dev = plus
            .add(&minus)
            .unwrap()
            .sub(&dimwit_core::ComplexMatrix::identity(dim))
            .unwrap()
            .max_abs();
        assert!(sum_dev < 1e-12);
        for effect in [&plus, &minus] {
            let min_eig = effect
                .hermitian_eig()
                .unwrap()
                .eigenvalues()
                .last()
                .copied()
                .unwrap();
            assert!(min_eig > -1e-12);
        }
    }
}

#[test]
fn svd_witness_dominates_unit_norm_witnesses() {
    // among witnesses with operator norm at most one, the SVD witness scores
    // highest on its own behaviour
    let mut rng = common::rng(53);
    let p = statedisc::closed_form_behaviour(4).unwrap();
    let g = svd_witness(&p, 1e-8).unwrap();
    let score = g.evaluate(&p).unwrap();
    let scenario = p.scenario();
    for trial in 0..100 {
        let raw =
            common::random_real_matrix(&mut rng, scenario.nx(), scenario.ny() * scenario.nb());
        let op = raw.operator_norm().unwrap();
        let rival = Witness::new(scenario, raw.scale(1.0 / op)).unwrap();
        let rival_score = rival.evaluate(&p).unwrap();
        assert!(
            rival_score <= score + 1e-9,
            "trial {trial}: rival scored {rival_score} > {score}"
        );
    }
}

#[test]
fn rac_success_respects_the_dimension_bound() {
    let mut rng = common::rng(67);
    for (m, n) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let params = qrac::RacParams::new(m, n).unwrap();
        let scenario = params.scenario().unwrap();
        for d in 2..=3usize {
            for _ in 0..10 {
                let model =
                    common::random_model(&mut rng, d, scenario.nx(), scenario.ny(), scenario.nb());
                let p = model.behaviour().unwrap();
                let success = qrac::average_success(&p, &params).unwrap();
                let bound = qrac::rac_bound(m, n, d).unwrap();
                assert!(
                    success <= bound + 1e-8,
                    "({m},{n}) d={d}: success {success} > bound {bound}"
                );
            }
        }
    }
}

#[test]
fn ratio_series_matches_brute_force_for_small_sizes() {
    for row in statedisc::ratio_series(8).unwrap() {
        let g = statedisc::discrimination_witness(row.n).unwrap();
        let (value, _) = classical::classical_witness_max(&g, 2, 1_000_000).unwrap();
        assert!(
            (value - row.classical).abs() < 1e-9,
            "N={}: formula {} vs brute force {value}",
            row.n,
            row.classical
        );
    }
}
