mod common;

use common::{rng, swap_qubits};
use qcorr::correlations::*;
use qcorr::model::{
    bell_initial_state, milburn_evolve, thermal_state, DecoherenceParams, ModelParams, ThermalPoint,
};
use qcorr::qmat::{Mat2, Mat4, TwoQubitState};
use rand::Rng;

/// Dense 1024 × 2048 grid minimum for the J = (0.2, 0.4, 0.8), D_z = 1,
/// T = 1 Gibbs state, computed once with `common::dense_grid_min`.
const THERMAL_FIG1_DZ1_T1_DENSE_MIN: f64 = 0.691350284219198;

fn model_states() -> Vec<TwoQubitState> {
    let mut r = rng(44);
    let mut out = Vec::new();
    for _ in 0..40 {
        let p = ModelParams::new(r.gen_range(-1.5..1.5), r.gen_range(-1.5..1.5), r.gen_range(-1.5..1.5), r.gen_range(-3.0..3.0)).unwrap();
        out.push(thermal_state(&ThermalPoint::new(p, r.gen_range(0.05..2.0)).unwrap()).unwrap());
        let dp = DecoherenceParams::new(p, r.gen_range(0.0..0.3), r.gen_range(0.0..30.0)).unwrap();
        out.push(milburn_evolve(&dp, &bell_initial_state()).unwrap());
    }
    out
}

#[test]
fn werner_concurrence() {
    let w = common::bell_diagonal([0.125, 0.125, 0.625, 0.125]);
    assert!((concurrence(&w.state).unwrap() - 0.25).abs() <= 1e-10);
    assert!((concurrence_x_state(&w.state).unwrap() - 0.25).abs() <= 1e-12);
}

#[test]
fn x_fast_path_matches_general_route() {
    let mut r = rng(1);
    for _ in 0..1000 {
        let s = common::random_x_state(&mut r);
        let a = concurrence(&s).unwrap();
        let b = concurrence_x_state(&s).unwrap();
        assert!((a - b).abs() <= 1e-10, "{a} vs {b}");
    }
}

#[test]
fn concurrence_local_unitary_invariance() {
    let mut r = rng(2);
    for _ in 0..300 {
        let s = common::random_state(&mut r);
        let u: Mat2 = common::random_unitary(&mut r);
        let v: Mat2 = common::random_unitary(&mut r);
        let rotated = TwoQubitState::from_unnormalized(s.matrix().conjugate_by(&u.kron(&v))).unwrap();
        let a = concurrence(&s).unwrap();
        let b = concurrence(&rotated).unwrap();
        assert!((a - b).abs() <= 1e-9);
        assert!((0.0..=1.0).contains(&a));
    }
}

#[test]
fn nonnegativity_on_random_states() {
    let mut r = rng(3);
    for _ in 0..1000 {
        let s = common::random_state(&mut r);
        let rep = correlation_report(&s).unwrap();
        assert!(rep.quantum_discord >= -1e-9, "{rep:?}");
        assert!(rep.classical_correlation >= -1e-9, "{rep:?}");
        assert!(rep.mutual_information >= -1e-9, "{rep:?}");
        assert!(rep.concurrence >= 0.0);
    }
}

#[test]
fn additivity_when_marginals_agree() {
    for s in model_states() {
        let rep = correlation_report(&s).unwrap();
        let gap = rep.quantum_discord + rep.classical_correlation - rep.mutual_information;
        assert!(gap.abs() <= 1e-9, "{rep:?}");
    }
}

#[test]
fn measured_subsystem_is_irrelevant_for_model_states() {
    for s in model_states().into_iter().take(30) {
        let a = minimize_conditional_entropy(&s).value;
        let b = minimize_conditional_entropy(&swap_qubits(&s)).value;
        assert!((a - b).abs() <= 1e-8, "{a} vs {b}");
    }
}

#[test]
fn minimizer_dominates_random_bases() {
    let mut r = rng(4);
    for k in 0..60 {
        let s = if k % 2 == 0 { common::random_state(&mut r) } else { model_states()[k] };
        let min = minimize_conditional_entropy(&s);
        for _ in 0..100 {
            let b = MeasurementBasis::new(r.gen_range(0.0..std::f64::consts::FRAC_PI_2), r.gen_range(0.0..std::f64::consts::TAU)).unwrap();
            assert!(min.value <= conditional_entropy(&s, &b) + 1e-9);
        }
    }
}

#[test]
fn bell_diagonal_discord_matches_closed_form() {
    let mut r = rng(5);
    for _ in 0..200 {
        let bd = common::random_bell_diagonal(&mut r);
        let (mi, qd) = common::bell_diagonal_discord(&bd.weights);
        let rep = correlation_report(&bd.state).unwrap();
        assert!((rep.mutual_information - mi).abs() <= 1e-9);
        assert!((rep.quantum_discord - qd).abs() <= 1e-6, "{} vs {qd}", rep.quantum_discord);
    }
}

#[test]
fn werner_discord() {
    let w = common::bell_diagonal([0.125, 0.125, 0.625, 0.125]);
    let (_, qd) = common::bell_diagonal_discord(&w.weights);
    assert!((quantum_discord(&w.state).unwrap() - qd).abs() <= 1e-6);
}

#[test]
fn thermal_minimum_matches_frozen_dense_grid() {
    let p = ModelParams::new(0.2, 0.4, 0.8, 1.0).unwrap();
    let rho = thermal_state(&ThermalPoint::new(p, 1.0).unwrap()).unwrap();
    let v = minimize_conditional_entropy(&rho).value;
    assert!((v - THERMAL_FIG1_DZ1_T1_DENSE_MIN).abs() <= 1e-5);
    assert!(v <= THERMAL_FIG1_DZ1_T1_DENSE_MIN + 1e-9);
}

#[test]
fn classical_correlation_bounds() {
    let mut r = rng(6);
    for _ in 0..100 {
        let s = common::random_state(&mut r);
        let s_a = qcorr::qmat::von_neumann_entropy(&s.partial_trace(qcorr::qmat::Subsystem::A)).unwrap();
        let cc = classical_correlation(&s).unwrap();
        assert!(cc >= -1e-9 && cc <= s_a + 1e-9);
    }
    let mm = TwoQubitState::new(Mat4::identity().scale_re(0.25)).unwrap();
    assert!(classical_correlation(&mm).unwrap().abs() < 1e-12);
}
