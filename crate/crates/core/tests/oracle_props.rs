mod common;

use common::{c, rng};
use majorana::sampling::{random_qubit, random_state, random_unitary2};
use majorana::{dicke_expand, oracle_lu_invariants3, three_tangle, wootters_concurrence, DenseState, Qubit};
use num_complex::Complex64 as C64;
use rand::Rng;

fn random_dense<R: Rng>(n: usize, r: &mut R) -> DenseState {
    let amps: Vec<C64> = (0..1 << n)
        .map(|_| c(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)))
        .collect();
    DenseState::new(n, amps).unwrap()
}

#[test]
fn density_matrices_are_states() {
    let mut r = rng(31);
    for n in 1..=6 {
        for _ in 0..10 {
            let rho = random_dense(n, &mut r).density_matrix();
            assert!((rho.trace() - 1.0).norm() < 1e-12);
            assert!(rho.hermiticity_defect() < 1e-14);
            assert!(rho.min_eigenvalue() > -1e-12);
            for q in 1..=n {
                let red = rho.partial_trace(&[q]).unwrap();
                assert!((red.trace() - 1.0).norm() < 1e-12);
                assert!((0.5 - 1e-12..=1.0 + 1e-12).contains(&red.purity()));
            }
        }
    }
}

#[test]
fn symmetric_states_have_equal_reductions() {
    let mut r = rng(32);
    for _ in 0..50 {
        let dense = dicke_expand(&random_state(3, &mut r)).unwrap();
        assert!(dense.is_permutation_symmetric(1e-12));
        let inv = oracle_lu_invariants3(&dense).unwrap();
        assert!((inv.i1 - 1.0).abs() < 1e-12);
        assert!((inv.i2 - inv.i3).abs() < 1e-12);
        assert!((inv.i3 - inv.i4).abs() < 1e-12);
        assert!(dense.to_symmetric(1e-10).is_ok());
    }
}

#[test]
fn dense_invariants_survive_local_unitaries() {
    let mut r = rng(33);
    for _ in 0..100 {
        let psi = random_dense(3, &mut r);
        let ops = [random_unitary2(&mut r), random_unitary2(&mut r), random_unitary2(&mut r)];
        let a = oracle_lu_invariants3(&psi).unwrap();
        let b = oracle_lu_invariants3(&psi.apply_local(&ops).unwrap()).unwrap();
        assert!(a.max_deviation(&b) < 1e-9, "{a:?} vs {b:?}");
        let tr = oracle_lu_invariants3(&psi.time_reversed()).unwrap();
        assert!(a.max_deviation(&tr) < 1e-9);
    }
}

#[test]
fn concurrence_matches_pure_state_determinant() {
    let mut r = rng(34);
    for _ in 0..200 {
        let psi = random_dense(2, &mut r);
        let a = psi.amplitudes();
        let want = 2.0 * (a[0] * a[3] - a[1] * a[2]).norm();
        assert!((wootters_concurrence(&psi).unwrap() - want).abs() < 1e-9);
    }
    let prod = DenseState::product(&[random_qubit(&mut r), random_qubit(&mut r)]).unwrap();
    assert!(wootters_concurrence(&prod).unwrap() < 1e-9);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let bell = DenseState::new(2, vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)]).unwrap();
    assert!((wootters_concurrence(&bell).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn tangle_of_products_and_ghz() {
    let mut r = rng(35);
    for _ in 0..50 {
        let q: Vec<Qubit> = (0..3).map(|_| random_qubit(&mut r)).collect();
        let prod = DenseState::product(&q).unwrap();
        assert!(three_tangle(&prod).unwrap() < 1e-12);
        let tangle = three_tangle(&random_dense(3, &mut r)).unwrap();
        assert!((0.0..=1.0 + 1e-12).contains(&tangle));
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![c(0.0, 0.0); 8];
    amps[0] = c(s, 0.0);
    amps[7] = c(0.0, s);
    assert!((three_tangle(&DenseState::new(3, amps).unwrap()).unwrap() - 1.0).abs() < 1e-12);
}
