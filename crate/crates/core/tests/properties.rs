use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use serde::Deserialize;

use symcov::collective::{collective_moments, pairwise_analysis, CollectiveState};
use symcov::covariance::{c_matrix, lemma_quadratic_form, swap_invariant_c, DEFAULT_TOLERANCE};
use symcov::cv::{apply_local_symplectic, cv_invariants, random_local_symplectic, random_physical_covariance};
use symcov::invariants::{classify_case, local_invariants, Case};
use symcov::linalg::{eig_hermitian, eig_real_symmetric, min_eigenvalue, HermitianMatrix, RealSymMatrix, Spectral};
use symcov::oracle::{
    ppt_oracle, random_collective_state, random_separable_symmetric, random_symmetric_mixed, random_symmetric_pure,
    sample_rng,
};
use symcov::qstate::{pauli_compose, pauli_decompose, separable_symmetric, to_symmetric, SymmetricParams, SYMMETRY_TOLERANCE};
use symcov::{Mat3, Vec3, C64};

fn symmetric(n: usize, entries: &[f64]) -> DMatrix<f64> {
    let m = DMatrix::from_fn(n, n, |r, c| entries[r * n + c]);
    (&m + m.transpose()) * 0.5
}

proptest! {
    #[test]
    fn jacobi_matches_nalgebra(n in 1usize..7, entries in prop::collection::vec(-10.0f64..10.0, 36)) {
        let m = symmetric(n, &entries);
        let ours = eig_real_symmetric(&RealSymMatrix::new(m.clone()).unwrap()).unwrap();
        let mut theirs: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        let scale = m.norm().max(1.0);
        for (a, b) in ours.values.iter().zip(&theirs) {
            prop_assert!((a - b).abs() <= 1e-12 * scale, "{} vs {}", a, b);
        }
        prop_assert!(ours.residual(&RealSymMatrix::new(m).unwrap()) <= 1e-12 * scale);
    }

    #[test]
    fn hermitian_eigenpairs(n in 1usize..6, re in prop::collection::vec(-1.0f64..1.0, 25), im in prop::collection::vec(-1.0f64..1.0, 25)) {
        let raw = DMatrix::from_fn(n, n, |r, c| C64::new(re[r * n + c], im[r * n + c]));
        let h = HermitianMatrix::new((&raw + raw.adjoint()) * C64::new(0.5, 0.0)).unwrap();
        let e = eig_hermitian(&h).unwrap();
        prop_assert!(e.residual(&h) <= 1e-11);
        let gram = e.vectors.adjoint() * &e.vectors - DMatrix::identity(n, n);
        prop_assert!(gram.iter().all(|z| z.norm() <= 1e-11));
        prop_assert!((e.values.iter().sum::<f64>() - h.trace()).abs() <= 1e-11);
    }

    #[test]
    fn pauli_round_trip(seed in any::<u64>(), rank in 1usize..4) {
        let rho = random_symmetric_mixed(&mut sample_rng(seed, 0), rank).unwrap();
        let bloch = pauli_decompose(&rho).unwrap();
        let back = pauli_compose(&bloch).unwrap();
        prop_assert!((back.rho().matrix() - rho.rho().matrix()).norm() <= 1e-12);
        let p = to_symmetric(&bloch, SYMMETRY_TOLERANCE).unwrap();
        prop_assert!((p.t().trace() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn separable_mixtures_have_psd_c(seed in any::<u64>(), terms in 1usize..8) {
        let mut rng = sample_rng(seed, 0);
        let m = random_separable_symmetric(&mut rng, terms).unwrap();
        let rho = separable_symmetric(&m);
        let c = swap_invariant_c(&pauli_decompose(&rho).unwrap(), SYMMETRY_TOLERANCE).unwrap();
        prop_assert!(min_eigenvalue(&c).unwrap() >= -1e-10);
        prop_assert!(!ppt_oracle(&rho, DEFAULT_TOLERANCE).unwrap().is_entangled());
        let n = Vec3::new(0.3, -0.4, 0.5).normalize();
        prop_assert!(lemma_quadratic_form(&m, &n).unwrap() >= -1e-12);
    }

    #[test]
    fn pure_states_are_case_iii_or_product(seed in any::<u64>()) {
        let rho = random_symmetric_pure(&mut sample_rng(seed, 0));
        let p = to_symmetric(&pauli_decompose(&rho).unwrap(), SYMMETRY_TOLERANCE).unwrap();
        let label = classify_case(&c_matrix(&p), DEFAULT_TOLERANCE).unwrap();
        prop_assert!(matches!(label.label, Case::CaseIII | Case::NotEntangled));
    }

    #[test]
    fn collective_casimir(seed in any::<u64>(), n in 2usize..20) {
        let st = random_collective_state(&mut sample_rng(seed, 0), n).unwrap();
        let m = collective_moments(&st).unwrap();
        prop_assert!((m.vn.trace() + m.s.norm_squared() - m.casimir()).abs() <= 1e-10);
        prop_assert!(pairwise_analysis(&st, DEFAULT_TOLERANCE).unwrap().residual <= 1e-9);
    }

    #[test]
    fn cv_invariants_are_local(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let v = random_physical_covariance(&mut rng);
        let w = apply_local_symplectic(&v, &random_local_symplectic(&mut rng, 1.0), &random_local_symplectic(&mut rng, 1.0)).unwrap();
        let (a, b) = (cv_invariants(&v), cv_invariants(&w));
        for (x, y) in [(a.i1, b.i1), (a.i2, b.i2), (a.i3, b.i3), (a.i4, b.i4)] {
            prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
        }
    }
}

#[test]
fn dicke_n_limit() {
    assert!(CollectiveState::dicke(64, 32).is_ok());
    assert!(CollectiveState::dicke(65, 32).is_err());
}

#[derive(Deserialize)]
struct Exemplar {
    s: [f64; 3],
    t: [[f64; 3]; 3],
    c_eigenvalues: [f64; 3],
}

#[derive(Deserialize)]
struct Fixtures {
    case_i: Vec<Exemplar>,
    case_ii: Vec<Exemplar>,
    case_iii: Vec<Exemplar>,
}

#[test]
fn case_exemplar_fixtures() {
    let fx: Fixtures = serde_json::from_str(include_str!("fixtures/case_exemplars.json")).unwrap();
    for (case, list) in [(Case::CaseI, &fx.case_i), (Case::CaseII, &fx.case_ii), (Case::CaseIII, &fx.case_iii)] {
        for ex in list {
            let t = Mat3::from_fn(|r, c| ex.t[r][c]);
            let p = SymmetricParams::new(Vec3::from(ex.s), t).unwrap();
            assert!(p.density().is_ok());
            let c = c_matrix(&p);
            let label = classify_case(&c, DEFAULT_TOLERANCE).unwrap();
            assert_eq!(label.label, case);
            for (a, b) in label.eigenvalues.iter().zip(ex.c_eigenvalues) {
                assert!((a - b).abs() < 1e-12);
            }
            assert!(label.implication_holds(&local_invariants(&c).unwrap()));
        }
    }
}

#[test]
fn eigen_solver_agrees_on_c_matrices() {
    for i in 0..200 {
        let rho = random_symmetric_mixed(&mut sample_rng(5, i), 1 + (i as usize % 3)).unwrap();
        let c = c_matrix(&to_symmetric(&pauli_decompose(&rho).unwrap(), SYMMETRY_TOLERANCE).unwrap());
        let ours = c.eigenvalues().unwrap();
        let mut theirs: Vec<f64> = SymmetricEigen::new(c.matrix().clone()).eigenvalues.iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        for (a, b) in ours.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-13);
        }
    }
}
