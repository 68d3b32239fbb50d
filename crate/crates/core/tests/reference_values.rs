//! Frozen reference values and limiting cases.

use std::f64::consts::FRAC_PI_4;

use dirac_osc_core::algebra::{build_full_hamiltonian, BasisLabel, Proj};
use dirac_osc_core::dynamics::{
    dirac_oscillator_state, entanglement_trajectory, prepare_initial, EnergyBranch, Propagator,
};
use dirac_osc_core::sectors::{block_1d, block_3d, block_3d_base, block_symm, block_triplet, BaseBranch};
use dirac_osc_core::spectra::{
    eigenvalues_alpha0, eigenvalues_gauge, eigenvalues_massless, eigenvectors_alpha0, eigenvectors_gauge,
    jacobi_eigen, jacobi_eigensolver, EigenSystem,
};
use dirac_osc_core::{Dimension, Error, HalfInt, ModelParams};
use nalgebra::DMatrix;

fn one_d(m: f64, a: f64, b: f64, alpha: f64, gamma: f64) -> ModelParams {
    ModelParams::new(Dimension::One).with_mass(m).with_couplings(a, b).with_alpha(alpha).with_gamma(gamma)
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn jacobi_trivial_inputs() {
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![3.0, -1.0, 2.0, 0.5]));
    let eig = jacobi_eigen(&d).unwrap();
    assert_eq!(eig.values, vec![-1.0, 0.5, 2.0, 3.0]);
    let x = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
    let eig = jacobi_eigen(&x).unwrap();
    assert!(close(&eig.values, &[-1.0, 1.0], 1e-15));
    let v = eig.vectors.unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!((v[(0, 1)] - h).abs() < 1e-15 && (v[(1, 1)] - h).abs() < 1e-15);
    assert!((v[(0, 0)].abs() - h).abs() < 1e-15 && (v[(0, 0)] + v[(1, 0)]).abs() < 1e-15);
}

#[test]
fn static_free_block() {
    let p = one_d(1.0, 0.0, 1.0, 0.0, 0.0);
    let vals = jacobi_eigensolver(&block_1d(0, &p).unwrap()).unwrap().values;
    let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
    assert!(close(&vals, &[-r3, -r2, r2, r3], 1e-14));
    let closed = eigenvalues_alpha0(0, &p).unwrap();
    assert!(close(&closed.values, &vals, 1e-14));
}

#[test]
fn gauge_limits() {
    for n in 0..6 {
        let m = 1.7;
        let free = eigenvalues_gauge(n, &one_d(m, 0.0, 1.0, 0.0, 0.0)).unwrap().values;
        let nf = n as f64;
        let (lo, hi) = ((m * m + nf + 1.0).sqrt(), (m * m + nf + 2.0).sqrt());
        assert!(close(&free, &[-hi, -lo, lo, hi], 1e-12));

        let p = one_d(1.3, 0.0, 1.0, 0.0, 0.8);
        let a = eigenvalues_gauge(n, &p).unwrap().values;
        assert!(close(&a, &eigenvalues_alpha0(n, &p).unwrap().values, 1e-8));

        let p = one_d(0.0, 0.0, 1.0, 1.4, 0.0);
        let g = eigenvalues_gauge(n, &p).unwrap().values;
        assert!(close(&g, &eigenvalues_massless(n, &p).unwrap().values, 1e-8));
        assert!(g.iter().sum::<f64>().abs() < 1e-12);
    }
}

#[test]
fn heavy_mass_gauge_point() {
    let p = one_d(3.2, 0.0, 1.0, 1.2, 3.2);
    let closed = eigenvalues_gauge(0, &p).unwrap();
    let numeric = jacobi_eigensolver(&block_1d(0, &p).unwrap()).unwrap();
    assert!(close(&closed.values, &numeric.values, 1e-8));
    assert_eq!(closed.branch_map.as_ref().unwrap().len(), 4);
}

#[test]
fn symmetric_case_from_gauge_closed_form() {
    for n in 0..=50 {
        let g = 0.1 * n as f64;
        let symm = jacobi_eigensolver(&block_symm(n, g).unwrap()).unwrap().values;
        let p = one_d(g, 0.0, 1.0, 1.0, g);
        let closed = match eigenvalues_gauge(n, &p) {
            Ok(e) => e.values,
            // biquadratic at g = 0, where the massless form applies
            Err(Error::DegenerateRadical(_)) if g == 0.0 => eigenvalues_massless(n, &p).unwrap().values,
            Err(e) => panic!("{e}"),
        };
        assert!(close(&symm, &closed, 1e-8), "n = {n}");
    }
}

#[test]
fn symm_reference_block() {
    let b = block_symm(0, 1.0).unwrap();
    let r2 = 2f64.sqrt();
    let expect = DMatrix::from_row_slice(3, 3, &[2.0, r2, 0.0, r2, 0.0, 2.0, 0.0, 2.0, -2.0]);
    assert_eq!(b.entries().view((1, 1), (3, 3)).clone_owned(), expect);
    assert!(b.entries().row(0).iter().all(|&x| x == 0.0));
}

#[test]
fn gauge_vectors_agree_with_jacobi() {
    let p = one_d(2.1, 0.0, 1.0, 0.9, 1.4);
    for n in 0..10 {
        let eig = eigenvalues_gauge(n, &p).unwrap();
        let vecs = eigenvectors_gauge(n, &p, &eig).unwrap();
        let numeric = jacobi_eigensolver(&block_1d(n, &p).unwrap()).unwrap();
        let nv = numeric.vectors.unwrap();
        for (i, &pos) in eig.branch_map.as_ref().unwrap().iter().enumerate() {
            let dot = vecs.vectors.column(i).dot(&nv.column(pos)).abs();
            assert!((dot - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn gauge_vectors_without_ladder_field() {
    let p = one_d(1.2, 0.0, 1.0, 0.0, 0.7);
    let eig = eigenvalues_gauge(3, &p).unwrap();
    let vecs = eigenvectors_gauge(3, &p, &eig).unwrap();
    let h = block_1d(3, &p).unwrap();
    for (i, e) in eig.branches().iter().enumerate() {
        let v = vecs.vectors.column(i);
        if !vecs.fallback[i] {
            assert_eq!(v[0], 0.0);
        }
        assert!((h.entries() * v - v * *e).norm() < 1e-10);
    }
}

#[test]
fn alpha0_pairs_and_sparsity() {
    let gamma = 0.9;
    let p = one_d(1.1, 0.0, 1.0, 0.0, gamma);
    let e = eigenvalues_alpha0(2, &p).unwrap().branches();
    assert!((e[0] + e[1] + 2.0 * gamma).abs() < 1e-14);
    assert!((e[2] + e[3] - 2.0 * gamma).abs() < 1e-14);
    let v = eigenvectors_alpha0(2, &p).unwrap();
    for i in 0..2 {
        assert_eq!((v[(1, i)], v[(3, i)]), (0.0, 0.0));
        assert_eq!((v[(0, i + 2)], v[(2, i + 2)]), (0.0, 0.0));
    }
}

#[test]
fn massless_reference_point() {
    let e = eigenvalues_massless(0, &one_d(0.0, 0.0, 1.0, 1.0, 0.0)).unwrap().values;
    let r6 = 6f64.sqrt();
    assert!(close(&e, &[-r6, 0.0, 0.0, r6], 1e-12));
    let h = DMatrix::from_row_slice(
        4,
        4,
        &[0.0, 2f64.sqrt(), 2f64.sqrt(), 0.0, 2f64.sqrt(), 0.0, 0.0, 1.0, 2f64.sqrt(), 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0],
    );
    assert!(close(&jacobi_eigen(&h).unwrap().values, &e, 1e-12));
    assert_eq!(block_1d(0, &one_d(0.0, 0.0, 1.0, 1.0, 0.0)).unwrap().entries(), &h);
}

#[test]
fn triplet_without_field() {
    let m = 2.3;
    let vals = jacobi_eigensolver(&block_triplet(&one_d(m, 0.0, 0.0, 0.5, 0.0)).unwrap()).unwrap().values;
    let r = (m * m + 1.0).sqrt();
    assert!(close(&vals, &[-r, -m, r], 1e-13));
}

#[test]
fn base_oscillator_energies() {
    let m = 0.9;
    let p = ModelParams::new(Dimension::Three).with_mass(m);
    for n in 0..=20 {
        for tj in [1, 3, 5] {
            let j = HalfInt::from_twice(tj);
            for (branch, e2) in [(BaseBranch::Lower, 2.0 * n as f64), (BaseBranch::Upper, 2.0 * (n as f64 + j.value()))] {
                let vals = jacobi_eigensolver(&block_3d_base(n, j, branch, &p).unwrap()).unwrap().values;
                for v in vals {
                    assert!((v * v - m * m - e2).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn printed_spatial_entry() {
    let p = ModelParams::new(Dimension::Three).with_mass(1.0).with_couplings(0.8, 0.3).with_alpha(1.0).with_gamma(0.2);
    let b = block_3d(2, HalfInt::from_twice(3), &p).unwrap();
    assert!((b.entries()[(0, 1)] - 0.5 * (2.0f64 * 3.5).sqrt()).abs() < 1e-15);
}

#[test]
fn oscillator_eigenstates() {
    let p = ModelParams::new(Dimension::One).with_mass(0.0);
    for n in 0..5u32 {
        let s = dirac_oscillator_state(n, &p, EnergyBranch::Positive).unwrap();
        assert!((s.energy - f64::from(n + 1).sqrt()).abs() < 1e-13);
        assert!((s.amp_up - s.amp_down).abs() < 1e-13);
    }
    let heavy = dirac_oscillator_state(0, &ModelParams::new(Dimension::One).with_mass(1e4), EnergyBranch::Positive).unwrap();
    assert!(heavy.amp_up > 0.999_999 && (heavy.energy - 1e4).abs() < 1e-3);

    // residual against the field-free Hamiltonian on the full space
    let p = ModelParams::new(Dimension::One).with_mass(1.7);
    let h0 = build_full_hamiltonian(&p, 8).unwrap();
    let s = dirac_oscillator_state(3, &p, EnergyBranch::Negative).unwrap();
    let mut psi = vec![dirac_osc_core::Complex64::new(0.0, 0.0); h0.dim()];
    psi[h0.basis().index_of(&BasisLabel::one_d(3, Proj::Up, Proj::Up)).unwrap()].re = s.amp_up;
    psi[h0.basis().index_of(&BasisLabel::one_d(4, Proj::Down, Proj::Up)).unwrap()].re = s.amp_down;
    let h_psi = h0.apply(&psi).unwrap();
    let res: f64 = h_psi.iter().zip(&psi).map(|(a, b)| (a - b * s.energy).norm_sqr()).sum::<f64>().sqrt();
    assert!(res < 1e-10);
}

#[test]
fn isospin_eigenstate_without_field_stays_pure() {
    let p = one_d(3.2, 0.0, 1.0, 0.0, 0.0);
    let grid: Vec<f64> = (0..50).map(|k| k as f64).collect();
    for point in entanglement_trajectory(1, 0.0, &p, &grid).unwrap() {
        assert!((point.purity - 1.0).abs() < 1e-12);
    }
}

#[test]
fn zero_time_is_identity() {
    let p = one_d(3.2, 0.0, 1.0, 1.2, 2.0);
    let psi = prepare_initial(0, FRAC_PI_4, &p).unwrap();
    let same = Propagator::new(&psi, &p).unwrap().evolve(0.0);
    for (a, b) in same.amplitudes.iter().zip(&psi.amplitudes) {
        assert!((a - b).norm() < 1e-15);
    }
}

#[test]
fn branch_bookkeeping() {
    let e = EigenSystem::from_branches(&[2.0, -1.0, 0.5, -3.0]);
    assert_eq!(e.values, vec![-3.0, -1.0, 0.5, 2.0]);
    assert_eq!(e.branch_map, Some(vec![3, 1, 2, 0]));
    assert_eq!(e.branches(), vec![2.0, -1.0, 0.5, -3.0]);
}
